"""Base graph family class."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Optional

import structlog

from app.core.exceptions import FamilyParameterError
from app.core.multigraph import Multigraph
from app.core.partition import VertexPartition

logger = structlog.get_logger()


@dataclass(frozen=True)
class GeneratedInstance:
    """A generated graph and, when the construction defines one, its partition."""

    graph: Multigraph
    partition: Optional[VertexPartition] = None


class Family(ABC):
    """Base class for all graph families."""

    def __init__(self, name: str, params: dict[str, Any], silent: bool = False):
        """Initialize the family.

        Args:
            name: Name of the family as used on the command line
            params: Construction parameters
            silent: If True, suppress all logging from this family
        """
        self.name = name
        self.params = dict(params)
        self.logger = logger.bind(family=name)
        self.silent = silent

        if not self.silent:
            self.logger.debug("Family initialized", params=self.params)

    @abstractmethod
    def build(self) -> GeneratedInstance:
        """Build the instance from ``self.params``.

        Raises:
            FamilyParameterError: If the parameters are invalid
        """
        pass

    def describe(self) -> str:
        """One-line description used as the comment of generated files."""
        details = " ".join(f"{key}={value}" for key, value in self.params.items())
        return f"{self.name} {details}".strip()

    def generate(self) -> GeneratedInstance:
        try:
            instance = self.build()
        except FamilyParameterError as e:
            if not self.silent:
                self.logger.warning("Invalid family parameters", error=str(e))
            raise

        if not self.silent:
            self.logger.info(
                "Instance generated",
                orientation=instance.graph.orientation.value,
                vertices=instance.graph.vertex_count,
                total_multiplicity=instance.graph.total_multiplicity,
                classes=len(instance.partition) if instance.partition else None,
            )
        return instance


def require_int(value: Any, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FamilyParameterError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise FamilyParameterError(f"{name} must be at least {minimum}, got {value}")
    return value
