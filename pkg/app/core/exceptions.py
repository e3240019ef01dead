"""Exceptions raised by cutwidth-bounds."""

from typing import Optional


class CutwidthError(Exception):
    """Base class for all library errors."""


class GraphError(CutwidthError, ValueError):
    """Invalid graph, vertex id, multiplicity or orientation."""


class OrderingError(GraphError):
    """An ordering is not a permutation of the vertex set."""


class PartitionError(GraphError):
    """A vertex partition overlaps, leaves gaps or has an empty class."""


class FamilyParameterError(GraphError):
    """Invalid parameters for a graph family generator."""


class ParseError(GraphError):
    """A graph or partition file could not be parsed."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        """Initialize the parse error.

        Args:
            message: What is wrong with the input
            path: File being parsed, if known
            line: 1-based line number of the offending line, if known
        """
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location += f"{path}:"
        if line is not None:
            location += f"line {line}:"
        super().__init__(f"{location} {message}" if location else message)


class BudgetExceededError(CutwidthError):
    """The exact solver refused a graph larger than its vertex budget."""

    def __init__(self, vertex_count: int, budget: int):
        self.vertex_count = vertex_count
        self.budget = budget
        super().__init__(
            f"graph has {vertex_count} vertices, exact solver budget is {budget}; "
            "use an ordering upper bound instead"
        )


class ConsistencyError(CutwidthError):
    """An orientation choice or bound certificate failed its own check."""
