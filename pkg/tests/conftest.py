"""Shared pytest fixtures."""

import logging
import os
import tempfile
from pathlib import Path
from typing import Generator

import pytest
import yaml

from app.core.graph_file import serialize_graph, serialize_partition
from app.core.multigraph import Multigraph, Orientation, from_edge_list
from app.core.partition import VertexPartition
from app.families import gen_lower_G, gen_lower_K

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def temp_config_file() -> Generator[str, None, None]:
    """Create a temporary config file with small trial counts."""
    config = {
        "solver": {"budget": 16},
        "verify": {
            "seed": 3,
            "trials": {"prop1": 5, "thm1": 5, "claim1": 5, "oracle": 5},
            "max_n": {"prop1": 6, "thm1": 6, "claim1": 6, "oracle": 5},
            "max_multiplicity": 8,
        },
        "logging": {"level": "warning", "format": "console"},
    }

    with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
        yaml.dump(config, f)
        config_path = f.name

    yield config_path

    # Cleanup
    os.unlink(config_path)


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Keep user and system config files out of the tests."""
    monkeypatch.delenv("CWB_CONFIG", raising=False)
    monkeypatch.delenv("LOGLEVEL", raising=False)
    monkeypatch.setattr(
        "app.config.DEFAULT_CONFIG_LOCATIONS", [str(tmp_path / "missing.yaml")]
    )
    yield
    # CLI runs bind the root handler to a captured stream that is closed afterwards
    logging.basicConfig(level=logging.WARNING, force=True)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def k23() -> Multigraph:
    """K(2, 3): cutwidth 6."""
    return gen_lower_K(2, 3)


@pytest.fixture
def g23() -> tuple[Multigraph, VertexPartition]:
    """G(2, 3) with its partition {{1}, {5}, {2, 3, 4}}."""
    return gen_lower_G(2, 3)


@pytest.fixture
def path3() -> Multigraph:
    return from_edge_list(Orientation.UNDIRECTED, 3, [(1, 2), (2, 3)])


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph (and optional partition) to a temporary file."""

    def _write(g: Multigraph, p: VertexPartition = None, name: str = "input") -> Path:
        graph_path = tmp_path / f"{name}.graph"
        graph_path.write_text(serialize_graph(g), encoding="ascii")
        if p is not None:
            (tmp_path / f"{name}.partition").write_text(
                serialize_partition(p), encoding="ascii"
            )
        return graph_path

    return _write
