"""Line-oriented text formats for graphs, partitions and orderings.

Graph file::

    # optional comment lines
    undirected          (or: directed)
    4                   (vertex count)
    e 1 3 2             (edge u v, multiplicity optional, default 1)

Partition file: one class per line, space-separated vertex ids.
Ordering file: one line of space-separated vertex ids.
"""

from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Optional, Union

import structlog

from app.core.exceptions import GraphError, ParseError
from app.core.multigraph import Multigraph, Ordering, Orientation, from_edge_list
from app.core.partition import VertexPartition

logger = structlog.get_logger()

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    """Yield (line number, stripped line), skipping blanks and comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_int(token: str, what: str, path: Optional[str], line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", path, line) from None


def parse_graph(text: str, path: Optional[str] = None) -> Multigraph:
    lines = iter(_content_lines(text))
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'directed' or 'undirected' header", path) from None
    try:
        orientation = Orientation(header)
    except ValueError:
        raise ParseError(
            f"header must be 'directed' or 'undirected', got {header!r}", path, number
        ) from None

    try:
        number, count_line = next(lines)
    except StopIteration:
        raise ParseError("missing vertex count line", path) from None
    vertex_count = _parse_int(count_line, "vertex count", path, number)
    if vertex_count < 0:
        raise ParseError(f"vertex count must be non-negative, got {vertex_count}", path, number)

    entries = []
    for number, line in lines:
        fields = line.split()
        if fields[0] != "e" or len(fields) not in (3, 4):
            raise ParseError(f"expected 'e u v [m]', got {line!r}", path, number)
        u = _parse_int(fields[1], "vertex", path, number)
        v = _parse_int(fields[2], "vertex", path, number)
        m = _parse_int(fields[3], "multiplicity", path, number) if len(fields) == 4 else 1
        try:
            # validate each entry on its own so errors point at the right line
            from_edge_list(orientation, vertex_count, [(u, v, m)])
        except GraphError as e:
            raise ParseError(str(e), path, number) from e
        entries.append((u, v, m))

    try:
        return from_edge_list(orientation, vertex_count, entries)
    except GraphError as e:
        raise ParseError(str(e), path) from e


def serialize_graph(g: Multigraph, comments: Sequence[str] = ()) -> str:
    """Canonical text of g; edges in sorted order, multiplicity always written."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(g.orientation.value)
    lines.append(str(g.vertex_count))
    lines.extend(f"e {u} {v} {m}" for u, v, m in g.edges)
    return "\n".join(lines) + "\n"


def parse_partition(text: str, vertex_count: int, path: Optional[str] = None) -> VertexPartition:
    classes = []
    for number, line in _content_lines(text):
        classes.append([_parse_int(token, "vertex", path, number) for token in line.split()])
    return VertexPartition.from_classes(vertex_count, classes)


def serialize_partition(p: VertexPartition) -> str:
    return "".join(" ".join(str(v) for v in members) + "\n" for members in p.classes)


def parse_ordering(text: str, path: Optional[str] = None) -> Ordering:
    ordering: list[int] = []
    for number, line in _content_lines(text):
        ordering.extend(_parse_int(token, "vertex", path, number) for token in line.split())
    return tuple(ordering)


def serialize_ordering(ordering: Sequence[int]) -> str:
    return " ".join(str(v) for v in ordering) + "\n"


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        logger.error("Failed to read input file", path=str(path), error=str(e))
        raise ParseError(f"cannot read file: {e}", str(path)) from e


def _write(path: PathLike, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(text)
    logger.debug("File written", path=str(path), size=len(text))


def read_graph(path: PathLike) -> Multigraph:
    return parse_graph(_read(path), str(path))


def write_graph(path: PathLike, g: Multigraph, comments: Sequence[str] = ()) -> None:
    _write(path, serialize_graph(g, comments))


def read_partition(path: PathLike, vertex_count: int) -> VertexPartition:
    return parse_partition(_read(path), vertex_count, str(path))


def write_partition(path: PathLike, p: VertexPartition) -> None:
    _write(path, serialize_partition(p))


def read_ordering(path: PathLike) -> Ordering:
    return parse_ordering(_read(path), str(path))


def write_ordering(path: PathLike, ordering: Sequence[int]) -> None:
    _write(path, serialize_ordering(ordering))
