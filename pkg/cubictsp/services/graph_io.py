# File: cubictsp/services/graph_io.py
"""
GRAPH FILES - adjacency text, pole text and DOT export

Adjacency format (ASCII, one record per line):

    n m
    u v          m lines, 0-based, u < v, sorted

Pole format: the same, followed by

    STUBS s1 s2 [s3]

Readers accept edges in any order and either orientation; writers always emit
the canonical form so files round-trip byte for byte. Blank lines and lines
starting with '#' are ignored.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import pydot
from loguru import logger

from cubictsp.core.config import get_settings
from cubictsp.core.errors import CubicTspError, GraphFormatError
from cubictsp.schemas.graph import CubicGraph, Pole

STUBS_KEYWORD = "STUBS"

GraphLike = Union[CubicGraph, Pole]


def _int_fields(line: str, expected: int, source: str, line_no: int) -> List[int]:
    fields = line.split()
    if len(fields) != expected:
        raise GraphFormatError(source, line_no, f"expected {expected} integers, got {len(fields)} fields")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise GraphFormatError(source, line_no, f"non-integer field in {line.strip()!r}")


def parse_graph_text(text: str, source: str = "<string>") -> Tuple[CubicGraph, Optional[Tuple[int, ...]]]:
    """
    Parse adjacency (or pole) text.

    Returns:
        (graph, stubs) where stubs is None for a plain graph file.
    """
    records = [
        (line_no, line)
        for line_no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not records:
        raise GraphFormatError(source, None, "empty file")

    header_no, header = records[0]
    n, m = _int_fields(header, 2, source, header_no)
    if n < 0 or m < 0:
        raise GraphFormatError(source, header_no, "vertex and edge counts must be nonnegative")
    limit = get_settings().family_vertex_limit
    if n > limit:
        raise GraphFormatError(source, header_no, f"header announces {n} vertices, above the limit of {limit}")

    edge_records = records[1:1 + m]
    edges = []
    seen = set()
    for line_no, line in edge_records:
        if line.split()[0] == STUBS_KEYWORD:
            raise GraphFormatError(source, line_no, f"header announces {m} edges, STUBS found after {len(edges)}")
        u, v = _int_fields(line, 2, source, line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(source, line_no, f"endpoint outside [0, {n}) in edge ({u}, {v})")
        if u == v:
            raise GraphFormatError(source, line_no, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(source, line_no, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if len(edges) < m:
        raise GraphFormatError(source, None, f"header announces {m} edges, file has {len(edges)}")

    stubs = None
    rest = records[1 + m:]
    if rest:
        line_no, line = rest[0]
        fields = line.split()
        if fields[0] != STUBS_KEYWORD:
            raise GraphFormatError(source, line_no, f"unexpected line after {m} edges: {line.strip()!r}")
        try:
            stubs = tuple(int(x) for x in fields[1:])
        except ValueError:
            raise GraphFormatError(source, line_no, "STUBS line must list integer vertices")
        if len(rest) > 1:
            raise GraphFormatError(source, rest[1][0], "trailing content after STUBS line")

    return CubicGraph.from_edges(n, edges), stubs


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFormatError(str(path), None, f"cannot read file: {e}")


def read_any(path: Union[str, Path]) -> GraphLike:
    """A CubicGraph, or a Pole when the file carries a STUBS line."""
    graph, stubs = parse_graph_text(_read_text(path), str(path))
    if stubs is None:
        logger.debug(f"Read graph {path}: {graph.vertex_count} vertices, {graph.edge_count} edges")
        return graph
    try:
        pole = Pole(inner=graph, stubs=stubs)
    except CubicTspError as e:
        raise GraphFormatError(str(path), None, f"invalid pole: {e}")
    logger.debug(f"Read {pole.arity}-pole {path}: {pole.vertex_count} vertices")
    return pole


def read_graph(path: Union[str, Path]) -> CubicGraph:
    result = read_any(path)
    if isinstance(result, Pole):
        raise GraphFormatError(str(path), None, "expected a graph file, found a STUBS line")
    return result


def read_pole(path: Union[str, Path]) -> Pole:
    result = read_any(path)
    if not isinstance(result, Pole):
        raise GraphFormatError(str(path), None, "expected a pole file with a STUBS line")
    return result


def format_graph(g: CubicGraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_pole(p: Pole) -> str:
    return format_graph(p.inner) + f"{STUBS_KEYWORD} " + " ".join(str(s) for s in p.stubs) + "\n"


def format_any(item: GraphLike) -> str:
    return format_pole(item) if isinstance(item, Pole) else format_graph(item)


def to_dot(item: GraphLike, name: str = "G") -> str:
    """
    DOT rendering. Dangling edges are drawn as dashed half-edges to point-shaped
    phantom nodes stub0, stub1, stub2.
    """
    graph, stubs = (item.inner, item.stubs) if isinstance(item, Pole) else (item, ())
    dot = pydot.Dot(name, graph_type="graph")
    for v in range(graph.vertex_count):
        dot.add_node(pydot.Node(str(v)))
    for u, v in graph.edges:
        dot.add_edge(pydot.Edge(str(u), str(v)))
    for i, s in enumerate(stubs):
        phantom = f"stub{i}"
        dot.add_node(pydot.Node(phantom, shape="point", label=phantom))
        dot.add_edge(pydot.Edge(str(s), phantom, style="dashed"))
    return dot.to_string()


def write_text(content: str, path: Union[str, Path]) -> None:
    try:
        Path(path).write_text(content, encoding="ascii")
    except OSError as e:
        raise GraphFormatError(str(path), None, f"cannot write file: {e}")
    logger.debug(f"Wrote {path} ({len(content)} bytes)")


def write_graph(item: GraphLike, path: Union[str, Path]) -> None:
    write_text(format_any(item), path)


def write_dot(item: GraphLike, path: Union[str, Path]) -> None:
    write_text(to_dot(item), path)
