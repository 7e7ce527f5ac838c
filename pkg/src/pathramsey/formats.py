"""Line-oriented text formats for graphs, colorings, and parameter files.

graph              "ordered-graph v1" / "n N" / "m M" / M lines "u v [tags]"
edge coloring      "edge-coloring v1" / "q Q" / one line "u v c" per edge
vertex coloring    "vertex-coloring v1" / "b B" / one line "v c" per vertex
parameter file     "key = value" lines, order preserved

Edge lines may carry a comma-separated list of level tags ("0" or
"0,2").  Writers emit a canonical form (sorted lines, LF newlines) so
identical inputs always produce identical bytes, and write -> read ->
write is the identity on every emitted file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Union

from .core import EdgeColoring, InputError, OrderedGraph, VertexColoring

GRAPH_HEADER = "ordered-graph v1"
EDGE_COLORING_HEADER = "edge-coloring v1"
VERTEX_COLORING_HEADER = "vertex-coloring v1"


def _fail(line_no: int, message: str) -> None:
    raise InputError(f"line {line_no}: {message}")


def _lines(text: str) -> list[str]:
    return [line.rstrip("\n") for line in text.split("\n") if line.strip() != ""]


def _expect_header(lines: list[str], header: str) -> None:
    if not lines or lines[0].strip() != header:
        raise InputError(f"expected header {header!r}")


def _int_field(lines: list[str], idx: int, key: str) -> int:
    parts = lines[idx].split()
    if len(parts) != 2 or parts[0] != key:
        _fail(idx + 1, f"expected '{key} <int>'")
    try:
        return int(parts[1])
    except ValueError:
        _fail(idx + 1, f"{key} is not an integer")
    raise AssertionError


def graph_to_text(graph: OrderedGraph) -> str:
    out = [GRAPH_HEADER, f"n {graph.n}", f"m {graph.edge_count}"]
    for u, v in sorted(graph.edges):
        if graph.levels is not None:
            tags = ",".join(str(t) for t in sorted(graph.levels[(u, v)]))
            out.append(f"{u} {v} {tags}")
        else:
            out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def graph_from_text(text: str) -> OrderedGraph:
    lines = _lines(text)
    _expect_header(lines, GRAPH_HEADER)
    if len(lines) < 3:
        raise InputError("graph file needs 'n' and 'm' lines")
    n = _int_field(lines, 1, "n")
    m = _int_field(lines, 2, "m")
    if len(lines) - 3 != m:
        raise InputError(f"declared m {m} but found {len(lines) - 3} edge lines")
    edges: set[tuple[int, int]] = set()
    levels: dict[tuple[int, int], frozenset[int]] = {}
    tagged = 0
    for idx in range(3, len(lines)):
        parts = lines[idx].split()
        if len(parts) not in (2, 3):
            _fail(idx + 1, "expected 'u v' or 'u v tags'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            _fail(idx + 1, "edge endpoints are not integers")
        if (u, v) in edges:
            _fail(idx + 1, f"duplicate edge ({u}, {v})")
        edges.add((u, v))
        if len(parts) == 3:
            tagged += 1
            try:
                tags = frozenset(int(t) for t in parts[2].split(","))
            except ValueError:
                _fail(idx + 1, "level tags are not integers")
            levels[(u, v)] = tags
    if tagged and tagged != len(edges):
        raise InputError("either every edge line carries level tags or none does")
    return OrderedGraph(n, frozenset(edges), levels=levels if tagged else None)


def edge_coloring_to_text(coloring: EdgeColoring) -> str:
    out = [EDGE_COLORING_HEADER, f"q {coloring.q}"]
    for (u, v), c in sorted(coloring.assignment.items()):
        out.append(f"{u} {v} {c}")
    return "\n".join(out) + "\n"


def edge_coloring_from_text(text: str) -> EdgeColoring:
    lines = _lines(text)
    _expect_header(lines, EDGE_COLORING_HEADER)
    q = _int_field(lines, 1, "q")
    assignment: dict[tuple[int, int], int] = {}
    for idx in range(2, len(lines)):
        parts = lines[idx].split()
        if len(parts) != 3:
            _fail(idx + 1, "expected 'u v c'")
        try:
            u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            _fail(idx + 1, "coloring entries are not integers")
        if (u, v) in assignment:
            _fail(idx + 1, f"duplicate entry for edge ({u}, {v})")
        assignment[(u, v)] = c
    return EdgeColoring(q, assignment)


def vertex_coloring_to_text(coloring: VertexColoring) -> str:
    out = [VERTEX_COLORING_HEADER, f"b {coloring.b}"]
    for v, c in sorted(coloring.assignment.items()):
        out.append(f"{v} {c}")
    return "\n".join(out) + "\n"


def vertex_coloring_from_text(text: str) -> VertexColoring:
    lines = _lines(text)
    _expect_header(lines, VERTEX_COLORING_HEADER)
    b = _int_field(lines, 1, "b")
    assignment: dict[int, int] = {}
    for idx in range(2, len(lines)):
        parts = lines[idx].split()
        if len(parts) != 2:
            _fail(idx + 1, "expected 'v c'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            _fail(idx + 1, "coloring entries are not integers")
        if v in assignment:
            _fail(idx + 1, f"duplicate entry for vertex {v}")
        assignment[v] = c
    return VertexColoring(b, assignment)


def coloring_from_text(text: str) -> Union[EdgeColoring, VertexColoring]:
    """Dispatch on the header line."""
    lines = _lines(text)
    if lines and lines[0].strip() == EDGE_COLORING_HEADER:
        return edge_coloring_from_text(text)
    if lines and lines[0].strip() == VERTEX_COLORING_HEADER:
        return vertex_coloring_from_text(text)
    raise InputError("unrecognized coloring header")


def params_to_text(mapping: Mapping[str, object]) -> str:
    out = []
    for key, value in mapping.items():
        key = str(key)
        if not key or any(ch.isspace() for ch in key):
            raise InputError(f"bad params key {key!r}")
        out.append(f"{key} = {value}")
    return "\n".join(out) + "\n"


def params_from_text(text: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for idx, raw in enumerate(text.split("\n")):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            _fail(idx + 1, "expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key:
            _fail(idx + 1, "empty key")
        if key in mapping:
            _fail(idx + 1, f"duplicate key {key!r}")
        mapping[key] = value
    return mapping


def write_text(path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="ascii")
    return path


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="ascii")


def json_to_text(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path: Union[str, Path], obj: object) -> Path:
    return write_text(path, json_to_text(obj))


def read_json(path: Union[str, Path]) -> object:
    return json.loads(read_text(path))
