"""Ordered graphs, colorings, and longest monotone path search.

Vertices of an ordered graph are the integers 0..n-1 in their natural
order and every edge is a forward pair (u, v) with u < v.  A monotone
path is a strictly increasing vertex sequence whose consecutive pairs
are edges.  Path length is counted in edges throughout: a path on k+1
vertices has length k, and "a path of length r" always means r edges.

Edge colorings are total maps from the host edge set into range(q);
vertex colorings map every vertex into range(b).  In two-color settings
color 0 is red and color 1 is blue.

The longest-path computations are dynamic programs over the vertex
order.  For witness paths, ties between equal-length paths are broken
toward the lexicographically smallest vertex sequence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional, Sequence

Edge = tuple[int, int]

RED = 0
BLUE = 1


class InputError(ValueError):
    """Malformed graph, coloring, path, or parameter input."""


class CapExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured cap."""


@dataclass(frozen=True, eq=False)
class OrderedGraph:
    """An ordered graph on vertices 0..n-1 with forward edges.

    ``levels``, when present, tags every edge with the non-empty set of
    construction levels that contributed it.
    """

    n: int
    edges: frozenset[Edge]
    levels: Optional[Mapping[Edge, frozenset[int]]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not 0 <= u < v < self.n:
                raise InputError(f"edge ({u}, {v}) is not a forward pair inside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)
        if self.levels is not None:
            levels = {(int(u), int(v)): frozenset(int(t) for t in tags) for (u, v), tags in self.levels.items()}
            if set(levels) != edges:
                raise InputError("level tags must cover exactly the edge set")
            for edge, tags in levels.items():
                if not tags or any(t < 0 for t in tags):
                    raise InputError(f"edge {edge} carries an empty or negative level tag")
            object.__setattr__(self, "levels", levels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        """Earlier neighbors of each vertex, ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        """Later neighbors of each vertex, ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
        return tuple(tuple(sorted(a)) for a in adj)

    def level_indices(self) -> tuple[int, ...]:
        if self.levels is None:
            return ()
        seen: set[int] = set()
        for tags in self.levels.values():
            seen.update(tags)
        return tuple(sorted(seen))

    def level_edges(self, index: int) -> frozenset[Edge]:
        if self.levels is None:
            raise InputError("graph carries no level tags")
        return frozenset(e for e, tags in self.levels.items() if index in tags)


def complete_graph(n: int) -> OrderedGraph:
    return OrderedGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """A total map from edges to colors 0..q-1.

    The assignment may cover more pairs than a particular host graph
    uses (block colorings are defined on every pair); ``check_total``
    only requires that the host's edges are all present.
    """

    q: int
    assignment: Mapping[Edge, int]

    def __post_init__(self) -> None:
        if self.q < 1:
            raise InputError(f"color count must be positive, got {self.q}")
        assignment = {}
        for (u, v), c in self.assignment.items():
            u, v, c = int(u), int(v), int(c)
            if u >= v or u < 0:
                raise InputError(f"colored pair ({u}, {v}) is not a forward pair")
            if not 0 <= c < self.q:
                raise InputError(f"color {c} of edge ({u}, {v}) is outside 0..{self.q - 1}")
            assignment[(u, v)] = c
        object.__setattr__(self, "assignment", assignment)

    def color(self, u: int, v: int) -> int:
        try:
            return self.assignment[(u, v)]
        except KeyError:
            raise InputError(f"edge ({u}, {v}) is not colored") from None

    def check_total(self, graph: OrderedGraph) -> None:
        missing = graph.edges - set(self.assignment)
        if missing:
            u, v = min(missing)
            raise InputError(f"coloring misses {len(missing)} edges, e.g. ({u}, {v})")


@dataclass(frozen=True, eq=False)
class VertexColoring:
    """A total map from vertices to colors 0..b-1."""

    b: int
    assignment: Mapping[int, int]

    def __post_init__(self) -> None:
        if self.b < 1:
            raise InputError(f"color count must be positive, got {self.b}")
        assignment = {}
        for v, c in self.assignment.items():
            v, c = int(v), int(c)
            if v < 0:
                raise InputError(f"negative vertex {v}")
            if not 0 <= c < self.b:
                raise InputError(f"color {c} of vertex {v} is outside 0..{self.b - 1}")
            assignment[v] = c
        object.__setattr__(self, "assignment", assignment)

    def color(self, v: int) -> int:
        try:
            return self.assignment[v]
        except KeyError:
            raise InputError(f"vertex {v} is not colored") from None

    def check_total(self, graph: OrderedGraph) -> None:
        missing = [v for v in range(graph.n) if v not in self.assignment]
        if missing:
            raise InputError(f"vertex coloring misses {len(missing)} vertices, e.g. {missing[0]}")


@dataclass(frozen=True)
class MonotonePath:
    """A strictly increasing vertex sequence, optionally color-tagged."""

    vertices: tuple[int, ...]
    color: Optional[int] = None

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        for a, b in zip(verts, verts[1:]):
            if a >= b:
                raise InputError(f"path vertices must strictly increase, got {a} before {b}")

    @property
    def length(self) -> int:
        """Length in edges."""
        return max(0, len(self.vertices) - 1)

    def validate(
        self,
        graph: OrderedGraph,
        edge_coloring: Optional[EdgeColoring] = None,
        vertex_coloring: Optional[VertexColoring] = None,
    ) -> None:
        """Check the path exists in ``graph`` and is monochromatic.

        With an edge coloring, every edge must carry the path's color;
        with a vertex coloring, every vertex must.  Raises InputError.
        """
        for v in self.vertices:
            if not 0 <= v < graph.n:
                raise InputError(f"path vertex {v} outside 0..{graph.n - 1}")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not graph.has_edge(a, b):
                raise InputError(f"path step ({a}, {b}) is not an edge")
            if edge_coloring is not None and self.color is not None:
                got = edge_coloring.color(a, b)
                if got != self.color:
                    raise InputError(f"path edge ({a}, {b}) has color {got}, expected {self.color}")
        if vertex_coloring is not None and self.color is not None:
            for v in self.vertices:
                got = vertex_coloring.color(v)
                if got != self.color:
                    raise InputError(f"path vertex {v} has color {got}, expected {self.color}")


def path_profile(graph: OrderedGraph, coloring: EdgeColoring, color: int) -> list[int]:
    """Longest path in ``color`` ending at each vertex, in edges.

    Entry v is 0 when no edge of that color enters v.
    """
    coloring.check_total(graph)
    assign = coloring.assignment
    prof = [0] * graph.n
    in_adj = graph.in_adj
    for v in range(graph.n):
        best = 0
        for u in in_adj[v]:
            if assign[(u, v)] == color:
                cand = prof[u] + 1
                if cand > best:
                    best = cand
        prof[v] = best
    return prof


def _start_profile(n: int, out_adj: Sequence[Sequence[int]], allowed: Callable[[int, int], bool]) -> list[int]:
    """Longest allowed path starting at each vertex, in edges."""
    prof = [0] * n
    for u in range(n - 1, -1, -1):
        best = 0
        for w in out_adj[u]:
            if allowed(u, w):
                cand = prof[w] + 1
                if cand > best:
                    best = cand
        prof[u] = best
    return prof


def _lex_smallest_path(
    out_adj: Sequence[Sequence[int]],
    allowed: Callable[[int, int], bool],
    prof: Sequence[int],
    starts: Iterable[int],
    length: int,
) -> tuple[int, ...]:
    """Lexicographically smallest path of exactly ``length`` edges.

    ``prof`` must be the start-profile for the same ``allowed`` predicate
    and some start in ``starts`` must reach ``length``.
    """
    start = min(v for v in starts if prof[v] >= length)
    path = [start]
    remaining = length
    u = start
    while remaining > 0:
        u = min(w for w in out_adj[u] if allowed(u, w) and prof[w] >= remaining - 1)
        path.append(u)
        remaining -= 1
    return tuple(path)


def longest_mono_paths(graph: OrderedGraph, coloring: EdgeColoring) -> list[tuple[int, Optional[MonotonePath]]]:
    """Per-color longest monochromatic path length and one witness.

    The witness is the lexicographically smallest vertex sequence among
    the maximum-length paths of its color; for length 0 it is the single
    vertex 0 (or None on an empty graph).
    """
    coloring.check_total(graph)
    assign = coloring.assignment
    out_adj = graph.out_adj
    results: list[tuple[int, Optional[MonotonePath]]] = []
    for c in range(coloring.q):
        def allowed(u: int, w: int, _c: int = c) -> bool:
            return assign[(u, w)] == _c

        prof = _start_profile(graph.n, out_adj, allowed)
        if graph.n == 0:
            results.append((0, None))
            continue
        best = max(prof)
        verts = _lex_smallest_path(out_adj, allowed, prof, range(graph.n), best)
        results.append((best, MonotonePath(verts, color=c)))
    return results


def longest_vertex_mono_path(graph: OrderedGraph, coloring: VertexColoring) -> list[tuple[int, Optional[MonotonePath]]]:
    """Per-color longest path through same-colored vertices.

    Only vertices of the color participate; edges are unrestricted.  A
    color with no vertices reports (0, None); otherwise the length-0
    witness is the smallest vertex of the color class.
    """
    coloring.check_total(graph)
    colors = [coloring.assignment[v] for v in range(graph.n)]
    out_adj = graph.out_adj
    results: list[tuple[int, Optional[MonotonePath]]] = []
    for c in range(coloring.b):
        members = [v for v in range(graph.n) if colors[v] == c]
        if not members:
            results.append((0, None))
            continue

        def allowed(u: int, w: int, _c: int = c) -> bool:
            return colors[u] == _c and colors[w] == _c

        prof = _start_profile(graph.n, out_adj, allowed)
        best = max(prof[v] for v in members)
        verts = _lex_smallest_path(out_adj, allowed, prof, members, best)
        results.append((best, MonotonePath(verts, color=c)))
    return results


def max_vertex_path_value(graph: OrderedGraph, colors: Sequence[int]) -> int:
    """Longest path through same-colored vertices, maximized over colors.

    Value-only fast path shared with the exhaustive coloring game; the
    color classes partition the vertices, so one forward sweep suffices.
    """
    prof = [0] * graph.n
    in_adj = graph.in_adj
    best = 0
    for v in range(graph.n):
        cv = colors[v]
        b = 0
        for u in in_adj[v]:
            if colors[u] == cv and prof[u] >= b:
                b = prof[u] + 1
        prof[v] = b
        if b > best:
            best = b
    return best


def random_edge_coloring(graph: OrderedGraph, q: int, rng: random.Random) -> EdgeColoring:
    """Uniform random q-coloring of the edges, drawn in sorted edge order."""
    return EdgeColoring(q, {e: rng.randrange(q) for e in sorted(graph.edges)})
