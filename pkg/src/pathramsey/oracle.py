"""Exact small-scale ground truth.

Everything here is exhaustive and deliberately independent of the
construction machinery: an arrowing decision procedure over all edge
colorings, a restricted minimum-edge search for arrowing graphs, the
exact value of the vertex-coloring game, and a DP-free longest-path
enumerator used to cross-check the dynamic programs.

All searches are sequential and deterministic, so reported witnesses
are canonical for a given input.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .core import (
    CapExceeded,
    EdgeColoring,
    InputError,
    OrderedGraph,
    VertexColoring,
    longest_mono_paths,
    max_vertex_path_value,
)

DEFAULT_EDGE_CAP = 30
DEFAULT_STATE_CAP = 2**30
DEFAULT_GAME_CAP = 2**24
DEFAULT_BRUTE_CAP = 14


@dataclass
class ArrowingResult:
    """Outcome of an exhaustive arrowing decision.

    ``witness`` is an avoiding coloring when ``arrows`` is False, and
    None otherwise.  ``explored_states`` counts attempted edge-color
    assignments, ``elapsed`` is wall time in seconds.
    """

    arrows: bool
    targets: tuple[int, ...]
    witness: Optional[EdgeColoring]
    explored_states: int
    elapsed: float


def arrows_q(graph: OrderedGraph, targets: Sequence[int], state_cap: int = DEFAULT_STATE_CAP) -> ArrowingResult:
    """Decide whether every q-coloring of the edges contains, for some
    color c, a monochromatic monotone path of targets[c] edges.

    Depth-first search over edge colorings in order of increasing later
    endpoint, which keeps the per-color longest-path tables exact on the
    colored prefix: a branch is pruned the moment its color would meet
    that color's target, and a fully colored leaf is an avoiding
    witness.
    """
    targets = tuple(int(t) for t in targets)
    q = len(targets)
    if q < 1 or any(t < 1 for t in targets):
        raise InputError(f"targets must be positive, got {targets}")
    m = graph.edge_count
    if q**m > state_cap:
        raise CapExceeded(f"{q}^{m} colorings exceed the state cap {state_cap}")
    start = time.perf_counter()
    order = sorted(graph.edges, key=lambda e: (e[1], e[0]))
    ending = [[0] * graph.n for _ in range(q)]
    assignment: dict[tuple[int, int], int] = {}
    explored = 0
    witness: Optional[dict[tuple[int, int], int]] = None

    def dfs(idx: int) -> bool:
        nonlocal explored, witness
        if idx == m:
            witness = dict(assignment)
            return True
        u, v = order[idx]
        for c in range(q):
            explored += 1
            cand = ending[c][u] + 1
            if cand >= targets[c]:
                continue
            prev = ending[c][v]
            if cand > prev:
                ending[c][v] = cand
            assignment[(u, v)] = c
            if dfs(idx + 1):
                return True
            ending[c][v] = prev
            del assignment[(u, v)]
        return False

    avoidable = dfs(0)
    elapsed = time.perf_counter() - start
    if not avoidable:
        return ArrowingResult(True, targets, None, explored, elapsed)
    coloring = EdgeColoring(q, witness or {})
    for c, (length, _) in enumerate(longest_mono_paths(graph, coloring)):
        if length >= targets[c]:
            raise AssertionError(f"avoiding witness reaches target in color {c}")
    return ArrowingResult(False, targets, coloring, explored, elapsed)


def arrows(graph: OrderedGraph, r: int, s: int, edge_cap: int = DEFAULT_EDGE_CAP) -> ArrowingResult:
    """Two-color arrowing: does every red/blue edge coloring contain a
    red path of r edges or a blue path of s edges?"""
    if graph.edge_count > edge_cap:
        raise CapExceeded(f"{graph.edge_count} edges exceed the edge cap {edge_cap}")
    return arrows_q(graph, (r, s), state_cap=2**edge_cap)


def min_arrowing_edges(
    r: int,
    s: int,
    max_vertices: int = 7,
    max_edges: Optional[int] = None,
) -> Optional[tuple[int, OrderedGraph]]:
    """Smallest edge count of an arrowing graph on at most ``max_vertices``
    vertices, with one witness graph, or None if no graph within the
    limits arrows.

    Restricted exact search: edge counts increase from 1, and for each
    count every edge subset of the ordered complete graph on each vertex
    count up to the limit is tested.  Subsets that avoid the last vertex
    already occur at a smaller vertex count and are skipped.
    """
    if not 2 <= max_vertices <= 7:
        raise InputError(f"max_vertices must be in 2..7, got {max_vertices}")
    if max_edges is None:
        max_edges = max_vertices * (max_vertices - 1) // 2
    for m in range(1, max_edges + 1):
        for nv in range(2, max_vertices + 1):
            pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
            if m > len(pairs):
                continue
            for subset in combinations(pairs, m):
                if nv > 2 and not any(v == nv - 1 for _, v in subset):
                    continue
                graph = OrderedGraph(nv, frozenset(subset))
                if arrows(graph, r, s).arrows:
                    return m, graph
    return None


def vertex_game_value(graph: OrderedGraph, b: int, cap: int = DEFAULT_GAME_CAP) -> tuple[int, VertexColoring]:
    """Exact minimax of the vertex-coloring game.

    The value is min over all b-colorings of the vertices of the longest
    monotone path through a single color class; the witness is the first
    coloring attaining the minimum in enumeration order.
    """
    if b < 1:
        raise InputError(f"color count must be positive, got {b}")
    if b**graph.n > cap:
        raise CapExceeded(f"{b}^{graph.n} colorings exceed the cap {cap}")
    best_value: Optional[int] = None
    best_colors: Optional[tuple[int, ...]] = None
    for colors in product(range(b), repeat=graph.n):
        value = max_vertex_path_value(graph, colors)
        if best_value is None or value < best_value:
            best_value, best_colors = value, colors
            if best_value == 0:
                break
    assert best_value is not None and best_colors is not None
    return best_value, VertexColoring(b, dict(enumerate(best_colors)))


def brute_longest_path(graph: OrderedGraph, coloring: EdgeColoring, node_cap: int = DEFAULT_BRUTE_CAP) -> list[int]:
    """Per-color longest monochromatic path by exhaustive enumeration.

    Walks every monochromatic monotone vertex sequence depth-first with
    no memoization, so it is an independent check of the dynamic
    programs rather than a reformulation of them.
    """
    if graph.n > node_cap:
        raise CapExceeded(f"{graph.n} vertices exceed the enumeration cap {node_cap}")
    coloring.check_total(graph)
    result = []
    for c in range(coloring.q):
        succ: list[list[int]] = [[] for _ in range(graph.n)]
        for (u, v), col in coloring.assignment.items():
            if col == c and (u, v) in graph.edges:
                succ[u].append(v)

        def walk(u: int) -> int:
            best = 0
            for w in succ[u]:
                cand = 1 + walk(w)
                if cand > best:
                    best = cand
            return best

        result.append(max((walk(v) for v in range(graph.n)), default=0))
    return result
