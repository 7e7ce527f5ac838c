"""Colorings designed to keep monotone paths short on sparse hosts.

Two-color scheme against red paths of r edges and blue paths of s
edges on a host with few edges per vertex on average: pick d < r, put
every vertex with at least d earlier neighbors into a set U0 (at most
|E|/d vertices), split U0 by rank into blocks of r - d consecutive
vertices (same block red, earlier block to later block blue), and
layer the remaining vertices greedily into at most d classes with no
edge inside a class.  With U0 as class 0, an edge from class i to a
later vertex in class j is blue when i < j and red otherwise.  Red
paths then pay d + (r - d - 1) < r and blue paths pay d + (s - d) in
the wrong currencies, so neither target is reached whenever the edge
budget d * (r - d) * (s - d) is respected (d defaults to floor(r/2)).

q-color scheme against paths of n edges in every color: d is the
number of weak compositions of n/2 into q parts, U0 is as above, and
each vertex outside U0 carries one of those compositions as a length
tuple in {0..n/2}^q (layer l gets the l-th composition in colex
order; the layer count never exceeds d, so the map is injective).
The color of an edge between outside vertices is the first coordinate
where the earlier endpoint's tuple is smaller, so a monotone path
colored i traces a strictly growing i-th coordinate and spends at
most n/2 edges outside U0.  Inside U0, ranks are written as q digits
in base n/2 (reduced mod (n/2)^q, which is lossless within budget)
and edges take the most significant differing digit as their color,
pinning color-i paths inside U0 to at most n/2 - 1 edges.  Mixed
edges treat the U0 endpoint as an all-zero tuple when earlier and an
all-(n/2) tuple when later.  Within the edge budget d * (n/2)^q no
color reaches n edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional, Sequence

from .core import BLUE, RED, Edge, EdgeColoring, InputError, OrderedGraph, longest_mono_paths


class LayeringError(RuntimeError):
    """Greedy layering ran out of classes."""


@dataclass(frozen=True, eq=False)
class AdversaryPlan:
    """The data behind an adversarial coloring: the high-indegree set,
    the block size used inside it, and the layer of every other vertex
    (1-based; tuples are the per-vertex length vectors of the q-color
    scheme, None for two colors)."""

    d: int
    u0: tuple[int, ...]
    block_size: int
    layers: Mapping[int, int]
    tuples: Optional[Mapping[int, tuple[int, ...]]] = None


def high_indegree_set(graph: OrderedGraph, d: int) -> tuple[int, ...]:
    """Vertices with at least d earlier neighbors, in vertex order."""
    if d < 1:
        raise InputError(f"need d >= 1, got {d}")
    return tuple(v for v in range(graph.n) if len(graph.in_adj[v]) >= d)


def es_two_coloring(
    order: Sequence[int],
    block_size: int,
    pairs: Optional[Sequence[Edge]] = None,
) -> dict[Edge, int]:
    """Red inside rank blocks of ``block_size`` consecutive elements,
    blue across blocks.  On b*c elements this bounds red paths by b - 1
    and blue paths by c - 1 edges.  ``pairs`` restricts the domain
    (default: all pairs of ``order``)."""
    if block_size < 1:
        raise InputError(f"need block size >= 1, got {block_size}")
    rank = {v: i for i, v in enumerate(order)}
    if len(rank) != len(order):
        raise InputError("order contains repeated vertices")
    if pairs is None:
        pairs = [
            (order[i], order[j]) if order[i] < order[j] else (order[j], order[i])
            for i in range(len(order))
            for j in range(i + 1, len(order))
        ]
    out: dict[Edge, int] = {}
    for u, v in pairs:
        out[(u, v)] = RED if rank[u] // block_size == rank[v] // block_size else BLUE
    return out


def greedy_layering(graph: OrderedGraph, excluded: frozenset[int], d: int) -> dict[int, int]:
    """First-fit layers 1..d over the vertices outside ``excluded``:
    each vertex takes the smallest layer containing none of its earlier
    neighbors.  Works whenever every such vertex has fewer than d
    earlier neighbors outside ``excluded``."""
    layers: dict[int, int] = {}
    for v in range(graph.n):
        if v in excluded:
            continue
        used = {layers[u] for u in graph.in_adj[v] if u not in excluded}
        layer = next((c for c in range(1, d + 1) if c not in used), None)
        if layer is None:
            raise LayeringError(f"vertex {v} has earlier neighbors in all {d} layers")
        layers[v] = layer
    return layers


def adversary_two_color(
    graph: OrderedGraph,
    r: int,
    s: int,
    d: Optional[int] = None,
) -> tuple[EdgeColoring, dict]:
    """Color ``graph`` so that red paths stay below r edges and blue
    paths below s whenever the edge count is within the budget
    d * (r - d) * (s - d).  Over budget the same rules still apply
    best-effort.  Returns the coloring and a report with the plan and
    the achieved path lengths."""
    if not 2 <= r <= s:
        raise InputError(f"need 2 <= r <= s, got r={r}, s={s}")
    d = r // 2 if d is None else d
    if not 1 <= d < r:
        raise InputError(f"need 1 <= d < r, got d={d}")
    u0 = high_indegree_set(graph, d)
    u0_set = frozenset(u0)
    block_size = r - d
    inside = es_two_coloring(u0, block_size, pairs=[e for e in graph.edges if e[0] in u0_set and e[1] in u0_set])
    layers = greedy_layering(graph, u0_set, d)

    def cls(v: int) -> int:
        return 0 if v in u0_set else layers[v]

    assignment: dict[Edge, int] = {}
    for u, v in graph.edges:
        if u in u0_set and v in u0_set:
            assignment[(u, v)] = inside[(u, v)]
        else:
            assignment[(u, v)] = BLUE if cls(u) < cls(v) else RED
    coloring = EdgeColoring(2, assignment)
    achieved = [length for length, _ in longest_mono_paths(graph, coloring)]
    budget = d * (r - d) * (s - d)
    plan = AdversaryPlan(d, u0, block_size, layers)
    report = {
        "d": d,
        "budget": budget,
        "edges": graph.edge_count,
        "within_budget": graph.edge_count <= budget,
        "u0_size": len(u0),
        "achieved": achieved,
        "avoided": achieved[RED] < r and achieved[BLUE] < s,
    }
    return coloring, {"plan": plan, **report}


def es_q_coloring(count: int, q: int, base: int) -> dict[tuple[int, int], int]:
    """Color the pairs of range(count) by the most significant base-
    ``base`` digit (0-indexed from the most significant of q digits)
    where the two ranks differ.  Requires count <= base**q; monochromatic
    paths in any color then have at most base - 1 edges."""
    if base < 2:
        raise InputError(f"need base >= 2, got {base}")
    if count > base**q:
        raise InputError(f"count {count} exceeds base**q = {base ** q}")

    def digits(x: int) -> tuple[int, ...]:
        out = []
        for _ in range(q):
            out.append(x % base)
            x //= base
        return tuple(reversed(out))

    reps = [digits(i) for i in range(count)]
    out: dict[tuple[int, int], int] = {}
    for i in range(count):
        for j in range(i + 1, count):
            pos = next(k for k in range(q) if reps[i][k] != reps[j][k])
            out[(i, j)] = pos
    return out


def compositions_colex(total: int, parts: int) -> list[tuple[int, ...]]:
    """All weak compositions of ``total`` into ``parts`` non-negative
    parts, ordered colexicographically (sorted by reversed tuple)."""
    if parts < 1:
        raise InputError(f"need parts >= 1, got {parts}")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, k: int, acc: tuple[int, ...]) -> None:
        if k == 1:
            out.append((remaining,) + acc)
            return
        for last in range(remaining + 1):
            rec(remaining - last, k - 1, (last,) + acc)

    rec(total, parts, ())
    return out


def adversary_q_color(graph: OrderedGraph, n: int, q: int) -> tuple[EdgeColoring, dict]:
    """q-color ``graph`` avoiding monotone paths of n edges in every
    color whenever the edge count is within d * (n/2)^q for
    d = C(n/2 + q - 1, q - 1).  Requires n even, n >= 2, q >= 2."""
    if q < 2:
        raise InputError(f"need q >= 2, got {q}")
    if n < 2 or n % 2:
        raise InputError(f"need even n >= 2, got {n}")
    half = n // 2
    d = comb(half + q - 1, q - 1)
    u0 = high_indegree_set(graph, d)
    u0_set = frozenset(u0)
    rank = {v: i for i, v in enumerate(u0)}
    comps = compositions_colex(half, q)
    assert len(comps) == d
    layers = greedy_layering(graph, u0_set, d)

    base = half if half >= 2 else 2
    inside = es_q_coloring(min(len(u0), base**q), q, base) if u0 else {}

    def tuple_of(v: int) -> tuple[int, ...]:
        return comps[layers[v] - 1]

    lo_sentinel = (0,) * q
    hi_sentinel = (half,) * q

    def first_smaller(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return next((i for i in range(q) if a[i] < b[i]), q - 1)

    assignment: dict[Edge, int] = {}
    for u, v in graph.edges:
        u_in, v_in = u in u0_set, v in u0_set
        if u_in and v_in:
            i, j = rank[u] % base**q, rank[v] % base**q
            if i == j:
                assignment[(u, v)] = q - 1
            else:
                assignment[(u, v)] = inside[(min(i, j), max(i, j))]
        elif u_in:
            assignment[(u, v)] = first_smaller(lo_sentinel, tuple_of(v))
        elif v_in:
            assignment[(u, v)] = first_smaller(tuple_of(u), hi_sentinel)
        else:
            assignment[(u, v)] = first_smaller(tuple_of(u), tuple_of(v))
    coloring = EdgeColoring(q, assignment)
    achieved = [length for length, _ in longest_mono_paths(graph, coloring)]
    budget = d * half**q
    tuples = {v: tuple_of(v) for v in range(graph.n) if v not in u0_set}
    plan = AdversaryPlan(d, u0, base, layers, tuples)
    report = {
        "d": d,
        "budget": budget,
        "edges": graph.edge_count,
        "within_budget": graph.edge_count <= budget,
        "u0_size": len(u0),
        "achieved": achieved,
        "avoided": all(length < n for length in achieved),
    }
    return coloring, {"plan": plan, **report}
