"""Shared generators for the seeded random batteries."""

from __future__ import annotations

import random

import pytest

from pathramsey import EdgeColoring, OrderedGraph, random_edge_coloring


def random_graph(rng: random.Random, max_n: int = 10, density: float = 0.5) -> OrderedGraph:
    n = rng.randrange(2, max_n + 1)
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    )
    return OrderedGraph(n, edges)


def random_budget_graph(rng: random.Random, budget: int, max_n: int = 24) -> OrderedGraph:
    """A random graph with at most ``budget`` edges."""
    n = rng.randrange(2, max_n + 1)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    m = rng.randrange(0, min(budget, len(pairs)) + 1)
    return OrderedGraph(n, frozenset(pairs[:m]))


@pytest.fixture(scope="session")
def two_color_battery() -> list[tuple[OrderedGraph, EdgeColoring]]:
    """300 seeded (graph, 2-coloring) pairs on at most 10 vertices,
    shared by the DP-correctness and reduction criteria."""
    rng = random.Random(20240817)
    battery = []
    for _ in range(300):
        g = random_graph(rng, max_n=10)
        battery.append((g, random_edge_coloring(g, 2, rng)))
    return battery
