"""Adversarial colorings: blocks, layers, and composition tuples."""

from __future__ import annotations

import random

import pytest

from pathramsey import (
    BLUE,
    RED,
    EdgeColoring,
    InputError,
    OrderedGraph,
    adversary_q_color,
    adversary_two_color,
    complete_graph,
    longest_mono_paths,
)
from pathramsey.adversary import (
    LayeringError,
    compositions_colex,
    es_q_coloring,
    es_two_coloring,
    greedy_layering,
    high_indegree_set,
)

from conftest import random_budget_graph


def test_es_blocks_on_k9():
    coloring = EdgeColoring(2, es_two_coloring(range(9), 3))
    lengths = [length for length, _ in longest_mono_paths(complete_graph(9), coloring)]
    assert lengths == [2, 2]
    # ranks 0,1,2 share a block: red inside, blue across
    assert coloring.assignment[(0, 1)] == RED
    assert coloring.assignment[(2, 3)] == BLUE


def test_es_q_coloring_digit_positions():
    table = es_q_coloring(8, 3, 2)
    assert table[(0, 1)] == 2
    assert table[(0, 4)] == 0
    assert table[(2, 3)] == 2
    assert table[(5, 7)] == 1
    with pytest.raises(InputError):
        es_q_coloring(9, 3, 2)


def test_compositions_colex_order():
    assert compositions_colex(2, 3) == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]
    assert compositions_colex(0, 2) == [(0, 0)]
    assert all(sum(c) == 3 for c in compositions_colex(3, 4))


def test_high_indegree_set_thresholds():
    g = OrderedGraph(4, frozenset([(0, 2), (1, 2), (0, 3)]))
    assert high_indegree_set(g, 2) == (2,)
    assert high_indegree_set(g, 1) == (2, 3)


def test_greedy_layering_first_fit_and_failure():
    path = OrderedGraph(3, frozenset([(0, 1), (1, 2)]))
    with pytest.raises(LayeringError):
        greedy_layering(path, frozenset(), 1)
    layers = greedy_layering(path, frozenset([1]), 1)
    assert layers == {0: 1, 2: 1}
    layers = greedy_layering(path, frozenset(), 2)
    assert layers == {0: 1, 1: 2, 2: 1}


def test_two_color_adversary_avoids_within_budget():
    rng = random.Random(555)
    for r, s in [(2, 2), (3, 5), (4, 4), (5, 8)]:
        d = r // 2
        budget = d * (r - d) * (s - d)
        for _ in range(25):
            g = random_budget_graph(rng, budget)
            coloring, report = adversary_two_color(g, r, s)
            assert report["d"] == d
            assert report["budget"] == budget
            assert report["within_budget"]
            assert report["avoided"]
            assert report["achieved"][RED] < r
            assert report["achieved"][BLUE] < s
            coloring.check_total(g)


def test_two_color_adversary_over_budget_is_best_effort():
    coloring, report = adversary_two_color(complete_graph(10), 4, 4)
    assert not report["within_budget"]
    coloring.check_total(complete_graph(10))
    assert report["plan"].block_size == 2
    assert set(report["plan"].layers.values()) <= {1, 2}


def test_two_color_adversary_rejects_bad_inputs():
    with pytest.raises(InputError):
        adversary_two_color(complete_graph(4), 1, 4)
    with pytest.raises(InputError):
        adversary_two_color(complete_graph(4), 3, 3, d=3)


def test_q_color_adversary_avoids_within_budget():
    rng = random.Random(808)
    n, q = 4, 3
    budget = 6 * (n // 2) ** q
    for _ in range(25):
        g = random_budget_graph(rng, budget)
        coloring, report = adversary_q_color(g, n, q)
        assert report["d"] == 6
        assert report["budget"] == budget
        assert report["within_budget"]
        assert report["avoided"]
        assert all(length < n for length in report["achieved"])
        coloring.check_total(g)


def test_q_color_tuples_follow_the_layering():
    rng = random.Random(4242)
    g = random_budget_graph(rng, 48)
    _, report = adversary_q_color(g, 4, 3)
    plan = report["plan"]
    comps = compositions_colex(2, 3)
    for v, layer in plan.layers.items():
        assert plan.tuples[v] == comps[layer - 1]
    # mixed edges out of U0 take the first growing coordinate
    u0 = set(plan.u0)
    coloring, _ = adversary_q_color(g, 4, 3)
    for u, v in g.edges:
        if u in u0 and v not in u0:
            expected = next(i for i in range(3) if plan.tuples[v][i] > 0)
            assert coloring.assignment[(u, v)] == expected


def test_q_color_adversary_rejects_bad_inputs():
    with pytest.raises(InputError):
        adversary_q_color(complete_graph(4), 3, 2)  # odd n
    with pytest.raises(InputError):
        adversary_q_color(complete_graph(4), 4, 1)
