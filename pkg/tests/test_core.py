"""Core types and the longest-path dynamic program."""

from __future__ import annotations

import random

import pytest

from pathramsey import (
    BLUE,
    RED,
    EdgeColoring,
    InputError,
    MonotonePath,
    OrderedGraph,
    VertexColoring,
    complete_graph,
    longest_mono_paths,
    longest_vertex_mono_path,
    path_profile,
    random_edge_coloring,
)
from pathramsey.core import max_vertex_path_value

from conftest import random_graph


def test_graph_rejects_backward_and_out_of_range_edges():
    with pytest.raises(InputError):
        OrderedGraph(3, frozenset([(2, 1)]))
    with pytest.raises(InputError):
        OrderedGraph(3, frozenset([(0, 3)]))
    with pytest.raises(InputError):
        OrderedGraph(3, frozenset([(1, 1)]))


def test_graph_levels_must_cover_edge_set_exactly():
    edges = frozenset([(0, 1), (1, 2)])
    OrderedGraph(3, edges, levels={(0, 1): frozenset([0]), (1, 2): frozenset([1])})
    with pytest.raises(InputError):
        OrderedGraph(3, edges, levels={(0, 1): frozenset([0])})
    with pytest.raises(InputError):
        OrderedGraph(3, edges, levels={(0, 1): frozenset([0]), (1, 2): frozenset([1]), (0, 2): frozenset([0])})


def test_adjacency_is_sorted_and_consistent():
    g = OrderedGraph(4, frozenset([(0, 2), (0, 1), (1, 3), (2, 3)]))
    assert g.out_adj[0] == (1, 2)
    assert g.in_adj[3] == (1, 2)
    assert g.has_edge(0, 2) and not g.has_edge(1, 2)


def test_complete_graph_edge_count():
    assert complete_graph(5).edge_count == 10
    assert complete_graph(0).edge_count == 0


def test_edge_coloring_may_cover_extra_pairs_but_not_graph_misses():
    g = OrderedGraph(3, frozenset([(0, 1)]))
    col = EdgeColoring(2, {(0, 1): RED, (1, 2): BLUE})
    col.check_total(g)
    with pytest.raises(InputError):
        EdgeColoring(2, {(0, 1): 2})
    missing = EdgeColoring(2, {(1, 2): BLUE})
    with pytest.raises(InputError):
        missing.check_total(g)


def test_monotone_path_validation():
    g = OrderedGraph(4, frozenset([(0, 1), (1, 3), (0, 2)]))
    col = EdgeColoring(2, {(0, 1): RED, (1, 3): RED, (0, 2): BLUE})
    MonotonePath((0, 1, 3), color=RED).validate(g, edge_coloring=col)
    with pytest.raises(InputError):
        MonotonePath((0, 2, 1))
    with pytest.raises(InputError):
        MonotonePath((0, 1, 2)).validate(g)
    with pytest.raises(InputError):
        MonotonePath((0, 1, 3), color=BLUE).validate(g, edge_coloring=col)
    vc = VertexColoring(2, {0: 1, 1: 1, 2: 0, 3: 1})
    MonotonePath((0, 1, 3), color=1).validate(g, vertex_coloring=vc)
    vc_bad = VertexColoring(2, {0: 1, 1: 0, 2: 0, 3: 1})
    with pytest.raises(InputError):
        MonotonePath((0, 1, 3), color=1).validate(g, vertex_coloring=vc_bad)
    # an untagged path is checked structurally only
    MonotonePath((0, 1, 3)).validate(g, vertex_coloring=vc_bad)


def test_path_profile_hand_example():
    # red chain 0-1-2 and a red edge 0-3 off to the side
    g = OrderedGraph(4, frozenset([(0, 1), (1, 2), (0, 3), (2, 3)]))
    col = EdgeColoring(2, {(0, 1): RED, (1, 2): RED, (0, 3): RED, (2, 3): BLUE})
    assert path_profile(g, col, RED) == [0, 1, 2, 1]
    assert path_profile(g, col, BLUE) == [0, 0, 0, 1]


def test_longest_mono_paths_returns_lex_smallest_witness():
    # two red paths of length 2: 0-1-3 and 0-2-3; lex order picks 0-1-3
    g = OrderedGraph(4, frozenset([(0, 1), (1, 3), (0, 2), (2, 3)]))
    col = EdgeColoring(2, dict.fromkeys(g.edges, RED))
    (length, witness), (blue_len, blue_witness) = longest_mono_paths(g, col)
    assert length == 2 and witness.vertices == (0, 1, 3)
    assert blue_len == 0 and blue_witness.vertices == (0,)


def test_longest_mono_paths_empty_graph():
    g = OrderedGraph(0, frozenset())
    col = EdgeColoring(2, {})
    assert longest_mono_paths(g, col) == [(0, None), (0, None)]


def test_witnesses_validate_on_random_instances():
    rng = random.Random(4242)
    for _ in range(80):
        g = random_graph(rng, max_n=9)
        col = random_edge_coloring(g, rng.choice([2, 3]), rng)
        for c, (length, witness) in enumerate(longest_mono_paths(g, col)):
            assert witness is not None and witness.length == length
            assert witness.color == c
            witness.validate(g, edge_coloring=col)


def test_vertex_mono_path_and_game_value_agree():
    g = complete_graph(6)
    vc = VertexColoring(2, {0: 0, 1: 0, 2: 1, 3: 1, 4: 0, 5: 1})
    per_color = longest_vertex_mono_path(g, vc)
    # class 0 = {0,1,4}, class 1 = {2,3,5}; complete graph chains each class
    assert [length for length, _ in per_color] == [2, 2]
    for _, witness in per_color:
        witness.validate(g, vertex_coloring=vc)
    assert max_vertex_path_value(g, [0, 0, 1, 1, 0, 1]) == 2


def test_random_edge_coloring_is_total_and_seeded():
    g = complete_graph(7)
    a = random_edge_coloring(g, 3, random.Random(5))
    b = random_edge_coloring(g, 3, random.Random(5))
    assert a.assignment == b.assignment
    a.check_total(g)
    assert set(a.assignment.values()) <= {0, 1, 2}
