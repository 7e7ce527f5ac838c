"""Schedules, leveled unions, cross-set graphs, and the recursive family."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from pathramsey import (
    InputError,
    MulticolorParams,
    OrderedGraph,
    ParamsError,
    RecursiveParams,
    UpperBoundParams,
    build_recursive_graph,
    build_union_construction,
    cross_probability,
    sample_cross_graph,
    sample_level_graph,
    verify_level_graph,
    window_edges,
    window_graph,
)


def test_full_scale_schedule_collapses_to_one_level():
    params = UpperBoundParams(2, 8192)
    assert params.t == 13
    assert params.vertex_count == 65536
    assert params.top_level == 0
    (lvl,) = params.levels
    assert lvl.set_size == 104
    assert lvl.window == 43264
    assert lvl.p == 1


def test_shrunk_schedule_resolves_all_levels():
    params = UpperBoundParams(4, 16, alpha_n=8, alpha_l=1, alpha_m=1)
    assert params.vertex_count == 512
    assert params.top_level == 3
    assert [lvl.window for lvl in params.levels] == [64, 128, 256, 512]
    assert [lvl.set_size for lvl in params.levels] == [4, 8, 16, 32]
    assert [lvl.p for lvl in params.levels] == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 8),
    ]


def test_multicolor_schedule_resolves():
    params = MulticolorParams(4, 3, alpha_m=1, alpha_l=2)
    assert params.vertex_count == 256
    assert params.top_level == 2
    assert [lvl.window for lvl in params.levels] == [64, 128, 256]
    assert [lvl.set_size for lvl in params.levels] == [4, 8, 16]


def test_params_validation():
    with pytest.raises(ParamsError):
        UpperBoundParams(3, 2)
    with pytest.raises(ParamsError):
        UpperBoundParams(2, 12)  # default scale needs a power of two
    with pytest.raises(ParamsError):
        UpperBoundParams(2, 2, alpha_m=1000, alpha_n=1)  # window exceeds n
    with pytest.raises(ParamsError):
        MulticolorParams(4, 1)
    with pytest.raises(ParamsError):
        MulticolorParams(4, 2, tau=3)
    # overrides lift the power-of-two requirement
    assert UpperBoundParams(2, 12, alpha_m=1).t == 4


def test_window_graph_shape():
    assert window_edges(4, 2) == frozenset(
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    )
    g = window_graph(10, 3)
    assert g.edge_count == 24
    assert all(v - u <= 3 for u, v in g.edges)


def test_sample_level_graph_density_and_determinism():
    g1 = sample_level_graph(512, 64, 0.5, 2024)
    g2 = sample_level_graph(512, 64, 0.5, 2024)
    assert g1.edges == g2.edges
    assert g1.edge_count == 15268  # frozen draw; expectation 15344, sd 87.6
    full = sample_level_graph(100, 10, 1, 5)
    assert full.edges == window_edges(100, 10)


def test_verify_level_graph_modes():
    holds = verify_level_graph(window_graph(12, 3), 2, 3, "exhaustive")
    assert holds.holds and holds.mode == "exhaustive"
    empty = verify_level_graph(OrderedGraph(3, frozenset()), 1, 1, "exhaustive")
    assert not empty.holds
    assert empty.counterexample == ((0,), (1,))
    sampled = verify_level_graph(window_graph(40, 6), 2, 6, "sampled", samples=500, seed=11)
    assert sampled.holds and sampled.mode == "sampled"
    assert sampled.pairs_checked <= 500


def test_build_union_is_deterministic_and_within_bounds():
    params = UpperBoundParams(2, 2, alpha_n=1, alpha_m=1, alpha_l=1)
    a = build_union_construction(params, seed=9)
    b = build_union_construction(params, seed=9)
    assert a.graph.edges == b.graph.edges
    assert a.graph.levels == b.graph.levels
    for rep in a.level_reports:
        assert rep.edges <= rep.edge_bound
        assert rep.check.holds
    # level 0 is the full window graph, recorded without sampling
    assert a.level_reports[0].check.mode == "deterministic"
    assert a.graph.level_edges(0) == window_edges(params.vertex_count, params.levels[0].window)


def test_cross_probability_and_graph():
    assert cross_probability(64, 8) == pytest.approx(0.769860, abs=1e-5)
    dense = sample_cross_graph(4, 2, 0)
    assert dense.p >= 1
    assert dense.graph.edge_count == 16  # complete bipartite when p saturates
    assert dense.check.mode == "deterministic"
    sparse = sample_cross_graph(64, 8, 31337)
    assert sparse.attempts == 1
    assert sparse.graph.edge_count == 3177  # frozen draw
    assert sparse.graph.edge_count <= sparse.edge_bound
    assert all(u < 64 <= v for u, v in sparse.graph.edges)
    with pytest.raises(InputError):
        sample_cross_graph(4, 3, 0)


def test_recursive_params_defaults_and_validation():
    params = RecursiveParams(b=2, s=8)
    assert params.resolved_depth == 2
    assert params.resolved_branch == 20
    assert params.resolved_widths == (1,)
    assert params.vertex_count == 400
    with pytest.raises(ParamsError):
        RecursiveParams(b=2)  # defaults need s
    with pytest.raises(ParamsError):
        RecursiveParams(b=2, depth=2, branch=4, bridge_widths=(3,))  # 2k > A
    with pytest.raises(ParamsError):
        RecursiveParams(b=2, depth=1, branch=1, bridge_widths=())


def test_recursive_build_saturated_bridges_give_complete_graph():
    params = RecursiveParams(b=2, depth=2, branch=4, bridge_widths=(1,))
    built = build_recursive_graph(params, seed=3)
    assert built.graph.n == 16
    assert built.graph.edge_count == 120
    assert built.meta.level == 2
    assert len(built.meta.children) == 4
    assert set(built.meta.bridges) == {(i, j) for i in range(4) for j in range(i + 1, 4)}
    for bridge in built.meta.bridges.values():
        assert bridge <= built.graph.edges
    block = built.graph.level_edges(1)
    assert all(u // 4 == v // 4 for u, v in block)
    assert all(u // 4 != v // 4 for u, v in built.graph.level_edges(2))


def test_recursive_build_is_deterministic():
    # width 4 against copy size 8 keeps the cross density below 1, so the
    # bridges are genuinely sampled rather than complete
    params = RecursiveParams(b=2, depth=2, branch=8, bridge_widths=(4,))
    assert cross_probability(8, 4) < 1
    a = build_recursive_graph(params, seed=5)
    b = build_recursive_graph(params, seed=5)
    c = build_recursive_graph(params, seed=6)
    assert a.graph.edges == b.graph.edges
    assert a.graph.edges != c.graph.edges
    assert all(check.holds for check in a.bridge_checks)
    assert a.implied_constant(2) == pytest.approx(
        a.graph.edge_count / (8**3 * 40 * 2 * math.log(2))
    )
