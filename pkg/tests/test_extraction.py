"""Certificates and the path-splicing pipeline on hand-sized graphs."""

from __future__ import annotations

import random

import pytest

from pathramsey import (
    BLUE,
    RED,
    Certificate,
    CertificateKind,
    EdgeColoring,
    FailureDiagnosis,
    GuaranteeViolation,
    InputError,
    MulticolorParams,
    OrderedGraph,
    PathCollection,
    RecursiveParams,
    UpperBoundParams,
    VertexColoring,
    build_multicolor_construction,
    build_recursive_graph,
    claim_bound,
    extract_multicolor,
    extract_recursive,
    extract_two_color,
    greedy_initial_paths,
    merge_round,
    pigeonhole_class,
    vertex_to_edge_reduction,
    window_edges,
)


def tiny_params() -> UpperBoundParams:
    # n = 4, levels: (p=1, l=1, m=2) and (p=1/2, l=2, m=4)
    return UpperBoundParams(2, 2, alpha_n=1, alpha_m=1, alpha_l=1)


def tiny_graph() -> OrderedGraph:
    level0 = window_edges(4, 2)
    edges = level0 | {(0, 3)}
    levels = {e: frozenset([0]) for e in level0}
    levels[(0, 3)] = frozenset([1])
    return OrderedGraph(4, frozenset(edges), levels=levels)


def matching_coloring(graph: OrderedGraph) -> EdgeColoring:
    red = {(0, 1), (2, 3)}
    return EdgeColoring(2, {e: RED if e in red else BLUE for e in graph.edges})


def test_certificate_round_trips():
    certs = [
        Certificate(CertificateKind.FOUND_PATH, color=1, target=2, found_length=3, path=(0, 1, 2)),
        Certificate(CertificateKind.AVOIDING, targets=(2, 2), trace={"achieved": [1, 1]}),
        Certificate(
            CertificateKind.FAILURE,
            targets=(3, 8),
            failure=FailureDiagnosis("missing-bridge-edge", "detail", level=2, pair=((1,), (5,))),
        ),
    ]
    for cert in certs:
        assert Certificate.from_dict(cert.to_dict()) == cert


def test_certificate_validation_catches_mismatches():
    g = tiny_graph()
    all_blue = EdgeColoring(2, {e: BLUE for e in g.edges})
    bad_len = Certificate(CertificateKind.FOUND_PATH, color=BLUE, target=2, found_length=3, path=(0, 1, 2, 3))
    with pytest.raises(InputError):
        bad_len.validate(g, edge_coloring=all_blue)
    ok = Certificate(CertificateKind.FOUND_PATH, color=BLUE, target=2, found_length=3, path=(0, 1, 2))
    ok.validate(g, edge_coloring=all_blue)
    assert ok.meets_target
    not_avoiding = Certificate(CertificateKind.AVOIDING, targets=(1, 1))
    with pytest.raises(InputError):
        not_avoiding.validate(g, edge_coloring=all_blue)
    with pytest.raises(InputError):
        Certificate(CertificateKind.FAILURE).validate(g)


def test_path_collection_rejects_disorder():
    PathCollection(((0, 1, 2), (5, 6)), 0)
    with pytest.raises(InputError):
        PathCollection(((1, 0),), 0)
    with pytest.raises(InputError):
        PathCollection(((0, 5), (3, 6)), 0)


def test_pigeonhole_class_tie_breaks_to_smaller_value():
    g = tiny_graph()
    cert, members, trace = pigeonhole_class(g, matching_coloring(g), 2)
    assert cert is None
    assert members == (0, 2)
    assert trace["class_value"] == 0 and trace["class_size"] == 2


def test_pigeonhole_class_returns_red_certificate():
    g = tiny_graph()
    red = {(0, 1), (1, 2)}
    coloring = EdgeColoring(2, {e: RED if e in red else BLUE for e in g.edges})
    cert, members, _ = pigeonhole_class(g, coloring, 2)
    assert members is None
    assert cert is not None and cert.color == RED and cert.meets_target
    cert.validate(g, edge_coloring=coloring)


def test_greedy_initial_paths_chains_within_window():
    level0 = window_edges(15, 2)
    runs = greedy_initial_paths(level0, (0, 1, 2, 5, 6, 10), 2)
    assert runs.paths == ((0, 1, 2), (5, 6), (10,))
    with pytest.raises(GuaranteeViolation) as exc:
        greedy_initial_paths(frozenset([(1, 2)]), (0, 1, 2), 2)
    assert exc.value.diagnosis.reason == "missing-bridge-edge"
    assert exc.value.diagnosis.level == 0


def test_merge_round_bridges_and_trims():
    runs = PathCollection(((0, 1, 2, 3, 4), (10, 11, 12, 13, 14)), 0)
    merged, trace = merge_round(runs, frozenset([(4, 10)]), 1, 8, 1)
    assert merged.paths == ((0, 1, 2, 3, 4, 10, 11, 12, 13, 14),)
    assert trace["merges"] == 1 and trace["vertices_discarded"] == 0
    # a deeper link costs the vertices outside the junction
    long_runs = PathCollection((tuple(range(7)), tuple(range(10, 17))), 0)
    trimmed, trace = merge_round(long_runs, frozenset([(4, 12)]), 3, 20, 1)
    assert trimmed.paths == ((0, 1, 2, 3, 4, 12, 13, 14, 15, 16),)
    assert trace["vertices_discarded"] == 4


def test_merge_round_short_paths_are_dropped():
    runs = PathCollection(((0, 1), (5, 6, 7, 8, 9), (20, 21)), 0)
    merged, trace = merge_round(runs, frozenset(), 2, 1, 1)
    assert merged.paths == ((5, 6, 7, 8, 9),)
    assert trace["paths_removed"] == 2


def test_merge_round_missing_bridge_is_a_violation():
    runs = PathCollection(((0, 1, 2, 3, 4), (10, 11, 12, 13, 14)), 0)
    with pytest.raises(GuaranteeViolation) as exc:
        merge_round(runs, frozenset(), 1, 8, 1)
    diag = exc.value.diagnosis
    assert diag.reason == "missing-bridge-edge"
    assert diag.level == 1
    assert diag.pair == ((4,), (10,))


def test_extract_two_color_finds_red_immediately():
    g = tiny_graph()
    red = {(0, 1), (1, 2)}
    coloring = EdgeColoring(2, {e: RED if e in red else BLUE for e in g.edges})
    cert = extract_two_color(g, tiny_params(), coloring)
    assert cert.kind is CertificateKind.FOUND_PATH and cert.color == RED
    cert.validate(g, edge_coloring=coloring)


def test_extract_two_color_pipelines_blue():
    g = tiny_graph()
    all_blue = EdgeColoring(2, {e: BLUE for e in g.edges})
    cert = extract_two_color(g, tiny_params(), all_blue)
    assert cert.kind is CertificateKind.FOUND_PATH and cert.color == BLUE
    assert cert.found_length == 3 and cert.path == (0, 1, 2)
    assert cert.meets_target
    cert.validate(g, edge_coloring=all_blue)


def test_extract_two_color_verifies_avoiding_shortfall():
    g = tiny_graph()
    coloring = matching_coloring(g)
    cert = extract_two_color(g, tiny_params(), coloring)
    assert cert.kind is CertificateKind.AVOIDING
    assert cert.targets == (2, 2)
    assert cert.trace["achieved"] == [1, 1]
    cert.validate(g, edge_coloring=coloring)


def test_vertex_to_edge_reduction_classes_follow_the_profile():
    g = tiny_graph()
    cert, vc = vertex_to_edge_reduction(g, matching_coloring(g), 2)
    assert cert is None
    assert vc is not None and vc.assignment == {0: 0, 1: 1, 2: 0, 3: 1}
    red = {(0, 1), (1, 2)}
    coloring = EdgeColoring(2, {e: RED if e in red else BLUE for e in g.edges})
    cert, vc = vertex_to_edge_reduction(g, coloring, 2)
    assert vc is None and cert is not None and cert.meets_target


def test_claim_bound_values():
    assert claim_bound(4, 2, 2, (1,)) == 3
    assert claim_bound(8, 2, 2, (2,)) == 7
    assert claim_bound(4, 2, 1, ()) == 1
    with pytest.raises(InputError):
        claim_bound(4, 2, 3, (1,))


def test_extract_recursive_always_returns_a_validated_path():
    params = RecursiveParams(b=2, depth=2, branch=4, bridge_widths=(1,))
    built = build_recursive_graph(params, seed=3)
    target = claim_bound(4, 2, 2, (1,))
    rng = random.Random(99)
    for _ in range(20):
        vc = VertexColoring(2, {v: rng.randrange(2) for v in range(16)})
        cert = extract_recursive(built.graph, built.meta, vc)
        assert cert.kind is CertificateKind.FOUND_PATH
        assert cert.target == target
        cert.validate(built.graph, vertex_coloring=vc)
        assert cert.meets_target


def test_extract_multicolor_on_a_sampled_union():
    params = MulticolorParams(4, 3, alpha_m=1, alpha_l=2)
    built = build_multicolor_construction(params, seed=13, samples=2000)
    rng = random.Random(7)
    coloring = EdgeColoring(3, {e: rng.randrange(3) for e in built.graph.edges})
    cert = extract_multicolor(built.graph, params, coloring)
    assert cert.kind is CertificateKind.FOUND_PATH
    assert cert.target == 4
    cert.validate(built.graph, edge_coloring=coloring)
    assert cert.meets_target
