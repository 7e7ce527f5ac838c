"""Ordered-graph path Ramsey toolkit: constructions, adversarial
colorings, constructive path extraction, and exact small-instance
oracles, all seeded and file-based."""

from .adversary import (
    AdversaryPlan,
    LayeringError,
    adversary_q_color,
    adversary_two_color,
    compositions_colex,
    es_q_coloring,
    es_two_coloring,
    greedy_layering,
    high_indegree_set,
)
from .constructions import (
    ConstructionFailure,
    CrossConstruction,
    LevelCheck,
    LevelParams,
    LevelReport,
    MulticolorParams,
    ParamsError,
    RecursiveConstruction,
    RecursiveMetadata,
    RecursiveParams,
    UnionConstruction,
    UpperBoundParams,
    build_leveled_union,
    build_multicolor_construction,
    build_recursive_graph,
    build_union_construction,
    cross_probability,
    sample_cross_graph,
    sample_level_graph,
    verify_cross_graph,
    verify_level_graph,
    window_edges,
    window_graph,
)
from .core import (
    BLUE,
    RED,
    CapExceeded,
    Edge,
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
from .extraction import (
    Certificate,
    CertificateKind,
    FailureDiagnosis,
    GuaranteeViolation,
    PathCollection,
    claim_bound,
    extract_multicolor,
    extract_recursive,
    extract_two_color,
    greedy_initial_paths,
    merge_round,
    pigeonhole_class,
    vertex_to_edge_reduction,
)
from .formats import (
    coloring_from_text,
    edge_coloring_from_text,
    edge_coloring_to_text,
    graph_from_text,
    graph_to_text,
    params_from_text,
    params_to_text,
    read_json,
    read_text,
    vertex_coloring_from_text,
    vertex_coloring_to_text,
    write_json,
    write_text,
)
from .oracle import (
    ArrowingResult,
    arrows,
    arrows_q,
    brute_longest_path,
    min_arrowing_edges,
    vertex_game_value,
)
from .seeds import derive_seed, rng_for

__version__ = "0.1.0"
