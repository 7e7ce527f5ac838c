"""Constructive path extraction from colorings of the leveled hosts.

Two-color route on a leveled union with vertex count n, targets r
(red) and s (blue): the longest-red-path profile either reaches r
edges somewhere (done) or splits the vertices into r classes; the
largest class A carries no red edge, so blue paths are built inside it.
Level-0 window edges chain consecutive class vertices into initial
paths, then one merge round per random level j = 1..k repeatedly
drops paths of at most 2*set_size vertices and splices consecutive
paths whose facing windows sit within the level window, using a level-j
bridge edge.  After the top round the surviving paths are more than
n/2 apart, so almost everything sits on one path; if that path has
fewer than s edges the run ends in an explicit diagnosis instead of a
certificate.

The q-color route is the same pipeline run inside the largest class of
the (q-1)-dimensional profile signature, whose internal edges all wear
color q-1.

The recursive route extracts from vertex colorings: each depth-1 block
donates its plurality color class as a path, and at depth l the copies
whose extracted color wins the plurality are spliced left to right
through the cross-set bridges, trimming at most width-1 vertices per
junction.  The desk bound it is checked against is
V_1 = ceil(A/b), V_l = ceil(A/b) * max(1, V_(l-1) - 2*(width - 1)),
final target V_depth - 1 edges.

Every route returns a Certificate: a found path (stored truncated to
its target), a verified avoiding coloring, or a structured failure
diagnosis saying which guarantee broke and where.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import Mapping, Optional, Sequence

from .constructions import MulticolorParams, RecursiveMetadata, UpperBoundParams
from .core import (
    BLUE,
    RED,
    Edge,
    EdgeColoring,
    InputError,
    MonotonePath,
    OrderedGraph,
    VertexColoring,
    longest_mono_paths,
    path_profile,
)


class CertificateKind(str, Enum):
    FOUND_PATH = "found-path"
    AVOIDING = "avoiding-coloring"
    FAILURE = "construction-failure"


@dataclass(frozen=True)
class FailureDiagnosis:
    """Which guarantee broke: 'pigeonhole-size' (largest class too small
    to host the target), 'missing-bridge-edge' (a level check passed by
    sampling but the needed edge is absent), 'path-count' (too many
    paths survived the top round), or 'vertex-count' (the longest
    survivor is short)."""

    reason: str
    detail: str
    level: Optional[int] = None
    pair: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def to_dict(self) -> dict:
        return {
            "reason": self.reason,
            "detail": self.detail,
            "level": self.level,
            "pair": [list(side) for side in self.pair] if self.pair else None,
        }

    @staticmethod
    def from_dict(data: Mapping) -> "FailureDiagnosis":
        pair = data.get("pair")
        return FailureDiagnosis(
            data["reason"],
            data["detail"],
            data.get("level"),
            tuple(tuple(side) for side in pair) if pair else None,
        )


class GuaranteeViolation(RuntimeError):
    """Raised mid-pipeline when a construction guarantee fails to hold."""

    def __init__(self, diagnosis: FailureDiagnosis):
        super().__init__(f"{diagnosis.reason}: {diagnosis.detail}")
        self.diagnosis = diagnosis


@dataclass
class Certificate:
    """Outcome of one extraction run.

    For found paths, ``path`` is the prefix with min(target,
    found_length) edges and ``found_length`` the length before
    truncation.  For avoiding colorings, ``targets`` are the per-color
    target lengths none of which is met.  For failures, ``failure``
    carries the diagnosis.  ``trace`` is free-form JSON-safe context.
    """

    kind: CertificateKind
    color: Optional[int] = None
    target: Optional[int] = None
    found_length: Optional[int] = None
    path: Optional[tuple[int, ...]] = None
    targets: Optional[tuple[int, ...]] = None
    failure: Optional[FailureDiagnosis] = None
    trace: dict = field(default_factory=dict)

    @property
    def meets_target(self) -> bool:
        return (
            self.kind is CertificateKind.FOUND_PATH
            and self.found_length is not None
            and self.target is not None
            and self.found_length >= self.target
        )

    def validate(
        self,
        graph: OrderedGraph,
        edge_coloring: Optional[EdgeColoring] = None,
        vertex_coloring: Optional[VertexColoring] = None,
    ) -> None:
        """Re-check the certificate against the graph and coloring it
        was extracted from; raises InputError on any mismatch."""
        if self.kind is CertificateKind.FOUND_PATH:
            if self.path is None or self.color is None or self.target is None or self.found_length is None:
                raise InputError("found-path certificate is missing fields")
            expected = min(self.target, self.found_length) + 1
            if len(self.path) != expected:
                raise InputError(f"stored path has {len(self.path)} vertices, expected {expected}")
            mono = MonotonePath(self.path, color=self.color)
            mono.validate(graph, edge_coloring=edge_coloring, vertex_coloring=vertex_coloring)
        elif self.kind is CertificateKind.AVOIDING:
            if self.targets is None or edge_coloring is None:
                raise InputError("avoiding certificate needs targets and an edge coloring")
            achieved = [length for length, _ in longest_mono_paths(graph, edge_coloring)]
            for c, (got, want) in enumerate(zip(achieved, self.targets)):
                if got >= want:
                    raise InputError(f"color {c} reaches {got} >= target {want}; coloring does not avoid")
        elif self.kind is CertificateKind.FAILURE:
            if self.failure is None:
                raise InputError("failure certificate is missing its diagnosis")
        else:
            raise InputError(f"unknown certificate kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind.value,
            "color": self.color,
            "target": self.target,
            "found_length": self.found_length,
            "path": list(self.path) if self.path is not None else None,
            "targets": list(self.targets) if self.targets is not None else None,
            "failure": self.failure.to_dict() if self.failure else None,
            "trace": self.trace,
        }

    @staticmethod
    def from_dict(data: Mapping) -> "Certificate":
        return Certificate(
            kind=CertificateKind(data["kind"]),
            color=data.get("color"),
            target=data.get("target"),
            found_length=data.get("found_length"),
            path=tuple(data["path"]) if data.get("path") is not None else None,
            targets=tuple(data["targets"]) if data.get("targets") is not None else None,
            failure=FailureDiagnosis.from_dict(data["failure"]) if data.get("failure") else None,
            trace=dict(data.get("trace") or {}),
        )


def _found(color: int, target: int, vertices: Sequence[int], trace: dict) -> Certificate:
    found_length = len(vertices) - 1
    keep = min(target, found_length) + 1
    return Certificate(
        CertificateKind.FOUND_PATH,
        color=color,
        target=target,
        found_length=found_length,
        path=tuple(vertices[:keep]),
        trace=trace,
    )


@dataclass(frozen=True)
class PathCollection:
    """Vertex-disjoint increasing paths in left-to-right order (each
    path ends before the next one starts)."""

    paths: tuple[tuple[int, ...], ...]
    round_index: int = 0

    def __post_init__(self) -> None:
        prev_end = -1
        for p in self.paths:
            if not p or any(p[i] >= p[i + 1] for i in range(len(p) - 1)):
                raise InputError(f"path {p} is not strictly increasing")
            if p[0] <= prev_end:
                raise InputError(f"path starting at {p[0]} overlaps the previous one")
            prev_end = p[-1]

    @property
    def covered(self) -> int:
        return sum(len(p) for p in self.paths)


def pigeonhole_class(
    graph: OrderedGraph, coloring: EdgeColoring, r: int
) -> tuple[Optional[Certificate], Optional[tuple[int, ...]], dict]:
    """Split vertices by their longest-red-path profile.  Returns a red
    found-path certificate when some profile reaches r, otherwise the
    largest profile class (ties to the smaller value), which carries no
    red edge."""
    if r < 1:
        raise InputError(f"need r >= 1, got {r}")
    profile = path_profile(graph, coloring, RED)
    best = max(profile, default=0)
    if best >= r:
        lengths = longest_mono_paths(graph, coloring)
        length, witness = lengths[RED]
        assert witness is not None and length >= r
        trace = {"route": "red-profile", "profile_max": length}
        return _found(RED, r, witness.vertices, trace), None, trace
    classes: dict[int, list[int]] = {}
    for v, val in enumerate(profile):
        classes.setdefault(val, []).append(v)
    value, members = max(classes.items(), key=lambda kv: (len(kv[1]), -kv[0]))
    members_set = frozenset(members)
    for u, v in graph.edges:
        if u in members_set and v in members_set:
            assert coloring.color(u, v) != RED, f"red edge ({u}, {v}) inside one profile class"
    trace = {"route": "pigeonhole", "class_value": value, "class_size": len(members)}
    return None, tuple(sorted(members)), trace


def greedy_initial_paths(
    level0_edges: frozenset[Edge], class_vertices: Sequence[int], window: int
) -> PathCollection:
    """Chain class vertices into maximal runs whose consecutive gaps
    stay within the level-0 window; each link must be a level-0 edge."""
    paths: list[tuple[int, ...]] = []
    current: list[int] = []
    for v in class_vertices:
        if current and v - current[-1] <= window:
            if (current[-1], v) not in level0_edges:
                raise GuaranteeViolation(
                    FailureDiagnosis(
                        "missing-bridge-edge",
                        f"level-0 edge ({current[-1]}, {v}) absent at gap {v - current[-1]} <= {window}",
                        level=0,
                        pair=((current[-1],), (v,)),
                    )
                )
            current.append(v)
        else:
            if current:
                paths.append(tuple(current))
            current = [v]
    if current:
        paths.append(tuple(current))
    return PathCollection(tuple(paths), round_index=0)


def merge_round(
    collection: PathCollection,
    bridge_edges: frozenset[Edge],
    set_size: int,
    window: int,
    level_index: int,
) -> tuple[PathCollection, dict]:
    """One level of merging: drop paths of at most 2*set_size vertices
    (keep the longest, leftmost on ties, when that would drop all), then
    splice any consecutive pair whose facing set_size-windows span less
    than ``window``, bridging with a level edge and keeping the most of
    both sides.  A missing bridge is a guarantee violation."""
    short_cut = 2 * set_size
    kept = [p for p in collection.paths if len(p) > short_cut]
    removed = len(collection.paths) - len(kept)
    if not kept and collection.paths:
        best = max(collection.paths, key=len)
        kept = [best]
        removed = len(collection.paths) - 1
    merges = 0
    discarded_vertices = collection.covered - sum(len(p) for p in kept)
    i = 0
    while i + 1 < len(kept):
        p, q = kept[i], kept[i + 1]
        gap = q[set_size - 1] - p[len(p) - set_size]
        if gap >= window:
            i += 1
            continue
        link = None
        for pi in range(len(p) - 1, len(p) - set_size - 1, -1):
            for qi in range(set_size):
                if (p[pi], q[qi]) in bridge_edges:
                    link = (pi, qi)
                    break
            if link:
                break
        if link is None:
            raise GuaranteeViolation(
                FailureDiagnosis(
                    "missing-bridge-edge",
                    f"no level-{level_index} edge between the facing windows of two paths at gap {gap} < {window}",
                    level=level_index,
                    pair=(p[-set_size:], q[:set_size]),
                )
            )
        pi, qi = link
        discarded_vertices += (len(p) - 1 - pi) + qi
        kept[i : i + 2] = [p[: pi + 1] + q[qi:]]
        merges += 1
        i = 0
    out = PathCollection(tuple(kept), round_index=level_index)
    gaps = [
        kept[i + 1][set_size - 1] - kept[i][len(kept[i]) - set_size]
        for i in range(len(kept) - 1)
        if len(kept[i]) >= set_size and len(kept[i + 1]) >= set_size
    ]
    trace = {
        "level": level_index,
        "set_size": set_size,
        "window": window,
        "paths_in": len(collection.paths),
        "paths_removed": removed,
        "merges": merges,
        "paths_out": len(kept),
        "vertices_discarded": discarded_vertices,
        "covered": out.covered,
        "min_gap": min(gaps) if gaps else None,
    }
    return out, trace


def _merge_pipeline(
    graph: OrderedGraph,
    class_vertices: Sequence[int],
    levels: Sequence,
    trace: dict,
) -> tuple[int, ...]:
    """Shared merge machinery: initial level-0 runs, one round per
    random level, returns the longest surviving path (leftmost on
    ties)."""
    collection = greedy_initial_paths(graph.level_edges(0), class_vertices, levels[0].window)
    trace["initial_paths"] = len(collection.paths)
    trace["rounds"] = []
    n = graph.n
    for lp in levels[1:]:
        collection, round_trace = merge_round(
            collection, graph.level_edges(lp.index), lp.set_size, lp.window, lp.index
        )
        round_trace["max_paths_allowed"] = n // lp.window + 1
        trace["rounds"].append(round_trace)
    best = max(collection.paths, key=len)
    trace["final_paths"] = len(collection.paths)
    trace["final_covered"] = collection.covered
    trace["best_length"] = len(best) - 1
    return best


def _shortfall(
    graph: OrderedGraph,
    coloring: EdgeColoring,
    targets: Sequence[int],
    trace: dict,
    diagnosis: FailureDiagnosis,
) -> Certificate:
    """Extraction came up short: report a verified avoiding coloring
    when no color meets its target anywhere, else the diagnosis."""
    achieved = [length for length, _ in longest_mono_paths(graph, coloring)]
    trace["achieved"] = achieved
    if all(got < want for got, want in zip(achieved, targets)):
        return Certificate(
            CertificateKind.AVOIDING,
            targets=tuple(targets),
            trace=trace,
        )
    return Certificate(CertificateKind.FAILURE, targets=tuple(targets), failure=diagnosis, trace=trace)


def extract_two_color(
    graph: OrderedGraph, params: UpperBoundParams, coloring: EdgeColoring
) -> Certificate:
    """Run the two-color route on a leveled union: red certificate from
    the profile, or a blue path of s edges assembled inside the largest
    profile class."""
    if graph.levels is None:
        raise InputError("extraction needs a level-tagged graph")
    if coloring.q != 2:
        raise InputError(f"two-color extraction got q={coloring.q}")
    r, s = params.r, params.s
    cert, members, trace = pigeonhole_class(graph, coloring, r)
    if cert is not None:
        return cert
    assert members is not None
    if len(members) < s + 1:
        diagnosis = FailureDiagnosis(
            "pigeonhole-size",
            f"largest profile class has {len(members)} vertices, need {s + 1}",
        )
        return _shortfall(graph, coloring, (r, s), trace, diagnosis)
    try:
        best = _merge_pipeline(graph, members, params.levels, trace)
    except GuaranteeViolation as exc:
        return _shortfall(graph, coloring, (r, s), trace, exc.diagnosis)
    if len(best) - 1 >= s:
        return _found(BLUE, s, best, trace)
    top = params.levels[-1]
    allowed = graph.n // top.window + 1
    if trace["final_paths"] > allowed:
        diagnosis = FailureDiagnosis(
            "path-count",
            f"{trace['final_paths']} paths survive the top round, accounting allows {allowed}",
            level=top.index,
        )
    else:
        diagnosis = FailureDiagnosis(
            "vertex-count",
            f"longest surviving path has {len(best) - 1} edges, target {s}",
            level=top.index,
        )
    return _shortfall(graph, coloring, (r, s), trace, diagnosis)


def extract_multicolor(
    graph: OrderedGraph, params: MulticolorParams, coloring: EdgeColoring
) -> Certificate:
    """q-color route: a path of n edges in any color from the profiles,
    or the pipeline run in color q-1 inside the largest class of the
    (q-1)-color profile signature."""
    if graph.levels is None:
        raise InputError("extraction needs a level-tagged graph")
    n, q = params.n, params.q
    if coloring.q != q:
        raise InputError(f"coloring has {coloring.q} colors, params say {q}")
    profiles = [path_profile(graph, coloring, c) for c in range(q)]
    for c in range(q):
        best = max(profiles[c], default=0)
        if best >= n:
            lengths = longest_mono_paths(graph, coloring)
            length, witness = lengths[c]
            assert witness is not None and length >= n
            trace = {"route": f"profile-color-{c}", "profile_max": length}
            return _found(c, n, witness.vertices, trace)
    classes: dict[tuple[int, ...], list[int]] = {}
    for v in range(graph.n):
        sig = tuple(profiles[c][v] for c in range(q - 1))
        classes.setdefault(sig, []).append(v)
    sig, members = max(classes.items(), key=lambda kv: (len(kv[1]), tuple(-x for x in kv[0])))
    members_set = frozenset(members)
    for u, v in graph.edges:
        if u in members_set and v in members_set:
            assert coloring.color(u, v) == q - 1, f"edge ({u}, {v}) inside one signature class is not color {q - 1}"
    trace = {"route": "pigeonhole", "class_signature": list(sig), "class_size": len(members)}
    targets = tuple(n for _ in range(q))
    if len(members) < n + 1:
        diagnosis = FailureDiagnosis(
            "pigeonhole-size",
            f"largest signature class has {len(members)} vertices, need {n + 1}",
        )
        return _shortfall(graph, coloring, targets, trace, diagnosis)
    try:
        best_path = _merge_pipeline(graph, tuple(sorted(members)), params.levels, trace)
    except GuaranteeViolation as exc:
        return _shortfall(graph, coloring, targets, trace, exc.diagnosis)
    if len(best_path) - 1 >= n:
        return _found(q - 1, n, best_path, trace)
    top = params.levels[-1]
    allowed = graph.n // top.window + 1
    if trace["final_paths"] > allowed:
        diagnosis = FailureDiagnosis(
            "path-count",
            f"{trace['final_paths']} paths survive the top round, accounting allows {allowed}",
            level=top.index,
        )
    else:
        diagnosis = FailureDiagnosis(
            "vertex-count",
            f"longest surviving path has {len(best_path) - 1} edges, target {n}",
            level=top.index,
        )
    return _shortfall(graph, coloring, targets, trace, diagnosis)


def vertex_to_edge_reduction(
    graph: OrderedGraph, coloring: EdgeColoring, r: int
) -> tuple[Optional[Certificate], Optional[VertexColoring]]:
    """Turn a two-color edge coloring into an r-class vertex coloring by
    the red profile: either some profile reaches r (red certificate) or
    every class is internally red-free, so a path inside one class is
    all blue."""
    cert, members, trace = pigeonhole_class(graph, coloring, r)
    if cert is not None:
        return cert, None
    profile = path_profile(graph, coloring, RED)
    return None, VertexColoring(r, dict(enumerate(profile)))


def claim_bound(branch: int, b: int, depth: int, widths: Sequence[int]) -> int:
    """Desk bound on the edges of the path extracted from any b-vertex-
    coloring of the depth-``depth`` recursive graph."""
    if depth < 1 or branch < 1 or b < 1:
        raise InputError("branch, b, depth must be positive")
    if len(widths) < depth - 1:
        raise InputError(f"depth {depth} needs {depth - 1} widths, got {len(widths)}")
    verts = ceil(branch / b)
    for lvl in range(2, depth + 1):
        k = widths[lvl - 2]
        verts = ceil(branch / b) * max(1, verts - 2 * (k - 1))
    return verts - 1


def extract_recursive(
    graph: OrderedGraph, meta: RecursiveMetadata, coloring: VertexColoring
) -> Certificate:
    """Monochromatic-vertex path from the recursive family: plurality
    color class inside each depth-1 block, then at each depth splice the
    plurality-colored copies left to right through the bridges, trimming
    at most width-1 vertices per side of each junction.  Copies that
    cannot be bridged are skipped and counted in the trace."""
    if coloring.b < 1:
        raise InputError("vertex coloring must have at least one class")
    skipped: list[int] = []

    def extract(node: RecursiveMetadata) -> tuple[int, tuple[int, ...]]:
        if node.level == 1:
            groups: dict[int, list[int]] = {}
            for v in range(node.offset, node.offset + node.size):
                groups.setdefault(coloring.assignment[v], []).append(v)
            color, members = max(groups.items(), key=lambda kv: (len(kv[1]), -kv[0]))
            return color, tuple(sorted(members))
        results = [extract(child) for child in node.children]
        groups2: dict[int, list[int]] = {}
        for idx, (color, _p) in enumerate(results):
            groups2.setdefault(color, []).append(idx)
        color, copy_ids = max(groups2.items(), key=lambda kv: (len(kv[1]), -kv[0]))
        k = node.widths[node.level - 2]
        current = results[copy_ids[0]][1]
        last_copy = copy_ids[0]
        for j in copy_ids[1:]:
            q = results[j][1]
            bridge = node.bridges[(last_copy, j)]
            w_p = min(k, len(current))
            w_q = min(k, len(q))
            link = None
            for pi in range(len(current) - 1, len(current) - w_p - 1, -1):
                for qi in range(w_q):
                    if (current[pi], q[qi]) in bridge:
                        link = (pi, qi)
                        break
                if link:
                    break
            if link is None:
                skipped.append(j)
                continue
            pi, qi = link
            current = current[: pi + 1] + q[qi:]
            last_copy = j
        return color, current

    color, path = extract(meta)
    target = claim_bound(meta.branch, coloring.b, meta.level, meta.widths)
    trace = {
        "route": "recursive",
        "depth": meta.level,
        "branch": meta.branch,
        "widths": list(meta.widths),
        "skipped_copies": len(skipped),
    }
    return _found(color, target, path, trace)
