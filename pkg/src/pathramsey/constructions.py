"""Builders for the ordered host graphs used in the arrowing experiments.

Four families:

* windowed graphs, edge (u, v) present exactly when v - u <= window;
* leveled unions: a deterministic window graph at level 0 plus sparser
  random levels sampled inside doubling windows m_i at density p_i,
  where each random level must pass the small-set bridging check (any
  two disjoint sets of ``set_size`` vertices whose cross distances stay
  within the window are joined by an edge) before it is accepted;
* cross-set bipartite graphs: two consecutive classes of n vertices,
  sampled so that every pair of m-subsets taken from the two classes is
  joined by an edge;
* a recursive family whose depth-1 blocks are complete graphs on A
  vertices, and whose depth-l graphs place A copies of the depth-(l-1)
  graph side by side with a cross-set graph between every pair of
  copies.

The two schedules (two-color and q-color) share the leveled-union
builder; their parameter classes differ only in how the vertex count
and the windows are derived.  All schedule constants can be rescaled
through positive rational multipliers so the same machinery runs at
desk scale; the defaults reproduce the full-scale recipe, in which the
vertex count is 4*r*s, windows are 2^(i+7)*r*t^2, set sizes are
2^(i+3)*t, and densities are 2^-i with t = log2(s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Mapping, Optional, Sequence, Union

from .core import CapExceeded, Edge, InputError, OrderedGraph
from .seeds import derive_seed, rng_for

Rational = Union[int, str, Fraction]

DEFAULT_ALPHA_N = Fraction(4)
DEFAULT_ALPHA_L = Fraction(8)
DEFAULT_ALPHA_M = Fraction(128)
DEFAULT_ALPHA_P = Fraction(1)
RETRY_BUDGET = 100
EXHAUSTIVE_PAIR_BUDGET = 10**6
DEFAULT_SAMPLES = 100_000


class ParamsError(InputError):
    """Inconsistent or unusable schedule parameters."""


class ConstructionFailure(RuntimeError):
    """A sampled component failed its acceptance check within the retry budget."""

    def __init__(self, message: str, level: Optional[int] = None):
        super().__init__(message)
        self.level = level


def _as_fraction(value: Rational, name: str) -> Fraction:
    try:
        frac = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParamsError(f"{name} is not a rational: {value!r}") from exc
    if frac <= 0:
        raise ParamsError(f"{name} must be positive, got {frac}")
    return frac


def _ceil(value: Fraction) -> int:
    return -((-value.numerator) // value.denominator)


@dataclass(frozen=True)
class LevelParams:
    """One level of a union schedule: density p, set size, window."""

    index: int
    p: Fraction
    set_size: int
    window: int


def _schedule_levels(
    vertex_count: int,
    alpha_p: Fraction,
    set_size_base: Fraction,
    window_base: Fraction,
) -> tuple[LevelParams, ...]:
    """Levels 0..k with doubling windows; k is the unique index whose
    window lands in (vertex_count/2, vertex_count].

    Level 0 is always deterministic (p = 1); alpha_p rescales the
    densities of the random levels only.
    """
    levels: list[LevelParams] = []
    index = 0
    while True:
        window = max(1, _ceil(window_base * 2**index))
        if window > vertex_count:
            break
        set_size = max(1, _ceil(set_size_base * 2**index))
        p = Fraction(1) if index == 0 else min(Fraction(1), alpha_p / 2**index)
        levels.append(LevelParams(index, p, set_size, window))
        index += 1
        if index > 192:
            raise ParamsError("schedule does not terminate")
    if not levels:
        raise ParamsError(
            f"level-0 window {max(1, _ceil(window_base))} exceeds the vertex count {vertex_count}; no valid top level"
        )
    if 2 * levels[-1].window <= vertex_count:
        raise ParamsError("no window lands in (vertex_count/2, vertex_count]")
    return tuple(levels)


@dataclass(frozen=True)
class UpperBoundParams:
    """Two-color schedule for a leveled union hosting red-r / blue-s
    path extraction.

    Defaults are the full-scale constants; the alpha multipliers replace
    4 (vertex count), 8 (set sizes), 128 (windows), and 1 (densities).
    With all defaults in place s must be a power of two and t = log2(s);
    with any override, any s >= 2 is accepted and t = ceil(log2 s).
    """

    r: int
    s: int
    alpha_n: Fraction = DEFAULT_ALPHA_N
    alpha_l: Fraction = DEFAULT_ALPHA_L
    alpha_m: Fraction = DEFAULT_ALPHA_M
    alpha_p: Fraction = DEFAULT_ALPHA_P

    def __post_init__(self) -> None:
        for name in ("alpha_n", "alpha_l", "alpha_m", "alpha_p"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name), name))
        if not 2 <= self.r <= self.s:
            raise ParamsError(f"need 2 <= r <= s, got r={self.r}, s={self.s}")
        if self.is_default_scale and self.s & (self.s - 1):
            raise ParamsError(f"default scale requires s to be a power of two, got {self.s}")
        self.levels  # fail fast on an unschedulable combination

    @property
    def is_default_scale(self) -> bool:
        return (
            self.alpha_n == DEFAULT_ALPHA_N
            and self.alpha_l == DEFAULT_ALPHA_L
            and self.alpha_m == DEFAULT_ALPHA_M
            and self.alpha_p == DEFAULT_ALPHA_P
        )

    @property
    def t(self) -> int:
        return (self.s - 1).bit_length()

    @property
    def vertex_count(self) -> int:
        return _ceil(self.alpha_n * self.r * self.s)

    @cached_property
    def levels(self) -> tuple[LevelParams, ...]:
        t = self.t
        return _schedule_levels(
            self.vertex_count,
            self.alpha_p,
            self.alpha_l * t,
            self.alpha_m * self.r * t * t,
        )

    @property
    def top_level(self) -> int:
        return self.levels[-1].index


@dataclass(frozen=True)
class MulticolorParams:
    """q-color schedule: N = alpha_n * n^q vertices, windows
    2^(i+7) * n^(q-1) * t^tau with t = log2(n).

    ``tau`` selects the exponent on t in the windows (1 or 2, default
    2); with tau = 2 and q = 2 the schedule coincides with the
    two-color schedule at r = s = n.
    """

    n: int
    q: int
    tau: int = 2
    alpha_n: Fraction = DEFAULT_ALPHA_N
    alpha_l: Fraction = DEFAULT_ALPHA_L
    alpha_m: Fraction = DEFAULT_ALPHA_M
    alpha_p: Fraction = DEFAULT_ALPHA_P

    def __post_init__(self) -> None:
        for name in ("alpha_n", "alpha_l", "alpha_m", "alpha_p"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name), name))
        if self.q < 2:
            raise ParamsError(f"need q >= 2, got {self.q}")
        if self.n < 2:
            raise ParamsError(f"need n >= 2, got {self.n}")
        if self.tau not in (1, 2):
            raise ParamsError(f"tau must be 1 or 2, got {self.tau}")
        if self.is_default_scale:
            if self.n & (self.n - 1):
                raise ParamsError(f"default scale requires n to be a power of two, got {self.n}")
            if Fraction(self.vertex_count, self.n ** (self.q - 1)) < 4:
                raise ParamsError("vertex count below 4 * n^(q-1)")
        self.levels  # fail fast on an unschedulable combination

    @property
    def is_default_scale(self) -> bool:
        return (
            self.alpha_n == DEFAULT_ALPHA_N
            and self.alpha_l == DEFAULT_ALPHA_L
            and self.alpha_m == DEFAULT_ALPHA_M
            and self.alpha_p == DEFAULT_ALPHA_P
        )

    @property
    def t(self) -> int:
        return (self.n - 1).bit_length()

    @property
    def vertex_count(self) -> int:
        return _ceil(self.alpha_n * self.n**self.q)

    @cached_property
    def levels(self) -> tuple[LevelParams, ...]:
        t = self.t
        return _schedule_levels(
            self.vertex_count,
            self.alpha_p,
            self.alpha_l * t,
            self.alpha_m * self.n ** (self.q - 1) * t**self.tau,
        )

    @property
    def top_level(self) -> int:
        return self.levels[-1].index


def window_edges(n: int, window: int) -> frozenset[Edge]:
    if n < 0 or window < 0:
        raise InputError("vertex count and window must be non-negative")
    return frozenset((u, v) for u in range(n) for v in range(u + 1, min(u + window, n - 1) + 1))


def window_graph(n: int, window: int) -> OrderedGraph:
    """Edge (u, v) present exactly when v - u <= window.

    Edge count is sum over g = 1..window of max(0, n - g).
    """
    return OrderedGraph(n, window_edges(n, window))


def sample_level_graph(n: int, window: int, p: Union[float, Fraction], seed: int) -> OrderedGraph:
    """Each in-window pair kept independently with probability p,
    deterministically for a given seed.  p >= 1 keeps every pair."""
    if n < 0 or window < 0:
        raise InputError("vertex count and window must be non-negative")
    if p >= 1:
        return window_graph(n, window)
    prob = float(p)
    if prob < 0:
        raise InputError(f"density must be non-negative, got {p}")
    rng = rng_for(seed, "level-sample")
    rand = rng.random
    edges = set()
    for u in range(n):
        for v in range(u + 1, min(u + window, n - 1) + 1):
            if rand() < prob:
                edges.add((u, v))
    return OrderedGraph(n, frozenset(edges))


@dataclass
class LevelCheck:
    """Verdict of a bridging-property check.

    ``holds`` is one-sided in sampled mode: True means no violating
    pair was observed among ``pairs_checked`` draws.
    """

    holds: bool
    counterexample: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    mode: str
    pairs_checked: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "counterexample": [list(side) for side in self.counterexample] if self.counterexample else None,
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
        }


def _has_cross_edge(edges: frozenset[Edge], s1: Sequence[int], s2: Sequence[int]) -> bool:
    for u in s1:
        for v in s2:
            e = (u, v) if u < v else (v, u)
            if e in edges:
                return True
    return False


def _verify_exhaustive(graph: OrderedGraph, set_size: int, window: int, budget: int) -> LevelCheck:
    # Each unordered pair is enumerated once, with S1 holding the overall
    # minimum; S2 then lives in [max(S1) - window, min(S1) + window].
    n = graph.n
    edges = graph.edges
    checked = 0
    for s1 in combinations(range(n), set_size):
        s1_set = set(s1)
        lo = max(s1[-1] - window, s1[0] + 1, 0)
        hi = min(s1[0] + window, n - 1)
        if hi - lo + 1 < set_size:
            continue
        candidates = [v for v in range(lo, hi + 1) if v not in s1_set]
        if len(candidates) < set_size:
            continue
        for s2 in combinations(candidates, set_size):
            checked += 1
            if checked > budget:
                raise CapExceeded(f"exhaustive check exceeds the {budget}-pair budget")
            if not _has_cross_edge(edges, s1, s2):
                return LevelCheck(False, (s1, s2), "exhaustive", checked)
    return LevelCheck(True, None, "exhaustive", checked)


def _verify_sampled(graph: OrderedGraph, set_size: int, window: int, samples: int, seed: int) -> LevelCheck:
    n = graph.n
    edges = graph.edges
    rng = rng_for(seed, "level-verify")
    checked = 0
    for _ in range(samples):
        drawn = None
        for _attempt in range(20):
            x = rng.randrange(n)
            pool = range(x, min(n, x + 2 * window + 1))
            if len(pool) < set_size:
                continue
            s1 = sorted(rng.sample(pool, set_size))
            lo = max(0, s1[-1] - window)
            hi = min(n - 1, s1[0] + window)
            s1_set = set(s1)
            span = hi - lo + 1
            overlap = sum(1 for v in s1 if lo <= v <= hi)
            if span - overlap < set_size:
                continue
            # Rejection-sample S2 disjoint from S1; the overlap is tiny
            # relative to the span so a few redraws suffice.
            s2 = None
            for _redraw in range(20):
                cand = rng.sample(range(lo, hi + 1), set_size)
                if not s1_set.intersection(cand):
                    s2 = sorted(cand)
                    break
            if s2 is None:
                continue
            drawn = (tuple(s1), tuple(s2))
            break
        if drawn is None:
            continue
        checked += 1
        if not _has_cross_edge(edges, drawn[0], drawn[1]):
            return LevelCheck(False, drawn, "sampled", checked)
    return LevelCheck(True, None, "sampled", checked)


def exhaustive_pair_bound(n: int, set_size: int, window: int) -> int:
    """Cheap upper bound on the candidate pair count of the bridging check."""
    return comb(n, set_size) * comb(min(n, 2 * window + 1), set_size)


def verify_level_graph(
    graph: OrderedGraph,
    set_size: int,
    window: int,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    pair_budget: int = EXHAUSTIVE_PAIR_BUDGET,
) -> LevelCheck:
    """Check that any two disjoint ``set_size``-sets whose cross
    distances all stay within ``window`` are joined by an edge.

    Modes: "exhaustive" enumerates every candidate pair and raises
    CapExceeded past ``pair_budget``; "sampled" draws ``samples`` random
    candidate pairs (one-sided); "auto" picks exhaustive when the pair
    bound fits the budget and sampling otherwise.
    """
    if set_size < 1 or window < 0:
        raise InputError("set size must be positive and window non-negative")
    if mode == "auto":
        mode = "exhaustive" if exhaustive_pair_bound(graph.n, set_size, window) <= pair_budget else "sampled"
    if mode == "exhaustive":
        return _verify_exhaustive(graph, set_size, window, pair_budget)
    if mode == "sampled":
        return _verify_sampled(graph, set_size, window, samples, seed)
    raise InputError(f"unknown verification mode {mode!r}")


@dataclass
class LevelReport:
    """Acceptance record for one level of a leveled union."""

    index: int
    p: Fraction
    set_size: int
    window: int
    edges: int
    edge_bound: Fraction
    attempts: int
    check: LevelCheck

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "p": str(self.p),
            "set_size": self.set_size,
            "window": self.window,
            "edges": self.edges,
            "edge_bound": float(self.edge_bound),
            "attempts": self.attempts,
            "check": self.check.to_dict(),
        }


@dataclass
class UnionConstruction:
    graph: OrderedGraph
    seed: int
    level_reports: tuple[LevelReport, ...]

    def to_report_dict(self) -> dict:
        return {
            "schema": 1,
            "seed": self.seed,
            "vertex_count": self.graph.n,
            "edges": self.graph.edge_count,
            "levels": [rep.to_dict() for rep in self.level_reports],
        }


def build_leveled_union(
    vertex_count: int,
    levels: Sequence[LevelParams],
    seed: int,
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
) -> UnionConstruction:
    """Assemble the union of all levels, resampling each random level
    until it passes both its edge bound (twice the expected in-window
    count) and its bridging check.  Raises ConstructionFailure naming
    the level when the retry budget runs out."""
    tags: dict[Edge, set[int]] = {}
    reports: list[LevelReport] = []
    for lp in levels:
        edge_bound = 2 * vertex_count * lp.window * lp.p
        accepted: Optional[OrderedGraph] = None
        attempts = 0
        check: Optional[LevelCheck] = None
        while attempts < retry_budget:
            attempts += 1
            level_seed = derive_seed(seed, "level", lp.index, attempts - 1)
            candidate = sample_level_graph(vertex_count, lp.window, lp.p, level_seed)
            if candidate.edge_count > edge_bound:
                continue
            if lp.p >= 1:
                # The full window graph joins any in-window pair, so two
                # sets within the window always carry a cross edge.
                check = LevelCheck(True, None, "deterministic", 0)
            else:
                check = verify_level_graph(
                    candidate,
                    lp.set_size,
                    lp.window,
                    "auto",
                    samples=samples,
                    seed=derive_seed(seed, "verify", lp.index, attempts - 1),
                )
            if check.holds:
                accepted = candidate
                break
            if lp.p >= 1:
                break
        if accepted is None or check is None:
            raise ConstructionFailure(
                f"level {lp.index} failed its acceptance checks in {attempts} attempts",
                level=lp.index,
            )
        reports.append(
            LevelReport(lp.index, lp.p, lp.set_size, lp.window, accepted.edge_count, edge_bound, attempts, check)
        )
        for e in accepted.edges:
            tags.setdefault(e, set()).add(lp.index)
    levels_map = {e: frozenset(ts) for e, ts in tags.items()}
    graph = OrderedGraph(vertex_count, frozenset(tags), levels=levels_map)
    return UnionConstruction(graph, seed, tuple(reports))


def build_union_construction(
    params: UpperBoundParams,
    seed: int,
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
) -> UnionConstruction:
    return build_leveled_union(params.vertex_count, params.levels, seed, samples, retry_budget)


def build_multicolor_construction(
    params: MulticolorParams,
    seed: int,
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
) -> UnionConstruction:
    return build_leveled_union(params.vertex_count, params.levels, seed, samples, retry_budget)


def cross_probability(n: int, m: int) -> float:
    """Density used for cross-set graphs: min(1, 2*ln(e*n/m)/m)."""
    return min(1.0, 2.0 * (math.log(n / m) + 1.0) / m)


def verify_cross_graph(
    graph: OrderedGraph,
    n: int,
    m: int,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    pair_budget: int = EXHAUSTIVE_PAIR_BUDGET,
) -> LevelCheck:
    """Check that every pair of m-subsets of the two classes (0..n-1 and
    n..2n-1) is joined by an edge."""
    if mode == "auto":
        mode = "exhaustive" if comb(n, m) ** 2 <= pair_budget else "sampled"
    edges = graph.edges
    if mode == "exhaustive":
        if comb(n, m) ** 2 > pair_budget:
            raise CapExceeded(f"exhaustive check exceeds the {pair_budget}-pair budget")
        checked = 0
        for s1 in combinations(range(n), m):
            for s2 in combinations(range(n, 2 * n), m):
                checked += 1
                if not _has_cross_edge(edges, s1, s2):
                    return LevelCheck(False, (s1, s2), "exhaustive", checked)
        return LevelCheck(True, None, "exhaustive", checked)
    if mode == "sampled":
        rng = rng_for(seed, "cross-verify")
        for checked in range(1, samples + 1):
            s1 = tuple(sorted(rng.sample(range(n), m)))
            s2 = tuple(sorted(rng.sample(range(n, 2 * n), m)))
            if not _has_cross_edge(edges, s1, s2):
                return LevelCheck(False, (s1, s2), "sampled", checked)
        return LevelCheck(True, None, "sampled", samples)
    raise InputError(f"unknown verification mode {mode!r}")


@dataclass
class CrossConstruction:
    """A verified cross-set bipartite graph on 2n vertices."""

    graph: OrderedGraph
    n: int
    m: int
    p: float
    seed: int
    attempts: int
    edge_bound: float
    check: LevelCheck

    def to_report_dict(self) -> dict:
        return {
            "schema": 1,
            "class_size": self.n,
            "subset_size": self.m,
            "p": self.p,
            "seed": self.seed,
            "attempts": self.attempts,
            "edges": self.graph.edge_count,
            "edge_bound": self.edge_bound,
            "check": self.check.to_dict(),
        }


def sample_cross_graph(
    n: int,
    m: int,
    seed: int,
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
) -> CrossConstruction:
    """Sample a bipartite graph between classes 0..n-1 and n..2n-1 at the
    cross density and resample until every pair of m-subsets is joined
    (verified exhaustively when feasible, else by sampling).

    Requires 1 <= m <= n/2.  Edge count is capped at twice its
    expectation n^2 * p.
    """
    if not 1 <= m <= n // 2:
        raise InputError(f"need 1 <= m <= n/2, got m={m}, n={n}")
    p = cross_probability(n, m)
    edge_bound = 2.0 * n * n * p
    attempts = 0
    while attempts < retry_budget:
        attempts += 1
        rng = rng_for(derive_seed(seed, "cross", attempts - 1), "cross-sample")
        rand = rng.random
        edges = set()
        if p >= 1:
            edges = {(u, v) for u in range(n) for v in range(n, 2 * n)}
        else:
            for u in range(n):
                for v in range(n, 2 * n):
                    if rand() < p:
                        edges.add((u, v))
        if len(edges) > edge_bound:
            continue
        graph = OrderedGraph(2 * n, frozenset(edges))
        if p >= 1:
            check = LevelCheck(True, None, "deterministic", 0)
        else:
            check = verify_cross_graph(
                graph, n, m, "auto", samples=samples, seed=derive_seed(seed, "cross-verify", attempts - 1)
            )
        if check.holds:
            return CrossConstruction(graph, n, m, p, seed, attempts, edge_bound, check)
        if p >= 1:
            break
    raise ConstructionFailure(f"cross-set graph ({n}, {m}) failed its checks in {attempts} attempts")


@dataclass(frozen=True)
class RecursiveParams:
    """Geometry of the recursive family.

    ``branch`` (A), ``depth``, and the bridge widths k_1..k_(depth-1)
    default to the full-scale recipe driven by b and s: depth is
    ceil(sqrt(ln s)), A is 2b * e^sqrt(ln s) rounded up to the next
    multiple of 2b, and k_l is (A / 10b)^l rounded to the nearest
    integer with floor 1.  Any of them can be overridden directly,
    in which case s is not needed; the scale multipliers rescale the
    defaults instead.
    """

    b: int
    s: Optional[int] = None
    depth: Optional[int] = None
    branch: Optional[int] = None
    bridge_widths: Optional[tuple[int, ...]] = None
    branch_scale: Fraction = Fraction(1)
    width_scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "branch_scale", _as_fraction(self.branch_scale, "branch_scale"))
        object.__setattr__(self, "width_scale", _as_fraction(self.width_scale, "width_scale"))
        if self.b < 1:
            raise ParamsError(f"need b >= 1, got {self.b}")
        if self.bridge_widths is not None:
            object.__setattr__(self, "bridge_widths", tuple(int(k) for k in self.bridge_widths))
        needs_s = self.depth is None or self.branch is None or self.bridge_widths is None
        if needs_s and (self.s is None or self.s < 2):
            raise ParamsError("s >= 2 is required unless depth, branch, and bridge widths are all given")
        if self.resolved_depth < 1:
            raise ParamsError(f"depth must be at least 1, got {self.resolved_depth}")
        if self.resolved_branch < 2:
            raise ParamsError(f"branch must be at least 2, got {self.resolved_branch}")
        widths = self.resolved_widths
        if len(widths) != self.resolved_depth - 1 or any(k < 1 for k in widths):
            raise ParamsError(f"need {self.resolved_depth - 1} positive bridge widths, got {widths}")
        for lvl, k in enumerate(widths, start=1):
            if 2 * k > self.resolved_branch**lvl:
                raise ParamsError(f"bridge width k_{lvl} = {k} exceeds half the copy size {self.resolved_branch**lvl}")

    @property
    def resolved_depth(self) -> int:
        if self.depth is not None:
            return self.depth
        assert self.s is not None
        return max(1, math.ceil(math.sqrt(math.log(self.s))))

    @property
    def resolved_branch(self) -> int:
        if self.branch is not None:
            return self.branch
        assert self.s is not None
        raw = float(self.branch_scale) * 2 * self.b * math.exp(math.sqrt(math.log(self.s)))
        return 2 * self.b * math.ceil(raw / (2 * self.b))

    @property
    def resolved_widths(self) -> tuple[int, ...]:
        if self.bridge_widths is not None:
            return self.bridge_widths
        a = self.resolved_branch
        widths = []
        for lvl in range(1, self.resolved_depth):
            raw = float(self.width_scale) * (a / (10 * self.b)) ** lvl
            widths.append(max(1, int(raw + 0.5)))
        return tuple(widths)

    @property
    def vertex_count(self) -> int:
        return self.resolved_branch**self.resolved_depth


@dataclass(frozen=True, eq=False)
class RecursiveMetadata:
    """Copy layout of one block: the vertex interval [offset,
    offset + size), the child blocks in order, and the bridge edges
    between every pair of children (global vertex indices)."""

    level: int
    branch: int
    widths: tuple[int, ...]
    offset: int
    size: int
    children: tuple["RecursiveMetadata", ...]
    bridges: Mapping[tuple[int, int], frozenset[Edge]]


@dataclass
class RecursiveConstruction:
    graph: OrderedGraph
    meta: RecursiveMetadata
    seed: int
    bridge_checks: tuple[LevelCheck, ...]

    def edge_bound_shape(self, b: int) -> float:
        """A^(depth+1) * (20 b)^(depth-1) * depth * ln b, the shape the
        edge count is compared against (unit leading constant)."""
        a, d = self.meta.branch, self.meta.level
        return a ** (d + 1) * (20 * b) ** (d - 1) * d * math.log(b) if b > 1 else 0.0

    def implied_constant(self, b: int) -> Optional[float]:
        shape = self.edge_bound_shape(b)
        return self.graph.edge_count / shape if shape > 0 else None

    def to_report_dict(self, b: int) -> dict:
        return {
            "schema": 1,
            "seed": self.seed,
            "branch": self.meta.branch,
            "depth": self.meta.level,
            "bridge_widths": list(self.meta.widths),
            "vertex_count": self.graph.n,
            "edges": self.graph.edge_count,
            "edge_bound_shape": self.edge_bound_shape(b),
            "implied_constant": self.implied_constant(b),
            "bridge_checks": [c.to_dict() for c in self.bridge_checks],
        }


def build_recursive_graph(
    params: RecursiveParams,
    depth: Optional[int] = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
) -> RecursiveConstruction:
    """Build the recursive family to ``depth`` (default: the resolved
    depth).  Depth-1 blocks are complete graphs; at depth l, every pair
    of depth-(l-1) copies is joined by a verified cross-set graph of
    subset size k_(l-1).  Edges are tagged with their structural level:
    1 for block edges, l for bridges joining depth-(l-1) copies."""
    depth = params.resolved_depth if depth is None else depth
    if depth < 1:
        raise ParamsError(f"depth must be at least 1, got {depth}")
    a = params.resolved_branch
    widths = params.resolved_widths
    if depth - 1 > len(widths):
        raise ParamsError(f"depth {depth} needs {depth - 1} bridge widths, got {len(widths)}")
    tags: dict[Edge, frozenset[int]] = {}
    checks: list[LevelCheck] = []

    def build(level: int, offset: int, path: tuple[int, ...]) -> RecursiveMetadata:
        size = a**level
        if level == 1:
            for u in range(offset, offset + a):
                for v in range(u + 1, offset + a):
                    tags[(u, v)] = frozenset((1,))
            return RecursiveMetadata(1, a, widths[: depth - 1], offset, size, (), {})
        child_size = a ** (level - 1)
        children = tuple(build(level - 1, offset + i * child_size, path + (i,)) for i in range(a))
        k = widths[level - 2]
        bridges: dict[tuple[int, int], frozenset[Edge]] = {}
        for i in range(a):
            for j in range(i + 1, a):
                bridge_seed = derive_seed(seed, "bridge", *path, level, i, j)
                cross = sample_cross_graph(child_size, k, bridge_seed, samples=samples, retry_budget=retry_budget)
                checks.append(cross.check)
                off_i = offset + i * child_size
                off_j = offset + j * child_size
                mapped = frozenset(
                    (off_i + u, off_j + (v - child_size)) for u, v in cross.graph.edges
                )
                bridges[(i, j)] = mapped
                for e in mapped:
                    tags[e] = frozenset((level,))
        return RecursiveMetadata(level, a, widths[: depth - 1], offset, size, children, bridges)

    meta = build(depth, 0, ())
    graph = OrderedGraph(a**depth, frozenset(tags), levels=tags)
    return RecursiveConstruction(graph, meta, seed, tuple(checks))
