"""Command-line entry point for file-based, seeded experiments.

Subcommands: construct, adversary, extract, arrows, exact, game,
longest-path, verify, pipeline.  Everything is driven by flags (or a
config file of ``key = value`` lines via --config); no environment
variables are read.  All randomness flows from the single --seed via
labeled sub-seed derivation, so re-running a command with the same
flags reproduces graph and coloring files byte for byte.

Reports are JSON with a ``schema`` version field; graphs and colorings
use the line-oriented text formats from the formats module.  Errors
exit non-zero with a one-line JSON error report on stderr: exit 2 for
bad parameters or inputs, 3 for an exceeded cap, 4 for a construction
that failed its acceptance checks.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import figures
from .adversary import adversary_q_color, adversary_two_color
from .constructions import (
    DEFAULT_SAMPLES,
    RETRY_BUDGET,
    ConstructionFailure,
    CrossConstruction,
    MulticolorParams,
    ParamsError,
    RecursiveConstruction,
    RecursiveParams,
    UnionConstruction,
    UpperBoundParams,
    build_multicolor_construction,
    build_recursive_graph,
    build_union_construction,
    sample_cross_graph,
)
from .core import (
    CapExceeded,
    EdgeColoring,
    InputError,
    OrderedGraph,
    VertexColoring,
    complete_graph,
    longest_mono_paths,
    random_edge_coloring,
)
from .extraction import (
    Certificate,
    extract_multicolor,
    extract_recursive,
    extract_two_color,
)
from .formats import (
    coloring_from_text,
    edge_coloring_to_text,
    graph_from_text,
    graph_to_text,
    json_to_text,
    params_from_text,
    params_to_text,
    read_text,
    vertex_coloring_to_text,
    write_json,
    write_text,
)
from .oracle import arrows, arrows_q, min_arrowing_edges, vertex_game_value
from .seeds import derive_seed, rng_for

SUMMARY_COLUMNS = ["trial", "mode", "seed", "kind", "color", "target", "found", "valid", "failure"]


def _write_json(path: str, obj: dict) -> None:
    write_json(path, obj)


def _load_graph(path: str) -> OrderedGraph:
    return graph_from_text(read_text(path))


def _load_coloring(path: str):
    return coloring_from_text(read_text(path))


def _print_json(obj: dict) -> None:
    sys.stdout.write(json_to_text(obj))


# ---------------------------------------------------------------- params files


def _union_params_mapping(params: UpperBoundParams, seed: int) -> dict[str, str]:
    out = {
        "kind": "union",
        "r": str(params.r),
        "s": str(params.s),
        "alpha_n": str(params.alpha_n),
        "alpha_l": str(params.alpha_l),
        "alpha_m": str(params.alpha_m),
        "alpha_p": str(params.alpha_p),
        "seed": str(seed),
        "t": str(params.t),
        "vertex_count": str(params.vertex_count),
        "top_level": str(params.top_level),
    }
    for lp in params.levels:
        out[f"level.{lp.index}.p"] = str(lp.p)
        out[f"level.{lp.index}.set_size"] = str(lp.set_size)
        out[f"level.{lp.index}.window"] = str(lp.window)
    return out


def _multicolor_params_mapping(params: MulticolorParams, seed: int) -> dict[str, str]:
    out = {
        "kind": "multicolor",
        "n": str(params.n),
        "q": str(params.q),
        "tau": str(params.tau),
        "alpha_n": str(params.alpha_n),
        "alpha_l": str(params.alpha_l),
        "alpha_m": str(params.alpha_m),
        "alpha_p": str(params.alpha_p),
        "seed": str(seed),
        "t": str(params.t),
        "vertex_count": str(params.vertex_count),
        "top_level": str(params.top_level),
    }
    for lp in params.levels:
        out[f"level.{lp.index}.p"] = str(lp.p)
        out[f"level.{lp.index}.set_size"] = str(lp.set_size)
        out[f"level.{lp.index}.window"] = str(lp.window)
    return out


def _recursive_params_mapping(params: RecursiveParams, seed: int) -> dict[str, str]:
    out = {
        "kind": "recursive",
        "b": str(params.b),
        "depth": str(params.resolved_depth),
        "branch": str(params.resolved_branch),
        "widths": ",".join(str(k) for k in params.resolved_widths) or "-",
        "branch_scale": str(params.branch_scale),
        "width_scale": str(params.width_scale),
        "seed": str(seed),
        "vertex_count": str(params.vertex_count),
    }
    if params.s is not None:
        out["s"] = str(params.s)
    return out


def _cross_params_mapping(cons: CrossConstruction) -> dict[str, str]:
    return {
        "kind": "cross",
        "class_size": str(cons.n),
        "subset_size": str(cons.m),
        "seed": str(cons.seed),
        "vertex_count": str(2 * cons.n),
    }


def _check_echo(mapping: dict[str, str], key: str, expected: str) -> None:
    if key in mapping and mapping[key] != expected:
        raise InputError(f"params file says {key} = {mapping[key]}, resolved value is {expected}")


def params_from_file(path: str) -> tuple[str, object, int]:
    """Rebuild the schedule object recorded in a params file, cross-
    checking every echoed derived value against a fresh resolution."""
    mapping = params_from_text(read_text(path))
    kind = mapping.get("kind")
    seed = int(mapping.get("seed", "0"))
    if kind == "union":
        params = UpperBoundParams(
            int(mapping["r"]),
            int(mapping["s"]),
            alpha_n=Fraction(mapping.get("alpha_n", "4")),
            alpha_l=Fraction(mapping.get("alpha_l", "8")),
            alpha_m=Fraction(mapping.get("alpha_m", "128")),
            alpha_p=Fraction(mapping.get("alpha_p", "1")),
        )
    elif kind == "multicolor":
        params = MulticolorParams(
            int(mapping["n"]),
            int(mapping["q"]),
            tau=int(mapping.get("tau", "2")),
            alpha_n=Fraction(mapping.get("alpha_n", "4")),
            alpha_l=Fraction(mapping.get("alpha_l", "8")),
            alpha_m=Fraction(mapping.get("alpha_m", "128")),
            alpha_p=Fraction(mapping.get("alpha_p", "1")),
        )
    elif kind == "recursive":
        widths = mapping.get("widths", "-")
        params = RecursiveParams(
            int(mapping["b"]),
            s=int(mapping["s"]) if "s" in mapping else None,
            depth=int(mapping["depth"]) if "depth" in mapping else None,
            branch=int(mapping["branch"]) if "branch" in mapping else None,
            bridge_widths=tuple(int(x) for x in widths.split(",")) if widths != "-" else (),
            branch_scale=Fraction(mapping.get("branch_scale", "1")),
            width_scale=Fraction(mapping.get("width_scale", "1")),
        )
        _check_echo(mapping, "vertex_count", str(params.vertex_count))
        return kind, params, seed
    elif kind == "cross":
        return kind, (int(mapping["class_size"]), int(mapping["subset_size"])), seed
    else:
        raise InputError(f"params file has unknown kind {kind!r}")
    _check_echo(mapping, "t", str(params.t))
    _check_echo(mapping, "vertex_count", str(params.vertex_count))
    _check_echo(mapping, "top_level", str(params.top_level))
    for lp in params.levels:
        _check_echo(mapping, f"level.{lp.index}.p", str(lp.p))
        _check_echo(mapping, f"level.{lp.index}.set_size", str(lp.set_size))
        _check_echo(mapping, f"level.{lp.index}.window", str(lp.window))
    return kind, params, seed


# ---------------------------------------------------------------- construct


def _schedule_echo(params) -> dict:
    return {
        "schema": 1,
        "n": params.vertex_count,
        "t": params.t,
        "k": params.top_level,
        "levels": [
            {"index": lp.index, "p": str(lp.p), "set_size": lp.set_size, "window": lp.window}
            for lp in params.levels
        ],
    }


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    seed = args.seed
    if kind == "union":
        if args.r is None or args.s is None:
            raise InputError("union construction needs --r and --s")
        params = UpperBoundParams(
            args.r, args.s, alpha_n=args.alpha_n, alpha_l=args.alpha_l, alpha_m=args.alpha_m, alpha_p=args.alpha_p
        )
        if args.paper_echo:
            _print_json(_schedule_echo(params))
            return 0
        built = build_union_construction(params, seed, samples=args.samples, retry_budget=args.retry_budget)
        mapping = _union_params_mapping(params, seed)
    elif kind == "multicolor":
        if args.n is None or args.q is None:
            raise InputError("multicolor construction needs --n and --q")
        params = MulticolorParams(
            args.n,
            args.q,
            tau=args.tau,
            alpha_n=args.alpha_n,
            alpha_l=args.alpha_l,
            alpha_m=args.alpha_m,
            alpha_p=args.alpha_p,
        )
        if args.paper_echo:
            _print_json(_schedule_echo(params))
            return 0
        built = build_multicolor_construction(params, seed, samples=args.samples, retry_budget=args.retry_budget)
        mapping = _multicolor_params_mapping(params, seed)
    elif kind == "recursive":
        if args.b is None:
            raise InputError("recursive construction needs --b")
        widths = tuple(int(x) for x in args.widths.split(",")) if args.widths else None
        params = RecursiveParams(
            args.b,
            s=args.s,
            depth=args.depth,
            branch=args.branch,
            bridge_widths=widths,
            branch_scale=args.branch_scale,
            width_scale=args.width_scale,
        )
        if args.paper_echo:
            _print_json(
                {
                    "schema": 1,
                    "branch": params.resolved_branch,
                    "depth": params.resolved_depth,
                    "widths": list(params.resolved_widths),
                    "vertex_count": params.vertex_count,
                }
            )
            return 0
        built = build_recursive_graph(params, seed=seed, samples=args.samples, retry_budget=args.retry_budget)
        mapping = _recursive_params_mapping(params, seed)
    elif kind == "cross":
        if args.class_size is None or args.subset_size is None:
            raise InputError("cross construction needs --class-size and --subset-size")
        built = sample_cross_graph(
            args.class_size, args.subset_size, seed, samples=args.samples, retry_budget=args.retry_budget
        )
        mapping = _cross_params_mapping(built)
    else:
        raise InputError(f"unknown construction kind {kind!r}")

    out_dir = args.out
    if out_dir is None:
        raise InputError("--out is required unless --paper-echo is given")
    os.makedirs(out_dir, exist_ok=True)
    write_text(os.path.join(out_dir, "graph.og"), graph_to_text(built.graph))
    write_text(os.path.join(out_dir, "params.txt"), params_to_text(mapping))
    if isinstance(built, RecursiveConstruction):
        report = built.to_report_dict(args.b)
    else:
        report = built.to_report_dict()
    _write_json(os.path.join(out_dir, "report.json"), report)
    if isinstance(built, UnionConstruction):
        figures.plot_level_reports(
            [rep.to_dict() for rep in built.level_reports], os.path.join(out_dir, "levels.png")
        )
    _print_json({"schema": 1, "out": out_dir, "vertices": built.graph.n, "edges": built.graph.edge_count})
    return 0


# ---------------------------------------------------------------- adversary


def _adversary_report_json(report: dict) -> dict:
    plan = report["plan"]
    return {
        "schema": 1,
        "d": report["d"],
        "budget": report["budget"],
        "withinBudget": report["within_budget"],
        "edges": report["edges"],
        "achieved": report["achieved"],
        "avoided": report["avoided"],
        "u0Size": report["u0_size"],
        "layerCount": len(set(plan.layers.values())) if plan.layers else 0,
    }


def cmd_adversary(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    if args.q is not None:
        if args.n is None:
            raise InputError("--q needs --n")
        coloring, report = adversary_q_color(graph, args.n, args.q)
    else:
        if args.r is None or args.s is None:
            raise InputError("need --r and --s (or --q and --n)")
        coloring, report = adversary_two_color(graph, args.r, args.s, d=args.d)
    write_text(args.out, edge_coloring_to_text(coloring))
    payload = _adversary_report_json(report)
    if args.report:
        _write_json(args.report, payload)
    _print_json(payload)
    return 0


# ---------------------------------------------------------------- extract


def cmd_extract(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    kind, params, seed = params_from_file(args.params)
    coloring = _load_coloring(args.coloring)
    if kind == "union":
        if not isinstance(coloring, EdgeColoring):
            raise InputError("union extraction needs an edge coloring")
        cert = extract_two_color(graph, params, coloring)
        validate_args = {"edge_coloring": coloring}
    elif kind == "multicolor":
        if not isinstance(coloring, EdgeColoring):
            raise InputError("multicolor extraction needs an edge coloring")
        cert = extract_multicolor(graph, params, coloring)
        validate_args = {"edge_coloring": coloring}
    elif kind == "recursive":
        if not isinstance(coloring, VertexColoring):
            raise InputError("recursive extraction needs a vertex coloring")
        built = build_recursive_graph(params, seed=seed)
        if built.graph.edges != graph.edges or built.graph.n != graph.n:
            raise InputError("graph file does not match the construction recorded in the params file")
        cert = extract_recursive(graph, built.meta, coloring)
        validate_args = {"vertex_coloring": coloring}
    else:
        raise InputError(f"extraction is not defined for kind {kind!r}")
    validated = True
    try:
        cert.validate(graph, **validate_args)
    except InputError:
        validated = False
    payload = cert.to_dict()
    payload["validated"] = validated
    _write_json(args.out, payload)
    _print_json({"schema": 1, "kind": cert.kind.value, "validated": validated, "out": args.out})
    return 0 if validated else 1


# ---------------------------------------------------------------- oracles


def _parse_targets(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad targets list {text!r}") from exc


def cmd_arrows(args: argparse.Namespace) -> int:
    if (args.graph is None) == (args.complete is None):
        raise InputError("give exactly one of --graph or --complete")
    graph = complete_graph(args.complete) if args.complete is not None else _load_graph(args.graph)
    if args.targets:
        targets = _parse_targets(args.targets)
        result = arrows_q(graph, targets, state_cap=len(targets) ** args.edge_cap)
    else:
        if args.r is None or args.s is None:
            raise InputError("need --r and --s (or --targets)")
        result = arrows(graph, args.r, args.s, edge_cap=args.edge_cap)
    payload = {
        "schema": 1,
        "arrows": result.arrows,
        "targets": list(result.targets),
        "explored_states": result.explored_states,
        "witness": edge_coloring_to_text(result.witness) if result.witness else None,
    }
    if args.witness_out and result.witness:
        write_text(args.witness_out, edge_coloring_to_text(result.witness))
    _print_json(payload)
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    found = min_arrowing_edges(args.r, args.s, max_vertices=args.max_vertices, max_edges=args.max_edges)
    if found is None:
        payload = {"schema": 1, "value": None, "graph": None, "max_vertices": args.max_vertices}
    else:
        m, graph = found
        payload = {"schema": 1, "value": m, "graph": graph_to_text(graph), "max_vertices": args.max_vertices}
    _print_json(payload)
    return 0


def cmd_game(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    value, witness = vertex_game_value(graph, args.b, cap=args.cap)
    payload = {
        "schema": 1,
        "value": value,
        "witness": vertex_coloring_to_text(witness) if witness else None,
    }
    _print_json(payload)
    return 0


def cmd_longest_path(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    coloring = _load_coloring(args.coloring)
    if not isinstance(coloring, EdgeColoring):
        raise InputError("longest-path needs an edge coloring")
    results = longest_mono_paths(graph, coloring)
    payload = {
        "schema": 1,
        "lengths": [length for length, _ in results],
        "witnesses": [list(path.vertices) if path else None for _, path in results],
    }
    _print_json(payload)
    return 0


# ---------------------------------------------------------------- verify


def cmd_verify(args: argparse.Namespace) -> int:
    checks: list[dict] = []
    ok = True

    def record(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        checks.append({"check": name, "ok": passed, "detail": detail})

    graph = None
    try:
        text = read_text(args.graph)
        graph = graph_from_text(text)
        record("graph-parses", True, f"{graph.n} vertices, {graph.edge_count} edges")
        record("graph-round-trip", graph_to_text(graph) == text, "write-read-write identity")
    except (InputError, OSError) as exc:
        record("graph-parses", False, str(exc))

    coloring = None
    if args.coloring:
        try:
            text = read_text(args.coloring)
            coloring = coloring_from_text(text)
            record("coloring-parses", True, type(coloring).__name__)
            if isinstance(coloring, EdgeColoring):
                record("coloring-round-trip", edge_coloring_to_text(coloring) == text, "")
                if graph is not None:
                    try:
                        coloring.check_total(graph)
                        record("coloring-total", True, "covers every graph edge")
                    except InputError as exc:
                        record("coloring-total", False, str(exc))
            else:
                record("coloring-round-trip", vertex_coloring_to_text(coloring) == text, "")
        except (InputError, OSError) as exc:
            record("coloring-parses", False, str(exc))

    if args.params:
        try:
            params_from_file(args.params)
            record("params-consistent", True, "echoed values match a fresh resolution")
        except (InputError, OSError) as exc:
            record("params-consistent", False, str(exc))

    if args.certificate:
        try:
            cert = Certificate.from_dict(json.loads(read_text(args.certificate)))
            if graph is None:
                record("certificate-valid", False, "certificate given without a readable graph")
            else:
                kwargs = {}
                if isinstance(coloring, EdgeColoring):
                    kwargs["edge_coloring"] = coloring
                elif isinstance(coloring, VertexColoring):
                    kwargs["vertex_coloring"] = coloring
                cert.validate(graph, **kwargs)
                record("certificate-valid", True, cert.kind.value)
        except (InputError, OSError, ValueError, KeyError) as exc:
            record("certificate-valid", False, str(exc))

    _print_json({"schema": 1, "ok": ok, "checks": checks})
    return 0 if ok else 1


# ---------------------------------------------------------------- pipeline


def run_pipeline(
    out_dir: str,
    r: int,
    s: int,
    trials: int,
    seed: int,
    mode: str = "mix",
    alpha_n: str = "4",
    alpha_l: str = "1",
    alpha_m: str = "8/9",
    alpha_p: str = "1",
    samples: int = DEFAULT_SAMPLES,
    retry_budget: int = RETRY_BUDGET,
    figures_enabled: bool = True,
) -> list[dict]:
    """Construct one leveled union, then run ``trials`` color-extract-
    validate rounds against it, alternating random and adversarial
    colorings in mix mode.  Writes the graph, params, per-trial
    colorings and certificates, a CSV summary, and the report figures.
    Returns the summary rows."""
    if mode not in ("mix", "random", "adversary"):
        raise InputError(f"unknown pipeline mode {mode!r}")
    if trials < 1:
        raise InputError(f"need at least one trial, got {trials}")
    params = UpperBoundParams(r, s, alpha_n=alpha_n, alpha_l=alpha_l, alpha_m=alpha_m, alpha_p=alpha_p)
    os.makedirs(out_dir, exist_ok=True)
    for sub in ("colorings", "trials", "figures"):
        os.makedirs(os.path.join(out_dir, sub), exist_ok=True)
    built = build_union_construction(params, derive_seed(seed, "construct"), samples=samples, retry_budget=retry_budget)
    graph = built.graph
    write_text(os.path.join(out_dir, "graph.og"), graph_to_text(graph))
    write_text(os.path.join(out_dir, "params.txt"), params_to_text(_union_params_mapping(params, seed)))
    _write_json(os.path.join(out_dir, "construct_report.json"), built.to_report_dict())

    rows: list[dict] = []
    for trial in range(trials):
        if mode == "mix":
            trial_mode = "random" if trial % 2 == 0 else "adversary"
        else:
            trial_mode = mode
        adversary_payload = None
        if trial_mode == "random":
            trial_seed = derive_seed(seed, "coloring", trial)
            coloring = random_edge_coloring(graph, 2, rng_for(trial_seed, "trial"))
            seed_cell: object = trial_seed
        else:
            coloring, report = adversary_two_color(graph, r, s)
            adversary_payload = _adversary_report_json(report)
            seed_cell = ""
        cert = extract_two_color(graph, params, coloring)
        validated = True
        try:
            cert.validate(graph, edge_coloring=coloring)
        except InputError:
            validated = False
        write_text(os.path.join(out_dir, "colorings", f"trial_{trial:04d}.oc"), edge_coloring_to_text(coloring))
        trial_payload = {
            "schema": 1,
            "trial": trial,
            "mode": trial_mode,
            "seed": seed_cell if seed_cell != "" else None,
            "certificate": cert.to_dict(),
            "validated": validated,
        }
        if adversary_payload is not None:
            trial_payload["adversary"] = adversary_payload
        _write_json(os.path.join(out_dir, "trials", f"trial_{trial:04d}.json"), trial_payload)
        rows.append(
            {
                "trial": trial,
                "mode": trial_mode,
                "seed": seed_cell,
                "kind": cert.kind.value,
                "color": cert.color if cert.color is not None else "",
                "target": cert.target if cert.target is not None else "",
                "found": cert.found_length if cert.found_length is not None else "",
                "valid": "yes" if validated else "no",
                "failure": cert.failure.reason if cert.failure else "",
            }
        )

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SUMMARY_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    write_text(os.path.join(out_dir, "summary.csv"), buf.getvalue())

    if figures_enabled:
        figures.plot_trial_outcomes(rows, os.path.join(out_dir, "figures", "outcomes.png"))
        figures.plot_level_reports(
            [rep.to_dict() for rep in built.level_reports], os.path.join(out_dir, "figures", "levels.png")
        )
    return rows


def cmd_pipeline(args: argparse.Namespace) -> int:
    rows = run_pipeline(
        args.out,
        args.r,
        args.s,
        args.trials,
        args.seed,
        mode=args.mode,
        alpha_n=args.alpha_n,
        alpha_l=args.alpha_l,
        alpha_m=args.alpha_m,
        alpha_p=args.alpha_p,
        samples=args.samples,
        retry_budget=args.retry_budget,
        figures_enabled=not args.no_figures,
    )
    kinds: dict[str, int] = {}
    for row in rows:
        kinds[row["kind"]] = kinds.get(row["kind"], 0) + 1
    _print_json({"schema": 1, "out": args.out, "trials": len(rows), "kinds": kinds})
    failures = kinds.get("construction-failure", 0)
    return 0 if failures == 0 else 4


# ---------------------------------------------------------------- parser


def _add_alpha_flags(sub: argparse.ArgumentParser, alpha_m_default: str = "128") -> None:
    sub.add_argument("--alpha-n", default="4", help="vertex-count multiplier (rational)")
    sub.add_argument("--alpha-l", default="8", help="set-size multiplier (rational)")
    sub.add_argument("--alpha-m", default=alpha_m_default, help="window multiplier (rational)")
    sub.add_argument("--alpha-p", default="1", help="density multiplier for levels >= 1 (rational)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathramsey", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value file of flag defaults", default=None)
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("construct", help="build a host graph and write graph + params + report")
    c.add_argument("--kind", choices=["union", "multicolor", "recursive", "cross"], default="union")
    c.add_argument("--r", type=int, help="red path target (union)")
    c.add_argument("--s", type=int, help="blue path target (union) or scale driver (recursive)")
    c.add_argument("--n", type=int, help="per-color path target (multicolor)")
    c.add_argument("--q", type=int, help="color count (multicolor)")
    c.add_argument("--tau", type=int, default=2, choices=[1, 2], help="window exponent on t (multicolor)")
    c.add_argument("--b", type=int, help="vertex-color count the recursive family is built for")
    c.add_argument("--depth", type=int, help="recursion depth override")
    c.add_argument("--branch", type=int, help="copies per level override")
    c.add_argument("--widths", help="comma-separated bridge widths override")
    c.add_argument("--branch-scale", default="1", help="rational multiplier on the default branch")
    c.add_argument("--width-scale", default="1", help="rational multiplier on the default widths")
    c.add_argument("--class-size", type=int, help="class size (cross)")
    c.add_argument("--subset-size", type=int, help="joined subset size (cross)")
    _add_alpha_flags(c)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="sampled-verification draws")
    c.add_argument("--retry-budget", type=int, default=RETRY_BUDGET)
    c.add_argument("--paper-echo", action="store_true", help="print the resolved schedule without building")
    c.add_argument("--out", help="output directory")
    c.set_defaults(func=cmd_construct)

    a = subs.add_parser("adversary", help="color a graph to keep monochromatic paths short")
    a.add_argument("--graph", required=True)
    a.add_argument("--r", type=int, help="red target (two colors)")
    a.add_argument("--s", type=int, help="blue target (two colors)")
    a.add_argument("--d", type=int, help="high-indegree threshold override")
    a.add_argument("--q", type=int, help="color count (multicolor scheme)")
    a.add_argument("--n", type=int, help="per-color target (multicolor scheme)")
    a.add_argument("--out", required=True, help="coloring file to write")
    a.add_argument("--report", help="JSON report file")
    a.set_defaults(func=cmd_adversary)

    e = subs.add_parser("extract", help="run path extraction and write a certificate")
    e.add_argument("--graph", required=True)
    e.add_argument("--params", required=True)
    e.add_argument("--coloring", required=True)
    e.add_argument("--out", required=True, help="certificate JSON file")
    e.set_defaults(func=cmd_extract)

    ar = subs.add_parser("arrows", help="exact arrowing decision on a small graph")
    ar.add_argument("--graph")
    ar.add_argument("--complete", type=int, help="use the complete graph on N vertices")
    ar.add_argument("--r", type=int)
    ar.add_argument("--s", type=int)
    ar.add_argument("--targets", help="comma-separated per-color targets (q colors)")
    ar.add_argument("--edge-cap", type=int, default=30)
    ar.add_argument("--witness-out", help="write the avoiding coloring here when one exists")
    ar.set_defaults(func=cmd_arrows)

    ex = subs.add_parser("exact", help="restricted exact minimum edge count that forces arrowing")
    ex.add_argument("--r", type=int, required=True)
    ex.add_argument("--s", type=int, required=True)
    ex.add_argument("--max-vertices", type=int, default=7)
    ex.add_argument("--max-edges", type=int, default=None)
    ex.set_defaults(func=cmd_exact)

    g = subs.add_parser("game", help="exact vertex-coloring game value on a small graph")
    g.add_argument("--graph", required=True)
    g.add_argument("--b", type=int, required=True, help="number of vertex colors")
    g.add_argument("--cap", type=int, default=2**24, help="max colorings to enumerate")
    g.set_defaults(func=cmd_game)

    lp = subs.add_parser("longest-path", help="longest monotone path per color")
    lp.add_argument("--graph", required=True)
    lp.add_argument("--coloring", required=True)
    lp.set_defaults(func=cmd_longest_path)

    v = subs.add_parser("verify", help="check files parse, round-trip, and certify what they claim")
    v.add_argument("--graph", required=True)
    v.add_argument("--coloring")
    v.add_argument("--certificate")
    v.add_argument("--params")
    v.set_defaults(func=cmd_verify)

    p = subs.add_parser("pipeline", help="construct, color, extract, validate over many trials")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["mix", "random", "adversary"], default="mix")
    _add_alpha_flags(p, alpha_m_default="8/9")
    p.set_defaults(alpha_l="1")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--retry-budget", type=int, default=RETRY_BUDGET)
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pipeline)

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    # A config file supplies flag defaults; explicit flags win.  Keys use
    # flag spelling without the leading dashes.
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise InputError("--config needs a file path")
    mapping = params_from_text(read_text(argv[idx + 1]))
    extra: list[str] = []
    for key, value in mapping.items():
        flag = f"--{key}"
        if flag not in argv:
            extra.extend([flag, value])
    return argv[:idx] + argv[idx + 2 :] + extra


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParamsError, InputError) as exc:
        sys.stderr.write(json_to_text({"error": {"type": "bad-params", "message": str(exc)}}))
        return 2
    except CapExceeded as exc:
        sys.stderr.write(json_to_text({"error": {"type": "cap-exceeded", "message": str(exc)}}))
        return 3
    except ConstructionFailure as exc:
        sys.stderr.write(
            json_to_text({"error": {"type": "construction-failure", "message": str(exc), "level": exc.level}})
        )
        return 4


if __name__ == "__main__":
    sys.exit(main())
