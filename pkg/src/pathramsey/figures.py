"""Matplotlib renderings of pipeline summaries and construction reports.

Figures are written straight to files (Agg backend, no display) so the
CLI can drop them next to the CSV and JSON outputs.
"""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

# Suppress the Software tag so PNG bytes depend only on the data.
_PNG_METADATA = {"Software": None}


def plot_trial_outcomes(rows: Sequence[Mapping], path: str) -> None:
    """Bar chart of certificate kinds plus a histogram of found path
    lengths, from pipeline summary rows."""
    kinds: dict[str, int] = {}
    lengths: list[int] = []
    for row in rows:
        kind = str(row["kind"])
        kinds[kind] = kinds.get(kind, 0) + 1
        if kind == "found-path" and row.get("found") not in (None, ""):
            lengths.append(int(row["found"]))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    labels = sorted(kinds)
    ax1.bar(labels, [kinds[k] for k in labels], color="#4878cf")
    ax1.set_ylabel("trials")
    ax1.set_title("certificate kinds")
    ax1.tick_params(axis="x", labelrotation=20)
    if lengths:
        ax2.hist(lengths, bins=min(20, max(1, len(set(lengths)))), color="#6acc65")
    ax2.set_xlabel("found path length (edges)")
    ax2.set_ylabel("trials")
    ax2.set_title("found lengths")
    fig.tight_layout()
    fig.savefig(path, metadata=_PNG_METADATA)
    plt.close(fig)


def plot_level_reports(levels: Sequence[Mapping], path: str) -> None:
    """Per-level edge counts against their acceptance bounds 2*n*m*p."""
    idx = [int(lv["index"]) for lv in levels]
    edges = [int(lv["edges"]) for lv in levels]
    bounds = [float(lv["edge_bound"]) for lv in levels]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    width = 0.4
    xs = range(len(idx))
    ax.bar([x - width / 2 for x in xs], edges, width=width, label="edges", color="#4878cf")
    ax.bar([x + width / 2 for x in xs], bounds, width=width, label="bound 2nmp", color="#d65f5f")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(i) for i in idx])
    ax.set_xlabel("level")
    ax.set_ylabel("edge count")
    ax.set_title("level edge counts vs bounds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata=_PNG_METADATA)
    plt.close(fig)
