"""Figures written next to the CLI's tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def catalan_figure(rows: list[dict], path: str) -> str:
    """Log-scale comparison of the Catalan-table columns against n."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ns = [r["n"] for r in rows]
    series = [
        ("catalan", "C(n+1)", "-", "o"),
        ("avoiders", "321-avoiders in S(n+1)", "--", "s"),
        ("strongly_special_classes", "strongly special classes", ":", "^"),
        ("hk_size", "|HK(linear A_n)|", "-.", "x"),
    ]
    for key, label, style, marker in series:
        pts = [(n, r[key]) for n, r in zip(ns, rows) if r.get(key) not in (None, "")]
        if pts:
            ax.plot(*zip(*pts), linestyle=style, marker=marker, label=label)
    sp = [(n, r["special_words"]) for n, r in zip(ns, rows) if r.get("special_words") not in (None, "")]
    if sp:
        ax.plot(*zip(*sp), linestyle="none", marker="D", label="special words (|K_n|)")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("count")
    ax.set_xticks(ns)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def class_sizes_figure(labels: list[str], sizes: list[int | None], path: str) -> str:
    """Bar chart of monoid sizes per graph class; infinite or unknown classes are hatched."""
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(labels) + 1.5), 4.0))
    finite = [s or 0 for s in sizes]
    top = max(finite + [1])
    heights = [s if s is not None else top * 1.1 for s in sizes]
    bars = ax.bar(range(len(labels)), heights, color="0.6")
    for bar, s in zip(bars, sizes):
        if s is None:
            bar.set_hatch("//")
            bar.set_facecolor("white")
            bar.set_edgecolor("0.3")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("|HK|")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def runtime_figure(ids: list[str], runtimes: list[float], outcomes: list[str], path: str) -> str:
    fig, ax = plt.subplots(figsize=(6.0, 3.5))
    colours = {"pass": "0.55", "fail": "black", "skipped": "white"}
    ax.barh(range(len(ids)), runtimes, color=[colours.get(o, "0.8") for o in outcomes], edgecolor="0.3")
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
