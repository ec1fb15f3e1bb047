"""Figures for experiment reports, written straight to files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .experiment import Comparison, ExperimentReport  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "svg.hashsalt": "pgro",
}

COLORS = {"ll": "#c0504d", "rll": "#4f81bd", "jennings": "#9bbb59"}


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    meta = {"Date": None} if path.suffix == ".svg" else {"Software": None}
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)
    return path


def plot_sizes(reports: list[ExperimentReport], path: str | Path) -> Path:
    """Min-max range and mean of basis sizes, one column of markers per group."""
    groups = list(dict.fromkeys(r.group for r in reports))
    combos = list(dict.fromkeys((r.ordering, r.selection) for r in reports))
    width = 0.8 / len(combos)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.55 * len(groups) + 1.5), 3.2))
        for k, (ordering, selection) in enumerate(combos):
            c = COLORS.get(ordering, "gray")
            hollow = selection == "smallest"
            xs, lo, hi, mean = [], [], [], []
            for r in reports:
                if (r.ordering, r.selection) == (ordering, selection):
                    xs.append(groups.index(r.group) - 0.4 + width * (k + 0.5))
                    lo.append(r.min)
                    hi.append(r.max)
                    mean.append(r.mean)
            ax.vlines(xs, lo, hi, color=c, lw=1.5)
            ax.plot(xs, mean, "o", color=c, ms=4, mfc="white" if hollow else c,
                    ls="none", label=f"{ordering}/{selection}")
        ax.set_xticks(range(len(groups)))
        ax.set_xticklabels(groups, rotation=60, ha="right")
        ax.set_ylabel("Groebner basis size")
        ax.set_yscale("log")
        ax.legend(frameon=False, ncol=2)
        return _save(fig, Path(path))


def plot_comparison(comparisons: list[Comparison], path: str | Path) -> Path:
    """Smallest LL versus smallest RLL basis size per group."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(comparisons) + 1.5), 3.2))
        xs = range(len(comparisons))
        ax.bar([x - 0.2 for x in xs], [c.ell for c in comparisons], 0.4,
               color=COLORS["ll"], label="eLL")
        ax.bar([x + 0.2 for x in xs], [c.erll for c in comparisons], 0.4,
               color=COLORS["rll"], label="eRLL")
        ax.set_xticks(list(xs))
        ax.set_xticklabels([c.group for c in comparisons], rotation=60, ha="right")
        ax.set_ylabel("smallest basis found")
        ax.legend(frameon=False)
        return _save(fig, Path(path))
