"""Repeated runs with fresh random generators, and ordering comparisons."""

from __future__ import annotations

import csv
import io
import random
import statistics
from dataclasses import asdict, dataclass, field

import numpy as np

from .basis import InternalError
from .groups import PGroup, Selection
from .jennings import jennings_basis_size
from .orderings import Ordering
from .pipeline import DEFAULT_SELECTION, run

# Bucket edges for d = eLL - eRLL, as tabulated for groups of order 32 and 64.
D_BUCKETS = {
    32: [(None, -1), (0, 0), (1, 3), (4, 6), (7, 9), (10, None)],
    64: [(None, -1), (0, 0), (1, 8), (9, 16), (17, 32), (33, None)],
}


@dataclass
class ExperimentReport:
    group: str
    ordering: str
    selection: str
    attempts: int
    seed: int
    sizes: list[int] = field(default_factory=list)

    @property
    def min(self) -> int:
        return min(self.sizes)

    @property
    def max(self) -> int:
        return max(self.sizes)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.sizes)

    @property
    def stddev(self) -> float:
        """Sample standard deviation (divisor attempts - 1); 0 for one attempt."""
        return statistics.stdev(self.sizes) if len(self.sizes) > 1 else 0.0

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(min=self.min, max=self.max, mean=self.mean, stddev=self.stddev)
        return d


def attempt_rng(seed: int, attempt: int) -> random.Random:
    """Independent stream per (seed, attempt)."""
    state = np.random.SeedSequence([seed, attempt]).generate_state(2)
    return random.Random(int(state[0]) << 32 | int(state[1]))


def run_experiment(G: PGroup, label: str, ordering: Ordering | str,
                   selection: Selection | str | None = None,
                   attempts: int = 20, seed: int = 0) -> ExperimentReport:
    if attempts < 1:
        raise ValueError("attempts must be at least 1")
    ordering = Ordering(ordering)
    if ordering is Ordering.JENNINGS:
        sel = "jennings"
    else:
        sel = Selection(selection or DEFAULT_SELECTION[ordering]).value
    report = ExperimentReport(label, ordering.value, sel, attempts, seed)
    for k in range(attempts):
        pres = run(G, ordering, None if ordering is Ordering.JENNINGS else sel,
                   seed=attempt_rng(seed, k))
        report.sizes.append(len(pres.basis))
    if ordering is Ordering.JENNINGS and set(report.sizes) != {jennings_basis_size(G.n)}:
        raise InternalError(f"{label}: Jennings basis sizes {sorted(set(report.sizes))} "
                            f"differ from {jennings_basis_size(G.n)}")
    return report


@dataclass
class Comparison:
    group: str
    order: int
    ell: int
    erll: int

    @property
    def d(self) -> int:
        return self.ell - self.erll


def compare_orderings(reports: list[ExperimentReport], orders: dict[str, int]) -> list[Comparison]:
    """eLL and eRLL per group: smallest size over all LL (resp. RLL) reports."""
    best: dict[tuple[str, str], int] = {}
    for r in reports:
        key = (r.group, r.ordering)
        best[key] = min(best.get(key, r.min), r.min)
    out = []
    for group in dict.fromkeys(r.group for r in reports):
        if (group, "ll") in best and (group, "rll") in best:
            out.append(Comparison(group, orders[group], best[group, "ll"], best[group, "rll"]))
    return out


def bucket_counts(comparisons: list[Comparison], order: int) -> list[tuple[str, int]]:
    edges = D_BUCKETS.get(order)
    ds = [c.d for c in comparisons if c.order == order]
    if edges is None:
        return [(f"d = {d}", ds.count(d)) for d in sorted(set(ds))]
    out = []
    for lo, hi in edges:
        if lo is None:
            name = f"d <= {hi}" if hi != -1 else "d < 0"
        elif hi is None:
            name = f"d >= {lo}"
        elif lo == hi:
            name = f"d = {lo}"
        else:
            name = f"{lo} <= d <= {hi}"
        out.append((name, sum((lo is None or d >= lo) and (hi is None or d <= hi) for d in ds)))
    return out


REPORT_FIELDS = ["group", "ordering", "selection", "attempts", "seed",
                 "min", "max", "mean", "stddev", "sizes"]


def reports_tsv(reports: list[ExperimentReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        w.writerow([r.group, r.ordering, r.selection, r.attempts, r.seed, r.min, r.max,
                    f"{r.mean:.4f}", f"{r.stddev:.4f}", ",".join(map(str, r.sizes))])
    return buf.getvalue()


def comparison_tsv(comparisons: list[Comparison]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(["group", "order", "eLL", "eRLL", "d"])
    for c in comparisons:
        w.writerow([c.group, c.order, c.ell, c.erll, c.d])
    return buf.getvalue()
