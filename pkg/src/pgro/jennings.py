"""Jennings series, Jennings pc-generators and the radical-layer polynomial."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .groups import (PGroup, Selection, Subgroup, commutator_subgroup, extend_generators,
                     make_rng, normal_closure, power_subgroup)


@dataclass(eq=False)
class JenningsSeries:
    """Dimension subgroups F_1 = G >= F_2 >= ... >= F_L = 1.

    ``subgroups[r - 1]`` is F_r; the last entry is the trivial group.
    """

    subgroups: list[Subgroup]

    @property
    def length(self) -> int:
        return len(self.subgroups)

    def __getitem__(self, r: int) -> Subgroup:
        """F_r, one-based; trivial beyond the end of the series."""
        if r < 1:
            raise IndexError("dimension subgroups start at F_1")
        if r > len(self.subgroups):
            return self.subgroups[-1]
        return self.subgroups[r - 1]

    def layer_counts(self, p: int) -> list[int]:
        """d_r for r = 1 .. L-1, where |F_r / F_{r+1}| = p**d_r."""
        out = []
        for a, b in zip(self.subgroups, self.subgroups[1:]):
            q = a.order // b.order
            d = 0
            while q > 1:
                q //= p
                d += 1
            out.append(d)
        return out


@dataclass
class JenningsGenerators:
    elements: list[int]
    dims: list[int]

    @property
    def layer_counts(self) -> list[int]:
        top = max(self.dims, default=0)
        return [self.dims.count(r) for r in range(1, top + 1)]


def jennings_series(G: PGroup) -> JenningsSeries:
    """F_r = [F_{r-1}, G] (F_{ceil(r/p)})^p, starting from F_1 = G."""
    series = [G.whole()]
    while series[-1].order > 1:
        r = len(series) + 1
        comm = commutator_subgroup(G, series[-1])
        pw = power_subgroup(G, series[math.ceil(r / G.p) - 1])
        series.append(normal_closure(G, set(comm.gens) | set(pw.gens)))
    return JenningsSeries(series)


def jennings_pc_generators(G: PGroup, seed: int | random.Random | None = 0,
                           series: JenningsSeries | None = None) -> JenningsGenerators:
    """Pick generators layer by layer so each block generates F_r / F_{r+1}.

    ``seed=None`` selects deterministically (lowest element index first).
    """
    if series is None:
        series = jennings_series(G)
    rng = None if seed is None else make_rng(seed)
    elements: list[int] = []
    dims: list[int] = []
    for r in range(1, series.length):
        upper, lower = series[r], series[r + 1]
        layer = extend_generators(G, lower, upper, Selection.ARBITRARY, rng)
        elements.extend(layer)
        dims.extend([r] * len(layer))
    return JenningsGenerators(elements, dims)


def layer_polynomial(d: list[int], p: int) -> list[int]:
    """Coefficients of prod_r (1 + t^r + ... + t^{(p-1)r})^{d_r}.

    ``d[r - 1]`` is the number of generators of dimension r.
    """
    poly = np.array([1], dtype=object)
    for r, count in enumerate(d, start=1):
        factor = np.zeros((p - 1) * r + 1, dtype=object)
        factor[::r] = 1
        for _ in range(count):
            poly = np.convolve(poly, factor)
    return [int(c) for c in poly]


def jennings_basis_size(n: int) -> int:
    """Size of every Jennings Groebner basis for a group of order p**n."""
    return n * (n + 1) // 2
