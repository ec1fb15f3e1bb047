"""One complete run: choose generators, find nontips, read off the basis."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .basis import (AlgebraContext, GrobnerBasis, NontipTree, build_context, grobner_basis,
                    nontip_action_matrices, nontips)
from .groups import PGroup, Selection, minimal_generators
from .jennings import jennings_pc_generators
from .orderings import Ordering, OrderingSpec

DEFAULT_SELECTION = {Ordering.LL: Selection.SMALLEST, Ordering.RLL: Selection.ARBITRARY}


@dataclass(eq=False)
class Presentation:
    group: PGroup
    spec: OrderingSpec
    ctx: AlgebraContext
    tree: NontipTree
    matrices: list[np.ndarray]
    basis: GrobnerBasis

    @property
    def generators(self) -> tuple[int, ...]:
        return self.ctx.generators


def choose_generators(G: PGroup, ordering: Ordering | str,
                      selection: Selection | str | None = None,
                      seed: int | random.Random | None = 0,
                      use_given: bool = False) -> tuple[list[int], list[int] | None]:
    """Generators (element indices) and, for Jennings, their dimensions.

    ``use_given`` keeps the group's defining generators for LL and RLL and
    makes the Jennings choice deterministic.
    """
    ordering = Ordering(ordering)
    if ordering is Ordering.JENNINGS:
        jg = jennings_pc_generators(G, None if use_given else seed)
        return jg.elements, jg.dims
    if use_given:
        return list(G.gens), None
    method = Selection(selection) if selection else DEFAULT_SELECTION[ordering]
    return minimal_generators(G, method, seed), None


def present(G: PGroup, ordering: Ordering | str, generators: Sequence[int],
            dims: Sequence[int] | None = None) -> Presentation:
    ordering = Ordering(ordering)
    ctx = build_context(G, generators)
    spec = OrderingSpec(ordering, ctx.alphabet_size,
                        tuple(dims) if ordering is Ordering.JENNINGS else None)
    tree = nontips(ctx, spec)
    matrices = nontip_action_matrices(ctx, tree)
    return Presentation(G, spec, ctx, tree, matrices, grobner_basis(ctx, tree, matrices))


def run(G: PGroup, ordering: Ordering | str, selection: Selection | str | None = None,
        seed: int | random.Random | None = 0, use_given: bool = False) -> Presentation:
    gens, dims = choose_generators(G, ordering, selection, seed, use_given)
    return present(G, ordering, gens, dims)
