"""Nontips, minimal tips and completely reduced Groebner bases for F_p[G].

The algebra generators are a_i = g_i - 1 for chosen group elements g_i.
Elements of F_p[G] are vectors in the group-element basis and a_i acts on
the right by ``e_x -> e_{x g_i} - e_x``.  Everything is decided by linear
algebra on these vectors; no rewriting is ever done.

Why deleting the first letter suffices for the minimal-tip test: if ``u``
is a nontip and ``u a`` is a tip, every proper contiguous subword of
``u a`` lies inside ``u`` or inside the suffix ``(u a)[1:]``.  Subwords of
nontips are nontips, so ``u a`` is minimal exactly when that suffix is a
nontip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .fplinalg import DTYPE, EchelonState, inverse, rref, unit_vector
from .groups import PGroup, generates
from .orderings import Ordering, OrderingSpec, Word, render, word_dimension


class NotGenerating(ValueError):
    pass


class InternalError(RuntimeError):
    """An invariant that the mathematics guarantees did not hold."""


class TooLargeForOracle(ValueError):
    pass


@dataclass(eq=False)
class AlgebraContext:
    group: PGroup
    generators: tuple[int, ...]
    right: np.ndarray                       # right[x, i] = index of x * g_i
    radical: list[tuple[np.ndarray, list[int]]] = field(repr=False)
    # radical[r] = (reduced basis rows of J^r, pivots); the last entry is J^N = 0

    @property
    def p(self) -> int:
        return self.group.p

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def alphabet_size(self) -> int:
        return len(self.generators)

    @property
    def nilpotency(self) -> int:
        """Smallest N with J^N = 0."""
        return len(self.radical) - 1

    @cached_property
    def matrices(self) -> list[np.ndarray]:
        """Dense |G| x |G| matrices of right multiplication by each a_i."""
        eye = np.eye(self.order, dtype=DTYPE)
        return [self.act_rows(eye, i) for i in range(self.alphabet_size)]

    def act(self, v: np.ndarray, i: int) -> np.ndarray:
        out = np.empty_like(v)
        out[self.right[:, i]] = v
        return (out - v) % self.p

    def act_rows(self, rows: np.ndarray, i: int) -> np.ndarray:
        out = np.empty_like(rows)
        out[:, self.right[:, i]] = rows
        return (out - rows) % self.p

    def identity(self) -> np.ndarray:
        return unit_vector(self.order, 0)

    def radical_contains(self, r: int, v: np.ndarray) -> bool:
        """Whether ``v`` lies in J^r."""
        rows, piv = self.radical[min(r, self.nilpotency)]
        if not piv:
            return not np.any(v % self.p)
        return not np.any((v - v[piv] @ rows) % self.p)


def build_context(G: PGroup, generators: Sequence[int]) -> AlgebraContext:
    gens = tuple(int(g) for g in generators)
    if not gens or any(not 0 <= g < G.order for g in gens):
        raise NotGenerating("generators must be element indices of the group")
    if not generates(G, gens):
        raise NotGenerating("the chosen elements do not generate the group")
    right = G.table[:, list(gens)]
    ctx = AlgebraContext(G, gens, right, [])
    layer = (np.eye(G.order, dtype=DTYPE), list(range(G.order)))
    ctx.radical.append(layer)
    while layer[1]:
        rows = layer[0]
        prods = np.concatenate([ctx.act_rows(rows, i) for i in range(len(gens))])
        layer = rref(prods, G.p)
        ctx.radical.append(layer)
    return ctx


def evaluate_word(ctx: AlgebraContext, w: Word) -> np.ndarray:
    v = ctx.identity()
    for a in w:
        v = ctx.act(v, a)
    return v


def radical_layers(ctx: AlgebraContext) -> list[int]:
    """dim J^r / J^{r+1} for r = 0 .. N-1."""
    dims = [len(piv) for _, piv in ctx.radical]
    return [a - b for a, b in zip(dims, dims[1:])]


@dataclass(eq=False)
class NontipTree:
    """The nontips as an array of path nodes with prefix-tree links.

    Array order is ascending for LL and descending for RLL and Jennings,
    so the empty word always sits at position 0.
    """

    spec: OrderingSpec
    words: list[Word]
    index: dict[Word, int]
    parent: list[int]
    which: list[int]
    children: list[list[int | None]]

    @classmethod
    def from_words(cls, spec: OrderingSpec, words: Sequence[Word]) -> "NontipTree":
        words = list(words)
        index = {w: i for i, w in enumerate(words)}
        if len(index) != len(words) or not words or words[0] != ():
            raise InternalError("nontip array must start at the empty word and be duplicate free")
        parent, which = [-1], [-1]
        children: list[list[int | None]] = [[None] * spec.alphabet_size for _ in words]
        for i, w in enumerate(words[1:], start=1):
            j = index.get(w[:-1])
            if j is None:
                raise InternalError(f"prefix of nontip {render(w)} is missing")
            parent.append(j)
            which.append(w[-1])
            children[j][w[-1]] = i
        return cls(spec, words, index, parent, which, children)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.index

    @property
    def lengths(self) -> list[int]:
        return [len(w) for w in self.words]

    def length_profile(self) -> list[int]:
        top = max(self.lengths)
        return [self.lengths.count(r) for r in range(top + 1)]

    def images(self, ctx: AlgebraContext) -> np.ndarray:
        """Rows are the nontip images in F_p[G], in array order."""
        out = np.zeros((len(self.words), ctx.order), dtype=DTYPE)
        out[0] = ctx.identity()
        for i in sorted(range(1, len(self.words)), key=lambda k: len(self.words[k])):
            out[i] = ctx.act(out[self.parent[i]], self.which[i])
        return out


def nontips_ll(ctx: AlgebraContext) -> NontipTree:
    """Greedy search through extensions of nontips in ascending LL order."""
    spec = OrderingSpec(Ordering.LL, ctx.alphabet_size)
    state = EchelonState(ctx.p, ctx.order)
    state.insert(ctx.identity())
    words: list[Word] = [()]
    frontier = [((), ctx.identity())]
    while len(words) < ctx.order:
        nxt = []
        for w, v in frontier:
            for a in range(ctx.alphabet_size):
                u = ctx.act(v, a)
                if u.any() and state.insert(u) is None:
                    words.append(w + (a,))
                    nxt.append((w + (a,), u))
        if not nxt:
            raise InternalError("ran out of candidate words before finding |G| nontips")
        frontier = nxt
    return NontipTree.from_words(spec, words)


def nontips_rll(ctx: AlgebraContext) -> NontipTree:
    """Layer-by-layer search: a length-r word is a tip iff it lies in the span
    of J^{r+1} and its length-r RLL predecessors."""
    spec = OrderingSpec(Ordering.RLL, ctx.alphabet_size)
    layers = radical_layers(ctx)
    words: list[Word] = [()]
    frontier = [((), ctx.identity())]
    for r in range(1, ctx.nilpotency):
        state = EchelonState(ctx.p, ctx.order)
        for row in ctx.radical[r + 1][0]:
            state.insert(row)
        cands = [(w + (a,), ctx.act(v, a)) for w, v in frontier
                 for a in range(ctx.alphabet_size)]
        cands.sort(key=lambda c: spec.key(c[0]))
        nxt = [(w, u) for w, u in cands if state.insert(u) is None]
        if len(nxt) != layers[r]:
            raise InternalError(f"found {len(nxt)} nontips of length {r}, expected {layers[r]}")
        words.extend(w for w, _ in nxt)
        frontier = nxt
    words.sort(key=spec.key, reverse=True)
    return NontipTree.from_words(spec, words)


def jennings_nontip_words(dims: Sequence[int], p: int) -> list[Word]:
    """All words a_n^{e_n} ... a_1^{e_1} with 0 <= e_i < p, lexicographically."""
    n = len(dims)
    words = []
    for exps in itertools.product(range(p), repeat=n):
        # exps[0] is the exponent of a_n
        words.append(tuple(a for k, e in enumerate(exps) for a in [n - 1 - k] * e))
    return sorted(words)


def nontips_jennings(ctx: AlgebraContext, dims: Sequence[int], verify: bool = True) -> NontipTree:
    """Nontips are known in closed form for Jennings generators."""
    spec = OrderingSpec(Ordering.JENNINGS, ctx.alphabet_size, tuple(dims))
    words = spec.sorted(jennings_nontip_words(dims, ctx.p), reverse=True)
    tree = NontipTree.from_words(spec, words)
    if verify:
        images = tree.images(ctx)
        state = EchelonState(ctx.p, ctx.order)
        for i in reversed(range(len(words))):
            if state.insert(images[i]) is not None:
                raise InternalError(
                    f"claimed nontip {render(words[i])} depends on its predecessors; "
                    "the generators are not Jennings pc-generators")
    return tree


def nontips(ctx: AlgebraContext, spec: OrderingSpec) -> NontipTree:
    if spec.kind is Ordering.LL:
        return nontips_ll(ctx)
    if spec.kind is Ordering.RLL:
        return nontips_rll(ctx)
    return nontips_jennings(ctx, spec.dims)


def minimal_tips(tree: NontipTree) -> list[Word]:
    out = []
    for w in tree.words:
        for a in range(tree.spec.alphabet_size):
            wa = w + (a,)
            if wa not in tree.index and wa[1:] in tree.index:
                out.append(wa)
    return tree.spec.sorted(out)


def nontip_action_matrices(ctx: AlgebraContext, tree: NontipTree) -> list[np.ndarray]:
    """Row j of matrix i expresses (nontip j) * a_i in the nontip basis."""
    B = tree.images(ctx)
    try:
        Binv = inverse(B, ctx.p)
    except ZeroDivisionError:
        raise InternalError("nontip images are not a basis") from None
    return [(ctx.act_rows(B, i) @ Binv) % ctx.p for i in range(ctx.alphabet_size)]


@dataclass
class GrobnerBasis:
    """Pairs (minimal tip w, nu(w)) with nu(w) a map nontip index -> residue.

    The elements are ``w - nu(w)``.  For RLL the basis is only complete
    together with all words of length >= N.
    """

    spec: OrderingSpec
    relations: list[tuple[Word, dict[int, int]]]
    nontips: list[Word]
    p: int
    nilpotency: int

    @property
    def alphabet_size(self) -> int:
        return self.spec.alphabet_size

    @property
    def needs_length_bound(self) -> bool:
        return self.spec.kind is Ordering.RLL

    @property
    def tips(self) -> list[Word]:
        return [w for w, _ in self.relations]

    def __len__(self) -> int:
        return len(self.relations)

    def nu(self, tip: Word) -> dict[Word, int]:
        """nu(tip) keyed by nontip word."""
        for w, coeffs in self.relations:
            if w == tip:
                return {self.nontips[j]: c for j, c in coeffs.items()}
        raise KeyError(render(tip))

    def element(self, i: int) -> dict[Word, int]:
        """The i-th basis element w - nu(w) as a formal sum."""
        w, coeffs = self.relations[i]
        out = {w: 1}
        for j, c in coeffs.items():
            out[self.nontips[j]] = (-c) % self.p
        return out


def grobner_basis(ctx: AlgebraContext, tree: NontipTree,
                  matrices: Sequence[np.ndarray]) -> GrobnerBasis:
    spec = tree.spec
    relations = []
    for w in minimal_tips(tree):
        row = matrices[w[-1]][tree.index[w[:-1]]]
        coeffs = {int(j): int(row[j]) for j in np.flatnonzero(row)}
        wkey = spec.key(w)
        for j in coeffs:
            if not spec.key(tree.words[j]) < wkey:
                raise InternalError(f"nu({render(w)}) involves the larger word "
                                    f"{render(tree.words[j])}")
        relations.append((w, coeffs))
    return GrobnerBasis(spec, relations, list(tree.words), ctx.p, ctx.nilpotency)


def reduce(ctx: AlgebraContext, tree: NontipTree, matrices: Sequence[np.ndarray],
           element: Mapping[Word, int]) -> dict[int, int]:
    """Normal form of a formal sum of words, as nontip index -> residue."""
    p = ctx.p
    total = np.zeros(len(tree), dtype=DTYPE)
    for w, c in element.items():
        v = unit_vector(len(tree), 0)
        for a in w:
            v = (v @ matrices[a]) % p
        total = (total + c * v) % p
    return {int(j): int(total[j]) for j in np.flatnonzero(total)}


def oracle_nontips(ctx: AlgebraContext, spec: OrderingSpec, max_order: int = 16,
                   max_alphabet: int = 4) -> list[Word]:
    """Brute-force nontips: every word that can be nonzero, in ascending order.

    Words of length >= N vanish, and so do Jennings words of dimension >= N;
    only those are skipped.  Returns the nontips in ascending order.
    """
    if ctx.order > max_order or spec.alphabet_size > max_alphabet:
        raise TooLargeForOracle(
            f"oracle limited to |G| <= {max_order} and at most {max_alphabet} generators")
    N = ctx.nilpotency
    words: list[Word] = []
    for length in range(N):
        words.extend(itertools.product(range(spec.alphabet_size), repeat=length))
    if spec.kind is Ordering.JENNINGS:
        words = [w for w in words if word_dimension(w, spec.dims) < N]
    images: dict[Word, np.ndarray] = {(): ctx.identity()}
    for w in words[1:]:
        images[w] = ctx.act(images[w[:-1]], w[-1])
    state = EchelonState(ctx.p, ctx.order)
    found = []
    for w in spec.sorted(words):
        if images[w].any() and state.insert(images[w]) is None:
            found.append(w)
            if len(found) == ctx.order:
                break
    return found
