"""Finite p-groups given by permutations.

A :class:`PGroup` stores its elements as rows of a permutation array,
enumerated breadth-first from the identity by right multiplication with
the defining generators.  Products are composed left to right: ``x * y``
means "apply x, then y", so the regular representation ``x -> x * g`` is
a homomorphism.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 2**20


class GroupError(ValueError):
    pass


class NotAPGroup(GroupError):
    pass


class TooLarge(GroupError):
    pass


class MalformedTable(GroupError):
    pass


class EmptyGroup(GroupError):
    pass


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k, k >= 1, or None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def _check_perm(images: Sequence[int], degree: int) -> np.ndarray:
    a = np.asarray(images, dtype=np.intp)
    if a.shape != (degree,) or sorted(a.tolist()) != list(range(degree)):
        raise GroupError(f"not a permutation of {degree} points: {list(images)}")
    return a


@dataclass(eq=False)
class PGroup:
    """A p-group of order ``p**n`` with elements indexed from the identity."""

    p: int
    n: int
    perms: np.ndarray            # (order, degree), zero-based images
    gens: tuple[int, ...]        # element indices of the defining generators
    right: np.ndarray            # (order, len(gens)): right[x, i] = index of x * gens[i]
    words: list[tuple[int, ...]] = field(repr=False)  # BFS word in the generators
    index: dict[bytes, int] = field(repr=False)

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def element(self, images: Sequence[int]) -> int:
        """Index of the element with the given zero-based images."""
        key = np.asarray(images, dtype=np.intp).tobytes()
        try:
            return self.index[key]
        except KeyError:
            raise GroupError("permutation is not in the group") from None

    @cached_property
    def table(self) -> np.ndarray:
        """Full multiplication table, ``table[x, y] = x * y``."""
        order = self.order
        t = np.empty((order, order), dtype=np.intp)
        col = np.arange(order)
        for y, w in enumerate(self.words):
            c = col
            for g in w:
                c = self.right[c, g]
            t[:, y] = c
        return t

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table != 0, axis=1)

    @cached_property
    def orders(self) -> np.ndarray:
        """Order of every element."""
        ar = np.arange(self.order)
        out = np.zeros(self.order, dtype=np.intp)
        cur = ar.copy()
        k = 1
        while not out.all():
            out[(cur == 0) & (out == 0)] = k
            cur = self.table[cur, ar]
            k += 1
        return out

    def mul(self, x: int, y: int) -> int:
        for g in self.words[y]:
            x = int(self.right[x, g])
        return x

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def power(self, x: int, k: int) -> int:
        r = 0
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def comm(self, x: int, y: int) -> int:
        """Commutator x^-1 y^-1 x y."""
        t = self.table
        return int(t[t[self.inverses[x], self.inverses[y]], t[x, y]])

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        t = self.table
        return int(t[t[self.inverses[g], x], g])

    def whole(self) -> Subgroup:
        return Subgroup(self, np.ones(self.order, dtype=bool), self.gens)

    def trivial(self) -> Subgroup:
        flags = np.zeros(self.order, dtype=bool)
        flags[0] = True
        return Subgroup(self, flags, ())


@dataclass(eq=False)
class Subgroup:
    group: PGroup
    flags: np.ndarray
    gens: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return int(self.flags.sum())

    @property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.flags)

    def __contains__(self, x: int) -> bool:
        return bool(self.flags[x])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subgroup) and bool(np.array_equal(self.flags, other.flags))

    def __le__(self, other: Subgroup) -> bool:
        return bool(np.all(other.flags[self.flags]))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order})"


def close_group(generators: Sequence[Sequence[int]], *, one_based: bool = False,
                max_order: int = DEFAULT_MAX_ORDER) -> PGroup:
    """Enumerate the group generated by ``generators`` breadth-first.

    Element 0 is the identity; new elements get the next index the first
    time they appear as ``x * g`` with x taken in index order and g in
    generator order.
    """
    if not generators:
        raise GroupError("need at least one generator")
    degree = len(generators[0])
    shift = 1 if one_based else 0
    gens = [_check_perm([i - shift for i in g], degree) for g in generators]

    ident = np.arange(degree, dtype=np.intp)
    perms = [ident]
    index = {ident.tobytes(): 0}
    words: list[tuple[int, ...]] = [()]
    right: list[list[int]] = []
    x = 0
    while x < len(perms):
        row = []
        px = perms[x]
        for i, g in enumerate(gens):
            y = g[px]
            key = y.tobytes()
            j = index.get(key)
            if j is None:
                j = len(perms)
                if j >= max_order:
                    raise TooLarge(f"group order exceeds {max_order}")
                index[key] = j
                perms.append(y)
                words.append(words[x] + (i,))
            row.append(j)
        right.append(row)
        x += 1

    order = len(perms)
    pk = prime_power(order)
    if pk is None:
        raise NotAPGroup(f"group of order {order} is not a nontrivial p-group")
    gen_idx = tuple(index[g.tobytes()] for g in gens)
    return PGroup(p=pk[0], n=pk[1], perms=np.array(perms), gens=gen_idx,
                  right=np.array(right, dtype=np.intp), words=words, index=index)


def regular_action(table: Sequence[Sequence[int]], generators: Iterable[int], *,
                   one_based: bool = False) -> list[list[int]]:
    """Right regular permutations ``x -> x * g`` for the chosen generators.

    ``table[x][y]`` is the product ``x * y``.  Returned permutations use the
    same indexing convention as the input.
    """
    shift = 1 if one_based else 0
    t = np.asarray(table, dtype=np.intp) - shift
    order = t.shape[0]
    if t.shape != (order, order):
        raise MalformedTable("multiplication table must be square")
    if t.min() < 0 or t.max() >= order:
        raise MalformedTable("table entries out of range")
    idents = [e for e in range(order) if np.array_equal(t[e], np.arange(order))]
    if not idents:
        raise MalformedTable("no identity row in table")
    e = idents[0]
    if not np.array_equal(t[:, e], np.arange(order)):
        raise MalformedTable("identity is not two-sided")
    out = []
    for g in generators:
        g -= shift
        if not 0 <= g < order:
            raise MalformedTable(f"generator {g + shift} out of range")
        col = t[:, g]
        if len(set(col.tolist())) != order:
            raise MalformedTable(f"right multiplication by {g + shift} is not a bijection")
        out.append([int(c) + shift for c in col])
    return out


def element_order(G: PGroup, x: int) -> int:
    return int(G.orders[x])


def subgroup_closure(G: PGroup, seeds: Iterable[int], base: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing ``seeds`` (and ``base``, if given)."""
    gens = list(base.gens) if base is not None else []
    for s in seeds:
        s = int(s)
        if s != 0 and s not in gens:
            gens.append(s)
    flags = np.zeros(G.order, dtype=bool)
    flags[0] = True
    if base is not None:
        flags |= base.flags
    if not gens:
        return Subgroup(G, flags, ())
    t = G.table
    frontier = np.flatnonzero(flags)
    gen_arr = np.asarray(gens, dtype=np.intp)
    while frontier.size:
        prod = np.unique(t[np.ix_(frontier, gen_arr)])
        new = prod[~flags[prod]]
        flags[new] = True
        frontier = new
    return Subgroup(G, flags, tuple(gens))


def normal_closure(G: PGroup, seeds: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup containing ``seeds``."""
    H = subgroup_closure(G, seeds)
    while True:
        conj = {G.conj(h, g) for h in H.gens for g in G.gens}
        missing = [c for c in conj if c not in H]
        if not missing:
            return H
        H = subgroup_closure(G, missing, base=H)


def commutator_subgroup(G: PGroup, H: Subgroup) -> Subgroup:
    """[H, G] for H normal in G."""
    t, inv = G.table, G.inverses
    hs = H.elements
    seeds: set[int] = set()
    for g in G.gens:
        seeds.update(t[t[inv[hs], inv[g]], t[hs, g]].tolist())
    return normal_closure(G, seeds)


def power_subgroup(G: PGroup, H: Subgroup) -> Subgroup:
    """Subgroup generated by p-th powers of elements of H."""
    hs = H.elements
    cur = hs.copy()
    for _ in range(G.p - 1):
        cur = G.table[cur, hs]
    return normal_closure(G, set(cur.tolist()))


def frattini(G: PGroup) -> Subgroup:
    """Frattini subgroup, as the normal closure of generator p-th powers and commutators."""
    seeds = {G.power(g, G.p) for g in G.gens}
    seeds.update(G.comm(g, h) for i, g in enumerate(G.gens) for h in G.gens[i + 1:])
    return normal_closure(G, seeds)


class Selection(str, enum.Enum):
    ARBITRARY = "arbitrary"
    SMALLEST = "smallest"


def make_rng(seed: int | random.Random | None) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def extend_generators(G: PGroup, start: Subgroup, target: Subgroup,
                      method: Selection, rng: random.Random | None) -> list[int]:
    """Grow ``start`` to ``target`` one random element at a time.

    With ``rng=None`` the lowest-index candidate is taken, which makes the
    choice deterministic.
    """
    H = start
    chosen: list[int] = []
    while H.order < target.order:
        cands = np.flatnonzero(target.flags & ~H.flags)
        if method is Selection.SMALLEST:
            ords = G.orders[cands]
            cands = cands[ords == ords.min()]
        g = int(cands[0]) if rng is None else int(rng.choice(cands.tolist()))
        chosen.append(g)
        H = subgroup_closure(G, [g], base=H)
    return chosen


def minimal_generators(G: PGroup, method: Selection | str = Selection.ARBITRARY,
                       seed: int | random.Random | None = 0) -> list[int]:
    """A minimal generating set chosen by the Frattini-quotient loop."""
    if G.order == 1:
        raise EmptyGroup("the trivial group has no generators")
    rng = make_rng(seed)
    return extend_generators(G, frattini(G), G.whole(), Selection(method), rng)


def generates(G: PGroup, elements: Iterable[int]) -> bool:
    return subgroup_closure(G, elements).order == G.order
