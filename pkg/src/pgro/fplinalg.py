"""Dense linear algebra over the prime field F_p.

Vectors and matrices are plain ``numpy`` int64 arrays whose entries are
residues in ``[0, p)``; the modulus travels alongside as an argument or
inside an :class:`EchelonState`.  Everything is vectorised so a single
insertion into an echelon state costs a handful of numpy calls regardless
of the rank.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

DTYPE = np.int64


class FieldError(ValueError):
    """Rejected input: wrong length, wrong shape or entries out of range."""


def as_vector(entries: Iterable[int], p: int) -> np.ndarray:
    """Return ``entries`` as a vector of residues mod ``p``."""
    v = np.asarray(list(entries) if not isinstance(entries, np.ndarray) else entries,
                   dtype=DTYPE)
    if v.ndim != 1 or v.size == 0:
        raise FieldError("a vector needs a positive length")
    return v % p


def as_matrix(rows: Sequence[Sequence[int]] | np.ndarray, p: int) -> np.ndarray:
    m = np.asarray(rows, dtype=DTYPE)
    if m.ndim != 2:
        raise FieldError("a matrix must be two-dimensional")
    return m % p


def unit_vector(n: int, i: int) -> np.ndarray:
    v = np.zeros(n, dtype=DTYPE)
    v[i] = 1
    return v


def apply_matrix(m: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Row vector times matrix: ``v · m`` reduced mod ``p``."""
    if v.ndim != 1 or m.ndim != 2 or v.shape[0] != m.shape[0]:
        raise FieldError(f"cannot multiply vector of length {v.shape} by matrix {m.shape}")
    return (v @ m) % p


def rref(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivots)."""
    a = np.array(rows, dtype=DTYPE) % p
    if a.ndim != 2:
        raise FieldError("rref expects a matrix")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def span_dimension(vectors: Sequence[np.ndarray], p: int) -> int:
    """Rank of a list of vectors."""
    if len(vectors) == 0:
        return 0
    state = EchelonState(p, len(vectors[0]))
    for v in vectors:
        state.insert(v)
    return state.rank


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod ``p``; raises ``ZeroDivisionError`` if singular."""
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise FieldError("only square matrices have inverses")
    aug = np.concatenate([np.asarray(m, dtype=DTYPE) % p, np.eye(n, dtype=DTYPE)], axis=1)
    red, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular mod %d" % p)
    return red[:n, n:]


class EchelonState:
    """Incremental Gaussian elimination that remembers how to undo itself.

    Stored rows are kept fully reduced: every pivot column is zero in every
    other row.  Alongside each reduced row we keep its expression in terms of
    the vectors that were actually inserted, so a dependent vector can be
    written as a combination of those originals rather than of reduced rows.

    Originals are numbered 0, 1, ... in the order they were accepted.
    """

    def __init__(self, p: int, dim: int):
        if dim <= 0:
            raise FieldError("ambient dimension must be positive")
        self.p = p
        self.dim = dim
        self.rank = 0
        self._rows = np.zeros((dim, dim), dtype=DTYPE)
        self._trans = np.zeros((dim, dim), dtype=DTYPE)
        self._pivots = np.zeros(dim, dtype=np.intp)
        self.originals: list[np.ndarray] = []

    def _check(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=DTYPE)
        if v.shape != (self.dim,):
            raise FieldError(f"expected a vector of length {self.dim}, got shape {v.shape}")
        if v.size and (v.min() < 0 or v.max() >= self.p):
            raise FieldError(f"entries must be residues mod {self.p}")
        return v

    def _reduce(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        r, p = self.rank, self.p
        if r == 0:
            return v.copy(), np.zeros(0, dtype=DTYPE)
        c = v[self._pivots[:r]]
        residual = (v - c @ self._rows[:r]) % p
        combo = (c @ self._trans[:r, :r]) % p
        return residual, combo

    def express(self, v: np.ndarray) -> dict[int, int] | None:
        """Coefficients writing ``v`` in terms of the originals, or None."""
        v = self._check(v)
        residual, combo = self._reduce(v)
        if residual.any():
            return None
        return {int(j): int(combo[j]) for j in np.flatnonzero(combo)}

    def contains(self, v: np.ndarray) -> bool:
        residual, _ = self._reduce(self._check(v))
        return not residual.any()

    def insert(self, v: np.ndarray) -> dict[int, int] | None:
        """Add ``v`` to the row space.

        Returns None if ``v`` was independent (it becomes original number
        ``rank - 1``), otherwise the coefficient map over earlier originals.
        """
        v = self._check(v)
        residual, combo = self._reduce(v)
        nz = np.flatnonzero(residual)
        if nz.size == 0:
            return {int(j): int(combo[j]) for j in np.flatnonzero(combo)}
        p, r = self.p, self.rank
        q = nz[0]
        inv = pow(int(residual[q]), -1, p)
        row = (residual * inv) % p
        # residual = v - sum combo_j orig_j, so row = inv * (e_r - combo)
        trow = np.zeros(self.dim, dtype=DTYPE)
        trow[:r] = (-combo * inv) % p
        trow[r] = inv
        if r:
            f = self._rows[:r, q].copy()
            self._rows[:r] = (self._rows[:r] - np.outer(f, row)) % p
            self._trans[:r] = (self._trans[:r] - np.outer(f, trow)) % p
        self._rows[r] = row
        self._trans[r] = trow
        self._pivots[r] = q
        self.rank = r + 1
        self.originals.append(v.copy())
        return None

    def reduced_rows(self) -> tuple[np.ndarray, list[int]]:
        """Stored rows sorted by pivot column, with their pivots."""
        order = np.argsort(self._pivots[: self.rank], kind="stable")
        return self._rows[order].copy(), [int(c) for c in self._pivots[order]]

    def basis(self) -> np.ndarray:
        return self.reduced_rows()[0]


def echelon_insert(state: EchelonState, v: np.ndarray) -> dict[int, int] | None:
    return state.insert(v)
