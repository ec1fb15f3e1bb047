"""Words in the algebra generators and the three admissible orderings.

Words are tuples of zero-based generator indices; generator ``i`` renders
as ``a<i+1>``.  Lexicographic comparison reads from the left with ``a1``
the smallest letter.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]


class WordError(ValueError):
    pass


class Ordering(str, enum.Enum):
    LL = "ll"
    RLL = "rll"
    JENNINGS = "jennings"


def _neg(w: Word) -> tuple[int, ...]:
    return tuple(-a for a in w)


@dataclass(frozen=True)
class OrderingSpec:
    kind: Ordering
    alphabet_size: int
    dims: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Ordering(self.kind))
        if self.kind is Ordering.JENNINGS:
            if self.dims is None or len(self.dims) != self.alphabet_size:
                raise WordError("the Jennings ordering needs one dimension per generator")
            dims = tuple(int(d) for d in self.dims)
            if min(dims, default=1) < 1 or list(dims) != sorted(dims):
                raise WordError("Jennings dimensions must be positive and non-decreasing")
            object.__setattr__(self, "dims", dims)
        elif self.dims is not None:
            raise WordError("generator dimensions only apply to the Jennings ordering")

    @property
    def tag(self) -> str:
        return self.kind.value

    def check(self, w: Word) -> None:
        for a in w:
            if not 0 <= a < self.alphabet_size:
                raise WordError(f"letter {a} outside alphabet of size {self.alphabet_size}")

    def key(self, w: Word) -> tuple:
        """Sort key: ascending keys means ascending in this ordering."""
        if self.kind is Ordering.LL:
            return (len(w), w)
        if self.kind is Ordering.RLL:
            return (-len(w), _neg(w))
        return (-word_dimension(w, self.dims), len(w), _neg(w))

    def compare(self, w1: Word, w2: Word) -> int:
        """-1, 0 or 1 as w1 is smaller than, equal to or larger than w2."""
        self.check(w1)
        self.check(w2)
        k1, k2 = self.key(w1), self.key(w2)
        return (k1 > k2) - (k1 < k2)

    def sorted(self, words: Iterable[Word], reverse: bool = False) -> list[Word]:
        return sorted(words, key=self.key, reverse=reverse)


def compare(spec: OrderingSpec, w1: Word, w2: Word) -> int:
    return spec.compare(w1, w2)


def word_dimension(w: Word, dims: Sequence[int]) -> int:
    return sum(dims[a] for a in w)


def subwords_proper(w: Word) -> list[Word]:
    """Distinct contiguous proper subwords, the empty word included."""
    seen: dict[Word, None] = {}
    n = len(w)
    for length in range(n):
        for i in range(n - length + 1):
            seen.setdefault(w[i:i + length])
    return list(seen)


def render(w: Word) -> str:
    if not w:
        return "1"
    return "*".join(f"a{a + 1}" for a in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    out = []
    for part in text.split("*"):
        part = part.strip()
        if not part.startswith("a") or not part[1:].isdigit() or int(part[1:]) < 1:
            raise WordError(f"cannot parse letter {part!r}")
        out.append(int(part[1:]) - 1)
    return tuple(out)

