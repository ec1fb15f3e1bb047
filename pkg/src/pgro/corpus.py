"""The bundled corpus of small p-groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .groupfile import load_group_text
from .groups import PGroup


class CorpusError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    text: str
    order: int

    def group(self) -> PGroup:
        G = load_group_text(self.text)
        if G.order != self.order:
            raise CorpusError(f"{self.label}: closes to order {G.order}, expected {self.order}")
        return G


def _data():
    return resources.files("pgro") / "data"


@lru_cache(maxsize=None)
def load_corpus() -> tuple[CorpusEntry, ...]:
    """All bundled groups; each is closed once and its order checked."""
    entries = []
    for line in (_data() / "MANIFEST").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        label, order, name = line.split()
        entry = CorpusEntry(label, (_data() / name).read_text(), int(order))
        entry.group()
        entries.append(entry)
    return tuple(entries)


def corpus_entry(label: str) -> CorpusEntry:
    for e in load_corpus():
        if e.label == label:
            return e
    raise KeyError(f"no corpus group labelled {label!r}")


@lru_cache(maxsize=None)
def corpus_group(label: str) -> PGroup:
    return corpus_entry(label).group()
