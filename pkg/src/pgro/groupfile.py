"""Plain-text group files.

Lines starting with ``#`` are comments.  The first remaining line is either

    perm <degree> <num_generators>      followed by one generator per line,
                                        <degree> one-based images each
    table <order> <num_generators>      followed by <order> rows of the
                                        multiplication table (row x lists
                                        x*y for every y, one-based) and a
                                        line of one-based generator indices
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .groups import DEFAULT_MAX_ORDER, GroupError, PGroup, close_group, regular_action


class GroupFileError(ValueError):
    pass


def _rows(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    return out


def _ints(fields: list[str], count: int, what: str) -> list[int]:
    if len(fields) != count:
        raise GroupFileError(f"{what}: expected {count} entries, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GroupFileError(f"{what}: non-integer entry") from None


def parse_group_text(text: str) -> list[list[int]]:
    """Generator permutations (one-based) described by a group file."""
    rows = _rows(text)
    if not rows:
        raise GroupFileError("empty group file")
    head = rows[0]
    if len(head) != 3 or head[0] not in ("perm", "table"):
        raise GroupFileError("header must be 'perm <degree> <k>' or 'table <order> <k>'")
    size, k = _ints(head[1:], 2, "header")
    if size < 1 or k < 1:
        raise GroupFileError("header sizes must be positive")
    body = rows[1:]
    if head[0] == "perm":
        if len(body) != k:
            raise GroupFileError(f"expected {k} generator lines, got {len(body)}")
        return [_ints(r, size, f"generator {i + 1}") for i, r in enumerate(body)]
    if len(body) != size + 1:
        raise GroupFileError(f"expected {size} table rows and a generator line, got {len(body)} lines")
    table = [_ints(r, size, f"table row {i + 1}") for i, r in enumerate(body[:size])]
    gens = _ints(body[size], k, "generator line")
    try:
        return regular_action(table, gens, one_based=True)
    except GroupError as exc:
        raise GroupFileError(str(exc)) from None


def load_group_text(text: str, max_order: int = DEFAULT_MAX_ORDER) -> PGroup:
    return close_group(parse_group_text(text), one_based=True, max_order=max_order)


def load_group(path: str | Path, max_order: int = DEFAULT_MAX_ORDER) -> PGroup:
    return load_group_text(Path(path).read_text(), max_order=max_order)


def format_perm_file(perms: Sequence[Sequence[int]], comment: str = "") -> str:
    """Group file for one-based generator permutations."""
    lines = [f"# {c}" for c in comment.splitlines()]
    lines.append(f"perm {len(perms[0])} {len(perms)}")
    lines += [" ".join(map(str, p)) for p in perms]
    return "\n".join(lines) + "\n"


def format_table_file(table: Sequence[Sequence[int]], gens: Sequence[int],
                      comment: str = "") -> str:
    """Group file for a one-based multiplication table."""
    lines = [f"# {c}" for c in comment.splitlines()]
    lines.append(f"table {len(table)} {len(gens)}")
    lines += [" ".join(map(str, row)) for row in table]
    lines.append(" ".join(map(str, gens)))
    return "\n".join(lines) + "\n"
