"""Text dumps of nontips and Groebner bases."""

from __future__ import annotations

from .basis import GrobnerBasis, NontipTree
from .orderings import Ordering, render, parse_word


def nontips_text(tree: NontipTree, p: int, n: int, nilpotency: int) -> str:
    """Header ``nontips <p> <n> <k> <N> <ordering>``, then one node per line:
    index, length, word, parent index (-1 for the root), which child
    (one-based generator number, 0 for the root)."""
    spec = tree.spec
    lines = [f"nontips {p} {n} {spec.alphabet_size} {nilpotency} {spec.tag}"]
    if spec.kind is Ordering.JENNINGS:
        lines.append("# dims " + " ".join(map(str, spec.dims)))
    for i, w in enumerate(tree.words):
        lines.append(f"{i} {len(w)} {render(w)} {tree.parent[i]} {tree.which[i] + 1}")
    return "\n".join(lines) + "\n"


def read_nontips(text: str) -> tuple[dict, list]:
    """Parse a nontips dump into (header fields, list of node tuples)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    tag, p, n, k, N, ordering = rows[0]
    if tag != "nontips":
        raise ValueError("not a nontips file")
    header = {"p": int(p), "n": int(n), "alphabet_size": int(k), "N": int(N),
              "ordering": ordering}
    nodes = [(int(i), int(ln), parse_word(w), int(par), int(ch)) for i, ln, w, par, ch in rows[1:]]
    return header, nodes


def relation_text(basis: GrobnerBasis, i: int) -> str:
    tip, coeffs = basis.relations[i]
    key = basis.spec.key
    order = sorted(coeffs, key=lambda j: key(basis.nontips[j]), reverse=True)
    rhs = " + ".join(f"{coeffs[j]}*{render(basis.nontips[j])}" for j in order)
    return f"{render(tip)} = {rhs or '0'}"


def basis_text(basis: GrobnerBasis) -> str:
    lines = []
    if basis.needs_length_bound:
        lines.append(f"modulo words of length >= {basis.nilpotency}")
    lines += [relation_text(basis, i) for i in range(len(basis))]
    return "\n".join(lines) + "\n"
