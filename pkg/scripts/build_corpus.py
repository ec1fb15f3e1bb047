"""Regenerate the bundled group files under src/pgro/data.

Every table is checked for the group axioms by brute force before it is
written.
"""

import itertools
from pathlib import Path

from pgro.groupfile import format_perm_file, format_table_file

OUT = Path(__file__).resolve().parent.parent / "src" / "pgro" / "data"


def cycle(n, start=1, length=None, degree=None):
    length = length or n
    degree = degree or n
    img = list(range(1, degree + 1))
    pts = list(range(start, start + length))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a - 1] = b
    return img


def check_group(mul, order):
    els = range(order)
    e = next(x for x in els if all(mul(x, y) == y for y in els))
    assert all(mul(y, e) == y for y in els)
    for x in els:
        assert sorted(mul(x, y) for y in els) == list(els)
        assert any(mul(x, y) == e for y in els)
    for x, y, z in itertools.product(els, repeat=3):
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
    return e


def table_of(mul, order):
    check_group(mul, order)
    return [[mul(x, y) + 1 for y in range(order)] for x in range(order)]


def metacyclic(m, s, r, t):
    """<x, y | x^m, y^s = x^t, y x y^-1 = x^r>, element x^i y^j at index j*m + i."""
    def mul(u, v):
        i, j = u % m, u // m
        k, l = v % m, v // m
        carry = t if j + l >= s else 0
        return (j + l) % s * m + (i + k * pow(r, j, m) + carry) % m
    return mul


def ex32g():
    """<a,b,c> elementary abelian, phi of order 4 acting a -> b -> c -> abc.

    Element v * phi^k at index 8k + v, with v a bitmask a=1, b=2, c=4.
    """
    def sigma(v):
        img = [2, 4, 7]
        out = 0
        for bit in range(3):
            if v >> bit & 1:
                out ^= img[bit]
        return out

    def mul(u, w):
        v, k = u % 8, u // 8
        x, l = w % 8, w // 8
        for _ in range(k):
            x = sigma(x)
        return (k + l) % 4 * 8 + (v ^ x)
    return mul


def heisenberg3(u, v):
    x, y, z = u % 3, u // 3 % 3, u // 9
    a, b, c = v % 3, v // 3 % 3, v // 9
    return (x + a) % 3 + 3 * ((y + b) % 3) + 9 * ((z + c + x * b) % 3)


UT_POS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def ut4(u, v):
    def mat(k):
        m = [[int(i == j) for j in range(4)] for i in range(4)]
        for bit, (i, j) in enumerate(UT_POS):
            m[i][j] = k >> bit & 1
        return m
    a, b = mat(u), mat(v)
    c = [[sum(a[i][k] * b[k][j] for k in range(4)) % 2 for j in range(4)] for i in range(4)]
    return sum(c[i][j] << bit for bit, (i, j) in enumerate(UT_POS))


def main():
    entries = []

    def perm(label, order, perms, comment):
        (OUT / f"{label}.grp").write_text(format_perm_file(perms, comment))
        entries.append((label, order))

    def table(label, order, mul, gens, comment):
        (OUT / f"{label}.grp").write_text(format_table_file(table_of(mul, order), gens, comment))
        entries.append((label, order))

    perm("C2", 2, [[2, 1]], "cyclic group of order 2")
    perm("C4", 4, [cycle(4)], "cyclic group of order 4")
    perm("C8", 8, [cycle(8)], "cyclic group of order 8")
    perm("V4", 4, [[2, 1, 4, 3], [3, 4, 1, 2]], "Klein four group")
    perm("C2xC4", 8, [cycle(2, degree=6), cycle(4, start=3, length=4, degree=6)],
         "C2 x C4")
    perm("E8", 8, [[2, 1, 3, 4, 5, 6], [1, 2, 4, 3, 5, 6], [1, 2, 3, 4, 6, 5]],
         "elementary abelian group of order 8")
    perm("D8", 8, [cycle(4), [1, 4, 3, 2]], "dihedral group of order 8")
    table("Q8", 8, metacyclic(4, 2, -1 % 4, 2), [2, 5],
          "quaternion group of order 8: x^4 = 1, y^2 = x^2, y x y^-1 = x^-1\n"
          "element x^i y^j is entry 4j + i + 1")
    perm("C4xC4", 16, [cycle(4, degree=8), cycle(4, start=5, length=4, degree=8)], "C4 x C4")
    perm("E16", 16, [[2, 1, 3, 4, 5, 6, 7, 8], [1, 2, 4, 3, 5, 6, 7, 8],
                     [1, 2, 3, 4, 6, 5, 7, 8], [1, 2, 3, 4, 5, 6, 8, 7]],
         "elementary abelian group of order 16")
    perm("D16", 16, [cycle(8), [1, 8, 7, 6, 5, 4, 3, 2]], "dihedral group of order 16")
    table("Q16", 16, metacyclic(8, 2, 7, 4), [2, 9],
          "generalized quaternion group of order 16: x^8 = 1, y^2 = x^4, y x y^-1 = x^-1\n"
          "x^i y^j is entry 8j + i + 1")
    perm("C2xD8", 16, [cycle(4, degree=6), [1, 4, 3, 2, 5, 6], [1, 2, 3, 4, 6, 5]],
         "C2 x D8")
    perm("C9", 9, [cycle(9)], "cyclic group of order 9")
    perm("C3xC3", 9, [cycle(3, degree=6), cycle(3, start=4, length=3, degree=6)], "C3 x C3")
    table("Heis27", 27, heisenberg3, [2, 4],
          "extraspecial group 3^(1+2) of exponent 3, unitriangular 3x3 matrices mod 3\n"
          "(x, y, z) is entry x + 3y + 9z + 1")
    table("G32ex", 32, ex32g(), [2, 9],
          "semidirect product <a,b,c> x| <phi>: phi of order 4, conjugation a -> b -> c -> abc\n"
          "v * phi^k is entry 8k + v + 1 with v a bitmask a=1, b=2, c=4\n"
          "generators a (entry 2) and phi (entry 9)")
    table("D32", 32, metacyclic(16, 2, 15, 0), [2, 17],
          "dihedral group of order 32: x^16 = y^2 = 1, y x y^-1 = x^-1; x^i y^j is entry 16j + i + 1")
    table("Q32", 32, metacyclic(16, 2, 15, 8), [2, 17],
          "generalized quaternion group of order 32: x^16 = 1, y^2 = x^8, y x y^-1 = x^-1\n"
          "x^i y^j is entry 16j + i + 1")
    table("SD32", 32, metacyclic(16, 2, 7, 0), [2, 17],
          "semidihedral group of order 32: x^16 = y^2 = 1, y x y^-1 = x^7; x^i y^j is entry 16j + i + 1")
    table("M32", 32, metacyclic(16, 2, 9, 0), [2, 17],
          "modular group of order 32: x^16 = y^2 = 1, y x y^-1 = x^9; x^i y^j is entry 16j + i + 1")
    table("C8xC4", 32, metacyclic(8, 4, 1, 0), [2, 9],
          "C8 x C4: x^8 = y^4 = 1 commuting; x^i y^j is entry 8j + i + 1")
    table("C8sC4", 32, metacyclic(8, 4, 3, 0), [2, 9],
          "C8 x| C4: x^8 = y^4 = 1, y x y^-1 = x^3; x^i y^j is entry 8j + i + 1")
    table("UT4F2", 64, ut4, [2, 9, 33],
          "unitriangular 4x4 matrices over F_2 (order 64), generated by the three\n"
          "elementary matrices on the superdiagonal")

    manifest = ["# label order file"] + [f"{lab} {order} {lab}.grp" for lab, order in entries]
    (OUT / "MANIFEST").write_text("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
