"""Positive-root combinatorics for the F4 and G2 root systems.

Roots are stored as coefficient vectors over the simple-root basis.  The
total order on positive roots is lexicographic on those coefficients, read
in a fixed priority sequence per system; the ascending list position is the
canonical root identity used everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

F4 = "F4"
G2 = "G2"

# Cartan matrices, entry [i][j] = 2(a_i, a_j)/(a_j, a_j).
_CARTAN = {
    F4: ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    G2: ((2, -1), (-3, 2)),
}

# Half squared lengths of the simple roots, normalised so the short roots
# of F4 have length 1 and the short root of G2 has length sqrt(2).
_HALF_LENGTHS = {
    F4: (Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 2)),
    G2: (Fraction(1), Fraction(3)),
}  # G2: first simple root short, second long.

# Which simple-root coefficient is compared first, second, ... by the
# total order.  For F4 this is the natural a1,a2,a3,a4 reading; for G2 the
# second simple root dominates, which yields the ascending sequence
# a, b, a+b, 2a+b, 3a+b, 3a+2b.
_LEX_PRIORITY = {F4: (0, 1, 2, 3), G2: (1, 0)}


@dataclass(frozen=True)
class Root:
    coeffs: tuple
    index: int
    height: int

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            head = "" if c == 1 else str(c)
            parts.append(f"{head}a{i + 1}")
        return "+".join(parts) if parts else "0"


class RootSystem:
    """Positive roots of one system plus the derived pairwise tables."""

    def __init__(self, kind: str):
        if kind not in (F4, G2):
            raise ValueError(f"unsupported root system kind: {kind!r}")
        self.kind = kind
        self.cartan = _CARTAN[kind]
        self.rank = len(self.cartan)
        self.lex_priority = _LEX_PRIORITY[kind]
        coeff_list = _positive_root_closure(self.cartan)
        coeff_list.sort(key=self._lex_key)
        self.roots = [
            Root(coeffs=c, index=i, height=sum(c)) for i, c in enumerate(coeff_list)
        ]
        self.n = len(self.roots)
        self._index_of = {r.coeffs: r.index for r in self.roots}
        self._root_set = set(self._index_of)

        # sum_table[i][j]: index of root i + root j, or None.
        self.sum_table = [[None] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                s = _vadd(self.roots[i].coeffs, self.roots[j].coeffs)
                self.sum_table[i][j] = self._index_of.get(s)

        # diff_decomposable[i][j]: root j - root i is a non-empty sum of
        # positive roots.  For F4/G2 this coincides with "all coefficient
        # differences non-negative and not all zero".
        self.diff_decomposable = [[False] * self.n for _ in range(self.n)]
        self.diff_is_root = [[False] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                d = _vsub(self.roots[j].coeffs, self.roots[i].coeffs)
                if all(c >= 0 for c in d) and any(c > 0 for c in d):
                    self.diff_decomposable[i][j] = True
                    self.diff_is_root[i][j] = d in self._root_set

        # For each row i, the columns j it can pair with, as
        # (j, index of root i + root j); used heavily by the classifier.
        self.row_pairs = [
            [(j, s) for j, s in enumerate(self.sum_table[i]) if s is not None]
            for i in range(self.n)
        ]

        half = _HALF_LENGTHS[kind]
        self._simple_gram = [
            [Fraction(self.cartan[i][j]) * half[j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self.max_height = max(r.height for r in self.roots)

    def _lex_key(self, coeffs):
        return tuple(coeffs[i] for i in self.lex_priority)

    def index_of(self, coeffs) -> int:
        return self._index_of[tuple(coeffs)]

    def is_root(self, coeffs) -> bool:
        "Membership in the full system, negative roots included."
        t = tuple(coeffs)
        if t in self._root_set:
            return True
        return tuple(-c for c in t) in self._root_set

    def inner(self, x, y) -> Fraction:
        "Bilinear form extended from the simple-root Gram matrix."
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._simple_gram[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * row[j]
        return total

    def root_str(self, i: int) -> str:
        return str(self.roots[i])


def build_root_system(kind: str) -> RootSystem:
    return RootSystem(kind)


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _positive_root_closure(cartan):
    """Generate all positive roots from the Cartan matrix by height closure.

    A candidate b + a_i (b a known root, a_i simple) is a root iff the
    a_i-string through b extends upwards, i.e. q - <b, a_i^> > 0 where q is
    the depth of the string below b.
    """
    rank = len(cartan)
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for b in frontier:
            for i, a in enumerate(simples):
                pairing = sum(b[j] * cartan[j][i] for j in range(rank))
                q = 0
                probe = _vsub(b, a)
                while probe in known:
                    q += 1
                    probe = _vsub(probe, a)
                if q - pairing > 0:
                    cand = _vadd(b, a)
                    if cand not in known:
                        known.add(cand)
                        new.append(cand)
        frontier = new
    return list(known)


def root_sum(rs: RootSystem, i: int, j: int) -> Optional[int]:
    "Index of root i + root j when that sum is again a positive root."
    if i == j:
        raise ValueError("root_sum requires two distinct roots")
    return rs.sum_table[i][j]


def singular_set(rs: RootSystem, gamma: int) -> frozenset:
    "All roots a with gamma - a again a positive root."
    g = rs.roots[gamma].coeffs
    out = set()
    for r in rs.roots:
        d = _vsub(g, r.coeffs)
        if d in rs._root_set:
            out.add(r.index)
    return frozenset(out)


def string_bound(rs: RootSystem, a: int, b: int) -> int:
    "Largest p >= 0 with root_b - p*root_a in the full root system."
    if a == b:
        raise ValueError("string_bound requires two distinct roots")
    av = rs.roots[a].coeffs
    probe = _vsub(rs.roots[b].coeffs, av)
    p = 0
    while rs.is_root(probe):
        p += 1
        probe = _vsub(probe, av)
    return p
