"""Structure constants of the nilradical in a Chevalley basis.

The bracket on the span of the positive root vectors is
[e_a, e_b] = N(a,b) e_{a+b} whenever a+b is again a positive root, zero
otherwise.  The integers N(a,b) are produced by the classical
extraspecial-pair induction: for every non-simple positive root the
decomposition pair with the smallest first member (in the total order)
receives sign +, and all other constants follow from the two standard
identities

    a+b+c = 0       ->  N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
    a+b+c+d = 0     ->  N(a,b)N(c,d)/(a+b,a+b)
                      + N(b,c)N(a,d)/(b+c,b+c)
                      + N(c,a)N(b,d)/(c+a,c+a) = 0

together with N(-a,-b) = -N(a,b).  Magnitudes always satisfy
|N(a,b)| = p+1 with p the largest integer such that b - p*a is a root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .roots import RootSystem, string_bound

CONVENTION = "extraspecial-lex"

# Basis sign alignment: e_i -> REFERENCE_TWIST[kind][i] * e_i carries the
# extraspecial-lex convention onto the one used by the independently
# published coordinate formulas this package is validated against.  Derived
# by solving the sign constraints of those formulas; identity on G2.
REFERENCE_TWIST = {
    "F4": (1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    "G2": (1, 1, 1, 1, 1, 1),
}


@dataclass
class StructureConstants:
    rs: RootSystem
    table: dict = field(repr=False)  # (i, j) -> nonzero int, both orders
    convention: str = CONVENTION

    def n(self, i: int, j: int) -> int:
        "Bracket coefficient of e_{i+j} in [e_i, e_j]; 0 if i+j is no root."
        return self.table.get((i, j), 0)

    def twisted(self, signs) -> "StructureConstants":
        """Constants after the basis change e_i -> signs[i] * e_i.

        Entries of `signs` are +1/-1; this is a Lie algebra isomorphism, so
        every structural statement survives it.
        """
        if len(signs) != self.rs.n or any(s not in (1, -1) for s in signs):
            raise ValueError("twist must assign +1/-1 to every positive root")
        rs = self.rs
        new = {
            (i, j): signs[i] * signs[j] * signs[rs.sum_table[i][j]] * v
            for (i, j), v in self.table.items()
        }
        return StructureConstants(rs=rs, table=new, convention=f"{self.convention}+twist")


def compute_constants(rs: RootSystem) -> StructureConstants:
    n_pos = {}

    def inner(ci, cj):
        return rs.inner(ci, cj)

    def neg(c):
        return tuple(-x for x in c)

    def n_signed(a, b):
        """N for arbitrary sign patterns, reduced to the positive table.

        `a`, `b` are coefficient tuples of (possibly negative) roots whose
        sum is again a root; all positive pairs needed here have smaller
        height than the pair currently under construction.
        """
        a_pos = all(x >= 0 for x in a)
        b_pos = all(x >= 0 for x in b)
        if a_pos and b_pos:
            return n_pos[(rs.index_of(a), rs.index_of(b))]
        if not a_pos and not b_pos:
            return -n_signed(neg(a), neg(b))
        if not a_pos:
            # N(-x, y) = -N(y, -x) handled below.
            return -n_signed(b, a)
        # a positive, b negative: write y = -b.
        y = neg(b)
        x = a
        d = tuple(p - q for p, q in zip(x, y))
        if all(c >= 0 for c in d):
            # z = x - y positive: x + (-y) + (-z) = 0.
            z = d
            return -n_signed(y, z) * inner(z, z) / inner(x, x)
        # z = y - x positive: x + (-y) + z = 0.
        z = neg(d)
        return n_signed(z, x) * inner(z, z) / inner(y, y)

    by_height = sorted(range(rs.n), key=lambda i: (rs.roots[i].height, i))
    for g in by_height:
        gc = rs.roots[g].coeffs
        pairs = [
            (i, j)
            for i in range(rs.n)
            for j in range(i + 1, rs.n)
            if rs.sum_table[i][j] == g
        ]
        if not pairs:
            continue
        pairs.sort()  # ascending first member = ascending in the total order
        r, s = pairs[0]  # extraspecial pair for g
        n_pos[(r, s)] = string_bound(rs, r, s) + 1
        n_pos[(s, r)] = -n_pos[(r, s)]
        rc, sc = rs.roots[r].coeffs, rs.roots[s].coeffs
        gg = inner(gc, gc)
        for a, b in pairs[1:]:
            ac, bc = rs.roots[a].coeffs, rs.roots[b].coeffs
            total = Fraction(0)
            # four roots a, b, -r, -s summing to zero
            d1 = tuple(p - q for p, q in zip(bc, rc))  # b - r
            if rs.is_root(d1):
                total += (
                    n_signed(bc, neg(rc)) * n_signed(ac, neg(sc)) / inner(d1, d1)
                )
            d2 = tuple(p - q for p, q in zip(ac, rc))  # a - r
            if rs.is_root(d2):
                total += (
                    n_signed(neg(rc), ac) * n_signed(bc, neg(sc)) / inner(d2, d2)
                )
            val = gg * total / n_pos[(r, s)]
            if val.denominator != 1 or val == 0:
                raise AssertionError(
                    f"structure constant derivation failed for pair ({a},{b})"
                )
            v = int(val)
            if abs(v) != string_bound(rs, a, b) + 1:
                raise AssertionError(
                    f"magnitude law violated for pair ({a},{b}): got {v}"
                )
            n_pos[(a, b)] = v
            n_pos[(b, a)] = -v
    return StructureConstants(rs=rs, table=n_pos)


def reference_constants(rs: RootSystem) -> StructureConstants:
    "Constants in the convention of the published coordinate formulas."
    return compute_constants(rs).twisted(REFERENCE_TWIST[rs.kind])


def bracket_basis(sc: StructureConstants, i: int, j: int):
    "Bracket of two basis vectors as (coefficient, target index) or None."
    k = sc.rs.sum_table[i][j]
    if k is None or i == j:
        return None
    return (sc.table[(i, j)], k)
