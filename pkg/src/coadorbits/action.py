"""Linear forms on the nilradical and the actions that move them.

A linear form is a coordinate vector in the dual basis indexed by the
positive roots.  The tangent action is (x.lam)(y) = -lam([x,y]); the group
action is the terminating exponential series lam(exp(-ad x)y).  Membership
in the canonical set S is the rank condition: for every support root g,
the row of g in the pairing matrix must lie in the span of the rows above.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .chevalley import StructureConstants
from .fields import FieldError, MIN_SERIES_CHAR


@dataclass(frozen=True)
class LinearForm:
    field: object
    coords: tuple

    def support(self):
        return tuple(
            i for i, c in enumerate(self.coords) if not self.field.is_zero(c)
        )

    def is_zero(self):
        return all(self.field.is_zero(c) for c in self.coords)


def form_from_dict(field, n, entries) -> LinearForm:
    coords = [field.zero] * n
    for i, v in entries.items():
        coords[i] = field.normalize(v)
    return LinearForm(field=field, coords=tuple(coords))


@dataclass(frozen=True)
class RankPair:
    gamma: int
    row_roots: tuple  # root index per row of A; row 0 is gamma itself
    a_rows: tuple
    b_rows: tuple


def _require_same_field(field, *forms):
    for f in forms:
        if f.field != field:
            raise FieldError("operands live over different fields")


def tangent_act(sc: StructureConstants, x_coords, lam: LinearForm) -> LinearForm:
    "Coordinates of x.lam: at root b, -sum_a lam([e_a, e_b]) x_a."
    rs = sc.rs
    field = lam.field
    out = [field.zero] * rs.n
    for b in range(rs.n):
        acc = field.zero
        for a, s in rs.row_pairs[b]:
            lv = lam.coords[s]
            if field.is_zero(lv) or field.is_zero(x_coords[a]):
                continue
            # lam([e_a, e_b]) = N(a,b) lam_{a+b}
            term = field.mul(field.mul(field.from_int(sc.n(a, b)), lv), x_coords[a])
            acc = field.add(acc, term)
        out[b] = field.neg(acc)
    return LinearForm(field=field, coords=tuple(out))


def check_series_field(field, kind: str):
    if not field.supports_series(kind):
        raise FieldError(
            f"characteristic {field.char} too small for the exponential "
            f"series over {kind}; need a prime >= {MIN_SERIES_CHAR[kind]} "
            "or the rationals"
        )


def coadjoint_act(sc: StructureConstants, x_coords, lam: LinearForm) -> LinearForm:
    """Coordinates of exp(x).lam via the terminating exponential series.

    Coordinate g of the result is sum_k (-1)^k/k! lam((ad x)^k e_g); the
    height grading kills every term with k >= height of the highest root.
    """
    rs = sc.rs
    field = lam.field
    check_series_field(field, rs.kind)
    out = []
    for g in range(rs.n):
        # y holds (ad x)^k e_g as a sparse coordinate dict
        y = {g: field.one}
        acc = lam.coords[g]
        k = 0
        while y:
            k += 1
            if k > rs.max_height - 1:
                break
            nxt = {}
            for j, cv in y.items():
                if field.is_zero(cv):
                    continue
                for a, s in rs.row_pairs[j]:
                    xv = x_coords[a]
                    if field.is_zero(xv):
                        continue
                    term = field.mul(field.mul(field.from_int(sc.n(a, j)), xv), cv)
                    nxt[s] = field.add(nxt.get(s, field.zero), term)
            y = {j: v for j, v in nxt.items() if not field.is_zero(v)}
            if not y:
                break
            coef = field.inv(field.from_int(factorial(k)))
            if k % 2:
                coef = field.neg(coef)
            for j, v in y.items():
                lv = lam.coords[j]
                if not field.is_zero(lv):
                    acc = field.add(acc, field.mul(field.mul(coef, v), lv))
        out.append(acc)
    return LinearForm(field=field, coords=tuple(out))


def pairing_row(sc: StructureConstants, lam: LinearForm, a: int):
    "Row a of the full pairing matrix: entries lam([e_a, e_b]) over all b."
    rs = sc.rs
    field = lam.field
    row = [field.zero] * rs.n
    for b, s in rs.row_pairs[a]:
        lv = lam.coords[s]
        if not field.is_zero(lv):
            row[b] = field.mul(field.from_int(sc.n(a, b)), lv)
    return row


def build_rank_pair(sc: StructureConstants, lam: LinearForm, gamma: int) -> RankPair:
    rs = sc.rs
    rows_b = [pairing_row(sc, lam, a) for a in range(rs.n - 1, gamma, -1)]
    row_g = pairing_row(sc, lam, gamma)
    roots = tuple([gamma] + list(range(rs.n - 1, gamma, -1)))
    return RankPair(
        gamma=gamma,
        row_roots=roots,
        a_rows=tuple(map(tuple, [row_g] + rows_b)),
        b_rows=tuple(map(tuple, rows_b)),
    )


def matrix_rank(field, rows) -> int:
    "Row rank by Gaussian elimination over the given exact field."
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if not field.is_zero(work[r][col]):
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = field.inv(work[rank][col])
        work[rank] = [field.mul(inv, v) for v in work[rank]]
        for r in range(len(work)):
            if r == rank:
                continue
            f = work[r][col]
            if field.is_zero(f):
                continue
            work[r] = [
                field.sub(v, field.mul(f, w)) for v, w in zip(work[r], work[rank])
            ]
        rank += 1
        if rank == len(work):
            break
    return rank


class _Echelon:
    "Incremental reduced echelon basis over an exact field."

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.pivots = {}  # column -> normalized row

    def reduce(self, row):
        field = self.field
        row = list(row)
        for col, base in self.pivots.items():
            f = row[col]
            if not field.is_zero(f):
                row = [field.sub(v, field.mul(f, w)) for v, w in zip(row, base)]
        return row

    def insert(self, row) -> bool:
        "Reduce and absorb; returns True if the row enlarged the span."
        field = self.field
        row = self.reduce(row)
        for col in range(self.ncols):
            if not field.is_zero(row[col]):
                inv = field.inv(row[col])
                row = [field.mul(inv, v) for v in row]
                self.pivots[col] = row
                return True
        return False

    def contains(self, row) -> bool:
        return all(self.field.is_zero(v) for v in self.reduce(row))


def satisfies_rk(sc: StructureConstants, lam: LinearForm, gamma: int) -> bool:
    """Rank condition at gamma: equal ranks with and without gamma's row,
    i.e. the row of gamma is spanned by the rows strictly above it."""
    rs = sc.rs
    ech = _Echelon(lam.field, rs.n)
    for a in range(rs.n - 1, gamma, -1):
        ech.insert(pairing_row(sc, lam, a))
    return ech.contains(pairing_row(sc, lam, gamma))


def in_S(sc: StructureConstants, lam: LinearForm) -> bool:
    "Rank condition at every support root; the zero form qualifies."
    rs = sc.rs
    supp = lam.support()
    if not supp:
        return True
    ech = _Echelon(lam.field, rs.n)
    ok = True
    nxt = rs.n - 1
    for gamma in sorted(supp, reverse=True):
        while nxt > gamma:
            ech.insert(pairing_row(sc, lam, nxt))
            nxt -= 1
        if not ech.contains(pairing_row(sc, lam, gamma)):
            ok = False
            break
    return ok
