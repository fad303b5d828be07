"""Classification of canonical-form supports.

Everything here is structural: for a form with support D, the pairing
entry lam([e_a, e_b]) is nonzero exactly when a+b lands in D, so the
sufficient and necessary decision procedures depend on the support alone.
Supports are handled as bitmasks internally and exposed as descending
index tuples.

The enumeration walks supports exactly the way the reference
implementation does: start from the singleton of the highest root; on a
pass, prepend the next-smaller root; on a fail, replace the minimal root
by its predecessor; when the smallest root is exhausted, back up one
level.  The empty support is appended last.  Failure of a support implies
failure of every extension by smaller roots, which is what makes the
incomplete walk exhaustive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .action import form_from_dict, in_S
from .chevalley import StructureConstants
from .fields import PrimeField
from .roots import RootSystem

Support = Tuple[int, ...]  # root indices, descending

IN_S = "InS"
NOT_IN_S = "NotInS"
CONDITIONAL = "Conditional"


class ClassificationError(RuntimeError):
    "Sampling produced a verdict pattern no support is allowed to have."


@dataclass(frozen=True)
class CoordinateConstraint:
    """One polynomial relation on the nonzero coordinates of a support.

    Encodes lhs_root * lhs_sq^2 = sign * rhs_root * rhs_sq^2 and can solve
    for the lhs coordinate, which is what makes a conditional support
    contribute one power of (q-1) less to the form count.  The sign
    depends on the basis convention and is derived from the structure
    constants, so the constraint describes the true locus under any
    declared twist.
    """

    lhs_root: int
    lhs_sq: int
    rhs_root: int
    rhs_sq: int
    sign: int = 1

    def holds(self, field, coords) -> bool:
        left = field.mul(coords[self.lhs_root], field.mul(coords[self.lhs_sq], coords[self.lhs_sq]))
        right = field.mul(coords[self.rhs_root], field.mul(coords[self.rhs_sq], coords[self.rhs_sq]))
        if self.sign < 0:
            right = field.neg(right)
        return field.is_zero(field.sub(left, right))

    def solve_lhs(self, field, coords):
        "Value of the lhs coordinate forced by the other three."
        num = field.mul(coords[self.rhs_root], field.mul(coords[self.rhs_sq], coords[self.rhs_sq]))
        if self.sign < 0:
            num = field.neg(num)
        return field.div(num, field.mul(coords[self.lhs_sq], coords[self.lhs_sq]))

    def text(self, rs: RootSystem) -> str:
        head = "" if self.sign > 0 else "-"
        return (
            f"l({rs.root_str(self.lhs_root)})*l({rs.root_str(self.lhs_sq)})^2"
            f" = {head}l({rs.root_str(self.rhs_root)})*l({rs.root_str(self.rhs_sq)})^2"
        )


def f4_constraint(sc: StructureConstants) -> CoordinateConstraint:
    """The single F4 coordinate constraint, signed for sc's convention.

    Solvability of the coordinate at a2 against the two rows above it
    (for the support family {a1+a2+2a3, a1+a2, a2+2a3+a4, a2+a3+a4, ...})
    reduces to a 3x3 determinant in the variables x_{a4}, x_{a3+a4},
    x_{a1}; expanding it gives the relation below.
    """
    rs = sc.rs
    ix = rs.index_of
    i_a4, i_a34, i_a1 = ix((0, 0, 0, 1)), ix((0, 0, 1, 1)), ix((1, 0, 0, 0))
    i_a2, i_a23, i_a223 = ix((0, 1, 0, 0)), ix((0, 1, 1, 0)), ix((0, 1, 2, 0))
    num = -sc.n(i_a34, i_a2) * sc.n(i_a4, i_a23) * sc.n(i_a1, i_a223)
    den = sc.n(i_a1, i_a2) * sc.n(i_a4, i_a223) * sc.n(i_a34, i_a23)
    assert abs(num) == abs(den) == 1
    return CoordinateConstraint(
        lhs_root=ix((1, 1, 0, 0)),
        lhs_sq=ix((0, 1, 2, 1)),
        rhs_root=ix((1, 1, 2, 0)),
        rhs_sq=ix((0, 1, 1, 1)),
        sign=num * den,
    )


@dataclass(frozen=True)
class SupportStatus:
    verdict: str
    constraint: Optional[CoordinateConstraint] = None


@dataclass(frozen=True)
class ZetaSet:
    roots: frozenset
    trace: tuple  # (added root, witnessing row) in addition order


def support_mask(roots: Iterable[int]) -> int:
    m = 0
    for r in roots:
        m |= 1 << r
    return m


def mask_support(mask: int) -> Support:
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return tuple(sorted(out, reverse=True))


def _zeta_mask(rs: RootSystem, d_mask: int, gamma: int, reverse_scan: bool = False) -> Tuple[int, tuple]:
    """Closure of forced rows above gamma.

    A column root enters when some row strictly above gamma has that
    column as its only pairing entry into D not yet in the set.  Sweeps
    repeat until stable; the result is scan-order independent.
    """
    zeta = 0
    trace = []
    rows = list(range(rs.n - 1, gamma, -1))
    if reverse_scan:
        rows.reverse()
    row_pairs = rs.row_pairs
    grew = True
    while grew:
        grew = False
        for i in rows:
            dep = -1
            ok = True
            for j, s in row_pairs[i]:
                if (d_mask >> s) & 1 and not (zeta >> j) & 1:
                    if dep < 0:
                        dep = j
                    else:
                        ok = False
                        break
            if ok and dep >= 0:
                zeta |= 1 << dep
                trace.append((dep, i))
                grew = True
    return zeta, tuple(trace)


def zeta(rs: RootSystem, support: Iterable[int], gamma: int) -> ZetaSet:
    mask, trace = _zeta_mask(rs, support_mask(support), gamma)
    return ZetaSet(roots=frozenset(mask_support(mask)), trace=trace)


def _sufficient_at(rs: RootSystem, d_mask: int, gamma: int) -> bool:
    zm, _ = _zeta_mask(rs, d_mask, gamma)
    for j, s in rs.row_pairs[gamma]:
        if (d_mask >> s) & 1 and not (zm >> j) & 1:
            return False
    return True


def sufficient_condition(rs: RootSystem, support: Iterable[int]) -> bool:
    d_mask = support_mask(support)
    return all(_sufficient_at(rs, d_mask, g) for g in mask_support(d_mask))


def _walk_violation_at(
    rs: RootSystem, d_mask: int, gamma: int, max_extensions: Optional[int]
) -> bool:
    """Deterministic chain walk used by the reference enumeration.

    In the current row take the pairing columns that escape the closure
    set (ignoring the column we arrived by); a column with no other
    nonzero entry strictly above gamma witnesses the violation; the walk
    extends only when the row offers exactly one escape column and that
    column exactly one other entry.  `max_extensions` caps the number of
    moves past the starting row; None leaves the walk uncapped, which is
    how the published counts arise.
    """
    zm, _ = _zeta_mask(rs, d_mask, gamma)
    sum_table = rs.sum_table
    rowold = gamma
    colold = -1
    extensions = 0
    seen = set()
    while True:
        if (rowold, colold) in seen:
            return False
        seen.add((rowold, colold))
        found_entry = True
        count = 0
        rownew = colnew = -1
        for j, s in rs.row_pairs[rowold]:
            if not (d_mask >> s) & 1 or (zm >> j) & 1 or j == colold:
                continue
            found_entry = False
            colnew = j
            for i in range(rs.n - 1, gamma, -1):
                s2 = sum_table[i][j]
                if s2 is not None and (d_mask >> s2) & 1 and i != rowold:
                    found_entry = True
                    count += 1
                    rownew = i
            if not found_entry:
                return True
        if count != 1:
            return False
        if max_extensions is not None and extensions >= max_extensions:
            return False
        extensions += 1
        rowold, colold = rownew, colnew


def _chain_violation_at(
    rs: RootSystem, d_mask: int, gamma: int, max_depth: Optional[int]
) -> bool:
    """Branching chain search witnessing that the coordinate at gamma can
    be moved freely, hence that forms with this support fall outside S.

    A chain visits rows gamma = d_1, d_2, ...; every intermediate row must
    offer exactly one escape column, but all candidate next rows in that
    column are explored.  A chain of length k ends in a row one of whose
    escape columns has no other nonzero entry above gamma.  `max_depth`
    bounds k; a visited-set guard cuts revisits, so the search terminates
    even though chains may descend.
    """
    zm, _ = _zeta_mask(rs, d_mask, gamma)
    sum_table = rs.sum_table

    def explore(rowold, colold, k, seen):
        escapes = [
            j
            for j, s in rs.row_pairs[rowold]
            if (d_mask >> s) & 1 and not (zm >> j) & 1 and j != colold
        ]
        if not escapes:
            return False
        others = {}
        for j in escapes:
            o = []
            for i in range(rs.n - 1, gamma, -1):
                s2 = sum_table[i][j]
                if s2 is not None and (d_mask >> s2) & 1 and i != rowold:
                    o.append(i)
            if not o:
                return True
            others[j] = o
        if max_depth is not None and k >= max_depth:
            return False
        if len(escapes) != 1:
            return False
        j = escapes[0]
        return any(
            explore(nxt, j, k + 1, seen | {(nxt, j)})
            for nxt in others[j]
            if (nxt, j) not in seen
        )

    return explore(gamma, -1, 1, frozenset())


def necessary_violation(
    rs: RootSystem, support: Iterable[int], max_depth: Optional[int] = None
) -> bool:
    "True when a witnessing chain of length <= max_depth starts in the support."
    if max_depth is not None and max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    d_mask = support_mask(support)
    return any(
        _chain_violation_at(rs, d_mask, g, max_depth)
        for g in mask_support(d_mask)
    )


def enumerate_supports(
    rs: RootSystem,
    condition: str,
    depth: Optional[int] = 2,
    collect_visited: Optional[list] = None,
) -> List[Support]:
    """All supports passing the chosen condition, in traversal order.

    condition 'sufficient' checks the closure criterion; 'necessary'
    accepts unless the deterministic chain walk (allowed `depth` moves
    past the starting row, None for uncapped) certifies a violation.
    Only the newest minimal root is checked at each step; the verdict for
    the older roots is unchanged because the criteria ignore everything
    below the root under test.
    """
    if condition not in ("sufficient", "necessary"):
        raise ValueError(f"unknown condition {condition!r}")

    def passes(d_mask: int, last: int) -> bool:
        if condition == "sufficient":
            return _sufficient_at(rs, d_mask, last)
        return not _walk_violation_at(rs, d_mask, last, depth)

    out: List[Support] = []
    roots = [rs.n - 1]
    mask = 1 << (rs.n - 1)
    while True:
        last = roots[-1]
        if collect_visited is not None:
            collect_visited.append((mask, last))
        if passes(mask, last):
            out.append(tuple(roots))
            if last != 0:
                roots.append(last - 1)
                mask |= 1 << (last - 1)
        else:
            if last != 0:
                roots.pop()
                mask &= ~(1 << last)
                roots.append(last - 1)
                mask |= 1 << (last - 1)
        if last == 0:
            if len(roots) != 1:
                roots.pop()
                mask &= ~1
                b = roots.pop()
                mask &= ~(1 << b)
                roots.append(b - 1)
                mask |= 1 << (b - 1)
            else:
                break
    out.append(())
    return out


def ambiguous_supports(rs: RootSystem) -> List[Support]:
    "Supports passing the capped necessary check but not the sufficient one."
    suff = set(enumerate_supports(rs, "sufficient"))
    return [d for d in enumerate_supports(rs, "necessary", depth=2) if d not in suff]


def _sample_verdicts(sc, support, field, trials, rng, constraint):
    """in_S verdicts for random forms with the given support.

    Returns (results, constraint_flags).  When the constraint applies to
    the support, half the budget is spent on each side of it so the
    biconditional is genuinely exercised.
    """
    rs = sc.rs
    results = []
    flags = []
    applicable = constraint is not None and all(
        r in support
        for r in (constraint.lhs_root, constraint.lhs_sq, constraint.rhs_root, constraint.rhs_sq)
    )

    def run(coords):
        lam = form_from_dict(field, rs.n, coords)
        results.append(in_S(sc, lam))
        flags.append(constraint.holds(field, lam.coords) if applicable else None)

    for t in range(trials):
        coords = {r: field.random_nonzero(rng) for r in support}
        if applicable:
            forced = constraint.solve_lhs(field, [coords.get(i, field.zero) for i in range(rs.n)])
            if t % 2 == 0:
                coords[constraint.lhs_root] = forced
            else:
                v = field.random_nonzero(rng)
                while field.is_zero(field.sub(v, forced)):
                    v = field.random_nonzero(rng)
                coords[constraint.lhs_root] = v
        run(coords)
    return results, flags


def classify_ambiguous(
    sc: StructureConstants,
    support: Support,
    primes: Iterable[int] = (13, 17),
    trials: int = 40,
    seed: int = 0,
) -> SupportStatus:
    """Resolve one support by exact sampling over several prime fields.

    InS if every sampled form with that support lands in S, NotInS if
    none does, Conditional if membership tracks the coordinate constraint
    on every sample; anything else raises.
    """
    rs = sc.rs
    constraint = f4_constraint(sc) if rs.kind == "F4" else None
    all_results = []
    all_flags = []
    for p in primes:
        field = PrimeField(p)
        if not field.supports_series(rs.kind):
            raise ValueError(f"prime {p} below the action bound for {rs.kind}")
        rng = random.Random((seed, p, support).__repr__())
        res, flags = _sample_verdicts(sc, support, field, trials, rng, constraint)
        all_results.extend(res)
        all_flags.extend(flags)
    if all(all_results):
        return SupportStatus(verdict=IN_S)
    if not any(all_results):
        return SupportStatus(verdict=NOT_IN_S)
    if all(f is not None for f in all_flags) and all(
        r == f for r, f in zip(all_results, all_flags)
    ):
        return SupportStatus(verdict=CONDITIONAL, constraint=constraint)
    raise ClassificationError(
        f"inconsistent sampling pattern for support {support}"
    )


def final_S(
    rs: RootSystem,
    sc: StructureConstants,
    primes: Iterable[int] = (13, 17),
    trials: int = 40,
    seed: int = 0,
) -> List[Tuple[Support, SupportStatus]]:
    """The full canonical-support list with per-support status.

    Sufficient-condition supports are unconditional; the gap supports are
    resolved by sampling and kept unless rejected.
    """
    suff = enumerate_supports(rs, "sufficient")
    out = [(d, SupportStatus(verdict=IN_S)) for d in suff]
    for d in ambiguous_supports(rs):
        status = classify_ambiguous(sc, d, primes=primes, trials=trials, seed=seed)
        if status.verdict != NOT_IN_S:
            out.append((d, status))
    return out


def count_polynomial(entries) -> List[int]:
    """Coefficients of the form count in the basis (q-1)^k.

    An unconditional support of size k holds (q-1)^k forms; a conditional
    one loses one factor because the constraint pins one coordinate.
    """
    coeffs = {}
    for support, status in entries:
        k = len(support)
        if status.verdict == CONDITIONAL:
            k -= 1
        coeffs[k] = coeffs.get(k, 0) + 1
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(k, 0) for k in range(top + 1)]


def evaluate_count(coeffs: List[int], q: int) -> int:
    return sum(c * (q - 1) ** k for k, c in enumerate(coeffs))


def parse_support_file(rs: RootSystem, text: str) -> List[Support]:
    """Support-per-line format: whitespace-separated coefficient tuples
    like `1,2,2,0`; a bare `-` (or empty line) is the empty support."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            continue
        if line in ("", "-"):
            out.append(())
            continue
        idxs = []
        for tok in line.split():
            coeffs = tuple(int(c) for c in tok.split(","))
            idxs.append(rs.index_of(coeffs))
        out.append(tuple(sorted(idxs, reverse=True)))
    return out


def format_support_file(rs: RootSystem, supports: Iterable[Support]) -> str:
    lines = []
    for d in supports:
        if not d:
            lines.append("-")
        else:
            lines.append(
                " ".join(",".join(map(str, rs.roots[i].coeffs)) for i in d)
            )
    return "\n".join(lines) + "\n"
