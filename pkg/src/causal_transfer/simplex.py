"""Exact rational LP feasibility with Farkas certificates.

Solves systems A x = b, x >= 0 over fractions.Fraction using a phase-one
simplex with Bland's rule (anti-cycling, fully deterministic).  A feasible
system yields a basic feasible point; an infeasible one yields a dual
vector y with y.A <= 0 and y.b > 0, which certifies infeasibility by a
single exact evaluation, independent of the solver run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FarkasCertificate:
    """Row multipliers proving A x = b, x >= 0 has no solution.

    Contracting the constraints with y gives the single inequality
    (y.A) x = y.b with y.A <= 0 componentwise and y.b > 0, impossible for
    x >= 0.
    """

    y: tuple[Fraction, ...]

    def verify(self, rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
        if len(self.y) != len(rows):
            return False
        n = len(rows[0]) if rows else 0
        for col in range(n):
            if sum(yk * row[col] for yk, row in zip(self.y, rows)) > ZERO:
                return False
        return sum(yk * bk for yk, bk in zip(self.y, rhs)) > ZERO


@dataclass(frozen=True)
class SimplexResult:
    feasible: bool
    point: tuple[Fraction, ...] | None
    certificate: FarkasCertificate | None


def solve_equality_feasibility(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> SimplexResult:
    """Find x >= 0 with rows . x = rhs, or a Farkas certificate.

    Phase-one simplex: rows are sign-normalized so b >= 0, one artificial
    variable per row forms the starting basis, and the artificial mass is
    minimized under Bland's pivoting rule.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    # Sign-normalize; remember flips so the certificate speaks about the
    # original rows.
    sign = [ONE] * m
    a = [list(row) for row in rows]
    b = list(rhs)
    for r in range(m):
        if b[r] < ZERO:
            sign[r] = -ONE
            a[r] = [-v for v in a[r]]
            b[r] = -b[r]

    if m == 0:
        return SimplexResult(True, (ZERO,) * n, None)

    # Tableau columns: n original variables then m artificials, plus rhs.
    tableau = [a[r] + [ONE if c == r else ZERO for c in range(m)] + [b[r]] for r in range(m)]
    basis = [n + r for r in range(m)]
    # Objective: minimize the sum of artificials.  Reduced-cost row for the
    # starting basis: z_j - c_j = sum of column j over rows (artificials
    # cost 1, original variables cost 0).
    obj = [ZERO] * (n + m + 1)
    for r in range(m):
        for c in range(n + m + 1):
            obj[c] += tableau[r][c]
    for c in range(n, n + m):
        obj[c] -= ONE

    total = n + m
    while True:
        entering = next((c for c in range(total) if obj[c] > ZERO), None)
        if entering is None:
            break
        # Ratio test; Bland tie-break on the smallest basis variable index.
        leaving = None
        best = None
        for r in range(m):
            coeff = tableau[r][entering]
            if coeff > ZERO:
                ratio = tableau[r][total] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leaving]
                ):
                    best = ratio
                    leaving = r
        if leaving is None:
            raise RuntimeError("phase-one objective is bounded; this cannot happen")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [v / pivot for v in tableau[leaving]]
        for r in range(m):
            if r != leaving and tableau[r][entering] != ZERO:
                factor = tableau[r][entering]
                tableau[r] = [
                    v - factor * p for v, p in zip(tableau[r], tableau[leaving])
                ]
        if obj[entering] != ZERO:
            factor = obj[entering]
            obj = [v - factor * p for v, p in zip(obj, tableau[leaving])]
        basis[leaving] = entering

    artificial_mass = sum(
        tableau[r][total] for r in range(m) if basis[r] >= n
    )
    if artificial_mass == ZERO:
        x = [ZERO] * n
        for r, var in enumerate(basis):
            if var < n:
                x[var] = tableau[r][total]
        return SimplexResult(True, tuple(x), None)

    # Infeasible: read the dual y off the final reduced costs of the
    # artificial columns (z_j - c_j = y_r - 1 for artificial r), then undo
    # the sign normalization.
    y = [(obj[n + r] + ONE) * sign[r] for r in range(m)]
    cert = FarkasCertificate(tuple(y))
    if not cert.verify(rows, rhs):
        raise RuntimeError("internal error: Farkas certificate failed verification")
    return SimplexResult(False, None, cert)
