"""Exact decision of "nontrivial nonnegative solution" for homogeneous systems.

Everything here runs on fractions.Fraction; no floating point is involved at
any stage.  Nontriviality of the homogeneous system A x = 0 is encoded by the
normalization sum(x) = 1, which is harmless because solutions scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# variable name -> exact value
RationalVector = dict[str, Fraction]


@dataclass(frozen=True)
class LinearSystem:
    """Integer-coefficient linear forms over named variables, all == 0.

    Each equation is a map variable -> coefficient; absent variables have
    coefficient zero.
    """

    variables: tuple[str, ...]
    equations: tuple[dict[str, int], ...]

    def __post_init__(self):
        known = set(self.variables)
        for eq in self.equations:
            for v in eq:
                if v not in known:
                    raise ValueError(f"equation references undeclared variable {v!r}")


@dataclass(frozen=True)
class Feasible:
    """A verified solution: x >= 0, A x = 0 exactly, sum(x) = 1."""

    solution: RationalVector


@dataclass(frozen=True)
class Infeasible:
    """A verified witness y: every component of y^T A is strictly positive.

    Such a y rules out any x >= 0, x != 0 with A x = 0, because y^T A x
    would then be simultaneously 0 and > 0.
    """

    certificate: tuple[Fraction, ...]


def _pivot(rows, basis, r, j):
    piv = rows[r][j]
    rows[r] = [e / piv for e in rows[r]]
    for k in range(len(rows)):
        if k != r and rows[k][j] != 0:
            f = rows[k][j]
            rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
    if basis is not None:
        basis[r] = j


def solve_nonneg_nontrivial(system: LinearSystem):
    """Decide A x = 0, x >= 0, x != 0 with exact rational arithmetic.

    Phase-one simplex with Bland's pivoting rule on {A x = 0, sum(x) = 1,
    x >= 0}.  Returns Feasible with a normalized solution, or Infeasible
    with a strict positivity certificate extracted from the multipliers.
    A system over zero variables is Infeasible by convention.
    """
    names = system.variables
    n = len(names)
    if n == 0:
        return Infeasible(tuple(Fraction(0) for _ in system.equations))
    if not system.equations:
        share = Fraction(1, n)
        return Feasible({v: share for v in names})

    vidx = {v: k for k, v in enumerate(names)}
    m = len(system.equations)
    rows_n = m + 1  # equations plus the normalization row
    width = n + rows_n + 1  # structural + artificial columns + rhs

    rows = []
    for eq in system.equations:
        row = [Fraction(0)] * width
        for v, co in eq.items():
            row[vidx[v]] = Fraction(co)
        rows.append(row)
    norm = [Fraction(0)] * width
    for j in range(n):
        norm[j] = Fraction(1)
    norm[-1] = Fraction(1)
    rows.append(norm)
    for r in range(rows_n):
        rows[r][n + r] = Fraction(1)
    basis = [n + r for r in range(rows_n)]

    # cost row for minimizing the artificial sum, kept in reduced form;
    # last entry is minus the current objective value
    cost = [Fraction(0)] * width
    for j in range(width):
        col_sum = sum(rows[r][j] for r in range(rows_n))
        cj = Fraction(1) if n <= j < n + rows_n else Fraction(0)
        cost[j] = cj - col_sum
    cost[-1] = Fraction(0) - sum(rows[r][-1] for r in range(rows_n))

    while True:
        entering = next((j for j in range(width - 1) if cost[j] < 0), None)
        if entering is None:
            break
        candidates = [
            (rows[r][-1] / rows[r][entering], basis[r], r)
            for r in range(rows_n)
            if rows[r][entering] > 0
        ]
        if not candidates:
            raise RuntimeError("phase-one objective unbounded; cannot happen")
        _, _, leaving = min(candidates)
        _pivot(rows, basis, leaving, entering)
        f = cost[entering]
        cost = [a - f * b for a, b in zip(cost, rows[leaving])]

    objective = -cost[-1]
    if objective == 0:
        x = {v: Fraction(0) for v in names}
        for r in range(rows_n):
            if basis[r] < n:
                x[names[basis[r]]] = rows[r][-1]
        _verify_solution(system, x)
        return Feasible(x)

    # multipliers: reduced cost of artificial r is 1 - y_r
    y = [Fraction(1) - cost[n + r] for r in range(rows_n)]
    certificate = tuple(-y[r] for r in range(m))
    _verify_certificate(system, certificate)
    return Infeasible(certificate)


def _verify_solution(system: LinearSystem, x: RationalVector):
    if any(val < 0 for val in x.values()):
        raise RuntimeError("solver bug: negative entry in solution")
    if sum(x.values()) != 1:
        raise RuntimeError("solver bug: solution not normalized")
    for eq in system.equations:
        if sum(Fraction(co) * x[v] for v, co in eq.items()) != 0:
            raise RuntimeError("solver bug: solution does not satisfy the system")


def _verify_certificate(system: LinearSystem, y):
    for var in system.variables:
        total = sum(y[r] * eq.get(var, 0) for r, eq in enumerate(system.equations))
        if total <= 0:
            raise RuntimeError(f"solver bug: certificate not positive on {var!r}")


def integer_scale(x: RationalVector) -> dict[str, int]:
    """Clear denominators: multiply by the lcm so all entries are integers."""
    if not x or all(v == 0 for v in x.values()):
        raise ValueError("cannot scale the zero vector")
    if any(v < 0 for v in x.values()):
        raise ValueError("entries must be nonnegative")
    scale = math.lcm(*(v.denominator for v in x.values()))
    return {k: int(v * scale) for k, v in x.items()}
