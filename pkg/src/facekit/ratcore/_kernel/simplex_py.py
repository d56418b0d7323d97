"""Pure-Python exact phase-I simplex over fractions.Fraction.

Solves feasibility of the standard-form system

    A x = b,  x >= 0,  b >= 0 entrywise,

by minimizing the sum of artificial variables with Bland's anti-cycling
pivot rule (smallest eligible column index enters; ties in the ratio test
broken by smallest basis variable index). Termination is guaranteed and
the run is fully deterministic for a fixed input.

Artificial columns stay in the tableau so that at optimality the dual row
vector can be read off: y_i = 1 - reduced_cost(artificial_i). When the
optimum is positive (infeasible input) that y is a Farkas witness:
y^T A <= 0 componentwise on structural columns is not required here in
general, but y^T A_j = 0 for the paired +/- structural columns used by
the caller and y^T b > 0; the caller re-verifies whatever certificate it
derives from y before trusting it.
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def phase1(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> tuple[bool, list[Fraction] | None, list[Fraction] | None]:
    """Feasibility of {A x = b, x >= 0} with b >= 0.

    Returns (feasible, witness, dual): witness is x with A x = b, x >= 0
    when feasible; dual is the length-m vector y described in the module
    docstring when infeasible. Exactly one of witness/dual is not None.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0:
        return True, [], None

    # Tableau columns: 0..n-1 structural, n..n+m-1 artificial, last = rhs.
    tab = [
        list(rows[i]) + [(_F1 if j == i else _F0) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    width = n + m

    # Reduced-cost row for min sum(artificials); artificials start basic,
    # so subtract every constraint row from the cost row. Last entry holds
    # minus the current objective value.
    cbar = [_F0] * (width + 1)
    for j in range(n):
        s = _F0
        for i in range(m):
            s += tab[i][j]
        cbar[j] = -s
    total = _F0
    for i in range(m):
        total += rhs[i]
    cbar[width] = -total

    while True:
        enter = -1
        for j in range(width):
            if cbar[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            # Objective is bounded below by zero; an improving unbounded
            # direction cannot exist.
            raise AssertionError("phase-1 simplex reported unbounded")
        _pivot(tab, cbar, basis, leave, enter, m, width)

    if cbar[width] == 0:
        x = [_F0] * n
        for i in range(m):
            if basis[i] < n:
                x[basis[i]] = tab[i][width]
        return True, x, None
    dual = [_F1 - cbar[n + i] for i in range(m)]
    return False, None, dual


def _pivot(tab, cbar, basis, leave, enter, m, width):
    prow = tab[leave]
    pv = prow[enter]
    if pv != 1:
        inv = _F1 / pv
        for j in range(width + 1):
            if prow[j]:
                prow[j] *= inv
    for i in range(m):
        if i == leave:
            continue
        row = tab[i]
        f = row[enter]
        if f:
            for j in range(width + 1):
                if prow[j]:
                    row[j] -= f * prow[j]
    f = cbar[enter]
    if f:
        for j in range(width + 1):
            if prow[j]:
                cbar[j] -= f * prow[j]
    basis[leave] = enter
