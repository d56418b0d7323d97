# cython: language_level=3
"""Compiled exact phase-I simplex using gmpy2.mpq arithmetic.

Same algorithm, pivot rule, and outputs as simplex_py.phase1 (Bland's
rule, artificials kept in the tableau, dual read off the cost row), so
both kernels produce identical witnesses and duals for identical inputs.
The speedup comes from gmpy2's rational arithmetic plus compiled loop
bookkeeping; the boundary converts Fraction <-> mpq.
"""

from fractions import Fraction

from gmpy2 import mpq

cdef object _Q0 = mpq(0)
cdef object _Q1 = mpq(1)


def phase1(list rows, list rhs):
    """See facekit.ratcore._kernel.simplex_py.phase1."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = len(rows[0]) if m else 0
    if m == 0:
        return True, [], None

    cdef Py_ssize_t width = n + m
    cdef Py_ssize_t i, j, enter, leave
    cdef list tab = []
    cdef list row, prow
    cdef object s, total, a, ratio, best, pv, inv, f

    for i in range(m):
        row = [mpq(v.numerator, v.denominator) for v in rows[i]]
        for j in range(m):
            row.append(_Q1 if j == i else _Q0)
        row.append(mpq(rhs[i].numerator, rhs[i].denominator))
        tab.append(row)
    cdef list basis = [n + i for i in range(m)]

    cdef list cbar = [_Q0] * (width + 1)
    for j in range(n):
        s = _Q0
        for i in range(m):
            s = s + tab[i][j]
        cbar[j] = -s
    total = _Q0
    for i in range(m):
        total = total + tab[i][width]
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
        best = None
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
            raise AssertionError("phase-1 simplex reported unbounded")

        # Pivot on (leave, enter).
        prow = tab[leave]
        pv = prow[enter]
        if pv != 1:
            inv = _Q1 / pv
            for j in range(width + 1):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(m):
            if i == leave:
                continue
            row = tab[i]
            f = row[enter]
            if f:
                for j in range(width + 1):
                    if prow[j]:
                        row[j] = row[j] - f * prow[j]
        f = cbar[enter]
        if f:
            for j in range(width + 1):
                if prow[j]:
                    cbar[j] = cbar[j] - f * prow[j]
        basis[leave] = enter

    cdef list out
    if cbar[width] == 0:
        out = [Fraction(0)] * n
        for i in range(m):
            if basis[i] < n:
                a = tab[i][width]
                out[basis[i]] = Fraction(int(a.numerator), int(a.denominator))
        return True, out, None
    out = []
    for i in range(m):
        a = _Q1 - cbar[n + i]
        out.append(Fraction(int(a.numerator), int(a.denominator)))
    return False, None, out
