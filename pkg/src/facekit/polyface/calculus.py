"""Polytope calculus: products, translations, sums, images, intersections.

Intersection converts both operands to facet form (exact V-to-H over the
affine hull) and enumerates basic solutions of the combined system back
to a V-representation. Everything stays rational end to end.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..errors import DimensionMismatchError, PreconditionError, ResourceLimitError
from ..ratcore import RatVec, Rel, affine_hull, linalg, lp_feasible
from .polytope import LinMap, VPolytope

_F0 = Fraction(0)
_F1 = Fraction(1)

INTERSECT_DIM_BOUND = 4


def product(p: VPolytope, q: VPolytope) -> VPolytope:
    """Cartesian product; vertex pairs are exactly the product's vertices."""
    verts = [
        RatVec(a.coords + b.coords) for a in p.vertices for b in q.vertices
    ]
    return VPolytope.from_extreme(p.dim + q.dim, verts)


def translate(p: VPolytope, t: RatVec) -> VPolytope:
    if t.dim != p.dim:
        raise DimensionMismatchError("translation dim mismatch")
    return VPolytope.from_extreme(p.dim, [v + t for v in p.vertices])


def msum(p: VPolytope, q: VPolytope) -> VPolytope:
    """Minkowski sum; pairwise vertex sums re-filtered for extremeness."""
    if p.dim != q.dim:
        raise DimensionMismatchError("summand dim mismatch")
    return VPolytope.hull(
        p.dim, [a + b for a in p.vertices for b in q.vertices]
    )


def image(t: LinMap, p: VPolytope) -> VPolytope:
    """Forward image under a linear map; mapped vertices re-filtered."""
    if t.in_dim != p.dim:
        raise DimensionMismatchError("map input dim != polytope dim")
    return VPolytope.hull(t.out_dim, [t.apply(v) for v in p.vertices])


# ------------------------------------------------------------ intersection


def _hrep(p: VPolytope):
    """Exact H-representation over the affine hull.

    Returns (equalities, inequalities) with rows (a, b) meaning a.x = b
    and a.x <= b; together they cut out exactly the polytope.
    """
    n = p.dim
    base, basis = affine_hull(list(p.vertices))
    k = len(basis)
    eqs: list[tuple[RatVec, Fraction]] = []
    for nu in linalg.nullspace([d.coords for d in basis], n):
        vec = RatVec(nu)
        eqs.append((vec, vec.dot(base)))
    if k == 0:
        return eqs, []

    # Chart: pick k coordinate rows where the basis matrix is invertible,
    # then express chart coordinates t(x) = M (x_R - base_R); this is only
    # used jointly with the affine-hull equalities, where it is exact.
    col_rows = [tuple(d[i] for d in basis) for i in range(n)]
    row_idx = linalg.independent_subset(col_rows)
    square = [col_rows[i] for i in row_idx]
    minv_cols = []
    for j in range(k):
        e = [Fraction(int(i == j)) for i in range(k)]
        col = linalg.solve_unique(square, e)
        if col is None:
            raise AssertionError("chart matrix not invertible")
        minv_cols.append(col)
    # minv[r][c]: entry of M^{-1}... rows of M: M = inverse of `square`.
    m_rows = [tuple(minv_cols[c][r] for c in range(k)) for r in range(k)]

    def chart(v: RatVec) -> tuple[Fraction, ...]:
        delta = [v[row_idx[i]] - base[row_idx[i]] for i in range(k)]
        return tuple(
            sum(m_rows[r][i] * delta[i] for i in range(k)) for r in range(k)
        )

    qs = [chart(v) for v in p.vertices]
    ineqs: list[tuple[RatVec, Fraction]] = []
    seen: set[tuple] = set()
    for subset in combinations(range(len(qs)), k):
        pts = [qs[i] for i in subset]
        diffs = [
            tuple(a - b for a, b in zip(pt, pts[0])) for pt in pts[1:]
        ]
        normals = linalg.nullspace(diffs, k) if diffs else linalg.nullspace([], k)
        if len(normals) != 1:
            continue
        c = normals[0]
        d = sum(ci * qi for ci, qi in zip(c, pts[0]))
        vals = [sum(ci * qi for ci, qi in zip(c, q)) for q in qs]
        if all(v <= d for v in vals):
            cc, dd = c, d
        elif all(v >= d for v in vals):
            cc, dd = tuple(-x for x in c), -d
        else:
            continue
        lead = next(x for x in cc if x != 0)
        key = tuple(x / abs(lead) for x in cc) + (dd / abs(lead),)
        if key in seen:
            continue
        seen.add(key)
        # Back to ambient coordinates: (M^T c) acts on x_R.
        amb = [_F0] * n
        for i in range(k):
            coeff = sum(m_rows[r][i] * cc[r] for r in range(k))
            amb[row_idx[i]] = coeff
        avec = RatVec(tuple(amb))
        ineqs.append((avec, dd + avec.dot(base)))
    return eqs, ineqs


def intersect(p: VPolytope, q: VPolytope) -> VPolytope | None:
    """Exact intersection; None when empty.

    Both operands go to facet form; candidate vertices are the basic
    solutions of the combined system, each validated against every
    constraint. Ambient dimension is capped at 4.
    """
    if p.dim != q.dim:
        raise DimensionMismatchError("intersection dim mismatch")
    n = p.dim
    if n > INTERSECT_DIM_BOUND:
        raise ResourceLimitError(
            f"intersection beyond dimension {INTERSECT_DIM_BOUND}"
        )
    eqs_p, ineqs_p = _hrep(p)
    eqs_q, ineqs_q = _hrep(q)
    eqs = eqs_p + eqs_q
    ineqs = ineqs_p + ineqs_q

    cons = [(a, b, Rel.EQ) for a, b in eqs] + [(a, b, Rel.LE) for a, b in ineqs]
    if not lp_feasible(cons, n).feasible:
        return None

    eq_rows = [a.coords for a, _ in eqs]
    eq_rank = linalg.rank(eq_rows) if eq_rows else 0
    free = n - eq_rank

    def satisfies_all(x: list[Fraction]) -> bool:
        for a, b in eqs:
            if sum(ai * xi for ai, xi in zip(a.coords, x)) != b:
                return False
        for a, b in ineqs:
            if sum(ai * xi for ai, xi in zip(a.coords, x)) > b:
                return False
        return True

    candidates: dict[tuple, RatVec] = {}
    for subset in combinations(range(len(ineqs)), free):
        mat = eq_rows + [ineqs[i][0].coords for i in subset]
        rhs = [b for _, b in eqs] + [ineqs[i][1] for i in subset]
        x = linalg.solve_unique(mat, rhs)
        if x is None:
            continue
        if satisfies_all(x):
            key = tuple(x)
            if key not in candidates:
                candidates[key] = RatVec(key)
    if not candidates:
        raise AssertionError("feasible intersection produced no vertex")
    return VPolytope.from_extreme(n, list(candidates.values()))
