"""Constructive refutation of face relative interiority.

When x is not fri in the polytope, some point y of the polytope has a
whole neighbourhood V_y such that no z in V_y allows the segment through
x to extend past x inside the set. Here y can be taken to be any vertex
outside the minimal face of x, and V_y an explicit ball kept away from
that face's affine hull; every grid point of the ball is re-verified by
an exact infeasibility check of the extension ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from ..errors import PreconditionError
from ..ratcore import RatVec, Rel, affine_hull, feasible_with_strict, linalg
from .faces import minimal_face
from .polytope import VPolytope, contains

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class NotInFriWitness:
    """Vertex y and radius r certifying that x is not fri.

    grid_checked counts the re-verified points of the l-inf ball
    B(y, r) meet P; the grid is the 3^dim lattice {y_i - r, y_i, y_i + r}
    (density is a reporting choice, recorded here so consumers can see
    how much of the ball was exercised).
    """

    y: RatVec
    r: Fraction
    grid_checked: int


def chebyshev_distance_to_affine(
    y: RatVec, base: RatVec, basis: tuple[RatVec, ...]
) -> Fraction:
    """Exact l-inf distance from y to base + span(basis).

    Solved by enumerating basic solutions of the epigraph system
    |base + sum_j t_j d_j - y|_i <= s: the minimum is attained at a basic
    point because the feasible region is pointed (the basis directions are
    independent) and s is bounded below by zero.
    """
    n = y.dim
    k = len(basis)
    if k == 0:
        return max(abs(a - b) for a, b in zip(y.coords, base.coords))
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = []
    for i in range(n):
        diff = y[i] - base[i]
        plus = tuple(d[i] for d in basis) + (Fraction(-1),)
        minus = tuple(-d[i] for d in basis) + (Fraction(-1),)
        rows.append((plus, diff))
        rows.append((minus, -diff))
    best: Fraction | None = None
    for subset in combinations(range(len(rows)), k + 1):
        mat = [rows[i][0] for i in subset]
        rhs = [rows[i][1] for i in subset]
        sol = linalg.solve_unique(mat, rhs)
        if sol is None:
            continue
        if all(
            sum(c * v for c, v in zip(row, sol)) <= b for row, b in rows
        ):
            s = sol[k]
            if best is None or s < best:
                best = s
    if best is None:
        raise AssertionError("Chebyshev distance enumeration found no vertex")
    return best


def _ray_extension_feasible(poly: VPolytope, x: RatVec, z: RatVec) -> bool:
    """Whether x + eps (x - z) stays in the polytope for some eps > 0."""
    verts = poly.vertices
    m = len(verts)
    nvar = m + 1  # weights mu, then eps
    weak = []
    for j in range(poly.dim):
        coeff = [w[j] for w in verts] + [-(x[j] - z[j])]
        weak.append((RatVec.of(coeff), x[j], Rel.EQ))
    weak.append((RatVec.of([1] * m + [0]), _F1, Rel.EQ))
    for i in range(m):
        weak.append((RatVec.unit(nvar, i), _F0, Rel.GE))
    strict = [(-RatVec.unit(nvar, m), _F0)]  # eps > 0
    ok, _ = feasible_with_strict(weak, strict, nvar)
    return ok


def notinfri_witness(poly: VPolytope, x: RatVec) -> NotInFriWitness | None:
    """None iff x is fri in the polytope; otherwise a verified witness.

    y is the first vertex (canonical order) outside the minimal face of x,
    r is half the exact l-inf distance from y to that face's affine hull,
    and every point z of the rational grid over B(y, r) that lies in the
    polytope is re-verified: the extension ray from x away from z must be
    exactly infeasible.
    """
    if not contains(poly, x):
        raise PreconditionError("point is not in the polytope")
    fid = minimal_face(poly, x)
    members = set(fid.indices)
    if len(members) == poly.n_vertices:
        return None
    y_idx = next(i for i in range(poly.n_vertices) if i not in members)
    y = poly.vertices[y_idx]
    face_pts = [poly.vertices[i] for i in fid.indices]
    base, basis = affine_hull(face_pts)
    dist = chebyshev_distance_to_affine(y, base, basis)
    if not dist > 0:
        raise AssertionError("vertex outside the face lies in its affine hull")
    r = dist / 2
    checked = 0
    for offsets in product((-r, _F0, r), repeat=poly.dim):
        z = RatVec(tuple(a + o for a, o in zip(y.coords, offsets)))
        if not contains(poly, z):
            continue
        if _ray_extension_feasible(poly, x, z):
            raise AssertionError(
                f"witness ball leaked: extension past {x} through {z} feasible"
            )
        checked += 1
    if checked == 0:
        raise AssertionError("witness ball contained no polytope point")
    return NotInFriWitness(y=y, r=r, grid_checked=checked)
