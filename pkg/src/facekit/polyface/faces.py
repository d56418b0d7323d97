"""Minimal faces and interior classification for V-polytopes.

Two independent routes compute the minimal face containing a point:

  minimal_face         intersects the polytope with x + lin cone(V - x),
                        where lin is the lineality space of the cone of
                        vertex directions at x;
  minimal_face_oracle  collects the vertices v admitting a segment [v, z]
                        inside the polytope with x strictly between.

Their agreement is a standing cross-check (the property harness and the
acceptance suite both enforce it). Interior classification evaluates each
of the four notions by its own definition rather than deriving any flag
from another, so a bug in one path cannot silently hide in the rest.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import PreconditionError, ResourceLimitError
from ..ratcore import (
    ConeGen,
    RatVec,
    Rel,
    feasible_with_strict,
    in_cone,
    linalg,
    lp_feasible,
)
from .polytope import FaceId, VPolytope, contains

_F0 = Fraction(0)
_F1 = Fraction(1)

DEFAULT_ENUM_BOUND = 12
ENUM_BOUND_ENV = "FACEKIT_ENUM_BOUND"


@dataclass(frozen=True)
class InteriorVerdict:
    """Membership flags for the four interior notions at one point.

    For polytopes the four notions provably coincide; the flags are still
    computed separately so the coincidence is observed, not assumed.
    """

    ri: bool
    icr: bool
    fri: bool
    qri: bool

    @property
    def chain_ok(self) -> bool:
        """ri implies icr implies fri implies qri."""
        return (not self.ri or self.icr) and (not self.icr or self.fri) and (
            not self.fri or self.qri
        )

    def as_flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.ri, self.icr, self.fri, self.qri)


def _require_member(poly: VPolytope, x: RatVec) -> None:
    if not contains(poly, x):
        raise PreconditionError("point is not in the polytope")


def _direction_cone(poly: VPolytope, x: RatVec) -> ConeGen:
    return ConeGen.of(poly.dim, [v - x for v in poly.vertices])


def _symmetric_generator_flags(cone: ConeGen) -> list[bool]:
    return [in_cone(cone, -g) for g in cone.generators]


def _lineality_basis(cone: ConeGen, flags: list[bool]) -> list[RatVec]:
    sym = [g for g, ok in zip(cone.generators, flags) if ok]
    idx = linalg.independent_subset([g.coords for g in sym])
    return [sym[i] for i in idx]


def minimal_face(poly: VPolytope, x: RatVec) -> FaceId:
    """Vertex set of the smallest face of the polytope containing x."""
    _require_member(poly, x)
    cone = _direction_cone(poly, x)
    if not cone.generators:
        return poly.full_face()
    flags = _symmetric_generator_flags(cone)
    basis = _lineality_basis(cone, flags)
    rows = [b.coords for b in basis]
    picked = [
        i for i, v in enumerate(poly.vertices)
        if linalg.span_contains(rows, (v - x).coords)
    ]
    return FaceId(tuple(picked))


def minimal_face_oracle(poly: VPolytope, x: RatVec) -> FaceId:
    """Independent route to the same face via segment membership.

    Vertex v belongs to the minimal face iff v = x or some z in the
    polytope puts x strictly inside [v, z]. With z as a convex combination
    sum(nu'_w w) and mu the segment parameter, substituting nu = mu * nu'
    linearizes the query into one strict feasibility problem.
    """
    _require_member(poly, x)
    verts = poly.vertices
    m = len(verts)
    picked: list[int] = []
    for i, v in enumerate(verts):
        if v == x:
            picked.append(i)
            continue
        # Variables: nu_0..nu_{m-1}, mu. Constraints:
        #   sum_w nu_w w_j - mu v_j = x_j - v_j   (coordinates)
        #   sum_w nu_w - mu = 0
        #   nu >= 0, 0 < mu < 1.
        nvar = m + 1
        weak = []
        for j in range(poly.dim):
            coeff = [w[j] for w in verts] + [-v[j]]
            weak.append((RatVec.of(coeff), x[j] - v[j], Rel.EQ))
        weak.append((RatVec.of([1] * m + [-1]), _F0, Rel.EQ))
        for w_idx in range(m):
            weak.append((RatVec.unit(nvar, w_idx), _F0, Rel.GE))
        strict = [
            (-RatVec.unit(nvar, m), _F0),       # -mu < 0
            (RatVec.unit(nvar, m), _F1),        # mu < 1
        ]
        ok, _ = feasible_with_strict(weak, strict, nvar)
        if ok:
            picked.append(i)
    return FaceId(tuple(picked))


def _strictly_positive_weights(poly: VPolytope, x: RatVec) -> bool:
    """Whether x is a convex combination of the vertices with all weights
    positive; for a canonical vertex list this is exactly relative
    interiority in the affine hull."""
    verts = poly.vertices
    m = len(verts)
    weak = []
    for j in range(poly.dim):
        weak.append((RatVec.of([v[j] for v in verts]), x[j], Rel.EQ))
    weak.append((RatVec.of([1] * m), _F1, Rel.EQ))
    strict = [(-RatVec.unit(m, i), _F0) for i in range(m)]
    ok, _ = feasible_with_strict(weak, strict, m)
    return ok


def interiors(poly: VPolytope, x: RatVec) -> InteriorVerdict:
    """Classify x against all four interior notions, each by definition:

      ri   strictly positive vertex weights (interior within the affine hull);
      icr  every vertex direction is reversible inside cone(V - x);
      fri  the minimal face exhausts the vertex set (closure then trivially
           covers the polytope);
      qri  cone(V - x), already closed, has lineality of full generator rank,
           i.e. is a linear subspace.
    """
    _require_member(poly, x)
    ri = _strictly_positive_weights(poly, x)
    cone = _direction_cone(poly, x)
    if not cone.generators:
        return InteriorVerdict(ri=ri, icr=True, fri=True, qri=True)
    flags = _symmetric_generator_flags(cone)
    icr = all(flags)
    basis = _lineality_basis(cone, flags)
    rows = [b.coords for b in basis]
    fri = all(
        linalg.span_contains(rows, (v - x).coords) for v in poly.vertices
    )
    gen_rank = linalg.rank([g.coords for g in cone.generators])
    qri = len(basis) == gen_rank
    return InteriorVerdict(ri=ri, icr=icr, fri=fri, qri=qri)


def is_face(poly: VPolytope, face: FaceId) -> bool:
    """Exposed-face test: some functional is constant on the candidate
    vertices and strictly smaller on all the others."""
    idx = set(face.indices)
    if any(i < 0 or i >= poly.n_vertices for i in idx):
        raise PreconditionError("face index out of range")
    n = poly.dim
    # Variables (c, b); rows are homogeneous so strictness scales freely.
    weak = []
    strict = []
    for i, v in enumerate(poly.vertices):
        row = RatVec(v.coords + (Fraction(-1),))
        if i in idx:
            weak.append((row, _F0, Rel.EQ))
        else:
            strict.append((row, _F0))
    ok, _ = feasible_with_strict(weak, strict, n + 1)
    return ok


def _enum_bound(bound: int | None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get(ENUM_BOUND_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(
                f"{ENUM_BOUND_ENV} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_ENUM_BOUND


def enumerate_faces(poly: VPolytope, bound: int | None = None) -> list[FaceId]:
    """All faces (including the empty face and the polytope itself) as
    vertex-index sets, sorted by cardinality then lexicographically.

    Brute force over vertex subsets with an LP filter per candidate; the
    vertex count is capped (default 12, env FACEKIT_ENUM_BOUND overrides).
    """
    limit = _enum_bound(bound)
    m = poly.n_vertices
    if m > limit:
        raise ResourceLimitError(
            f"face enumeration over {m} vertices exceeds bound {limit}"
        )
    found: list[FaceId] = []
    for k in range(m + 1):
        for combo in combinations(range(m), k):
            fid = FaceId(combo)
            if is_face(poly, fid):
                found.append(fid)
    return found


def in_relative_interior_of_face(
    poly: VPolytope, face: FaceId, x: RatVec
) -> bool:
    """Whether x lies in the relative interior of the given face."""
    if not face.indices:
        return False
    return _strictly_positive_weights(poly.subpolytope(face), x)


def decompose(
    poly: VPolytope, samples, bound: int | None = None
) -> dict[RatVec, FaceId]:
    """Assign every sample to the face whose relative interior holds it.

    The assignment is verified against the full face list: each sample
    must lie in the relative interior of its own minimal face and of no
    other face. Violations raise, because they indicate a broken face
    computation, not bad input.
    """
    faces = enumerate_faces(poly, bound)
    out: dict[RatVec, FaceId] = {}
    for p in samples:
        x = p if isinstance(p, RatVec) else RatVec.of(p)
        _require_member(poly, x)
        fid = minimal_face(poly, x)
        holders = [
            g for g in faces if in_relative_interior_of_face(poly, g, x)
        ]
        if holders != [fid]:
            raise AssertionError(
                f"decomposition not a partition at {x}: minimal {fid.indices}, "
                f"interiors {[g.indices for g in holders]}"
            )
        out[x] = fid
    return out
