"""Rational V-polytopes in canonical form.

A VPolytope stores exactly its extreme points, sorted lexicographically,
so structural equality coincides with set equality and every algorithm
downstream may assume the vertex list is irredundant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionMismatchError, PreconditionError
from ..ratcore import RatVec, Rel, lp_feasible, rat

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class FaceId:
    """A face of a VPolytope, identified by its sorted vertex indices."""

    indices: tuple[int, ...]

    @classmethod
    def of(cls, idx: Iterable[int]) -> "FaceId":
        return cls(tuple(sorted(set(int(i) for i in idx))))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __le__(self, other: "FaceId") -> bool:
        return set(self.indices) <= set(other.indices)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of finitely many rational points, stored canonically."""

    dim: int
    vertices: tuple[RatVec, ...]

    @classmethod
    def hull(cls, dim: int, points: Iterable) -> "VPolytope":
        """Canonicalize an arbitrary point list: dedupe, drop non-extreme
        points (each tested by an exact LP against the others), sort."""
        pts: list[RatVec] = []
        seen: set[tuple] = set()
        for p in points:
            v = p if isinstance(p, RatVec) else RatVec.of(p)
            if v.dim != dim:
                raise DimensionMismatchError(f"point dim {v.dim} != {dim}")
            if v.coords not in seen:
                seen.add(v.coords)
                pts.append(v)
        if not pts:
            raise PreconditionError("a polytope needs at least one point")
        extreme = [
            p for i, p in enumerate(pts)
            if not _in_hull(pts[:i] + pts[i + 1:], p)
        ]
        return cls(dim, tuple(sorted(extreme, key=lambda v: v.coords)))

    @classmethod
    def from_extreme(cls, dim: int, points: Sequence[RatVec]) -> "VPolytope":
        """Trusted constructor for points already known to be extreme."""
        return cls(dim, tuple(sorted(points, key=lambda v: v.coords)))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def subpolytope(self, face: FaceId) -> "VPolytope":
        """The face as a polytope in the same ambient space."""
        if not face.indices:
            raise PreconditionError("empty face has no polytope")
        return VPolytope.from_extreme(
            self.dim, [self.vertices[i] for i in face.indices]
        )

    def centroid(self) -> RatVec:
        """Vertex average; always in the relative interior."""
        acc = RatVec.zero(self.dim)
        for v in self.vertices:
            acc = acc + v
        return acc.scale(Fraction(1, len(self.vertices)))

    def full_face(self) -> FaceId:
        return FaceId(tuple(range(len(self.vertices))))


def _in_hull(points: Sequence[RatVec], x: RatVec) -> bool:
    if not points:
        return False
    m = len(points)
    cons = []
    for j in range(x.dim):
        cons.append((RatVec.of([p[j] for p in points]), x[j], Rel.EQ))
    cons.append((RatVec.of([1] * m), _F1, Rel.EQ))
    for i in range(m):
        cons.append((RatVec.unit(m, i), _F0, Rel.GE))
    return lp_feasible(cons, m).feasible


def contains(poly: VPolytope, x: RatVec) -> bool:
    """Exact membership of x in the polytope."""
    if x.dim != poly.dim:
        raise DimensionMismatchError("point dim != polytope dim")
    return _in_hull(poly.vertices, x)


@dataclass(frozen=True)
class LinMap:
    """Exact linear map given by its rows; applies to RatVec by dot products."""

    rows: tuple[RatVec, ...]

    @classmethod
    def of(cls, matrix: Iterable[Iterable]) -> "LinMap":
        rows = tuple(r if isinstance(r, RatVec) else RatVec.of(r) for r in matrix)
        if not rows:
            raise PreconditionError("a linear map needs at least one row")
        width = rows[0].dim
        if any(r.dim != width for r in rows):
            raise DimensionMismatchError("ragged matrix rows")
        return cls(rows)

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(tuple(RatVec.unit(n, i) for i in range(n)))

    @classmethod
    def scaling(cls, n: int, c) -> "LinMap":
        c = rat(c)
        return cls(tuple(RatVec.unit(n, i).scale(c) for i in range(n)))

    @property
    def in_dim(self) -> int:
        return self.rows[0].dim

    @property
    def out_dim(self) -> int:
        return len(self.rows)

    def apply(self, x: RatVec) -> RatVec:
        if x.dim != self.in_dim:
            raise DimensionMismatchError("map input dim mismatch")
        return RatVec(tuple(r.dot(x) for r in self.rows))
