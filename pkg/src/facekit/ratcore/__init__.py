"""Exact rational core: vectors, cones, and LP feasibility.

Everything is computed over fractions.Fraction; floats are rejected at
the boundary so no binary rounding can leak in. The single LP kernel
decides feasibility only (no objectives). Witnesses and infeasibility
certificates are re-verified by exact substitution before they are
returned, so a caller can treat any returned LpOutcome as proof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionMismatchError, PreconditionError
from . import _kernel, linalg

Rat = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def rat(value) -> Fraction:
    """Canonical rational from int, str ('p/q' or 'p'), or Fraction.

    Floats are rejected: silent binary rounding would defeat the exactness
    contract of every routine in this package.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, str, or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class RatVec:
    """Immutable exact rational vector."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "RatVec":
        return cls(tuple(rat(v) for v in values))

    @classmethod
    def zero(cls, dim: int) -> "RatVec":
        return cls(tuple([_F0] * dim))

    @classmethod
    def unit(cls, dim: int, axis: int) -> "RatVec":
        return cls(tuple(_F1 if i == axis else _F0 for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __add__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RatVec":
        return RatVec(tuple(-a for a in self.coords))

    def scale(self, c) -> "RatVec":
        c = rat(c)
        return RatVec(tuple(c * a for a in self.coords))

    def dot(self, other: "RatVec") -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), _F0)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check_dim(self, other: "RatVec") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"vector dims differ: {len(self.coords)} vs {len(other.coords)}"
            )

    def __repr__(self) -> str:
        return "RatVec(" + ", ".join(str(c) for c in self.coords) + ")"


class Rel(enum.Enum):
    """Constraint relation for lp_feasible rows."""

    LE = "<="
    EQ = "=="
    GE = ">="


_REL_ALIASES = {
    Rel.LE: Rel.LE, Rel.EQ: Rel.EQ, Rel.GE: Rel.GE,
    "<=": Rel.LE, "==": Rel.EQ, "=": Rel.EQ, ">=": Rel.GE,
}

# A constraint is (a, b, rel) meaning a . x  rel  b.
Constraint = tuple[RatVec, Fraction, Rel]


@dataclass(frozen=True)
class LpOutcome:
    """Result of an exact feasibility query.

    status is 'feasible' (witness set, certificate None) or 'infeasible'
    (witness None, certificate set). The certificate lam satisfies
    sum_i lam_i a_i = 0, sum_i lam_i b_i < 0, with lam_i >= 0 on <= rows,
    lam_i <= 0 on >= rows, and free on equations; substituting it back is
    exactly the re-verification performed before construction.
    """

    status: str
    witness: RatVec | None = None
    certificate: RatVec | None = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def _normalize(constraints, dim) -> list[Constraint]:
    rows: list[Constraint] = []
    for k, (a, b, rel) in enumerate(constraints):
        vec = a if isinstance(a, RatVec) else RatVec.of(a)
        if vec.dim != dim:
            raise DimensionMismatchError(
                f"constraint {k}: coefficient dim {vec.dim} != ambient dim {dim}"
            )
        try:
            relation = _REL_ALIASES[rel]
        except (KeyError, TypeError):
            raise PreconditionError(f"constraint {k}: unknown relation {rel!r}") from None
        rows.append((vec, rat(b), relation))
    return rows


def satisfies(constraints, x: RatVec, dim: int | None = None) -> bool:
    """Exact substitution check of x against every constraint."""
    rows = _normalize(constraints, x.dim if dim is None else dim)
    for a, b, rel in rows:
        v = a.dot(x)
        if rel is Rel.LE and not v <= b:
            return False
        if rel is Rel.EQ and not v == b:
            return False
        if rel is Rel.GE and not v >= b:
            return False
    return True


def lp_feasible(constraints, dim: int) -> LpOutcome:
    """Exact feasibility of a finite system of linear constraints on R^dim.

    Deterministic for a fixed input: the kernel pivots with Bland's rule,
    so reruns yield byte-identical witnesses and certificates.
    """
    rows = _normalize(constraints, dim)
    m = len(rows)
    if m == 0:
        return LpOutcome("feasible", RatVec.zero(dim), None)

    # Orient >= rows as <= (sigma1 tracks the flip), keep equations.
    oriented: list[tuple[RatVec, Fraction, bool]] = []
    sigma1: list[int] = []
    for a, b, rel in rows:
        if rel is Rel.GE:
            oriented.append((-a, -b, False))
            sigma1.append(-1)
        else:
            oriented.append((a, b, rel is Rel.EQ))
            sigma1.append(1)

    n_le = sum(1 for _, _, is_eq in oriented if not is_eq)
    ncols = 2 * dim + n_le

    std_rows: list[list[Fraction]] = []
    std_rhs: list[Fraction] = []
    sigma2: list[int] = []
    slack_at = 0
    for a, b, is_eq in oriented:
        s2 = 1 if b >= 0 else -1
        row = [_F0] * ncols
        for j, v in enumerate(a.coords):
            if v:
                row[j] = s2 * v
                row[dim + j] = -s2 * v
        if not is_eq:
            row[2 * dim + slack_at] = Fraction(s2)
            slack_at += 1
        std_rows.append(row)
        std_rhs.append(s2 * b)
        sigma2.append(s2)

    feasible, x, dual = _kernel.phase1(std_rows, std_rhs)
    if feasible:
        witness = RatVec(tuple(x[j] - x[dim + j] for j in range(dim)))
        if not satisfies(rows, witness, dim):
            raise AssertionError("LP witness failed exact re-verification")
        return LpOutcome("feasible", witness, None)

    lam: list[Fraction] = []
    for i in range(m):
        lam.append(Fraction(-sigma2[i] * sigma1[i]) * dual[i])
    # Re-verify the Farkas certificate exactly before returning it.
    combo = [_F0] * dim
    value = _F0
    for (a, b, rel), li in zip(rows, lam):
        for j, v in enumerate(a.coords):
            combo[j] += li * v
        value += li * b
        if rel is Rel.LE and li < 0:
            raise AssertionError("certificate sign violated on a <= row")
        if rel is Rel.GE and li > 0:
            raise AssertionError("certificate sign violated on a >= row")
    if any(c != 0 for c in combo) or not value < 0:
        raise AssertionError("infeasibility certificate failed exact re-verification")
    return LpOutcome("infeasible", None, RatVec(tuple(lam)))


def feasible_with_strict(weak, strict, dim: int) -> tuple[bool, RatVec | None]:
    """Feasibility of {weak constraints} plus strict rows a . x < b.

    Reduced to two non-strict feasibility calls: the relaxation, then a
    homogenized system with a scale variable tau >= 0 and unit slack on
    each strict row. A tau = 0 ray is combined with the relaxation witness
    at an explicit rational magnitude. The returned witness is re-verified
    exactly against every weak and strict row.
    """
    weak_rows = _normalize(weak, dim)
    strict_rows = [(a if isinstance(a, RatVec) else RatVec.of(a), rat(b)) for a, b in strict]
    for a, _ in strict_rows:
        if a.dim != dim:
            raise DimensionMismatchError("strict row dim mismatch")

    relaxed = list(weak_rows) + [(a, b, Rel.LE) for a, b in strict_rows]
    out1 = lp_feasible(relaxed, dim)
    if not out1.feasible:
        return False, None
    if not strict_rows:
        return True, out1.witness

    # Homogenized system over (x', tau).
    hom: list[tuple[RatVec, Fraction, Rel]] = []
    for a, b, rel in weak_rows:
        hom.append((RatVec(a.coords + (-b,)), _F0, rel))
    for a, b in strict_rows:
        hom.append((RatVec(a.coords + (-b,)), Fraction(-1), Rel.LE))
    hom.append((RatVec.unit(dim + 1, dim), _F0, Rel.GE))
    out2 = lp_feasible(hom, dim + 1)
    if not out2.feasible:
        return False, None

    ray = out2.witness
    assert ray is not None
    tau = ray[dim]
    xprime = RatVec(ray.coords[:dim])
    if tau > 0:
        witness = xprime.scale(_F1 / tau)
    else:
        x0 = out1.witness
        assert x0 is not None
        bound = _F0
        for a, b in strict_rows:
            gap = a.dot(x0) - b
            if gap > bound:
                bound = gap
        witness = x0 + xprime.scale(bound + 1)

    if not satisfies(weak_rows, witness, dim):
        raise AssertionError("strict-system witness failed weak re-verification")
    for a, b in strict_rows:
        if not a.dot(witness) < b:
            raise AssertionError("strict-system witness failed strict re-verification")
    return True, witness


@dataclass(frozen=True)
class ConeGen:
    """Finitely generated convex cone cone(S) of nonnegative combinations.

    Construction drops zero generators and exact duplicates; an empty
    generator tuple denotes the trivial cone {0}.
    """

    dim: int
    generators: tuple[RatVec, ...]

    @classmethod
    def of(cls, dim: int, vecs: Iterable) -> "ConeGen":
        seen: dict[tuple, None] = {}
        gens: list[RatVec] = []
        for v in vecs:
            w = v if isinstance(v, RatVec) else RatVec.of(v)
            if w.dim != dim:
                raise DimensionMismatchError(f"generator dim {w.dim} != {dim}")
            if w.is_zero() or w.coords in seen:
                continue
            seen[w.coords] = None
            gens.append(w)
        return cls(dim, tuple(gens))


@dataclass(frozen=True)
class LinealityBasis:
    """Linearly independent basis of the lineality space lin K = K meet -K."""

    dim: int
    basis: tuple[RatVec, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def in_cone(cone: ConeGen, d: RatVec) -> bool:
    """Whether d is a nonnegative combination of the cone's generators."""
    if d.dim != cone.dim:
        raise DimensionMismatchError("direction dim mismatch")
    gens = cone.generators
    if not gens:
        return d.is_zero()
    m = len(gens)
    constraints: list[tuple[RatVec, Fraction, Rel]] = []
    for j in range(cone.dim):
        constraints.append((RatVec.of([g[j] for g in gens]), d[j], Rel.EQ))
    for i in range(m):
        constraints.append((RatVec.unit(m, i), _F0, Rel.GE))
    return lp_feasible(constraints, m).feasible


def cone_lineality(cone: ConeGen) -> LinealityBasis:
    """Basis of lin K, computed as the span of generators whose negation
    stays in the cone (for finitely generated cones these span lin K)."""
    if not cone.generators:
        raise PreconditionError("cone_lineality requires a nonempty generator list")
    symmetric = [g for g in cone.generators if in_cone(cone, -g)]
    rows = [g.coords for g in symmetric]
    idx = linalg.independent_subset(rows)
    return LinealityBasis(cone.dim, tuple(symmetric[i] for i in idx))


def affine_hull(points: Sequence[RatVec]) -> tuple[RatVec, tuple[RatVec, ...]]:
    """Base point and independent direction basis of aff(points)."""
    if not points:
        raise PreconditionError("affine_hull requires at least one point")
    base = points[0]
    diffs = [p - base for p in points[1:]]
    rows = [d.coords for d in diffs]
    idx = linalg.independent_subset(rows)
    return base, tuple(diffs[i] for i in idx)


def kernel_backend() -> str:
    """Active LP kernel backend name ('compiled' or 'python')."""
    return _kernel.kernel_backend()


__all__ = [
    "Rat", "rat", "RatVec", "Rel", "Constraint", "LpOutcome",
    "lp_feasible", "feasible_with_strict", "satisfies",
    "ConeGen", "LinealityBasis", "in_cone", "cone_lineality", "affine_hull",
    "kernel_backend", "linalg",
]
