"""Seeded random instances: polytopes and deterministic sample mixtures.

Every trial derives its own rng from (seed, property id, trial index)
through sha256, so parallel and serial runs of the same suite see the
same instances.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from ..errors import GenerationError, PreconditionError
from ..ratcore import RatVec
from .. import polyface as pf

_F1 = Fraction(1)


@dataclass(frozen=True)
class GenConfig:
    """Bounds for random polytope generation plus the trial budget."""

    seed: int = 0
    dim_lo: int = 2
    dim_hi: int = 4
    verts_lo: int = 3
    verts_hi: int = 8
    max_denominator: int = 12
    trials: int = 200

    def __post_init__(self):
        if not (1 <= self.dim_lo <= self.dim_hi):
            raise PreconditionError("dimension range must satisfy 1 <= lo <= hi")
        if not (2 <= self.verts_lo <= self.verts_hi):
            raise PreconditionError("vertex range must satisfy 2 <= lo <= hi")
        if self.max_denominator < 1:
            raise PreconditionError("denominator bound must be positive")
        if self.trials < 1:
            raise PreconditionError("trial count must be positive")

    def with_caps(self, dim_hi: int | None = None, verts_hi: int | None = None) -> "GenConfig":
        """Tighter copy used by suites whose checks scale badly."""
        out = self
        if dim_hi is not None and dim_hi < out.dim_hi:
            out = replace(out, dim_hi=dim_hi, dim_lo=min(out.dim_lo, dim_hi))
        if verts_hi is not None and verts_hi < out.verts_hi:
            out = replace(out, verts_hi=verts_hi, verts_lo=min(out.verts_lo, verts_hi))
        return out


def sub_seed(seed: int, property_id: str, trial: int) -> int:
    digest = hashlib.sha256(f"{seed}:{property_id}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def rng_for(cfg: GenConfig, property_id: str, trial: int) -> random.Random:
    return random.Random(sub_seed(cfg.seed, property_id, trial))


def _rand_coord(rng: random.Random, cfg: GenConfig) -> Fraction:
    den = rng.randint(1, cfg.max_denominator)
    num = rng.randint(-2 * cfg.max_denominator, 2 * cfg.max_denominator)
    return Fraction(num, den)


def gen_polytope(cfg: GenConfig, rng: random.Random | None = None) -> pf.VPolytope:
    """Random polytope in canonical extreme-point form.

    The raw draw is re-hulled, which may drop interior points; draws whose
    hull falls outside the configured vertex range, or collapses to a
    single point, are retried up to 100 times.
    """
    rng = rng if rng is not None else random.Random(cfg.seed)
    for _ in range(100):
        dim = rng.randint(cfg.dim_lo, cfg.dim_hi)
        count = rng.randint(cfg.verts_lo, cfg.verts_hi)
        pts = [
            RatVec.of([_rand_coord(rng, cfg) for _ in range(dim)])
            for _ in range(count)
        ]
        poly = pf.VPolytope.hull(dim, pts)
        if poly.n_vertices < max(2, cfg.verts_lo) or poly.n_vertices > cfg.verts_hi:
            continue
        return poly
    raise GenerationError(
        "no admissible polytope within 100 draws; bounds are likely degenerate"
    )


def _rand_combination(poly: pf.VPolytope, rng: random.Random) -> RatVec:
    m = poly.n_vertices
    weights = [Fraction(rng.randint(0, 6)) for _ in range(m)]
    total = sum(weights)
    if total == 0:
        weights[rng.randrange(m)] = _F1
        total = _F1
    acc = RatVec.zero(poly.dim)
    for w, v in zip(weights, poly.vertices):
        acc = acc + v.scale(w / total)
    return acc


def sample_points(
    poly: pf.VPolytope,
    cfg: GenConfig,
    rng: random.Random,
    midpoints: bool = True,
    combos: int = 3,
) -> list[RatVec]:
    """Deterministic sample mixture, every point a member.

    All vertices, midpoints of actual edges (pairs filtered through the
    face test), the centroid, and `combos` random rational convex
    combinations; duplicates dropped with order preserved.
    """
    out: list[RatVec] = list(poly.vertices)
    if midpoints:
        for i in range(poly.n_vertices):
            for j in range(i + 1, poly.n_vertices):
                if pf.is_face(poly, pf.FaceId((i, j))):
                    mid = (poly.vertices[i] + poly.vertices[j]).scale(
                        Fraction(1, 2)
                    )
                    out.append(mid)
    out.append(poly.centroid())
    for _ in range(combos):
        out.append(_rand_combination(poly, rng))
    seen: set[tuple] = set()
    unique: list[RatVec] = []
    for p in out:
        if p.coords not in seen:
            seen.add(p.coords)
            unique.append(p)
    return unique
