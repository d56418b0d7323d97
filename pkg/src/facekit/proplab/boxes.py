"""Half-open boxes with per-facet closure flags.

A box with every facet flag set is closed; clearing flags opens facets
one at a time, which realizes chains A within B within the closure of A
over the same open interior. Because the box is full-dimensional and
convex with nonempty interior, all four interior notions agree with the
open box, which makes the analytic verdict exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from ..polyface import InteriorVerdict
from ..ratcore import RatVec


@dataclass(frozen=True)
class FlaggedBox:
    """Product of intervals in dimension at most 3.

    lo_closed[i] / hi_closed[i] state whether the facet x_i = lo_i /
    x_i = hi_i belongs to the set.
    """

    lo: RatVec
    hi: RatVec
    lo_closed: tuple[bool, ...]
    hi_closed: tuple[bool, ...]

    def __post_init__(self):
        d = self.lo.dim
        if d < 1 or d > 3:
            raise PreconditionError("flagged boxes live in dimension 1 to 3")
        if self.hi.dim != d or len(self.lo_closed) != d or len(self.hi_closed) != d:
            raise PreconditionError("bound and flag lengths must match the dimension")
        for a, b in zip(self.lo.coords, self.hi.coords):
            if not a < b:
                raise PreconditionError("need lo < hi on every axis")

    @property
    def dim(self) -> int:
        return self.lo.dim

    def contains(self, x: RatVec) -> bool:
        if x.dim != self.dim:
            return False
        for xi, a, b, ca, cb in zip(
            x.coords, self.lo.coords, self.hi.coords, self.lo_closed, self.hi_closed
        ):
            if xi < a or (xi == a and not ca):
                return False
            if xi > b or (xi == b and not cb):
                return False
        return True

    def strictly_inside(self, x: RatVec) -> bool:
        return x.dim == self.dim and all(
            a < xi < b
            for xi, a, b in zip(x.coords, self.lo.coords, self.hi.coords)
        )

    def closure(self) -> "FlaggedBox":
        d = self.dim
        return FlaggedBox(self.lo, self.hi, (True,) * d, (True,) * d)

    def close_facets(self, lo_extra: tuple[bool, ...], hi_extra: tuple[bool, ...]) -> "FlaggedBox":
        """Superset of self obtained by closing additional facets."""
        return FlaggedBox(
            self.lo,
            self.hi,
            tuple(a or b for a, b in zip(self.lo_closed, lo_extra)),
            tuple(a or b for a, b in zip(self.hi_closed, hi_extra)),
        )


def box_interiors(box: FlaggedBox, x: RatVec) -> InteriorVerdict:
    """Analytic classification: all four notions equal the open box.

    The box is convex and full-dimensional, so relative and quasi
    variants collapse to the topological interior regardless of which
    facets are included.
    """
    if not box.contains(x):
        raise PreconditionError("point is outside the box under its facet flags")
    inside = box.strictly_inside(x)
    return InteriorVerdict(ri=inside, icr=inside, fri=inside, qri=inside)
