"""Certified norm values for symbolic sequence points.

Geometric tails sum in closed form, so their l1 and squared-l2
contributions are exact rationals. Harmonic tails diverge in l1; in l2
their squared tail is enclosed by outward-rounded dyadic partial sums
plus the telescoping bracket

    1/(M+1) <= sum_{i>M} 1/i^2 <= 2/(2M+1),

with M doubled until the enclosure is narrow enough. Nothing here uses
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from .points import SeqPoint

_F0 = Fraction(0)
_F1 = Fraction(1)

DEFAULT_WIDTH = Fraction(1, 10**12)
_DYADIC_BITS = 80


@dataclass(frozen=True)
class NormBound:
    """Certified enclosure lo <= value <= hi; hi None means divergent."""

    which: str
    lo: Fraction
    hi: Fraction | None
    exact: bool

    @property
    def divergent(self) -> bool:
        return self.hi is None

    def width(self) -> Fraction | None:
        return None if self.hi is None else self.hi - self.lo


def _geometric_l1(scale: Fraction, ratio: Fraction) -> Fraction:
    # sum_{k>=1} |scale| ratio^k
    return abs(scale) * ratio / (1 - ratio)


def _geometric_l2_squared(scale: Fraction, ratio: Fraction) -> Fraction:
    # sum_{k>=1} scale^2 ratio^(2k)
    return scale * scale * ratio * ratio / (1 - ratio * ratio)


def _harmonic_sq_tail(start: int, width: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of sum_{i>=start} 1/i^2 with hi - lo <= width."""
    if width <= 0:
        raise PreconditionError("enclosure width must be positive")
    m = max(start, 16)
    while True:
        bracket = Fraction(2, 2 * m + 1) - Fraction(1, m + 1)
        slack = Fraction(m - start + 1 + 2, 1 << _DYADIC_BITS)
        if bracket + slack <= width:
            break
        m *= 2
    unit = 1 << _DYADIC_BITS
    lo_acc = 0
    hi_acc = 0
    for i in range(start, m + 1):
        q, r = divmod(unit, i * i)
        lo_acc += q
        hi_acc += q + (1 if r else 0)
    lo = Fraction(lo_acc, unit) + Fraction(1, m + 1)
    hi = Fraction(hi_acc, unit) + Fraction(2, 2 * m + 1)
    return lo, hi


def l1_enclosure(p: SeqPoint) -> NormBound:
    head = sum((abs(v) for _, v in p.head), _F0)
    t = p.tail
    if t.kind == "none":
        return NormBound("l1", head, head, True)
    if t.kind == "geometric":
        total = head + _geometric_l1(t.scale, t.ratio)
        return NormBound("l1", total, total, True)
    # harmonic tails are not summable
    return NormBound("l1", head, None, False)


def l2_squared_enclosure(p: SeqPoint, width: Fraction = DEFAULT_WIDTH) -> NormBound:
    head = sum((v * v for _, v in p.head), _F0)
    t = p.tail
    if t.kind == "none":
        return NormBound("l2sq", head, head, True)
    if t.kind == "geometric":
        total = head + _geometric_l2_squared(t.scale, t.ratio)
        return NormBound("l2sq", total, total, True)
    s2 = t.scale * t.scale
    if s2 != 0:
        lo, hi = _harmonic_sq_tail(t.start, width / s2)
    else:  # unreachable for canonical tails, kept for safety
        lo = hi = _F0
    return NormBound("l2sq", head + s2 * lo, head + s2 * hi, False)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    n = math.isqrt(value.numerator)
    d = math.isqrt(value.denominator)
    if n * n == value.numerator and d * d == value.denominator:
        return Fraction(n, d)
    return None


def sqrt_enclosure(value: Fraction, width: Fraction = DEFAULT_WIDTH) -> NormBound:
    """Certified enclosure of sqrt(value) for rational value >= 0."""
    if value < 0:
        raise PreconditionError("square root of a negative value")
    exact = _rational_sqrt(value)
    if exact is not None:
        return NormBound("sqrt", exact, exact, True)
    scale = 1
    while Fraction(2, scale) > width:
        scale <<= 1
    t = math.isqrt((value.numerator * scale * scale) // value.denominator)
    return NormBound("sqrt", Fraction(t, scale), Fraction(t + 2, scale), False)


def l2_enclosure(p: SeqPoint, width: Fraction = DEFAULT_WIDTH) -> NormBound:
    sq = l2_squared_enclosure(p, width * width)
    lo_b = sqrt_enclosure(sq.lo, width)
    if sq.exact:
        hi_b = lo_b
    else:
        hi_b = sqrt_enclosure(sq.hi, width)
    hi = hi_b.hi if hi_b.hi is not None else hi_b.lo
    exact = sq.exact and lo_b.exact
    return NormBound("l2", lo_b.lo, lo_b.lo if exact else hi, exact)


def norm_enclosure(p: SeqPoint, which: str, width: Fraction = DEFAULT_WIDTH) -> NormBound:
    if which == "l1":
        return l1_enclosure(p)
    if which == "l2":
        return l2_enclosure(p, width)
    if which == "l2sq":
        return l2_squared_enclosure(p, width)
    raise PreconditionError(f"unknown norm {which!r}")


def compare_l2_squared(
    p: SeqPoint, threshold, width: Fraction = DEFAULT_WIDTH
) -> int | None:
    """Sign of ||p||_2^2 - threshold: -1, 0, or +1; None if the enclosure
    still straddles the threshold at the requested width."""
    threshold = Fraction(threshold)
    bound = l2_squared_enclosure(p, Fraction(1, 10**3))
    if bound.exact:
        v = bound.lo
        return -1 if v < threshold else (1 if v > threshold else 0)
    if not (bound.lo <= threshold <= bound.hi):
        return -1 if bound.hi < threshold else 1
    bound = l2_squared_enclosure(p, width)
    if bound.lo > threshold:
        return 1
    if bound.hi < threshold:
        return -1
    return None
