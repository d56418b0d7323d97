"""Schedule-based majorants with an exactly prescribed norm.

Given a point x and a strictly positive geometric target z whose d-norm
equals delta exactly, the construction places z's entries at a strictly
increasing schedule of indices N(1) < N(2) < ... chosen so that

    |x_n| < z_k / k   for every n >= N(k).

The resulting sequence y (y at N(k) equals z_k, zero elsewhere) has
d-norm exactly delta, because the schedule is injective, yet for every
eps = 1/k the domination |x_i| >= eps * y_i fails at index N(k). All
index thresholds are computed exactly from the closed-form tails.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PreconditionError
from .norms import l1_enclosure, l2_squared_enclosure
from .points import SeqPoint, Tail
from ..ratcore import rat

_F0 = Fraction(0)


def default_target(delta, d: int = 1) -> SeqPoint:
    """Strictly positive geometric point with d-norm exactly delta."""
    delta = rat(delta)
    if delta <= 0:
        raise PreconditionError("target norm must be positive")
    if d == 1:
        # sum_k delta (1/2)^k = delta
        return SeqPoint.make({}, Tail.geometric(delta, Fraction(1, 2), 1))
    if d == 2:
        # with s = 4 delta / 3, r = 3/5: s^2 r^2 / (1 - r^2) = delta^2
        return SeqPoint.make(
            {}, Tail.geometric(4 * delta / 3, Fraction(3, 5), 1)
        )
    raise PreconditionError("only d = 1 and d = 2 targets are built in")


def _check_target(z: SeqPoint, delta: Fraction, d: int) -> None:
    if not z.all_positive():
        raise PreconditionError("majorant target must be strictly positive")
    if d == 1:
        nb = l1_enclosure(z)
        ok = nb.exact and nb.lo == delta
    elif d == 2:
        nb = l2_squared_enclosure(z)
        ok = nb.exact and nb.lo == delta * delta
    else:
        raise PreconditionError("only d = 1 and d = 2 norms are supported")
    if not ok:
        raise PreconditionError(f"target d-norm is not exactly {delta}")


def _last_violation(x: SeqPoint, tau: Fraction) -> int:
    """Largest index i with |x_i| >= tau, or 0 if there is none.

    Sound because tail magnitudes decrease monotonically: beyond the
    returned index every entry is strictly below tau.
    """
    if tau <= 0:
        raise PreconditionError("threshold must be positive")
    last = 0
    for i, v in x.head:
        if abs(v) >= tau:
            last = max(last, i)
    t = x.tail
    if t.kind == "harmonic":
        # |s|/i >= tau  iff  i <= |s|/tau; largest such i is the floor
        i = int(abs(t.scale) / tau)
        if i >= t.start:
            last = max(last, i)
    elif t.kind == "geometric":
        # |s| r^e >= tau with e = i - start + 1; the largest such e is
        # found by doubling then bisecting, exact rational powers only
        s, r = abs(t.scale), t.ratio
        if s * r >= tau:
            hi = 1
            while s * r ** (2 * hi) >= tau:
                hi *= 2
            lo = hi  # invariant: exponent lo satisfies the bound
            hi = 2 * hi
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if s * r**mid >= tau:
                    lo = mid
                else:
                    hi = mid
            last = max(last, t.start + lo - 1)
    return last


@dataclass
class MajorantPlan:
    """Inputs of the construction plus the audit schedule it fills in.

    z may be left None to request the built-in geometric target for the
    chosen d. After construction, `schedule` aliases the live schedule of
    the returned sequence, so audits see every computed N(k).
    """

    delta: Fraction
    z: SeqPoint | None = None
    d: int = 1
    schedule: list[int] = field(default_factory=list)


@dataclass
class ScheduledSeq:
    """Sparse majorant: entry N(k) carries z_k, all other entries are 0."""

    x: SeqPoint
    z: SeqPoint
    delta: Fraction
    d: int
    _schedule: list[int] = field(default_factory=list)

    def _extend_to(self, k: int) -> None:
        while len(self._schedule) < k:
            j = len(self._schedule) + 1
            tau = self.z.entry(j) / j
            n = _last_violation(self.x, tau) + 1
            if self._schedule:
                n = max(n, self._schedule[-1] + 1)
            self._schedule.append(n)

    def schedule(self, k: int) -> int:
        """N(k), 1-indexed."""
        if k < 1:
            raise PreconditionError("schedule positions start at 1")
        self._extend_to(k)
        return self._schedule[k - 1]

    def schedule_prefix(self, k: int) -> list[int]:
        self._extend_to(k)
        return list(self._schedule[:k])

    def entry(self, i: int) -> Fraction:
        if i < 1:
            raise PreconditionError("indices start at 1")
        while not self._schedule or self._schedule[-1] < i:
            self._extend_to(len(self._schedule) + 1)
        pos = bisect.bisect_left(self._schedule, i)
        if pos < len(self._schedule) and self._schedule[pos] == i:
            return self.z.entry(pos + 1)
        return _F0

    def exact_norm(self) -> Fraction:
        """d-norm of the scheduled sequence; equals the target's norm
        because the schedule is injective."""
        return self.delta


def majorant_construct(x: SeqPoint, plan: MajorantPlan) -> ScheduledSeq:
    """Build the scheduled majorant of x described by the plan.

    Every decay comparison against the closed-form tails is decidable, so
    unlike a fully general sequence type there is no undecidable-input
    case to reject.
    """
    delta = rat(plan.delta)
    z = plan.z if plan.z is not None else default_target(delta, plan.d)
    _check_target(z, delta, plan.d)
    seq = ScheduledSeq(x=x, z=z, delta=delta, d=plan.d, _schedule=plan.schedule)
    plan.schedule.clear()
    seq.schedule_prefix(8)
    return seq


def _entry_of(obj, i: int) -> Fraction:
    return obj.entry(i)


def majorant_verify(x, y, eps, bound: int) -> int | None:
    """Smallest index i <= bound with |x_i| < eps * y_i, or None.

    Accepts plain points or scheduled majorants on either side. When y is
    a scheduled majorant only its scheduled indices can satisfy the
    strict inequality, so the scan may skip its zero entries.
    """
    eps = rat(eps)
    if eps <= 0:
        raise PreconditionError("the comparison threshold must be positive")
    if bound < 1:
        return None
    if isinstance(y, ScheduledSeq):
        k = 1
        while True:
            i = y.schedule(k)
            if i > bound:
                return None
            if abs(_entry_of(x, i)) < eps * y.z.entry(k):
                return i
            k += 1
    for i in range(1, bound + 1):
        if abs(_entry_of(x, i)) < eps * _entry_of(y, i):
            return i
    return None
