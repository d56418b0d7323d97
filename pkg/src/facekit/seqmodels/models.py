"""Curated convex subsets of l2 with certified face queries.

Each model answers member / icr_member / fri_member / qri_member with a
Verdict carrying a human-readable certificate, and (where characterized)
returns a face-class descriptor for the minimal face. Everything is
decided exactly over the closed-form point language; Inconclusive is
reserved for questions the implemented theory genuinely does not settle,
never used to paper over a computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError, UnsupportedInputError
from .majorant import MajorantPlan, majorant_construct, majorant_verify
from .norms import compare_l2_squared, l1_enclosure, l2_squared_enclosure
from .points import SeqPoint, Tail

_F0 = Fraction(0)
_F1 = Fraction(1)

IN = "In"
OUT = "Out"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    value: str
    certificate: str

    @property
    def is_in(self) -> bool:
        return self.value == IN


def _in(cert: str) -> Verdict:
    return Verdict(IN, cert)


def _out(cert: str) -> Verdict:
    return Verdict(OUT, cert)


def _inconclusive(cert: str) -> Verdict:
    return Verdict(INCONCLUSIVE, cert)


# --------------------------------------------------------------- utilities


def _tail_start(p: SeqPoint) -> int:
    return p.tail.start if p.tail.kind != "none" else 0


def _shared_bound(*pts: SeqPoint) -> int:
    return max(
        [1]
        + [p.max_head_index() for p in pts]
        + [_tail_start(p) for p in pts]
    )


def _first_negative_index(p: SeqPoint) -> int | None:
    for i, v in p.head:
        if v < 0:
            return i
    if p.tail.kind != "none" and p.tail.scale < 0:
        return p.tail.start
    return None


def sup_ratio_finite(q: SeqPoint, x: SeqPoint) -> tuple[bool, str]:
    """Whether sup over {i : q_i > 0} of q_i / x_i is finite.

    This is the domination test behind minimal faces of nonnegative
    models: some positive multiple of q is entrywise below x iff the
    supremum is finite. Decidable because beyond a shared bound both
    points follow a single closed form.
    """
    r = _shared_bound(q, x)
    for i in range(1, r + 1):
        if q.entry(i) > 0 and x.entry(i) <= 0:
            return False, f"entry {i} of the candidate is positive where the anchor vanishes"
    tq, tx = q.tail, x.tail
    if tq.kind == "none" or tq.scale < 0:
        return True, f"candidate entries beyond index {r} are nonpositive"
    if tx.kind == "none" or tx.scale <= 0:
        return False, f"candidate stays positive beyond index {r} where the anchor vanishes"
    if tq.kind == "harmonic" and tx.kind == "harmonic":
        return True, f"both tails are harmonic; the ratio tends to {tq.scale / tx.scale}"
    if tq.kind == "geometric" and tx.kind == "geometric":
        if tq.ratio <= tx.ratio:
            return True, (
                f"candidate ratio {tq.ratio} does not exceed anchor ratio {tx.ratio}"
            )
        return False, (
            f"candidate ratio {tq.ratio} exceeds anchor ratio {tx.ratio}, "
            "so the entry ratio diverges"
        )
    if tq.kind == "geometric":
        return True, "a geometric tail is eventually dominated by any harmonic tail"
    return False, "a harmonic tail eventually exceeds every multiple of a geometric tail"


def _sign_at(x: SeqPoint, i: int) -> int:
    return -1 if x.entry(i) < 0 else 1


def _eventual_sign(x: SeqPoint) -> int:
    if x.tail.kind == "none" or x.tail.scale > 0:
        return 1
    return -1


def _signed_sum(x: SeqPoint, q: SeqPoint) -> Fraction:
    """sum_i sigma_i q_i with sigma the sign pattern of x (+1 at zeros).

    Requires q to be summable (no harmonic tail).
    """
    if q.tail.kind == "harmonic":
        raise PreconditionError("signed sum requires a summable point")
    r = _shared_bound(x, q)
    total = sum((_sign_at(x, i) * q.entry(i) for i in range(1, r + 1)), _F0)
    t = q.tail
    if t.kind == "geometric":
        # sum_{i > r} of the tail, all indices carry the eventual sign of x
        first = t.entry(r + 1)
        total += _eventual_sign(x) * first / (1 - t.ratio)
    return total


# --------------------------------------------------------------- face class


@dataclass(frozen=True)
class FaceClass:
    """Descriptor of a minimal face inside a model.

    kinds: 'singleton', 'dominated-decay', 'subspace-l1', 'full-set',
    'sign-slice'.
    """

    kind: str
    model: "object"
    anchor: SeqPoint | None = None

    def test_in_face(self, q: SeqPoint) -> Verdict:
        if self.kind == "singleton":
            if q == self.anchor:
                return _in("the candidate equals the anchor point")
            return _out("the minimal face is a singleton and the candidate differs")
        if self.kind == "full-set":
            m = self.model.member(q)
            if m.is_in:
                return _in("the minimal face is the whole set; " + m.certificate)
            return m
        if self.kind == "subspace-l1":
            if q.tail.kind == "harmonic":
                return _out(
                    "the candidate carries a harmonic tail, hence lies outside l1"
                )
            return _in("the candidate is summable, hence in the l1 layer")
        if self.kind == "dominated-decay":
            m = self.model.member(q)
            if not m.is_in:
                return Verdict(m.value, "not a member: " + m.certificate)
            ok, why = sup_ratio_finite(q, self.anchor)
            if ok:
                return _in(
                    "some positive multiple of the candidate lies entrywise "
                    "below the anchor: " + why
                )
            return _out("no positive multiple fits below the anchor: " + why)
        if self.kind == "sign-slice":
            m = self.model.member(q)
            if not m.is_in:
                return Verdict(m.value, "not a member: " + m.certificate)
            x = self.anchor
            r = _shared_bound(x, q)
            for i in range(1, r + 1):
                if _sign_at(x, i) * q.entry(i) < 0:
                    return _out(
                        f"entry {i} has the opposite sign to the anchor pattern"
                    )
            if q.tail.kind == "geometric" and _eventual_sign(x) * q.tail.scale < 0:
                return _out(
                    f"tail entries beyond index {r} oppose the anchor sign pattern"
                )
            s = _signed_sum(x, q)
            if s == 1:
                return _in(
                    "signed sum against the anchor pattern is exactly 1 and "
                    "no entry opposes the pattern"
                )
            return _out(f"signed sum against the anchor pattern is {s}, not 1")
        raise PreconditionError(f"unknown face-class kind {self.kind!r}")


# ------------------------------------------------------------------ models


class PosBall2:
    """Nonnegative part of the closed unit ball of l2."""

    name = "posball2"
    description = "nonnegative l2 sequences with norm at most 1"

    def member(self, p: SeqPoint) -> Verdict:
        i = _first_negative_index(p)
        if i is not None:
            return _out(f"entry {i} is negative")
        cmp = compare_l2_squared(p, 1)
        nb = l2_squared_enclosure(p)
        if cmp is None:
            return _inconclusive(
                f"squared norm enclosure [{nb.lo}, {nb.hi}] straddles 1"
            )
        if cmp > 0:
            val = str(nb.lo) if nb.exact else f"at least {nb.lo}"
            return _out(f"squared norm {val} exceeds 1")
        val = str(nb.lo) if nb.exact else f"at most {nb.hi}"
        return _in(f"nonnegative with squared norm {val}, within the unit ball")

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        cmp = compare_l2_squared(p, 1)
        if cmp is None:
            return _inconclusive("norm comparison against 1 is inconclusive")
        if cmp == 0:
            return _out(
                "squared norm is exactly 1; by strict convexity of the l2 "
                "ball the minimal face is the singleton {p}, whose closure "
                "misses the origin"
            )
        z = p.first_zero_index()
        if z is not None:
            return _out(
                f"entry {z} vanishes, so the minimal face lies in the closed "
                f"proper slice where coordinate {z} is 0, and its closure "
                f"misses the member e_{z}/2"
            )
        return _in(
            "strictly positive entries with squared norm below 1: every "
            "member's truncations are dominated by a multiple of p, so the "
            "minimal face is l2-dense in the set"
        )

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        y = majorant_construct(p, MajorantPlan(delta=_F1, d=2))
        sched = y.schedule_prefix(4)
        # N(k) itself always satisfies |p| < (1/k) y there, so bounding the
        # scan by it keeps the check total
        hits = [
            majorant_verify(p, y, Fraction(1, k), max(10**4, y.schedule(k)))
            for k in (1, 10)
        ]
        assert all(h is not None for h in hits)
        return _out(
            "the scheduled majorant y with l2 norm exactly 1 is a member, "
            f"but p falls below y/k at index N(k) for every k (N = {sched}, "
            f"checked failures at eps = 1 and 1/10: indices {hits}); no "
            "positive multiple of y fits below p, so y is outside the "
            "minimal face"
        )

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        f = self.fri_member(p)
        if f.is_in:
            return _in("inner-point chain: " + f.certificate)
        z = p.first_zero_index()
        if z is not None:
            return _out(
                f"every direction into the set has coordinate {z} nonnegative "
                f"(members are nonnegative there while p_{z} = 0), and the "
                f"direction e_{z} does occur, so the closed direction cone is "
                "a proper halfspace slice, not a subspace"
            )
        return _inconclusive(
            "p is strictly positive with unit norm; no certified criterion "
            "for the quasi notion applies here"
        )

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        m = self.member(p)
        if not m.is_in:
            raise PreconditionError("face class requires a member: " + m.certificate)
        cmp = compare_l2_squared(p, 1)
        if cmp == 0:
            return FaceClass("singleton", self, p)
        if cmp is None:
            raise PreconditionError("norm comparison against 1 is inconclusive")
        return FaceClass("dominated-decay", self, p)


class L1BallInL2:
    """Closed unit ball of l1, viewed as a subset of l2."""

    name = "l1ball"
    description = "summable sequences with l1 norm at most 1, inside l2"

    def member(self, p: SeqPoint) -> Verdict:
        nb = l1_enclosure(p)
        if nb.divergent:
            return _out("harmonic tail: the l1 norm diverges")
        if nb.lo > 1:
            return _out(f"l1 norm {nb.lo} exceeds 1")
        return _in(f"l1 norm {nb.lo} is at most 1")

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def _norm(self, p: SeqPoint) -> Fraction:
        return l1_enclosure(p).lo

    def _interior_cert(self, p: SeqPoint, v: Fraction) -> str:
        alpha = (1 - v) / (1 + v) if v else _F1
        y = SeqPoint.basis(1)
        z = p.scale_by(1 + alpha) - y.scale_by(alpha)
        assert self._norm(z) <= 1
        return (
            f"l1 norm {v} is below 1: for any member y the stretched point "
            f"p + a(p - y) with a = (1 - |p|)/(1 + |p|) stays in the ball, "
            f"so every member lies in the minimal face (checked for y = e_1: "
            f"stretched norm {self._norm(z)})"
        )

    def _sphere_out_cert(self, p: SeqPoint) -> str:
        i0 = next(i for i in range(1, _shared_bound(p) + 1) if p.entry(i) != 0)
        sgn = _sign_at(p, i0)
        q = SeqPoint.basis(i0, -sgn)
        assert self.member(q).is_in
        return (
            f"l1 norm is exactly 1, so the minimal face keeps every entry on "
            f"the sign pattern of p; the member {'-' if sgn > 0 else ''}e_{i0} "
            f"breaks the pattern at entry {i0}, and sign conditions are "
            "entrywise closed, so it stays outside the face's closure"
        )

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        v = self._norm(p)
        if v < 1:
            return _in(self._interior_cert(p, v))
        return _out(self._sphere_out_cert(p))

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        v = self._norm(p)
        if v < 1:
            return _in(self._interior_cert(p, v))
        return _out(self._sphere_out_cert(p))

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        v = self._norm(p)
        if v < 1:
            return _in("inner-point chain: " + self._interior_cert(p, v))
        bound = p.support_bound()
        if bound is not None:
            i0 = next(i for i in range(1, bound + 1) if p.entry(i) != 0)
            return _out(
                f"unit norm with support bounded by {bound}: the finitely "
                "supported functional matching p's signs is at most 1 on the "
                "ball and equals 1 at p, so directions into the set stay in "
                f"a proper closed halfspace (strictly negative on the member "
                f"-sign(p_{i0}) e_{i0}), and the closed direction cone is "
                "not a subspace"
            )
        return _in(
            "unit norm with infinitely many nonzero entries: no finitely "
            "supported functional is tight at p, and the closed cone of "
            "directions into the ball is all of l2"
        )

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        m = self.member(p)
        if not m.is_in:
            raise PreconditionError("face class requires a member: " + m.certificate)
        if self._norm(p) < 1:
            return FaceClass("full-set", self)
        return FaceClass("sign-slice", self, p)


class ConvL1Point:
    """Convex hull of the l1 layer and one non-summable point u."""

    name = "convl1"
    description = "convex hull of l1 and a fixed point with harmonic tail"

    def __init__(self, u: SeqPoint | None = None):
        self.u = u if u is not None else SeqPoint.make({}, Tail.harmonic(1, 1))
        if self.u.harmonic_scale() == 0:
            raise PreconditionError("the distinguished point must have a harmonic tail")

    def _alpha(self, p: SeqPoint) -> Fraction:
        return p.harmonic_scale() / self.u.harmonic_scale()

    def member(self, p: SeqPoint) -> Verdict:
        a = self._alpha(p)
        if a < 0 or a > 1:
            return _out(f"harmonic coefficient {a} falls outside [0, 1]")
        if a == 1:
            if p == self.u:
                return _in("p equals the distinguished point u (coefficient 1)")
            return _out(
                "harmonic coefficient 1 forces p = u, but p differs from u"
            )
        rest = (p - self.u.scale_by(a)).scale_by(1 / (1 - a))
        nb = l1_enclosure(rest)
        assert not nb.divergent
        return _in(
            f"p = (1 - a) l + a u with a = {a} and a summable l of l1 norm {nb.lo}"
        )

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        a = self._alpha(p)
        if 0 < a < 1:
            eps = min(a, 1 - a) / 2
            for y in (self.u, SeqPoint.zero()):
                z = p + (p - y).scale_by(eps)
                assert self.member(z).is_in
            return _in(
                f"coefficient a = {a} is interior: stretching past p by "
                f"eps = {eps} keeps the coefficient inside (0, 1) for every "
                "member, so the minimal face is the whole set (checked "
                "against y = u and y = 0)"
            )
        if a == 0:
            for mu in (Fraction(1, 4), Fraction(1, 2)):
                z = p + (p - self.u).scale_by(mu)
                assert not self.member(z).is_in
            return _out(
                "p lies in the l1 layer: stretching past p away from u gives "
                "harmonic coefficient -mu < 0, so u is a member outside the "
                "minimal face (checked mu = 1/4, 1/2)"
            )
        for mu in (Fraction(1, 4), Fraction(1, 2)):
            z = p + p.scale_by(mu)
            assert not self.member(z).is_in
        return _out(
            "p = u: stretching past u away from the member 0 gives "
            "coefficient 1 + mu > 1, so 0 is outside the minimal face "
            "(checked mu = 1/4, 1/2)"
        )

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        a = self._alpha(p)
        if a == 1:
            return _out(
                "the minimal face of u is the singleton {u} (any segment "
                "through u inside the set forces coefficient 1 at both "
                "ends), and its closure misses the member 0"
            )
        if a == 0:
            return _in(
                "the minimal face is the whole l1 layer, and truncations "
                "converge to every member in l2, so the face is dense"
            )
        return _in(
            f"coefficient a = {a} is interior, the minimal face is the whole "
            "set"
        )

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        a = self._alpha(p)
        if a < 1:
            f = self.fri_member(p)
            return _in("inner-point chain: " + f.certificate)
        return _inconclusive(
            "p = u: the closed direction cone at the distinguished point is "
            "not characterized here"
        )

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        m = self.member(p)
        if not m.is_in:
            raise PreconditionError("face class requires a member: " + m.certificate)
        a = self._alpha(p)
        if a == 1:
            return FaceClass("singleton", self, self.u)
        if a == 0:
            return FaceClass("subspace-l1", self)
        return FaceClass("full-set", self)


class SegmentModel:
    """The segment [0, 1] xbar for the harmonic generator xbar."""

    name = "segment"
    description = "segment from the origin to the harmonic point"

    def __init__(self):
        self.xbar = SeqPoint.make({}, Tail.harmonic(1, 1))

    def _coeff(self, p: SeqPoint) -> Fraction | None:
        t = p.harmonic_scale()
        return t if p == self.xbar.scale_by(t) else None

    def member(self, p: SeqPoint) -> Verdict:
        t = self._coeff(p)
        if t is None:
            return _out("not a scalar multiple of the harmonic generator")
        if t < 0 or t > 1:
            return _out(f"coefficient {t} falls outside [0, 1]")
        return _in(f"p = t xbar with t = {t} in [0, 1]")

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def _classify(self, p: SeqPoint) -> tuple[Fraction, bool]:
        t = self._coeff(p)
        return t, t is not None and 0 < t < 1

    def _interior_verdict(self, p: SeqPoint, notion: str) -> Verdict:
        t, interior = self._classify(p)
        if interior:
            eps = min(t, 1 - t) / 2
            for y in (SeqPoint.zero(), self.xbar):
                z = p + (p - y).scale_by(eps)
                assert self.member(z).is_in
            return _in(
                f"t = {t} is interior to [0, 1]; stretching by eps = {eps} "
                "past p stays on the segment for both endpoints"
            )
        other = self.xbar if t == 0 else SeqPoint.zero()
        z = p + (p - other).scale_by(Fraction(1, 2))
        assert not self.member(z).is_in
        if notion == "qri":
            return _out(
                f"t = {t} is an endpoint: directions into the segment form a "
                "closed ray, which is not a subspace"
            )
        return _out(
            f"t = {t} is an endpoint: the minimal face is the singleton "
            "{p}, so the opposite endpoint witnesses failure"
        )

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        return gate if gate is not None else self._interior_verdict(p, "icr")

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        return gate if gate is not None else self._interior_verdict(p, "fri")

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        return gate if gate is not None else self._interior_verdict(p, "qri")

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        m = self.member(p)
        if not m.is_in:
            raise PreconditionError("face class requires a member: " + m.certificate)
        _, interior = self._classify(p)
        if interior:
            return FaceClass("full-set", self)
        return FaceClass("singleton", self, p)


class L1PlusModel:
    """Nonnegative summable sequences inside l2."""

    name = "l1plus"
    description = "nonnegative l1 sequences as a subset of l2"

    def member(self, p: SeqPoint) -> Verdict:
        if p.tail.kind == "harmonic":
            return _out("harmonic tail: the l1 norm diverges")
        i = _first_negative_index(p)
        if i is not None:
            return _out(f"entry {i} is negative")
        return _in(f"nonnegative with l1 norm {l1_enclosure(p).lo}")

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        z = p.first_zero_index()
        if z is not None:
            q = SeqPoint.basis(z)
            assert self.member(q).is_in
            ok, _ = sup_ratio_finite(q, p)
            assert not ok
            return _out(
                f"entry {z} vanishes: the minimal face lies in the closed "
                f"slice where coordinate {z} is 0, whose closure misses the "
                f"member e_{z}"
            )
        d = SeqPoint.make({}, Tail.geometric(1, Fraction(2, 3), 1))
        probe = d.truncate(5)
        cls = FaceClass("dominated-decay", self, p)
        assert cls.test_in_face(probe).is_in
        return _in(
            "strictly positive entries: every member's truncations are "
            "dominated by a multiple of p, so the minimal face is dense in "
            "the set (checked a length-5 truncation of a geometric member)"
        )

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        y = majorant_construct(p, MajorantPlan(delta=_F1, d=1))
        sched = y.schedule_prefix(4)
        hit = majorant_verify(p, y, Fraction(1, 2), max(10**4, y.schedule(2)))
        assert hit is not None
        return _out(
            "the scheduled majorant y with l1 norm exactly 1 is a member, "
            f"but p falls below y/k at index N(k) for every k (N = {sched}, "
            f"eps = 1/2 fails at index {hit}), so no positive multiple of y "
            "fits below p and y is outside the minimal face"
        )

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        z = p.first_zero_index()
        if z is None:
            f = self.fri_member(p)
            return _in("inner-point chain: " + f.certificate)
        assert self.member(p + SeqPoint.basis(z)).is_in
        return _out(
            f"directions into the set keep coordinate {z} nonnegative while "
            f"e_{z} itself occurs as a direction, so the closed direction "
            "cone sits in a proper halfspace and is not a subspace"
        )

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        m = self.member(p)
        if not m.is_in:
            raise PreconditionError("face class requires a member: " + m.certificate)
        return FaceClass("dominated-decay", self, p)


class ZalSumModel:
    """Minkowski sum of the harmonic segment and the nonnegative l1 cone."""

    name = "zalsum"
    description = "segment [0,1] xbar plus nonnegative l1 sequences"

    def __init__(self):
        self.xbar = SeqPoint.make({}, Tail.harmonic(1, 1))

    def split(self, p: SeqPoint) -> tuple[Fraction, SeqPoint]:
        t = p.harmonic_scale()
        return t, p - self.xbar.scale_by(t)

    def member(self, p: SeqPoint) -> Verdict:
        t, d = self.split(p)
        if t < 0 or t > 1:
            return _out(f"harmonic coefficient {t} falls outside [0, 1]")
        i = _first_negative_index(d)
        if i is not None:
            return _out(
                f"after removing {t} xbar the remainder has negative entry "
                f"at index {i}"
            )
        return _in(
            f"p = t xbar + d with t = {t} and a nonnegative summable d"
        )

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)

    def fri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        t, d = self.split(p)
        if t == 0:
            z = p.first_zero_index()
            if z is not None:
                return _out(
                    f"members are entrywise nonnegative and p_{z} = 0, so "
                    f"the minimal face lies in the closed slice with "
                    f"coordinate {z} zero; its closure misses the member e_{z}"
                )
            return _in(
                "p is strictly positive and summable: truncations of any "
                "member are finitely supported, dominated by a multiple of "
                "p, and converge in l2, so the minimal face is dense"
            )
        return _inconclusive(
            f"p carries harmonic coefficient t = {t} > 0; no certified "
            "criterion for the closure notion applies here"
        )

    def icr_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        t, d = self.split(p)
        if d.is_zero():
            y = self.xbar.scale_by(t) + SeqPoint.basis(1)
            assert self.member(y).is_in
            for mu in (Fraction(1, 4), Fraction(1, 2)):
                z = p + (p - y).scale_by(mu)
                assert not self.member(z).is_in
            return _out(
                "p has no summable part: stretching past p away from the "
                "member p + e_1 makes entry 1 negative, so that member is "
                "outside the minimal face (checked mu = 1/4, 1/2)"
            )
        if t > 0:
            # a positive harmonic coefficient forces a finitely supported
            # summable part within the closed-form language
            spike = SeqPoint.basis(d.max_head_index() + 1)
            dy = spike
        elif d.tail.kind == "geometric":
            slower = (1 + d.tail.ratio) / 2
            dy = SeqPoint.make({}, Tail.geometric(1, slower, 1))
        else:
            dy = SeqPoint.make({}, Tail.geometric(1, Fraction(1, 2), 1))
        y = self.xbar.scale_by(t) + dy
        assert self.member(y).is_in
        ok, why = sup_ratio_finite(dy, d)
        assert not ok
        return _out(
            "the member y = t xbar + d' with a summable part that p's own "
            f"summable part cannot dominate is outside the minimal face: {why}"
        )

    def qri_member(self, p: SeqPoint) -> Verdict:
        gate = self._gate(p)
        if gate is not None:
            return gate
        t, d = self.split(p)
        if t == 0:
            z = p.first_zero_index()
            if z is None:
                f = self.fri_member(p)
                return _in("inner-point chain: " + f.certificate)
            assert self.member(p + SeqPoint.basis(z)).is_in
            return _out(
                f"directions into the set keep coordinate {z} nonnegative "
                f"while e_{z} occurs as a direction, so the closed direction "
                "cone is not a subspace"
            )
        return _inconclusive(
            f"p carries harmonic coefficient t = {t} > 0; no certified "
            "criterion for the quasi notion applies here"
        )

    def minimal_face_class(self, p: SeqPoint) -> FaceClass:
        raise UnsupportedInputError(
            "no certified face-class descriptor for the sum model"
        )


# ------------------------------------------------------------ gadget family


class _GadgetBase:
    def __init__(self):
        self.v = SeqPoint.make({}, Tail.harmonic(1, 1))

    def _gate(self, p: SeqPoint) -> Verdict | None:
        m = self.member(p)
        if m.is_in:
            return None
        return Verdict(m.value, "not a member: " + m.certificate)


class GadgetA(_GadgetBase):
    """Positive multiples of v shifted along l1."""

    name = "gadget-a"
    description = "points t v + u with t > 0 and summable u"

    def member(self, p: SeqPoint) -> Verdict:
        t = p.harmonic_scale()
        if t <= 0:
            return _out(f"harmonic coefficient {t} is not positive")
        u = p - self.v.scale_by(t)
        return _in(
            f"p = t v + u with t = {t} and l1 norm of u equal to "
            f"{l1_enclosure(u).lo}"
        )


class GadgetB(_GadgetBase):
    """Summable sequences with every entry at least -1."""

    name = "gadget-b"
    description = "summable sequences bounded below by -1 entrywise"

    def member(self, p: SeqPoint) -> Verdict:
        if p.tail.kind == "harmonic":
            return _out("harmonic tail: not summable")
        if not p.entrywise_at_least(-1):
            r = _shared_bound(p)
            bad = next(
                (i for i in range(1, r + 1) if p.entry(i) < -1),
                p.tail.start if p.tail.kind != "none" else r,
            )
            return _out(f"entry {bad} lies below -1")
        return _in(
            f"summable (l1 norm {l1_enclosure(p).lo}) with all entries >= -1"
        )


class GadgetC(_GadgetBase):
    """Points (1 - s) v + s w with w in the B layer and s > 0."""

    name = "gadget-c"
    description = "stretches from v through the B layer"

    def member(self, p: SeqPoint) -> Verdict:
        t = p.harmonic_scale()
        if t >= 1:
            return _out(
                f"v-coefficient {t} is not below 1, but it equals 1 - s with "
                "s > 0"
            )
        s = 1 - t
        w = (p - self.v.scale_by(t)).scale_by(1 / s)
        inner = GadgetB().member(w)
        if inner.is_in:
            return _in(f"p = (1 - s) v + s w with s = {s} and w in the B layer")
        return _out(f"the stretched remainder at s = {s} leaves the B layer: "
                    + inner.certificate)


class GadgetD(_GadgetBase):
    """Union of the A and B layers (a non-convex test set)."""

    name = "gadget-d"
    description = "union of the A and B layers"

    def member(self, p: SeqPoint) -> Verdict:
        a = GadgetA().member(p)
        if a.is_in:
            return _in("in the A layer: " + a.certificate)
        b = GadgetB().member(p)
        if b.is_in:
            return _in("in the B layer: " + b.certificate)
        return _out(
            "in neither layer (A: " + a.certificate + "; B: " + b.certificate + ")"
        )


class GadgetCD(_GadgetBase):
    """Intersection of the C set with the D union."""

    name = "gadget-cd"
    description = "intersection of the C stretches with the D union"

    def member(self, p: SeqPoint) -> Verdict:
        c = GadgetC().member(p)
        if not c.is_in:
            return _out("outside C: " + c.certificate)
        d = GadgetD().member(p)
        if not d.is_in:
            return _out("outside D: " + d.certificate)
        return _in("in both pieces (C: " + c.certificate + ")")


MODELS = {
    m.name: m
    for m in (
        PosBall2(),
        L1BallInL2(),
        ConvL1Point(),
        SegmentModel(),
        L1PlusModel(),
        ZalSumModel(),
        GadgetA(),
        GadgetB(),
        GadgetC(),
        GadgetD(),
        GadgetCD(),
    )
}


def get_model(name: str):
    try:
        return MODELS[name]
    except KeyError:
        raise UnsupportedInputError(f"unknown model {name!r}") from None
