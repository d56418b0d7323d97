"""Tests for the closed-form sequence layer: points, norms, majorants, models."""

from fractions import Fraction

import pytest

from facekit.errors import ParseError, PreconditionError, UnsupportedInputError
from facekit.seqmodels import (
    INCONCLUSIVE,
    MajorantPlan,
    SeqPoint,
    Tail,
    compare_l2_squared,
    default_target,
    format_point,
    get_model,
    l1_enclosure,
    l2_squared_enclosure,
    majorant_construct,
    majorant_verify,
    norm_enclosure,
    parse_point,
    sqrt_enclosure,
    sup_ratio_finite,
)

F = Fraction


def H(d, tail=None):
    return SeqPoint.make({i: F(v) for i, v in d.items()}, tail)


def harmonic(s, start=1):
    return SeqPoint.make({}, Tail.harmonic(F(s), start))


def geometric(s, r, start=1):
    return SeqPoint.make({}, Tail.geometric(F(s), F(r), start))


class TestPoints:
    def test_zero_and_basis(self):
        z = SeqPoint.zero()
        assert z.is_zero()
        assert z.entry(7) == 0
        e3 = SeqPoint.basis(3)
        assert e3.entry(3) == 1 and e3.entry(2) == 0
        assert e3.is_finitely_supported()

    def test_zero_entries_dropped(self):
        p = H({1: 0, 2: 5, 3: 0})
        assert p.head_dict() == {2: F(5)}

    def test_head_overlapping_tail_rejected(self):
        with pytest.raises(PreconditionError):
            SeqPoint.make({3: F(1)}, Tail.harmonic(F(1), 3))

    def test_zero_scale_tail_collapses(self):
        p = SeqPoint.make({1: F(2)}, Tail.geometric(F(0), F(1, 2), 2))
        assert p.tail_kind == "none"
        assert p.is_finitely_supported()

    def test_harmonic_absorb_lowers_start(self):
        # head value 1/2 at index 2 equals the natural extension of 1/i
        p = SeqPoint.make({2: F(1, 2)}, Tail.harmonic(F(1), 3))
        q = harmonic(1, 2)
        assert p == q
        assert p.tail.start == 2

    def test_geometric_absorb_rescales(self):
        # the tail's value at start-1 is its scale, so absorbing a head
        # entry equal to it lowers the start and divides the scale by r
        p = SeqPoint.make({1: F(1, 4)}, Tail.geometric(F(1, 4), F(1, 2), 2))
        q = geometric(F(1, 2), F(1, 2), 1)
        assert p == q
        assert p.tail.start == 1
        assert p.entry(1) == F(1, 4) and p.entry(2) == F(1, 8)

    def test_no_absorb_when_value_differs(self):
        p = SeqPoint.make({2: F(1, 3)}, Tail.harmonic(F(1), 3))
        assert p.tail.start == 3
        assert p.head_dict() == {2: F(1, 3)}

    def test_equality_is_sequence_equality(self):
        a = SeqPoint.make({1: F(1), 2: F(1, 2)}, Tail.harmonic(F(1), 3))
        b = harmonic(1)
        assert a == b and hash(a) == hash(b)

    def test_entries(self):
        p = H({1: 3}, Tail.geometric(F(1), F(1, 2), 4))
        assert p.entry(1) == 3
        assert p.entry(2) == 0
        assert p.entry(4) == F(1, 2)
        assert p.entry(6) == F(1, 8)

    def test_add_finite(self):
        a = H({1: 1, 2: 2})
        b = H({2: -2, 3: 5})
        s = a + b
        assert s.head_dict() == {1: F(1), 3: F(5)}

    def test_add_harmonic_scales(self):
        s = harmonic(1) + harmonic(2)
        assert s == harmonic(3)

    def test_add_harmonic_different_starts(self):
        s = harmonic(1, 1) + harmonic(1, 5)
        assert s.entry(1) == 1
        assert s.entry(4) == F(1, 4)
        assert s.entry(5) == F(2, 5)
        assert s.entry(100) == F(2, 100)

    def test_add_geometric_same_ratio(self):
        s = geometric(1, F(1, 2)) + geometric(3, F(1, 2))
        assert s == geometric(4, F(1, 2))

    def test_add_geometric_aligns_starts(self):
        s = geometric(1, F(1, 2), 1) + geometric(1, F(1, 2), 3)
        assert s.entry(1) == F(1, 2)
        assert s.entry(3) == F(1, 8) + F(1, 2)
        assert s.entry(4) == F(1, 16) + F(1, 4)

    def test_add_head_into_tail_region(self):
        s = H({5: 7}) + harmonic(1)
        assert s.entry(5) == 7 + F(1, 5)
        assert s.entry(6) == F(1, 6)

    def test_add_mixed_kinds_unsupported(self):
        with pytest.raises(UnsupportedInputError):
            harmonic(1) + geometric(1, F(1, 2))

    def test_add_different_ratios_unsupported(self):
        with pytest.raises(UnsupportedInputError):
            geometric(1, F(1, 2)) + geometric(1, F(1, 3))

    def test_cancellation_gives_zero(self):
        p = H({2: 5}, Tail.harmonic(F(1), 4))
        assert (p - p).is_zero()

    def test_scale_and_neg(self):
        p = harmonic(2)
        assert p.scale_by(F(1, 2)) == harmonic(1)
        assert (-p).entry(3) == F(-2, 3)
        assert p.scale_by(F(0)).is_zero()

    def test_truncate(self):
        p = harmonic(1)
        t = p.truncate(3)
        assert t.is_finitely_supported()
        assert t.head_dict() == {1: F(1), 2: F(1, 2), 3: F(1, 3)}

    def test_predicates(self):
        assert harmonic(1).all_positive()
        assert not harmonic(-1).all_positive()
        assert H({1: 1, 3: 2}).all_nonnegative()
        assert not H({1: 1, 3: 2}).all_positive()
        assert geometric(1, F(1, 2)).first_zero_index() is None
        assert H({1: 1, 3: 2}).first_zero_index() == 2
        assert H({1: 1, 2: 2}).first_zero_index() == 3

    def test_entrywise_at_least(self):
        assert harmonic(1).entrywise_at_least(F(0))
        assert not harmonic(1).entrywise_at_least(F(1, 100))
        assert H({1: -1}, Tail.geometric(F(-1), F(1, 2), 2)).entrywise_at_least(F(-1))
        assert not harmonic(-2).entrywise_at_least(F(-1))

    def test_support_bound_and_max_head(self):
        p = H({2: 1, 9: 4})
        assert p.max_head_index() == 9
        assert harmonic(1, 5).support_bound() is None

    def test_parse_format_round_trip(self):
        texts = [
            "head 1=1/2,2=-3",
            "tail harmonic 1@1",
            "head 1=2 tail geometric 1/2,1/3@4",
            "head",
        ]
        for t in texts:
            p = parse_point(t)
            assert parse_point(format_point(p)) == p

    def test_parse_canonicalizes(self):
        p = parse_point("head 1=1 tail harmonic 1@2")
        assert p == harmonic(1)

    def test_parse_errors(self):
        for bad in ["", "tail harmonic", "tail harmonic 1@0", "head 0=1",
                    "tail geometric 1,2@1", "head 1=x", "bogus 1=1",
                    "head 3=1 tail harmonic 1@3"]:
            with pytest.raises(ParseError):
                parse_point(bad)


class TestNorms:
    def test_finite_exact(self):
        p = H({1: F(1, 2), 2: F(1, 2)})
        b = l1_enclosure(p)
        assert b.exact and b.lo == b.hi == 1
        sq = l2_squared_enclosure(p)
        assert sq.exact and sq.lo == F(1, 2)

    def test_geometric_l1_exact(self):
        # sum of s r^k for k >= 1 is s r / (1 - r)
        p = geometric(1, F(1, 2))
        b = l1_enclosure(p)
        assert b.exact and b.lo == 1

    def test_geometric_l2sq_exact_frozen(self):
        p = geometric(F(1, 2), F(1, 2))
        sq = l2_squared_enclosure(p)
        assert sq.exact and sq.lo == F(1, 12)

    def test_geometric_negative_scale(self):
        p = geometric(-1, F(1, 2))
        assert l1_enclosure(p).lo == 1
        assert l2_squared_enclosure(p).lo == F(1, 3)

    def test_harmonic_l1_divergent(self):
        b = l1_enclosure(harmonic(1))
        assert b.divergent
        assert b.hi is None

    def test_harmonic_l2sq_certified(self):
        # the true value is pi^2/6 = 1.644934...
        sq = l2_squared_enclosure(harmonic(1), width=F(1, 10**12))
        assert not sq.exact
        assert sq.width() <= F(1, 10**12)
        assert F(1644934, 10**6) < sq.lo
        assert sq.hi < F(1644935, 10**6)

    def test_harmonic_l2sq_with_head_and_start(self):
        p = H({1: 2}, Tail.harmonic(F(3), 4))
        sq = l2_squared_enclosure(p, width=F(1, 10**9))
        # 4 + 9 * (pi^2/6 - 1 - 1/4 - 1/9)
        approx = 4 + 9 * (1.6449340668 - 1 - 0.25 - 1 / 9)
        assert abs(float(sq.lo) - approx) < 1e-6

    def test_sqrt_enclosure(self):
        b = sqrt_enclosure(F(4), F(1, 1000))
        assert b.exact and b.lo == 2
        b2 = sqrt_enclosure(F(2), F(1, 10**12))
        assert b2.lo ** 2 <= 2 <= b2.hi ** 2
        assert b2.hi - b2.lo <= F(1, 10**12)

    def test_norm_enclosure_dispatch(self):
        p = geometric(1, F(1, 2))
        assert norm_enclosure(p, "l1").lo == 1
        l2 = norm_enclosure(p, "l2")
        assert l2.lo ** 2 <= F(1, 3) <= l2.hi ** 2
        with pytest.raises(PreconditionError):
            norm_enclosure(p, "bogus")

    def test_compare_l2_squared(self):
        assert compare_l2_squared(H({1: F(1, 2)}), F(1)) == -1
        assert compare_l2_squared(H({1: 1}), F(1)) == 0
        assert compare_l2_squared(H({1: 2}), F(1)) == 1
        assert compare_l2_squared(harmonic(1), F(1)) == 1


class TestMajorant:
    def test_default_targets_exact_norm(self):
        z1 = default_target(F(3), 1)
        assert l1_enclosure(z1).lo == 3
        z2 = default_target(F(1), 2)
        assert l2_squared_enclosure(z2).lo == 1

    def test_zero_input_identity_schedule(self):
        y = majorant_construct(SeqPoint.zero(), MajorantPlan(delta=F(1), d=1))
        assert y.schedule_prefix(6) == [1, 2, 3, 4, 5, 6]
        assert y.entry(3) == y.z.entry(3)
        assert y.exact_norm() == 1

    def test_schedule_strictly_increasing(self):
        x = harmonic(1)
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        pref = y.schedule_prefix(8)
        assert all(a < b for a, b in zip(pref, pref[1:]))

    def test_schedule_window_soundness(self):
        # beyond N(k) every entry of x sits strictly below z_k / k
        x = geometric(5, F(2, 3))
        plan = MajorantPlan(delta=F(1), d=1)
        y = majorant_construct(x, plan)
        for k in range(1, 9):
            n = y.schedule(k)
            tau = y.z.entry(k) / k
            for i in range(n, n + 12):
                assert abs(x.entry(i)) < tau

    def test_schedule_least_modulo_chaining(self):
        x = geometric(5, F(2, 3))
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        for k in range(1, 9):
            n = y.schedule(k)
            floor = 1 if k == 1 else y.schedule(k - 1) + 1
            if n > floor:
                # n - 1 must witness an actual violation
                tau = y.z.entry(k) / k
                assert abs(x.entry(n - 1)) >= tau

    def test_majorant_norm_equals_delta(self):
        x = H({1: 2, 4: -3})
        y = majorant_construct(x, MajorantPlan(delta=F(7, 2), d=1))
        assert y.exact_norm() == F(7, 2)
        b = l1_enclosure(y.z)
        assert b.lo == F(7, 2)

    def test_plan_schedule_audit(self):
        plan = MajorantPlan(delta=F(1), d=1)
        y = majorant_construct(harmonic(1), plan)
        assert plan.schedule is y._schedule
        assert plan.schedule[: 3] == y.schedule_prefix(3)

    def test_custom_target_validated(self):
        bad = H({1: 1})  # l1 norm 1 but not all-positive beyond support
        with pytest.raises(PreconditionError):
            majorant_construct(harmonic(1), MajorantPlan(delta=F(1), d=1, z=bad))
        with pytest.raises(PreconditionError):
            majorant_construct(
                harmonic(1),
                MajorantPlan(delta=F(2), d=1, z=geometric(1, F(1, 2))),
            )

    def test_verify_finds_smallest_index(self):
        x = geometric(1, F(1, 2))
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        for eps in (F(1), F(1, 10), F(1, 100)):
            hit = majorant_verify(x, y, eps, 10**4)
            assert hit is not None
            assert abs(x.entry(hit)) < eps * y.entry(hit)
            for i in range(1, hit):
                assert abs(x.entry(i)) >= eps * y.entry(i) or y.entry(i) == 0

    def test_verify_self_absent(self):
        # |x_i| < eps x_i is impossible for eps < 1, at any bound
        x = geometric(1, F(1, 2))
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        assert majorant_verify(y, y, F(1, 2), 500) is None

    def test_verify_harmonic_needs_larger_bound(self):
        # the schedule for a harmonic input against the d=1 default target
        # grows like k 2^k, so the 1/10 threshold sits just past 10^4
        x = harmonic(1)
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        assert majorant_verify(x, y, F(1, 10), 10**4) is None
        hit = majorant_verify(x, y, F(1, 10), 10**5)
        assert hit == 10241

    def test_verify_rejects_bad_eps(self):
        x = geometric(1, F(1, 2))
        y = majorant_construct(x, MajorantPlan(delta=F(1), d=1))
        with pytest.raises(PreconditionError):
            majorant_verify(x, y, F(0), 100)


def V(model, notion, p):
    return getattr(model, notion)(p)


class TestPosBall2:
    m = get_model("posball2")

    def test_member(self):
        assert self.m.member(H({1: F(1, 2)})).is_in
        assert not self.m.member(H({1: F(-1, 2)})).is_in
        assert not self.m.member(harmonic(1)).is_in  # divergent-free but norm > 1
        assert self.m.member(SeqPoint.zero()).is_in
        assert self.m.member(H({1: 1})).is_in

    def test_fri_rejects_nonmember_with_certificate(self):
        v = self.m.fri_member(H({1: F(-1, 2)}))
        assert not v.is_in and v.certificate
        # a finitely supported member has zero coordinates, so it sits on
        # the boundary slice and leaves the face-relative interior
        assert not self.m.fri_member(H({1: F(1, 2)})).is_in

    def test_fri_positive_small_geometric_in(self):
        assert self.m.fri_member(geometric(F(1, 2), F(1, 2))).is_in

    def test_fri_zero_coordinate_out(self):
        assert not self.m.fri_member(H({2: F(1, 2)})).is_in

    def test_fri_unit_norm_out(self):
        assert not self.m.fri_member(H({1: 1})).is_in

    def test_icr_always_out_with_schedule(self):
        for p in (SeqPoint.zero(), H({1: F(1, 2)}), geometric(F(1, 2), F(1, 2))):
            v = self.m.icr_member(p)
            assert not v.is_in
            assert "N =" in v.certificate

    def test_qri(self):
        assert self.m.qri_member(geometric(F(1, 2), F(1, 2))).is_in
        assert not self.m.qri_member(H({2: F(1, 2)})).is_in
        assert not self.m.qri_member(H({1: 1})).is_in
        # all-positive with squared norm exactly 1: the only stratum
        # without a certified answer
        v = self.m.qri_member(geometric(F(4, 3), F(3, 5)))
        assert v.value == INCONCLUSIVE

    def test_nonmember_rejected_everywhere(self):
        p = H({1: -1})
        for notion in ("fri_member", "icr_member", "qri_member"):
            assert not getattr(self.m, notion)(p).is_in


class TestL1Ball:
    m = get_model("l1ball")

    def test_member(self):
        assert self.m.member(H({1: F(1, 2), 2: F(-1, 4)})).is_in
        assert self.m.member(geometric(1, F(1, 2))).is_in  # l1 norm exactly 1
        assert not self.m.member(H({1: 2})).is_in
        assert not self.m.member(harmonic(1)).is_in

    def test_open_ball_in_for_fri_icr(self):
        p = H({1: F(1, 2)})
        assert self.m.fri_member(p).is_in
        assert self.m.icr_member(p).is_in
        assert self.m.qri_member(p).is_in

    def test_unit_sphere_fri_out(self):
        assert not self.m.fri_member(H({1: 1})).is_in
        assert not self.m.fri_member(geometric(1, F(1, 2))).is_in
        assert not self.m.icr_member(H({1: 1})).is_in

    def test_qri_sphere_split_by_support(self):
        # finite support stays out, infinite support gets in
        assert not self.m.qri_member(H({1: 1})).is_in
        assert self.m.qri_member(geometric(1, F(1, 2))).is_in

    def test_zero_in_everything(self):
        z = SeqPoint.zero()
        for notion in ("member", "fri_member", "icr_member", "qri_member"):
            assert getattr(self.m, notion)(z).is_in


class TestConvL1Point:
    def test_alpha_ranges(self):
        m = get_model("convl1")
        inside = harmonic(F(1, 2))
        assert m.member(inside).is_in
        assert m.fri_member(inside).is_in
        assert m.icr_member(inside).is_in
        assert m.qri_member(inside).is_in

    def test_base_point(self):
        m = get_model("convl1")
        base = H({1: 3})
        assert m.member(base).is_in
        assert m.fri_member(base).is_in  # alpha = 0 lies in the half-open range
        assert not m.icr_member(base).is_in

    def test_apex_inconclusive_qri(self):
        m = get_model("convl1")
        u = m.u
        assert m.member(u).is_in
        assert not m.fri_member(u).is_in
        assert m.qri_member(u).value == INCONCLUSIVE

    def test_outside(self):
        m = get_model("convl1")
        assert not m.member(harmonic(2)).is_in
        assert not m.member(harmonic(F(-1, 2))).is_in
        # coefficient exactly 1 forces equality with the apex
        assert not m.member(m.u + H({1: 5})).is_in

    def test_summable_shift_stays_inside(self):
        m = get_model("convl1")
        p = H({1: -1}, Tail.harmonic(F(1, 2), 2))
        assert m.member(p).is_in


class TestSegment:
    m = get_model("segment")

    def test_interior_and_ends(self):
        x = self.m.xbar
        mid = x.scale_by(F(1, 2))
        for notion in ("fri_member", "icr_member", "qri_member"):
            assert getattr(self.m, notion)(mid).is_in
            assert not getattr(self.m, notion)(SeqPoint.zero()).is_in
            assert not getattr(self.m, notion)(x).is_in

    def test_member_range(self):
        assert self.m.member(self.m.xbar.scale_by(F(1, 4))).is_in
        assert not self.m.member(self.m.xbar.scale_by(F(5, 4))).is_in
        assert not self.m.member(SeqPoint.basis(2)).is_in


class TestL1Plus:
    m = get_model("l1plus")

    def test_member(self):
        assert self.m.member(geometric(1, F(1, 2))).is_in
        assert not self.m.member(H({1: -1})).is_in
        assert not self.m.member(harmonic(1)).is_in  # not summable

    def test_fri(self):
        assert self.m.fri_member(geometric(1, F(1, 2))).is_in
        assert not self.m.fri_member(H({1: 1})).is_in  # zero coordinates
        assert not self.m.fri_member(SeqPoint.zero()).is_in

    def test_icr_always_out(self):
        for p in (SeqPoint.zero(), geometric(1, F(1, 2)), H({1: 1})):
            v = self.m.icr_member(p)
            assert not v.is_in

    def test_qri_zero_coordinate_out(self):
        assert not self.m.qri_member(H({2: 1})).is_in
        assert self.m.qri_member(geometric(1, F(1, 2))).is_in


class TestZalSum:
    m = get_model("zalsum")

    def test_member_split(self):
        xbar = harmonic(1)
        assert self.m.member(xbar).is_in
        # a positive harmonic coefficient forces a finitely supported
        # summable part within this point language
        assert self.m.member(xbar.scale_by(F(1, 2)) + H({1: 1, 3: 2})).is_in
        assert self.m.member(geometric(2, F(1, 3))).is_in
        assert not self.m.member(harmonic(2)).is_in
        assert not self.m.member(H({1: -1})).is_in

    def test_fri(self):
        assert self.m.fri_member(geometric(1, F(1, 2))).is_in
        assert not self.m.fri_member(H({2: 1})).is_in
        mixed = harmonic(F(1, 2)) + H({1: 5})
        assert self.m.fri_member(mixed).value == INCONCLUSIVE

    def test_icr_out_each_stratum(self):
        assert not self.m.icr_member(harmonic(1)).is_in  # t = 1, d = 0
        assert not self.m.icr_member(harmonic(F(1, 2)) + H({1: 5})).is_in  # t > 0
        assert not self.m.icr_member(geometric(1, F(1, 2))).is_in  # t = 0

    def test_qri_zero_coordinate_out(self):
        assert not self.m.qri_member(H({2: 1})).is_in


class TestFaceClasses:
    def test_posball2_face_of_member(self):
        m = get_model("posball2")
        p = H({1: F(1, 2)})
        fc = m.minimal_face_class(p)
        assert fc.test_in_face(p.scale_by(F(1, 2))).is_in
        assert not fc.test_in_face(H({1: -1})).is_in

    def test_singleton_face(self):
        m = get_model("segment")
        fc = m.minimal_face_class(SeqPoint.zero())
        assert fc.kind == "singleton"
        assert fc.test_in_face(SeqPoint.zero()).is_in
        assert not fc.test_in_face(m.xbar).is_in

    def test_l1ball_subspace_face(self):
        m = get_model("l1ball")
        fc = m.minimal_face_class(H({1: F(1, 2)}))
        assert fc.kind == "full-set"
        sphere_fc = m.minimal_face_class(H({1: 1}))
        assert sphere_fc.kind == "sign-slice"
        assert sphere_fc.test_in_face(H({1: 1})).is_in
        assert not sphere_fc.test_in_face(H({1: -1})).is_in

    def test_sign_slice_contains_infinite_support(self):
        m = get_model("l1ball")
        x1 = geometric(1, F(1, 2))
        fc = m.minimal_face_class(x1)
        assert fc.kind == "sign-slice"
        assert fc.test_in_face(x1).is_in
        # the slice is proper: flipping a sign leaves it
        assert not fc.test_in_face(-x1).is_in

    def test_convl1_face_at_base(self):
        m = get_model("convl1")
        fc = m.minimal_face_class(H({1: 3}))
        assert fc.kind == "subspace-l1"
        assert fc.test_in_face(H({1: 3})).is_in
        assert not fc.test_in_face(m.u).is_in


class TestSupRatio:
    def test_tail_table(self):
        ok, _ = sup_ratio_finite(geometric(1, F(1, 3)), geometric(1, F(1, 2)))
        assert ok
        bad, _ = sup_ratio_finite(geometric(1, F(1, 2)), geometric(1, F(1, 3)))
        assert not bad
        ok2, _ = sup_ratio_finite(harmonic(5), harmonic(1))
        assert ok2
        ok3, _ = sup_ratio_finite(geometric(1, F(1, 2)), harmonic(1))
        assert ok3
        bad2, _ = sup_ratio_finite(harmonic(1), geometric(1, F(1, 2)))
        assert not bad2

    def test_pointwise_guard(self):
        # q has support where x vanishes
        ok, why = sup_ratio_finite(H({2: 1}), H({1: 1}))
        assert not ok and "2" in why

    def test_finite_over_anything(self):
        ok, _ = sup_ratio_finite(H({1: 7}), H({1: 1}, Tail.harmonic(F(1), 2)))
        assert ok


class TestRegistry:
    def test_unknown_model(self):
        with pytest.raises(UnsupportedInputError):
            get_model("nope")

    def test_all_models_resolve(self):
        from facekit.seqmodels import MODELS

        for name in MODELS:
            m = get_model(name)
            assert m.member(SeqPoint.zero()) is not None
