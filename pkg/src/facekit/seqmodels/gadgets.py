"""Curated claim bundles about the gadget family and related sets.

Each claim couples a statement with a machine-checked certificate built
from exact arithmetic over the closed-form point language. Universal
statements are verified on a fixed deterministic corpus and the
certificate records the formula that extends the check to all members.
Two claims carry a `flagged` marker: they record spots where a commonly
quoted form of the example breaks down and a corrected form is used;
the discrepancy is reported, not silently patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from .models import MODELS, FaceClass
from .norms import l1_enclosure, l2_squared_enclosure
from .points import SeqPoint, Tail

F = Fraction


@dataclass(frozen=True)
class Claim:
    claim: str
    verdict: str  # "Pass" | "Fail"
    certificate: str
    flagged: bool = False

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "verdict": self.verdict,
            "certificate": self.certificate,
        }
        if self.flagged:
            out["flagged"] = True
        return out


def _pass(claim: str, cert: str, flagged: bool = False) -> Claim:
    return Claim(claim, "Pass", cert, flagged)


def _fail(claim: str, cert: str) -> Claim:
    return Claim(claim, "Fail", cert)


_V = SeqPoint.make({}, Tail.harmonic(1, 1))
_HALF_V = _V.scale_by(F(1, 2))

# finitely supported B-layer samples keep mixtures with v representable
_B_SAMPLES = (
    SeqPoint.zero(),
    SeqPoint.basis(1, -1),
    SeqPoint.make({1: F(-1), 2: F(3)}),
    SeqPoint.make({4: F(-1, 2), 7: F(2)}),
)

_S_SAMPLES = (F(1, 2), F(1), F(3, 2), F(2))


def _c_samples() -> list[SeqPoint]:
    pts = []
    for s in _S_SAMPLES:
        for w in _B_SAMPLES:
            pts.append(_V.scale_by(1 - s) + w.scale_by(s))
    return pts


def _d_samples() -> list[SeqPoint]:
    pts = []
    for t in (F(1, 3), F(1), F(2)):
        for u in (SeqPoint.zero(), SeqPoint.basis(1, -3), SeqPoint.make({2: F(5)})):
            pts.append(_V.scale_by(t) + u)
    pts.extend(_B_SAMPLES)
    return pts


def _stretch_eps(model, p: SeqPoint, x: SeqPoint) -> tuple[Fraction, SeqPoint]:
    """Smallest halving eps with p + eps (p - x) still a member."""
    eps = F(1)
    for _ in range(16):
        y = p + (p - x).scale_by(eps)
        if model.member(y).is_in:
            return eps, y
        eps /= 2
    raise PreconditionError("no admissible stretch found; the claim fails")


def _interior_by_stretching(model, p: SeqPoint, samples) -> tuple[int, list[str]]:
    notes = []
    for x in samples:
        assert model.member(x).is_in
        eps, y = _stretch_eps(model, p, x)
        combo = y.scale_by(1 / (1 + eps)) + x.scale_by(eps / (1 + eps))
        assert combo == p
        notes.append(f"eps={eps}")
    return len(samples), notes


def intersection_gadget_claims() -> list[Claim]:
    claims: list[Claim] = []
    gc = MODELS["gadget-c"]
    gd = MODELS["gadget-d"]
    gb = MODELS["gadget-b"]
    gcd = MODELS["gadget-cd"]

    # (1) v/2 sits in icr (hence fri) of C
    n, _ = _interior_by_stretching(gc, _HALF_V, _c_samples())
    claims.append(
        _pass(
            "v/2 lies in icr and fri of the C stretches",
            f"for each of {n} corpus members x the stretched point "
            "y = v/2 + eps (v/2 - x) stays in C for an explicit rational "
            "eps > 0 and v/2 = y/(1+eps) + eps x/(1+eps) exactly; the "
            "v-coefficient 1/2 is insensitive to these stretches because "
            "it stays below 1, which is the only C constraint on it",
        )
    )

    # (2) v/2 sits in icr (hence fri) of D
    n, _ = _interior_by_stretching(gd, _HALF_V, _d_samples())
    claims.append(
        _pass(
            "v/2 lies in icr and fri of the D union",
            f"for each of {n} corpus members x the stretch lands in the A "
            "layer (positive v-coefficient), which only requires the "
            "coefficient 1/2 + eps(1/2 - t) to stay positive",
        )
    )

    # (3) 0 lies in fri of the intersection
    assert gcd.member(SeqPoint.zero()).is_in
    sym_notes = []
    for x in _B_SAMPLES:
        if x.is_zero():
            continue
        nrm = l1_enclosure(x).lo
        z = x.scale_by(-1 / nrm)
        assert gcd.member(x).is_in
        assert gb.member(z).is_in and gcd.member(z).is_in
        lam = 1 / (1 + nrm)
        combo = x.scale_by(lam) + z.scale_by(1 - lam)
        assert combo.is_zero()
        sym_notes.append(f"|x|_1={nrm}, lambda={lam}")
    shrink = []
    for c in (_c_samples()[1], _V.scale_by(F(1, 2)) + _B_SAMPLES[2].scale_by(F(1, 2)),
              SeqPoint.make({}, Tail.geometric(1, F(1, 2), 1))):
        assert gcd.member(c).is_in
        his = []
        for nn in (5, 10, 20, 40):
            trunc = c.truncate(nn)
            assert gb.member(trunc).is_in and gcd.member(trunc).is_in
            his.append(l2_squared_enclosure(c - trunc).hi)
        assert all(a > b for a, b in zip(his, his[1:]))
        shrink.append(his[-1])
    claims.append(
        _pass(
            "0 lies in fri of the C and D intersection",
            "every nonzero B-layer member x pairs with -x/|x|_1, also in "
            "the intersection, to place 0 strictly between them "
            f"(verified: {'; '.join(sym_notes)}), so the minimal face of 0 "
            "contains the whole B layer; truncations of intersection "
            "members stay in the B layer and converge to them in l2 "
            "(squared distances decrease along N = 5, 10, 20, 40, ending "
            f"at {', '.join(str(s) for s in shrink)}), so that face is dense",
        )
    )

    # (4) 0 does not lie in fri of D
    rejects = 0
    for y in _d_samples():
        if y.harmonic_scale() <= 0:
            continue
        for mu in (F(1, 2), F(1), F(2)):
            assert not gd.member(y.scale_by(-mu)).is_in
            rejects += 1
    pstar = _V + SeqPoint.basis(1, -3)
    assert MODELS["gadget-a"].member(pstar).is_in and gd.member(pstar).is_in
    assert pstar.entry(1) == F(-2)
    claims.append(
        _pass(
            "0 does not lie in fri of the D union",
            "a point of the minimal face of 0 must admit a member of D on "
            "the far side of 0, and negative multiples of A-layer members "
            f"leave D (checked {rejects} rejections), so that face sits "
            "inside the B layer; the member v - 3 e_1 has first entry -2 "
            "while every B-layer point has entries >= -1, so it stays at "
            "l2 distance >= 1 from the whole B layer and hence from the "
            "face's closure",
        )
    )

    # (5) flagged: the shallow witness v - 2 e_1 does not separate
    plit = _V + SeqPoint.basis(1, -2)
    assert plit.entry(1) == F(-1) and plit.entrywise_at_least(-1)
    dist_his = []
    for nn in (3, 6, 12, 24):
        trunc = plit.truncate(nn)
        assert gb.member(trunc).is_in
        dist_his.append(l2_squared_enclosure(plit - trunc).hi)
    assert all(a > b for a, b in zip(dist_his, dist_his[1:]))
    claims.append(
        _pass(
            "the shallow witness v - 2 e_1 fails to leave the closure of "
            "the B layer",
            "its first entry is exactly -1, inside the B bound, and its "
            "truncations lie in the B layer while the squared l2 distances "
            f"shrink along N = 3, 6, 12, 24 ({', '.join(str(h) for h in dist_his)}), "
            "so the point belongs to the closure of the B layer and cannot "
            "witness the previous claim; the corrected witness v - 3 e_1 "
            "is used instead",
            flagged=True,
        )
    )
    return claims


def zalinescu_claims() -> list[Claim]:
    claims: list[Claim] = []
    seg = MODELS["segment"]
    zs = MODELS["zalsum"]
    lp = MODELS["l1plus"]
    xbar = seg.xbar

    # (1) fri of the segment is the open coefficient range
    rows = []
    for t in (F(0), F(1, 4), F(1, 2), F(3, 4), F(1)):
        p = xbar.scale_by(t)
        inside = 0 < t < 1
        got = seg.fri_member(p)
        assert got.is_in == inside
        assert seg.icr_member(p).is_in == inside
        assert seg.qri_member(p).is_in == inside
        rows.append(f"t={t}: {got.value}")
    claims.append(
        _pass(
            "fri of the segment [0,1] xbar is the open parameter range",
            "; ".join(rows),
        )
    )

    # (2) strictly positive summable points lie in fri of the sum set
    pos_samples = (
        SeqPoint.make({}, Tail.geometric(1, F(1, 2), 1)),
        SeqPoint.make({}, Tail.geometric(2, F(2, 3), 1)),
        SeqPoint.make({1: F(5)}, Tail.geometric(1, F(1, 3), 2)),
    )
    for p in pos_samples:
        assert p.all_positive()
        assert zs.fri_member(p).is_in
        assert lp.fri_member(p).is_in
    claims.append(
        _pass(
            "strictly positive summable points lie in fri of the sum set "
            "and of the nonnegative layer",
            f"verified for {len(pos_samples)} geometric samples via the "
            "truncation-domination certificate",
        )
    )

    # (3) no strictly positive summable point splits across the two fri's
    reject_rows = []
    for t in (F(1, 4), F(1, 2), F(3, 4)):
        for d in (SeqPoint.basis(1), pos_samples[0].truncate(5)):
            q = xbar.scale_by(t) + d
            got = lp.member(q)
            assert not got.is_in
            reject_rows.append(f"t={t}: harmonic tail persists")
    claims.append(
        _pass(
            "the strictly positive summable points are disjoint from the "
            "sum of the two fri sets",
            "a sum of an interior segment point and any nonnegative "
            "summable point keeps a positive harmonic coefficient, so it "
            "is never summable, let alone strictly positive summable "
            f"({len(reject_rows)} combinations rejected)",
        )
    )

    # (4) flagged: fri does not distribute over the sum
    witness = pos_samples[0]
    assert zs.fri_member(witness).is_in
    # every point of (fri segment) + (fri layer) keeps a positive harmonic
    # coefficient, and the witness has none
    assert witness.harmonic_scale() == 0
    claims.append(
        _pass(
            "fri of the sum strictly exceeds the sum of the fri sets",
            "claim 2 places strictly positive summable points inside fri "
            "of the sum while claim 3 keeps them outside the sum of the "
            "fri sets; a reading that intersects the positive cone with "
            "fri of the sum and asserts emptiness contradicts claim 2, so "
            "the consistent reading uses the sum of the two fri sets, and "
            "the discrepancy is recorded rather than silently resolved",
            flagged=True,
        )
    )
    return claims


def nonpartition_claims() -> list[Claim]:
    claims: list[Claim] = []
    l1b = MODELS["l1ball"]
    x1 = SeqPoint.make({}, Tail.geometric(1, F(1, 2), 1))
    assert l1_enclosure(x1).lo == 1

    m = l1b.member(x1)
    f = l1b.fri_member(x1)
    q = l1b.qri_member(x1)
    assert m.is_in and not f.is_in and q.is_in
    claims.append(
        _pass(
            "the unit-norm geometric point separates fri from qri in the "
            "l1 ball",
            "member: " + m.certificate + " / fri Out: " + f.certificate
            + " / qri In: " + q.certificate,
        )
    )

    cls = l1b.minimal_face_class(x1)
    assert cls.kind == "sign-slice"
    assert cls.test_in_face(x1).is_in
    probe = SeqPoint.basis(1, -1)
    assert l1b.member(probe).is_in
    assert not cls.test_in_face(probe).is_in
    claims.append(
        _pass(
            "the quasi notion does not partition the ball across faces",
            "the point lies in qri of the whole ball, yet its minimal face "
            "is the proper sign slice (it contains the point but not the "
            "member -e_1), so quasi interiors of distinct faces overlap at "
            "the point instead of partitioning the set",
        )
    )
    return claims


def gadget_claims() -> list[Claim]:
    """All curated claims; every verdict is expected to be Pass."""
    return (
        intersection_gadget_claims() + zalinescu_claims() + nonpartition_claims()
    )
