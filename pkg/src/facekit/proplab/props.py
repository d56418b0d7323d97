"""The property registry: each suite exercises one proposition.

Set equalities are tested on deterministic sample mixtures plus random
draws; reports record trial counts and the realization chosen for each
universally quantified statement. Nothing here claims a proof.

All polytope-facing calls go through the `pf` module object so a test
can swap a routine out and watch the harness catch the corruption.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .. import polyface as pf
from .. import seqmodels as sq
from ..errors import PreconditionError
from ..ratcore import RatVec
from .boxes import FlaggedBox, box_interiors
from .gen import GenConfig, gen_polytope, rng_for, sample_points

F = Fraction


@dataclass(frozen=True)
class TrialResult:
    status: str  # pass | fail | skip
    counterexample: dict | None = None
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Property:
    property_id: str
    note: str
    trial: Callable[[GenConfig, int], TrialResult]
    adjust: Callable[[GenConfig], GenConfig] | None = None
    recheck: Callable[[dict], bool] | None = None
    generative: bool = True


def _ok(**stats) -> TrialResult:
    return TrialResult("pass", stats=stats)


def _skip(**stats) -> TrialResult:
    return TrialResult("skip", stats=stats)


def _fail(cex: dict, **stats) -> TrialResult:
    return TrialResult("fail", counterexample=cex, stats=stats)


# -------------------------------------------------------- serialization


def vec_to_json(v: RatVec) -> list[str]:
    return [str(c) for c in v.coords]


def vec_from_json(data) -> RatVec:
    return RatVec.of([F(c) for c in data])


def poly_to_json(p: pf.VPolytope) -> dict:
    return {"dim": p.dim, "vertices": [vec_to_json(v) for v in p.vertices]}


def poly_from_json(data) -> pf.VPolytope:
    return pf.VPolytope.hull(
        int(data["dim"]), [vec_from_json(v) for v in data["vertices"]]
    )


def _cex(poly: pf.VPolytope, x: RatVec, detail: str, **extra) -> dict:
    out = {"polytope": poly_to_json(poly), "point": vec_to_json(x), "detail": detail}
    out.update(extra)
    return out


# ------------------------------------------------------------- helpers


def _pick(rng: random.Random, items: list, k: int) -> list:
    if len(items) <= k:
        return list(items)
    return rng.sample(items, k)


def _interior_point(poly: pf.VPolytope, rng: random.Random) -> RatVec:
    """Strict convex mix of the centroid with a random member point."""
    from .gen import _rand_combination

    c = poly.centroid()
    z = _rand_combination(poly, rng)
    return (c + z).scale(F(1, 2))


def _linf(v: RatVec) -> Fraction:
    return max((abs(c) for c in v.coords), default=F(0))


def _rand_box(rng: random.Random) -> FlaggedBox:
    dim = rng.randint(1, 3)
    lo, hi = [], []
    for _ in range(dim):
        a = F(rng.randint(-12, 0), rng.randint(1, 4))
        w = F(rng.randint(1, 8), rng.randint(1, 4))
        lo.append(a)
        hi.append(a + w)
    flags = lambda: tuple(rng.random() < F(1, 2) for _ in range(dim))
    return FlaggedBox(RatVec.of(lo), RatVec.of(hi), flags(), flags())


def _box_grid(box: FlaggedBox) -> list[RatVec]:
    """Per-axis values lo, lo + w/3, lo + 2w/3, hi; full product."""
    axes = []
    for a, b in zip(box.lo.coords, box.hi.coords):
        w = b - a
        axes.append([a, a + w / 3, a + 2 * w / 3, b])
    pts = [[]]
    for axis in axes:
        pts = [p + [v] for p in pts for v in axis]
    return [RatVec.of(p) for p in pts]


# ------------------------------------------------------------ suites


def _t_oracle(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-ORACLE", trial)
    poly = gen_polytope(cfg, rng)
    pts = _pick(rng, sample_points(poly, cfg, rng), 3)
    for x in pts:
        got = pf.minimal_face(poly, x)
        want = pf.minimal_face_oracle(poly, x)
        if got != want:
            return _fail(_cex(
                poly, x,
                f"minimal_face {list(got.indices)} != oracle {list(want.indices)}",
            ), pairs=1)
    return _ok(pairs=len(pts))


def _r_oracle(cex: dict) -> bool:
    poly = poly_from_json(cex["polytope"])
    x = vec_from_json(cex["point"])
    if not pf.contains(poly, x):
        return False
    return pf.minimal_face(poly, x) != pf.minimal_face_oracle(poly, x)


def _t_sandwich(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-SANDWICH", trial)
    poly = gen_polytope(cfg, rng)
    pts = _pick(rng, sample_points(poly, cfg, rng), 3)
    for x in pts:
        v = pf.interiors(poly, x)
        if not v.chain_ok or len(set(v.as_flags())) != 1:
            return _fail(_cex(poly, x, f"flags ri/icr/fri/qri = {v.as_flags()}"))
    return _ok(pairs=len(pts))


def _r_sandwich(cex: dict) -> bool:
    poly = poly_from_json(cex["polytope"])
    x = vec_from_json(cex["point"])
    if not pf.contains(poly, x):
        return False
    v = pf.interiors(poly, x)
    return not v.chain_ok or len(set(v.as_flags())) != 1


def _t_minf_mono(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-MINF-MONO", trial)
    poly = gen_polytope(cfg, rng)
    k = rng.randint(2, poly.n_vertices)
    idx = sorted(rng.sample(range(poly.n_vertices), k))
    # extreme points of the whole stay extreme in any vertex-subset hull
    sub = pf.VPolytope.from_extreme(poly.dim, [poly.vertices[i] for i in idx])
    from .gen import _rand_combination

    x = _rand_combination(sub, rng)
    small = pf.minimal_face(sub, x)
    big = pf.minimal_face(poly, x)
    big_poly = poly.subpolytope(big)
    for i in small.indices:
        v = sub.vertices[i]
        if not pf.contains(big_poly, v):
            return _fail(_cex(
                poly, x,
                f"vertex {vec_to_json(v)} of the sub-hull face escapes the full face",
                subset=[int(i) for i in idx],
            ))
    return _ok()


def _t_segment(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-SEGMENT", trial)
    poly = gen_polytope(cfg, rng)
    x = poly.centroid()
    if not pf.interiors(poly, x).fri:
        return _fail(_cex(poly, x, "centroid not fri"))
    ys = _pick(rng, sample_points(poly, cfg, rng, midpoints=False), 2)
    for y in ys:
        for lam in (F(1, 4), F(1, 2), F(3, 4)):
            z = x.scale(1 - lam) + y.scale(lam)
            if not pf.interiors(poly, z).fri:
                return _fail(_cex(
                    poly, z, f"half-open segment point at lambda={lam} not fri",
                    endpoint=vec_to_json(y),
                ))
    return _ok()


def _r_segment(cex: dict) -> bool:
    poly = poly_from_json(cex["polytope"])
    z = vec_from_json(cex["point"])
    return pf.contains(poly, z) and not pf.interiors(poly, z).fri


def _t_idempotent(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-IDEMPOTENT", trial)
    poly = gen_polytope(cfg, rng)
    c = poly.centroid()
    pts = _pick(rng, sample_points(poly, cfg, rng), 4)
    fri_pts = [p for p in pts if pf.interiors(poly, p).fri]
    dirs = _pick(rng, list(poly.vertices), 2)
    for s in fri_pts:
        eps = F(1, 8)
        certified = False
        for _ in range(10):
            stretched = [
                s + (v - c).scale(sign * eps)
                for v in dirs
                for sign in (1, -1)
            ]
            if all(
                pf.contains(poly, z) and pf.interiors(poly, z).fri
                for z in stretched
            ):
                certified = True
                break
            eps /= 2
        if not certified:
            return _fail(_cex(
                poly, s, "no symmetric stretch keeps the point fri: the fri "
                "set fails to be relatively open here",
            ))
    return _ok(fri_points=len(fri_pts))


def _t_closure(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-CLOSURE", trial)
    poly = gen_polytope(cfg, rng)
    c = poly.centroid()
    for v in _pick(rng, list(poly.vertices), 2):
        d0 = _linf(v - c)
        if d0 == 0:
            return _fail(_cex(poly, v, "vertex equals centroid"))
        for m in range(1, 5):
            t = 1 - F(1, 2**m)
            xm = c + (v - c).scale(t)
            dist = _linf(v - xm)
            if dist != d0 / 2**m:
                return _fail(_cex(poly, xm, "approach distance fails to halve"))
            if not pf.interiors(poly, xm).fri:
                return _fail(_cex(
                    poly, xm, f"approach point at step {m} toward a vertex "
                    "is not fri, breaking cl(fri) = cl",
                ))
    box = _rand_box(rng)
    center = (box.lo + box.hi).scale(F(1, 2))
    corner = box.lo
    for m in range(1, 5):
        xm = corner + (center - corner).scale(F(1, 2**m))
        if not box.strictly_inside(xm):
            return _fail({
                "box": _box_to_json(box),
                "point": vec_to_json(xm),
                "detail": "interior approach to a corner leaves the open box",
            })
    return _ok()


def _t_product(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-PRODUCT", trial)
    p = gen_polytope(cfg, rng)
    q = gen_polytope(cfg, rng)
    r = pf.product(p, q)
    xs = _pick(rng, sample_points(p, cfg, rng, midpoints=False), 2)
    ys = _pick(rng, sample_points(q, cfg, rng, midpoints=False), 2)
    for x, y in zip(xs, ys):
        vx = pf.interiors(p, x)
        vy = pf.interiors(q, y)
        vr = pf.interiors(r, RatVec(x.coords + y.coords))
        want = tuple(a and b for a, b in zip(vx.as_flags(), vy.as_flags()))
        if vr.as_flags() != want:
            return _fail(_cex(
                r, RatVec(x.coords + y.coords),
                f"product flags {vr.as_flags()} != factor conjunction {want}",
            ))
    return _ok()


def _t_image(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-IMAGE", trial)
    from ..ratcore import linalg

    poly = gen_polytope(cfg, rng)
    n = poly.dim
    # invertible map: identity plus a small random rational perturbation
    for _ in range(10):
        rows = [
            [F(int(i == j)) + F(rng.randint(-2, 2), 8) for j in range(n)]
            for i in range(n)
        ]
        if linalg.rank(rows) == n:
            break
    else:
        return _skip()
    t = pf.LinMap.of(rows)
    img = pf.image(t, poly)
    for x in _pick(rng, sample_points(poly, cfg, rng, midpoints=False), 3):
        a = pf.interiors(poly, x).fri
        b = pf.interiors(img, t.apply(x)).fri
        if a != b:
            return _fail(_cex(
                poly, x, f"injective image changes the fri flag {a} -> {b}",
                matrix=[[str(e) for e in row] for row in rows],
            ))
    # arbitrary (possibly collapsing) map only preserves the inclusion
    out_dim = rng.randint(1, n)
    rows2 = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(out_dim)]
    t2 = pf.LinMap.of(rows2)
    img2 = pf.image(t2, poly)
    w = _interior_point(poly, rng)
    if pf.interiors(poly, w).fri and not pf.interiors(img2, t2.apply(w)).fri:
        return _fail(_cex(
            poly, w, "image of a fri point is not fri in the image polytope",
            matrix=[[str(e) for e in row] for row in rows2],
        ))
    return _ok()


def _t_translate(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-TRANSLATE", trial)
    poly = gen_polytope(cfg, rng)
    shift = RatVec.of([F(rng.randint(-8, 8), rng.randint(1, 4))
                       for _ in range(poly.dim)])
    moved = pf.translate(poly, shift)
    for x in _pick(rng, sample_points(poly, cfg, rng, midpoints=False), 3):
        before = pf.interiors(poly, x).as_flags()
        after = pf.interiors(moved, x + shift).as_flags()
        if before != after:
            return _fail(_cex(
                poly, x, f"flags change under translation {before} -> {after}",
                shift=vec_to_json(shift),
            ))
    return _ok()


def _t_sum(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-SUM", trial)
    p = gen_polytope(cfg, rng)
    q_rng_dim = p.dim
    for _ in range(20):
        q = gen_polytope(cfg, rng)
        if q.dim == q_rng_dim:
            break
    else:
        return _skip()
    r = pf.msum(p, q)
    pairs = [(p.centroid(), q.centroid()),
             (_interior_point(p, rng), _interior_point(q, rng))]
    for a, b in pairs:
        if not (pf.interiors(p, a).fri and pf.interiors(q, b).fri):
            continue
        if not pf.interiors(r, a + b).fri:
            return _fail(_cex(
                r, a + b, "sum of fri points is not fri in the Minkowski sum",
                left=vec_to_json(a), right=vec_to_json(b),
            ))
    return _ok()


def _t_intersect(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-INTERSECT", trial)
    p = gen_polytope(cfg, rng)
    if trial % 2 == 0:
        k = rng.randrange(p.n_vertices)
        shift = (p.vertices[k] - p.centroid()).scale(F(1, 4))
        q = pf.translate(p, shift)
    else:
        for _ in range(20):
            q = gen_polytope(cfg, rng)
            if q.dim == p.dim:
                break
        else:
            return _skip()
    witness = None
    for w in (p.centroid(), q.centroid(),
              (p.centroid() + q.centroid()).scale(F(1, 2))):
        if pf.contains(p, w) and pf.contains(q, w) \
                and pf.interiors(p, w).fri and pf.interiors(q, w).fri:
            witness = w
            break
    if witness is None:
        return _skip()
    r = pf.intersect(p, q)
    if r is None:
        return _fail(_cex(p, witness, "witnessed intersection came back empty",
                          other=poly_to_json(q)))
    for s in _pick(rng, sample_points(r, cfg, rng, midpoints=False, combos=2), 3):
        if not pf.interiors(r, s).fri:
            continue
        if not (pf.interiors(p, s).fri and pf.interiors(q, s).fri):
            return _fail(_cex(
                r, s, "fri point of the intersection is not fri in a factor",
                other=poly_to_json(q),
            ))
    return _ok()


def _t_icrfri(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-ICRFRI", trial)
    big = gen_polytope(cfg, rng)
    c = big.centroid()
    mids = [
        (c + v).scale(F(1, 2))
        for v in _pick(rng, list(big.vertices), 2)
    ]
    small = pf.VPolytope.hull(big.dim, [c] + mids)
    if not pf.interiors(big, c).fri:
        return _fail(_cex(big, c, "centroid witness is not fri in the superset"))
    cand = [small.centroid()] + list(small.vertices)
    for s in _pick(rng, cand, 3):
        if pf.interiors(small, s).icr and not pf.interiors(big, s).fri:
            return _fail(_cex(
                big, s, "icr point of the subset misses fri of the superset",
                subset=poly_to_json(small),
            ))
    return _ok()


def _t_notinfri(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-NOTINFRI", trial)
    poly = gen_polytope(cfg, rng)
    for x in _pick(rng, sample_points(poly, cfg, rng), 4):
        flag = pf.interiors(poly, x).fri
        try:
            w = pf.notinfri_witness(poly, x)
        except AssertionError as exc:
            return _fail(_cex(poly, x, f"witness re-verification failed: {exc}"))
        if (w is None) != flag:
            return _fail(_cex(
                poly, x,
                f"witness presence disagrees with the fri flag {flag}",
            ))
        if w is not None and (w.r <= 0 or w.grid_checked < 1):
            return _fail(_cex(poly, x, "degenerate witness ball"))
    return _ok()


def _r_notinfri(cex: dict) -> bool:
    poly = poly_from_json(cex["polytope"])
    x = vec_from_json(cex["point"])
    if not pf.contains(poly, x):
        return False
    try:
        w = pf.notinfri_witness(poly, x)
    except AssertionError:
        return True
    return (w is None) != pf.interiors(poly, x).fri


def _t_decompose(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-DECOMPOSE", trial)
    poly = gen_polytope(cfg, rng)
    pts = _pick(rng, sample_points(poly, cfg, rng, combos=2), 8)
    try:
        assigned = pf.decompose(poly, pts)
    except AssertionError as exc:
        return _fail({"polytope": poly_to_json(poly), "detail": str(exc)})
    if len(assigned) != len(pts):
        return _fail({"polytope": poly_to_json(poly),
                      "detail": "decomposition dropped a sample"})
    return _ok(samples=len(pts), faces=len(set(assigned.values())))


def _t_icrminf(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-ICRMINF", trial)
    poly = gen_polytope(cfg, rng)
    for x in _pick(rng, sample_points(poly, cfg, rng), 3):
        fid = pf.minimal_face(poly, x)
        sub = poly.subpolytope(fid)
        v = pf.interiors(sub, x)
        if not v.icr:
            return _fail(_cex(
                poly, x,
                f"point is not icr in its own minimal face {list(fid.indices)}",
            ))
    return _ok()


def _r_icrminf(cex: dict) -> bool:
    poly = poly_from_json(cex["polytope"])
    x = vec_from_json(cex["point"])
    if not pf.contains(poly, x):
        return False
    sub = poly.subpolytope(pf.minimal_face(poly, x))
    return not pf.interiors(sub, x).icr


def _box_to_json(box: FlaggedBox) -> dict:
    return {
        "lo": vec_to_json(box.lo),
        "hi": vec_to_json(box.hi),
        "lo_closed": list(box.lo_closed),
        "hi_closed": list(box.hi_closed),
    }


def _t_closprop(cfg: GenConfig, trial: int) -> TrialResult:
    rng = rng_for(cfg, "P-CLOSPROP", trial)
    a = _rand_box(rng)
    extra = lambda: tuple(rng.random() < F(1, 2) for _ in range(a.dim))
    b = a.close_facets(extra(), extra())
    abar = a.closure()
    for x in _box_grid(a):
        in_a, in_b = a.contains(x), b.contains(x)
        if in_a and not in_b:
            return _fail({"box": _box_to_json(a), "point": vec_to_json(x),
                          "detail": "A escapes B after closing facets"})
        open_x = a.strictly_inside(x)
        if open_x and not in_a:
            return _fail({"box": _box_to_json(a), "point": vec_to_json(x),
                          "detail": "open-box point missing from A"})
        # fri A = A meet fri(closure A), all sides evaluated analytically
        lhs = open_x
        rhs = in_a and box_interiors(abar, x).fri
        if lhs != rhs:
            return _fail({"box": _box_to_json(a), "point": vec_to_json(x),
                          "detail": f"fri identity fails: {lhs} != {rhs}"})
        if in_a and box_interiors(a, x).as_flags() != (open_x,) * 4:
            return _fail({"box": _box_to_json(a), "point": vec_to_json(x),
                          "detail": "analytic box verdict disagrees"})
    # the precondition is part of the contract: a point on an open facet
    # is outside A and must be rejected
    if not all(a.lo_closed):
        axis = a.lo_closed.index(False)
        mid = [(lo + hi) / 2 for lo, hi in zip(a.lo.coords, a.hi.coords)]
        mid[axis] = a.lo.coords[axis]
        try:
            box_interiors(a, RatVec.of(mid))
            return _fail({"box": _box_to_json(a),
                          "detail": "open-facet point was not rejected"})
        except PreconditionError:
            pass
    return _ok()


# ------------------------------------------- sequence-model regression


def _seq_corpus() -> list[tuple[str, Callable[[], bool]]]:
    def pt(head=None, tail=None):
        return sq.SeqPoint.make(
            {i: F(v) for i, v in (head or {}).items()}, tail
        )

    def harm(s, start=1):
        return sq.Tail.harmonic(F(s), start)

    def geo(s, r, start=1):
        return sq.Tail.geometric(F(s), F(r), start)

    def verdict(model, notion, p, want):
        return lambda: getattr(sq.get_model(model), notion)(p).value == want

    items: list[tuple[str, Callable[[], bool]]] = [
        ("posball2 member head 1=1/2 In",
         verdict("posball2", "member", pt({1: F(1, 2)}), "In")),
        ("posball2 member head 1=-1/2 Out",
         verdict("posball2", "member", pt({1: F(-1, 2)}), "Out")),
        ("posball2 member harmonic Out",
         verdict("posball2", "member", pt(tail=harm(1)), "Out")),
        ("posball2 fri geometric(1/2,1/2) In",
         verdict("posball2", "fri_member", pt(tail=geo(F(1, 2), F(1, 2))), "In")),
        ("posball2 fri zero-coordinate Out",
         verdict("posball2", "fri_member", pt({2: F(1, 2)}), "Out")),
        ("posball2 fri unit-norm Out",
         verdict("posball2", "fri_member", pt({1: 1}), "Out")),
        ("posball2 icr zero Out",
         verdict("posball2", "icr_member", sq.SeqPoint.zero(), "Out")),
        ("posball2 icr geometric Out",
         verdict("posball2", "icr_member", pt(tail=geo(F(1, 2), F(1, 2))), "Out")),
        ("posball2 qri positive unit-norm Inconclusive",
         verdict("posball2", "qri_member", pt(tail=geo(F(4, 3), F(3, 5))),
                 "Inconclusive")),
        ("l1ball fri open-ball In",
         verdict("l1ball", "fri_member", pt({1: F(1, 2)}), "In")),
        ("l1ball icr open-ball In",
         verdict("l1ball", "icr_member", pt({1: F(1, 2)}), "In")),
        ("l1ball fri sphere finite Out",
         verdict("l1ball", "fri_member", pt({1: 1}), "Out")),
        ("l1ball qri sphere finite Out",
         verdict("l1ball", "qri_member", pt({1: 1}), "Out")),
        ("l1ball fri sphere infinite Out",
         verdict("l1ball", "fri_member", pt(tail=geo(1, F(1, 2))), "Out")),
        ("l1ball qri sphere infinite In",
         verdict("l1ball", "qri_member", pt(tail=geo(1, F(1, 2))), "In")),
        ("convl1 icr interior coefficient In",
         verdict("convl1", "icr_member", pt(tail=harm(F(1, 2))), "In")),
        ("convl1 fri base layer In",
         verdict("convl1", "fri_member", pt({1: 3}), "In")),
        ("convl1 icr base layer Out",
         verdict("convl1", "icr_member", pt({1: 3}), "Out")),
        ("convl1 qri apex Inconclusive",
         lambda: sq.get_model("convl1").qri_member(
             sq.get_model("convl1").u).value == "Inconclusive"),
        ("segment midpoint all-in",
         lambda: all(
             getattr(sq.get_model("segment"), n)(
                 sq.get_model("segment").xbar.scale_by(F(1, 2))).is_in
             for n in ("fri_member", "icr_member", "qri_member"))),
        ("segment endpoints all-out",
         lambda: not any(
             getattr(sq.get_model("segment"), n)(p).is_in
             for n in ("fri_member", "icr_member", "qri_member")
             for p in (sq.SeqPoint.zero(), sq.get_model("segment").xbar))),
        ("l1plus fri positive In",
         verdict("l1plus", "fri_member", pt(tail=geo(1, F(1, 2))), "In")),
        ("l1plus icr Out",
         verdict("l1plus", "icr_member", pt(tail=geo(1, F(1, 2))), "Out")),
        ("l1plus qri zero-coordinate Out",
         verdict("l1plus", "qri_member", pt({2: 1}), "Out")),
        ("zalsum member harmonic In",
         verdict("zalsum", "member", pt(tail=harm(1)), "In")),
        ("zalsum icr apex Out",
         verdict("zalsum", "icr_member", pt(tail=harm(1)), "Out")),
        ("zalsum icr summable Out",
         verdict("zalsum", "icr_member", pt(tail=geo(1, F(1, 2))), "Out")),
        ("zalsum fri zero-coordinate Out",
         verdict("zalsum", "fri_member", pt({2: 1}), "Out")),
        ("l1ball sphere face is a proper sign slice",
         lambda: (lambda fc: fc.kind == "sign-slice"
                  and fc.test_in_face(pt(tail=geo(1, F(1, 2)))).is_in
                  and not fc.test_in_face(pt({1: -1})).is_in)(
             sq.get_model("l1ball").minimal_face_class(pt(tail=geo(1, F(1, 2)))))),
        ("posball2 halved member stays in the open face",
         lambda: sq.get_model("posball2").minimal_face_class(
             pt({1: F(1, 2)})).test_in_face(pt({1: F(1, 4)})).is_in),
        ("gadget claims all pass with two flags",
         lambda: (lambda cs: all(c.verdict == "Pass" for c in cs)
                  and sum(1 for c in cs if c.flagged) == 2)(sq.gadget_claims())),
        ("nonemptiness posball2",
         lambda: sq.nonemptiness_witness("posball2")[1]["status"] == "Pass"),
        ("nonemptiness l1ball",
         lambda: sq.nonemptiness_witness("l1ball")[1]["status"] == "Pass"),
        ("sigma-hull separation",
         lambda: sq.sigma_hull_demo()["status"] == "Pass"),
    ]
    return items


def _t_seq_regression(cfg: GenConfig, trial: int) -> TrialResult:
    items = _seq_corpus()
    for label, check in items:
        ok = False
        try:
            ok = check()
        except Exception as exc:  # a crash is a failure with a name
            return _fail({"item": label, "detail": f"raised {exc!r}"})
        if not ok:
            return _fail({"item": label, "detail": "verdict mismatch"})
    return _ok(corpus_items=len(items))


# ------------------------------------------------------------ registry


def _caps(dim_hi: int | None = None, verts_hi: int | None = None):
    return lambda cfg: cfg.with_caps(dim_hi=dim_hi, verts_hi=verts_hi)


REGISTRY: dict[str, Property] = {
    p.property_id: p
    for p in [
        Property(
            "P-ORACLE",
            "two independent minimal-face routes compared per sampled point",
            _t_oracle, recheck=_r_oracle,
        ),
        Property(
            "P-SANDWICH",
            "chain ri -> icr -> fri -> qri plus four-way equality, expected "
            "in finite dimension",
            _t_sandwich, recheck=_r_sandwich,
        ),
        Property(
            "P-MINF-MONO",
            "vertex-subset hulls give nested sets; minimal faces must nest "
            "pointwise",
            _t_minf_mono,
        ),
        Property(
            "P-SEGMENT",
            "half-open segments from the centroid stay fri at lambda in "
            "{1/4, 1/2, 3/4}",
            _t_segment, recheck=_r_segment,
        ),
        Property(
            "P-IDEMPOTENT",
            "fri set is relatively open: symmetric halving stretches around "
            "each fri sample stay fri",
            _t_idempotent,
        ),
        Property(
            "P-CLOSURE",
            "halving walks from the centroid reach every sampled vertex "
            "through fri points; box corners approached through the open box",
            _t_closure,
        ),
        Property(
            "P-PRODUCT",
            "verdicts on the product equal the factor conjunction",
            _t_product, adjust=_caps(dim_hi=2, verts_hi=5),
        ),
        Property(
            "P-IMAGE",
            "fri flags preserved by an invertible map; one-sided for a "
            "collapsing map",
            _t_image, adjust=_caps(verts_hi=6),
        ),
        Property(
            "P-TRANSLATE",
            "all four flags invariant under translation",
            _t_translate,
        ),
        Property(
            "P-SUM",
            "sums of fri points are fri in the Minkowski sum",
            _t_sum, adjust=_caps(dim_hi=3, verts_hi=4),
        ),
        Property(
            "P-INTERSECT",
            "tested only when a sampled fri witness of both operands exists; "
            "trials without a witness are skipped",
            _t_intersect, adjust=_caps(dim_hi=3, verts_hi=5),
        ),
        Property(
            "P-ICRFRI",
            "subset hulls through the centroid witness the icr-to-fri "
            "implication",
            _t_icrfri, adjust=_caps(verts_hi=6),
        ),
        Property(
            "P-NOTINFRI",
            "witness present iff not fri; each witness re-verified on its "
            "grid by construction",
            _t_notinfri, recheck=_r_notinfri, adjust=_caps(dim_hi=3),
        ),
        Property(
            "P-DECOMPOSE",
            "every sample sits in the relative interior of exactly one face",
            _t_decompose, adjust=_caps(verts_hi=5),
        ),
        Property(
            "P-ICRMINF",
            "each point is icr inside its own minimal face",
            _t_icrminf, recheck=_r_icrminf,
        ),
        Property(
            "P-CLOSPROP",
            "flagged-box chains on a 4^dim grid; closure sandwich and the "
            "fri identity evaluated analytically",
            _t_closprop,
        ),
        Property(
            "P-SEQ-REGRESSION",
            "frozen verdict corpus over the curated sequence models, "
            "independent of the trial budget",
            _t_seq_regression, generative=False,
        ),
    ]
}


def property_ids() -> list[str]:
    return list(REGISTRY)
