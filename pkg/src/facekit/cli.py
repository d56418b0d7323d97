"""Command-line front end.

Four subcommands over the library:

    facekit faces FILE            list the face lattice of a polytope file
    facekit classify FILE POINT   minimal face and interior flags of a point
    facekit models NAME           run a named example model's claim set
    facekit check                 run property suites and emit a JSON report

Exit codes are a stable contract: 0 success or all-pass, 1 property or
claim failure, 2 usage or parse error, 3 resource bound exceeded, 4
domain precondition violated. Identical (command, inputs, seed) always
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import fnmatch
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import polyface as pf
from .errors import (
    FacekitError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .proplab import GenConfig, property_ids, run_all
from .ratcore import RatVec, linalg
from .seqmodels import (
    IN,
    INCONCLUSIVE,
    OUT,
    Claim,
    Verdict,
    get_model,
    intersection_gadget_claims,
    nonemptiness_witness,
    nonpartition_claims,
    parse_point,
    sigma_hull_demo,
    zalinescu_claims,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_DOMAIN = 4


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: exactly one command per run."""

    command: str
    inputs: tuple[str, ...] = ()
    seed: int = 0
    trials: int | None = None
    out: str | None = None
    fmt: str = "text"
    point: str | None = None
    probe: str | None = None
    filter: str | None = None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _err(message: str) -> None:
    sys.stderr.write(f"facekit: {message}\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ------------------------------------------------------------------ faces

def _face_dim(poly: pf.VPolytope, face: pf.FaceId) -> int:
    if not face.indices:
        return -1
    pts = [poly.vertices[i] for i in face.indices]
    rows = [
        [a - b for a, b in zip(p.coords, pts[0].coords)] for p in pts[1:]
    ]
    return linalg.rank(rows) if rows else 0


def _face_set(face: pf.FaceId) -> str:
    return "{" + ",".join(str(i) for i in face.indices) + "}"


def cmd_faces(cfg: CliConfig) -> int:
    try:
        poly = pf.load_polytope(cfg.inputs[0])
    except OSError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_USAGE
    try:
        faces = pf.enumerate_faces(poly)
    except ResourceLimitError as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    rows = sorted(
        ((_face_dim(poly, f), f.indices) for f in faces),
        key=lambda t: (t[0], t[1]),
    )
    if cfg.fmt == "json":
        payload = [{"indices": list(ix), "dim": d} for d, ix in rows]
        _emit(_json_dumps(payload), cfg.out)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["indices", "dim"])
        for d, ix in rows:
            w.writerow([" ".join(str(i) for i in ix), d])
        _emit(buf.getvalue(), cfg.out)
    else:
        lines = [
            f"{_face_set(pf.FaceId(ix))} dim {d}" for d, ix in rows
        ]
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


# --------------------------------------------------------------- classify

def _parse_cli_point(text: str, dim: int) -> RatVec:
    tokens = text.split()
    if len(tokens) != dim:
        raise ParseError(f"expected {dim} coordinates, found {len(tokens)}")
    coords: list[Fraction] = []
    for tok in tokens:
        try:
            coords.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {tok!r}") from None
    return RatVec.of(coords)


def cmd_classify(cfg: CliConfig) -> int:
    try:
        poly = pf.load_polytope(cfg.inputs[0])
        x = _parse_cli_point(cfg.point or "", poly.dim)
    except OSError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_USAGE
    if not pf.contains(poly, x):
        _err("point lies outside the polytope")
        return EXIT_DOMAIN
    face = pf.minimal_face(poly, x)
    ri, icr, fri, qri = pf.interiors(poly, x).as_flags()
    if cfg.fmt == "json":
        payload = {
            "face": list(face.indices),
            "ri": ri,
            "icr": icr,
            "fri": fri,
            "qri": qri,
        }
        _emit(_json_dumps(payload), cfg.out)
    else:
        flags = f"ri={ri:d} icr={icr:d} fri={fri:d} qri={qri:d}"
        _emit(f"face {_face_set(face)}; {flags}\n", cfg.out)
    return EXIT_OK


# ----------------------------------------------------------------- models

def _expect(text: str, verdict: Verdict, want: str) -> Claim:
    if verdict.value == want:
        return Claim(text, "Pass", verdict.certificate)
    return Claim(
        text,
        "Fail",
        f"expected {want}, got {verdict.value}: {verdict.certificate}",
    )


def _witness_claim(model_name: str) -> Claim:
    _, rep = nonemptiness_witness(model_name)
    cert = (
        f"{rep['label']}, prefix {rep['prefix']}, "
        f"{len(rep['checks'])} checks"
    )
    return Claim(
        "a weighted prefix average witnesses nonemptiness",
        rep["status"],
        cert,
    )


def _claims_posball2() -> list[Claim]:
    m = get_model("posball2")
    fast = parse_point("tail geometric 1/2,1/2")
    zero = parse_point("head 2=1/2")
    unit = parse_point("tail geometric 4/3,3/5")
    claims = [
        _expect(
            "a positive fast-decay point is in the face relative interior",
            m.fri_member(fast), IN,
        ),
        _expect(
            "a zero coordinate excludes the point from the face "
            "relative interior",
            m.fri_member(zero), OUT,
        ),
        _expect(
            "a unit-norm point is outside the face relative interior",
            m.fri_member(unit), OUT,
        ),
    ]
    for label, p in (("fast-decay", fast), ("zero-coordinate", zero),
                     ("unit-norm", unit)):
        claims.append(
            _expect(
                f"the inner core excludes the {label} point",
                m.icr_member(p), OUT,
            )
        )
    claims.append(_witness_claim("posball2"))
    return claims


def _claims_l1ball() -> list[Claim]:
    m = get_model("l1ball")
    inner = parse_point("head 1=1/2")
    corner = parse_point("head 1=1")
    round_ = parse_point("tail geometric 1,1/2")
    return [
        _expect(
            "an open-ball point is in the face relative interior",
            m.fri_member(inner), IN,
        ),
        _expect(
            "the inner core agrees at the open-ball point",
            m.icr_member(inner), IN,
        ),
        _expect(
            "a finite-support unit-norm point is outside the quasi "
            "relative interior",
            m.qri_member(corner), OUT,
        ),
        _expect(
            "an infinite-support unit-norm point is outside the face "
            "relative interior",
            m.fri_member(round_), OUT,
        ),
        _expect(
            "the same point is inside the quasi relative interior",
            m.qri_member(round_), IN,
        ),
        _witness_claim("l1ball"),
    ]


def _claims_convl1() -> list[Claim]:
    m = get_model("convl1")
    mid = parse_point("tail harmonic 1/2")
    base = parse_point("head 1=3")
    return [
        _expect(
            "a midrange coefficient point is a member", m.member(mid), IN,
        ),
        _expect(
            "the face relative interior covers the half-open "
            "coefficient range",
            m.fri_member(base), IN,
        ),
        _expect(
            "the inner core refuses the base point",
            m.icr_member(base), OUT,
        ),
        _expect(
            "the apex is outside the face relative interior",
            m.fri_member(m.u), OUT,
        ),
        _expect(
            "the apex quasi relative interior test stays inconclusive",
            m.qri_member(m.u), INCONCLUSIVE,
        ),
        _expect(
            "a coefficient above one is not a member",
            m.member(parse_point("tail harmonic 2")), OUT,
        ),
    ]


def _claims_sigma() -> list[Claim]:
    rep = sigma_hull_demo()
    return [
        Claim(c["check"], c["verdict"], c["certificate"])
        for c in rep["checks"]
    ]


# model name -> (claim builder, model to answer --probe queries)
CLI_MODELS = {
    "posball2": (_claims_posball2, "posball2"),
    "l1ball": (_claims_l1ball, "l1ball"),
    "convl1": (_claims_convl1, "convl1"),
    "sigma-hull": (_claims_sigma, None),
    "zalinescu": (zalinescu_claims, "zalsum"),
    "intersection-gadget": (intersection_gadget_claims, "gadget-cd"),
    "nonpartition": (nonpartition_claims, "l1ball"),
}


def cmd_models(cfg: CliConfig) -> int:
    name = cfg.inputs[0]
    builder, probe_model = CLI_MODELS[name]
    if cfg.probe is not None:
        if probe_model is None:
            _err(f"model {name!r} does not support point probes")
            return EXIT_USAGE
        try:
            p = parse_point(cfg.probe)
        except ParseError as exc:
            _err(f"parse error: {exc}")
            return EXIT_USAGE
        model = get_model(probe_model)
        records = []
        for notion in ("member", "fri_member", "icr_member", "qri_member"):
            fn = getattr(model, notion, None)
            if fn is None:
                continue
            v = fn(p)
            records.append(
                {
                    "claim": f"{notion}({cfg.probe})",
                    "verdict": v.value,
                    "certificate": v.certificate,
                }
            )
        _emit(_json_dumps(records), cfg.out)
        return EXIT_OK
    claims = builder()
    _emit(_json_dumps([c.to_dict() for c in claims]), cfg.out)
    ok = all(c.verdict == "Pass" for c in claims)
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------ check

def cmd_check(cfg: CliConfig) -> int:
    ids = property_ids()
    if cfg.filter is None:
        selected = list(ids)
    elif any(ch in cfg.filter for ch in "*?["):
        selected = [i for i in ids if fnmatch.fnmatchcase(i, cfg.filter)]
    else:
        if cfg.filter not in ids:
            _err(f"unknown property {cfg.filter!r}")
            return EXIT_USAGE
        selected = [cfg.filter]
    gen = GenConfig(
        seed=cfg.seed,
        trials=cfg.trials if cfg.trials is not None else 200,
    )
    reports = run_all(gen, ids=selected)
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["property_id", "status", "trials", "seed", "notes"])
        for r in reports:
            w.writerow([r.property_id, r.status, r.trials, r.seed, r.notes])
        _emit(buf.getvalue(), cfg.out)
    else:
        _emit(_json_dumps([r.to_dict() for r in reports]), cfg.out)
    ok = all(r.status == "Pass" for r in reports)
    return EXIT_OK if ok or not reports else EXIT_FAIL


# ------------------------------------------------------------------ entry

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="facekit",
        description="Exact queries on faces and relative interiors.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_faces = sub.add_parser("faces", help="list the face lattice")
    p_faces.add_argument("file")
    p_faces.add_argument(
        "--format", choices=["text", "json", "csv"], default="text"
    )
    p_faces.add_argument("--out")

    p_cls = sub.add_parser("classify", help="minimal face and flags")
    p_cls.add_argument("file")
    p_cls.add_argument("point", help='rational coordinates, e.g. "1/2 0"')
    p_cls.add_argument("--format", choices=["text", "json"], default="text")
    p_cls.add_argument("--out")

    p_mod = sub.add_parser("models", help="run an example model")
    p_mod.add_argument("name", choices=sorted(CLI_MODELS))
    p_mod.add_argument(
        "--probe",
        help='point in sequence syntax, e.g. "head 1=1/2 tail harmonic 1/4"',
    )
    p_mod.add_argument("--out")

    p_chk = sub.add_parser("check", help="run property suites")
    p_chk.add_argument("--filter", help="property id or glob pattern")
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.add_argument("--trials", type=int)
    p_chk.add_argument("--format", choices=["json", "csv"], default="json")
    p_chk.add_argument("--out")

    return ap


def _to_config(ns: argparse.Namespace) -> CliConfig:
    inputs: tuple[str, ...] = ()
    if ns.command in ("faces", "classify"):
        inputs = (ns.file,)
    elif ns.command == "models":
        inputs = (ns.name,)
    return CliConfig(
        command=ns.command,
        inputs=inputs,
        seed=getattr(ns, "seed", 0),
        trials=getattr(ns, "trials", None),
        out=ns.out,
        fmt=getattr(ns, "format", "json" if ns.command == "models" else "text"),
        point=getattr(ns, "point", None),
        probe=getattr(ns, "probe", None),
        filter=getattr(ns, "filter", None),
    )


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    cfg = _to_config(ns)
    handlers = {
        "faces": cmd_faces,
        "classify": cmd_classify,
        "models": cmd_models,
        "check": cmd_check,
    }
    try:
        return handlers[cfg.command](cfg)
    except ResourceLimitError as exc:
        _err(str(exc))
        return EXIT_RESOURCE
    except PreconditionError as exc:
        _err(str(exc))
        return EXIT_DOMAIN
    except FacekitError as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
