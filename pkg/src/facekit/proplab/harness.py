"""Suite runner: executes property trials, minimizes failures, reports.

Reports are plain dicts with rationals as 'p/q' strings, dumped with
sorted keys, so a rerun with the same seed produces byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import PreconditionError
from .gen import GenConfig
from .props import REGISTRY, Property, property_ids

MAX_REDUCTION_STEPS = 100


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    status: str  # Pass | Fail | Inconclusive
    trials: int
    seed: int
    counterexample: dict | None
    notes: str

    def to_dict(self) -> dict:
        out = {
            "property_id": self.property_id,
            "status": self.status,
            "trials": self.trials,
            "seed": self.seed,
            "notes": self.notes,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _minimize(cex: dict, prop: Property) -> dict:
    """Greedy bounded shrink: drop vertices while the failure persists."""
    if prop.recheck is None or "polytope" not in cex or "point" not in cex:
        return cex
    cur = dict(cex)
    steps = 0
    while steps < MAX_REDUCTION_STEPS:
        verts = cur["polytope"]["vertices"]
        if len(verts) <= 2:
            break
        reduced = False
        for i in range(len(verts)):
            cand = dict(cur)
            cand["polytope"] = {
                "dim": cur["polytope"]["dim"],
                "vertices": verts[:i] + verts[i + 1:],
            }
            try:
                still_fails = prop.recheck(cand)
            except Exception:
                continue
            if still_fails:
                cur = cand
                steps += 1
                reduced = True
                break
        if not reduced:
            break
    if steps:
        cur["reduction_steps"] = steps
    return cur


def _merge_stats(agg: dict, stats: dict) -> None:
    for k, v in stats.items():
        if isinstance(v, int):
            agg[k] = agg.get(k, 0) + v


def run_property(property_id: str, cfg: GenConfig) -> PropertyReport:
    prop = REGISTRY.get(property_id)
    if prop is None:
        raise PreconditionError(f"unknown property {property_id!r}")
    eff = prop.adjust(cfg) if prop.adjust else cfg
    budget = eff.trials if prop.generative else 1
    passes = 0
    skips = 0
    agg: dict[str, int] = {}
    for t in range(budget):
        res = prop.trial(eff, t)
        _merge_stats(agg, res.stats)
        if res.status == "fail":
            cex = _minimize(dict(res.counterexample), prop)
            cex["property_id"] = property_id
            cex["seed"] = cfg.seed
            cex["trial"] = t
            return PropertyReport(
                property_id, "Fail", t + 1, cfg.seed, cex,
                f"failed at trial {t}; {prop.note}",
            )
        if res.status == "skip":
            skips += 1
        else:
            passes += 1
    status = "Pass" if passes > 0 else "Inconclusive"
    counters = "".join(f" {k}={v}" for k, v in sorted(agg.items()))
    notes = (
        f"{prop.note}; trials={budget} pass={passes} skip={skips}{counters}"
    )
    return PropertyReport(property_id, status, budget, cfg.seed, None, notes)


def run_all(cfg: GenConfig, ids: list[str] | None = None) -> list[PropertyReport]:
    """Run suites in registry order; an explicit empty id list runs nothing."""
    chosen = property_ids() if ids is None else list(ids)
    for pid in chosen:
        if pid not in REGISTRY:
            raise PreconditionError(f"unknown property {pid!r}")
    return [run_property(pid, cfg) for pid in chosen]


def reports_to_json(reports: list[PropertyReport]) -> str:
    return json.dumps(
        [r.to_dict() for r in reports], sort_keys=True, indent=2
    ) + "\n"


def all_pass(reports: list[PropertyReport]) -> bool:
    return all(r.status == "Pass" for r in reports)
