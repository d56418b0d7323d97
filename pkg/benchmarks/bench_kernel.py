"""Benchmark the compiled simplex kernel against the pure-Python one.

Runs an identical seeded workload through both backends, asserts the
results agree bit for bit, and reports wall-clock times with the ratio.

    python3 benchmarks/bench_kernel.py [--seed N] [--instances N]
"""

from __future__ import annotations

import argparse
import time

from facekit.polyface import interiors, minimal_face, minimal_face_oracle
from facekit.proplab import GenConfig, gen_polytope, rng_for, sample_points
from facekit.ratcore import _kernel


def build_workload(seed: int, instances: int):
    cfg = GenConfig(seed=seed)
    work = []
    for t in range(instances):
        rng = rng_for(cfg, "bench", t)
        poly = gen_polytope(cfg, rng)
        pts = sample_points(poly, cfg, rng, combos=2)
        work.append((poly, pts))
    return work


def run_workload(work):
    out = []
    for poly, pts in work:
        for x in pts:
            face = minimal_face(poly, x)
            oracle = minimal_face_oracle(poly, x)
            flags = interiors(poly, x).as_flags()
            out.append((face.indices, oracle.indices, flags))
    return out


def timed(backend: str, work):
    _kernel.set_backend(backend)
    t0 = time.perf_counter()
    result = run_workload(work)
    return result, time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--instances", type=int, default=12)
    ns = ap.parse_args()

    backends = _kernel.available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; nothing to compare")
        return 1

    work = build_workload(ns.seed, ns.instances)
    n_queries = sum(len(pts) for _, pts in work)
    print(f"workload: {ns.instances} polytopes, {n_queries} point queries")

    # warm both paths once so import and cache effects drop out
    timed("python", work[:1])
    timed("compiled", work[:1])

    res_py, t_py = timed("python", work)
    res_cy, t_cy = timed("compiled", work)
    _kernel.set_backend("compiled")

    if res_py != res_cy:
        print("MISMATCH: backends disagree on at least one query")
        return 1

    print(f"pure python : {t_py:8.3f} s")
    print(f"compiled    : {t_cy:8.3f} s")
    print(f"speedup     : {t_py / t_cy:8.2f}x (identical outputs)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
