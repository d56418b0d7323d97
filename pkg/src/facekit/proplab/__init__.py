"""Seeded property harness over the polytope and sequence layers."""

from .boxes import FlaggedBox, box_interiors
from .gen import GenConfig, gen_polytope, rng_for, sample_points, sub_seed
from .harness import (
    PropertyReport,
    all_pass,
    reports_to_json,
    run_all,
    run_property,
)
from .props import REGISTRY, property_ids

__all__ = [
    "FlaggedBox", "box_interiors",
    "GenConfig", "gen_polytope", "sample_points", "sub_seed", "rng_for",
    "PropertyReport", "run_property", "run_all", "reports_to_json",
    "all_pass", "REGISTRY", "property_ids",
]
