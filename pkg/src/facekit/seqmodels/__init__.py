from .points import SeqPoint, Tail, parse_point, format_point
from .norms import (
    NormBound,
    norm_enclosure,
    l1_enclosure,
    l2_enclosure,
    l2_squared_enclosure,
    compare_l2_squared,
    sqrt_enclosure,
)
from .majorant import (
    MajorantPlan,
    ScheduledSeq,
    default_target,
    majorant_construct,
    majorant_verify,
)
from .models import (
    IN,
    OUT,
    INCONCLUSIVE,
    FaceClass,
    MODELS,
    Verdict,
    get_model,
    sup_ratio_finite,
)
from .gadgets import (
    Claim,
    gadget_claims,
    intersection_gadget_claims,
    nonpartition_claims,
    zalinescu_claims,
)
from .series import SeriesSpec, default_terms, nonemptiness_witness, sigma_hull_demo

__all__ = [
    "SeqPoint",
    "Tail",
    "parse_point",
    "format_point",
    "NormBound",
    "norm_enclosure",
    "l1_enclosure",
    "l2_enclosure",
    "l2_squared_enclosure",
    "compare_l2_squared",
    "sqrt_enclosure",
    "MajorantPlan",
    "ScheduledSeq",
    "default_target",
    "majorant_construct",
    "majorant_verify",
    "IN",
    "OUT",
    "INCONCLUSIVE",
    "FaceClass",
    "MODELS",
    "Verdict",
    "get_model",
    "sup_ratio_finite",
    "Claim",
    "gadget_claims",
    "intersection_gadget_claims",
    "nonpartition_claims",
    "zalinescu_claims",
    "SeriesSpec",
    "default_terms",
    "nonemptiness_witness",
    "sigma_hull_demo",
]
