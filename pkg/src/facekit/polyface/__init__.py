"""Rational V-polytopes: faces, interiors, calculus, and text I/O."""

from .calculus import image, intersect, msum, product, translate
from .faces import (
    DEFAULT_ENUM_BOUND,
    ENUM_BOUND_ENV,
    InteriorVerdict,
    decompose,
    enumerate_faces,
    in_relative_interior_of_face,
    interiors,
    is_face,
    minimal_face,
    minimal_face_oracle,
)
from .io import dumps_polytope, load_polytope, loads_polytope
from .polytope import FaceId, LinMap, VPolytope, contains
from .witness import NotInFriWitness, chebyshev_distance_to_affine, notinfri_witness

__all__ = [
    "VPolytope", "FaceId", "LinMap", "contains",
    "minimal_face", "minimal_face_oracle", "interiors", "InteriorVerdict",
    "is_face", "enumerate_faces", "decompose", "in_relative_interior_of_face",
    "notinfri_witness", "NotInFriWitness", "chebyshev_distance_to_affine",
    "product", "translate", "msum", "image", "intersect",
    "loads_polytope", "load_polytope", "dumps_polytope",
    "DEFAULT_ENUM_BOUND", "ENUM_BOUND_ENV",
]
