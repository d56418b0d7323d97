"""Face machinery tests.

The two minimal-face routes (lineality route and segment-membership
route) are algorithmically unrelated; their agreement over a seeded
random corpus is the core oracle here. Frozen face counts come from
hand-enumerable polytopes.
"""

from fractions import Fraction as F
from random import Random

import pytest

from facekit.errors import PreconditionError, ResourceLimitError
from facekit.polyface import (
    FaceId,
    VPolytope,
    contains,
    decompose,
    enumerate_faces,
    in_relative_interior_of_face,
    interiors,
    is_face,
    minimal_face,
    minimal_face_oracle,
    notinfri_witness,
)
from facekit.polyface.witness import chebyshev_distance_to_affine
from facekit.ratcore import RatVec, affine_hull

SQUARE = VPolytope.hull(2, [[0, 0], [1, 0], [0, 1], [1, 1]])
TRIANGLE = VPolytope.hull(2, [[0, 0], [1, 0], [0, 1]])
CUBE = VPolytope.hull(3, [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)])


def random_polytope(rng: Random, dim: int, max_verts: int = 8) -> VPolytope:
    n = rng.randint(dim + 1, max_verts)
    pts = [
        [F(rng.randint(-8, 8), rng.randint(1, 6)) for _ in range(dim)]
        for _ in range(n)
    ]
    return VPolytope.hull(dim, pts)


def sample_in(rng: Random, poly: VPolytope) -> RatVec:
    weights = [F(rng.randint(0, 6)) for _ in poly.vertices]
    if sum(weights) == 0:
        weights[rng.randrange(len(weights))] = F(1)
    total = sum(weights)
    acc = RatVec.zero(poly.dim)
    for w, v in zip(weights, poly.vertices):
        acc = acc + v.scale(w / total)
    return acc


# ------------------------------------------------------------ minimal face


def test_minimal_face_known_points():
    assert minimal_face(SQUARE, RatVec.of(["1/2", "0"])).indices == (0, 2)
    assert minimal_face(SQUARE, RatVec.of([0, 0])).indices == (0,)
    assert minimal_face(SQUARE, SQUARE.centroid()).indices == (0, 1, 2, 3)


def test_minimal_face_requires_membership():
    with pytest.raises(PreconditionError):
        minimal_face(SQUARE, RatVec.of([2, 2]))
    with pytest.raises(PreconditionError):
        minimal_face_oracle(SQUARE, RatVec.of([2, 2]))


def test_minimal_face_routes_agree_on_seeded_corpus():
    rng = Random(424242)
    for _ in range(40):
        dim = rng.choice([2, 2, 3])
        poly = random_polytope(rng, dim)
        pts = [sample_in(rng, poly) for _ in range(3)]
        pts += list(poly.vertices[:2])
        for x in pts:
            a = minimal_face(poly, x)
            b = minimal_face_oracle(poly, x)
            assert a == b, f"{poly} at {x}"


def test_minimal_face_single_point_polytope():
    pt = VPolytope.hull(2, [[3, 4]])
    x = RatVec.of([3, 4])
    assert minimal_face(pt, x).indices == (0,)
    assert minimal_face_oracle(pt, x).indices == (0,)
    flags = interiors(pt, x)
    assert flags.as_flags() == (True, True, True, True)


# --------------------------------------------------------------- interiors


def test_interiors_vertex_and_edge_and_center():
    on_vertex = interiors(SQUARE, RatVec.of([1, 1]))
    assert on_vertex.as_flags() == (False, False, False, False)
    edge_mid = interiors(SQUARE, RatVec.of(["1/2", "0"]))
    assert edge_mid.as_flags() == (False, False, False, False)
    center = interiors(SQUARE, SQUARE.centroid())
    assert center.as_flags() == (True, True, True, True)


def test_interiors_on_lower_dimensional_polytope():
    seg = VPolytope.hull(2, [[0, 0], [2, 2]])
    assert interiors(seg, RatVec.of([1, 1])).as_flags() == (True,) * 4
    assert interiors(seg, RatVec.of([2, 2])).as_flags() == (False,) * 4


def test_interiors_coincide_and_chain_on_seeded_corpus():
    rng = Random(7321)
    for _ in range(30):
        poly = random_polytope(rng, rng.choice([2, 3]))
        for x in [poly.centroid(), sample_in(rng, poly), poly.vertices[0]]:
            flags = interiors(poly, x)
            assert flags.chain_ok
            # Finite dimension: all four notions agree.
            assert len(set(flags.as_flags())) == 1


# ----------------------------------------------------------------- is_face


def test_is_face_edges_and_diagonal():
    assert is_face(SQUARE, FaceId.of([0, 1]))
    assert is_face(SQUARE, FaceId.of([0, 2]))
    assert not is_face(SQUARE, FaceId.of([0, 3]))  # diagonal
    assert is_face(SQUARE, FaceId.of([]))
    assert is_face(SQUARE, FaceId.of([0, 1, 2, 3]))
    with pytest.raises(PreconditionError):
        is_face(SQUARE, FaceId.of([7]))


# ---------------------------------------------------------- enumerate_faces


def test_enumerate_counts_frozen():
    sq_faces = enumerate_faces(SQUARE)
    assert len(sq_faces) == 10
    assert sq_faces[0] == FaceId.of([])
    assert sq_faces[-1] == FaceId.of([0, 1, 2, 3])
    assert len(enumerate_faces(TRIANGLE)) == 8
    # 8 vertices + 12 edges + 6 facets + empty + full
    assert len(enumerate_faces(CUBE)) == 28


def test_enumerate_sorted_by_cardinality_then_lex():
    faces = enumerate_faces(SQUARE)
    keys = [(len(f.indices), f.indices) for f in faces]
    assert keys == sorted(keys)


def test_enumerate_bound_and_env(monkeypatch):
    with pytest.raises(ResourceLimitError):
        enumerate_faces(SQUARE, bound=3)
    monkeypatch.setenv("FACEKIT_ENUM_BOUND", "3")
    with pytest.raises(ResourceLimitError):
        enumerate_faces(SQUARE)
    monkeypatch.setenv("FACEKIT_ENUM_BOUND", "12")
    assert len(enumerate_faces(SQUARE)) == 10


# --------------------------------------------------------------- decompose


def test_decompose_square_named_points():
    samples = [
        RatVec.of(["1/2", "1/2"]),
        RatVec.of(["1/2", "0"]),
        RatVec.of([0, 0]),
    ]
    out = decompose(SQUARE, samples)
    assert out[samples[0]] == FaceId.of([0, 1, 2, 3])
    assert out[samples[1]] == FaceId.of([0, 2])
    assert out[samples[2]] == FaceId.of([0])


def test_decompose_partition_on_seeded_corpus():
    rng = Random(99991)
    for _ in range(10):
        poly = random_polytope(rng, 2, max_verts=6)
        samples = [poly.centroid()] + [sample_in(rng, poly) for _ in range(4)]
        samples += list(poly.vertices[:2])
        out = decompose(poly, samples)
        for x, fid in out.items():
            assert in_relative_interior_of_face(poly, fid, x)


# ----------------------------------------------------------------- witness


def test_witness_matches_pinned_example():
    w = notinfri_witness(SQUARE, RatVec.of(["1/2", "0"]))
    assert w.y == RatVec.of([0, 1])
    assert w.r == F(1, 2)
    assert w.grid_checked >= 1


def test_witness_absent_iff_fri():
    rng = Random(31337)
    for _ in range(15):
        poly = random_polytope(rng, 2, max_verts=6)
        for x in [poly.centroid(), sample_in(rng, poly), poly.vertices[0]]:
            flags = interiors(poly, x)
            w = notinfri_witness(poly, x)
            assert (w is None) == flags.fri


def test_chebyshev_distance_pinned():
    # Distance from (0,1) to the x-axis in the l-inf norm is 1.
    base, basis = affine_hull([RatVec.of([0, 0]), RatVec.of([1, 0])])
    assert chebyshev_distance_to_affine(RatVec.of([0, 1]), base, basis) == 1
    # Distance from origin to the line x + y = 2 is 1 (reached at (1,1)).
    base2, basis2 = affine_hull([RatVec.of([2, 0]), RatVec.of([0, 2])])
    assert chebyshev_distance_to_affine(RatVec.of([0, 0]), base2, basis2) == 1


def test_contains_boundary_and_outside():
    assert contains(SQUARE, RatVec.of([0, "1/3"]))
    assert not contains(SQUARE, RatVec.of([0, "4/3"]))
