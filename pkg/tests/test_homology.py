from __future__ import annotations

import random

import numpy as np
import pytest

from edgeideals.homology import (
    SimplicialComplex,
    boundary_rank,
    homology_ranks,
    rank_mod_p,
    rank_rational,
    reduced_euler_characteristic,
)

_SEED = 77141

# minimal 6-vertex triangulation of the real projective plane
_RP2 = [
    (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def test_complex_basics():
    c = SimplicialComplex.from_faces([(1, 2), (2, 3), (3,), ()])
    assert c.maximal_faces == (frozenset({1, 2}), frozenset({2, 3}))
    assert c.vertices == (1, 2, 3)
    assert c.dimension == 1
    assert c.contains_face((2,)) and not c.contains_face((1, 3))
    assert c.faces(0) == [(1,), (2,), (3,)]
    assert c.faces(-1) == [()]
    assert c.f_vector() == [1, 3, 2]

    void = SimplicialComplex.void()
    assert void.is_void and not void.is_irrelevant
    assert void.f_vector() == []
    with pytest.raises(ValueError):
        void.dimension

    point = SimplicialComplex.irrelevant()
    assert point.is_irrelevant and not point.is_void
    assert point.dimension == -1


def test_cone_detection():
    assert SimplicialComplex.from_faces([(1, 2, 3)]).is_cone
    assert SimplicialComplex.from_faces([(1, 2), (1, 3)]).is_cone
    assert not SimplicialComplex.from_faces([(1, 2), (3,)]).is_cone
    hollow = SimplicialComplex.from_faces([(1, 2), (2, 3), (1, 3)])
    assert not hollow.is_cone
    assert not SimplicialComplex.void().is_cone
    assert not SimplicialComplex.irrelevant().is_cone


def test_restrict():
    c = SimplicialComplex.from_faces(_RP2)
    sub = c.restrict((1, 2, 3))
    assert sub.maximal_faces == (frozenset({1, 2, 3}),)
    assert c.restrict(()).is_irrelevant


def test_homology_classic_spaces():
    hollow = SimplicialComplex.from_faces([(1, 2), (2, 3), (1, 3)])
    assert homology_ranks(hollow) == {-1: 0, 0: 0, 1: 1}

    two_points = SimplicialComplex.from_faces([(1,), (2,)])
    assert homology_ranks(two_points) == {-1: 0, 0: 1}

    simplex = SimplicialComplex.from_faces([(1, 2, 3, 4)])
    assert all(r == 0 for r in homology_ranks(simplex).values())

    sphere = SimplicialComplex.from_faces(
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    )
    assert homology_ranks(sphere) == {-1: 0, 0: 0, 1: 0, 2: 1}

    assert homology_ranks(SimplicialComplex.irrelevant()) == {-1: 1}
    assert homology_ranks(SimplicialComplex.void()) == {}

    # hollow triangle plus two isolated vertices
    mixed = SimplicialComplex.from_faces([(1, 2), (2, 3), (1, 3), (7,), (8,)])
    assert homology_ranks(mixed) == {-1: 0, 0: 2, 1: 1}


def test_projective_plane_torsion():
    rp2 = SimplicialComplex.from_faces(_RP2)
    assert homology_ranks(rp2, field="rational") == {-1: 0, 0: 0, 1: 0, 2: 0}
    # mod 2 the top class and the 1-cycle appear
    assert homology_ranks(rp2, field="prime", prime=2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    # a large prime behaves like characteristic zero here
    assert homology_ranks(rp2, field="prime", prime=32003) == homology_ranks(rp2)


def _random_complex(rng: random.Random) -> SimplicialComplex:
    n = rng.randint(1, 6)
    faces = []
    for _ in range(rng.randint(1, 8)):
        size = rng.randint(1, min(4, n))
        faces.append(tuple(rng.sample(range(1, n + 1), size)))
    return SimplicialComplex.from_faces(faces)


def test_euler_characteristic_matches_homology():
    rng = random.Random(_SEED)
    for _ in range(40):
        c = _random_complex(rng)
        ranks = homology_ranks(c)
        alt = sum(r if d % 2 == 0 else -r for d, r in ranks.items())
        assert reduced_euler_characteristic(c) == alt


def test_rank_engines_match_numpy():
    rng = random.Random(_SEED + 1)
    for _ in range(60):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        dense = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        want = int(np.linalg.matrix_rank(np.array(dense, dtype=float)))
        assert rank_rational(rows) == want
        assert rank_mod_p(rows, 32003) == want


def test_rank_sparse_wide():
    rng = random.Random(_SEED + 2)
    rows = []
    dense = np.zeros((30, 40))
    for i in range(30):
        row = {}
        for _ in range(4):
            j = rng.randrange(40)
            v = rng.choice([-2, -1, 1, 2, 3])
            row[j] = row.get(j, 0) + v
        row = {j: v for j, v in row.items() if v}
        rows.append(row)
        for j, v in row.items():
            dense[i, j] = v
    want = int(np.linalg.matrix_rank(dense))
    assert rank_rational(rows) == want
    assert rank_mod_p(rows, 32003) == want


def test_boundary_rank_empty_edges():
    assert boundary_rank([], [(1, 2)]) == 0
    assert boundary_rank([(1,), (2,)], []) == 0
    # single edge boundary has rank 1
    assert boundary_rank([(1,), (2,)], [(1, 2)]) == 1
