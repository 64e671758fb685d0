from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes, graphs
from edgeideal.complex import SimplicialComplex, independence_complex, join, projective_plane
from edgeideal.errors import InputError
from edgeideal.graph import cycle, fold_reduce
from edgeideal.homology import (
    GF2,
    GF3,
    QQ,
    FieldSpec,
    HomologyProfile,
    boundary_matrix,
    euler_characteristic,
    rank,
    reduced_homology,
    torsion_probe,
)

PENTAGON = independence_complex(cycle(5))
TWO_POINTS = SimplicialComplex.from_facets(2, [(0,), (1,)])
FIELDS = (GF2, GF3, FieldSpec(5), QQ)


def dense_rank(M, p):
    """Textbook row reduction over Fractions or Z/p, independent of the library kernels."""
    A = [[Fraction(int(x)) if p is None else int(x) % p for x in row] for row in np.asarray(M).tolist()]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = 1 / A[r][c] if p is None else pow(A[r][c], -1, p)
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
                if p is not None:
                    A[i] = [a % p for a in A[i]]
        r += 1
    return r


def test_field_parsing():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("GF(3)") == GF3
    assert FieldSpec.parse(5) == FieldSpec(5)
    assert str(QQ) == "Q" and str(GF2) == "GF(2)"
    for bad in ("4", "GF(9)", "R"):
        with pytest.raises(InputError):
            FieldSpec.parse(bad)


def test_rank_examples():
    assert all(rank(np.eye(3, dtype=int), k) == 3 for k in FIELDS)
    assert rank([[1, 1], [1, 1]], GF2) == 1
    assert rank([[2, 0], [0, 2]], GF2) == 0
    assert rank([[2, 0], [0, 2]], QQ) == 2


@settings(max_examples=200)
@given(st.integers(1, 6), st.integers(1, 6), st.data(), st.sampled_from([2, 3, 5, 7, None]))
def test_rank_matches_dense_elimination(rows, cols, data, p):
    M = data.draw(st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    assert rank(M, FieldSpec(p)) == dense_rank(M, p)


def test_boundary_matrix_examples():
    tri = SimplicialComplex.simplex(3)
    d1 = boundary_matrix(tri, 1)
    assert d1.shape == (3, 3) and rank(d1, QQ) == 2
    # columns 01, 02, 12; rows 0, 1, 2
    assert d1.tolist() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    three_points = SimplicialComplex.from_facets(3, [(0,), (1,), (2,)])
    assert boundary_matrix(three_points, 0).tolist() == [[1, 1, 1]]
    d1 = boundary_matrix(PENTAGON, 1)
    assert d1.shape == (5, 5) and rank(d1, QQ) == 4


def test_reduced_homology_examples():
    assert reduced_homology(TWO_POINTS).nonzero() == {0: 1}
    assert reduced_homology(PENTAGON, QQ).nonzero() == {1: 1}
    rp2 = projective_plane()
    assert reduced_homology(rp2, GF2).nonzero() == {1: 1, 2: 1}
    assert reduced_homology(rp2, QQ).nonzero() == {}
    assert reduced_homology(rp2, GF3).nonzero() == {}
    assert reduced_homology(SimplicialComplex.empty(0)).nonzero() == {-1: 1}
    assert reduced_homology(SimplicialComplex.void(3)).nonzero() == {}


def test_torsion_probe_examples():
    assert torsion_probe(PENTAGON, [2, 3])
    assert not torsion_probe(projective_plane(), [2, 3])
    assert torsion_probe(SimplicialComplex.simplex(4), [2, 3, 5])
    with pytest.raises(InputError):
        torsion_probe(PENTAGON, [4])
    with pytest.raises(InputError):
        torsion_probe(PENTAGON, [])


def test_profile_json():
    assert HomologyProfile({1: 1, 0: 0}).to_dict() == {"dims": {"0": 0, "1": 1}}
    assert HomologyProfile({1: 1, 0: 0}) == HomologyProfile({1: 1})


@given(complexes(max_n=7))
def test_boundary_of_boundary_is_zero(D):
    for d in range(0, D.dim + 1):
        A, B = boundary_matrix(D, d), boundary_matrix(D, d + 1)
        if A.size and B.size:
            assert not (A @ B).any()


@given(complexes(max_n=7), st.sampled_from(FIELDS))
def test_euler_characteristic(D, k):
    h = reduced_homology(D, k)
    assert sum((-1) ** d * b for d, b in h.dims.items()) == euler_characteristic(D)


@given(complexes(max_n=5), st.sampled_from(FIELDS))
def test_suspension_shifts_homology(D, k):
    shifted = {d + 1: b for d, b in reduced_homology(D, k).nonzero().items()}
    assert reduced_homology(join(D, TWO_POINTS), k).nonzero() == shifted


@settings(max_examples=60)
@given(graphs(max_n=10), st.sampled_from((GF2, GF3, QQ)))
def test_fold_reduction_preserves_homology(G, k):
    H, _ = fold_reduce(G)
    assert reduced_homology(independence_complex(G), k) == reduced_homology(independence_complex(H), k)
