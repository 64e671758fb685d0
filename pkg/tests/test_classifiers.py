from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes, graphs
from edgeideal.classifiers import (
    audit_chain,
    dominated_pair_shedding,
    is_cohen_macaulay,
    is_sequentially_acyclic,
    is_sequentially_cm,
    is_shellable,
    is_vertex_decomposable,
    is_vertex_decomposable_graph,
    verify_shelling,
    verify_vd_witness,
)
from edgeideal.complex import SimplicialComplex, independence_complex, projective_plane
from edgeideal.errors import CapExceeded
from edgeideal.generators import random_chordal
from edgeideal.graph import add_ear, complete, cycle, whisker_all
from edgeideal.homology import GF2, GF3, QQ

PENTAGON = independence_complex(cycle(5))
TWO_EDGES = independence_complex(cycle(4))


def test_vertex_decomposable_examples():
    for D in (SimplicialComplex.simplex(4), SimplicialComplex.empty(0), SimplicialComplex.void(2)):
        assert is_vertex_decomposable(D)[0]
    ok, witness = is_vertex_decomposable(PENTAGON)
    assert ok and verify_vd_witness(PENTAGON, witness)
    assert is_vertex_decomposable(TWO_EDGES) == (False, None)


def test_witness_replay_rejects_tampering():
    ok, witness = is_vertex_decomposable(PENTAGON)
    bad = dict(witness, vertex=(witness["vertex"] + 1) % 5)
    assert not verify_vd_witness(PENTAGON, bad)


def test_shellability_examples():
    ok, order = is_shellable(PENTAGON)
    assert ok and verify_shelling(PENTAGON, order)
    cyclic = [[0, 2], [2, 4], [4, 1], [1, 3], [3, 0]]
    assert verify_shelling(PENTAGON, [sorted(F) for F in cyclic])
    assert is_shellable(TWO_EDGES) == (False, None)
    assert is_shellable(SimplicialComplex.simplex(3))[0]


def test_shellability_cap_is_a_refusal():
    many = SimplicialComplex.from_facets(14, [(i,) for i in range(14)])
    with pytest.raises(CapExceeded):
        is_shellable(many)
    assert is_shellable(many, cap=14)[0]


def test_cohen_macaulay_examples():
    for k in (GF2, GF3, QQ):
        assert is_cohen_macaulay(PENTAGON, k)
        assert not is_cohen_macaulay(TWO_EDGES, k)
    assert is_cohen_macaulay(independence_complex(whisker_all(complete(3))), GF2)


def test_projective_plane_is_cm_only_away_from_two():
    rp2 = projective_plane()
    assert not is_cohen_macaulay(rp2, GF2)
    assert is_cohen_macaulay(rp2, QQ) and is_cohen_macaulay(rp2, GF3)


def test_sequential_examples():
    assert is_sequentially_cm(PENTAGON)
    assert not is_sequentially_cm(TWO_EDGES)
    edge_and_point = SimplicialComplex.from_facets(3, [(0, 1), (2,)])
    assert is_sequentially_acyclic(SimplicialComplex.from_facets(2, [(0,), (1,)]))
    assert not is_sequentially_acyclic(SimplicialComplex.from_facets(5, [(0, 1), (2, 3), (4,)]))
    assert is_sequentially_cm(SimplicialComplex.from_facets(3, [(0, 1), (1, 2)]))
    assert is_sequentially_cm(edge_and_point) and is_shellable(edge_and_point)[0]
    assert not is_cohen_macaulay(edge_and_point, GF2)


def test_dominated_pair_examples():
    ear = add_ear(cycle(5), (0, 1))
    u, v = dominated_pair_shedding(ear)
    assert u == 5 or v == 5 or {u, v} <= {0, 1, 5}
    assert dominated_pair_shedding(cycle(5)) is None
    W = whisker_all(cycle(5))
    u, v = dominated_pair_shedding(W)
    assert v == u - 5 or u == v - 5


def test_audit_examples():
    r = audit_chain(PENTAGON, [GF2, QQ])
    assert r.vertex_decomposable and r.shellable and all(r.cm.values()) and all(r.sequentially_cm.values())
    r = audit_chain(TWO_EDGES)
    assert not (r.vertex_decomposable or r.shellable or any(r.cm.values()) or any(r.sequentially_cm.values()))
    assert r.violations == []
    assert set(r.to_dict()) == {"pure", "vertex_decomposable", "shellable", "cm", "sequentially_cm", "violations"}


@settings(max_examples=80)
@given(complexes(max_n=6))
def test_implication_chain_on_random_complexes(D):
    r = audit_chain(D, [GF2, QQ])
    assert r.violations == []
    if r.vertex_decomposable:
        assert verify_vd_witness(D, r.vd_witness)
    if r.shellable:
        assert verify_shelling(D, r.shelling_order)


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_graph_vd_agrees_with_complex_vd(G):
    D = independence_complex(G)
    ok, witness = is_vertex_decomposable_graph(G)
    assert ok == is_vertex_decomposable(D)[0]
    if ok:
        assert verify_vd_witness(D, witness)


@settings(max_examples=40)
@given(st.integers(1, 9), st.randoms(use_true_random=False))
def test_chordal_graphs_give_vertex_decomposable_complexes(n, rng):
    assert is_vertex_decomposable(independence_complex(random_chordal(n, rng)))[0]


@settings(max_examples=40)
@given(graphs(max_n=5))
def test_whiskered_graphs_are_pure_vd_cm(G):
    D = independence_complex(whisker_all(G))
    assert D.is_pure() and is_vertex_decomposable(D)[0]
    assert is_cohen_macaulay(D, GF2) and is_cohen_macaulay(D, GF3)


@pytest.mark.parametrize("r", range(3, 9))
def test_ear_cycles_are_vertex_decomposable(r):
    D = independence_complex(add_ear(cycle(r), (0, 1)))
    assert is_vertex_decomposable(D)[0]
    assert is_sequentially_cm(D, QQ)
