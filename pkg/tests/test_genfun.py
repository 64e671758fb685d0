from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import forests, graphs
from edgeideal.errors import InputError, InvariantViolation, PreconditionError
from edgeideal.genfun import (
    BettiPolynomial,
    field_independence_probe,
    genfun_forest,
    genfun_oracle,
    reduce_dominated_set,
    reduce_isolated_edge,
    reduce_isolated_vertex,
    reduce_leaf,
    reg_pdim_forest,
)
from edgeideal.graph import complete, complete_bipartite, cycle, disjoint_union, empty_graph, path
from edgeideal.hochster import betti_table_graph, summarize
from edgeideal.homology import GF2, QQ

X = BettiPolynomial.monomial(1, 0)
Y = BettiPolynomial.monomial(0, 1)
ONE = BettiPolynomial.one()


def P(text_terms: dict) -> BettiPolynomial:
    return BettiPolynomial(text_terms)


def test_arithmetic():
    assert (ONE + X * Y) * (ONE + X * Y) == P({(0, 0): 1, (1, 1): 2, (2, 2): 1})
    assert (ONE + Y) ** 3 == P({(0, 0): 1, (0, 1): 3, (0, 2): 3, (0, 3): 1})
    assert X - X == BettiPolynomial()
    assert 3 * X == X * 3 == X + X + X
    assert (ONE + Y) ** 0 == ONE
    with pytest.raises(ValueError):
        Y ** -1


def test_rendering_and_json():
    assert str(P({(0, 0): 1, (1, 1): 2, (1, 2): 1})) == "1 + 2*x*y + x*y^2"
    assert str(BettiPolynomial()) == "0"
    assert str(ONE - X * Y) == "1 - x*y"
    assert str(-X) == "-x"
    assert (ONE + X).to_dict() == {"terms": [{"p": 0, "q": 0, "c": 1}, {"p": 1, "q": 0, "c": 1}]}


def test_table_round_trip():
    T = betti_table_graph(cycle(5))
    assert BettiPolynomial.from_table(T).to_table(5) == T
    with pytest.raises(InvariantViolation):
        (ONE - X).require_nonnegative()


def test_oracle_examples():
    assert genfun_oracle(complete(2)) == ONE + X * Y
    assert str(genfun_oracle(path(3))) == "1 + 2*x*y + x*y^2"
    assert str(genfun_oracle(path(4))) == "1 + 3*x*y + 2*x*y^2"
    assert str(genfun_oracle(cycle(5))) == "1 + 5*x*y + 5*x*y^2 + x^2*y^3"
    assert str(genfun_oracle(complete_bipartite(1, 3))) == "1 + 3*x*y + 3*x*y^2 + x*y^3"
    assert genfun_oracle(empty_graph(3)) == ONE


def test_reduction_examples():
    G = disjoint_union(cycle(5), empty_graph(1))
    assert reduce_isolated_vertex(G, 5) == genfun_oracle(G)
    G = disjoint_union(path(3), complete(2))
    assert reduce_isolated_edge(G, 3, 4) == (ONE + X * Y) * genfun_oracle(path(3))
    # in P3 the end 0 has N(0) = {1} = N(2)
    assert reduce_dominated_set(path(3), 0, [2]) == genfun_oracle(path(3))
    assert reduce_leaf(path(4), 0) == genfun_oracle(path(4))
    assert reduce_leaf(complete_bipartite(1, 3), 1) == genfun_oracle(complete_bipartite(1, 3))


def test_reduction_preconditions():
    with pytest.raises(PreconditionError):
        reduce_isolated_vertex(path(3), 1)
    with pytest.raises(PreconditionError):
        reduce_isolated_edge(path(3), 0, 1)
    with pytest.raises(PreconditionError):
        reduce_dominated_set(path(3), 0, [])
    with pytest.raises(PreconditionError):
        reduce_dominated_set(path(4), 0, [3])
    with pytest.raises(PreconditionError):
        reduce_leaf(cycle(4), 0)
    with pytest.raises(InputError):
        reduce_leaf(path(3), 7)


def test_disjoint_edge_multiplies_by_one_plus_xy():
    for G in (cycle(5), path(4), complete(3)):
        assert genfun_oracle(disjoint_union(G, complete(2))) == (ONE + X * Y) * genfun_oracle(G)


@pytest.mark.parametrize("k", [GF2, QQ], ids=str)
@settings(max_examples=40, deadline=None)
@given(G=graphs(min_n=2, max_n=7), data=st.data())
def test_dominated_set_identity(k, G, data):
    v = data.draw(st.integers(0, G.n - 1))
    cands = [u for u in range(G.n) if u != v and not G.adj[v] & ~G.adj[u]]
    assume(cands)
    U = data.draw(st.lists(st.sampled_from(cands), min_size=1, unique=True))
    def ev(H):
        return genfun_oracle(H, k)
    assert reduce_dominated_set(G, v, U, ev) == ev(G)


@pytest.mark.parametrize("k", [GF2, QQ], ids=str)
@settings(max_examples=40, deadline=None)
@given(G=graphs(min_n=2, max_n=7), data=st.data())
def test_leaf_identity(k, G, data):
    leaves = [v for v in range(G.n) if G.adj[v].bit_count() == 1]
    assume(leaves)
    v = data.draw(st.sampled_from(leaves))
    def ev(H):
        return genfun_oracle(H, k)
    assert reduce_leaf(G, v, ev) == ev(G)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_isolated_vertex_and_edge_identities(G):
    H = disjoint_union(G, empty_graph(1))
    assert reduce_isolated_vertex(H, G.n) == genfun_oracle(G)
    H = disjoint_union(G, complete(2))
    assert reduce_isolated_edge(H, G.n, G.n + 1) == genfun_oracle(H)


@settings(max_examples=60, deadline=None)
@given(forests(max_n=11))
def test_forest_recursion_matches_oracle(F):
    poly = genfun_forest(F)
    assert poly == genfun_forest(F, leaf_rule="last")
    assert poly == genfun_oracle(F) == genfun_oracle(F, QQ)
    assert reg_pdim_forest(F) == (poly.x_degree, poly.y_degree)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_degrees_match_regularity_and_pdim(G):
    T = betti_table_graph(G)
    poly = BettiPolynomial.from_table(T)
    assert (poly.x_degree, poly.y_degree) == (T.reg, T.pdim)
    assert summarize(T).pdim == T.pdim


def test_forest_rejects_cycles():
    with pytest.raises(InputError):
        genfun_forest(cycle(4))
    with pytest.raises(InputError):
        reg_pdim_forest(cycle(3))


@settings(max_examples=20, deadline=None)
@given(forests(max_n=9))
def test_forest_tables_do_not_depend_on_field(F):
    assert field_independence_probe(F, (2, 3))
