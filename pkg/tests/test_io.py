from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from edgeideal.acceptance import small_graph_corpus
from edgeideal.errors import InputError
from edgeideal.graph import Graph, add_ear, cycle, ferrers_graph, grid_subgraph, lattice_points, whisker, whisker_all
from edgeideal.io import (
    from_edge_list,
    from_graph6,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    parse_spec,
    to_edge_list,
    to_graph6,
)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(G):
    ng = nx.Graph()
    ng.add_nodes_from(range(G.n))
    ng.add_edges_from(G.edges)
    ours = to_graph6(G)
    assert ours == nx.to_graph6_bytes(ng, header=False).decode().strip()
    assert from_graph6(ours) == G


def test_graph6_large_n_header():
    G = Graph.from_edges(70, [(0, 69), (5, 6)])
    assert from_graph6(to_graph6(G)) == G


def test_graph6_rejects_garbage():
    with pytest.raises(InputError):
        from_graph6("")
    with pytest.raises(InputError):
        from_graph6("D\x7f")


@given(graphs(max_n=9))
def test_edge_list_round_trip_is_byte_stable(G):
    text = to_edge_list(G)
    assert to_edge_list(from_edge_list(text)) == text
    assert from_edge_list(text) == G


def test_edge_list_normalizes_input():
    G = from_edge_list("3 2\n2 1\n0 1\n")
    assert to_edge_list(G) == "3 2\n0 1\n1 2\n"
    with pytest.raises(InputError):
        from_edge_list("3 2\n0 1\n")


def test_json_round_trip_keeps_labels():
    G = grid_subgraph([(0, 0), (1, 0), (1, 1)])
    d = json.loads(json.dumps(graph_to_dict(G)))
    H = graph_from_dict(d)
    assert H == G and H.labels == G.labels
    assert lattice_points(H) == [(0, 0), (1, 0), (1, 1)]


def test_specs():
    assert parse_spec("ferrers:3,2,1").m == 6
    assert parse_spec("ferrers:3,2,1").n == 6
    W = parse_spec("whisker:cycle:5")
    assert W == whisker_all(cycle(5)) and (W.n, W.m) == (10, 10)
    assert parse_spec("whisker:cycle:5:0,2") == whisker(cycle(5), [0, 2])
    assert parse_spec("ear:cycle:4:0-1") == add_ear(cycle(4), (0, 1))
    assert parse_spec("union:cycle:3+path:2").n == 5
    assert parse_spec("kbipartite:2,3").m == 6
    assert lattice_points(parse_spec("grid:0,0;0,1;1,1")) is not None
    for bad in ("cycle:2", "nonsense:3", "ear:cycle:4:0-2", "grid:0,0,1"):
        with pytest.raises(InputError):
            parse_spec(bad)


def test_load_graph_by_suffix(tmp_path):
    G = ferrers_graph([3, 1])
    (tmp_path / "g.g6").write_text(to_graph6(G) + "\n")
    (tmp_path / "g.json").write_text(json.dumps(graph_to_dict(G)))
    (tmp_path / "g.txt").write_text(to_edge_list(G))
    for name in ("g.g6", "g.json", "g.txt"):
        assert load_graph(str(tmp_path / name)) == G
    assert load_graph("ferrers:3,1") == G


def test_corpus_is_every_small_graph_up_to_isomorphism():
    corpus = small_graph_corpus()
    counts = [sum(G.n == n for G in corpus) for n in range(1, 8)]
    assert counts == [1, 2, 4, 11, 34, 156, 1044]
