from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distcolor.constructions import circulant, complete, cycle, paw_fig1, path, petersen, theta_graph
from distcolor.graph import (
    INF,
    Graph,
    InputError,
    components,
    degree,
    diameter,
    distance,
    exact_two_degree,
    exact_two_neighborhood,
    girth,
    graph_from_dict,
    graph_to_dict,
    induced_subgraph,
    is_connected,
    load_graph_text,
    mad,
    parse_edge_list,
    two_distance_neighborhood,
)

from corpora import random_items
from oracles import brute_mad, distance_table, nx_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_degree_examples():
    assert degree(cycle(5).graph, 3) == 2
    g, _ = paw_fig1()
    assert degree(g, 1) == 3
    assert degree(Graph(1), 0) == 0


def test_degree_rejects_bad_vertex():
    with pytest.raises(InputError):
        degree(Graph(2), 5)


def test_graph_rejects_loops_and_range():
    with pytest.raises(InputError):
        Graph(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])


def test_girth_examples():
    assert girth(cycle(5).graph) == 5
    assert girth(theta_graph(3)) == 6
    assert girth(path(4)) == INF


def test_distance_examples():
    g, _ = paw_fig1()
    assert distance(g, 2, 2) == 0
    assert distance(g, 0, 2) == 2
    assert distance(Graph(2), 0, 1) == INF


def test_neighborhood_examples():
    c5 = cycle(5).graph
    assert len(two_distance_neighborhood(c5, 0)) == 4
    assert exact_two_neighborhood(c5, 0) == {2, 3}
    p = petersen()
    assert all(len(two_distance_neighborhood(p, v)) == 9 for v in range(10))
    g, _ = paw_fig1()
    assert exact_two_neighborhood(g, 0) == {2, 3}
    assert exact_two_degree(g, 0) == 2


def test_mad_examples():
    assert mad(complete(4)) == 3
    assert mad(circulant(13, (1, 5))) == 4
    for n in range(2, 9):
        assert mad(path(n)) == Fraction(2 * (n - 1), n)


def test_mad_empty_graph_rejected():
    with pytest.raises(InputError):
        mad(Graph(0))


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_neighborhood_identities(g):
    dmax = g.max_degree()
    for v in range(g.n):
        star = two_distance_neighborhood(g, v)
        assert exact_two_neighborhood(g, v) == star - g.adj[v]
        assert len(star) <= g.degree(v) * dmax


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_distance_matches_networkx_and_is_metric(g):
    table = distance_table(g)
    for u in range(g.n):
        for v in range(g.n):
            ref = table[u].get(v, INF)
            assert distance(g, u, v) == ref
            assert distance(g, v, u) == ref
    for u in range(g.n):
        for v in range(g.n):
            for w in range(g.n):
                assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_girth_matches_networkx(g):
    ref = nx.girth(nx_graph(g))
    assert girth(g) == ref
    assert (girth(g) == INF) == nx.is_forest(nx_graph(g))


@given(graphs(max_n=11))
@settings(max_examples=200, deadline=None)
def test_mad_matches_subset_oracle(g):
    if g.n == 0:
        return
    m = mad(g)
    assert m == brute_mad(g.n, g.edges())
    assert m >= Fraction(2 * g.edge_count, g.n)


def test_mad_matches_oracle_on_random_plane_graphs():
    checked = 0
    for item in random_items(300, max_n=16):
        g = item.pg.graph
        if g.n <= 16:
            assert mad(g) == brute_mad(g.n, g.edges()), item.name
            checked += 1
    assert checked >= 50


def test_mad_of_regular_and_edgeless_graphs():
    assert mad(Graph(3)) == 0
    assert mad(petersen()) == 3
    assert mad(cycle(7).graph) == 2


def test_components_and_connectivity():
    g = Graph(5, [(0, 1), (2, 3)])
    assert sorted(map(sorted, components(g))) == [[0, 1], [2, 3], [4]]
    assert not is_connected(g)
    assert is_connected(cycle(4).graph)
    assert diameter(cycle(6).graph) == 3
    assert diameter(g) == INF


def test_induced_subgraph_relabels():
    sub, old = induced_subgraph(cycle(5).graph, [4, 0, 1])
    assert old == [4, 0, 1]
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]


def test_serialization_roundtrip():
    g = theta_graph(3)
    assert graph_from_dict(graph_to_dict(g)) == g
    assert graph_from_dict(load_graph_text("# comment\n0 1\n1 2\n")) == path(3)
    with pytest.raises(InputError):
        parse_edge_list("0 1 2")
    with pytest.raises(InputError):
        load_graph_text("{not json")
