import itertools

import networkx as nx
import pytest

from distcolor.conflict import ColoringKind, conflict_graph
from distcolor.constructions import (
    circulant,
    cycle,
    delete_vertex,
    dodecahedron,
    grid,
    incidence_graph_pg,
    petersen,
    projective_points,
    search_diameter2_witness,
    theta_graph,
    theta_plane,
    verify_diameter2_extremal,
)
from distcolor.graph import InputError, diameter, girth, mad
from distcolor.solver import chromatic_number

from oracles import nx_graph

TD, INJ, EX = ColoringKind.TWO_DISTANCE, ColoringKind.INJECTIVE, ColoringKind.EXACT_SQUARE


def test_heawood():
    g = incidence_graph_pg(2)
    assert g.n == 14 and {g.degree(v) for v in range(14)} == {3} and girth(g) == 6


def test_ig3_shape():
    g = incidence_graph_pg(3)
    assert g.n == 26 and {g.degree(v) for v in range(26)} == {4}
    assert nx.is_bipartite(nx_graph(g))
    assert girth(g) == 6


@pytest.mark.parametrize("q", [2, 3])
def test_projective_axioms(q):
    g = incidence_graph_pg(q)
    n = q * q + q + 1
    assert len(projective_points(q)) == n
    for a, b in itertools.combinations(range(n), 2):
        assert len(g.adj[a] & g.adj[b]) == 1
    for a, b in itertools.combinations(range(n, 2 * n), 2):
        assert len(g.adj[a] & g.adj[b]) == 1


def test_non_prime_rejected():
    with pytest.raises(InputError):
        incidence_graph_pg(4)


def test_ig_conflicts_coincide():
    g = incidence_graph_pg(2)
    assert set(conflict_graph(g, INJ).edges()) == set(conflict_graph(g, EX).edges())
    assert chromatic_number(conflict_graph(g, INJ)) == 7


def test_theta_graph():
    g3 = theta_graph(3)
    assert girth(g3) == 6
    assert chromatic_number(conflict_graph(g3, INJ)) == 4
    g4 = theta_graph(4)
    assert g4.max_degree() == 4
    assert chromatic_number(conflict_graph(g4, INJ)) == 5
    plane = theta_plane(4)
    assert sorted(f.size for f in plane.faces) == [6] * 4


@pytest.mark.parametrize("delta", [3, 4, 5])
def test_theta_injective_clique(delta):
    g = theta_graph(delta)
    cg = conflict_graph(g, INJ)
    clique = [2 + 2 * i for i in range(delta)] + [1]
    for a, b in itertools.combinations(clique, 2):
        assert cg.has_edge(a, b)


def test_delete_vertex():
    p4 = delete_vertex(cycle(5).graph, 2)
    assert nx.is_isomorphic(nx_graph(p4), nx.path_graph(4))
    g = incidence_graph_pg(3)
    assert mad(delete_vertex(g, 0)) < 4


def test_petersen_and_friends():
    p = petersen()
    assert nx.is_isomorphic(nx_graph(p), nx.petersen_graph())
    assert chromatic_number(conflict_graph(p, TD)) == 10
    g = grid(3, 3).graph
    assert g.max_degree() == 4 and girth(g) == 4
    d = dodecahedron().graph
    assert {d.degree(v) for v in range(d.n)} == {3} and girth(d) == 5


def test_extremal_verifier():
    c13 = circulant(13, (1, 5))
    rep = verify_diameter2_extremal(c13)
    assert rep.max_degree == 4 and rep.diameter == 2 and rep.mad == "4" and not rep.ok
    assert not verify_diameter2_extremal(petersen()).ok


def test_witness_search_finds_square_complete_graph():
    g = search_diameter2_witness(seed=0, restarts=30)
    assert g is not None
    rep = verify_diameter2_extremal(g)
    assert rep.ok and diameter(g) == 2 and mad(g) < 4
    assert chromatic_number(conflict_graph(g, TD)) == 13
