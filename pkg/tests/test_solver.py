import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distcolor.conflict import ColoringKind, conflict_graph, is_valid, is_valid_partial
from distcolor.constructions import complete, cycle, incidence_graph_pg, petersen
from distcolor.graph import Graph, InputError
from distcolor.solver import (
    Unsat,
    chromatic_number,
    color_with_lists,
    extend_precoloring,
    sampled_choosability,
    sdr_feasible,
)

from oracles import brute_chromatic

TD, INJ = ColoringKind.TWO_DISTANCE, ColoringKind.INJECTIVE


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def proper_from_lists(cg, lists, c):
    return all(c[v] in lists[v] for v in range(cg.n)) and all(c[u] != c[v] for u, v in cg.edges())


def test_small_examples():
    assert isinstance(color_with_lists(complete(2), [{1}, {1}]), Unsat)
    c = color_with_lists(complete(3), [{1, 2}, {2, 3}, {1, 3}])
    assert proper_from_lists(complete(3), [{1, 2}, {2, 3}, {1, 3}], c)


def test_petersen_square():
    cg = conflict_graph(petersen(), TD)
    assert cg.edge_count == 45
    assert not isinstance(color_with_lists(cg, [set(range(1, 11))] * 10), Unsat)
    assert isinstance(color_with_lists(cg, [set(range(1, 10))] * 10), Unsat)


def test_chromatic_examples():
    assert chromatic_number(complete(13)) == 13
    assert chromatic_number(conflict_graph(cycle(5).graph, TD)) == 5
    assert chromatic_number(conflict_graph(incidence_graph_pg(3), INJ)) == 13
    assert chromatic_number(Graph(0)) == 0
    assert chromatic_number(Graph(3)) == 1


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic(g.n, g.edges())


@given(graphs(max_n=8), st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_list_coloring_sound_and_monotone(g, seed):
    rng = random.Random(seed)
    lists = [set(rng.sample(range(6), rng.randint(1, 4))) for _ in range(g.n)]
    res = color_with_lists(g, lists)
    # exhaustive reference
    ok = any(
        all(c[u] != c[v] for u, v in g.edges())
        for c in itertools.product(*[sorted(x) for x in lists])
    )
    assert (not isinstance(res, Unsat)) == ok
    if ok:
        assert proper_from_lists(g, lists, res)
        bigger = [x | {rng.randrange(8)} for x in lists]
        assert not isinstance(color_with_lists(g, bigger), Unsat)
    else:
        assert res.vertices


def test_determinism():
    g = conflict_graph(cycle(7).graph, TD)
    lists = [set(range(4)) for _ in range(7)]
    assert color_with_lists(g, lists) == color_with_lists(g, lists)


def test_lists_must_cover_vertices():
    with pytest.raises(InputError):
        color_with_lists(complete(3), [{1}])


def test_extend_full_coloring_unchanged():
    g = cycle(5).graph
    c = {i: i for i in range(5)}
    assert extend_precoloring(g, TD, c, [set(range(5))] * 5) == c


def test_extend_rejects_invalid_precoloring():
    with pytest.raises(InputError):
        extend_precoloring(complete(2), TD, {0: 1, 1: 1}, [{1}, {1}])


def test_extend_two_vertex_with_eleven_lists():
    # a 2-vertex whose 2-distance neighborhood holds at most 8 vertices
    rng = random.Random(3)
    from distcolor.constructions import grid

    g = grid(4, 4).graph
    for _ in range(50):
        lists = [set(rng.sample(range(20), 11)) for _ in range(g.n)]
        full = color_with_lists(conflict_graph(g, TD), lists)
        assert not isinstance(full, Unsat)
        partial = dict(full)
        del partial[0]
        res = extend_precoloring(g, TD, partial, lists)
        assert not isinstance(res, Unsat) and is_valid(g, TD, res)
        assert all(res[v] == partial[v] for v in partial)


def test_extend_order_scenario_for_injective_two_vertex():
    # vertex 9 is a 2-vertex joining grid vertices 0 and 2; uncolor it and 0
    from distcolor.constructions import grid

    base = grid(3, 3).graph
    g = Graph(base.n + 1, base.edges() + [(0, 9), (9, 2)])
    rng = random.Random(9)
    for _ in range(30):
        lists = [set(rng.sample(range(20), 11)) for _ in range(g.n)]
        full = color_with_lists(conflict_graph(g, INJ), lists)
        partial = {v: c for v, c in full.items() if v not in (9, 0)}
        assert is_valid_partial(g, INJ, partial)
        res = extend_precoloring(g, INJ, partial, lists)
        assert not isinstance(res, Unsat)


def test_sdr_examples():
    assert sdr_feasible([{1, 2}, {1, 2}, {1, 2}])[0] is False
    assert sdr_feasible([{7}]) == (True, [7])


def test_sdr_hall_application_sizes():
    # nine mutually conflicting vertices with list sizes 6,8,8,6,6,6,6,4,3;
    # each list holds its own representative, so Hall's condition holds
    sizes = [6, 8, 8, 6, 6, 6, 6, 4, 3]
    rng = random.Random(2)
    for _ in range(20):
        lists = []
        for i, s in enumerate(sizes):
            others = rng.sample([c for c in range(12) if c != i], s - 1)
            lists.append({i, *others})
        ok, reps = sdr_feasible(lists)
        assert ok and len(set(reps)) == 9 and all(r in L for r, L in zip(reps, lists))
    # same sizes squeezed so that seven lists live inside six colors
    squeezed = [set(range(6))] * 7 + [set(range(4)), set(range(3))]
    assert sdr_feasible(squeezed)[0] is False


@given(st.lists(st.sets(st.integers(0, 6), min_size=0, max_size=4), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_sdr_matches_permutation_search(lists):
    ok, reps = sdr_feasible(lists)
    ref = any(len(set(c)) == len(c) for c in itertools.product(*[sorted(x) for x in lists]))
    assert ok == ref
    if ok:
        assert len(set(reps)) == len(lists) and all(r in x for r, x in zip(reps, lists))


def test_probe_trivial_and_refuting():
    g = cycle(6).graph
    rep = sampled_choosability(g, TD, k=6, trials=20, seed=1, pool=12)
    assert rep.refutations == 0
    ig = incidence_graph_pg(3)
    rep = sampled_choosability(ig, INJ, k=12, trials=3, seed=1, pool=12)
    assert rep.refutations == 3 and rep.first_refutation is not None
    with pytest.raises(InputError):
        sampled_choosability(g, TD, k=5, trials=1, seed=0, pool=3)


def test_probe_is_reproducible():
    g = cycle(5).graph
    a = sampled_choosability(g, TD, k=5, trials=10, seed=4, pool=9).to_dict()
    b = sampled_choosability(g, TD, k=5, trials=10, seed=4, pool=9).to_dict()
    assert a == b
