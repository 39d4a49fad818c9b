"""Test corpora: exhaustive small planar graphs and random plane graphs.

Every generated graph is connected, planar and has maximum degree at most 4.
Random instances come from Delaunay triangulations of random points, so the
straight-line drawing supplies the rotation system.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import networkx as nx
import numpy as np
import pynauty
from scipy.spatial import Delaunay

from .graph import Graph, InputError, components, induced_subgraph
from .plane import PlaneGraph, embed, from_positions


@dataclass(frozen=True)
class CorpusItem:
    name: str
    pg: PlaneGraph


def _certificate(n: int, adj: list[set[int]]) -> bytes:
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict={v: sorted(adj[v]) for v in range(n)}))


def _planar(n: int, adj: list[set[int]]) -> bool:
    m = sum(len(a) for a in adj) // 2
    if n >= 3 and m > 3 * n - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from((u, v) for u in range(n) for v in adj[u] if u < v)
    return nx.check_planarity(h)[0]


def small_planar_graphs(max_n: int = 8) -> list[nx.Graph]:
    """All connected planar graphs of maximum degree at most 4 on 1..max_n vertices.

    Each order is grown by attaching a new vertex to every graph one order
    smaller and deduplicating by canonical certificate. Every connected graph
    has a non-cut vertex, and the class is closed under deleting one, so
    nothing is missed. Within an order, graphs come in certificate order.
    """
    level = [[set()]] if max_n >= 1 else []
    out = [g for g in level]
    for n in range(2, max_n + 1):
        found: dict[bytes, list[set[int]] | None] = {}
        for adj in level:
            free = [v for v in range(n - 1) if len(adj[v]) < 4]
            for k in range(1, 5):
                for nbrs in itertools.combinations(free, k):
                    c = [set(a) for a in adj] + [set(nbrs)]
                    for v in nbrs:
                        c[v].add(n - 1)
                    key = _certificate(n, c)
                    if key not in found:
                        found[key] = c if _planar(n, c) else None
        level = [found[k] for k in sorted(found) if found[k] is not None]
        out.extend(level)
    graphs = []
    for adj in out:
        h = nx.Graph()
        h.add_nodes_from(range(len(adj)))
        h.add_edges_from((u, v) for u in range(len(adj)) for v in adj[u] if u < v)
        graphs.append(h)
    return graphs


def to_plane(h: nx.Graph) -> PlaneGraph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return embed(Graph(h.number_of_nodes(), h.edges()))


def exhaustive(max_n: int = 8) -> Iterator[CorpusItem]:
    for i, h in enumerate(small_planar_graphs(max_n)):
        yield CorpusItem(f"small:{h.number_of_nodes()}:{i}", to_plane(h))


# ---------------------------------------------------------------------------
# random plane graphs


def _largest_component(g: Graph, pos) -> tuple[Graph, list]:
    comp = max(components(g), key=len)
    sub, old = induced_subgraph(g, comp)
    return sub, [pos[v] for v in old]


def _core(g: Graph, pos, k: int) -> tuple[Graph, list]:
    keep = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            if len(g.adj[v] & keep) < k:
                keep.discard(v)
                changed = True
    if not keep:
        return g, pos
    sub, old = induced_subgraph(g, sorted(keep))
    return sub, [pos[v] for v in old]


def _within(adj, a: int, b: int, r: int) -> bool:
    """True if b is at distance at most r from a."""
    seen, frontier = {a}, {a}
    for _ in range(r):
        frontier = {w for v in frontier for w in adj[v]} - seen
        if b in frontier:
            return True
        seen |= frontier
    return False


def random_plane_graph(
    n: int,
    rng: random.Random,
    min_girth: int = 3,
    keep: float = 1.0,
    core: int = 0,
) -> PlaneGraph | None:
    """A connected plane graph with maximum degree at most 4.

    Delaunay edges are added in random order while both endpoints have degree
    below 4 and the edge closes no cycle shorter than ``min_girth``. Each
    accepted edge is kept with probability ``keep``; finally the ``core``-core
    and the largest component are taken.
    """
    pts = np.array([(rng.random(), rng.random()) for _ in range(max(n, 3))])
    tri = Delaunay(pts)
    cand = set()
    for simplex in tri.simplices:
        for a, b in itertools.combinations(sorted(int(x) for x in simplex), 2):
            cand.add((a, b))
    cand = sorted(cand)
    rng.shuffle(cand)
    adj = [set() for _ in range(len(pts))]
    for a, b in cand:
        if len(adj[a]) >= 4 or len(adj[b]) >= 4:
            continue
        if min_girth > 3 and _within(adj, a, b, min_girth - 2):
            continue
        if rng.random() > keep:
            continue
        adj[a].add(b)
        adj[b].add(a)
    g = Graph.from_adjacency(adj)
    pos = [tuple(p) for p in pts]
    if core:
        g, pos = _core(g, pos, core)
    g, pos = _largest_component(g, pos)
    if g.n == 0:
        return None
    return from_positions(g, pos)


def medial_graph(n: int, rng: random.Random, drop: float = 0.0) -> PlaneGraph | None:
    """Medial graph of a random Delaunay triangulation, a 4-regular plane graph,
    with a fraction ``drop`` of its edges deleted at random."""
    pts = np.array([(rng.random(), rng.random()) for _ in range(max(n, 4))])
    tri = Delaunay(pts)
    h = nx.Graph()
    for simplex in tri.simplices:
        h.add_edges_from(itertools.combinations(sorted(int(x) for x in simplex), 2))
    planar, emb = nx.check_planarity(h)
    eid = {}
    for a, b in h.edges():
        eid[frozenset((a, b))] = len(eid)
    medial = set()
    for v in emb.nodes():
        order = list(emb.neighbors_cw_order(v))
        for i, w in enumerate(order):
            x = order[(i + 1) % len(order)]
            e1, e2 = eid[frozenset((v, w))], eid[frozenset((v, x))]
            if e1 != e2:
                medial.add((min(e1, e2), max(e1, e2)))
    edges = sorted(medial)
    if drop:
        edges = [e for e in edges if rng.random() >= drop]
    g = Graph(len(eid), edges)
    g = induced_subgraph(g, max(components(g), key=len))[0]
    if g.max_degree() > 4:
        return None
    return embed(g)


def random_corpus(count: int, seed: int = 0, max_n: int = 60) -> Iterator[CorpusItem]:
    """A deterministic mix of random plane graphs with 9..max_n vertices."""
    rng = random.Random(seed)
    kinds = ["plain", "sparse", "girth4", "girth4core2", "girth5", "core3", "medial", "medial-drop"]
    made = 0
    while made < count:
        kind = kinds[made % len(kinds)]
        n = rng.randint(9, max_n)
        if kind == "plain":
            pg = random_plane_graph(n, rng)
        elif kind == "sparse":
            pg = random_plane_graph(n, rng, keep=0.8)
        elif kind == "girth4":
            pg = random_plane_graph(n, rng, min_girth=4)
        elif kind == "girth4core2":
            pg = random_plane_graph(n, rng, min_girth=4, core=2)
        elif kind == "girth5":
            pg = random_plane_graph(n, rng, min_girth=5, core=2)
        elif kind == "core3":
            pg = random_plane_graph(n, rng, core=3)
        elif kind == "medial":
            pg = medial_graph(max(4, n // 3), rng)
        else:
            pg = medial_graph(max(4, n // 3), rng, drop=0.1)
        if pg is None or pg.n < 2:
            continue
        yield CorpusItem(f"{kind}:{made}", pg)
        made += 1


# ---------------------------------------------------------------------------
# adversarial search over plane graphs


def cylinder(k: int, m: int) -> PlaneGraph:
    """C_k x P_m drawn as concentric rings; girth 4 for k >= 4."""
    import math

    pos, edges = [], []
    for r in range(m):
        for i in range(k):
            ang = 2 * math.pi * i / k
            pos.append(((r + 1) * math.cos(ang), (r + 1) * math.sin(ang)))
            v = r * k + i
            edges.append((v, r * k + (i + 1) % k))
            if r + 1 < m:
                edges.append((v, v + k))
    return from_positions(Graph(k * m, edges), pos)


class _Editor:
    """Planarity-preserving edits on a rotation system."""

    def __init__(self, pg: PlaneGraph):
        self.rot = [list(r) for r in pg.rotation]

    def plane(self) -> PlaneGraph:
        n = len(self.rot)
        edges = [(v, w) for v in range(n) for w in self.rot[v] if v < w]
        return PlaneGraph(Graph(n, edges), self.rot)

    def delete_edge(self, u, v):
        self.rot[u].remove(v)
        self.rot[v].remove(u)

    def subdivide(self, u, v):
        x = len(self.rot)
        self.rot[u][self.rot[u].index(v)] = x
        self.rot[v][self.rot[v].index(u)] = x
        self.rot.append([u, v])

    def chord(self, a, pa, b, pb):
        """Join a and b through the face where a follows pa and b follows pb."""
        self.rot[a].insert(self.rot[a].index(pa) + 1, b)
        self.rot[b].insert(self.rot[b].index(pb) + 1, a)

    def delete_leaf(self, x):
        (u,) = self.rot[x]
        self.rot[u].remove(x)
        self.rot[x] = []
        self._drop(x)

    def smooth(self, x):
        u, v = self.rot[x]
        self.rot[u][self.rot[u].index(x)] = v
        self.rot[v][self.rot[v].index(x)] = u
        self.rot[x] = []
        self._drop(x)

    def _drop(self, x):
        # move the last vertex into slot x to keep IDs dense
        last = len(self.rot) - 1
        if x != last:
            self.rot[x] = self.rot[last]
            for w in self.rot[x]:
                r = self.rot[w]
                r[r.index(last)] = x
        self.rot.pop()


def _random_edit(ed: _Editor, pg: PlaneGraph, t, rng: random.Random) -> bool:
    """Apply one random admissible edit; False if the chosen edit was not allowed."""
    g = pg.graph
    move = rng.random()
    if move < 0.3 and g.edge_count:
        u, v = rng.choice(g.edges())
        if g.degree(u) == 1:
            ed.delete_leaf(u)
        elif g.degree(v) == 1:
            ed.delete_leaf(v)
        else:
            ed.delete_edge(u, v)
    elif move < 0.45 and g.edge_count:
        u, v = rng.choice(g.edges())
        ed.subdivide(u, v)
    elif move < 0.55:
        twos = [v for v in range(g.n) if g.degree(v) == 2]
        if not twos:
            return False
        x = rng.choice(twos)
        u, v = pg.rotation[x]
        if v in g.adj[u] or _cycle_through(g, u, v, x) < t.min_girth:
            return False
        ed.smooth(x)
    else:
        f = rng.choice([f for f in pg.faces if f.size >= 4] or [None])
        if f is None:
            return False
        k = f.size
        i, j = rng.sample(range(k), 2)
        a, b = f.walk[i], f.walk[j]
        if a == b or b in g.adj[a] or g.degree(a) >= 4 or g.degree(b) >= 4:
            return False
        if _within([g.adj[v] for v in range(g.n)], a, b, t.min_girth - 2):
            return False
        ed.chord(a, f.walk[i - 1], b, f.walk[j - 1])
    return True


def _cycle_through(g: Graph, u: int, v: int, x: int) -> float:
    """Length of the shortest cycle created by replacing the path u-x-v with an edge uv."""
    adj = [g.adj[w] - {x} if w != x else frozenset() for w in range(g.n)]
    seen, frontier, d = {u}, {u}, 0
    while frontier:
        d += 1
        frontier = {w for y in frontier for w in adj[y]} - seen
        if v in frontier:
            return d + 1
        seen |= frontier
    return float("inf")


def witness_count(pg: PlaneGraph, t) -> int:
    """Weighted number of witnesses; low-degree ones count triple."""
    from .configs import LEMMAS, Structure

    st = Structure(pg)
    total = 0
    for name, fn in LEMMAS[t]:
        weight = 3 if name.endswith("minimumDegree") else 1
        total += weight * sum(1 for _ in fn(st))
    return total


def degree_floor(t) -> int:
    """Smallest degree not already reducible by the minimum-degree lemma of t."""
    return 3 if t.value in ("2dg4", "injg3") else 2


def seed_graph(t, rng: random.Random) -> PlaneGraph:
    """A starting plane graph meeting the hypotheses of t, with no vertex below the degree floor."""
    from .constructions import cube, dodecahedron, grid, octahedron

    choices = [lambda: cylinder(rng.randint(4, 10), rng.randint(2, 6)), cube, dodecahedron]
    if degree_floor(t) <= 2:
        choices.append(lambda: grid(rng.randint(3, 6), rng.randint(3, 6)))
    if t.min_girth <= 3:
        choices += [octahedron, lambda: medial_graph(rng.randint(6, 15), rng)]
    while True:
        pg = rng.choice(choices)()
        if pg is not None and min(pg.degree(v) for v in range(pg.n)) >= degree_floor(t):
            return pg


def adversarial_graph(
    t, rng: random.Random, steps: int = 400, min_n: int = 10, max_n: int = 40
) -> PlaneGraph:
    """Anneal over plane graphs meeting t's hypotheses, minimizing configurations per vertex.

    Edits never push a vertex below the degree floor, so the search spends its
    time on the deeper configurations.
    """
    pg = seed_graph(t, rng)
    floor = degree_floor(t)
    cur = witness_count(pg, t) / pg.n
    best, best_pg = cur, pg
    temp, cooling = 1.0, 0.05 ** (1 / max(1, 0.6 * steps))
    for _ in range(steps):
        if best == 0:
            break
        ed = _Editor(pg)
        if not _random_edit(ed, pg, t, rng):
            continue
        n_new = len(ed.rot)
        if n_new != pg.n and not min_n <= n_new <= max_n:
            continue
        try:
            cand = ed.plane()
        except (ValueError, InputError):
            continue
        if len(components(cand.graph)) != 1 or min(cand.degree(v) for v in range(cand.n)) < floor:
            continue
        new = witness_count(cand, t) / cand.n
        if new <= cur or rng.random() < np.exp((cur - new) * cand.n / temp):
            pg, cur = cand, new
            if cur < best:
                best, best_pg = cur, pg
        temp = max(0.05, temp * cooling)
    return best_pg
