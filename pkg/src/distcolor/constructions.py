"""Fixture graphs and extremal constructions."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import networkx as nx

from .conflict import ColoringKind, conflict_graph
from .graph import Graph, InputError, diameter, induced_subgraph, mad
from .plane import PlaneGraph, embed, from_positions

PAW_NAMES = ("a", "b", "c", "d")


def paw_fig1() -> tuple[Graph, dict[str, dict[int, int]]]:
    """Triangle b, c, d with a pendant a at b, and three reference labelings.

    The labelings are keyed by the kind they are valid for; the exact-square
    one is deliberately invalid as an injective coloring.
    """
    a, b, c, d = range(4)
    g = Graph(4, [(a, b), (b, c), (b, d), (c, d)])
    labels = {
        "2distance": {a: 4, b: 1, c: 2, d: 3},
        "injective": {a: 1, b: 1, c: 2, d: 3},
        "exactsquare": {a: 2, b: 1, c: 1, d: 1},
    }
    return g, labels


def cycle(n: int) -> PlaneGraph:
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    return PlaneGraph(g, [[(i - 1) % n, (i + 1) % n] for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def theta_graph(delta: int) -> Graph:
    """Hubs 0 and 1 joined by ``delta`` paths 0 - a_i - b_i - 1.

    a_i is vertex ``2 + 2i`` and b_i is ``3 + 2i``.
    """
    if delta < 3:
        raise InputError("theta_graph needs delta >= 3")
    edges = []
    for i in range(delta):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (a, b), (b, 1)]
    return Graph(2 + 2 * delta, edges)


def theta_plane(delta: int) -> PlaneGraph:
    g = theta_graph(delta)
    rotation = [[] for _ in range(g.n)]
    rotation[0] = [2 + 2 * i for i in range(delta)]
    rotation[1] = [3 + 2 * i for i in reversed(range(delta))]
    for i in range(delta):
        a, b = 2 + 2 * i, 3 + 2 * i
        rotation[a] = [0, b]
        rotation[b] = [a, 1]
    return PlaneGraph(g, rotation)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose first nonzero coordinate is 1."""
    pts = []
    for v in itertools.product(range(q), repeat=3):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def incidence_graph_pg(q: int) -> Graph:
    """Point-line incidence graph of the projective plane over GF(q), q prime.

    Points are vertices ``0..N-1`` and lines ``N..2N-1``; the same normalized
    vectors index both, a point lying on a line when their dot product is 0.
    """
    if not _is_prime(q):
        raise InputError(f"q={q} is not prime")
    pts = projective_points(q)
    n = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if sum(x * y for x, y in zip(p, line)) % q == 0:
                edges.append((i, n + j))
    return Graph(2 * n, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    keep = [u for u in range(g.n) if u != v]
    return induced_subgraph(g, keep)[0]


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def grid(rows: int, cols: int) -> PlaneGraph:
    def vid(r, c):
        return r * cols + c

    edges, pos = [], []
    for r in range(rows):
        for c in range(cols):
            pos.append((c, r))
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return from_positions(Graph(rows * cols, edges), pos)


def _from_networkx(h: nx.Graph) -> PlaneGraph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return embed(Graph(h.number_of_nodes(), h.edges()))


def cube() -> PlaneGraph:
    return _from_networkx(nx.hypercube_graph(3))


def dodecahedron() -> PlaneGraph:
    return _from_networkx(nx.dodecahedral_graph())


def octahedron() -> PlaneGraph:
    return _from_networkx(nx.octahedral_graph())


def circulant(n: int, jumps) -> Graph:
    edges = {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps}
    return Graph(n, edges)


@dataclass
class ExtremalReport:
    vertices: int
    max_degree: int
    mad: str
    diameter: float
    square_complete: bool

    @property
    def ok(self) -> bool:
        return (
            self.vertices == 13
            and self.max_degree == 4
            and _frac(self.mad) < 4
            and self.diameter == 2
            and self.square_complete
        )

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def _frac(s: str):
    from fractions import Fraction

    return Fraction(s)


def verify_diameter2_extremal(g: Graph) -> ExtremalReport:
    """Check the clauses of a 13-vertex, degree-4, sparse, diameter-2 witness."""
    m = mad(g) if g.n else 0
    sq = conflict_graph(g, ColoringKind.TWO_DISTANCE)
    complete_square = sq.edge_count == g.n * (g.n - 1) // 2
    return ExtremalReport(g.n, g.max_degree(), str(m), diameter(g), complete_square)


def search_diameter2_witness(seed: int = 0, restarts: int = 200, steps: int = 20000) -> Graph | None:
    """Local search for a 13-vertex graph of max degree 4, diameter 2, mad < 4.

    Such a graph has at most 25 edges, so some vertex has degree < 4. The
    search fixes the edge count at 25 and minimizes the number of vertex pairs
    at distance more than 2 by swapping edges, keeping all degrees at most 4.
    """
    rng = random.Random(seed)
    n, m = 13, 25
    all_pairs = list(itertools.combinations(range(n), 2))

    def uncovered(adj):
        bad = 0
        for u, v in all_pairs:
            if v not in adj[u] and not (adj[u] & adj[v]):
                bad += 1
        return bad

    for _ in range(restarts):
        adj = [set() for _ in range(n)]
        edges = []
        pool = all_pairs[:]
        rng.shuffle(pool)
        for u, v in pool:
            if len(edges) == m:
                break
            if len(adj[u]) < 4 and len(adj[v]) < 4:
                adj[u].add(v)
                adj[v].add(u)
                edges.append((u, v))
        if len(edges) < m:
            continue
        cost = uncovered(adj)
        temp = 2.0
        for _ in range(steps):
            if cost == 0:
                g = Graph(n, edges)
                if verify_diameter2_extremal(g).ok:
                    return g
                break
            i = rng.randrange(m)
            u, v = edges[i]
            a, b = rng.sample(range(n), 2)
            if b in adj[a] or len(adj[a]) >= 4 and a not in (u, v) or len(adj[b]) >= 4 and b not in (u, v):
                continue
            adj[u].discard(v)
            adj[v].discard(u)
            if len(adj[a]) >= 4 or len(adj[b]) >= 4:
                adj[u].add(v)
                adj[v].add(u)
                continue
            adj[a].add(b)
            adj[b].add(a)
            new = uncovered(adj)
            if new <= cost or rng.random() < math.exp((cost - new) / temp):
                edges[i] = (min(a, b), max(a, b))
                cost = new
            else:
                adj[a].discard(b)
                adj[b].discard(a)
                adj[u].add(v)
                adj[v].add(u)
            temp = max(0.05, temp * 0.9995)
    return None
