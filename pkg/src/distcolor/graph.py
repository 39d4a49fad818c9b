"""Simple undirected graphs and the distance metrics used by the coloring code.

Vertices are dense integers ``0..n-1``. A :class:`Graph` is immutable; every
operation that changes structure returns a new graph.
"""

from __future__ import annotations

import json
import math
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

INF = math.inf


class InputError(ValueError):
    """Raised for malformed or out-of-range input."""


class Graph:
    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._edges = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        return cls(len(adj), ((u, v) for u, nb in enumerate(adj) for v in nb if u < v))

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return degree(self, v)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for n={g.n}")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adj[v])


def bfs_distances(g: Graph, source: int, limit: float = INF) -> dict[int, int]:
    """Distances from ``source`` to every vertex within ``limit`` hops."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= limit:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    _check_vertex(g, u)
    _check_vertex(g, v)
    return bfs_distances(g, u).get(v, INF)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``inf`` for forests.

    A BFS from every vertex; a non-tree edge closing at depths ``a`` and ``b``
    gives a closed walk of length ``a+b+1`` through the root, and the minimum
    over all roots is the girth.
    """
    best = INF
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def two_distance_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices at distance 1 or 2 from ``v``."""
    _check_vertex(g, v)
    out = set(g.adj[v])
    for w in g.adj[v]:
        out |= g.adj[w]
    out.discard(v)
    return frozenset(out)


def exact_two_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices at distance exactly 2 from ``v``."""
    return two_distance_neighborhood(g, v) - g.adj[v]


def two_distance_degree(g: Graph, v: int) -> int:
    return len(two_distance_neighborhood(g, v))


def exact_two_degree(g: Graph, v: int) -> int:
    return len(exact_two_neighborhood(g, v))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(bfs_distances(g, 0)) == g.n


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if not seen[s]:
            comp = sorted(bfs_distances(g, s))
            for v in comp:
                seen[v] = True
            out.append(comp)
    return out


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices`` relabelled to ``0..k-1``; also returns the old labels."""
    old = list(vertices)
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[w]) for u in old for w in g.adj[u] if w in new and u < w]
    return Graph(len(old), edges), old


def diameter(g: Graph) -> float:
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        d = bfs_distances(g, s)
        if len(d) < g.n:
            return INF
        best = max(best, max(d.values()))
    return best


def _density_exceeds(g: Graph, p: int, q: int) -> list[int] | None:
    """Return a vertex set S with q*|E(S)| > p*|S|, or None if none exists.

    Goldberg's closure network: source -> edge node (cap q), edge node -> both
    endpoints (effectively unbounded), vertex -> sink (cap p). The source side
    of a minimum cut is the best closure; it is positive exactly when some
    subgraph beats density p/q.
    """
    edges = g.edges()
    if not edges:
        return None
    m, n = len(edges), g.n
    # node layout: 0 source, 1..m edge nodes, m+1..m+n vertices, m+n+1 sink
    s, t = 0, m + n + 1
    big = q * m + 1
    rows, cols, caps = [], [], []
    for i, (u, v) in enumerate(edges):
        rows += [s, 1 + i, 1 + i]
        cols += [1 + i, 1 + m + u, 1 + m + v]
        caps += [q, big, big]
    for v in range(n):
        rows.append(1 + m + v)
        cols.append(t)
        caps.append(p)
    size = m + n + 2
    cap = csr_matrix((np.array(caps, dtype=np.int32), (rows, cols)), shape=(size, size))
    res = maximum_flow(cap, s, t)
    if q * m - res.flow_value <= 0:
        return None
    # source side of the cut: reachable from s in the residual network
    residual = (cap - res.flow).tocsr()
    residual.data[residual.data < 0] = 0
    residual.eliminate_zeros()
    seen = breadth_first_order(residual, s, directed=True, return_predecessors=False)
    return sorted(int(x) - 1 - m for x in seen if 1 + m <= x <= m + n)


def mad(g: Graph) -> Fraction:
    """Maximum average degree, exactly.

    Dinkelbach iteration on the density |E(S)|/|S|: start from the whole graph,
    and while some subgraph is strictly denser, jump to it. Densities live in a
    finite set of fractions, so this terminates, and the last set is densest.
    """
    if g.n == 0:
        raise InputError("mad of the empty graph is undefined")
    members = list(range(g.n))
    while True:
        s = set(members)
        e = sum(1 for u, v in g.edges() if u in s and v in s)
        dens = Fraction(e, len(members))
        better = _density_exceeds(g, dens.numerator, dens.denominator)
        if better is None:
            return 2 * dens
        members = better


# -- serialization ---------------------------------------------------------

def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_dict(d: dict) -> Graph:
    try:
        return Graph(int(d["n"]), d.get("edges", []))
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"bad graph JSON: {exc}") from exc


def parse_edge_list(text: str) -> Graph:
    """Plain ``u v`` lines with ``#`` comments; n is one more than the largest label."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def load_graph_text(text: str) -> dict:
    """Parse either JSON or an edge list into a dict with at least ``n`` and ``edges``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON: {exc}") from exc
    return graph_to_dict(parse_edge_list(text))
