"""Exact list coloring by backtracking, plus Hall-type feasibility checks.

The search colors the vertex with the fewest remaining colors first (ties by
smallest ID) and tries colors in ascending order. After each assignment it
forward-checks neighbors and tests Hall's condition on a fixed family of
greedily found cliques. Colors are handled internally as bit positions.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from typing import Collection, Mapping, Sequence

from .conflict import ColoringKind, Coloring, conflict_sets, is_valid_partial
from .graph import Graph, InputError, components, induced_subgraph

ListAssignment = Sequence[Collection[int]]

HALL_CLIQUE_LIMIT = 12


@dataclass(frozen=True)
class Unsat:
    """No coloring exists; ``vertices`` is a subproblem that already fails."""

    vertices: frozenset
    reason: str = ""

    def to_dict(self) -> dict:
        return {"unsat": True, "vertices": sorted(self.vertices), "reason": self.reason}


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _match(domains: Sequence[int]) -> list[int] | None:
    """Assign distinct bit positions to the domains, or None if Hall fails."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for c in _bits(domains[i]):
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(domains)):
        if not augment(i, set()):
            return None
    out = [0] * len(domains)
    for c, i in owner.items():
        out[i] = c
    return out


def _hall_violator(domains: Sequence[int]) -> list[int] | None:
    """Indices of a subset whose combined domain is smaller than the subset."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for c in _bits(domains[i]):
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(domains)):
        seen: set = set()
        if not augment(i, seen):
            # the failed vertex plus owners of every color it could reach
            return sorted({i} | {owner[c] for c in seen})
    return None


def greedy_cliques(adj: Sequence[Collection[int]], limit: int | None = HALL_CLIQUE_LIMIT) -> list[tuple[int, ...]]:
    """One greedy maximal clique grown from each vertex, capped at ``limit``."""
    found = set()
    for v in range(len(adj)):
        clique = [v]
        cand = set(adj[v])
        while cand and (limit is None or len(clique) < limit):
            w = max(cand, key=lambda x: (len(cand & set(adj[x])), -x))
            clique.append(w)
            cand &= set(adj[w])
        if len(clique) >= 2:
            found.add(tuple(sorted(clique)))
    return sorted(found)


class _Search:
    def __init__(self, adj: list[list[int]], domains: list[int], cliques: list[tuple[int, ...]]):
        self.adj = adj
        self.dom = domains
        self.color = [-1] * len(adj)
        self.cliques = cliques
        self.cliques_of: list[list[int]] = [[] for _ in adj]
        for i, q in enumerate(cliques):
            for v in q:
                self.cliques_of[v].append(i)
        self.nodes = 0

    def hall_ok(self, touched: Collection[int]) -> bool:
        checked = set()
        for w in touched:
            for qi in self.cliques_of[w]:
                if qi in checked:
                    continue
                checked.add(qi)
                doms = [self.dom[x] for x in self.cliques[qi] if self.color[x] < 0]
                union = 0
                for d in doms:
                    union |= d
                if _popcount(union) < len(doms):
                    return False
                if _match(doms) is None:
                    return False
        return True

    def run(self, remaining: int) -> bool:
        if remaining == 0:
            return True
        self.nodes += 1
        best, best_size = -1, 1 << 30
        for v, c in enumerate(self.color):
            if c < 0:
                s = _popcount(self.dom[v])
                if s < best_size:
                    best, best_size = v, s
                    if s <= 1:
                        break
        v = best
        for c in _bits(self.dom[v]):
            bit = 1 << c
            changed = []
            ok = True
            for w in self.adj[v]:
                if self.color[w] < 0 and self.dom[w] & bit:
                    self.dom[w] ^= bit
                    changed.append(w)
                    if not self.dom[w]:
                        ok = False
                        break
            self.color[v] = c
            saved_v = self.dom[v]
            self.dom[v] = bit
            if ok and self.hall_ok(changed) and self.run(remaining - 1):
                return True
            self.color[v] = -1
            self.dom[v] = saved_v
            for w in changed:
                self.dom[w] |= bit
        return False


def _solve_component(adj: list[list[int]], domains: list[int]) -> tuple[list[int] | None, frozenset | None]:
    n = len(adj)
    for v in range(n):
        if not domains[v]:
            return None, frozenset([v])
    full_cliques = greedy_cliques(adj, limit=None)
    for q in full_cliques:
        viol = _hall_violator([domains[x] for x in q])
        if viol is not None:
            return None, frozenset(q[i] for i in viol)
    cliques = greedy_cliques(adj, HALL_CLIQUE_LIMIT)
    search = _Search(adj, list(domains), cliques)
    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    if search.run(n):
        return search.color, None
    return None, frozenset(range(n))


def color_with_lists(conflicts: Graph, lists: ListAssignment) -> Coloring | Unsat:
    """A proper coloring of ``conflicts`` from ``lists``, or :class:`Unsat`."""
    if len(lists) != conflicts.n:
        raise InputError("lists must cover every vertex")
    palette = sorted(set().union(*map(set, lists))) if conflicts.n else []
    index = {c: i for i, c in enumerate(palette)}
    result: Coloring = {}
    for comp in components(conflicts):
        sub, old = induced_subgraph(conflicts, comp)
        adj = [sorted(sub.adj[v]) for v in range(sub.n)]
        doms = []
        for v in old:
            m = 0
            for c in lists[v]:
                m |= 1 << index[c]
            doms.append(m)
        colors, hint = _solve_component(adj, doms)
        if colors is None:
            return Unsat(frozenset(old[i] for i in hint), "no coloring of this conflicting set")
        for i, v in enumerate(old):
            result[v] = palette[colors[i]]
    return result


def _dsatur_upper(conflicts: Graph) -> int:
    color: dict[int, int] = {}
    n = conflicts.n
    for _ in range(n):
        best = max(
            (v for v in range(n) if v not in color),
            key=lambda v: (len({color[w] for w in conflicts.adj[v] if w in color}), len(conflicts.adj[v]), -v),
        )
        used = {color[w] for w in conflicts.adj[best] if w in color}
        c = 0
        while c in used:
            c += 1
        color[best] = c
    return max(color.values(), default=-1) + 1


def max_greedy_clique(conflicts: Graph) -> tuple[int, ...]:
    adj = [conflicts.adj[v] for v in range(conflicts.n)]
    cliques = greedy_cliques(adj, limit=None)
    if not cliques:
        return (0,) if conflicts.n else ()
    return max(cliques, key=lambda q: (len(q), [-x for x in q]))


def chromatic_number(conflicts: Graph) -> int:
    """Exact chromatic number; 0 for the empty graph."""
    n = conflicts.n
    if n == 0:
        return 0
    clique = max_greedy_clique(conflicts)
    lower, upper = len(clique), _dsatur_upper(conflicts)
    for k in range(lower, upper):
        # fixing the clique colors only removes color-permutation symmetry
        lists = [set(range(k)) for _ in range(n)]
        for i, v in enumerate(clique):
            lists[v] = {i}
        if not isinstance(color_with_lists(conflicts, lists), Unsat):
            return k
    return upper


def extend_precoloring(
    g: Graph, kind: ColoringKind, partial: Mapping[int, int], lists: ListAssignment
) -> Coloring | Unsat:
    """Color the uncolored vertices of ``g`` without touching ``partial``."""
    if len(lists) != g.n:
        raise InputError("lists must cover every vertex")
    partial = {v: c for v, c in partial.items() if c >= 0}
    if not is_valid_partial(g, kind, partial):
        raise InputError("precoloring is not valid on its colored vertices")
    sees = conflict_sets(g, kind)
    todo = [v for v in range(g.n) if v not in partial]
    residual = []
    for v in todo:
        seen = {partial[w] for w in sees[v] if w in partial}
        residual.append(set(lists[v]) - seen)
    pos = {v: i for i, v in enumerate(todo)}
    sub = Graph(len(todo), ((pos[u], pos[w]) for u in todo for w in sees[u] if w in pos and u < w))
    res = color_with_lists(sub, residual)
    if isinstance(res, Unsat):
        return Unsat(frozenset(todo[i] for i in res.vertices), res.reason)
    out = dict(partial)
    for i, v in enumerate(todo):
        out[v] = res[i]
    return out


def sdr_feasible(lists: Sequence[Collection[int]]) -> tuple[bool, list[int] | None]:
    """Distinct representatives for mutually conflicting vertices, via matching."""
    palette = sorted(set().union(*map(set, lists))) if lists else []
    index = {c: i for i, c in enumerate(palette)}
    doms = []
    for lst in lists:
        m = 0
        for c in lst:
            m |= 1 << index[c]
        doms.append(m)
    match = _match(doms)
    if match is None:
        return False, None
    return True, [palette[i] for i in match]


@dataclass
class ProbeReport:
    kind: str
    k: int
    pool: int
    trials: int
    seed: int
    refutations: int = 0
    first_refutation: list[list[int]] | None = field(default=None)
    unsat_vertices: list[int] | None = field(default=None)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def sampled_choosability(
    g: Graph, kind: ColoringKind, k: int, trials: int, seed: int, pool: int
) -> ProbeReport:
    """Try ``trials`` random k-list assignments drawn from ``range(pool)``."""
    if pool < k:
        raise InputError("pool must be at least k")
    from .conflict import conflict_graph

    cg = conflict_graph(g, kind)
    rng = random.Random(seed)
    report = ProbeReport(kind.value, k, pool, trials, seed)
    for _ in range(trials):
        lists = [sorted(rng.sample(range(pool), k)) for _ in range(g.n)]
        res = color_with_lists(cg, lists)
        if isinstance(res, Unsat):
            report.refutations += 1
            if report.first_refutation is None:
                report.first_refutation = lists
                report.unsat_vertices = sorted(res.vertices)
    return report
