"""Constructive list coloring by repeated reduction.

Each configuration witness maps to a recipe: a surgery on the plane graph and
a set of vertices to leave uncolored when lifting a coloring of the smaller
graph back. Lifting keeps the inherited colors outside that set and extends
with the exact solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .configs import ConfigWitness, Structure, TheoremId, check_hypotheses, first_witness
from .conflict import Coloring, is_valid, is_valid_partial
from .graph import Graph, InputError, bfs_distances, girth
from .plane import Face, PlaneGraph, plane_to_dict
from .solver import ListAssignment, Unsat, extend_precoloring


@dataclass(frozen=True)
class DeleteVertex:
    v: int


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class AddEdge:
    """New edge uv drawn where the deleted vertex ``via`` used to be."""

    u: int
    v: int
    via: int


Surgery = Union[DeleteVertex, DeleteEdge, AddEdge]


@dataclass(frozen=True)
class ReductionRecipe:
    lemma: str
    surgery: tuple[Surgery, ...]
    uncolored_after: frozenset[int]

    def to_dict(self) -> dict:
        ops = []
        for op in self.surgery:
            if isinstance(op, DeleteVertex):
                ops.append({"op": "DeleteVertex", "v": op.v})
            elif isinstance(op, DeleteEdge):
                ops.append({"op": "DeleteEdge", "u": op.u, "v": op.v})
            else:
                ops.append({"op": "AddEdge", "u": op.u, "v": op.v, "via": op.via})
        return {"lemma": self.lemma, "surgery": ops, "uncolored_after": sorted(self.uncolored_after)}


class GapReport(Exception):
    """A reduction step whose lifted coloring could not be completed."""

    def __init__(self, lemma: str, reason: str, pg: PlaneGraph, lists, recipe: ReductionRecipe | None = None):
        super().__init__(f"{lemma}: {reason}")
        self.lemma = lemma
        self.reason = reason
        self.pg = pg
        self.lists = [sorted(x) for x in lists]
        self.recipe = recipe

    def to_dict(self) -> dict:
        return {
            "gap": True,
            "lemma": self.lemma,
            "reason": self.reason,
            "graph": plane_to_dict(self.pg),
            "lists": self.lists,
            "recipe": self.recipe.to_dict() if self.recipe else None,
        }


# ---------------------------------------------------------------------------
# recipes


def _recipe(lemma, ops, uncolor) -> ReductionRecipe:
    ops = tuple(ops)
    deleted = {op.v for op in ops if isinstance(op, DeleteVertex)}
    return ReductionRecipe(lemma, ops, frozenset(uncolor) | deleted)


def _edge(lemma, u, v, uncolor=None) -> ReductionRecipe:
    return _recipe(lemma, [DeleteEdge(u, v)], {u, v} if uncolor is None else uncolor)


def _vertices(lemma, vs, uncolor) -> ReductionRecipe:
    return _recipe(lemma, [DeleteVertex(v) for v in vs], uncolor)


def _apexes_around(st: Structure, f: Face) -> set[int]:
    """Third vertices of the triangular faces bordering f."""
    out = set()
    for i in range(f.size):
        g = st.other_side(f, i)
        if g.size == 3:
            a, b = f.darts[i]
            out.update(z for z in g.walk if z not in (a, b))
    return out


def _smoothing(lemma: str, pg: PlaneGraph, u: int) -> ReductionRecipe:
    a, b = sorted(pg.adj[u])
    dist = bfs_distances(_without_vertex(pg.graph, u), a, limit=2)
    ops: list[Surgery] = [DeleteVertex(u)]
    if b not in dist:
        ops.append(AddEdge(a, b, via=u))
    return _recipe(lemma, ops, {u})


def _without_vertex(g: Graph, u: int) -> Graph:
    return Graph(g.n, [(a, b) for a, b in g.edges() if u not in (a, b)])


def _shared_four_cycle_edge(lemma: str, pg: PlaneGraph, u: int) -> ReductionRecipe:
    """Delete an edge ux at a 3-vertex u lying on two 4-cycles through ux.

    Only u is uncolored when x keeps a common neighbor with each other
    neighbor of u after the deletion; otherwise x is uncolored as well.
    """
    st = Structure(pg)
    adj = pg.adj
    best = None
    for x in sorted(adj[u]):
        if len(st.four_cycles_through_edge(u, x)) < 2:
            continue
        covered = all((adj[x] & adj[a]) - {u} for a in adj[u] if a != x)
        if covered:
            return _edge(lemma, u, x, {u})
        if best is None:
            best = x
    if best is None:
        raise InputError(f"{lemma}: no edge at {u} lies on two 4-cycles")
    return _edge(lemma, u, best, {u, best})


def _injg3_config1_iv(w: ConfigWitness) -> ReductionRecipe:
    u, v, a, b = w.vertices[:4]
    cyc = w.vertices[4:]
    if len(cyc) == 3:
        outside = [z for z in cyc if z not in (u, v, a, b)]
        y = outside[0] if outside else a
        return _edge(w.lemma, u, y)
    return _edge(w.lemma, u, v)


def _injg3_config2(w: ConfigWitness, pg: PlaneGraph) -> ReductionRecipe:
    """Triangle u1 u2 v1 on edge u1u2 of the 4-cycle u1 u2 u3 u4.

    The recipe separates u2 from u3 and uncolors the vertex set of the most
    elaborate matching sub-pattern.
    """
    a, b, c, y, x = w.vertices
    adj = pg.adj
    best = None
    for u1, u2, v1, u3, u4 in ((a, b, c, y, x), (b, a, c, x, y)):
        s = {u1, u2, u3, u4, v1}
        level = [s]
        for v2 in sorted((adj[u2] & adj[u3]) - s):
            s2 = s | {v2}
            level.append(s2)
            for v3 in sorted((adj[u3] & adj[u4]) - s2):
                s3 = s2 | {v3}
                level.append(s3)
                for ww in sorted((adj[v1] & adj[v3]) - s3):
                    s4 = s3 | {ww}
                    level.append(s4)
                    for xx in sorted((adj[v2] & adj[ww]) - s4):
                        level.append(s4 | {xx})
        deepest = max(level, key=len)
        if best is None or len(deepest) > len(best[1]):
            best = ((u2, u3), deepest)
    (p, q), uncolor = best
    return _edge(w.lemma, p, q, uncolor)


def _injg3_config3(w: ConfigWitness, pg: PlaneGraph) -> ReductionRecipe:
    u, v, ww, x, y, z = w.vertices
    adj = pg.adj
    s = {u, v, ww, x, y, z}
    if (adj[y] & adj[z]) - {x}:
        return _edge(w.lemma, u, x)
    for p, q in ((y, z), (z, y)):
        for s_ in sorted((adj[ww] & adj[q]) - s):
            for t in sorted((adj[ww] & adj[p]) - s - {s_}):
                return _vertices(w.lemma, [x], s | {s_, t})
    return _vertices(w.lemma, [x], s)


def _five_face_labels(st: Structure, f: Face, labels):
    for lab, across in st.five_labelings(f):
        if lab == tuple(labels):
            return across
    raise InputError("witness labels do not match the face")


def _injg3_config6_7(w: ConfigWitness, pg: PlaneGraph, delete) -> ReductionRecipe:
    st = Structure(pg)
    f = pg.faces[w.faces[0]]
    u = w.vertices[:5]
    across = _five_face_labels(st, f, u)
    apex = {}
    for i, j in ((1, 2), (3, 4), (4, 5), (5, 1)):
        t = across(i, j)
        apex[(i, j)] = next((z for z in t.walk if z not in (u[i - 1], u[j - 1])), None)
    rest = w.vertices[5:]
    v2, w2 = rest[0], rest[-1]
    if delete == 4:
        uncolor = set(u) | {apex[(1, 2)], v2, w2, apex[(3, 4)]}
        return _vertices(w.lemma, u[:4], uncolor - {None})
    uncolor = set(u) | {apex[(1, 2)], v2, w2, apex[(3, 4)], apex[(4, 5)], apex[(5, 1)]}
    return _vertices(w.lemma, u, uncolor - {None})


def _injg4_config4(w: ConfigWitness, pg: PlaneGraph) -> ReductionRecipe:
    x, y = w.vertices
    f = pg.faces[w.faces[0]]
    walk = f.walk
    k = len(walk)
    adj = pg.adj
    if y in adj[x]:
        return _edge(w.lemma, x, y)
    for i in range(k):
        for step in (1, -1):
            if walk[i] != x or walk[(i + 2 * step) % k] != y:
                continue
            mid = walk[(i + step) % k]
            for near, far in ((x, walk[(i - step) % k]), (y, walk[(i + 3 * step) % k])):
                for u in sorted(adj[far]):
                    if pg.degree(u) == 2 and u not in (near, mid):
                        return _vertices(w.lemma, [u], {far, mid, near})
            return _edge(w.lemma, x, mid)
    raise InputError(f"{w.lemma}: vertices not at facial distance 2")


def _exact_config4(w: ConfigWitness, pg: PlaneGraph) -> ReductionRecipe:
    cyc, t = w.vertices[:5], w.vertices[5]
    for i in range(5):
        a, b = cyc[i], cyc[(i + 1) % 5]
        if t not in (a, b) and t in pg.adj[a] and t in pg.adj[b]:
            return _edge(w.lemma, a, b, set(cyc))
    raise InputError(f"{w.lemma}: no triangle edge on the cycle")


def recipe_for(w: ConfigWitness, pg: PlaneGraph) -> ReductionRecipe:
    """The surgery and uncolored set for a witness on ``pg``."""
    name = w.lemma
    vs = w.vertices
    rule = name.split(":", 1)[1]

    if rule == "minimumDegree":
        (v,) = vs
        d = pg.degree(v)
        if d <= 1:
            return _vertices(name, [v], {v})
        if w.theorem is TheoremId.TWO_DIST_G4:
            return _smoothing(name, pg, v)
        if w.theorem is TheoremId.INJ_G3:
            return _vertices(name, [v], {v, min(pg.adj[v])})
        raise InputError(f"{name}: unexpected degree {d}")

    t = w.theorem
    if t is TheoremId.TWO_DIST_G4:
        if rule == "config1:i":
            return _shared_four_cycle_edge(name, pg, vs[0])
        if rule in ("config1:ii", "config1:iii"):
            return _edge(name, vs[0], vs[1])
        if rule == "config2i":
            return _vertices(name, [vs[3], vs[4]], set(vs))
        if rule == "config2ii":
            return _vertices(name, [vs[0], vs[4]], set(vs))

    if t is TheoremId.INJ_G3:
        if rule in ("config1:i", "config1:ii", "config1:iii"):
            return _edge(name, vs[0], vs[1])
        if rule == "config1:iv":
            return _injg3_config1_iv(w)
        if rule == "config2":
            return _injg3_config2(w, pg)
        if rule == "config3":
            return _injg3_config3(w, pg)
        if rule in ("config9", "config4", "config5"):
            st = Structure(pg)
            f = pg.faces[w.faces[0]]
            extra = set(vs[5:]) | _apexes_around(st, f)
            return _vertices(name, vs[:5], set(vs[:5]) | extra)
        if rule == "config6":
            return _injg3_config6_7(w, pg, 4)
        if rule == "config7":
            return _injg3_config6_7(w, pg, 5)

    if t is TheoremId.INJ_G4:
        if rule == "counting":
            u, v = vs
            return _vertices(name, [v], {u, v})
        if rule == "config1:i":
            return _edge(name, vs[0], vs[1])
        if rule in ("config1:ii", "config1:iii", "config1:vi"):
            return _vertices(name, [vs[1]], {vs[0], vs[1]})
        if rule == "config1:iv":
            return _vertices(name, [vs[0]], {vs[0]})
        if rule == "config1:v":
            return _shared_four_cycle_edge(name, pg, vs[0])
        if rule == "config3:a":
            v1, v2, v3 = vs[:3]
            others = {z for z in vs[5:] if pg.degree(z) <= 3}
            return _vertices(name, [v3], {v1, v2} | others)
        if rule == "config3:b":
            return _vertices(name, [vs[2]], set(vs))
        if rule == "config4":
            return _injg4_config4(w, pg)

    if t is TheoremId.EXACT:
        if rule in ("counting:a", "config1:i", "config1:ii", "config1:iii", "config1:vi"):
            return _edge(name, vs[0], vs[1])
        if rule == "counting:b":
            return _edge(name, vs[0], vs[1], set(vs))
        if rule == "config1:iv":
            return _edge(name, vs[1], vs[0])
        if rule == "config1:v":
            return _edge(name, vs[1], vs[0])
        if rule == "config1:vii":
            return _shared_four_cycle_edge(name, pg, vs[0])
        if rule == "config2":
            return _edge(name, vs[0], vs[1])
        if rule == "config3":
            return _vertices(name, [vs[0]], set(vs))
        if rule == "config4":
            return _exact_config4(w, pg)

    raise RuntimeError(f"no recipe for lemma {name!r}")


# ---------------------------------------------------------------------------
# surgery


def apply_recipe(pg: PlaneGraph, recipe: ReductionRecipe) -> tuple[PlaneGraph, list[int]]:
    """Perform the surgery; returns the smaller plane graph and its old labels.

    Rotations are inherited: deletions drop entries, and an added edge takes
    the place of the deleted vertex it replaces in both endpoint rotations.
    """
    rot = {v: list(pg.rotation[v]) for v in range(pg.n)}
    gone = set()
    for op in recipe.surgery:
        if isinstance(op, DeleteEdge):
            if op.v not in pg.adj[op.u]:
                raise InputError(f"{recipe.lemma}: ({op.u}, {op.v}) is not an edge")
            rot[op.u] = [x for x in rot[op.u] if x != op.v]
            rot[op.v] = [x for x in rot[op.v] if x != op.u]
        elif isinstance(op, DeleteVertex):
            for w in rot[op.v]:
                if isinstance(w, tuple):
                    continue
                rot[w] = [("gone", op.v) if x == op.v else x for x in rot[w]]
            rot[op.v] = []
            gone.add(op.v)
        else:
            mark = ("gone", op.via)
            for a, b in ((op.u, op.v), (op.v, op.u)):
                if mark not in rot[a]:
                    raise InputError(f"{recipe.lemma}: {a} was not next to {op.via}")
                rot[a] = [b if x == mark else x for x in rot[a]]
    old = [v for v in range(pg.n) if v not in gone]
    new = {v: i for i, v in enumerate(old)}
    rotation = [[new[x] for x in rot[v] if not isinstance(x, tuple)] for v in old]
    edges = [(new[v], x) for v in old for x in rotation[new[v]] if new[v] < x]
    return PlaneGraph(Graph(len(old), edges), rotation), old


def _check_preserved(pg: PlaneGraph, t: TheoremId, lemma: str) -> None:
    if pg.graph.max_degree() > 4 or girth(pg.graph) < t.min_girth:
        raise RuntimeError(f"surgery for {lemma} broke the degree or girth bound")


# ---------------------------------------------------------------------------


@dataclass
class _Step:
    pg: PlaneGraph
    lists: list
    recipe: ReductionRecipe
    old: list[int] = field(default_factory=list)


def _require_lists(pg: PlaneGraph, t: TheoremId, lists: ListAssignment) -> list[frozenset]:
    if len(lists) != pg.n:
        raise InputError("lists must cover every vertex")
    out = [frozenset(x) for x in lists]
    short = [v for v, x in enumerate(out) if len(x) < t.list_size]
    if short:
        raise InputError(f"lists at {short[:5]} are smaller than {t.list_size}")
    return out


def color_constructive(
    pg: PlaneGraph, t: TheoremId, lists: ListAssignment, trace: list | None = None
) -> Coloring:
    """Color ``pg`` from ``lists`` by reducing along detected configurations.

    Raises :class:`GapReport` if some lifted coloring cannot be completed.
    If ``trace`` is given, the applied recipes are appended to it.
    """
    check_hypotheses(pg, t, require_connected=False)
    lists = _require_lists(pg, t, lists)
    kind = t.kind

    stack: list[_Step] = []
    cur, cur_lists = pg, lists
    while cur.n > 1:
        w = first_witness(cur, t, check=False)
        if w is None:
            raise GapReport("none", "no configuration found", cur, cur_lists)
        recipe = recipe_for(w, cur)
        smaller, old = apply_recipe(cur, recipe)
        _check_preserved(smaller, t, w.lemma)
        if trace is not None:
            trace.append(recipe)
        stack.append(_Step(cur, cur_lists, recipe, old))
        cur, cur_lists = smaller, [cur_lists[v] for v in old]

    coloring: Coloring = {0: min(cur_lists[0])} if cur.n == 1 else {}
    while stack:
        step = stack.pop()
        g = step.pg.graph
        partial = {old: coloring[i] for i, old in enumerate(step.old) if old not in step.recipe.uncolored_after}
        if not is_valid_partial(g, kind, partial):
            raise GapReport(step.recipe.lemma, "inherited coloring conflicts after undoing the surgery",
                            step.pg, step.lists, step.recipe)
        res = extend_precoloring(g, kind, partial, step.lists)
        if isinstance(res, Unsat):
            raise GapReport(step.recipe.lemma, f"extension failed on {sorted(res.vertices)}",
                            step.pg, step.lists, step.recipe)
        coloring = res
    if not is_valid(pg.graph, kind, coloring):
        raise RuntimeError("constructive coloring is invalid")
    return coloring
