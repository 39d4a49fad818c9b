"""Detectors for the reducible configurations of the four coloring theorems.

Each theorem has an ordered list of lemma detectors. A detector yields
``(vertices, faces)`` tuples; :func:`detect_all` wraps them into
:class:`ConfigWitness` objects, deduplicated and sorted.

Conventions used throughout:

* "k-cycle" is a simple cycle of the graph; "k-face" is a face whose walk has
  k darts. Two faces (or a face and a cycle) are adjacent when they share an
  edge, counted once per shared edge.
* Labelled 5-face patterns are matched under every rotation and reflection of
  the walk, by walk position.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from .conflict import ColoringKind
from .graph import InputError, exact_two_degree, girth, is_connected
from .plane import Face, PlaneGraph


class TheoremId(enum.Enum):
    TWO_DIST_G4 = "2dg4"
    INJ_G3 = "injg3"
    INJ_G4 = "injg4"
    EXACT = "exact"

    @classmethod
    def parse(cls, name: str) -> "TheoremId":
        try:
            return cls(name.lower())
        except ValueError:
            raise InputError(f"unknown theorem {name!r}") from None

    @property
    def kind(self) -> ColoringKind:
        return {
            "2dg4": ColoringKind.TWO_DISTANCE,
            "injg3": ColoringKind.INJECTIVE,
            "injg4": ColoringKind.INJECTIVE,
            "exact": ColoringKind.EXACT_SQUARE,
        }[self.value]

    @property
    def min_girth(self) -> int:
        return 4 if self in (TheoremId.TWO_DIST_G4, TheoremId.INJ_G4) else 3

    @property
    def list_size(self) -> int:
        """Guaranteed list size for maximum degree 4."""
        return {"2dg4": 11, "injg3": 11, "injg4": 9, "exact": 10}[self.value]


class FaceClass(enum.Enum):
    BAD = "bad"
    GOOD = "good"
    NOT_APPLICABLE = "n/a"


class VertexClass(enum.Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"
    NOT_THREE_MINUS = "4+"
    UNCLASSIFIED = "1-"


@dataclass(frozen=True, order=True)
class ConfigWitness:
    theorem: TheoremId
    lemma: str
    vertices: tuple[int, ...]
    faces: tuple[int, ...] = ()

    def to_dict(self, pg: PlaneGraph | None = None) -> dict:
        faces = [list(pg.faces[f].walk) for f in self.faces] if pg is not None else list(self.faces)
        return {
            "theorem": self.theorem.value,
            "lemma": self.lemma,
            "vertices": list(self.vertices),
            "faces": faces,
        }


def check_hypotheses(pg: PlaneGraph, t: TheoremId, require_connected: bool = True) -> None:
    if require_connected and not is_connected(pg.graph):
        raise InputError("hypothesis failed: graph must be connected")
    if pg.graph.max_degree() > 4:
        raise InputError("hypothesis failed: maximum degree must be at most 4")
    if girth(pg.graph) < t.min_girth:
        raise InputError(f"hypothesis failed: girth must be at least {t.min_girth}")


def canonical_cycle(cyc) -> tuple[int, ...]:
    """Rotate and reflect a cyclic vertex sequence to its smallest form."""
    k = len(cyc)
    best = None
    for seq in (tuple(cyc), tuple(reversed(cyc))):
        for s in range(k):
            cand = seq[s:] + seq[:s]
            if best is None or cand < best:
                best = cand
    return best


class Structure:
    """Cached local structure of a plane graph shared by all detectors."""

    def __init__(self, pg: PlaneGraph):
        self.pg = pg
        self.adj = pg.graph.adj
        self.deg = [len(a) for a in self.adj]
        self.fsize = [f.size for f in pg.faces]

    # -- cycles -----------------------------------------------------------

    def apexes(self, a: int, b: int) -> frozenset[int]:
        """Third vertices of triangles on edge ab."""
        return self.adj[a] & self.adj[b]

    @cached_property
    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for a in range(self.pg.n):
            for b in self.adj[a]:
                if b > a:
                    for c in self.apexes(a, b):
                        if c > b:
                            out.append((a, b, c))
        return out

    def triangles_at(self, u: int) -> list[tuple[int, int, int]]:
        return [t for t in self.triangles if u in t]

    def four_cycles_at(self, u: int) -> list[tuple[int, ...]]:
        out = set()
        for x, a in combinations(sorted(self.adj[u]), 2):
            for p in (self.adj[x] & self.adj[a]) - {u}:
                out.add(canonical_cycle((u, x, p, a)))
        return sorted(out)

    def four_cycles_through_edge(self, a: int, b: int) -> list[tuple[int, ...]]:
        """4-cycles a-b-y-x, reported as (a, b, y, x)."""
        out = []
        for y in self.adj[b] - {a}:
            for x in (self.adj[a] & self.adj[y]) - {b}:
                out.append((a, b, y, x))
        return out

    @cached_property
    def four_cycles(self) -> list[tuple[int, ...]]:
        out = set()
        for u in range(self.pg.n):
            out.update(self.four_cycles_at(u))
        return sorted(out)

    # -- faces ------------------------------------------------------------

    def other_side(self, f: Face, i: int) -> Face:
        """Face across the i-th dart of f's walk."""
        u, v = f.darts[i]
        return self.pg.faces[self.pg.dart_face[(v, u)]]

    def five_labelings(self, f: Face) -> Iterator[tuple[tuple[int, ...], Callable[[int, int], Face]]]:
        """All labelings u1..u5 of a 5-face walk, with an edge-to-across-face map.

        ``across(i, j)`` gives the face on the other side of the edge joining
        labels i and j (1-based, consecutive).
        """
        walk = f.walk
        darts = f.darts
        for s in range(5):
            for step in (1, -1):
                pos = [(s + step * k) % 5 for k in range(5)]
                labels = tuple(walk[p] for p in pos)

                def across(i, j, pos=pos, step=step):
                    pi, pj = pos[i - 1], pos[j - 1]
                    # dart index of the walk edge between positions pi and pj
                    d = pi if (pi + 1) % 5 == pj else pj
                    u, v = darts[d]
                    return self.pg.faces[self.pg.dart_face[(v, u)]]

                yield labels, across

    @cached_property
    def faces_at(self) -> list[list[Face]]:
        return [self.pg.incident_faces(v) for v in range(self.pg.n)]

    def on_face_size(self, v: int, size: int) -> bool:
        return any(f.size == size for f in self.faces_at[v])

    def triangle_faces_adjacent(self, f: Face) -> int:
        return sum(1 for i in range(f.size) if self.other_side(f, i).size == 3)

    # -- bad faces and vertex classes --------------------------------------

    def bad_injg3(self, f: Face) -> bool:
        return f.size == 5 and self.triangle_faces_adjacent(f) >= 4

    def bad_injg4(self, f: Face) -> bool:
        if f.size != 5:
            return False
        ds = {self.deg[v] for v in f.walk}
        return 2 in ds and 3 in ds

    @cached_property
    def vclass(self) -> list[VertexClass]:
        out = []
        for v in range(self.pg.n):
            d = self.deg[v]
            if d >= 4:
                out.append(VertexClass.NOT_THREE_MINUS)
            elif d <= 1:
                out.append(VertexClass.UNCLASSIFIED)
            elif d == 2:
                out.append(VertexClass.SMALL)
            else:
                bad = any(self.bad_injg4(f) for f in self.faces_at[v])
                four = self.on_face_size(v, 4)
                if bad and four:
                    out.append(VertexClass.SMALL)
                elif bad or four:
                    out.append(VertexClass.MEDIUM)
                else:
                    out.append(VertexClass.LARGE)
        return out


def classify_face(pg: PlaneGraph, f: Face, t: TheoremId, st: Structure | None = None) -> FaceClass:
    if t not in (TheoremId.INJ_G3, TheoremId.INJ_G4):
        raise InputError("face classes are defined for injg3 and injg4 only")
    st = st or Structure(pg)
    if f.size < 5:
        return FaceClass.NOT_APPLICABLE
    bad = st.bad_injg3(f) if t is TheoremId.INJ_G3 else st.bad_injg4(f)
    return FaceClass.BAD if bad else FaceClass.GOOD


def classify_vertex(pg: PlaneGraph, v: int, st: Structure | None = None) -> VertexClass:
    st = st or Structure(pg)
    return st.vclass[v]


# ---------------------------------------------------------------------------
# shared detectors

def _min_degree(limit: int):
    def detect(st: Structure):
        for v in range(st.pg.n):
            if st.deg[v] <= limit:
                yield (v,), ()
    return detect


def _three_vertex_two_four_cycles(st: Structure):
    """A 3-vertex on two distinct 4-cycles; reported per edge shared by two of them."""
    for u in range(st.pg.n):
        if st.deg[u] != 3:
            continue
        cycles = st.four_cycles_at(u)
        if len(cycles) < 2:
            continue
        for w in sorted(st.adj[u]):
            through = [c for c in cycles if _cycle_has_edge(c, u, w)]
            if len(through) >= 2:
                yield (u, w), ()


def _cycle_has_edge(cyc, a, b) -> bool:
    k = len(cyc)
    for i in range(k):
        x, y = cyc[i], cyc[(i + 1) % k]
        if (x, y) == (a, b) or (x, y) == (b, a):
            return True
    return False


def _adjacent_small(limit: int):
    """Two adjacent vertices of degree at most ``limit``."""
    def detect(st: Structure):
        for u, v in st.pg.graph.edges():
            if st.deg[u] <= limit and st.deg[v] <= limit:
                yield (u, v), ()
    return detect


# ---------------------------------------------------------------------------
# 2-distance, girth at least 4

def _2dg4_config1_ii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] == 3 and st.four_cycles_at(u):
            for v in sorted(st.adj[u]):
                if st.deg[v] == 3:
                    yield (u, v), ()


def _2dg4_config1_iii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] != 3:
            continue
        threes = sorted(v for v in st.adj[u] if st.deg[v] == 3)
        for v, w in combinations(threes, 2):
            yield (u, v, w), ()


def _five_face_pattern_2dg4(st: Structure, labels, across) -> bool:
    """d(v1)=d(v3)=d(v5)=3 and the face across v2v3 is a 4-face."""
    v1, _, v3, _, v5 = labels
    return st.deg[v1] == st.deg[v3] == st.deg[v5] == 3 and across(2, 3).size == 4


def _walk_from(f: Face, a: int, b: int) -> tuple[int, ...] | None:
    """f's walk read from a towards b, or None if ab is not a walk edge."""
    walk = f.walk
    k = len(walk)
    for i in range(k):
        for step in (1, -1):
            if walk[i] == a and walk[(i + step) % k] == b:
                return tuple(walk[(i + step * j) % k] for j in range(k))
    return None


def _relabel_from_edge(f: Face, a: int, b: int, start_label: int):
    """Labels 1..5 of a 5-face walk where a gets ``start_label`` and b the next label.

    Returns a tuple indexed 1..5 (position 0 unused) or None if a, b are not
    consecutive on the walk.
    """
    seq = _walk_from(f, a, b)
    if seq is None or len(seq) != 5:
        return None
    out = [None] * 6
    for j in range(5):
        out[(start_label - 1 + j) % 5 + 1] = seq[j]
    return tuple(out)


def _2dg4_config2i(st: Structure):
    for f in st.pg.faces:
        if f.size != 5:
            continue
        for labels, across in st.five_labelings(f):
            if not _five_face_pattern_2dg4(st, labels, across):
                continue
            v1, v2, v3, v4, v5 = labels
            g = across(4, 5)
            if g.size != 5 or g.id == f.id:
                continue
            lab = _relabel_from_edge(g, v4, v5, 4)
            if lab is None:
                continue
            _, w1, w2, w3, w4, w5 = lab
            if st.deg[w2] == st.deg[w3] == st.deg[w5] == 3:
                yield (v1, v2, v3, v4, v5, w1, w2, w3), (f.id, g.id)


def _2dg4_config2ii(st: Structure):
    seen = set()
    for f in st.pg.faces:
        if f.size != 5:
            continue
        for labels, across in st.five_labelings(f):
            if not _five_face_pattern_2dg4(st, labels, across):
                continue
            v1, v2, v3, v4, v5 = labels
            g = across(5, 1)
            if g.size != 5 or g.id == f.id:
                continue
            lab = _relabel_from_edge(g, v5, v1, 5)
            if lab is None:
                continue
            _, w1, w2, w3, w4, w5 = lab
            if st.deg[w1] == st.deg[w3] == st.deg[w5] == 3 and _across_labels(st, g, w2, w3).size == 4:
                mine = (v1, v2, v3, v4, v5, w2, w3, w4)
                other = (v1, w2, w3, w4, v5, v2, v3, v4)
                key = min((mine, (f.id, g.id)), (other, (g.id, f.id)))
                if key not in seen:
                    seen.add(key)
                    yield key


def _across_labels(st: Structure, f: Face, a: int, b: int) -> Face:
    for i, (x, y) in enumerate(f.darts):
        if {x, y} == {a, b}:
            return st.other_side(f, i)
    raise KeyError((a, b))


# ---------------------------------------------------------------------------
# injective, any girth

def _injg3_config1_ii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] != 3:
            continue
        for v in sorted(st.adj[u]):
            if st.apexes(u, v) or st.four_cycles_through_edge(u, v):
                yield (u, v), ()


def _adjacent_triangle_pairs(st: Structure):
    """Pairs of triangles uvw, uvx on a common edge uv; yields (u, v, w, x), w < x."""
    for u, v in st.pg.graph.edges():
        for w, x in combinations(sorted(st.apexes(u, v)), 2):
            yield u, v, w, x


def _injg3_config1_iii(st: Structure):
    out = set()
    for u, v, w, x in _adjacent_triangle_pairs(st):
        s = {u, v, w, x}
        for z in (u, v, w, x):
            for y in st.adj[z]:
                if y not in s and st.deg[y] == 3:
                    out.add((y, z, u, v, w, x))
    for t in sorted(out):
        yield t, ()


def _injg3_config1_iv(st: Structure):
    out = set()
    for a, b, w, x in _adjacent_triangle_pairs(st):
        for u, v in ((a, b), (b, a)):
            if st.deg[u] != 4:
                continue
            base = {frozenset((u, v, w)), frozenset((u, v, x))}
            for tri in st.triangles_at(u):
                if frozenset(tri) not in base:
                    out.add((u, v, w, x) + canonical_cycle(tri))
            skip = canonical_cycle((u, w, v, x))
            for cyc in st.four_cycles_at(u):
                if cyc != skip:
                    out.add((u, v, w, x) + cyc)
    for t in sorted(out):
        yield t, ()


def _injg3_config2(st: Structure):
    out = set()
    for tri in st.triangles:
        for a, b in combinations(tri, 2):
            c = next(z for z in tri if z not in (a, b))
            for p, q in ((a, b), (b, a)):
                for _, _, y, x in st.four_cycles_through_edge(p, q):
                    if c not in (x, y):
                        out.add((p, q, c, y, x))
    for t in sorted(out):
        mirror = (t[1], t[0], t[2], t[4], t[3])
        if t <= mirror:
            yield t, ()


def _injg3_config3(st: Structure):
    out = set()
    for a, b, p, q in _adjacent_triangle_pairs(st):
        u, v = a, b
        for w, x in ((p, q), (q, p)):
            for tri in st.triangles_at(x):
                rest = [z for z in tri if z != x]
                if all(z not in (u, v, w) for z in rest):
                    out.add((u, v, w, x, min(rest), max(rest)))
    for t in sorted(out):
        yield t, ()


def _canonical_walk(f: Face) -> tuple[int, ...]:
    return canonical_cycle(f.walk)


def _injg3_config9(st: Structure):
    out = set()
    for f in st.pg.faces:
        if f.size != 5:
            continue
        for labels, across in st.five_labelings(f):
            u1, u2, u3, u4, u5 = labels
            t1 = across(4, 5)
            if t1.size != 3:
                continue
            v4 = next((z for z in t1.walk if z not in (u4, u5)), None)
            if v4 is None:
                continue
            t2 = _across_labels(st, t1, u5, v4)
            if t2.size != 3 or t2.id == t1.id:
                continue
            w = next((z for z in t2.walk if z not in (u5, v4)), None)
            if w is None:
                continue
            others = sum(1 for i, j in ((1, 2), (2, 3), (3, 4), (5, 1)) if across(i, j).size == 3)
            if others >= 2:
                out.add(((u1, u2, u3, u4, u5, v4, w), (f.id, t1.id, t2.id)))
    yield from sorted(out)


def _injg3_config4(st: Structure):
    for f in st.pg.faces:
        if f.size == 5 and any(st.deg[v] == 3 for v in f.walk) and st.triangle_faces_adjacent(f) >= 3:
            yield _canonical_walk(f), (f.id,)


def _injg3_config5(st: Structure):
    for f in st.pg.faces:
        if f.size == 5 and st.triangle_faces_adjacent(f) == 5:
            yield _canonical_walk(f), (f.id,)


def _bad_with_neighbor_face(size: int):
    """A bad 5-face u1..u5 whose edge u2u3 borders a face of the given size.

    The other face's remaining vertices follow, starting next to u2.
    """
    def detect(st: Structure):
        out = set()
        for f in st.pg.faces:
            if not st.bad_injg3(f):
                continue
            for labels, across in st.five_labelings(f):
                g = across(2, 3)
                if g.size != size or g.id == f.id:
                    continue
                u1, u2, u3, u4, u5 = labels
                seq = _walk_from(g, u3, u2)
                if seq is None:
                    continue
                extra = seq[2:]
                out.add(((u1, u2, u3, u4, u5) + extra, (f.id, g.id)))
        yield from sorted(out)
    return detect


# ---------------------------------------------------------------------------
# injective, girth at least 4

def _injg4_counting(st: Structure):
    g = st.pg.graph
    for u in range(g.n):
        if st.deg[u] == 4 and exact_two_degree(g, u) <= 8:
            for v in sorted(st.adj[u]):
                if st.deg[v] == 2:
                    yield (u, v), ()


def _injg4_config1_ii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] == 4:
            twos = sorted(v for v in st.adj[u] if st.deg[v] == 2)
            for a, b in combinations(twos, 2):
                yield (u, a, b), ()


def _injg4_config1_iii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] != 4:
            continue
        twos = sorted(v for v in st.adj[u] if st.deg[v] == 2)
        threes = sorted(v for v in st.adj[u] if st.deg[v] == 3)
        for a in twos:
            for b, c in combinations(threes, 2):
                yield (u, a, b, c), ()


def _two_vertex_on_four_cycle(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] == 2:
            for cyc in st.four_cycles_at(u):
                i = cyc.index(u)
                yield cyc[i:] + cyc[:i], ()


def _injg4_config1_vi(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] != 4:
            continue
        twos = sorted(v for v in st.adj[u] if st.deg[v] == 2)
        for v in sorted(st.adj[u]):
            if st.deg[v] == 3 and st.four_cycles_through_edge(u, v):
                for a in twos:
                    yield (u, a, v), ()


def _bad_labelings_injg4(st: Structure, f: Face):
    for labels, across in st.five_labelings(f):
        if st.deg[labels[0]] == 3 and st.deg[labels[2]] == 2:
            yield labels, across


def _injg4_config3(which: str):
    def detect(st: Structure):
        out = set()
        for f in st.pg.faces:
            if not st.bad_injg4(f):
                continue
            for labels, across in _bad_labelings_injg4(st, f):
                v1, v2, v3, v4, v5 = labels
                if which == "a":
                    g = across(1, 2)
                    if g.size != 5 or g.id == f.id:
                        continue
                    lab = _relabel_from_edge(g, v1, v2, 1)
                    if lab is None:
                        continue
                    rest = (lab[3], lab[4], lab[5])
                    hit = any(st.deg[z] <= 3 for z in rest + (lab[2],) if z != v1)
                else:
                    g = across(5, 1)
                    if g.size != 5 or g.id == f.id:
                        continue
                    lab = _relabel_from_edge(g, v1, v5, 1)
                    if lab is None:
                        continue
                    # lab runs v1, v5, ...; relabel so that v'5 = v5
                    rest = (lab[5], lab[4], lab[3])
                    hit = any(st.vclass[z] is VertexClass.SMALL for z in rest + (lab[2],) if z != v1)
                if hit:
                    out.add(((v1, v2, v3, v4, v5) + rest, (f.id, g.id)))
        yield from sorted(out)
    return detect


def _injg4_config4(st: Structure):
    out = set()
    small = [c is VertexClass.SMALL for c in st.vclass]
    for f in st.pg.faces:
        if f.size < 6:
            continue
        walk = f.walk
        k = len(walk)
        for i in range(k):
            x = walk[i]
            if not small[x]:
                continue
            for step in (1, 2):
                y = walk[(i + step) % k]
                if y != x and small[y]:
                    out.add(((min(x, y), max(x, y)), (f.id,)))
    yield from sorted(out)


# ---------------------------------------------------------------------------
# exact square, any girth

def _exact_counting_a(st: Structure):
    g = st.pg.graph
    for u in range(g.n):
        if st.deg[u] <= 4 and exact_two_degree(g, u) <= 9:
            for v in sorted(st.adj[u]):
                if st.deg[v] <= 3:
                    yield (u, v), ()


def _exact_counting_b(st: Structure):
    from .graph import exact_two_neighborhood

    g = st.pg.graph
    for u in range(g.n):
        if st.deg[u] > 4:
            continue
        twos = sorted(v for v in st.adj[u] if st.deg[v] == 2)
        if not twos:
            continue
        far = sorted(w for w in exact_two_neighborhood(g, u) if st.deg[w] <= 3)
        for v in twos:
            for w in far:
                yield (u, v, w), ()


def _exact_config1_ii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] != 4:
            continue
        for a in sorted(st.adj[u]):
            if st.deg[a] != 2:
                continue
            for b in sorted(st.adj[u]):
                if b != a and st.deg[b] <= 3:
                    yield (u, a, b), ()


def _exact_config1_iii(st: Structure):
    for u in range(st.pg.n):
        if st.deg[u] == 4:
            threes = sorted(v for v in st.adj[u] if st.deg[v] == 3)
            for trio in combinations(threes, 3):
                yield (u,) + trio, ()


def _exact_config1_iv(st: Structure):
    for tri in st.triangles:
        for u in tri:
            if st.deg[u] <= 3:
                a, b = sorted(z for z in tri if z != u)
                yield (u, a, b), ()


def _exact_config1_v(st: Structure):
    out = set()
    for tri in st.triangles:
        for z in tri:
            for y in st.adj[z]:
                if y not in tri and st.deg[y] <= 3:
                    out.add((y, z) + tri)
    for t in sorted(out):
        yield t, ()


def _exact_config2(st: Structure):
    out = set()
    for tri in st.triangles:
        for u, v in combinations(tri, 2):
            w = next(z for z in tri if z not in (u, v))
            for x in st.apexes(u, v):
                if x != w:
                    out.add((u, v, w, x))
            for p, q in ((u, v), (v, u)):
                for _, _, y, x in st.four_cycles_through_edge(p, q):
                    if w not in (x, y):
                        out.add((p, q, w, y, x) if p < q else (q, p, w, x, y))
    for t in sorted(out):
        yield t, ()


def _exact_config3(st: Structure):
    out = set()
    for u in range(st.pg.n):
        tris = st.triangles_at(u)
        for t1, t2 in combinations(tris, 2):
            if set(t1) & set(t2) == {u}:
                p = tuple(sorted(z for z in t1 if z != u))
                q = tuple(sorted(z for z in t2 if z != u))
                out.add((u,) + min(p, q) + max(p, q))
    for t in sorted(out):
        yield t, ()


def five_cycles_at_two_vertex(st: Structure, u1: int):
    """5-cycles u1..u5 through a 2-vertex u1, oriented so that u2 < u5."""
    a, b = sorted(st.adj[u1])
    for u2, u5 in ((a, b), (b, a)):
        for u3 in st.adj[u2] - {u1, u5}:
            for u4 in (st.adj[u3] & st.adj[u5]) - {u1, u2}:
                cyc = (u1, u2, u3, u4, u5)
                if u2 < u5:
                    yield cyc


def _exact_config4(st: Structure):
    out = set()
    for u1 in range(st.pg.n):
        if st.deg[u1] != 2:
            continue
        for cyc in five_cycles_at_two_vertex(st, u1):
            for i in range(5):
                a, b = cyc[i], cyc[(i + 1) % 5]
                for t in st.apexes(a, b):
                    out.add(cyc + (t,))
    for t in sorted(out):
        yield t, ()


# ---------------------------------------------------------------------------

LEMMAS: dict[TheoremId, list[tuple[str, Callable]]] = {
    TheoremId.TWO_DIST_G4: [
        ("2dg4:minimumDegree", _min_degree(2)),
        ("2dg4:config1:i", _three_vertex_two_four_cycles),
        ("2dg4:config1:ii", _2dg4_config1_ii),
        ("2dg4:config1:iii", _2dg4_config1_iii),
        ("2dg4:config2i", _2dg4_config2i),
        ("2dg4:config2ii", _2dg4_config2ii),
    ],
    TheoremId.INJ_G3: [
        ("injg3:minimumDegree", _min_degree(2)),
        ("injg3:config1:i", _adjacent_small(3)),
        ("injg3:config1:ii", _injg3_config1_ii),
        ("injg3:config1:iii", _injg3_config1_iii),
        ("injg3:config1:iv", _injg3_config1_iv),
        ("injg3:config2", _injg3_config2),
        ("injg3:config3", _injg3_config3),
        ("injg3:config9", _injg3_config9),
        ("injg3:config4", _injg3_config4),
        ("injg3:config5", _injg3_config5),
        ("injg3:config6", _bad_with_neighbor_face(4)),
        ("injg3:config7", _bad_with_neighbor_face(5)),
    ],
    TheoremId.INJ_G4: [
        ("injg4:minimumDegree", _min_degree(1)),
        ("injg4:counting", _injg4_counting),
        ("injg4:config1:i", _adjacent_small(3)),
        ("injg4:config1:ii", _injg4_config1_ii),
        ("injg4:config1:iii", _injg4_config1_iii),
        ("injg4:config1:iv", _two_vertex_on_four_cycle),
        ("injg4:config1:v", _three_vertex_two_four_cycles),
        ("injg4:config1:vi", _injg4_config1_vi),
        ("injg4:config3:a", _injg4_config3("a")),
        ("injg4:config3:b", _injg4_config3("b")),
        ("injg4:config4", _injg4_config4),
    ],
    TheoremId.EXACT: [
        ("exact:minimumDegree", _min_degree(1)),
        ("exact:counting:a", _exact_counting_a),
        ("exact:counting:b", _exact_counting_b),
        ("exact:config1:i", _adjacent_small(3)),
        ("exact:config1:ii", _exact_config1_ii),
        ("exact:config1:iii", _exact_config1_iii),
        ("exact:config1:iv", _exact_config1_iv),
        ("exact:config1:v", _exact_config1_v),
        ("exact:config1:vi", _two_vertex_on_four_cycle),
        ("exact:config1:vii", _three_vertex_two_four_cycles),
        ("exact:config2", _exact_config2),
        ("exact:config3", _exact_config3),
        ("exact:config4", _exact_config4),
    ],
}


def lemma_ids(t: TheoremId) -> list[str]:
    return [name for name, _ in LEMMAS[t]]


def _witnesses(st: Structure, t: TheoremId, name: str, fn) -> list[ConfigWitness]:
    found = {(tuple(vs), tuple(fs)) for vs, fs in fn(st)}
    return [ConfigWitness(t, name, vs, fs) for vs, fs in sorted(found)]


def detect_all(pg: PlaneGraph, t: TheoremId, check: bool = True) -> list[ConfigWitness]:
    if check:
        check_hypotheses(pg, t)
    st = Structure(pg)
    out = []
    for name, fn in LEMMAS[t]:
        out.extend(_witnesses(st, t, name, fn))
    return out


def first_witness(pg: PlaneGraph, t: TheoremId, check: bool = True) -> ConfigWitness | None:
    """The first witness in lemma order, then lexicographic order."""
    if check:
        check_hypotheses(pg, t)
    st = Structure(pg)
    for name, fn in LEMMAS[t]:
        ws = _witnesses(st, t, name, fn)
        if ws:
            return ws[0]
    return None
