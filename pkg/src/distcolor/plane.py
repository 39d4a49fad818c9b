"""Plane graphs stored as rotation systems, with facial walks and incidences.

A dart is an ordered pair ``(u, v)`` for an edge ``uv``. The successor of dart
``(u, v)`` on its face is ``(v, w)`` where ``w`` follows ``u`` in the rotation
at ``v``. Faces are the orbits of this map. An isolated vertex carries one
face with an empty walk, so that Euler's formula holds per component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .graph import Graph, InputError, components, graph_from_dict, graph_to_dict


class EmbeddingError(ValueError):
    """The rotation system does not describe a plane embedding."""


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices in boundary order (tails of the darts)."""
        return tuple(d[0] for d in self.darts)

    def is_simple(self) -> bool:
        w = self.walk
        return len(set(w)) == len(w)


class PlaneGraph:
    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.n:
            raise InputError("rotation must list one cyclic order per vertex")
        rot = []
        for v, order in enumerate(rotation):
            order = tuple(int(x) for x in order)
            if len(order) != len(set(order)) or set(order) != graph.adj[v]:
                raise InputError(f"rotation at {v} is not a permutation of its neighbors")
            rot.append(order)
        self.graph = graph
        self.rotation: tuple[tuple[int, ...], ...] = tuple(rot)
        self._pos = [{w: i for i, w in enumerate(order)} for order in rot]
        self._trace_faces()
        self._check_euler()

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def adj(self):
        return self.graph.adj

    def degree(self, v: int) -> int:
        return len(self.graph.adj[v])

    def next_dart(self, u: int, v: int) -> tuple[int, int]:
        order = self.rotation[v]
        return v, order[(self._pos[v][u] + 1) % len(order)]

    def _trace_faces(self) -> None:
        dart_face: dict[tuple[int, int], int] = {}
        dart_index: dict[tuple[int, int], int] = {}
        faces: list[Face] = []
        iso = {}
        for u in range(self.n):
            if not self.rotation[u]:
                iso[u] = len(faces)
                faces.append(Face(len(faces), ()))
                continue
            for v in self.rotation[u]:
                if (u, v) in dart_face:
                    continue
                fid = len(faces)
                walk = []
                d = (u, v)
                while d not in dart_face:
                    dart_face[d] = fid
                    dart_index[d] = len(walk)
                    walk.append(d)
                    d = self.next_dart(*d)
                faces.append(Face(fid, tuple(walk)))
        self.faces: tuple[Face, ...] = tuple(faces)
        self.dart_face = dart_face
        self.dart_index = dart_index
        self._isolated_face_of = iso

    def _check_euler(self) -> None:
        comp_of = {}
        comps = components(self.graph)
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        face_count = [0] * len(comps)
        for f in self.faces:
            if f.size == 0:
                continue
            face_count[comp_of[f.darts[0][0]]] += 1
        for v in self._isolated_face_of:
            face_count[comp_of[v]] += 1
        for i, comp in enumerate(comps):
            vs = len(comp)
            es = sum(len(self.graph.adj[v]) for v in comp) // 2
            if vs - es + face_count[i] != 2:
                raise EmbeddingError(
                    f"Euler violation on component containing {comp[0]}: "
                    f"V={vs}, E={es}, F={face_count[i]}"
                )

    # -- incidence queries --------------------------------------------------

    def face_of_dart(self, u: int, v: int) -> Face:
        return self.faces[self.dart_face[(u, v)]]

    def incident_faces(self, v: int) -> list[Face]:
        """One entry per corner of ``v``; a vertex repeated on a walk counts each time."""
        if not self.rotation[v]:
            return [self.faces[self._isolated_face_of[v]]]
        return [self.faces[self.dart_face[(v, w)]] for w in self.rotation[v]]

    def edge_faces(self, u: int, v: int) -> tuple[Face, Face]:
        if v not in self.graph.adj[u]:
            raise InputError(f"({u}, {v}) is not an edge")
        return self.faces[self.dart_face[(u, v)]], self.faces[self.dart_face[(v, u)]]

    def across(self, u: int, v: int) -> Face:
        """The face on the other side of dart ``(u, v)``."""
        return self.faces[self.dart_face[(v, u)]]

    def adjacent_faces(self, f: Face) -> list[Face]:
        """One entry per edge of ``f``'s walk."""
        return [self.faces[self.dart_face[(v, u)]] for u, v in f.darts]

    def facial_distance(self, f: Face, u: int, v: int) -> int:
        walk = f.walk
        if walk.count(u) != 1 or walk.count(v) != 1:
            raise InputError("facial distance needs vertices occurring exactly once on the face")
        i, j = walk.index(u), walk.index(v)
        k = len(walk)
        return min((i - j) % k, (j - i) % k)

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, m={self.graph.edge_count}, faces={len(self.faces)})"


def build_plane(graph: Graph, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    return PlaneGraph(graph, rotation)


def faces(pg: PlaneGraph) -> tuple[Face, ...]:
    return pg.faces


def incident_faces(pg: PlaneGraph, v: int) -> list[Face]:
    return pg.incident_faces(v)


def edge_faces(pg: PlaneGraph, e: Sequence[int]) -> tuple[Face, Face]:
    return pg.edge_faces(e[0], e[1])


def adjacent_faces(pg: PlaneGraph, f: Face) -> list[Face]:
    return pg.adjacent_faces(f)


def facial_distance(pg: PlaneGraph, f: Face, u: int, v: int) -> int:
    return pg.facial_distance(f, u, v)


def embed(graph: Graph) -> PlaneGraph:
    """Compute some plane embedding of a planar graph."""
    planar, emb = nx.check_planarity(graph.to_networkx())
    if not planar:
        raise EmbeddingError("graph is not planar")
    rotation = [list(emb.neighbors_cw_order(v)) if graph.adj[v] else [] for v in range(graph.n)]
    return PlaneGraph(graph, rotation)


def from_positions(graph: Graph, pos: Sequence[Sequence[float]]) -> PlaneGraph:
    """Rotation from a straight-line drawing: neighbors sorted by angle."""
    import math

    rotation = []
    for v in range(graph.n):
        x0, y0 = pos[v]
        rotation.append(sorted(graph.adj[v], key=lambda w: math.atan2(pos[w][1] - y0, pos[w][0] - x0)))
    return PlaneGraph(graph, rotation)


def restrict(pg: PlaneGraph, vertices: Sequence[int]) -> tuple[PlaneGraph, list[int]]:
    """Sub-embedding induced on ``vertices`` (relabelled); returns old labels too."""
    old = list(vertices)
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[w]) for u in old for w in pg.adj[u] if w in new and u < w]
    rotation = [[new[w] for w in pg.rotation[u] if w in new] for u in old]
    return PlaneGraph(Graph(len(old), edges), rotation), old


def plane_to_dict(pg: PlaneGraph) -> dict:
    d = graph_to_dict(pg.graph)
    d["rotation"] = [list(r) for r in pg.rotation]
    return d


def plane_from_dict(d: dict) -> PlaneGraph:
    """Build from JSON; without a ``rotation`` key an embedding is computed."""
    g = graph_from_dict(d)
    if "rotation" in d:
        return PlaneGraph(g, d["rotation"])
    return embed(g)
