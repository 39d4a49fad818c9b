"""Conflict graphs and validity checks for the three distance-based colorings.

A coloring is a ``dict`` mapping vertex to a nonnegative integer color. In JSON
it is a list indexed by vertex with ``-1`` for uncolored vertices.
"""

from __future__ import annotations

import enum
from typing import Mapping

from .graph import Graph, InputError

Coloring = dict


class ColoringKind(enum.Enum):
    TWO_DISTANCE = "2distance"
    INJECTIVE = "injective"
    EXACT_SQUARE = "exactsquare"

    @classmethod
    def parse(cls, name: str) -> "ColoringKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise InputError(f"unknown coloring kind {name!r}") from None


def common_neighbor_pairs(g: Graph):
    for w in range(g.n):
        nb = sorted(g.adj[w])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                yield a, b


def conflict_sets(g: Graph, kind: ColoringKind) -> list[set[int]]:
    """Per-vertex set of vertices it must differ from."""
    out = [set() for _ in range(g.n)]
    for a, b in common_neighbor_pairs(g):
        out[a].add(b)
        out[b].add(a)
    if kind is ColoringKind.TWO_DISTANCE:
        for v in range(g.n):
            out[v] |= g.adj[v]
    elif kind is ColoringKind.EXACT_SQUARE:
        for v in range(g.n):
            out[v] -= g.adj[v]
    return out


def conflict_graph(g: Graph, kind: ColoringKind) -> Graph:
    sets = conflict_sets(g, kind)
    return Graph(g.n, ((u, v) for u in range(g.n) for v in sets[u] if u < v))


def is_valid(g: Graph, kind: ColoringKind, c: Mapping[int, int]) -> bool:
    if any(c.get(v, -1) < 0 for v in range(g.n)):
        raise InputError("is_valid needs a total coloring")
    return is_valid_partial(g, kind, c)


def is_valid_partial(g: Graph, kind: ColoringKind, c: Mapping[int, int]) -> bool:
    """True if no two colored vertices in conflict share a color."""
    sets = conflict_sets(g, kind)
    for u in range(g.n):
        cu = c.get(u, -1)
        if cu < 0:
            continue
        for v in sets[u]:
            if v > u and c.get(v, -1) == cu:
                return False
    return True


def coloring_to_dict(c: Mapping[int, int], n: int) -> dict:
    return {"colors": [int(c.get(v, -1)) for v in range(n)]}


def coloring_from_dict(d: dict) -> Coloring:
    try:
        return {v: int(x) for v, x in enumerate(d["colors"]) if int(x) >= 0}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad coloring JSON: {exc}") from exc
