"""Small hand-drawn plane graphs used across tests."""

import math

from distcolor.graph import Graph
from distcolor.plane import from_positions


def ring(k, r, phase=0.0):
    return [(r * math.cos(phase + 2 * math.pi * i / k), r * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def pentagon_with_caps(caps):
    """A pentagon 0..4 drawn inside, with a triangle cap outside each edge
    i -> i+1 listed in ``caps``. Cap vertices are numbered from 5."""
    pos = ring(5, 1.0)
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for j, i in enumerate(caps):
        t = 5 + j
        ang = 2 * math.pi * (i + 0.5) / 5
        pos.append((2 * math.cos(ang), 2 * math.sin(ang)))
        edges += [(i, t), ((i + 1) % 5, t)]
    return from_positions(Graph(len(pos), edges), pos)


def hexagon():
    pos = ring(6, 1.0)
    return from_positions(Graph(6, [(i, (i + 1) % 6) for i in range(6)]), pos)


def inner_face(pg, size):
    """The face of the given size that is not the outer face (smallest walk id)."""
    return next(f for f in pg.faces if f.size == size)
