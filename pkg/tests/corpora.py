"""Cached corpora shared by the test modules within one pytest process."""

from __future__ import annotations

import random
from functools import lru_cache

from distcolor.configs import TheoremId
from distcolor.corpus import CorpusItem, to_plane, adversarial_graph, random_corpus, small_planar_graphs

SEED = 20240


@lru_cache(maxsize=None)
def small_graphs(max_n: int):
    return tuple(small_planar_graphs(max_n))


@lru_cache(maxsize=None)
def exhaustive_items(max_n: int) -> tuple[CorpusItem, ...]:
    return tuple(
        CorpusItem(f"small:{h.number_of_nodes()}:{i}", to_plane(h)) for i, h in enumerate(small_graphs(max_n))
    )


@lru_cache(maxsize=None)
def random_items(count: int, seed: int = SEED, max_n: int = 60) -> tuple[CorpusItem, ...]:
    return tuple(random_corpus(count, seed, max_n=max_n))


@lru_cache(maxsize=None)
def adversarial_items(per_theorem: int, seed: int = SEED, steps: int = 600) -> tuple[CorpusItem, ...]:
    rng = random.Random(seed)
    out = []
    for t in TheoremId:
        for i in range(per_theorem):
            out.append(CorpusItem(f"adversarial:{t.value}:{i}", adversarial_graph(t, rng, steps=steps)))
    return tuple(out)
