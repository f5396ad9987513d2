"""Seeded random graphs and the small connected-graph catalog used by the checks."""

from __future__ import annotations

import random
from functools import lru_cache

from oddsum.graph import Graph, build_graph

DEFAULT_SEED = 20240131


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """G(n, p); ``p`` is drawn from [0.2, 0.8] when not given."""
    if p is None:
        p = rng.uniform(0.2, 0.8)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_graphs(seed: int, count: int, n_min: int, n_max: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]


def random_sparse_graphs(seed: int, count: int, n_min: int, n_max: int, max_edges) -> list[Graph]:
    """Random graphs whose edge count is capped by ``max_edges(n)``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(0, min(len(pairs), max_edges(n)))
        out.append(build_graph(n, rng.sample(pairs, m)))
    return out


@lru_cache(maxsize=None)
def connected_catalog(max_n: int) -> tuple[Graph, ...]:
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers graphs on at most 7 vertices")
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(h):
            index = {v: i for i, v in enumerate(sorted(h.nodes()))}
            out.append(build_graph(n, [(index[u], index[v]) for u, v in h.edges()]))
    return tuple(out)
