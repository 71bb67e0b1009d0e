from __future__ import annotations

import itertools
import random

import numpy as np
import pytest
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from hereditary.gen import enumerate_graphs
from hereditary.graph import Graph, build


def labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    return build(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < density])


def graphs_through(n_max: int, n_min: int = 0):
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n)


def edge_mask(g) -> int:
    return sum(1 << i for i, (u, v) in enumerate(itertools.combinations(range(g.n), 2)) if g.has_edge(u, v))


def orbit_minima(n: int) -> np.ndarray:
    """For every labeled graph on n vertices (as an edge bitmask), the least
    bitmask in its orbit under all n! vertex permutations."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        image = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            a, b = sorted((perm[u], perm[v]))
            image |= ((masks >> i) & 1) << index[(a, b)]
        np.minimum(best, image, out=best)
    return best


def labeled_orbits(n: int) -> np.ndarray:
    """Orbit label of every labeled graph on n vertices under S_n, from the
    connected components of the action of a transposition and an n-cycle."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    rows, cols = [], []
    for perm in ([1, 0] + list(range(2, n)), [(i + 1) % n for i in range(n)]):
        image = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            a, b = sorted((perm[u], perm[v]))
            image |= ((masks >> i) & 1) << index[(a, b)]
        rows.append(masks)
        cols.append(image)
    size = len(masks)
    adj = coo_matrix((np.ones(2 * size, dtype=np.int8), (np.concatenate(rows), np.concatenate(cols))), shape=(size, size))
    _, labels = connected_components(adj, directed=True, connection="weak")
    return labels


@pytest.fixture
def rng():
    return random.Random(20240611)
