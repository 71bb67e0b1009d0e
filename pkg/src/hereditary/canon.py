"""Canonical labelling and isomorphism testing for small graphs.

The canonical labelling is found by individualisation-refinement: the vertex
set is refined to an equitable ordered partition, then a search tree
individualises one vertex of the first non-trivial cell at a time.  Each leaf
gives a labelling; the one whose relabelled adjacency matrix, read row by row
with column 0 as the most significant bit, is lexicographically smallest wins.
Automorphisms discovered at leaves prune sibling subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .graph import Graph, graph6_encode

CanonicalKey = bytes


@dataclass(frozen=True)
class CanonicalForm:
    key: CanonicalKey
    # perm[v] is the canonical label of input vertex v
    perm: tuple[int, ...]

    def graph(self) -> Graph:
        from .graph import graph6_decode

        return graph6_decode(self.key)


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(tuple(groups[sig]))
        if not changed:
            return out
        cells = out


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        rest = adj[v]
        while rest:
            low = rest & -rest
            r |= 1 << (n - 1 - pos[low.bit_length() - 1])
            rest ^= low
        rows.append(r)
    return tuple(rows)


def _orbit_roots(n: int, autos: list[list[int]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in autos:
        if any(gamma[f] != f for f in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _form_from_order(g: Graph, order: list[int]) -> CanonicalForm:
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return CanonicalForm(graph6_encode(g.relabel(perm)), tuple(perm))


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n <= 1:
        return CanonicalForm(graph6_encode(g), tuple(range(n)))
    adj = g.adj
    best: list = [None, None]
    seen: dict[tuple[int, ...], list[int]] = {}
    autos: list[list[int]] = []

    def search(cells: list[tuple[int, ...]], fixed: list[int]) -> None:
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            prev = seen.get(cert)
            if prev is not None:
                gamma = [0] * n
                for a, b in zip(prev, order):
                    gamma[a] = b
                autos.append(gamma)
                return
            seen[cert] = order
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[idx]
        explored: list[int] = []
        for v in sorted(cell):
            if explored and autos:
                roots = _orbit_roots(n, autos, fixed)
                if roots[v] in {roots[u] for u in explored}:
                    continue
            rest = tuple(u for u in cell if u != v)
            child = cells[:idx] + [(v,), rest] + cells[idx + 1:]
            search(_refine(adj, child), fixed + [v])
            explored.append(v)

    search(_refine(adj, [tuple(range(n))]), [])
    return _form_from_order(g, best[1])


def canonical_key(g: Graph) -> CanonicalKey:
    return canonical_form(g).key


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).perm)


def brute_canonical_form(g: Graph) -> CanonicalForm:
    """Lexicographically least labelling over all n! orders. Oracle for n <= 7."""
    n = g.n
    if n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    best_order: list[int] = list(range(n))
    for order in permutations(range(n)):
        cert = _certificate(g.adj, list(order))
        if best is None or cert < best:
            best, best_order = cert, list(order)
    return _form_from_order(g, best_order)


def _invariants(g: Graph) -> tuple:
    return (g.n, g.edge_count(), sorted(g.degrees()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if _invariants(g) != _invariants(h):
        return False
    return canonical_key(g) == canonical_key(h)


def dedup(graphs: Iterable[Graph]) -> dict[CanonicalKey, Graph]:
    """One representative (the first seen) per isomorphism class, keyed by canonical key."""
    out: dict[CanonicalKey, Graph] = {}
    for g in graphs:
        out.setdefault(canonical_key(g), g)
    return out


def merge(*shards: dict[CanonicalKey, Graph]) -> dict[CanonicalKey, Graph]:
    out: dict[CanonicalKey, Graph] = {}
    for shard in shards:
        for key, g in shard.items():
            out.setdefault(key, g)
    return out
