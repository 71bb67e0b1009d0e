"""Base hereditary classes: split, threshold, cograph, chordal, (p,q)-split and
(p,q)-edge-split, plus induced-subgraph containment."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .graph import Graph, complete, cycle, disjoint_union, path


@dataclass(frozen=True)
class HereditaryClass:
    name: str
    member: Callable[[Graph], bool] = field(compare=False)
    forbidden: tuple[Graph, ...] | None = field(default=None, compare=False)
    complement_closed: bool = False

    def __call__(self, g: Graph) -> bool:
        return self.member(g)

    def max_forbidden_order(self) -> int | None:
        if not self.forbidden:
            return None
        return max(h.n for h in self.forbidden)


@dataclass(frozen=True)
class PQParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be non-negative, got ({self.p}, {self.q})")


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a graph isomorphic to ``h``."""
    k = h.n
    if k > g.n:
        return False
    if k == 0:
        return True
    if h.edge_count() > g.edge_count() or h.non_edge_count() > g.non_edge_count():
        return False
    # match high-degree pattern vertices first
    order = sorted(range(k), key=lambda v: -h.degree(v))
    pattern = [[h.has_edge(order[i], order[j]) for j in range(i)] for i in range(k)]
    hdeg = [h.degree(v) for v in order]
    gdeg = g.degrees()
    gadj = g.adj
    full = g.vertex_mask
    mapped: list[int] = []

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = full & ~used
        for j, adjacent in enumerate(pattern[i]):
            cand &= gadj[mapped[j]] if adjacent else ~gadj[mapped[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if gdeg[v] < hdeg[i]:
                continue
            mapped.append(v)
            if extend(i + 1, used | low):
                return True
            mapped.pop()
        return False

    return extend(0, 0)


def _contains_any(g: Graph, hs: tuple[Graph, ...]) -> bool:
    return any(contains_induced(g, h) for h in hs)


# split

def is_split(g: Graph) -> bool:
    """Degree-sequence test: with d1 >= ... >= dn and m = max{i : d_i >= i - 1},
    G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i."""
    d = sorted(g.degrees(), reverse=True)
    m = 0
    for i, di in enumerate(d, 1):
        if di >= i - 1:
            m = i
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


TWO_K2 = disjoint_union(complete(2), complete(2))
C4 = cycle(4)
C5 = cycle(5)
P4 = path(4)

SPLIT_FORBIDDEN = (TWO_K2, C4, C5)
THRESHOLD_FORBIDDEN = (TWO_K2, C4, P4)
COGRAPH_FORBIDDEN = (P4,)


def is_split_by_forbidden(g: Graph) -> bool:
    return not _contains_any(g, SPLIT_FORBIDDEN)


def split_partition(g: Graph) -> tuple[int, int] | None:
    """A (clique, stable set) pair of vertex masks, by exhaustive search."""
    for clique in range(1 << g.n):
        stable = g.vertex_mask & ~clique
        size = clique.bit_count()
        if g.edges_within(clique) == size * (size - 1) // 2 and g.edges_within(stable) == 0:
            return clique, stable
    return None


# cograph / threshold

def find_induced_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced path a-b-c-d, scanning each edge bc as the middle of the quartet."""
    adj = g.adj
    for b, c in g.edges():
        ends_b = adj[b] & ~adj[c] & ~(1 << c)
        ends_c = adj[c] & ~adj[b] & ~(1 << b)
        if not ends_b or not ends_c:
            continue
        rest = ends_b
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            far = ends_c & ~adj[a]
            if far:
                return a, b, c, (far & -far).bit_length() - 1
            rest ^= low
    return None


def is_cograph(g: Graph) -> bool:
    return find_induced_p4(g) is None


def is_cograph_by_quartets(g: Graph) -> bool:
    """Reference check over all 4-subsets."""
    for quad in combinations(range(g.n), 4):
        sub = g.induced(quad)
        if sub.edge_count() == 3 and sorted(sub.degrees()) == [1, 1, 2, 2]:
            return False
    return True


def is_threshold(g: Graph) -> bool:
    """Repeatedly strip an isolated or a dominating vertex; threshold iff nothing remains."""
    alive = g.vertex_mask
    adj = g.adj
    while alive:
        size = alive.bit_count()
        for v in range(g.n):
            if alive >> v & 1:
                d = (adj[v] & alive).bit_count()
                if d == 0 or d == size - 1:
                    alive &= ~(1 << v)
                    break
        else:
            return False
    return True


def is_threshold_by_definition(g: Graph) -> bool:
    return is_cograph(g) and not contains_induced(g, C4) and not contains_induced(g, TWO_K2)


# chordal

def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (ties broken by smallest index)."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = 0
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or labels[v] > labels[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        rest = g.adj[best] & ~visited
        while rest:
            low = rest & -rest
            labels[low.bit_length() - 1].append(n - step)
            rest ^= low
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [u for u in range(g.n) if g.adj[v] >> u & 1 and pos[u] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        for u in later:
            if u != first and not g.adj[first] >> u & 1:
                return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_order(g, lex_bfs(g)[::-1])


def is_chordal_naive(g: Graph) -> bool:
    """No vertex subset of size >= 4 induces a cycle. Exponential; for tests."""
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k < 4:
            continue
        if all((g.adj[v] & mask).bit_count() == 2 for v in range(g.n) if mask >> v & 1):
            if g.edges_within(mask) == k and _connected(g, mask):
                return False
    return True


def _connected(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = g.adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


# (p,q)-split and (p,q)-edge-split, by exhaustive bipartition search

def _edge_counts(g: Graph) -> list[int]:
    counts = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        rest = mask ^ low
        counts[mask] = counts[rest] + (g.adj[low.bit_length() - 1] & rest).bit_count()
    return counts


def pq_edge_split_partition(g: Graph, p: int, q: int) -> int | None:
    """Mask of V1 in a bipartition with <= p non-edges inside V1 and <= q edges inside V2."""
    counts = _edge_counts(g)
    full = g.vertex_mask
    for v1 in range(1 << g.n):
        size = v1.bit_count()
        if size * (size - 1) // 2 - counts[v1] <= p and counts[full & ~v1] <= q:
            return v1
    return None


def is_pq_edge_split(g: Graph, params: PQParams | tuple[int, int]) -> bool:
    p, q = params if isinstance(params, tuple) else (params.p, params.q)
    return pq_edge_split_partition(g, p, q) is not None


def _contains_subset_table(n: int, targets: list[int]) -> list[bool]:
    table = [False] * (1 << n)
    for t in targets:
        table[t] = True
    for mask in range(1 << n):
        if table[mask]:
            continue
        rest = mask
        while rest:
            low = rest & -rest
            if table[mask ^ low]:
                table[mask] = True
                break
            rest ^= low
    return table


def is_pq_split(g: Graph, params: PQParams | tuple[int, int]) -> bool:
    """Some V1 has independence number <= p and V2 = V - V1 has clique number <= q."""
    p, q = params if isinstance(params, tuple) else (params.p, params.q)
    n = g.n
    counts = _edge_counts(g)
    stables = [m for m in range(1 << n) if m.bit_count() == p + 1 and counts[m] == 0]
    cliques = [m for m in range(1 << n) if m.bit_count() == q + 1 and counts[m] == q * (q + 1) // 2]
    has_stable = _contains_subset_table(n, stables)
    has_clique = _contains_subset_table(n, cliques)
    full = g.vertex_mask
    return any(not has_stable[v1] and not has_clique[full & ~v1] for v1 in range(1 << n))


# registry

SPLIT = HereditaryClass("split", is_split, SPLIT_FORBIDDEN, complement_closed=True)
THRESHOLD = HereditaryClass("threshold", is_threshold, THRESHOLD_FORBIDDEN, complement_closed=True)
COGRAPH = HereditaryClass("cograph", is_cograph, COGRAPH_FORBIDDEN, complement_closed=True)
CHORDAL = HereditaryClass("chordal", is_chordal, None, complement_closed=False)

BASE_CLASSES = {c.name: c for c in (SPLIT, THRESHOLD, COGRAPH, CHORDAL)}

_PQ = re.compile(r"(pq-split|pq-edge-split):(\d+),(\d+)")


def pq_split_class(p: int, q: int) -> HereditaryClass:
    params = PQParams(p, q)
    return HereditaryClass(f"pq-split:{p},{q}", lambda g: is_pq_split(g, params), None, p == q)


def pq_edge_split_class(p: int, q: int) -> HereditaryClass:
    params = PQParams(p, q)
    return HereditaryClass(f"pq-edge-split:{p},{q}", lambda g: is_pq_edge_split(g, params), None, p == q)


def get_class(name: str) -> HereditaryClass:
    """Look up a base class by identifier, e.g. ``"split"`` or ``"pq-edge-split:1,0"``."""
    if name in BASE_CLASSES:
        return BASE_CLASSES[name]
    match = _PQ.fullmatch(name)
    if match:
        kind, p, q = match.group(1), int(match.group(2)), int(match.group(3))
        return pq_split_class(p, q) if kind == "pq-split" else pq_edge_split_class(p, q)
    raise ValueError(f"unknown class {name!r}; expected one of {sorted(BASE_CLASSES)} or pq-split:p,q / pq-edge-split:p,q")


def forbidden_free_class(name: str, forbidden: tuple[Graph, ...], complement_closed: bool = False) -> HereditaryClass:
    """Class of graphs containing none of ``forbidden`` as an induced subgraph."""
    return HereditaryClass(name, lambda g: not _contains_any(g, forbidden), tuple(forbidden), complement_closed)

