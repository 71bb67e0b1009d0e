"""Immutable simple graphs on at most 64 vertices with bitset adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised when a graph is built or edited with invalid arguments."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``. Instances are
    hashable values; every editing method returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @classmethod
    def _make(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Unchecked constructor for rows that are valid by construction.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def non_edge_count(self) -> int:
        return self.n * (self.n - 1) // 2 - self.edge_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            u = v + 1
            while rest:
                if rest & 1:
                    yield (v, u)
                rest >>= 1
                u += 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield (u, v)

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph._make(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v, "add-edge")
        if self.has_edge(u, v):
            raise GraphError(f"add-edge: ({u}, {v}) is already an edge")
        return self._toggled(u, v)

    def delete_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v, "delete-edge")
        if not self.has_edge(u, v):
            raise GraphError(f"delete-edge: ({u}, {v}) is not an edge")
        return self._toggled(u, v)

    def delete_vertex(self, v: int) -> Graph:
        if not 0 <= v < self.n:
            raise GraphError(f"delete-vertex: {v} not a vertex of a {self.n}-vertex graph")
        return self.induced(self.vertex_mask & ~(1 << v))

    def induced(self, vertices: int | Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices`` (a bitmask or an iterable of indices).

        Kept vertices are relabelled 0.. in increasing order of their old index.
        """
        mask = vertices if isinstance(vertices, int) else _mask_of(vertices)
        if mask < 0 or mask & ~self.vertex_mask:
            raise GraphError(f"vertex set {mask:#x} not within a {self.n}-vertex graph")
        kept = [v for v in range(self.n) if mask >> v & 1]
        rows = []
        for v in kept:
            row = self.adj[v]
            new = 0
            for i, u in enumerate(kept):
                if row >> u & 1:
                    new |= 1 << i
            rows.append(new)
        return Graph._make(len(kept), tuple(rows))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            rest = row
            while rest:
                low = rest & -rest
                new |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            rows[perm[v]] = new
        return Graph._make(self.n, tuple(rows))

    def edges_within(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in _bits(mask)) // 2

    def _check_pair(self, u: int, v: int, action: str) -> None:
        if u == v:
            raise GraphError(f"{action}: loop pair ({u}, {v})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"{action}: pair ({u}, {v}) out of range for n={self.n}")

    def _toggled(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph._make(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated pairs collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop pair ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint of ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._make(n, tuple(rows))


def edit(g: Graph, action: str, *args: int) -> Graph:
    """Apply ``add-edge u v``, ``delete-edge u v`` or ``delete-vertex v``."""
    if action == "add-edge":
        return g.add_edge(*args)
    if action == "delete-edge":
        return g.delete_edge(*args)
    if action == "delete-vertex":
        return g.delete_vertex(*args)
    raise GraphError(f"unknown edit action {action!r}")


def complement(g: Graph) -> Graph:
    return g.complement()


def induced(g: Graph, vertices: int | Iterable[int]) -> Graph:
    return g.induced(vertices)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


# Named small graphs.

def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


# graph6

def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError("graph6 order too large")


def graph6_encode(g: Graph) -> bytes:
    """graph6 bytes for ``g`` (no trailing newline)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Parse one graph6 record. A single trailing newline is tolerated."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        data = data[10:]
        base = 10
    else:
        base = 0
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"non-graph6 byte {byte!r}", base + i)
    if not data:
        raise Graph6Error("empty record", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated length header", base + len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte length header unsupported", base + 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds {MAX_VERTICES}", base)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} body bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing garbage", base + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and (body[-1] - 63) & ((1 << (6 - total % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph._make(n, tuple(rows))
