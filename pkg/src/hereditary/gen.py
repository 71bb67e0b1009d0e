"""Isomorph-free exhaustive generation of small graphs and graph6 file I/O.

Graphs of order n are grown from the canonical graphs of order n - 1 by adding
one vertex with every possible neighbourhood.  A child is kept only when its
own canonically chosen deletable vertex leads back to the parent it came from,
so each isomorphism class has exactly one parent; isomorphic siblings of a
single parent are removed by a per-parent key set.  No global table is needed
and parents can be processed independently.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_form, canonical_key
from .graph import Graph, Graph6Error, graph6_decode, graph6_encode

GEN_CAP = 10
GENERATOR_VERSION = "hereditary-augment/1"


class GenerationCapError(ValueError):
    pass


class Graph6FileError(ValueError):
    def __init__(self, path: str, line: int, cause: Graph6Error):
        super().__init__(f"{path}:{line}: {cause}")
        self.line = line
        self.offset = cause.offset


@dataclass(frozen=True)
class GenSpec:
    n: int
    min_edges: int | None = None
    max_edges: int | None = None

    def __post_init__(self):
        if not 0 <= self.n <= GEN_CAP:
            raise GenerationCapError(
                f"exhaustive generation is capped at n={GEN_CAP} (got {self.n}); "
                "generate externally and ingest with read_graph6"
            )

    def accepts(self, g: Graph) -> bool:
        m = g.edge_count()
        if self.min_edges is not None and m < self.min_edges:
            return False
        return self.max_edges is None or m <= self.max_edges


def _vertex_invariants(adj: list[int]) -> list[tuple]:
    deg = [row.bit_count() for row in adj]
    out = []
    for row in adj:
        nd = []
        rest = row
        while rest:
            low = rest & -rest
            nd.append(deg[low.bit_length() - 1])
            rest ^= low
        nd.sort()
        out.append((len(nd), tuple(nd)))
    return out


def augment(parent: Graph, parent_key: bytes) -> list[Graph]:
    """Canonical children of ``parent`` (one more vertex) whose canonical parent is ``parent``."""
    m = parent.n
    n = m + 1
    top = 1 << m
    kept: dict[bytes, Graph] = {}
    for nbrs in range(top):
        rows = list(parent.adj)
        rest = nbrs
        while rest:
            low = rest & -rest
            rows[low.bit_length() - 1] |= top
            rest ^= low
        rows.append(nbrs)
        inv = _vertex_invariants(rows)
        mine = inv[m]
        if any(x > mine for x in inv):
            continue
        child = Graph._make(n, tuple(rows))
        ties = [v for v in range(n) if inv[v] == mine]
        form = canonical_form(child)
        if len(ties) > 1:
            w = max(ties, key=form.perm.__getitem__)
            if w != m and canonical_key(child.delete_vertex(w)) != parent_key:
                continue
        kept.setdefault(form.key, None)
    return [graph6_decode(k) for k in kept]


def _augment_shard(parent_codes: list[bytes], relabel_seed: int | None) -> list[bytes]:
    rng = random.Random(relabel_seed) if relabel_seed is not None else None
    out = []
    for code in parent_codes:
        parent = graph6_decode(code)
        if rng is not None:
            perm = list(range(parent.n))
            rng.shuffle(perm)
            parent = parent.relabel(perm)
        out.extend(graph6_encode(c) for c in augment(parent, code))
    return out


@lru_cache(maxsize=None)
def _level(n: int, threads: int = 1, relabel_seed: int | None = None) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    parents = [graph6_encode(g) for g in _level(n - 1, threads, relabel_seed)]
    if threads > 1 and len(parents) > 64:
        size = max(1, len(parents) // (threads * 4))
        shards = [parents[i:i + size] for i in range(0, len(parents), size)]
        seeds = [None if relabel_seed is None else relabel_seed + i for i in range(len(shards))]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            codes = [c for part in pool.map(_augment_shard, shards, seeds) for c in part]
    else:
        codes = _augment_shard(parents, relabel_seed)
    if len(set(codes)) != len(codes):
        raise AssertionError(f"generator emitted a duplicate class at n={n}")
    return tuple(graph6_decode(c) for c in sorted(codes))


def enumerate_graphs(
    n: int | GenSpec,
    min_edges: int | None = None,
    max_edges: int | None = None,
    *,
    threads: int = 1,
    relabel_seed: int | None = None,
) -> list[Graph]:
    """All graphs of order n up to isomorphism, canonically labelled.

    Output is sorted by canonical key (graph6 of the returned labelling), so it
    is identical for any thread count.  ``relabel_seed`` scrambles parent
    labellings before augmentation; the result must not change.
    """
    spec = n if isinstance(n, GenSpec) else GenSpec(n, min_edges, max_edges)
    graphs = _level(spec.n, threads, relabel_seed)
    return [g for g in graphs if spec.accepts(g)]


def iter_graph6_lines(lines: Iterable[bytes | str], source: str = "<input>") -> Iterator[Graph]:
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.rstrip(b"\r\n")
        if line.startswith(b">>graph6<<"):
            line = line[10:]
            if not line:
                continue
        elif line.startswith(b">>"):
            continue
        try:
            yield graph6_decode(line)
        except Graph6Error as exc:
            raise Graph6FileError(source, lineno, exc) from None


def read_graph6(path: str | os.PathLike) -> Iterator[Graph]:
    """Graphs from a graph6 file in file order; ``>>`` comment lines are skipped."""
    with open(path, "rb") as fh:
        yield from iter_graph6_lines(fh, os.fspath(path))


def write_graph6(path: str | os.PathLike, graphs: Iterable[Graph], manifest: dict | None = None) -> int:
    count = 0
    with open(path, "wb") as fh:
        if manifest:
            fh.write((">> " + ", ".join(f"{k}={v}" for k, v in manifest.items()) + "\n").encode())
        for g in graphs:
            fh.write(graph6_encode(g) + b"\n")
            count += 1
    return count
