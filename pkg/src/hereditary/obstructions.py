"""Minimal forbidden induced subgraphs of derived classes.

A graph is a minimal obstruction for a hereditary class when it is outside the
class and each one-vertex deletion is inside; by heredity that is the same as
every proper induced subgraph being inside.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from .bounds import bound_for_spec
from .canon import canonical_key
from .classes import CHORDAL, HereditaryClass
from .gen import GENERATOR_VERSION, enumerate_graphs, write_graph6
from .graph import Graph, graph6_decode, graph6_encode
from .operators import OperatorSpec, edge_add_member, parse_operator_spec

Predicate = Callable[[Graph], bool]


class NonHereditaryError(RuntimeError):
    """The class predicate accepted ``graph`` but rejected ``graph - vertex``."""

    def __init__(self, graph: Graph, vertex: int):
        super().__init__(
            f"class is not hereditary: {graph6_encode(graph).decode()} is a member "
            f"but deleting vertex {vertex} is not"
        )
        self.graph = graph
        self.vertex = vertex


def is_minimal_obstruction(g: Graph, member: Predicate) -> bool:
    if member(g):
        return False
    return all(member(g.delete_vertex(v)) for v in range(g.n))


def search_accepts(g: Graph, base: HereditaryClass) -> bool:
    """Accept test of the add-then-delete search loop for edge-add obstructions.

    ``g`` must be outside the base, every single non-edge addition must stay
    outside, and every one-vertex deletion must be an edge-add member.  The
    failed-addition count is compared with the number of non-edges.
    """
    if base(g):
        return False
    non_edges = list(g.non_edges())
    failed = sum(1 for u, v in non_edges if not base(g._toggled(u, v)))
    rescued = sum(1 for v in range(g.n) if edge_add_member(g.delete_vertex(v), base))
    return failed == len(non_edges) and rescued == g.n


def is_cycle(g: Graph) -> bool:
    if g.n < 3 or any(d != 2 for d in g.degrees()):
        return False
    seen, frontier = 1, 1
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = g.adj[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return seen == g.vertex_mask


def _scan(graphs: Iterable[Graph], member: Predicate, sample_every: int) -> list[Graph]:
    found = []
    for i, g in enumerate(graphs):
        if sample_every and i % sample_every == 0 and member(g):
            for v in range(g.n):
                if not member(g.delete_vertex(v)):
                    raise NonHereditaryError(g, v)
            continue
        if is_minimal_obstruction(g, member):
            found.append(g)
    return found


def _scan_shard(spec_text: str, codes: list[bytes], sample_every: int) -> list[bytes]:
    member = parse_operator_spec(spec_text).member
    graphs = [graph6_decode(c) for c in codes]
    return [graph6_encode(g) for g in _scan(graphs, member, sample_every)]


@dataclass
class ObstructionReport:
    class_spec: str
    per_order: dict[int, list[bytes]]
    bound_used: int | None
    complete_through: int
    infinite_families: tuple[str, ...] = field(default=())

    def counts(self) -> dict[int, int]:
        return {n: len(keys) for n, keys in sorted(self.per_order.items())}

    @property
    def total(self) -> int:
        return sum(len(keys) for keys in self.per_order.values())

    def keys(self) -> set[bytes]:
        return {k for keys in self.per_order.values() for k in keys}

    def graphs(self, order: int | None = None) -> list[Graph]:
        orders = sorted(self.per_order) if order is None else [order]
        return [graph6_decode(k) for n in orders for k in self.per_order.get(n, [])]

    def orders(self) -> list[int]:
        return sorted(n for n, keys in self.per_order.items() if keys)

    def respects_bound(self) -> bool:
        return self.bound_used is None or all(n <= self.bound_used for n in self.orders())

    def non_cycles(self) -> dict[int, list[bytes]]:
        return {
            n: [k for k in keys if not is_cycle(graph6_decode(k))]
            for n, keys in self.per_order.items()
        }


def _as_spec(cls: str | OperatorSpec | HereditaryClass) -> OperatorSpec:
    if isinstance(cls, OperatorSpec):
        return cls
    if isinstance(cls, HereditaryClass):
        return OperatorSpec(cls)
    return parse_operator_spec(cls)


def enumerate_obstructions(
    cls: str | OperatorSpec | HereditaryClass,
    n_max: int,
    *,
    graphs: Iterable[Graph] | None = None,
    threads: int = 1,
    sample_every: int = 16,
) -> ObstructionReport:
    """All minimal obstructions of order <= n_max for a class.

    By default every graph of each order comes from the built-in generator;
    pass ``graphs`` to scan an externally produced collection instead (for
    example a graph6 file from another generator).
    """
    spec = _as_spec(cls)
    member = spec.member
    if graphs is None:
        by_order = {n: enumerate_graphs(n) for n in range(1, n_max + 1)}
        complete = n_max
    else:
        by_order: dict[int, list[Graph]] = {}
        for g in graphs:
            if g.n <= n_max:
                by_order.setdefault(g.n, []).append(g)
        complete = max(by_order, default=0)

    per_order: dict[int, list[bytes]] = {}
    for n, batch in sorted(by_order.items()):
        if threads > 1 and len(batch) > 256:
            codes = [graph6_encode(g) for g in batch]
            size = max(1, len(codes) // (threads * 4))
            shards = [codes[i:i + size] for i in range(0, len(codes), size)]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = pool.map(_scan_shard, [spec.text] * len(shards), shards, [sample_every] * len(shards))
                found = [graph6_decode(c) for part in parts for c in part]
        else:
            found = _scan(batch, member, sample_every)
        per_order[n] = sorted({canonical_key(g) for g in found})

    families: tuple[str, ...] = ()
    if spec.base is CHORDAL and spec.mode == "single" and (spec.adds, spec.edge_deletes, spec.vertex_deletes) == (1, 0, 0):
        families = ("C_k for every k >= 5",)
    return ObstructionReport(spec.text, per_order, bound_for_spec(spec), complete, families)


def duality_check(base: HereditaryClass | str, n_max: int) -> tuple[bool, Graph | None]:
    """Compare edge-add obstructions with complements of edge-apex obstructions.

    Returns ``(True, None)`` when the two key sets agree through ``n_max``,
    otherwise ``(False, g)`` with a graph from the symmetric difference.
    """
    if isinstance(base, str):
        base = parse_operator_spec(base).base
    if not base.complement_closed:
        raise ValueError(f"class {base.name!r} is not closed under complementation")
    add = enumerate_obstructions(OperatorSpec(base, adds=1), n_max).keys()
    apex = enumerate_obstructions(OperatorSpec(base, edge_deletes=1), n_max)
    flipped = {canonical_key(g.complement()) for g in apex.graphs()}
    diff = sorted(add ^ flipped)
    if diff:
        return False, graph6_decode(diff[0])
    return True, None


def write_report(report: ObstructionReport, out_dir: str | os.PathLike, extra: dict | None = None) -> Path:
    """One graph6 file per non-empty order plus ``manifest.txt`` of ``key = value`` lines."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n, keys in sorted(report.per_order.items()):
        if keys:
            header = {"class": report.class_spec, "order": n, "count": len(keys)}
            write_graph6(out / f"obstructions_n{n}.g6", (graph6_decode(k) for k in keys), header)
    lines = [
        ("class", report.class_spec),
        ("complete_through", report.complete_through),
        ("bound", "none" if report.bound_used is None else report.bound_used),
        ("bound_respected", str(report.respects_bound()).lower()),
    ]
    lines += [(f"count_n{n}", c) for n, c in report.counts().items()]
    lines.append(("total", report.total))
    if report.infinite_families:
        lines.append(("infinite_families", "; ".join(report.infinite_families)))
    lines += [("generator", GENERATOR_VERSION), ("version", __version__)]
    lines += list((extra or {}).items())
    (out / "manifest.txt").write_text("".join(f"{k} = {v}\n" for k, v in lines))
    return out
