"""Derived classes: edge-add, edge-apex and vertex-apex operators, their p/q/r-fold
iterates, and unions of the three pure iterates."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .classes import HereditaryClass, get_class
from .graph import Graph


@dataclass(frozen=True)
class Verdict:
    """Membership answer with an optional witness edit. Truthy iff ``member``."""

    member: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.member


def edge_add_member(g: Graph, base: HereditaryClass) -> Verdict:
    if base(g):
        return Verdict(True)
    for u, v in g.non_edges():
        if base(g._toggled(u, v)):
            return Verdict(True, (u, v))
    return Verdict(False)


def edge_apex_member(g: Graph, base: HereditaryClass) -> Verdict:
    if base(g):
        return Verdict(True)
    for u, v in g.edges():
        if base(g._toggled(u, v)):
            return Verdict(True, (u, v))
    return Verdict(False)


def vertex_apex_member(g: Graph, base: HereditaryClass) -> Verdict:
    # Members of the base (the empty graph included) count as vertex-apex members.
    if base(g):
        return Verdict(True)
    for v in range(g.n):
        if base(g.delete_vertex(v)):
            return Verdict(True, v)
    return Verdict(False)


def _toggle_all(g: Graph, pairs) -> Graph:
    rows = list(g.adj)
    for u, v in pairs:
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph._make(g.n, tuple(rows))


def _subsets(items: list, k: int) -> Iterator[tuple]:
    for size in range(min(k, len(items)) + 1):
        yield from combinations(items, size)


def _vertex_deletion_hit(g: Graph, base: HereditaryClass, r: int) -> tuple[int, ...] | None:
    if r == 0:
        return () if base(g) else None
    # For a hereditary base, deleting exactly min(r, n) vertices is as good as deleting fewer.
    for drop in combinations(range(g.n), min(r, g.n)):
        mask = g.vertex_mask
        for v in drop:
            mask &= ~(1 << v)
        if base(g.induced(mask)):
            return drop
    return None


def edit_search(g: Graph, base: HereditaryClass, p: int, q: int, r: int, order: str = "disjoint"):
    """Find at most p edge additions, at most q edge deletions and at most r vertex
    deletions (applied in that order) that take ``g`` into ``base``.

    ``order="disjoint"`` adds only non-edges of g and deletes only edges of g;
    ``"add-first"`` and ``"delete-first"`` follow the literal sequential
    semantics in the named order. All three describe the same class.
    Returns ``(added, deleted, removed_vertices)`` or None.
    """
    if order == "disjoint":
        deletable = list(g.edges())
        for added in _subsets(list(g.non_edges()), p):
            h = _toggle_all(g, added)
            for deleted in _subsets(deletable, q):
                hit = _vertex_deletion_hit(_toggle_all(h, deleted), base, r)
                if hit is not None:
                    return added, deleted, hit
    elif order == "add-first":
        for added in _subsets(list(g.non_edges()), p):
            h = _toggle_all(g, added)
            for deleted in _subsets(list(h.edges()), q):
                hit = _vertex_deletion_hit(_toggle_all(h, deleted), base, r)
                if hit is not None:
                    return added, deleted, hit
    elif order == "delete-first":
        for deleted in _subsets(list(g.edges()), q):
            h = _toggle_all(g, deleted)
            for added in _subsets(list(h.non_edges()), p):
                hit = _vertex_deletion_hit(_toggle_all(h, added), base, r)
                if hit is not None:
                    return added, deleted, hit
    else:
        raise ValueError(f"unknown edit order {order!r}")
    return None


@dataclass(frozen=True)
class OperatorSpec:
    base: HereditaryClass
    adds: int = 0
    edge_deletes: int = 0
    vertex_deletes: int = 0
    mode: str = "single"

    def __post_init__(self):
        if min(self.adds, self.edge_deletes, self.vertex_deletes) < 0:
            raise ValueError("operator budgets must be non-negative")
        if self.mode not in ("single", "union"):
            raise ValueError(f"mode must be 'single' or 'union', got {self.mode!r}")

    @property
    def text(self) -> str:
        s = self.base.name
        if self.adds:
            s += f"+add^{self.adds}"
        if self.edge_deletes:
            s += f"-edge^{self.edge_deletes}"
        if self.vertex_deletes:
            s += f"-vertex^{self.vertex_deletes}"
        if self.mode == "union":
            s += ":union"
        return s

    @property
    def complement_closed(self) -> bool:
        return self.base.complement_closed and self.adds == self.edge_deletes

    def components(self) -> list[OperatorSpec]:
        """The pure single-budget classes whose union this spec denotes."""
        if self.mode == "single":
            return [self]
        parts = [
            OperatorSpec(self.base, adds=self.adds),
            OperatorSpec(self.base, edge_deletes=self.edge_deletes),
            OperatorSpec(self.base, vertex_deletes=self.vertex_deletes),
        ]
        return [s for s in parts if s.adds or s.edge_deletes or s.vertex_deletes] or [OperatorSpec(self.base)]

    def member(self, g: Graph) -> bool:
        return iterated_member(g, self).member

    def as_class(self) -> HereditaryClass:
        return HereditaryClass(self.text, self.member, None, self.complement_closed)


def iterated_member(g: Graph, spec: OperatorSpec) -> Verdict:
    if spec.mode == "union":
        for part in spec.components():
            verdict = iterated_member(g, part)
            if verdict:
                return verdict
        return Verdict(False)
    p, q, r = spec.adds, spec.edge_deletes, spec.vertex_deletes
    if (p, q, r) == (0, 0, 0):
        return Verdict(spec.base(g))
    if (p, q, r) == (1, 0, 0):
        return edge_add_member(g, spec.base)
    if (p, q, r) == (0, 1, 0):
        return edge_apex_member(g, spec.base)
    if (p, q, r) == (0, 0, 1):
        return vertex_apex_member(g, spec.base)
    found = edit_search(g, spec.base, p, q, r)
    if found is None:
        return Verdict(False)
    return Verdict(True, found if any(found) else None)


_ALIASES = {
    "edge-add": (1, 0, 0, "single"),
    "edge-apex": (0, 1, 0, "single"),
    "vertex-apex": (0, 0, 1, "single"),
    "almost": (1, 1, 1, "union"),
}
_ALIAS = re.compile(r"(edge-add|edge-apex|vertex-apex|almost):(.+)")
_SPEC = re.compile(r"(?P<base>.+?)(?:\+add\^(?P<p>\d+))?(?:-edge\^(?P<q>\d+))?(?:-vertex\^(?P<r>\d+))?")


def parse_operator_spec(text: str) -> OperatorSpec:
    """Parse ``base+add^p-edge^q-vertex^r[:union]`` or an alias such as ``edge-add:split``.

    >>> parse_operator_spec("split+add^1-edge^2").text
    'split+add^1-edge^2'
    >>> parse_operator_spec("almost:cograph").text
    'cograph+add^1-edge^1-vertex^1:union'
    """
    text = text.strip()
    alias = _ALIAS.fullmatch(text)
    if alias:
        p, q, r, mode = _ALIASES[alias.group(1)]
        return OperatorSpec(get_class(alias.group(2)), p, q, r, mode)
    mode = "single"
    if text.endswith(":union"):
        text, mode = text[: -len(":union")], "union"
    match = _SPEC.fullmatch(text)
    if not match:
        raise ValueError(f"cannot parse class spec {text!r}")
    return OperatorSpec(
        get_class(match.group("base")),
        int(match.group("p") or 0),
        int(match.group("q") or 0),
        int(match.group("r") or 0),
        mode,
    )


def resolve_class(text: str) -> HereditaryClass:
    """A base class or derived class from its text form."""
    spec = parse_operator_spec(text)
    if spec.mode == "single" and (spec.adds, spec.edge_deletes, spec.vertex_deletes) == (0, 0, 0):
        return spec.base
    return spec.as_class()
