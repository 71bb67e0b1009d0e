"""Order and rank bounds for minimal obstructions of derived classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


@dataclass(frozen=True)
class BoundInputs:
    """Statistics of one forbidden subgraph H of a base class.

    c: vertices of H, k: non-edges of H, m: largest order in the base class's list.
    """

    c: int
    k: int
    m: int

    def __post_init__(self):
        if self.c > self.m:
            raise ValueError(f"c={self.c} exceeds m={self.m}")
        if not 0 <= self.k <= self.c * (self.c - 1) // 2:
            raise ValueError(f"k={self.k} impossible for c={self.c}")

    @classmethod
    def of(cls, h: Graph, m: int) -> BoundInputs:
        return cls(h.n, h.non_edge_count(), m)

    def term(self) -> int:
        return max(2 * self.m, self.c + self.k * (self.m - 2))

    def term_containing(self) -> int:
        """Bound on an edge-add obstruction known to contain this H."""
        return max(self.c + self.m, self.c + self.k * (self.m - 2))


def bound_inputs(forbidden: Iterable[Graph]) -> list[BoundInputs]:
    forbidden = list(forbidden)
    m = max(h.n for h in forbidden)
    return [BoundInputs.of(h, m) for h in forbidden]


def bound_prop25(stats: Iterable[BoundInputs] | Iterable[Graph]) -> int:
    """max over H of max{2m, c + k(m - 2)}: order bound for edge-add obstructions."""
    stats = list(stats)
    if stats and isinstance(stats[0], Graph):
        stats = bound_inputs(stats)
    if not stats:
        raise ValueError("need at least one forbidden subgraph")
    return max(s.term() for s in stats)


def bound_thm27(c: int) -> int:
    """floor((c + 2)^2 / 4): order bound for vertex-apex obstructions."""
    if c < 1:
        raise ValueError("c must be positive")
    return (c + 2) ** 2 // 4


def bound_union(c: int, d: int) -> int:
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    return c + d


def bound_thm55(r: int, k: int, s: int) -> int:
    """max{2s, r + k(s - 1)} for a forbidden flat of rank r with k non-elements."""
    if r > s:
        raise ValueError(f"rank r={r} exceeds maximum rank s={s}")
    if k < 0:
        raise ValueError("k must be non-negative")
    return max(2 * s, r + k * (s - 1))


def bound_for_spec(spec) -> int | None:
    """Order bound for obstructions of an operator class, or None when none is known.

    Covers single edge additions, single edge deletions over a
    complement-closed base (by complementing the base list), single vertex
    deletions, and unions of those.
    """
    base = spec.base
    if not base.forbidden:
        return None
    if spec.mode == "union":
        parts = [bound_for_spec(p) for p in spec.components()]
        if any(b is None for b in parts):
            return None
        total = parts[0]
        for b in parts[1:]:
            total = bound_union(total, b)
        return total
    budget = (spec.adds, spec.edge_deletes, spec.vertex_deletes)
    m = max(h.n for h in base.forbidden)
    if budget == (0, 0, 0):
        return m
    if budget == (1, 0, 0):
        return bound_prop25(base.forbidden)
    if budget == (0, 1, 0) and base.complement_closed:
        return bound_prop25([h.complement() for h in base.forbidden])
    if budget == (0, 0, 1):
        return bound_thm27(m)
    return None
