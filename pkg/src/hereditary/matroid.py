"""Simple GF(2)- and GF(3)-matroids as point sets of a projective geometry.

A matroid of rank r is a full-rank subset (the ground set) of the points of
PG(r-1, q); the remaining points are its non-elements.  Point subsets are int
bitmasks over the deterministic point order of :func:`pg_points`.  Binary and
ternary matroids are uniquely representable, so two ground sets give
isomorphic matroids exactly when some invertible linear map carries one onto
the other; :func:`canonical_mask` picks the least mask in that orbit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .bounds import bound_thm55
from .operators import Verdict

RANK_CAPS = {2: 4, 3: 3}

Vector = tuple[int, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _normalize(v: Vector, q: int) -> Vector:
    for x in v:
        if x:
            inv = pow(x, q - 2, q)
            return tuple(y * inv % q for y in v)
    raise ValueError("zero vector is not a projective point")


@dataclass(frozen=True)
class PGSpace:
    q: int
    r: int
    points: tuple[Vector, ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, v: Vector) -> int:
        return self._index[_normalize(v, self.q)]


@lru_cache(maxsize=None)
def pg_points(q: int, r: int) -> PGSpace:
    """Points of PG(r-1, q): nonzero vectors with first nonzero coordinate 1, in
    lexicographic order of coordinates."""
    if q not in RANK_CAPS:
        raise ValueError(f"unsupported field order q={q}; only 2 and 3")
    if not 0 <= r <= RANK_CAPS[q]:
        raise ValueError(f"rank r={r} outside 0..{RANK_CAPS[q]} for q={q}")
    pts = tuple(v for v in product(range(q), repeat=r) if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1)
    return PGSpace(q, r, pts, {v: i for i, v in enumerate(pts)})


@lru_cache(maxsize=None)
def _closure_rank(q: int, r: int, mask: int) -> tuple[int, int]:
    space = pg_points(q, r)
    span = {(0,) * r}
    rank = 0
    for i in _bits(mask):
        v = space.points[i]
        if v in span:
            continue
        span = {tuple((s[j] + a * v[j]) % q for j in range(r)) for s in span for a in range(q)}
        rank += 1
    closure = 0
    for i, v in enumerate(space.points):
        if v in span:
            closure |= 1 << i
    return closure, rank


def rank(space: PGSpace, subset: int) -> int:
    return _closure_rank(space.q, space.r, subset)[1]


def closure(space: PGSpace, subset: int) -> int:
    """Projective closure: every point of PG(r-1, q) inside the span of ``subset``."""
    return _closure_rank(space.q, space.r, subset)[0]


def _rref_pivots(vectors: list[Vector], q: int) -> list[int]:
    rows = [list(v) for v in vectors]
    pivots: list[int] = []
    width = len(rows[0]) if rows else 0
    top = 0
    for col in range(width):
        pick = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if pick is None:
            continue
        rows[top], rows[pick] = rows[pick], rows[top]
        inv = pow(rows[top][col], q - 2, q)
        rows[top] = [x * inv % q for x in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[top])]
        pivots.append(col)
        top += 1
    return pivots


def reembed(space: PGSpace, subset: int) -> GFqMatroid:
    """The restriction to ``subset`` as a full-rank point set of PG(k-1, q), k = rank(subset).

    Coordinates are taken with respect to the reduced row-echelon basis of the
    span, which for such a basis are simply the entries at the pivot columns.
    """
    vectors = [space.points[i] for i in _bits(subset)]
    pivots = _rref_pivots(vectors, space.q) if vectors else []
    target = pg_points(space.q, len(pivots))
    mask = 0
    for v in vectors:
        mask |= 1 << target.index(tuple(v[p] for p in pivots))
    return GFqMatroid(target, mask)


# projective linear group action

def _matmul_vec(mat: tuple[tuple[int, ...], ...], v: Vector, q: int) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) % q for row in mat)


def _point_permutation(space: PGSpace, mat) -> list[int]:
    return [space.index(_matmul_vec(mat, v, space.q)) for v in space.points]


def _generators(q: int, r: int) -> list[tuple[tuple[int, ...], ...]]:
    """Elementary transvections and one diagonal scaling: a generating set of GL(r, q)."""
    gens = []
    ident = [[int(i == j) for j in range(r)] for i in range(r)]
    for i, j in product(range(r), repeat=2):
        if i != j:
            m = [row[:] for row in ident]
            m[i][j] = 1
            gens.append(tuple(map(tuple, m)))
    if q > 2 and r:
        m = [row[:] for row in ident]
        m[0][0] = 2
        gens.append(tuple(map(tuple, m)))
    return gens


def _image_masks(masks: np.ndarray, perm: list[int]) -> np.ndarray:
    out = np.zeros_like(masks)
    for i, j in enumerate(perm):
        out |= ((masks >> i) & 1) << j
    return out


@lru_cache(maxsize=None)
def _orbit_table(q: int, r: int) -> np.ndarray:
    space = pg_points(q, r)
    total = 1 << space.size
    masks = np.arange(total, dtype=np.int64)
    src, dst = [masks], [masks]
    for mat in _generators(q, r):
        src.append(masks)
        dst.append(_image_masks(masks, _point_permutation(space, mat)))
    rows = np.concatenate(src)
    cols = np.concatenate(dst)
    adj = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(total, total))
    _, labels = connected_components(adj, directed=True, connection="weak")
    least = np.full(labels.max() + 1, total, dtype=np.int64)
    np.minimum.at(least, labels, masks)
    return least[labels]


def canonical_mask(space: PGSpace, subset: int) -> int:
    return int(_orbit_table(space.q, space.r)[subset])


def general_linear_group(q: int, r: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every invertible r x r matrix over GF(q), by enumeration."""
    out = []
    for entries in product(range(q), repeat=r * r):
        mat = tuple(tuple(entries[i * r:(i + 1) * r]) for i in range(r))
        if len(_rref_pivots(list(mat), q)) == r:
            out.append(mat)
    return out


def canonical_mask_by_group(space: PGSpace, subset: int, group=None) -> int:
    """Least image of ``subset`` over an explicitly enumerated GL(r, q). Test oracle."""
    group = group if group is not None else general_linear_group(space.q, space.r)
    best = None
    for mat in group:
        perm = _point_permutation(space, mat)
        img = 0
        for i in _bits(subset):
            img |= 1 << perm[i]
        best = img if best is None or img < best else best
    return best


@dataclass(frozen=True)
class GFqMatroid:
    space: PGSpace
    ground: int

    def __post_init__(self):
        if self.ground & ~self.space.full_mask:
            raise ValueError("ground set contains indices outside the geometry")
        if rank(self.space, self.ground) != self.space.r:
            raise ValueError(f"ground set is not of full rank {self.space.r}")

    @property
    def q(self) -> int:
        return self.space.q

    @property
    def rank(self) -> int:
        return self.space.r

    @property
    def size(self) -> int:
        return self.ground.bit_count()

    def elements(self) -> list[int]:
        return list(_bits(self.ground))

    def non_elements(self) -> list[int]:
        return list(_bits(self.space.full_mask & ~self.ground))

    def rank_of(self, subset: int) -> int:
        return rank(self.space, subset)

    def closure(self, subset: int) -> int:
        return closure(self.space, subset) & self.ground

    def is_flat(self, subset: int) -> bool:
        return subset & ~self.ground == 0 and self.closure(subset) == subset

    def flats(self) -> list[int]:
        """All flats as masks, by closing one element at a time from the closure of the empty set."""
        start = self.closure(0)
        seen = {start}
        stack = [start]
        while stack:
            f = stack.pop()
            for e in _bits(self.ground & ~f):
                g = self.closure(f | 1 << e)
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return sorted(seen, key=lambda m: (m.bit_count(), m))

    def proper_flats(self) -> list[int]:
        return [f for f in self.flats() if f != self.ground]

    def restrict(self, subset: int) -> GFqMatroid:
        return reembed(self.space, subset & self.ground)

    def add(self, point: int) -> GFqMatroid:
        return GFqMatroid(self.space, self.ground | 1 << point)

    def delete(self, element: int) -> GFqMatroid:
        return self.restrict(self.ground & ~(1 << element))

    def key(self) -> tuple[int, int, int]:
        return (self.q, self.rank, canonical_mask(self.space, self.ground))

    def canonical(self) -> GFqMatroid:
        return GFqMatroid(self.space, canonical_mask(self.space, self.ground))

    def is_isomorphic(self, other: GFqMatroid) -> bool:
        return self.key() == other.key()

    def __repr__(self) -> str:
        return f"GFqMatroid({format_matroid(self)!r})"


def flats(m: GFqMatroid) -> list[int]:
    return m.flats()


def non_element_count(m: GFqMatroid) -> int:
    return m.space.size - m.size


def format_matroid(m: GFqMatroid) -> str:
    return f"{m.q} {m.rank} : {','.join(map(str, m.elements()))}"


_TEXT = re.compile(r"\s*(\d+)\s+(\d+)\s*:\s*([\d,\s]*)")


def parse_matroid(text: str) -> GFqMatroid:
    """Parse ``"q r : i,j,k"`` (indices into the ``pg_points(q, r)`` order)."""
    match = _TEXT.fullmatch(text)
    if not match:
        raise ValueError(f"cannot parse matroid {text!r}")
    q, r = int(match.group(1)), int(match.group(2))
    space = pg_points(q, r)
    mask = 0
    for part in filter(None, (s.strip() for s in match.group(3).split(","))):
        i = int(part)
        if i >= space.size:
            raise ValueError(f"point index {i} out of range for PG({r - 1},{q})")
        mask |= 1 << i
    return GFqMatroid(space, mask)


def full_rank_classes(q: int, r: int) -> list[GFqMatroid]:
    """One ground set per isomorphism class of simple rank-r GF(q)-matroids."""
    space = pg_points(q, r)
    reps = np.unique(_orbit_table(q, r))
    return [GFqMatroid(space, int(m)) for m in reps if rank(space, int(m)) == r]


# classes

@dataclass(frozen=True)
class MatroidClass:
    """A class of GF(q)-matroids closed under flats; membership is memoised by isomorphism class."""

    name: str
    member: Callable[[GFqMatroid], bool] = field(compare=False)
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __call__(self, m: GFqMatroid) -> bool:
        key = m.key()
        if key not in self._memo:
            self._memo[key] = bool(self.member(m))
        return self._memo[key]


def has_three_point_line(m: GFqMatroid) -> bool:
    for a, b in combinations(m.elements(), 2):
        if m.closure(1 << a | 1 << b).bit_count() == 3:
            return True
    return False


def get_matroid_class(name: str) -> MatroidClass:
    """Base classes: ``all``, ``independent``, ``no-3-point-line``, ``rank-at-most:k``;
    derived: ``add:NAME``, ``ext:NAME``, ``almost:NAME``."""
    if name.startswith("add:"):
        return add_class(get_matroid_class(name[4:]))
    if name.startswith("ext:"):
        return extension_class(get_matroid_class(name[4:]))
    if name.startswith("almost:"):
        return almost_class(get_matroid_class(name[7:]))
    if name == "all":
        return MatroidClass(name, lambda m: True)
    if name == "independent":
        return MatroidClass(name, lambda m: m.size == m.rank)
    if name == "no-3-point-line":
        return MatroidClass(name, lambda m: not has_three_point_line(m))
    match = re.fullmatch(r"rank-at-most:(\d+)", name)
    if match:
        k = int(match.group(1))
        return MatroidClass(name, lambda m: m.rank <= k)
    raise ValueError(f"unknown matroid class {name!r}")


def add_member(m: GFqMatroid, cls: MatroidClass) -> Verdict:
    """In the class, or some non-element can be added to land in the class."""
    if cls(m):
        return Verdict(True)
    for e in m.non_elements():
        if cls(m.add(e)):
            return Verdict(True, e)
    return Verdict(False)


def extension_member(m: GFqMatroid, cls: MatroidClass) -> Verdict:
    """In the class, or deleting some element lands in the class."""
    if cls(m):
        return Verdict(True)
    for e in m.elements():
        if cls(m.delete(e)):
            return Verdict(True, e)
    return Verdict(False)


def add_class(cls: MatroidClass) -> MatroidClass:
    return MatroidClass(f"add:{cls.name}", lambda m: add_member(m, cls).member)


def extension_class(cls: MatroidClass) -> MatroidClass:
    return MatroidClass(f"ext:{cls.name}", lambda m: extension_member(m, cls).member)


def union_class(a: MatroidClass, b: MatroidClass, name: str | None = None) -> MatroidClass:
    return MatroidClass(name or f"{a.name}|{b.name}", lambda m: a(m) or b(m))


def almost_class(cls: MatroidClass) -> MatroidClass:
    return union_class(add_class(cls), extension_class(cls), f"almost:{cls.name}")


def is_forbidden_flat(m: GFqMatroid, cls: MatroidClass) -> bool:
    if cls(m):
        return False
    return all(cls(m.restrict(f)) for f in m.proper_flats())


def enumerate_forbidden_flats(cls: MatroidClass, q: int, r_max: int) -> list[GFqMatroid]:
    """Forbidden flats of rank <= r_max, one per isomorphism class, by rank then ground mask."""
    if r_max > RANK_CAPS.get(q, -1):
        raise ValueError(f"r_max={r_max} over the cap {RANK_CAPS.get(q)} for q={q}")
    out = []
    for r in range(1, r_max + 1):
        out.extend(m for m in full_rank_classes(q, r) if is_forbidden_flat(m, cls))
    return out


def thm55_bound(forbidden: list[GFqMatroid]) -> int | None:
    """Rank bound for forbidden flats of the add class, from the base class's forbidden flats."""
    if not forbidden:
        return None
    s = max(f.rank for f in forbidden)
    return max(bound_thm55(f.rank, non_element_count(f), s) for f in forbidden)


@dataclass(frozen=True)
class UnionRankCheck:
    add_max_rank: int
    extension_max_rank: int
    union_max_rank: int

    @property
    def holds(self) -> bool:
        return self.union_max_rank <= self.add_max_rank + self.extension_max_rank


def union_rank_check(cls: MatroidClass, q: int, r_max: int) -> UnionRankCheck:
    """Max forbidden-flat ranks of the add class, extension class and their union, through r_max."""

    def top(c: MatroidClass) -> int:
        return max((f.rank for f in enumerate_forbidden_flats(c, q, r_max)), default=0)

    return UnionRankCheck(top(add_class(cls)), top(extension_class(cls)), top(almost_class(cls)))
