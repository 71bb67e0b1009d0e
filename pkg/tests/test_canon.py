from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import labeled_graphs, orbit_minima, random_graph
from hereditary.canon import (
    brute_canonical_form,
    canonical_form,
    canonical_key,
    dedup,
    is_isomorphic,
    merge,
)
from hereditary.graph import build, complement, complete, cycle, disjoint_union, empty, path

TWO_K2 = disjoint_union(complete(2), complete(2))


@pytest.mark.parametrize("n", range(0, 7))
def test_keys_partition_like_permutation_oracle(n):
    minima = orbit_minima(n)
    key_to_orbit: dict[bytes, int] = {}
    orbit_to_key: dict[int, bytes] = {}
    for mask, g in enumerate(labeled_graphs(n)):
        key, orbit = canonical_key(g), int(minima[mask])
        assert key_to_orbit.setdefault(key, orbit) == orbit
        assert orbit_to_key.setdefault(orbit, key) == key
    assert len(key_to_orbit) == [1, 1, 2, 4, 11, 34, 156][n]


def test_brute_form_partitions_agree_on_samples(rng):
    for _ in range(150):
        n = rng.randint(1, 7)
        g = random_graph(n, rng, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert brute_canonical_form(g).key == brute_canonical_form(h).key
        assert canonical_key(g) == canonical_key(h)


def test_form_is_a_relabelling(rng):
    for _ in range(200):
        g = random_graph(rng.randint(0, 12), rng, rng.random())
        form = canonical_form(g)
        assert sorted(form.perm) == list(range(g.n))
        assert form.graph() == g.relabel(form.perm)
        # canonical graphs are fixed points
        assert canonical_key(form.graph()) == form.key


def test_all_relabellings_of_six_vertex_graph_share_one_key(rng):
    g = random_graph(6, rng)
    keys = {canonical_key(g.relabel(p)) for p in itertools.permutations(range(6))}
    assert len(keys) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 11), st.randoms(use_true_random=False), st.floats(0, 1))
def test_relabel_invariance(n, r, density):
    g = random_graph(n, r, density)
    perm = list(range(n))
    r.shuffle(perm)
    assert canonical_key(g.relabel(perm)) == canonical_key(g)
    assert canonical_key(complement(g)) == canonical_key(complement(g.relabel(perm)))


def test_highly_symmetric_graphs():
    for n in range(1, 11):
        backwards = list(reversed(range(n)))
        assert canonical_key(complete(n)) == canonical_key(complete(n).relabel(backwards))
    for n in range(3, 11):
        assert canonical_key(cycle(n)) == canonical_key(cycle(n).relabel([(i + 2) % n for i in range(n)]))
    petersen = build(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                     + [(i, i + 5) for i in range(5)])
    assert canonical_key(petersen) == canonical_key(petersen.relabel([9, 3, 5, 1, 7, 0, 2, 8, 4, 6]))


def test_is_isomorphic_examples():
    assert is_isomorphic(cycle(5), complement(cycle(5)))
    assert not is_isomorphic(cycle(4), TWO_K2)
    assert is_isomorphic(complement(cycle(4)), TWO_K2)


def _brute_isomorphic(g, h) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return any(g.relabel(p) == h for p in itertools.permutations(range(g.n)))


def test_is_isomorphic_matches_permutation_search_on_5_vertex_pairs(rng):
    pool = [random_graph(5, rng, 0.5) for _ in range(60)]
    for g, h in itertools.combinations(pool, 2):
        assert is_isomorphic(g, h) == _brute_isomorphic(g, h)


def test_dedup_examples():
    assert len(dedup(labeled_graphs(4))) == 11
    c4 = cycle(4)
    assert len(dedup([c4, c4.relabel([2, 0, 3, 1])])) == 1
    assert dedup([]) == {}


def test_dedup_keeps_first_and_merge_is_union():
    a, b = cycle(4), cycle(4).relabel([1, 0, 2, 3])
    assert next(iter(dedup([a, b]).values())) == a
    left = dedup([cycle(4), path(4)])
    right = dedup([path(4).relabel([3, 2, 1, 0]), empty(4)])
    merged = merge(left, right)
    assert set(merged) == set(left) | set(right)
    assert len(merged) == 3
