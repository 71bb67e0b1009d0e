from __future__ import annotations

import itertools

import pytest

from conftest import graphs_through
from hereditary.classes import CHORDAL, COGRAPH, P4, SPLIT, THRESHOLD, TWO_K2, is_pq_edge_split, is_split
from hereditary.graph import complement, cycle, disjoint_union, path
from hereditary.operators import (
    OperatorSpec,
    Verdict,
    edge_add_member,
    edge_apex_member,
    edit_search,
    iterated_member,
    parse_operator_spec,
    resolve_class,
    vertex_apex_member,
)


def test_edge_add_examples():
    assert not edge_add_member(cycle(5), SPLIT)
    assert not edge_add_member(TWO_K2, THRESHOLD)
    assert not edge_add_member(path(5), COGRAPH)
    verdict = edge_add_member(P4, COGRAPH)
    assert verdict and COGRAPH(P4.add_edge(*verdict.witness))
    assert COGRAPH(P4.add_edge(0, 3))  # closing the path gives C4


def test_edge_apex_examples():
    verdict = edge_apex_member(cycle(4), SPLIT)
    assert verdict and SPLIT(cycle(4).delete_edge(*verdict.witness))
    assert edge_apex_member(cycle(5), CHORDAL)
    assert not edge_apex_member(cycle(5), SPLIT)


def test_vertex_apex_examples():
    verdict = vertex_apex_member(cycle(5), SPLIT)
    assert verdict and verdict.witness in range(5)
    four_k2 = disjoint_union(TWO_K2, TWO_K2)
    assert four_k2.n == 8 and four_k2.edge_count() == 4
    assert not vertex_apex_member(four_k2, SPLIT)
    for g in graphs_through(5, 1):
        if SPLIT(g):
            verdict = vertex_apex_member(g, SPLIT)
            assert verdict and verdict.witness is None


def test_member_verdict_is_truthy():
    assert Verdict(True) and not Verdict(False)


def _brute_two_additions(g, base) -> bool:
    non_edges = list(g.non_edges())
    candidates = [()] + [(e,) for e in non_edges] + list(itertools.combinations(non_edges, 2))
    for added in candidates:
        h = g
        for u, v in added:
            h = h.add_edge(u, v)
        if base(h):
            return True
    return False


def test_two_additions_on_two_pentagons():
    g = disjoint_union(cycle(5), cycle(5))
    spec = OperatorSpec(SPLIT, adds=2)
    assert iterated_member(g, spec).member == _brute_two_additions(g, SPLIT)
    for h in [cycle(5), cycle(6), disjoint_union(P4, TWO_K2)]:
        assert iterated_member(h, spec).member == _brute_two_additions(h, SPLIT)


def test_witness_is_a_real_edit():
    spec = parse_operator_spec("split+add^1-edge^1-vertex^1")
    for g in graphs_through(6, 1):
        verdict = iterated_member(g, spec)
        if verdict.witness is None:
            continue
        added, deleted, removed = verdict.witness
        h = g
        for u, v in added:
            h = h.add_edge(u, v)
        for u, v in deleted:
            h = h.delete_edge(u, v)
        keep = [v for v in range(g.n) if v not in removed]
        assert SPLIT(h.induced(keep))


@pytest.mark.parametrize("base", [SPLIT, THRESHOLD, COGRAPH], ids=lambda c: c.name)
def test_edge_add_dual_to_edge_apex(base):
    for g in graphs_through(6):
        assert bool(edge_add_member(g, base)) == bool(edge_apex_member(complement(g), base))


def test_pq_edge_split_composition_small():
    for g in graphs_through(5):
        for p, q in itertools.product(range(3), repeat=2):
            spec = OperatorSpec(SPLIT, adds=p, edge_deletes=q)
            assert iterated_member(g, spec).member == is_pq_edge_split(g, (p, q))


@pytest.mark.parametrize("base", [SPLIT, COGRAPH], ids=lambda c: c.name)
def test_edit_order_is_irrelevant(base):
    for g in graphs_through(5):
        for p, q in itertools.product(range(3), repeat=2):
            answers = {edit_search(g, base, p, q, 0, order) is not None
                       for order in ("disjoint", "add-first", "delete-first")}
            assert len(answers) == 1


def test_budgets_are_monotone():
    for g in graphs_through(5):
        for p, q, r in itertools.product(range(2), repeat=3):
            if iterated_member(g, OperatorSpec(THRESHOLD, p, q, r)):
                for bigger in ((p + 1, q, r), (p, q + 1, r), (p, q, r + 1)):
                    assert iterated_member(g, OperatorSpec(THRESHOLD, *bigger))


@pytest.mark.parametrize(
    "text",
    ["edge-add:split", "edge-apex:cograph", "vertex-apex:chordal", "almost:threshold",
     "split+add^2", "cograph-edge^1-vertex^1", "pq-edge-split:1,0+add^1"],
)
def test_operator_class_heredity(text):
    spec = parse_operator_spec(text)
    for g in graphs_through(6, 1):
        if spec.member(g):
            assert all(spec.member(g.delete_vertex(v)) for v in range(g.n)), text


def test_union_mode_is_union_of_parts():
    spec = parse_operator_spec("almost:split")
    parts = [OperatorSpec(SPLIT, adds=1), OperatorSpec(SPLIT, edge_deletes=1), OperatorSpec(SPLIT, vertex_deletes=1)]
    assert spec.components() == parts
    for g in graphs_through(6):
        assert spec.member(g) == any(p.member(g) for p in parts)


def test_single_mode_contains_union_mode():
    single = parse_operator_spec("split+add^1-edge^1-vertex^1")
    union = parse_operator_spec("split+add^1-edge^1-vertex^1:union")
    for g in graphs_through(6):
        if union.member(g):
            assert single.member(g)


def test_parse_and_text():
    assert parse_operator_spec("edge-add:split") == OperatorSpec(SPLIT, adds=1)
    assert parse_operator_spec("split+add^1").text == "split+add^1"
    assert parse_operator_spec("threshold-edge^2-vertex^1:union").text == "threshold-edge^2-vertex^1:union"
    assert parse_operator_spec("pq-split:2,1+add^1").base.name == "pq-split:2,1"
    assert resolve_class("split") is SPLIT
    assert resolve_class("edge-add:split")(cycle(4))
    for bad in ["", "interval", "split+add^x", "edge-add:"]:
        with pytest.raises(ValueError):
            parse_operator_spec(bad)
    with pytest.raises(ValueError):
        OperatorSpec(SPLIT, adds=-1)


def test_complement_closure_flag():
    assert parse_operator_spec("split+add^1-edge^1").complement_closed
    assert not parse_operator_spec("edge-add:split").complement_closed
    assert not parse_operator_spec("chordal+add^1-edge^1").complement_closed
    spec = parse_operator_spec("threshold+add^1-edge^1")
    for g in graphs_through(5):
        assert spec.member(g) == spec.member(complement(g))


def test_zero_budget_is_base():
    spec = OperatorSpec(SPLIT)
    assert all(spec.member(g) == is_split(g) for g in graphs_through(5))
