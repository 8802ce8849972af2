import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkmonoid.mixedgraph import MixedGraph, enumerate_mixed_graphs, from_code, linear_path
from hkmonoid.rewrite import (
    BUDGET_EXCEEDED,
    COMPLETE,
    FINITE,
    Presentation,
    default_budgets,
    enumerate_monoid,
    hk_monoid,
    irreducible_automaton,
    kb_complete,
    maps_to_homomorphism,
    normal_form,
    presentation_of,
    presented_isomorphism,
    shortlex_key,
)

from oracles import connected

A2 = MixedGraph.build(2, arcs=[(1, 2)])
A2U = MixedGraph.build(2, unoriented=[(1, 2)])
E2 = MixedGraph(2)

# sizes of the 12 finite HK monoids among the 16 graph classes on three vertices,
# listed in class order; None marks the four infinite ones
THREE_VERTEX_SIZES = [8, 12, 10, 24, 17, 17, 13, 14, 13, None, None, 25, None, 25, 18, None]


def test_presentations():
    assert set(presentation_of(E2).relations) == {((1, 1), (1,)), ((2, 2), (2,)), ((1, 2), (2, 1))}
    assert set(presentation_of(A2U).relations) == {((1, 1), (1,)), ((2, 2), (2,)), ((1, 2, 1), (2, 1, 2))}
    assert set(presentation_of(A2).relations) == {
        ((1, 1), (1,)),
        ((2, 2), (2,)),
        ((1, 2, 1), (1, 2)),
        ((2, 1, 2), (1, 2)),
    }


def test_reversed_presentation():
    p = presentation_of(A2).reversed()
    assert ((2, 1, 2), (2, 1)) in p.relations


def test_presentation_letter_range():
    with pytest.raises(ValueError):
        Presentation(2, (((1, 3), (1,)),))


def test_completion_of_edgeless_pair():
    rs = kb_complete(presentation_of(E2))
    assert rs.status == COMPLETE
    assert set(rs.rules) == {((1, 1), (1,)), ((2, 2), (2,)), ((2, 1), (1, 2))}


def test_oriented_pair_irreducibles():
    rs = kb_complete(presentation_of(A2))
    assert rs.complete
    en = enumerate_monoid(rs)
    assert en.elements == [(), (1,), (2,), (1, 2), (2, 1)]
    assert normal_form(rs, (1, 2, 1)) == (1, 2)
    assert normal_form(rs, (2, 1, 2)) == (1, 2)
    assert normal_form(rs, ()) == ()


def test_small_sizes():
    assert hk_monoid(A2).monoid.size == 5
    assert hk_monoid(E2).monoid.size == 4
    assert hk_monoid(A2U).monoid.size == 6


def test_three_vertex_sizes():
    sizes = []
    for g in enumerate_mixed_graphs(3):
        b = hk_monoid(g)
        sizes.append(b.monoid.size if b.monoid is not None else None)
        assert b.system.complete
        assert (b.monoid is None) == b.certified_infinite
    assert sizes == THREE_VERTEX_SIZES


def test_infinite_classes():
    tri = MixedGraph.build(3, unoriented=[(1, 2), (2, 3), (1, 3)])
    cyc = MixedGraph.build(3, arcs=[(1, 2), (2, 3), (3, 1)])
    for g in (tri, cyc):
        b = hk_monoid(g)
        assert b.certified_infinite and b.status == BUDGET_EXCEEDED
        acyclic, count = irreducible_automaton(b.system)
        assert acyclic is False and count is None


def test_kiselman_three():
    g = MixedGraph.build(3, arcs=[(2, 1), (3, 1), (3, 2)])
    assert hk_monoid(g).monoid.size == 18


def test_automaton_count_matches_enumeration():
    for n in range(1, 6):
        b = hk_monoid(linear_path(n))
        acyclic, count = irreducible_automaton(b.system)
        assert acyclic and count == b.enumeration.size


def test_budget_exceeded_enumeration():
    tri = MixedGraph.build(3, unoriented=[(1, 2), (2, 3), (1, 3)])
    en = enumerate_monoid(hk_monoid(tri).system, max_elements=50)
    assert en.status == BUDGET_EXCEEDED and en.size == 50


def test_rule_budget_reported():
    tri = MixedGraph.build(3, unoriented=[(1, 2), (2, 3), (1, 3)])
    rs = kb_complete(presentation_of(tri), max_rules=2)
    assert rs.status == BUDGET_EXCEEDED
    assert hk_monoid(tri, max_rules=2).status == BUDGET_EXCEEDED


def test_budget_scale(monkeypatch):
    monkeypatch.setenv("HK_BUDGET_SCALE", "2")
    assert default_budgets()["max_rules"] == 40000


@st.composite
def small_graph_and_words(draw):
    n = draw(st.integers(1, 3))
    g = from_code(n, draw(st.lists(st.integers(0, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)))
    word = st.lists(st.integers(1, n), max_size=6).map(tuple)
    return g, draw(word), draw(word)


@settings(max_examples=150, deadline=None)
@given(small_graph_and_words())
def test_normal_forms_agree_with_relation_search(case):
    g, u, v = case
    b = hk_monoid(g)
    relations = b.presentation.relations
    nu = b.system.reduce(u)
    # every word is connected to its normal form
    assert connected(u, nu, relations, cap=9)
    if connected(u, v, relations, cap=8):
        assert nu == b.system.reduce(v)


def test_completed_systems_are_locally_confluent():
    for g in enumerate_mixed_graphs(3):
        rs = hk_monoid(g).system
        assert rs.critical_pairs_resolve()
        for lhs, rhs in rs.rules:
            assert shortlex_key(rhs) < shortlex_key(lhs)


def test_enumeration_invariants():
    for g in enumerate_mixed_graphs(3):
        b = hk_monoid(g)
        if b.monoid is None:
            continue
        en = b.enumeration
        assert en.status == FINITE
        assert en.elements == sorted(en.elements, key=shortlex_key)
        assert en.content[0] == frozenset()
        for x, row in enumerate(en.right_cayley):
            for k, y in enumerate(row, start=1):
                assert en.content[y] == en.content[x] | {k}
                assert en.elements[y] == b.system.reduce(en.elements[x] + (k,))
        # irreducible words are closed under prefixes
        pool = set(en.elements)
        assert all(w[:-1] in pool for w in en.elements if w)


def test_relations_preserve_content():
    for g in enumerate_mixed_graphs(3):
        for lhs, rhs in presentation_of(g).relations:
            assert set(lhs) == set(rhs)


def test_json_and_dot_export():
    en = hk_monoid(A2).enumeration
    data = en.to_json()
    assert data == {
        "status": "Finite",
        "size": 5,
        "elements": ["", "1", "2", "12", "21"],
        "cayley": [[1, 2], [1, 3], [4, 2], [3, 3], [4, 3]],
    }
    dot = en.to_dot()
    assert dot.startswith("digraph") and '"12"' in dot


def test_relabel_gives_presented_isomorphism():
    cyc = MixedGraph.build(3, arcs=[(1, 2), (2, 3), (3, 1)])
    other = MixedGraph.build(3, arcs=[(2, 1), (3, 2), (1, 3)])
    a, b = hk_monoid(cyc), hk_monoid(other)
    assert presented_isomorphism(a, b) is not None
    assert presented_isomorphism(a, b, anti=True) is not None
    tri = hk_monoid(MixedGraph.build(3, unoriented=[(1, 2), (2, 3), (1, 3)]))
    assert presented_isomorphism(a, tri) is None


def test_maps_to_homomorphism_projection():
    assert maps_to_homomorphism(presentation_of(A2U), hk_monoid(E2).system, [(1,), (2,)])
    # the reverse direction fails: 12 = 21 is not a consequence of the braid relation
    assert not maps_to_homomorphism(presentation_of(E2), hk_monoid(A2U).system, [(1,), (2,)])


def test_equal_helper():
    b = hk_monoid(A2)
    assert b.equal((1, 2, 1), (2, 1, 2))
    assert not b.equal((1, 2), (2, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_words_of_small_length_cover_monoid(n):
    # every element of a finite HK monoid has a normal form of length <= number of elements
    b = hk_monoid(linear_path(n))
    forms = {b.system.reduce(w) for L in range(0, 2 * n + 1) for w in itertools.product(range(1, n + 1), repeat=L)}
    assert forms == set(b.enumeration.elements)
