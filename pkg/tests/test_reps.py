import pytest

from hkmonoid.combinat import catalan
from hkmonoid.mixedgraph import MixedGraph, linear_path, orientations
from hkmonoid.reps import (
    RepresentationError,
    boolean_generators,
    c_transformations,
    check_faithful,
    check_hk_relations,
    check_module_associative,
    compose_transformations,
    image_semigroup,
    is_order_preserving_decreasing,
    is_regular_action,
    m1_act,
    m1_elements,
    m2_act,
    m2_elements,
    projective_module,
    simple_characters,
    tau_generators,
    theta_generators,
)
from hkmonoid.monoid import from_generators
from hkmonoid.rewrite import hk_monoid


def test_tau_on_single_arrow():
    g = MixedGraph.build(2, arcs=[(2, 1)])
    points, (t1, t2) = tau_generators(g)
    assert points == [("edge", 2, 1), ("sink", 1), ("source", 2)]
    # tau_1 sends the sink 1 to the arrow 2 -> 1; tau_2 sends that arrow to the source 2
    assert t1 == (1, 1, 3)
    assert t2 == (3, 2, 3)


def test_tau_point_count_linear():
    for n in range(1, 7):
        points, _ = tau_generators(linear_path(n))
        assert len(points) == n + 1


def test_tau_refusals():
    with pytest.raises(RepresentationError):
        tau_generators(MixedGraph.build(2, unoriented=[(1, 2)]))
    with pytest.raises(RepresentationError):
        tau_generators(MixedGraph.build(3, arcs=[(1, 2), (2, 3), (3, 1)]))
    # D4 with all arrows into the branch vertex
    with pytest.raises(RepresentationError):
        tau_generators(MixedGraph.build(4, arcs=[(1, 2), (3, 2), (4, 2)]))


def test_tau_with_a_sink_of_indegree_two():
    g = MixedGraph.build(3, arcs=[(1, 2), (3, 2)])
    for swap in (False, True):
        points, taus = tau_generators(g, swap_choice=swap)
        assert ("sink2", 2) in points
        assert check_hk_relations(g, taus, "transformation") == []


def test_function_composition_convention():
    f, g = (2, 2, 3), (3, 2, 3)
    assert compose_transformations(f, g) == (3, 2, 3)
    assert compose_transformations(g, f) == (2, 2, 3)


def test_theta_on_single_arrow():
    g = MixedGraph.build(2, arcs=[(1, 2)])
    t1, t2 = theta_generators(g)
    # columns are images: theta_1 kills v_1, theta_2 sends v_2 to v_1
    assert t1 == ((0, 0), (0, 1))
    assert t2 == ((1, 1), (0, 0))
    assert boolean_generators(g) == [t1, t2]


def test_theta_rejects_unoriented():
    with pytest.raises(RepresentationError):
        theta_generators(MixedGraph.build(2, unoriented=[(1, 2)]))


def test_image_sizes_for_linear_a2():
    g = linear_path(2)
    assert image_semigroup(tau_generators(g)[1], "transformation").size == 5
    assert image_semigroup(theta_generators(g), "matrix").size == 5
    assert image_semigroup(c_transformations(3), "transformation").size == 14


def test_relations_on_d4_and_e6_orientations():
    for n, edges in ((4, [(1, 2), (2, 3), (2, 4)]), (6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])):
        for g in orientations(n, edges):
            assert check_hk_relations(g, theta_generators(g), "matrix") == []
            assert check_hk_relations(g, theta_generators(g), "boolean") == []
            try:
                _, taus = tau_generators(g)
            except RepresentationError:
                continue
            assert check_hk_relations(g, taus, "transformation") == []


def test_relation_check_detects_failure():
    g = MixedGraph.build(2, arcs=[(1, 2)])
    assert check_hk_relations(g, theta_generators(MixedGraph.build(2, arcs=[(2, 1)])), "matrix")


def test_faithfulness_reports():
    for kind in ("transformation", "matrix", "boolean"):
        r = check_faithful(linear_path(3), kind)
        assert r.faithful and r.settled and r.image_size == 14
    r = check_faithful(MixedGraph.build(3, arcs=[(1, 2), (3, 2)]), "matrix")
    assert r.faithful is not None and not r.settled


def test_kiselman_matrix_representation_is_faithful():
    g = MixedGraph.build(3, arcs=[(2, 1), (3, 1), (3, 2)])
    assert check_faithful(g, "matrix").faithful


def test_catalan_transformations():
    assert c_transformations(2) == [(1, 1, 3), (1, 2, 2)]
    for n in range(2, 6):
        ts = c_transformations(n)
        for i in range(1, n):
            a, b = ts[i - 1], ts[i]
            aba = compose_transformations(compose_transformations(a, b), a)
            bab = compose_transformations(compose_transformations(b, a), b)
            assert aba == bab == compose_transformations(a, b)
        C = image_semigroup(ts, "transformation")
        assert C.size == catalan(n + 1)
        assert all(is_order_preserving_decreasing(f) for f in C.labels)


def test_m1():
    assert m1_elements(2) == [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3)]
    assert m1_act(1, (1, 2, 3)) == (1, 1, 3)
    for x in m1_elements(3):
        for i in (1, 2, 3):
            assert m1_act(i, m1_act(i, x)) == m1_act(i, x)
    with pytest.raises(ValueError):
        m1_act(1, (1, 3, 3))


def test_m2():
    assert len(m2_elements(2)) == 5
    assert m2_act(3, (1, 1, -1, 1, -1, -1, 1, 1, -1, -1)) == (1, 1, -1, 1, 1, -1, -1, 1, -1, -1)
    adjacent = (1, 1, -1, -1)
    assert m2_act(1, adjacent) == adjacent
    with pytest.raises(ValueError):
        m2_act(1, (-1, 1, 1, -1))


def test_regular_actions():
    for n in range(1, 5):
        C = image_semigroup(c_transformations(n), "transformation")
        for points, act in ((m1_elements(n), m1_act), (m2_elements(n), m2_act)):
            assert len(points) == catalan(n + 1)
            assert is_regular_action(C, points, act, side="right") is not None


def test_left_reading_is_not_an_action():
    C = image_semigroup(c_transformations(3), "transformation")
    with pytest.raises(ValueError):
        is_regular_action(C, m1_elements(3), m1_act, side="left")


def test_trivial_action_has_no_base_point():
    C = image_semigroup(c_transformations(2), "transformation")
    assert is_regular_action(C, ["*"], lambda k, p: p) is None


def test_simple_and_projective_modules():
    M = hk_monoid(MixedGraph.build(2, arcs=[(1, 2)])).monoid
    assert len(simple_characters(M)) == 4
    basis, action = projective_module(M, ())
    assert basis == [M.identity]
    basis, action = projective_module(M, (1, 2))
    assert len(basis) == M.size
    for X in ((), (1,), (2,), (1, 2)):
        basis, action = projective_module(M, X)
        assert check_module_associative(M, basis, action)
    with pytest.raises(ValueError):
        projective_module(M, (3,))


def test_simple_characters_reject_non_content_monoid():
    # Z/2 has no content grading: the generator squares to the identity
    Z2 = from_generators([1], lambda x, y: (x + y) % 2, 0)
    with pytest.raises(AssertionError):
        simple_characters(Z2)
