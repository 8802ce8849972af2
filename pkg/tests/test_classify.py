import itertools

import pytest

from hkmonoid.classify import cached_build, classify, hk_isomorphic
from hkmonoid.mixedgraph import MixedGraph
from hkmonoid.structure import (
    check_embedding,
    check_projection,
    is_below,
    labelled_graphs,
    subset_monoid,
)
from hkmonoid.monoid import verify_generator_map
from hkmonoid.verify import CASES, run_case, run_cases, select_cases


def test_classify_small():
    c1 = classify(1)
    assert c1.sizes == [2]
    c2 = classify(2)
    assert c2.sizes == [4, 6, 5]
    assert len(c2.monoid_classes()) == 3


def test_classify_three_vertices():
    c = classify(3)
    assert len(c.graphs) == 16 and not c.skipped
    assert c.iso_matches() and c.anti_matches()
    assert c.iso == c.graph_iso
    assert c.anti == c.graph_anti
    assert c.statuses.count("infinite") == 4


def test_classify_limit():
    with pytest.raises(ValueError):
        classify(4)


def test_infinite_vs_finite_never_isomorphic():
    tri = cached_build(MixedGraph.build(3, unoriented=[(1, 2), (2, 3), (1, 3)]))
    path = cached_build(MixedGraph.build(3, unoriented=[(1, 2), (2, 3)]))
    assert hk_isomorphic(tri, path) is False


def test_below_order():
    un = MixedGraph.build(2, unoriented=[(1, 2)])
    arc = MixedGraph.build(2, arcs=[(1, 2)])
    assert is_below(arc, un) and is_below(MixedGraph(2), arc)
    assert not is_below(un, arc)
    assert not is_below(MixedGraph.build(2, arcs=[(2, 1)]), arc)


def test_projection_examples():
    r = check_projection(MixedGraph.build(2, unoriented=[(1, 2)]), MixedGraph(2))
    assert r.is_homomorphism and r.is_surjective and r.is_injective is False
    with pytest.raises(ValueError):
        check_projection(MixedGraph(2), MixedGraph.build(2, unoriented=[(1, 2)]))


def test_embedding_examples():
    edge = MixedGraph.build(2, unoriented=[(1, 2)])
    path = MixedGraph.build(3, unoriented=[(1, 2), (2, 3)])
    r = check_embedding({1: 1, 2: 2}, edge, path)
    assert r.is_homomorphism and r.is_injective
    with pytest.raises(ValueError):
        check_embedding({1: 1, 2: 3}, edge, path)


def test_embedding_of_infinite_monoid_uses_left_inverse():
    cyc = MixedGraph.build(3, arcs=[(1, 2), (2, 3), (3, 1)])
    r = check_embedding((1, 2, 3), cyc, cyc)
    assert r.method == "left inverse" and r.is_injective


def test_all_projections_and_embeddings_up_to_three_vertices():
    graphs = [g for n in (1, 2, 3) for g in labelled_graphs(n)]
    for theta in graphs:
        for phi in graphs:
            if is_below(phi, theta):
                r = check_projection(theta, phi)
                assert r.is_homomorphism and r.is_surjective
            if theta.n <= phi.n:
                for f in itertools.permutations(phi.vertices, theta.n):
                    try:
                        r = check_embedding(f, theta, phi)
                    except ValueError:
                        continue
                    assert r.is_homomorphism and r.is_injective


def test_edgeless_is_subset_monoid():
    for n in range(1, 5):
        S, H = subset_monoid(n), cached_build(MixedGraph(n)).monoid
        assert S.size == 2**n
        assert verify_generator_map(H, S, S.gens).is_isomorphism


def test_registry():
    assert select_cases("all") == sorted(CASES)
    assert select_cases("thm4,thm1.vi") == ["thm4", "thm1.vi"]
    with pytest.raises(KeyError):
        select_cases("thm9")


@pytest.mark.parametrize("case_id, ns", [("thm1.vii", [4]), ("prop32", [5]), ("thm4", [3]), ("modules", [2])])
def test_selected_cases_pass(case_id, ns):
    result = run_case(case_id, ns)
    assert result.outcome == "pass", result.lines


def test_prop32_detail_mentions_value():
    result = run_case("prop32", [5])
    assert any("132 strongly special classes" in line for line in result.lines)


def test_strictness_lines():
    result = run_case("thm1.vii", [4])
    sizes = [line for line in result.lines if "linear" in line]
    assert len(sizes) == 2 and all("42" in line for line in sizes)


def test_classification_beyond_limit_is_skipped():
    assert run_case("thm4", [4]).outcome == "skipped"


def test_parallel_run_order():
    results = run_cases(["thm1.vi", "regular"], [3], jobs=2)
    assert [r.id for r in results] == ["regular", "thm1.vi"]
    assert all(r.outcome == "pass" for r in results)
