"""Smoke tests for the python bindings."""

import pytest

import tricover as tc


def test_three_graph_basics():
    c6 = tc.loose_triangle_c63()
    assert c6.n == 6
    assert c6.edge_count() == 3
    assert c6.degree(2) == 2
    assert c6.codegree(0, 1) == 1

    g = tc.ThreeGraph(5, [(0, 1, 2), (2, 3, 4)])
    assert g.edge_count() == 2
    assert g == tc.ThreeGraph(5, [(2, 3, 4), (0, 1, 2)])

    with pytest.raises(tc.ToolkitError):
        tc.ThreeGraph(4, [(0, 1, 1)])
    with pytest.raises(tc.ToolkitError):
        tc.ThreeGraph(4, [(0, 1, 2), (0, 1, 2)])


def test_degree_profile_and_link():
    prof = tc.degree_profile(tc.complete_three_graph(6))
    assert prof.min1 == 10
    assert prof.min2 == 4

    link = tc.loose_triangle_c63().link_graph(0)
    assert link.size() == 5
    assert link.has_edge(1, 2)
    assert link.has_edge(4, 5)


def test_covering_and_constructions():
    rep = tc.cover_report(tc.construction1(8))
    assert not rep.fully_covered
    assert rep.uncovered == list(range(8))

    g2, params = tc.construction2(24)
    assert params.b == 7
    assert (params.a_floor, params.a_ceil) == (4, 5)
    assert tc.find_c6_through(g2, params.apex) is None
    assert tc.threshold_exceeded(tc.degree_profile(g2).min1, 24)

    w = tc.find_c6_through(tc.complete_three_graph(6), 0)
    assert w is not None and w.validates(tc.complete_three_graph(6)) and w.contains(0)


def test_patterns():
    k33 = tc.turan_graph(6, 2)
    assert k33.edge_count() == 9
    assert tc.is_triangle_free(k33)
    assert tc.turan_edge_count(7, 3) == 16
    assert tc.max_edges_clique_free_bruteforce(5, 2) == 6

    p5 = tc.find_p5(k33)
    assert p5 is not None and p5.validates(k33)


def test_search():
    res = tc.compute_c2(6, shards=2)
    assert res.value == 1
    assert res.exact
    assert res.graphs_scanned == 2**20
    assert tc.min_codegree(res.witness) == 1
    assert not tc.cover_report(res.witness).fully_covered

    check = tc.verify_min_deg2_implies_pattern(5)
    assert check.holds

    a = tc.random_3graph(8, 0.5, 42)
    b = tc.random_3graph(8, 0.5, 42)
    assert a == b

    seen = []
    stats = tc.enumerate_3graphs(4, visit=lambda g, mask: seen.append(mask))
    assert stats["visited"] == 16
    assert len(set(seen)) == 16


def test_claims():
    g2, params = tc.construction2(24)
    part = tc.partition_around(g2, params.apex, 1)
    assert part.m0 == []
    assert len(part.i0) == 14  # the B vertices are isolated in the apex link

    verdict = tc.check_claim_4_1(g2, params.apex, 1)
    assert verdict.holds

    assert tc.eq1_lower_bound(100) == 40
    assert tc.check_lemma_3_1(tc.complete_three_graph(7), 0)


def test_io_round_trip():
    g = tc.random_3graph(7, 0.3, 11)
    assert tc.parse_three_graph(tc.serialize(g)) == g
    with pytest.raises(tc.ToolkitError):
        tc.parse_three_graph("4 1\n1 1 2\n")
