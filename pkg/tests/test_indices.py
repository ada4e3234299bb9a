from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from hosoya.graphs import graph_from_edge_list, line_graph, single_vertex_graph
from hosoya.indices import (
    edge_hosoya_polynomial,
    edge_hyper_wiener,
    edge_wiener,
    hosoya_polynomial,
    hyper_wiener,
    hyper_wiener_from_polynomial,
    index_identity_discrepancies,
    index_report,
    wiener,
)
from hosoya.polynomials import Polynomial


def test_star_values(star4_graph):
    g = star4_graph
    assert hosoya_polynomial(g).coeffs == (4, 3, 3)
    assert edge_hosoya_polynomial(g).coeffs == (3, 3)
    assert wiener(g) == 9
    assert edge_wiener(g) == 3
    assert hyper_wiener(g) == 12
    assert edge_hyper_wiener(g) == 3


def test_single_vertex_values():
    g = single_vertex_graph(0)
    assert hosoya_polynomial(g).coeffs == (1,)
    assert edge_hosoya_polynomial(g).is_zero()
    assert wiener(g) == 0
    assert edge_wiener(g) == 0
    assert hyper_wiener(g) == 0
    assert edge_hyper_wiener(g) == 0


def test_t23_values(t23_graph):
    g = t23_graph
    assert hosoya_polynomial(g).coeffs == (10, 9, 12, 12, 12)
    assert edge_hosoya_polynomial(g).coeffs == (9, 12, 12, 12)
    assert wiener(g) == 117
    assert edge_wiener(g) == 72
    assert hyper_wiener(g) == 237
    assert edge_hyper_wiener(g) == 120
    # independent recomputation through networkx
    G = oracles.to_networkx(g)
    assert wiener(g) == oracles.wiener_sum(G)
    assert hyper_wiener(g) == oracles.hyper_wiener_sum(G)
    L = oracles.line_of(G)
    assert edge_wiener(g) == oracles.wiener_sum(L)
    assert edge_hyper_wiener(g) == oracles.hyper_wiener_sum(L)


def test_cycle_values():
    # hand-enumerated pair counts: C4 -> [4,4,2], C5 -> [5,5,5], C6 -> [6,6,6,3]
    expected = {
        3: ((3, 3), 3, 3),
        4: ((4, 4, 2), 8, 10),
        5: ((5, 5, 5), 15, 20),
        6: ((6, 6, 6, 3), 27, 42),
    }
    for n, (coeffs, w, ww) in expected.items():
        g = graph_from_edge_list(oracles.cycle_edges(n))
        assert hosoya_polynomial(g).coeffs == coeffs
        assert wiener(g) == w
        assert hyper_wiener(g) == ww


def test_complete_graph_values():
    # every pair adjacent: H = n + C(n,2) x, W = WW = C(n,2)
    for n in range(2, 8):
        g = graph_from_edge_list(oracles.complete_edges(n))
        assert hosoya_polynomial(g).coeffs == (n, comb(n, 2))
        assert wiener(g) == comb(n, 2)
        assert hyper_wiener(g) == comb(n, 2)


def test_hyper_wiener_from_polynomial_examples():
    assert hyper_wiener_from_polynomial(Polynomial([4, 3, 3])) == 12
    assert hyper_wiener_from_polynomial(Polynomial([7])) == 0
    assert hyper_wiener_from_polynomial(Polynomial([3, 3])) == 3
    assert hyper_wiener_from_polynomial(Polynomial()) == 0


@given(
    coeffs=st.lists(st.integers(min_value=0, max_value=10**6), max_size=9)
)
def test_derivative_route_equals_pair_formula(coeffs):
    # for any distance polynomial, H'(1) + H''(1)/2 = sum c_k * k(k+1)/2;
    # k(k-1) c_k is always even, so the guarded halving never trips
    p = Polynomial(coeffs)
    expected = sum(c * k * (k + 1) // 2 for k, c in enumerate(p.coeffs))
    assert hyper_wiener_from_polynomial(p) == expected


def test_index_report_shares_results(t23_graph):
    r = index_report(t23_graph)
    assert (r.wiener, r.edge_wiener) == (117, 72)
    assert (r.hyper_wiener, r.edge_hyper_wiener) == (237, 120)
    assert r.hosoya.coeffs == (10, 9, 12, 12, 12)
    assert r.edge_hosoya.coeffs == (9, 12, 12, 12)
    assert index_identity_discrepancies(r) == []


def test_index_discrepancies_detect_corruption(star4_graph):
    r = index_report(star4_graph)
    broken = type(r)(
        wiener=r.wiener + 1,
        edge_wiener=r.edge_wiener,
        hyper_wiener=r.hyper_wiener,
        edge_hyper_wiener=r.edge_hyper_wiener - 1,
        hosoya=r.hosoya,
        edge_hosoya=r.edge_hosoya,
    )
    messages = index_identity_discrepancies(broken)
    assert len(messages) == 2
    assert any("wiener" in m for m in messages)


def _assert_all_routes_agree(g):
    r = index_report(g)
    assert index_identity_discrepancies(r) == []
    # edge quantities equal the vertex quantities of the line graph
    if g.m:
        lg, _ = line_graph(g)
        assert r.edge_hosoya == hosoya_polynomial(lg)
        assert r.edge_wiener == wiener(lg)
        assert r.edge_hyper_wiener == hyper_wiener(lg)
    assert r.hosoya.evaluate(1) == comb(g.n, 2) + g.n


def test_exhaustive_small_graphs_agree_with_oracle():
    checked = 0
    for n in range(1, 6):
        for edges in oracles.exhaustive_connected_edge_lists(n):
            g = (
                single_vertex_graph(0)
                if not edges
                else graph_from_edge_list(edges)
            )
            _assert_all_routes_agree(g)
            G = oracles.to_networkx(g)
            assert hosoya_polynomial(g).coeffs == oracles.hosoya_coeffs(G)
            assert wiener(g) == oracles.wiener_sum(G)
            assert hyper_wiener(g) == oracles.hyper_wiener_sum(G)
            checked += 1
    assert checked == 1 + 1 + 4 + 38 + 728


def test_nontree_derivative_routes():
    for n in range(3, 13):
        _assert_all_routes_agree(graph_from_edge_list(oracles.cycle_edges(n)))
    for n in range(3, 8):
        _assert_all_routes_agree(graph_from_edge_list(oracles.complete_edges(n)))


@given(
    n=st.integers(min_value=2, max_value=30),
    seed=st.integers(min_value=0, max_value=2**32),
    extra=st.integers(min_value=0, max_value=20),
)
def test_random_graphs_routes_and_oracle(n, seed, extra):
    g = graph_from_edge_list(oracles.random_connected_edges(n, seed, extra))
    _assert_all_routes_agree(g)
    G = oracles.to_networkx(g)
    assert wiener(g) == oracles.wiener_sum(G)
    assert hyper_wiener(g) == oracles.hyper_wiener_sum(G)
    L = oracles.line_of(G)
    assert edge_wiener(g) == oracles.wiener_sum(L)
    assert edge_hyper_wiener(g) == oracles.hyper_wiener_sum(L)


def test_line_graph_identity_for_edge_polynomial(t23_graph):
    lg, _ = line_graph(t23_graph)
    assert edge_hosoya_polynomial(t23_graph) == hosoya_polynomial(lg)


def test_wiener_of_path_by_formula():
    # W(P_n) = C(n+1, 3): sum over gaps, hand-checkable for small n
    for n in range(2, 12):
        g = graph_from_edge_list(oracles.path_edges(n))
        assert wiener(g) == comb(n + 1, 3)
