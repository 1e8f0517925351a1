# -*- coding: utf-8  -*-

import itertools

import networkx as nx
import pytest

from twofactor.errors import InvalidArgumentError
from twofactor.extended import ExtendedValue
from twofactor.generators import (complete_bipartite, complete_graph, cycle_graph,
                                  empty_graph, path_graph, petersen_graph, random_graph,
                                  two_kk_join_complement, wheel)
from twofactor.graph import Graph
from twofactor.invariants import (connectivity, connectivity_exhaustive, delta_t,
                                  independence_number, independent_sets_of_size,
                                  invariant_summary, local_connectivity, sigma_m,
                                  sigma_m_exhaustive, sigma_t_m, sigma_t_m_exhaustive)

INF = ExtendedValue.INFINITY


def nx_independence_number(g):
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(nx.complement(g.to_networkx())))


def random_graphs(rng, count, max_n=9):
    for _ in range(count):
        yield random_graph(int(rng.integers(1, max_n + 1)), float(rng.uniform(0.1, 0.9)), rng)


class TestDeltaT(object):
    def test_largest_degrees(self):
        g = wheel(6)
        assert delta_t(g, [0, 1, 2], 1) == 5
        assert delta_t(g, [0, 1, 2], 3) == 11

    @pytest.mark.parametrize(
        't, vertices', [(0, [0, 1]), (3, [0, 1])], ids=['zero', 'too-many'])
    #
    def test_bad_t(self, t, vertices):
        with pytest.raises(InvalidArgumentError, match='need 1 <= t <= \\|X\\|'):
            delta_t(complete_graph(3), vertices, t)


class TestIndependentSets(object):
    def test_against_subsets(self, rng):
        for g in random_graphs(rng, 30):
            for m in range(4):
                expected = {frozenset(xs) for xs in itertools.combinations(g.vertices, m)
                            if g.is_independent(xs)}
                found = list(independent_sets_of_size(g, m))
                assert len(found) == len(set(found))
                assert set(found) == expected

    def test_negative_size(self):
        with pytest.raises(InvalidArgumentError, match='nonnegative'):
            list(independent_sets_of_size(complete_graph(3), -1))


class TestIndependenceNumber(object):
    @pytest.mark.parametrize(
        'g, expected',
        [(empty_graph(0), 0),
         (empty_graph(5), 5),
         (complete_graph(6), 1),
         (complete_bipartite(3, 4), 4),
         (cycle_graph(7), 3),
         (petersen_graph(), 4),
         (two_kk_join_complement(3), 3)],
        ids=['n0', 'edgeless', 'K6', 'K3,4', 'C7', 'petersen', 'kky'])
    #
    def test_known(self, g, expected):
        assert independence_number(g) == expected

    def test_against_networkx(self, rng):
        for g in random_graphs(rng, 100, max_n=12):
            assert independence_number(g) == nx_independence_number(g)


class TestSigma(object):
    @pytest.mark.parametrize(
        'g, m, expected',
        [(complete_bipartite(3, 4), 2, 6),
         (complete_bipartite(3, 4), 4, 12),
         (complete_bipartite(3, 4), 5, None),
         (complete_graph(4), 1, 3),
         (complete_graph(4), 2, None),
         (wheel(6), 2, 6)],
        ids=['K3,4-2', 'K3,4-4', 'K3,4-5', 'K4-1', 'K4-2', 'W6'])
    #
    def test_sigma_m(self, g, m, expected):
        assert sigma_m(g, m) == (INF if expected is None else ExtendedValue(expected))

    def test_sigma_m_against_exhaustive(self, rng):
        for g in random_graphs(rng, 60):
            for m in range(1, 5):
                assert sigma_m(g, m) == sigma_m_exhaustive(g, m)

    def test_sigma_t_m_against_exhaustive(self, rng):
        for g in random_graphs(rng, 60):
            for m in range(1, 5):
                for t in range(1, m + 1):
                    assert sigma_t_m(g, t, m) == sigma_t_m_exhaustive(g, t, m)

    def test_sigma_t_m_with_t_equal_m(self, rng):
        for g in random_graphs(rng, 20):
            assert sigma_t_m(g, 3, 3) == sigma_m(g, 3)

    def test_sigma_t_m_monotone_in_t(self, rng):
        for g in random_graphs(rng, 20):
            values = [sigma_t_m(g, t, 4) for t in range(1, 5)]
            assert values == sorted(values)

    @pytest.mark.parametrize(
        'call, msg',
        [(lambda g: sigma_m(g, 0), 'm must be positive'),
         (lambda g: sigma_t_m(g, 0, 2), 'need 1 <= t <= m'),
         (lambda g: sigma_t_m(g, 3, 2), 'need 1 <= t <= m')],
        ids=['m0', 't0', 't-above-m'])
    #
    def test_bad_arguments(self, call, msg):
        with pytest.raises(InvalidArgumentError, match=msg):
            call(complete_graph(3))


class TestConnectivity(object):
    @pytest.mark.parametrize(
        'g, expected',
        [(empty_graph(0), 0),
         (empty_graph(1), 0),
         (complete_graph(2), 1),
         (complete_graph(6), 5),
         (path_graph(5), 1),
         (cycle_graph(6), 2),
         (Graph(4, [(0, 1), (2, 3)]), 0),
         (complete_bipartite(3, 4), 3),
         (wheel(6), 3),
         (petersen_graph(), 3)],
        ids=['n0', 'n1', 'K2', 'K6', 'P5', 'C6', 'disconnected', 'K3,4', 'W6', 'petersen'])
    #
    def test_known(self, g, expected):
        assert connectivity(g) == expected

    def test_against_networkx(self, rng):
        for g in random_graphs(rng, 100, max_n=11):
            expected = nx.node_connectivity(g.to_networkx()) if g.n > 1 else 0
            assert connectivity(g) == expected

    def test_against_exhaustive(self, rng):
        for g in random_graphs(rng, 40, max_n=8):
            assert connectivity(g) == connectivity_exhaustive(g)

    def test_local_connectivity(self):
        assert local_connectivity(complete_bipartite(3, 4), 0, 1) == 4
        with pytest.raises(InvalidArgumentError, match='non-adjacent'):
            local_connectivity(complete_graph(3), 0, 1)


class TestSummary(object):
    def test_fields(self):
        summary = invariant_summary(complete_bipartite(3, 4), t=2, m=3)
        assert summary.as_dict() == {
            'n': 7, 'kappa': 3, 'alpha': 4, 'min_degree': 3, 'sigma_2': 6,
            'sigma_m': 9, 'sigma_t_m': 6, 't': 2, 'm': 3}

    def test_infinite_values(self):
        summary = invariant_summary(complete_graph(4))
        assert summary.as_dict()['sigma_2'] == '+inf'
        assert summary.sigma_m is None
