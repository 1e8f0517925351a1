# -*- coding: utf-8  -*-

import networkx as nx
import pytest

from twofactor.config import DEFAULT_LIMITS
from twofactor.enumeration import (canonical_form, dedup_isomorphic, enumerate_small_graphs,
                                   graph_classes)
from twofactor.errors import CapacityError
from twofactor.generators import cycle_graph, petersen_graph, random_graph
from twofactor.graph import Graph


class TestLabeledEnumeration(object):
    @pytest.mark.parametrize(
        'n, connected_only, expected',
        [(0, False, 1),
         (1, False, 1),
         (3, False, 8),
         (4, False, 64),
         (3, True, 4),
         (4, True, 38)],
        ids=['n0', 'n1', 'n3', 'n4', 'n3-connected', 'n4-connected'])
    #
    def test_counts(self, n, connected_only, expected):
        graphs = list(enumerate_small_graphs(n, connected_only=connected_only))
        assert len(graphs) == expected
        assert len(set(graphs)) == expected

    def test_capacity(self):
        limits = DEFAULT_LIMITS._replace(max_labeled_enumeration_order=4)
        with pytest.raises(CapacityError, match='labeled enumeration') as exc_info:
            list(enumerate_small_graphs(5, limits=limits))
        assert (exc_info.value.order, exc_info.value.limit) == (5, 4)

    def test_default_capacity(self):
        with pytest.raises(CapacityError, match='use graph_classes') as exc_info:
            list(enumerate_small_graphs(8))
        assert (exc_info.value.order, exc_info.value.limit) == (8, 7)


class TestGraphClasses(object):
    @pytest.mark.parametrize(
        'n, expected',
        list(enumerate([1, 1, 2, 4, 11, 34, 156])),
        ids=['n%d' % n for n in range(7)])
    #
    def test_all_classes(self, n, expected):
        assert sum(1 for _ in graph_classes(n)) == expected

    @pytest.mark.parametrize(
        'n, expected',
        [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)],
        ids=['n%d' % n for n in range(1, 7)])
    #
    def test_connected_classes(self, n, expected):
        graphs = list(graph_classes(n, connected_only=True))
        assert len(graphs) == expected
        assert all(g.is_connected() for g in graphs)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        'n, connected_only, expected',
        [(7, False, 1044), (7, True, 853)],
        ids=['all', 'connected'])
    #
    def test_order_seven(self, n, connected_only, expected):
        assert sum(1 for _ in graph_classes(n, connected_only=connected_only)) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize(
        'n, connected_only, expected',
        [(8, False, 12346), (8, True, 11117)],
        ids=['all', 'connected'])
    #
    def test_order_eight(self, n, connected_only, expected):
        assert sum(1 for _ in graph_classes(n, connected_only=connected_only)) == expected

    def test_classes_pairwise_non_isomorphic(self):
        graphs = [g.to_networkx() for g in graph_classes(5)]
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                assert not nx.is_isomorphic(a, b)

    def test_capacity(self):
        limits = DEFAULT_LIMITS._replace(max_enumeration_order=5)
        with pytest.raises(CapacityError, match='class enumeration'):
            list(graph_classes(6, limits=limits))


class TestCanonicalForm(object):
    def test_relabelled_copies_agree(self, rng):
        for _ in range(50):
            g = random_graph(8, 0.4, rng)
            order = rng.permutation(8).tolist()
            assert canonical_form(g.relabelled(order)) == canonical_form(g)

    def test_agrees_with_networkx_isomorphism(self, rng):
        graphs = [random_graph(6, 0.5, rng) for _ in range(40)]
        for a in graphs:
            for b in graphs:
                same = nx.is_isomorphic(a.to_networkx(), b.to_networkx())
                assert (canonical_form(a) == canonical_form(b)) == same

    def test_regular_graphs(self):
        # Refinement alone cannot split a vertex-transitive graph.
        g = petersen_graph()
        assert canonical_form(g.relabelled([3, 1, 4, 0, 9, 2, 6, 5, 8, 7])) == canonical_form(g)
        assert canonical_form(cycle_graph(6)) != canonical_form(
            Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))

    def test_dedup(self):
        graphs = list(enumerate_small_graphs(4))
        assert len(list(dedup_isomorphic(graphs))) == 11
