# -*- coding: utf-8  -*-

import pytest

from twofactor.cycles import CycleSystem, OrientedCycle, OrientedPath
from twofactor.errors import InvalidArgumentError, PreconditionViolation
from twofactor.generators import complete_graph, cycle_graph, path_graph, petersen_graph
from twofactor.graph import Graph
from twofactor.insertion import (cycle_from_degree_rich_path, find_cycle_at_least,
                                 first_non_insertible, insert_path, insertion_edges,
                                 is_insertible)
from twofactor.verify import verify_insertion_lemma


def c4_with_pendant():
    return Graph(5, list(cycle_graph(4).edges()) + [(0, 4)])


class TestInsertible(object):
    def test_edges_listed_in_order(self, k7_two_triangles, k7):
        found = list(insertion_edges(k7, k7_two_triangles, 6))
        assert found[0] == (0, 0, 1)
        assert len(found) == 6

    def test_pendant_vertex(self):
        g = c4_with_pendant()
        sys = CycleSystem(g, [OrientedCycle([0, 1, 2, 3])])
        assert not is_insertible(g, sys, 4)

    def test_vertex_on_system(self, k7, k7_two_triangles):
        with pytest.raises(InvalidArgumentError, match='vertex 0 lies on member 0'):
            is_insertible(k7, k7_two_triangles, 0)

    def test_first_non_insertible(self):
        g = c4_with_pendant()
        sys = CycleSystem(g, [OrientedCycle([0, 1, 2, 3])])
        assert first_non_insertible(g, sys, [4]) == 4
        k5 = complete_graph(5)
        assert first_non_insertible(k5, CycleSystem(k5, [OrientedCycle([0, 1, 2])]), [3, 4]) is None
        assert first_non_insertible(k5, CycleSystem(k5, []), [3, 4]) == 3


class TestInsertPath(object):
    def test_single_vertex(self, k7, k7_two_triangles):
        trace = insert_path(k7, k7_two_triangles, [6])
        assert trace.result.members[0] == OrientedCycle([0, 6, 1, 2])
        assert trace.result.is_spanning()
        assert trace.format() == 'insert 6 into member 0 between 0 and 1\n'

    def test_whole_path_in_one_step(self):
        k5 = complete_graph(5)
        trace = insert_path(k5, CycleSystem(k5, [OrientedCycle([0, 1, 2])]), OrientedPath([3, 4]))
        assert len(trace.steps) == 1
        assert trace.result.members == (OrientedCycle([0, 3, 4, 1, 2]),)

    def test_path_split_over_edges(self):
        g = Graph(6, list(cycle_graph(4).edges()) + [(0, 4), (1, 4), (4, 5), (2, 5), (3, 5)])
        sys = CycleSystem(g, [OrientedCycle([0, 1, 2, 3])])
        trace = insert_path(g, sys, [4, 5])
        assert [step.edge for step in trace.steps] == [(0, 1), (2, 3)]
        assert trace.result.members == (OrientedCycle([0, 4, 1, 2, 5, 3]),)
        assert trace.result.validate()

    def test_into_path_member(self):
        g = path_graph(3).with_edge(0, 2)
        sys = CycleSystem(g, [OrientedPath([0, 1])])
        assert insert_path(g, sys, [2]).result.members == (OrientedPath([0, 2, 1]),)

    def test_not_insertible(self):
        g = c4_with_pendant()
        sys = CycleSystem(g, [OrientedCycle([0, 1, 2, 3])])
        with pytest.raises(PreconditionViolation, match='not insertible at vertex 4') as exc_info:
            insert_path(g, sys, [4])
        assert exc_info.value.vertex == 4

    def test_random_instances(self):
        summary = verify_insertion_lemma(count=200, max_order=10, seed=7)
        assert summary.failures == []
        assert summary.instances > 0


class TestCycleFromRichPath(object):
    @pytest.mark.parametrize(
        'g, path, expected',
        [(complete_graph(4), [0, 1, 2, 3], [0, 1, 2, 3]),
         (Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3), (0, 2)]), [0, 1, 2, 3], [0, 1, 3, 2]),
         (Graph(5, [(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (2, 4)]), [0, 1, 2], [0, 1, 2, 3])],
        ids=['closing-edge', 'crossing', 'common-neighbour'])
    #
    def test_constructions(self, g, path, expected):
        cycle = cycle_from_degree_rich_path(g, path)
        assert cycle == OrientedCycle(expected)
        assert CycleSystem(g, [cycle]).validate()

    @pytest.mark.parametrize(
        'g, path, msg',
        [(path_graph(3), [0, 2], 'non-edge \\(0, 2\\)'),
         (complete_graph(3), [0, 1], 'at least 3 vertices but got 2'),
         (path_graph(4), [0, 1, 2, 3], 'end degrees 1 \\+ 1 below order 4')],
        ids=['non-edge', 'short', 'low-degree'])
    #
    def test_rejects(self, g, path, msg):
        with pytest.raises(InvalidArgumentError, match=msg):
            cycle_from_degree_rich_path(g, path)

    def test_exhaustive_search(self):
        assert len(find_cycle_at_least(petersen_graph(), 9)) == 9
        assert find_cycle_at_least(petersen_graph(), 10) is None
