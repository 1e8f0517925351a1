# -*- coding: utf-8 -*-

"""
Exact search for 2-factors with a given number of cycles and for
disjoint cycle packings, plus the cheap greedy packing used as a
starting point for the proof engine.
"""

import collections
import itertools
import logging

import networkx as nx

from twofactor.config import DEFAULT_LIMITS
from twofactor.cycles import CycleSystem, OrientedCycle
from twofactor.errors import CapacityError, InvalidArgumentError
from twofactor.graph import bits_of, mask_of
from twofactor.insertion import insert_path, is_insertible

log = logging.getLogger(__name__)


def _popcount(mask):
    return bin(mask).count('1')


class TwoFactor(collections.namedtuple('TwoFactor', 'system')):
    """A spanning :class:`CycleSystem` made of cycles only."""

    @property
    def cycles(self):
        return self.system.members

    @property
    def k(self):
        return len(self.system.members)

    def dump(self):
        return self.system.dump()


class FactorSearch(object):
    """
    Backtracking over vertex subsets held as bitmasks.  Failed
    ``(vertices left, cycles left)`` states are remembered, so one
    instance can answer many queries on subsets of the same graph.
    """

    def __init__(self, g):
        self.g = g
        self.masks = g.masks
        self._failed = set()

    def _degree_at_least_two(self, within):
        masks = self.masks
        return all(_popcount(masks[v] & within) >= 2 for v in bits_of(within))

    def _component_count(self, within):
        masks = self.masks
        count = 0
        todo = within
        while todo:
            component = frontier = todo & -todo
            while frontier:
                reached = 0
                for v in bits_of(frontier):
                    reached |= masks[v]
                frontier = reached & todo & ~component
                component |= frontier
            todo &= ~component
            count += 1
        return count

    def _two_core(self, within):
        masks = self.masks
        while True:
            weak = [v for v in bits_of(within) if _popcount(masks[v] & within) < 2]
            if not weak:
                return within
            within &= ~mask_of(weak)

    def _cycles_through(self, start, within, min_len, max_len):
        """
        Cycles inside ``within`` through its lowest vertex ``start`` with
        order in ``[min_len, max_len]``, each once (the second vertex is
        below the last).  When a single cycle must cover ``within``,
        paths that strand an unvisited vertex are cut.
        """
        masks = self.masks
        hamiltonian = min_len == _popcount(within)
        path = [start]

        def extend(used):
            tail = path[-1]
            length = len(path)
            if (length >= max(min_len, 3) and masks[tail] >> start & 1
                    and path[1] < path[-1]):
                yield tuple(path)
            if length >= max_len:
                return
            if hamiltonian:
                unvisited = within & ~used
                ends = unvisited | 1 << tail | 1 << start
                if any(_popcount(masks[v] & ends) < 2 for v in bits_of(unvisited)):
                    return
            for w in bits_of(masks[tail] & within & ~used):
                path.append(w)
                for found in extend(used | 1 << w):
                    yield found
                path.pop()

        return extend(1 << start)

    def two_factor(self, within, k):
        """Cycles (as tuples) partitioning ``within`` into exactly ``k``, or ``None``."""
        if within == 0:
            return [] if k == 0 else None
        size = _popcount(within)
        if k == 0 or size < 3 * k:
            return None
        key = ('F', within, k)
        if key in self._failed:
            return None
        if self._degree_at_least_two(within) and self._component_count(within) <= k:
            start = (within & -within).bit_length() - 1
            min_len = size if k == 1 else 3
            for cycle in self._cycles_through(start, within, min_len, size - 3 * (k - 1)):
                rest = self.two_factor(within & ~mask_of(cycle), k - 1)
                if rest is not None:
                    return [cycle] + rest
        self._failed.add(key)
        return None

    def _chordless_cycles_through(self, start, within):
        masks = self.masks
        path = [start]

        def extend(used):
            tail = path[-1]
            interior = used & ~(1 << start) & ~(1 << tail)
            for w in bits_of(masks[tail] & within & ~used):
                if masks[w] & interior:
                    continue
                if len(path) >= 2 and masks[w] >> start & 1:
                    if path[1] < w:
                        yield tuple(path) + (w,)
                    continue
                path.append(w)
                for found in extend(used | 1 << w):
                    yield found
                path.pop()

        return extend(1 << start)

    def packing(self, within, k):
        """
        ``k`` disjoint cycles inside ``within``, or ``None``.  The lowest
        vertex either lies on one of them or is dropped; a cycle with a
        chord can be swapped for a shorter one through any given vertex
        of it, so only chordless cycles are tried.
        """
        if k == 0:
            return []
        within = self._two_core(within)
        if _popcount(within) < 3 * k:
            return None
        key = ('P', within, k)
        if key in self._failed:
            return None
        start = (within & -within).bit_length() - 1
        for cycle in self._chordless_cycles_through(start, within):
            rest = self.packing(within & ~mask_of(cycle), k - 1)
            if rest is not None:
                return [cycle] + rest
        found = self.packing(within & ~(1 << start), k)
        if found is None:
            self._failed.add(key)
        return found


def _check_k(k):
    if k < 1:
        raise InvalidArgumentError('cycle count must be positive but got %d' % k)


def _double_cover_has_perfect_matching(g):
    """
    Orienting the cycles of a 2-factor gives every vertex one out-arc and
    one in-arc: a perfect matching of the bipartite double cover.
    """
    cover = nx.Graph()
    left = [('out', v) for v in g.vertices]
    cover.add_nodes_from(left)
    cover.add_nodes_from(('in', v) for v in g.vertices)
    for u, v in g.edges():
        cover.add_edge(('out', u), ('in', v))
        cover.add_edge(('out', v), ('in', u))
    matching = nx.bipartite.hopcroft_karp_matching(cover, top_nodes=left)
    return len(matching) == 2 * g.n


def exact_two_factor(g, k, limits=DEFAULT_LIMITS):
    """
    A 2-factor of ``g`` with exactly ``k`` cycles, or ``None`` when
    there is none.

    >>> from twofactor.generators import petersen_graph
    >>> tf = exact_two_factor(petersen_graph(), 2)
    >>> sorted(len(c) for c in tf.cycles)
    [5, 5]
    >>> exact_two_factor(petersen_graph(), 1) is None
    True
    """
    _check_k(k)
    if g.n > limits.max_two_factor_order:
        raise CapacityError('exact 2-factor search is limited',
                            order=g.n, limit=limits.max_two_factor_order)
    if g.n < 3 * k or g.min_degree() < 2 or not _double_cover_has_perfect_matching(g):
        return None
    cycles = FactorSearch(g).two_factor((1 << g.n) - 1, k)
    if cycles is None:
        return None
    return TwoFactor(CycleSystem(g, [OrientedCycle(c) for c in cycles]))


def extend_by_insertion(g, sys):
    """Insert remainder vertices one at a time, smallest first, until none is insertible."""
    while True:
        movable = next((v for v in sorted(sys.remainder().vertices)
                        if is_insertible(g, sys, v)), None)
        if movable is None:
            return sys
        sys = insert_path(g, sys, [movable]).result


def exact_cycle_packing(g, k, maximize_order=False, limits=DEFAULT_LIMITS):
    """
    ``k`` pairwise disjoint cycles of ``g`` as a :class:`CycleSystem`, or
    ``None``.  With ``maximize_order`` the total order is the largest
    possible: after a first packing is grown by insertion, vertex subsets
    of each larger size are tried, largest first, for a 2-factor with
    ``k`` cycles of the subgraph they induce.

    >>> from twofactor.generators import complete_graph, wheel
    >>> exact_cycle_packing(wheel(6), 2) is None
    True
    >>> exact_cycle_packing(complete_graph(7), 2, maximize_order=True).total_order()
    7
    """
    _check_k(k)
    limit = limits.max_packing_order if maximize_order else limits.max_two_factor_order
    if g.n > limit:
        raise CapacityError('exact cycle packing is limited', order=g.n, limit=limit)
    search = FactorSearch(g)
    everything = (1 << g.n) - 1
    cycles = search.packing(everything, k)
    if cycles is None:
        return None
    sys = CycleSystem(g, [OrientedCycle(c) for c in cycles])
    if not maximize_order:
        return sys

    sys = extend_by_insertion(g, sys)
    found = sys.total_order()
    for size in range(g.n, found, -1):
        subsets = [everything] if size == g.n else (
            mask_of(vs) for vs in itertools.combinations(g.vertices, size))
        for within in subsets:
            cycles = search.two_factor(within, k)
            if cycles is not None:
                log.debug('maximum packing order %d for k=%d', size, k)
                return CycleSystem(g, [OrientedCycle(c) for c in cycles])
    return sys


def shortest_cycle(g, within=None):
    """
    A shortest cycle of the subgraph induced by ``within`` (default: all
    vertices), or ``None`` if that subgraph is a forest.
    """
    within = set(g.vertices if within is None else within)
    best = None
    for a, b in g.edges():
        if a not in within or b not in within:
            continue
        sources = [w for w in g.neighbours(a) if w != b and w in within]
        path = g.shortest_path(sources, [b], within - {a})
        if path is not None and (best is None or len(path) + 1 < len(best)):
            best = [a] + path
    return OrientedCycle(best) if best is not None else None


def greedy_cycle_packing(g, k):
    """
    Take a shortest cycle ``k`` times from what is left, then grow the
    result by single-vertex insertions.  ``None`` when the greedy choice
    runs out of cycles, which can happen even if a packing exists.
    """
    _check_k(k)
    left = set(g.vertices)
    cycles = []
    for _ in range(k):
        cycle = shortest_cycle(g, left)
        if cycle is None:
            return None
        cycles.append(cycle)
        left.difference_update(cycle)
    return extend_by_insertion(g, CycleSystem(g, cycles))
