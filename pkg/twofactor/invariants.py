# -*- coding: utf-8 -*-

"""
Degree-sum and connectivity invariants.

Notation: for a vertex set ``X`` and ``t <= |X|``, ``delta_t(X)`` is the
largest degree sum of a ``t``-subset of ``X``; ``sigma_m`` is the
smallest degree sum of an independent ``m``-set; ``sigma_t_m`` is the
smallest ``delta_t(X)`` over independent ``m``-sets ``X``.  Both sigma
values are :data:`ExtendedValue.INFINITY` when the independence number
is below ``m``.
"""

import collections
import itertools

import networkx as nx
import numpy as np

from twofactor.errors import InvalidArgumentError
from twofactor.extended import ExtendedValue
from twofactor.graph import bits_of


def _popcount(mask):
    return bin(mask).count('1')


def delta_t(g, vertices, t):
    """
    Sum of the ``t`` largest degrees among ``vertices``.

    >>> from twofactor.generators import complete_bipartite
    >>> delta_t(complete_bipartite(3, 4), [0, 1, 2], 2)
    8
    """
    vertices = list(vertices)
    if t < 1 or len(vertices) < t:
        raise InvalidArgumentError('need 1 <= t <= |X| but got t=%d, |X|=%d'
                                   % (t, len(vertices)))
    return int(np.sort(g.degrees[vertices])[-t:].sum())


def independent_sets_of_size(g, m):
    """
    Yield every independent set of exactly ``m`` vertices once, as a
    ``frozenset``.  Vertices are branched on in order of decreasing
    degree, so high-degree vertices are ruled out early.

    >>> from twofactor.generators import cycle_graph
    >>> sorted(sorted(s) for s in independent_sets_of_size(cycle_graph(5), 2))
    [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
    """
    if m < 0:
        raise InvalidArgumentError('set size must be nonnegative but got %d' % m)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    # Candidates are held as masks over rank positions.
    ranked_masks = [sum(1 << rank[w] for w in g.neighbours(v)) for v in order]

    def extend(chosen, candidates):
        if len(chosen) == m:
            yield frozenset(chosen)
            return
        if _popcount(candidates) < m - len(chosen):
            return
        for i in bits_of(candidates):
            later = candidates & ~((2 << i) - 1)
            chosen.append(order[i])
            for found in extend(chosen, later & ~ranked_masks[i]):
                yield found
            chosen.pop()

    return extend([], (1 << g.n) - 1)


def independence_number(g):
    """
    Size of a largest independent set, by branch and bound on vertex
    bitmasks.

    >>> from twofactor.generators import petersen_graph
    >>> independence_number(petersen_graph())
    4
    """
    masks = g.masks
    best = [0]

    def search(candidates, size):
        if not candidates:
            best[0] = max(best[0], size)
            return
        if size + _popcount(candidates) <= best[0]:
            return
        v = (candidates & -candidates).bit_length() - 1
        search(candidates & ~masks[v] & ~(1 << v), size + 1)
        if candidates & masks[v]:
            search(candidates & ~(1 << v), size)

    search((1 << g.n) - 1, 0)
    return best[0]


def sigma_m(g, m):
    """
    Smallest degree sum of an independent ``m``-set.

    >>> from twofactor.generators import complete_bipartite, complete_graph
    >>> sigma_m(complete_bipartite(3, 4), 2)
    ExtendedValue(6)
    >>> sigma_m(complete_graph(4), 2)
    ExtendedValue.INFINITY
    """
    if m < 1:
        raise InvalidArgumentError('m must be positive but got %d' % m)
    return _min_over_independent_sets(g, m, lambda degrees: sum(degrees))


def sigma_t_m(g, t, m):
    """
    Smallest :func:`delta_t` over independent ``m``-sets.

    >>> from twofactor.generators import complete_bipartite
    >>> sigma_t_m(complete_bipartite(3, 4), 2, 3)
    ExtendedValue(6)
    """
    if not 1 <= t <= m:
        raise InvalidArgumentError('need 1 <= t <= m but got t=%d, m=%d' % (t, m))
    return _min_over_independent_sets(g, m, lambda degrees: sum(sorted(degrees)[-t:]))


def _min_over_independent_sets(g, m, objective):
    """
    Branch over vertices in increasing degree order.  Any completion of
    a partial set adds vertices of degree at least that of the next
    candidate, so padding the partial degree list with copies of it
    bounds the objective from below (both objectives are monotone in
    each degree).
    """
    order = sorted(g.vertices, key=lambda v: (g.degree(v), v))
    degs = [g.degree(v) for v in order]
    rank = {v: i for i, v in enumerate(order)}
    ranked_masks = [sum(1 << rank[w] for w in g.neighbours(v)) for v in order]
    best = [None]

    def search(chosen_degrees, candidates):
        need = m - len(chosen_degrees)
        if need == 0:
            value = objective(chosen_degrees)
            if best[0] is None or value < best[0]:
                best[0] = value
            return
        if _popcount(candidates) < need:
            return
        for i in bits_of(candidates):
            if best[0] is not None:
                bound = objective(chosen_degrees + [degs[i]] * need)
                if bound >= best[0]:
                    # Later candidates have no smaller degree.
                    return
            later = candidates & ~((2 << i) - 1)
            search(chosen_degrees + [degs[i]], later & ~ranked_masks[i])

    search([], (1 << g.n) - 1)
    return ExtendedValue.INFINITY if best[0] is None else ExtendedValue(best[0])


def sigma_m_exhaustive(g, m):
    """:func:`sigma_m` by plain enumeration of all ``m``-subsets."""
    sums = [sum(g.degree(v) for v in xs)
            for xs in itertools.combinations(g.vertices, m) if g.is_independent(xs)]
    return ExtendedValue(min(sums)) if sums else ExtendedValue.INFINITY


def sigma_t_m_exhaustive(g, t, m):
    """:func:`sigma_t_m` by plain enumeration of all ``m``-subsets."""
    values = [delta_t(g, xs, t)
              for xs in itertools.combinations(g.vertices, m) if g.is_independent(xs)]
    return ExtendedValue(min(values)) if values else ExtendedValue.INFINITY


def _split_digraph(g):
    """
    Each vertex ``v`` becomes an arc ``(v, 'in') -> (v, 'out')`` of
    capacity one; each edge ``uv`` becomes two uncapacitated arcs
    ``(u, 'out') -> (v, 'in')`` and back.  A maximum flow from
    ``(s, 'out')`` to ``(t, 'in')`` counts internally disjoint paths.
    """
    digraph = nx.DiGraph()
    for v in g.vertices:
        digraph.add_edge((v, 'in'), (v, 'out'), capacity=1)
    for u, v in g.edges():
        digraph.add_edge((u, 'out'), (v, 'in'))
        digraph.add_edge((v, 'out'), (u, 'in'))
    return digraph


def local_connectivity(g, s, t, digraph=None):
    """Number of internally disjoint paths between non-adjacent ``s`` and ``t``."""
    if s == t or g.adjacent(s, t):
        raise InvalidArgumentError('expected distinct non-adjacent vertices but got %d, %d'
                                   % (s, t))
    digraph = _split_digraph(g) if digraph is None else digraph
    return int(nx.maximum_flow_value(digraph, (s, 'out'), (t, 'in')))


def connectivity(g):
    """
    Vertex connectivity: the fewest vertices whose deletion disconnects
    ``g`` or leaves at most one vertex.  Complete graphs give ``n-1``;
    graphs with ``n <= 1`` give 0.

    A minimum separator misses one of the first ``kappa+1`` vertices, and
    every vertex on the far side of it has a larger index, so only
    pairs whose smaller vertex is among the first ``best+1`` are tried.

    >>> from twofactor.generators import complete_bipartite, petersen_graph
    >>> connectivity(complete_bipartite(3, 4)), connectivity(petersen_graph())
    (3, 3)
    """
    n = g.n
    if n <= 1 or not g.is_connected():
        return 0
    best = n - 1 if g.n_edges() == n * (n - 1) // 2 else g.min_degree()
    digraph = _split_digraph(g)
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.adjacent(i, j):
                best = min(best, local_connectivity(g, i, j, digraph))
        i += 1
    return best


def connectivity_exhaustive(g):
    """:func:`connectivity` by trying every vertex subset, smallest first."""
    for size in range(g.n):
        for removed in itertools.combinations(g.vertices, size):
            rest = set(g.vertices).difference(removed)
            if len(rest) <= 1 or len(g.components(rest)) > 1:
                return size
    return 0


class InvariantSummary(collections.namedtuple('InvariantSummary',
                                              'n kappa alpha min_degree sigma_2'
                                              ' sigma_m sigma_t_m t m')):
    """
    The invariants printed by the ``invariants`` subcommand.  ``sigma_m``
    and ``sigma_t_m`` are ``None`` when not asked for.
    """

    def as_dict(self):
        def plain(x):
            return x.to_json() if isinstance(x, ExtendedValue) else x
        return collections.OrderedDict((f, plain(getattr(self, f))) for f in self._fields)


def invariant_summary(g, t=None, m=None):
    kappa = connectivity(g)
    s_m = sigma_m(g, m) if m is not None else None
    s_t_m = sigma_t_m(g, t, m) if (t is not None and m is not None) else None
    return InvariantSummary(n=g.n, kappa=kappa, alpha=independence_number(g),
                            min_degree=g.min_degree(), sigma_2=sigma_m(g, 2),
                            sigma_m=s_m, sigma_t_m=s_t_m, t=t, m=m)
