# -*- coding: utf-8 -*-

"""
Named graphs: the witness graphs of the degree-sum theorems and a few
standard test graphs.
"""

import itertools

import numpy as np

from twofactor.errors import InvalidArgumentError
from twofactor.graph import Graph


def empty_graph(n):
    return Graph(n)


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InvalidArgumentError('cycle needs at least 3 vertices but got %d' % n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    """
    :math:`K_{a,b}` with parts ``0 .. a-1`` and ``a .. a+b-1``.

    >>> g = complete_bipartite(3, 4)
    >>> g.n_edges(), sorted(g.degrees.tolist(), reverse=True)
    (12, [4, 4, 4, 3, 3, 3, 3])
    """
    if a < 0 or b < 0:
        raise InvalidArgumentError('part sizes must be nonnegative but got (%d, %d)' % (a, b))
    return Graph(a + b, itertools.product(range(a), range(a, a + b)))


def odd_balanced_bipartite(n):
    """:math:`K_{(n-1)/2,(n+1)/2}` for odd ``n``; has no 2-factor."""
    if n % 2 == 0 or n < 3:
        raise InvalidArgumentError('expected odd order >= 3 but got %d' % n)
    return complete_bipartite((n - 1) // 2, (n + 1) // 2)


def wheel(n):
    """
    Wheel of total order ``n``: hub ``0`` joined to the rim cycle
    ``1, 2, .., n-1``.

    >>> g = wheel(7)
    >>> g.degree(0), {g.degree(v) for v in range(1, 7)}
    (6, {3})
    """
    if n < 4:
        raise InvalidArgumentError('wheel needs at least 4 vertices but got %d' % n)
    rim = n - 1
    spokes = [(0, v) for v in range(1, n)]
    rim_edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, spokes + rim_edges)


def two_kk_join_complement(k):
    """
    :math:`2K_k \\vee \\overline{K_k}`: two disjoint ``k``-cliques on
    ``0 .. k-1`` and ``k .. 2k-1``, each fully joined to the independent
    set ``2k .. 3k-1``.

    >>> g = two_kk_join_complement(2)
    >>> g.n, g.min_degree()
    (6, 3)
    """
    if k < 1:
        raise InvalidArgumentError('k must be positive but got %d' % k)
    cliques = [range(0, k), range(k, 2 * k)]
    independent = range(2 * k, 3 * k)
    edges = [e for clique in cliques for e in itertools.combinations(clique, 2)]
    edges += [(u, w) for clique in cliques for u in clique for w in independent]
    return Graph(3 * k, edges)


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n, p, rng):
    """
    Erdős–Rényi :math:`G(n, p)` drawn with the ``numpy`` generator ``rng``.
    """
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_adjacency_matrix(upper | upper.T)


NAMED_GENERATORS = {
    'kab': complete_bipartite,
    'wheel': wheel,
    'kky': two_kk_join_complement,
    'complete': complete_graph,
    'cycle': cycle_graph,
    'path': path_graph,
    'empty': empty_graph,
    'petersen': petersen_graph,
}
