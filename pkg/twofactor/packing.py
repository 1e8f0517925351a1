# -*- coding: utf-8 -*-

"""
Sufficient conditions for ``k`` disjoint cycles taken from the cycle
packing literature, and recognisers for the exceptional graphs of the
Kierstead-Kostochka-Yeager characterisation.
"""

import collections

from twofactor.enumeration import canonical_code
from twofactor.generators import two_kk_join_complement
from twofactor.invariants import (connectivity, independence_number, sigma_m,
                                  sigma_t_m)
from twofactor.utils import ceil_div


def is_wheel(g):
    """
    True when ``g`` is a hub joined to every vertex of a cycle through all
    other vertices.

    >>> from twofactor.generators import wheel, complete_graph
    >>> is_wheel(wheel(6)), is_wheel(complete_graph(4)), is_wheel(complete_graph(5))
    (True, True, False)
    """
    n = g.n
    if n < 4 or g.n_edges() != 2 * (n - 1):
        return False
    for hub in g.vertices:
        if g.degree(hub) != n - 1:
            continue
        rim = [v for v in g.vertices if v != hub]
        if all(g.degree(v) == 3 for v in rim) and len(g.components(rim)) == 1:
            return True
    return False


def is_two_kk_join_complement(g, k):
    """True when ``g`` is isomorphic to two ``k``-cliques joined to ``k`` independent vertices."""
    if g.n != 3 * k or k < 1:
        return False
    witness = two_kk_join_complement(k)
    if g.n_edges() != witness.n_edges():
        return False
    return canonical_code(g.n, g.masks) == canonical_code(witness.n, witness.masks)


def has_cycle(g):
    """A graph is a forest exactly when it has ``n - c`` edges for ``c`` components."""
    return g.n_edges() > g.n - len(g.components())


class PackingVerdict(collections.namedtuple('PackingVerdict', 'established route details')):
    """
    ``established`` is ``True`` when one of the cited sufficient
    conditions holds for ``g``; ``route`` names it (``'not established'``
    otherwise).  A ``False`` verdict never means that ``g`` lacks ``k``
    disjoint cycles.
    """

    NOT_ESTABLISHED = 'not established'


def enomoto_wang_condition(g, k):
    """Order at least ``3k`` and ``sigma_2 >= 4k - 1``."""
    return g.n >= 3 * k and sigma_m(g, 2) >= 4 * k - 1


def fujita_condition(g, k):
    """Order at least ``max(3k + 2, 8)`` and ``sigma_3 >= 6k - 2``."""
    return g.n >= max(3 * k + 2, 8) and sigma_m(g, 3) >= 6 * k - 2


def kky_condition(g, k):
    """
    For ``k >= 2``, order at least ``3k`` and minimum degree at least
    ``2k - 1``: independence number at most ``n - 2k``, and ``g`` not
    one of the exceptional graphs.
    """
    n = g.n
    if k < 2 or n < 3 * k or g.min_degree() < 2 * k - 1:
        return False
    if independence_number(g) > n - 2 * k:
        return False
    if k % 2 == 1 and n == 3 * k and is_two_kk_join_complement(g, k):
        return False
    if k == 2 and is_wheel(g):
        return False
    return True


_ROUTE_CHECKS = collections.OrderedDict([
    ('enomoto-wang', enomoto_wang_condition),
    ('fujita', fujita_condition),
    ('kierstead-kostochka-yeager', kky_condition),
])


def packing_feasible_by_theory(g, k, m=None):
    """
    Try the sufficient conditions in the order the packing arguments use
    them: ``k = 1`` needs only a cycle; ``ceil(m/k)`` equal to 1 or at
    least 3 goes to the Enomoto-Wang condition; ``ceil(m/k) = 2`` goes
    to the Fujita et al. condition, and then to the
    Kierstead-Kostochka-Yeager characterisation.  The remaining routes
    are tried afterwards.  ``m`` defaults to the connectivity of ``g``.

    >>> from twofactor.generators import empty_graph
    >>> packing_feasible_by_theory(empty_graph(6), 1).route
    'not established'
    """
    if k == 1:
        if has_cycle(g):
            return PackingVerdict(True, 'k=1', 'graph has a cycle')
        return PackingVerdict(False, PackingVerdict.NOT_ESTABLISHED, 'graph is a forest')

    m = connectivity(g) if m is None else m
    l = ceil_div(m, k) if m > 0 else 0
    if l == 2:
        order = ['fujita', 'kierstead-kostochka-yeager', 'enomoto-wang']
    else:
        order = ['enomoto-wang', 'fujita', 'kierstead-kostochka-yeager']

    s2 = sigma_m(g, 2)
    s3 = sigma_m(g, 3)
    s23 = sigma_t_m(g, 2, 3)
    details = ('n=%d sigma_2=%s sigma_3=%s sigma_2^3+delta=%s ceil(m/k)=%d'
               % (g.n, s2, s3,
                  s23.value + g.min_degree() if s23.is_finite else '+inf', l))
    for route in order:
        if _ROUTE_CHECKS[route](g, k):
            return PackingVerdict(True, route, details)
    return PackingVerdict(False, PackingVerdict.NOT_ESTABLISHED, details)
