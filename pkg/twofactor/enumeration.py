# -*- coding: utf-8 -*-

"""
Small-graph corpora: all labeled graphs of a given order, and one
representative per isomorphism class built by vertex augmentation.
"""

import itertools
import logging

from twofactor.config import DEFAULT_LIMITS
from twofactor.errors import CapacityError
from twofactor.graph import Graph, bits_of

log = logging.getLogger(__name__)


def _popcount(mask):
    return bin(mask).count('1')


def enumerate_small_graphs(n, connected_only=False, limits=DEFAULT_LIMITS):
    """
    Yield every simple graph on the labeled vertices ``0 .. n-1``
    (isomorphic copies included), optionally only the connected ones.

    Labeled enumeration stops at ``limits.max_labeled_enumeration_order``
    (7 by default); :func:`graph_classes` covers orders up to 9, one
    graph per isomorphism class.

    >>> sum(1 for _ in enumerate_small_graphs(4))
    64
    >>> sum(1 for _ in enumerate_small_graphs(4, connected_only=True))
    38
    """
    if n > limits.max_labeled_enumeration_order:
        raise CapacityError('labeled enumeration is limited; use graph_classes()'
                            ' or supply a graph6 corpus file',
                            order=n, limit=limits.max_labeled_enumeration_order)
    pairs = list(itertools.combinations(range(n), 2))
    for pattern in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in bits_of(pattern)])
        if connected_only and not g.is_connected():
            continue
        yield g


def _refine(masks, cells):
    """
    Split the ordered partition ``cells`` until every vertex of a cell
    has the same number of neighbours in every cell.
    """
    cells = [list(cell) for cell in cells]
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            by_signature = {}
            for v in cell:
                signature = tuple(_popcount(masks[v] & cm) for cm in cell_masks)
                by_signature.setdefault(signature, []).append(v)
            refined.extend(by_signature[sig] for sig in sorted(by_signature))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _code_for_order(masks, order):
    position = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 << position[w] for w in bits_of(masks[v])) for v in order)


def _are_twins(masks, u, v):
    return (masks[u] & ~(1 << v)) == (masks[v] & ~(1 << u))


def _twin_representatives(masks, cell):
    """
    One vertex per twin class of ``cell``.  Swapping two twins is an
    automorphism fixing every singleton cell, so their subtrees give the
    same leaf codes.
    """
    chosen = []
    for v in cell:
        if not any(_are_twins(masks, u, v) for u in chosen):
            chosen.append(v)
    return chosen


def canonical_code(n, masks):
    """
    Exact isomorphism invariant of the graph with adjacency bitmasks
    ``masks``: the largest relabelled adjacency (as a tuple of row masks)
    over the leaves of an individualise-and-refine search tree.

    Two graphs are isomorphic if and only if their codes are equal.
    """
    best = [None]

    def search(cells):
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            code = _code_for_order(masks, [cell[0] for cell in cells])
            if best[0] is None or code > best[0]:
                best[0] = code
            return
        cell = cells[target]
        for v in _twin_representatives(masks, cell):
            rest = [u for u in cell if u != v]
            search(_refine(masks, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(_refine(masks, [list(range(n))]) if n else [])
    if best[0] is None:
        return ()
    return best[0]


def _graph_from_code(code):
    n = len(code)
    return Graph(n, [(u, w) for u in range(n) for w in bits_of(code[u]) if u < w])


def canonical_form(g):
    """
    Canonically relabelled copy of ``g``: isomorphic graphs map to equal
    graphs.

    >>> canonical_form(Graph(3, [(0, 1)])) == canonical_form(Graph(3, [(1, 2)]))
    True
    """
    return _graph_from_code(canonical_code(g.n, g.masks))


def dedup_isomorphic(graphs):
    """Yield the first member of each isomorphism class in ``graphs``."""
    seen = set()
    for g in graphs:
        code = canonical_code(g.n, g.masks)
        if code not in seen:
            seen.add(code)
            yield g


def _augmented_codes(parent_codes, n, connected_only):
    """
    Canonical codes of every graph obtained by joining a new vertex
    ``n-1`` to a subset of the vertices of a parent on ``n-1`` vertices.
    A connected graph always has a vertex whose removal leaves it
    connected, so connected classes grow from connected parents through
    nonempty subsets.
    """
    seen = set()
    first_subset = 1 if connected_only else 0
    for parent in parent_codes:
        for subset in range(first_subset, 1 << (n - 1)):
            masks = list(parent) + [subset]
            for u in bits_of(subset):
                masks[u] |= 1 << (n - 1)
            code = canonical_code(n, masks)
            if code not in seen:
                seen.add(code)
                yield code


def graph_classes(n, connected_only=False, limits=DEFAULT_LIMITS):
    """
    Yield one graph per isomorphism class of order ``n`` (connected
    classes only when flagged), in a deterministic order.

    >>> [sum(1 for _ in graph_classes(n, connected_only=True)) for n in range(1, 6)]
    [1, 1, 2, 6, 21]
    """
    if n > limits.max_enumeration_order:
        raise CapacityError('class enumeration is limited; supply a graph6 corpus file',
                            order=n, limit=limits.max_enumeration_order)
    if n == 0:
        yield Graph(0)
        return
    codes = [(0,)]
    for order in range(2, n):
        codes = list(_augmented_codes(codes, order, connected_only))
        log.debug('%d %sclasses of order %d', len(codes),
                  'connected ' if connected_only else '', order)
    if n > 1:
        codes = _augmented_codes(codes, n, connected_only)
    for code in codes:
        yield _graph_from_code(code)
