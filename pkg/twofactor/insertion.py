# -*- coding: utf-8 -*-

"""
Insertible vertices.

A vertex ``x`` off every member of a :class:`CycleSystem` is
*insertible* when some member has consecutive vertices ``w, w+`` both
adjacent to ``x``; replacing the edge ``w w+`` by ``w x w+`` then grows
that member by one vertex.  This module splices whole paths of
insertible vertices into a system, finds the first non-insertible
vertex of a cycle segment, checks the crossing bounds that hold around
an order-maximal system, and closes long cycles from paths whose ends
have large degree sum.
"""

import collections
import logging

from twofactor.config import DEFAULT_LIMITS
from twofactor.cycles import CycleSystem, OrientedCycle, OrientedPath
from twofactor.errors import (InternalInvariantError, InvalidArgumentError,
                              PreconditionViolation)

log = logging.getLogger(__name__)


def _check_off_system(sys, x):
    owner = sys.owner(x)
    if owner is not None:
        raise InvalidArgumentError('vertex %d lies on member %d' % (x, owner))


def insertion_edges(g, sys, x):
    """
    Yield ``(member_index, w, w_next)`` for every member edge whose ends
    are both adjacent to ``x``, by member index and then by ``w``.
    """
    _check_off_system(sys, x)
    nbrs = g.neighbours(x)
    for i, member in enumerate(sys.members):
        for w, w_next in sorted(member.edges()):
            if w in nbrs and w_next in nbrs:
                yield (i, w, w_next)


def is_insertible(g, sys, x):
    """
    >>> from twofactor.generators import complete_graph
    >>> k5 = complete_graph(5)
    >>> is_insertible(k5, CycleSystem(k5, [OrientedCycle([0, 1, 2])]), 3)
    True
    """
    return next(insertion_edges(g, sys, x), None) is not None


class InsertionStep(collections.namedtuple('InsertionStep', 'inserted member edge')):
    """
    One splice: the path ``inserted`` replaced the edge ``edge = (w, w+)``
    of member number ``member``.
    """

    def format(self):
        return ('insert %s into member %d between %d and %d'
                % (' '.join(map(str, self.inserted)), self.member,
                   self.edge[0], self.edge[1]))


class InsertionTrace(collections.namedtuple('InsertionTrace', 'steps result')):
    def format(self):
        """One line per step."""
        return ''.join(step.format() + '\n' for step in self.steps)


def _splice(member, w, w_next, inserted):
    vs = list(member.starting_at(w) if member.kind == 'C' else member.vertices)
    i = vs.index(w)
    if vs[(i + 1) % len(vs)] != w_next:
        raise InternalInvariantError('(%d, %d) is not a member edge' % (w, w_next))
    spliced = vs[:i + 1] + list(inserted) + vs[i + 1:]
    return type(member)(spliced)


def insert_path(g, sys, p):
    """
    Splice every vertex of the path ``p`` into the members of ``sys``.

    Repeatedly: let ``u`` be the first vertex still to place, take the
    first member edge ``(w, w+)`` that ``u`` is insertible on, let ``v``
    be the *last* remaining path vertex adjacent to both ``w`` and
    ``w+``, and replace ``w w+`` by ``w u .. v w+``.  No later vertex
    used ``(w, w+)``, so all of them stay insertible.  The result has
    as many cycles and paths as ``sys``.

    :raises PreconditionViolation: if some vertex of ``p`` is not
        insertible for ``sys``
    """
    if not isinstance(p, OrientedPath):
        p = OrientedPath(p)
    for v in p:
        _check_off_system(sys, v)
    for v in p:
        if not is_insertible(g, sys, v):
            raise PreconditionViolation('path vertex is not insertible', vertex=v)

    remaining = list(p.vertices)
    steps = []
    while remaining:
        u = remaining[0]
        found = next(insertion_edges(g, sys, u), None)
        if found is None:
            raise InternalInvariantError('vertex %d stopped being insertible' % u)
        i, w, w_next = found
        last = max(j for j, z in enumerate(remaining)
                   if g.adjacent(z, w) and g.adjacent(z, w_next))
        inserted = OrientedPath(remaining[:last + 1])
        sys = sys.with_members({i: _splice(sys.members[i], w, w_next, inserted)})
        steps.append(InsertionStep(inserted, i, (w, w_next)))
        remaining = remaining[last + 1:]
        log.debug('inserted %s into member %d at (%d, %d)', list(inserted), i, w, w_next)
    return InsertionTrace(steps, sys)


def first_non_insertible(g, rest, seg):
    """
    First vertex of ``seg`` that is not insertible for ``rest``, or
    ``None`` when every vertex is.  Nothing is insertible for an empty
    system.
    """
    for v in seg:
        if not is_insertible(g, rest, v):
            return v
    return None


CrossingCertificate = collections.namedtuple(
    'CrossingCertificate',
    'holds x xprime orientation attachment clause_i clause_ii degree_sum bound')
CrossingCertificate.__doc__ = """
Both crossing bounds for a pair ``(x, x')``: clause (i) says the two
are not adjacent, clause (ii) that their degrees into ``H`` plus the
chosen cycle sum to at most ``|H| + |C| - 1``.  ``orientation`` is
``'forward'`` or ``'backward'`` and ``attachment`` is the ``u`` whose
segment holds ``x``.
"""


def locate_crossing_pair(ctx, x, xprime):
    """
    Find the frame and attachment index for which ``x`` lies on the
    scanned part ``u+ .. x_u`` of the segment after ``u`` and ``x'`` is
    ``x0`` or the successor of another attachment.

    :raises InvalidArgumentError: when no such placement exists
    """
    if x == xprime:
        raise InvalidArgumentError('crossing pair needs distinct vertices but got %d twice' % x)
    for frame in ctx.frames:
        for i, u in enumerate(frame.attachments):
            if x not in frame.scanned(i):
                continue
            partners = {ctx.x0}
            partners.update(frame.cycle.successor(w)
                            for j, w in enumerate(frame.attachments) if j != i)
            if xprime in partners:
                return frame, i
    raise InvalidArgumentError('(%d, %d) is not a crossing pair of this context' % (x, xprime))


def crossing_certificate(g, sys, ctx, x, xprime):
    """
    Evaluate both crossing bounds for ``(x, x')``.  Under an
    order-maximal system both hold for every valid pair; a failure is
    returned, not raised.
    """
    frame, i = locate_crossing_pair(ctx, x, xprime)
    region = ctx.h | frozenset(frame.cycle)
    degree_sum = g.degree_into(x, region) + g.degree_into(xprime, region)
    bound = len(region) - 1
    clause_i = not g.adjacent(x, xprime)
    clause_ii = degree_sum <= bound
    return CrossingCertificate(clause_i and clause_ii, x, xprime, frame.orientation,
                               frame.attachments[i], clause_i, clause_ii, degree_sum, bound)


def crossing_path(ctx, frame, i, x, xprime):
    """
    The ``(x, x')``-path through all of ``x -> u_i`` on the cycle and
    at least one vertex of ``H0``:

    * ``x -> u_i`` then ``Q_i`` to ``x0`` when ``x' = x0``;
    * ``x -> u_j``, back along ``Q_{i,j}`` to ``u_i``, then against the
      orientation from ``u_i`` to ``u_j+`` when ``x' = u_j+``.
    """
    cycle = frame.cycle
    u_i = frame.attachments[i]
    if xprime == ctx.x0:
        vertices = cycle.segment(x, u_i).vertices + ctx.q_path(u_i)[1:]
        return OrientedPath(vertices)
    u_j = cycle.predecessor(xprime)
    back = cycle.segment(xprime, u_i).vertices[::-1]
    vertices = cycle.segment(x, u_j).vertices + ctx.q_pair(u_j, u_i)[1:-1] + back
    return OrientedPath(vertices)


def _check_path_in(g, p):
    for w, w_next in p.edges():
        if not g.adjacent(w, w_next):
            raise InvalidArgumentError('path uses non-edge (%d, %d)' % (w, w_next))


def find_cycle_at_least(g, length):
    """
    Some cycle of order at least ``length``, by depth-first search over
    paths starting at their smallest vertex; ``None`` if there is none.
    """
    for start in g.vertices:
        found = _search_from(g, start, max(length, 3))
        if found:
            return OrientedCycle(found)
    return None


def _search_from(g, start, length):
    masks = g.masks
    path = [start]

    def extend(used):
        tail = path[-1]
        if len(path) >= length and masks[tail] >> start & 1:
            return list(path)
        for w in sorted(g.neighbours(tail)):
            if w <= start or used >> w & 1:
                continue
            path.append(w)
            found = extend(used | 1 << w)
            path.pop()
            if found:
                return found
        return None

    return extend(1 << start)


def cycle_from_degree_rich_path(g, p, limits=DEFAULT_LIMITS):
    """
    A cycle of order at least ``|p|`` for an ``(x, y)``-path ``p`` with
    ``|p| >= 3`` and ``d(x) + d(y) >= n``:

    1. ``x y`` is an edge: close ``p``.
    2. some consecutive ``v, v+`` on ``p`` has ``y v`` and ``x v+``:
       the cycle ``x .. v y .. v+`` (second part backwards) uses all of ``p``.
    3. otherwise ``x`` and ``y`` have at most ``|p| - 1`` neighbours on
       ``p`` between them, so they share a neighbour ``z`` off ``p``,
       and ``p`` plus ``z`` is a cycle.

    >>> from twofactor.generators import complete_graph
    >>> cycle_from_degree_rich_path(complete_graph(4), OrientedPath([0, 1, 2, 3]))
    OrientedCycle([0, 1, 2, 3])
    """
    if not isinstance(p, OrientedPath):
        p = OrientedPath(p)
    _check_path_in(g, p)
    if len(p) < 3:
        raise InvalidArgumentError('path needs at least 3 vertices but got %d' % len(p))
    x, y = p.first, p.last
    if g.degree(x) + g.degree(y) < g.n:
        raise InvalidArgumentError('end degrees %d + %d below order %d'
                                   % (g.degree(x), g.degree(y), g.n))

    vs = p.vertices
    if g.adjacent(x, y):
        return OrientedCycle(vs)
    for a in range(1, len(vs) - 1):
        if g.adjacent(y, vs[a]) and g.adjacent(x, vs[a + 1]):
            return OrientedCycle(vs[:a + 1] + vs[a + 1:][::-1])
    off_path = (g.neighbours(x) & g.neighbours(y)).difference(vs)
    if off_path:
        return OrientedCycle(vs + (min(off_path),))

    log.warning('crossing construction failed on %r; trying exhaustive search', p)
    if g.n <= limits.crossing_fallback_order:
        found = find_cycle_at_least(g, len(p))
        if found is not None:
            return found
    raise InternalInvariantError('no cycle of order >= %d found from path %r' % (len(p), p))
