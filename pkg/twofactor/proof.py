# -*- coding: utf-8 -*-

"""
The augmentation engine.

Given ``k`` disjoint cycles ``C_1 .. C_k`` that do not cover the graph,
:func:`augment` looks for a move that yields ``k`` disjoint cycles of
larger total order.  The moves, tried in order:

(a) a remainder vertex is insertible into some cycle;
(b) a segment of the chosen cycle between consecutive attachments is
    entirely insertible into the other cycles, so it can be handed to
    them while the chosen cycle detours through the remainder;
(c) the set ``X`` (and then ``Y``) holds two vertices whose degree sum
    reaches ``n``; the degrees force two cycles ``D1``, ``D2`` through
    the chosen cycle, one more cycle and a vertex of the remainder.

When the degree condition on ``X`` or ``Y`` fails, the independent set
is returned as a witness.  When an invariant that order-maximal systems
satisfy is broken, the outcome is :class:`NotMaximal`, carrying a larger
system whenever the broken invariant yields one.
"""

import collections
import itertools
import logging

from twofactor.config import DEFAULT_LIMITS
from twofactor.cycles import CycleSystem, OrientedCycle
from twofactor.errors import (ContextUnavailableError, InternalInvariantError,
                              InvalidArgumentError, SystemValidationError)
from twofactor.insertion import (crossing_certificate, crossing_path, cycle_from_degree_rich_path,
                                 first_non_insertible, insert_path, is_insertible,
                                 locate_crossing_pair)
from twofactor.invariants import connectivity, delta_t
from twofactor.solvers import TwoFactor, exact_cycle_packing, greedy_cycle_packing
from twofactor.utils import ceil_div

log = logging.getLogger(__name__)


class AttachmentFrame(collections.namedtuple('AttachmentFrame',
                                             'orientation cycle attachments stops')):
    """
    The chosen cycle read in one orientation.  ``attachments`` lists the
    chosen neighbours of ``H0`` in cyclic order along ``cycle``;
    ``stops[i]`` is the first vertex after ``attachments[i]`` that is
    not insertible into the other cycles (``None`` when the whole
    segment up to the next attachment is insertible, or empty).
    """

    def segment_after(self, i):
        """Vertices strictly between ``attachments[i]`` and the next attachment."""
        u = self.attachments[i]
        u_next = self.attachments[(i + 1) % len(self.attachments)]
        between = self.cycle.segment(u, u_next).vertices
        return between[1:-1]

    def scanned(self, i):
        """``u_i+ .. stops[i]``, or the whole segment when there is no stop."""
        seg = self.segment_after(i)
        stop = self.stops[i]
        return seg if stop is None else seg[:seg.index(stop) + 1]


class ProofContext(collections.namedtuple(
        'ProofContext',
        'system m k l h h0 x0 cycle_index rest attachments q_paths q_pair_paths frames'
        ' adjacent_attachments x_set y_set')):
    """
    The named objects of one augmentation step:

    * ``h``: remainder vertices; ``h0`` its first component; ``x0`` the
      smallest vertex of ``h0``;
    * ``cycle_index``: which member is the chosen cycle ``C_1``, and
      ``rest`` the system of the other ``k - 1`` cycles;
    * ``attachments``: ``u_1 .. u_l``, distinct neighbours of ``h0`` on
      ``C_1`` in cyclic order, ``l = max(ceil(m/k), 2)``;
    * ``q_paths[u]``: a ``(u, x0)``-path through ``h0``;
      ``q_pair_paths[(u, v)]``: a ``(u, v)``-path through ``h0``;
    * ``frames``: the forward and backward :class:`AttachmentFrame`;
    * ``adjacent_attachments``: indices ``i`` with ``u_i+ = u_{i+1}``;
    * ``x_set``: ``x0`` and every ``u_i+``; ``y_set``: ``x0``, the first
      non-insertible vertex going backwards from ``u_1-``, and ``u_i-``
      for ``i >= 2``.
    """

    @property
    def forward(self):
        return self.frames[0]

    @property
    def backward(self):
        return self.frames[1]

    @property
    def cycle(self):
        return self.forward.cycle

    @property
    def x_stops(self):
        return self.forward.stops

    @property
    def x1_rev(self):
        return self.backward.stops[0]

    def q_path(self, u):
        return self.q_paths[u]

    def q_pair(self, u, v):
        if (u, v) in self.q_pair_paths:
            return self.q_pair_paths[(u, v)]
        return self.q_pair_paths[(v, u)][::-1]

    def rotated(self, u):
        """The same context relabelled so that attachment ``u`` is ``u_1``."""
        return build_proof_context(self.system.host, self.system, self.m, self.k, first=u)


def _frame(g, rest, orientation, cycle, attachments):
    stops = []
    frame = AttachmentFrame(orientation, cycle, attachments, ())
    for i in range(len(attachments)):
        stops.append(first_non_insertible(g, rest, frame.segment_after(i)))
    return frame._replace(stops=tuple(stops))


def _check_system(sys, k):
    report = sys.validate()
    if not report:
        raise SystemValidationError('invalid cycle system', report=report)
    if sys.paths:
        raise InvalidArgumentError('expected cycles only but system has %d path(s)'
                                   % len(sys.paths))
    if k is not None and len(sys.members) != k:
        raise InvalidArgumentError('expected %d cycles but system has %d'
                                   % (k, len(sys.members)))


def build_proof_context(g, sys, m=None, k=None, first=None):
    """
    Assemble the :class:`ProofContext` for a valid system of ``k``
    cycles with nonempty remainder.  ``C_1`` is the first cycle with at
    least ``l`` attachments of ``H0``; the attachments are the first
    ``l`` met going round ``C_1`` from its smallest attachment, and
    ``first`` (one of them) may be chosen to play ``u_1``.  ``m``
    defaults to the connectivity of ``g``.

    :raises ContextUnavailableError: when no cycle has ``l`` attachments
    """
    _check_system(sys, k)
    k = len(sys.members) if k is None else k
    remainder = sys.remainder()
    if not remainder.vertices:
        raise InvalidArgumentError('system is spanning; there is no remainder')
    m = connectivity(g) if m is None else m
    if m < 1:
        raise InvalidArgumentError('connectivity parameter must be positive but got %d' % m)
    l = max(ceil_div(m, k), 2)

    h = remainder.vertices
    h0 = remainder.components[0]
    x0 = h0[0]
    h0_set = frozenset(h0)
    h0_nbrs = frozenset(w for v in h0 for w in g.neighbours(v)) - h0_set
    counts = [len(h0_nbrs.intersection(member)) for member in sys.members]
    cycle_index = next((i for i, c in enumerate(counts) if c >= l), None)
    if cycle_index is None:
        raise ContextUnavailableError('no cycle has %d attachments of the remainder component'
                                      ' containing %d' % (l, x0),
                                      attachment_counts=counts)

    cycle = sys.members[cycle_index]
    rest = sys.without_member(cycle_index)
    around = [v for v in cycle.starting_at(min(h0_nbrs.intersection(cycle)))
              if v in h0_nbrs]
    attachments = around[:l]
    if first is not None:
        if first not in attachments:
            raise InvalidArgumentError('vertex %d is not a chosen attachment' % first)
        i = attachments.index(first)
        attachments = attachments[i:] + attachments[:i]
    attachments = tuple(attachments)

    q_paths = {}
    for u in attachments:
        q_paths[u] = tuple(g.shortest_path([u], [x0], h0_set | {u}))
    q_pair_paths = {}
    for u, v in itertools.combinations(attachments, 2):
        inner = g.shortest_path(g.neighbours(u) & h0_set, g.neighbours(v) & h0_set, h0_set)
        q_pair_paths[(u, v)] = (u,) + tuple(inner) + (v,)

    forward = _frame(g, rest, 'forward', cycle, attachments)
    backward = _frame(g, rest, 'backward', cycle.reversed(),
                      attachments[:1] + attachments[1:][::-1])
    adjacent = tuple(i for i, u in enumerate(attachments)
                     if cycle.successor(u) == attachments[(i + 1) % l])

    x_set = (x0,) + tuple(cycle.successor(u) for u in attachments)
    y_set = (x0, backward.stops[0]) + tuple(cycle.predecessor(u) for u in attachments[1:])
    return ProofContext(sys, m, k, l, h, h0, x0, cycle_index, rest, attachments,
                        q_paths, q_pair_paths, (forward, backward), adjacent, x_set, y_set)


# Outcomes

class Improved(collections.namedtuple('Improved', 'system move')):
    tag = 'improved'


class Spanning(collections.namedtuple('Spanning', 'system')):
    tag = 'spanning'
    move = 'system covers every vertex'


class HypothesisRefuted(collections.namedtuple('HypothesisRefuted',
                                               'witness delta_2 required source')):
    """
    ``witness`` is an independent set of ``ceil(m/k) + 1`` vertices whose
    two largest degrees sum to ``delta_2 < required = n``; ``source`` is
    ``'X'`` or ``'Y'``.
    """

    tag = 'refuted'

    @property
    def move(self):
        return ('independent set %s from %s has two largest degrees summing to %d < %d'
                % (list(self.witness), self.source, self.delta_2, self.required))


class NotMaximal(collections.namedtuple('NotMaximal', 'evidence improvement move')):
    """
    The system breaks an invariant of order-maximal systems.
    ``improvement`` is a larger system when one follows, else ``None``.
    """

    tag = 'not-maximal'


def _reassemble(ctx, rest, new_cycle):
    members = list(rest.members)
    members.insert(ctx.cycle_index, new_cycle)
    return CycleSystem(ctx.system.host, members)


def _check_larger(ctx, new_sys):
    report = new_sys.validate()
    if not report or new_sys.total_order() <= ctx.system.total_order():
        raise InternalInvariantError('move did not produce a larger valid system: %s'
                                     % report.message)
    return new_sys


def _detour(ctx, i):
    """``u_{i+1} -> u_i`` along ``C_1`` closed by ``Q_{i,i+1}``."""
    u_i = ctx.attachments[i]
    u_next = ctx.attachments[(i + 1) % ctx.l]
    return OrientedCycle(ctx.cycle.segment(u_next, u_i).vertices
                         + ctx.q_pair(u_i, u_next)[1:-1])


def improvement_from_certificate(g, ctx, cert):
    """
    The larger system implied by a failed crossing bound.  Let ``P`` be
    the :func:`crossing_path` of the pair and hand ``u_i+ .. x-`` to the
    other cycles.  If ``x x'`` is an edge, ``P`` closes into a cycle.
    Otherwise either some vertex of ``u_i+ .. x-`` sees ``x'`` (and that
    pair closes instead), or the end degrees of ``P`` inside
    ``H + (x -> u_i)`` reach its order and a cycle at least as long as
    ``P`` is built there.
    """
    frame, i = locate_crossing_pair(ctx, cert.x, cert.xprime)
    x, xprime = cert.x, cert.xprime
    scanned = frame.scanned(i)
    prefix = scanned[:scanned.index(x)]
    if cert.clause_i and cert.clause_ii:
        return None
    if not cert.clause_i:
        cycle = OrientedCycle(crossing_path(ctx, frame, i, x, xprime).vertices)
    else:
        path = crossing_path(ctx, frame, i, x, xprime)
        u_i = frame.attachments[i]
        region = ctx.h | frozenset(frame.cycle.segment(x, u_i))
        sub, labels = g.induced_subgraph(region)
        label_of = {v: j for j, v in enumerate(labels)}
        if sub.degree(label_of[x]) + sub.degree(label_of[xprime]) >= sub.n:
            found = cycle_from_degree_rich_path(sub, [label_of[v] for v in path])
            cycle = OrientedCycle(labels[j] for j in found)
        else:
            z = next((z for z in prefix if g.adjacent(z, xprime)), None)
            if z is None:
                raise InternalInvariantError('crossing bound (ii) failed for (%d, %d) without'
                                             ' a closing edge or rich path' % (x, xprime))
            return improvement_from_certificate(
                g, ctx, crossing_certificate(g, ctx.system, ctx, z, xprime))
    rest = ctx.rest
    if prefix:
        rest = insert_path(g, rest, list(prefix)).result
    return _check_larger(ctx, _reassemble(ctx, rest, cycle))


def _pair_for_certificate(ctx, a, b):
    """Order ``(a, b)`` so that it is a crossing pair of ``ctx``."""
    for x, xprime in ((a, b), (b, a)):
        try:
            locate_crossing_pair(ctx, x, xprime)
            return x, xprime
        except InvalidArgumentError:
            continue
    raise InternalInvariantError('(%d, %d) is not a crossing pair' % (a, b))


def _not_maximal_from_pair(g, ctx, a, b, reason):
    x, xprime = _pair_for_certificate(ctx, a, b)
    cert = crossing_certificate(g, ctx.system, ctx, x, xprime)
    improvement = improvement_from_certificate(g, ctx, cert)
    return NotMaximal(cert, improvement, '%s: crossing bound fails for (%d, %d)'
                      % (reason, x, xprime))


def _rich_pairs(g, vertices, low_priority):
    n = g.n
    pairs = [(a, b) for a, b in itertools.combinations(vertices, 2)
             if g.degree(a) + g.degree(b) >= n]
    return sorted(pairs, key=lambda p: sum(v in low_priority for v in p))


def _check_half_bound(g, ctx, v):
    for member in ctx.rest.members:
        if 2 * g.degree_into(v, member) > len(member):
            raise InternalInvariantError('vertex %d sees more than half of %r yet is not'
                                         ' insertible' % (v, member))


def _refuted(g, ctx, source, vertices):
    size = ceil_div(ctx.m, ctx.k) + 1
    witness = tuple(vertices[:size])
    return HypothesisRefuted(witness, delta_t(g, witness, 2), g.n, source)


def _scan_set(g, ctx, source, vertices, low_priority, sees_more_than_half):
    """
    Shared part of the ``X`` and ``Y`` steps: independence, a pair of
    degree sum ``n``, the crossing bounds for it, and finally the vertex
    of the pair seeing more than half of the other cycles.  Returns an
    ``(outcome, None)`` or ``(None, vertex)``.
    """
    for a, b in itertools.combinations(vertices, 2):
        if g.adjacent(a, b):
            return _not_maximal_from_pair(g, ctx, a, b, '%s is not independent' % source), None
    pairs = _rich_pairs(g, vertices, low_priority)
    if not pairs:
        return _refuted(g, ctx, source, vertices), None
    a, b = pairs[0]
    x, xprime = _pair_for_certificate(ctx, a, b)
    cert = crossing_certificate(g, ctx.system, ctx, x, xprime)
    if not cert.holds:
        return NotMaximal(cert, improvement_from_certificate(g, ctx, cert),
                          '%s pair (%d, %d) breaks a crossing bound' % (source, x, xprime)), None
    chosen = [v for v in (a, b) if v not in low_priority and sees_more_than_half(v)]
    if not chosen:
        raise InternalInvariantError('%s pair (%d, %d) has no vertex seeing more than half of'
                                     ' the other cycles' % (source, a, b))
    return None, chosen[0]


def _endgame(g, ctx):
    outside = [v for member in ctx.rest.members for v in member]

    def sees_more_than_half(v):
        return 2 * g.degree_into(v, outside) > len(outside)

    _check_half_bound(g, ctx, ctx.x0)
    outcome, found = _scan_set(g, ctx, 'X', ctx.x_set, {ctx.x0}, sees_more_than_half)
    if outcome is not None:
        return outcome
    ctx = ctx.rotated(ctx.cycle.predecessor(found))

    x1 = ctx.x1_rev
    if x1 is None:
        raise InternalInvariantError('segment before u_1 became insertible after relabelling')
    _check_half_bound(g, ctx, x1)
    outcome, found = _scan_set(g, ctx, 'Y', ctx.y_set, {ctx.x0, x1}, sees_more_than_half)
    if outcome is not None:
        return outcome

    cycle = ctx.cycle
    u_1 = ctx.attachments[0]
    u_1_plus = cycle.successor(u_1)
    u_i_minus = found
    u_i = cycle.successor(u_i_minus)

    for p, member in enumerate(ctx.system.members):
        if p == ctx.cycle_index:
            continue
        if g.degree_into(u_1_plus, member) + g.degree_into(u_i_minus, member) > len(member):
            break
    else:
        raise InternalInvariantError('no cycle takes more than its order in neighbours of'
                                     ' %d and %d' % (u_1_plus, u_i_minus))

    for oriented in (member, member.reversed()):
        joint = next((u for u in sorted(oriented)
                      if g.adjacent(u_1_plus, u)
                      and g.adjacent(u_i_minus, oriented.successor(u))), None)
        if joint is not None:
            break
    else:
        raise InternalInvariantError('no edge of %r joins %d and %d' % (member, u_1_plus,
                                                                        u_i_minus))

    d1 = OrientedCycle(cycle.segment(u_i, u_1).vertices + ctx.q_pair(u_1, u_i)[1:-1])
    d2 = OrientedCycle(cycle.segment(u_1_plus, u_i_minus).vertices
                       + oriented.segment(oriented.successor(joint), joint).vertices)
    new_sys = _check_larger(ctx, ctx.system.with_members({ctx.cycle_index: d1, p: d2}))
    return Improved(new_sys, 'swap: u_1=%d u_i=%d through H0, arc %d..%d joined to cycle %d'
                             ' at (%d, %d)' % (u_1, u_i, u_1_plus, u_i_minus, p, joint,
                                               oriented.successor(joint)))


def augment(g, sys, m=None, k=None):
    """
    One augmentation round; see the module docstring for the moves.
    ``m`` defaults to the connectivity of ``g``.

    :raises SystemValidationError: for an invalid system
    :raises ContextUnavailableError: when no cycle has enough attachments
    """
    _check_system(sys, k)
    if sys.is_spanning():
        return Spanning(sys)

    for v in sorted(sys.remainder().vertices):
        if is_insertible(g, sys, v):
            trace = insert_path(g, sys, [v])
            return Improved(trace.result, trace.format().strip())

    ctx = build_proof_context(g, sys, m, k)
    for i, u in enumerate(ctx.attachments):
        if i in ctx.adjacent_attachments:
            improvement = _check_larger(ctx, sys.with_members({ctx.cycle_index: _detour(ctx, i)}))
            return NotMaximal('u_%d+ = u_%d' % (i + 1, (i + 1) % ctx.l + 1), improvement,
                              'attachments %d and %d are consecutive; detour through H0'
                              % (u, ctx.cycle.successor(u)))
        if ctx.x_stops[i] is None:
            rest = insert_path(g, ctx.rest, list(ctx.forward.segment_after(i))).result
            new_sys = _check_larger(ctx, _reassemble(ctx, rest, _detour(ctx, i)))
            return Improved(new_sys, 'reroute: segment after u_%d=%d moved to the other cycles'
                                     % (i + 1, u))

    return _endgame(g, ctx)


AugmentRound = collections.namedtuple('AugmentRound', 'index tag move total_order')
AugmentRound.__doc__ = 'One line of the move trace.'


def format_round(r):
    return '%3d %-11s %4d  %s' % (r.index, r.tag, r.total_order, r.move)


def _start_system(g, k, start, limits):
    if start == 'exact-max':
        return exact_cycle_packing(g, k, maximize_order=True, limits=limits)
    if start == 'greedy':
        sys = greedy_cycle_packing(g, k)
        if sys is None:
            log.debug('greedy packing failed; using exact packing search')
            sys = exact_cycle_packing(g, k, limits=limits)
        return sys
    raise InvalidArgumentError('start must be "exact-max" or "greedy" but got "%s"' % start)


def two_factor_via_proof(g, k, m=None, start='exact-max', limits=DEFAULT_LIMITS, trace=None):
    """
    Run :func:`augment` from a starting packing until the system spans.

    Returns a :class:`TwoFactor`, a :class:`HypothesisRefuted`, or (in
    ``'greedy'`` mode) a :class:`NotMaximal`.  In ``'exact-max'`` mode a
    :class:`NotMaximal` outcome continues from its improvement, or from a
    fresh maximum packing.  Each round is appended to ``trace`` when a
    list is given.

    >>> from twofactor.generators import complete_graph
    >>> sorted(len(c) for c in two_factor_via_proof(complete_graph(7), 2).cycles)
    [3, 4]
    """
    m = connectivity(g) if m is None else m
    sys = _start_system(g, k, start, limits)
    if sys is None:
        raise InvalidArgumentError('graph has no %d disjoint cycles' % k)

    for index in range(g.n + 2):
        outcome = augment(g, sys, m, k)
        if trace is not None:
            trace.append(AugmentRound(index, outcome.tag, outcome.move, sys.total_order()))
        log.debug('round %d: %s (%s)', index, outcome.tag, outcome.move)
        if isinstance(outcome, Spanning):
            return TwoFactor(outcome.system)
        if isinstance(outcome, Improved):
            sys = outcome.system
        elif isinstance(outcome, HypothesisRefuted):
            return outcome
        elif start == 'greedy':
            return outcome
        elif outcome.improvement is not None:
            sys = outcome.improvement
        else:
            fresh = exact_cycle_packing(g, k, maximize_order=True, limits=limits)
            if fresh.total_order() <= sys.total_order():
                raise InternalInvariantError('no improvement for a non-maximal system')
            sys = fresh
    raise InternalInvariantError('augmentation did not terminate')


__all__ = ['AttachmentFrame', 'ProofContext', 'build_proof_context', 'Improved', 'Spanning',
           'HypothesisRefuted', 'NotMaximal', 'improvement_from_certificate', 'augment',
           'AugmentRound', 'format_round', 'two_factor_via_proof', 'TwoFactor']
