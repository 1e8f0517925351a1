# -*- coding: utf-8 -*-

"""
Hypothesis and conclusion checkers for the degree-sum theorems on
hamiltonian cycles, 2-factors with exactly ``k`` cycles, and ``k``
disjoint cycles.

Every statement has the shape *clauses imply conclusion*.  A
:class:`TheoremReport` records each clause, the conclusion as decided by
an exact solver, and the status ``'COUNTEREXAMPLE'`` exactly when every
clause holds and the conclusion fails.
"""

import collections
import fractions
import logging

from twofactor.config import DEFAULT_LIMITS
from twofactor.errors import (CapacityError, ContextUnavailableError, InternalInvariantError,
                              InvalidArgumentError)
from twofactor.graph6 import to_graph6
from twofactor.invariants import (connectivity, independence_number, sigma_m,
                                  sigma_t_m)
from twofactor.packing import packing_feasible_by_theory
from twofactor.proof import two_factor_via_proof
from twofactor.solvers import TwoFactor, exact_cycle_packing, exact_two_factor
from twofactor.utils import ceil_div

log = logging.getLogger(__name__)

CONSISTENT = 'consistent'
COUNTEREXAMPLE = 'COUNTEREXAMPLE'

HAMILTONIAN = 'hamiltonian'
TWO_FACTOR = '2-factor'
PACKING = 'disjoint cycles'


class TheoremInstance(collections.namedtuple('TheoremInstance', 'theorem_id k m')):
    """
    Which statement to check, with the cycle count ``k`` (1 for the
    hamiltonicity theorems) and the connectivity parameter ``m``
    (``None``: the connectivity of each graph checked).

    >>> TheoremInstance('main', k=2)
    TheoremInstance(theorem_id='main', k=2, m=None)
    """

    def __new__(cls, theorem_id, k=1, m=None):
        if theorem_id not in THEOREMS:
            raise InvalidArgumentError('unknown theorem "%s"; expected one of %s'
                                       % (theorem_id, ', '.join(THEOREMS)))
        if k < 1:
            raise InvalidArgumentError('cycle count must be positive but got %d' % k)
        if THEOREMS[theorem_id].conclusion == HAMILTONIAN and k != 1:
            raise InvalidArgumentError('theorem "%s" is about hamiltonian cycles; k must be 1'
                                       % theorem_id)
        return super(TheoremInstance, cls).__new__(cls, theorem_id, k, m)

    @property
    def theorem(self):
        return THEOREMS[self.theorem_id]


Clause = collections.namedtuple('Clause', 'name holds detail')


class _Facts(object):
    """Invariants of one graph for one instance, computed on first use."""

    def __init__(self, g, k, m, limits):
        self.g = g
        self.n = g.n
        self.k = k
        self.limits = limits
        self._kappa = None
        self._alpha = None
        self.m = m
        self.sigmas = collections.OrderedDict()

    @property
    def kappa(self):
        if self._kappa is None:
            self._kappa = connectivity(self.g)
        return self._kappa

    @property
    def alpha(self):
        if self._alpha is None:
            self._alpha = independence_number(self.g)
        return self._alpha

    @property
    def m_value(self):
        return self.kappa if self.m is None else self.m

    @property
    def l(self):
        return ceil_div(self.m_value, self.k)

    def sigma(self, size):
        key = 'sigma_%d' % size
        if key not in self.sigmas:
            self.sigmas[key] = sigma_m(self.g, size)
        return self.sigmas[key]

    def sigma_two_of(self, size):
        key = 'sigma_2^%d' % size
        if key not in self.sigmas:
            self.sigmas[key] = sigma_t_m(self.g, 2, size)
        return self.sigmas[key]


# Clause builders

def order_clause(facts, bound):
    return Clause('order', facts.n >= bound, 'n=%d >= %d' % (facts.n, bound))


def connected_clause(facts):
    m, kappa = facts.m_value, facts.kappa
    return Clause('connectivity', 1 <= m <= kappa, '1 <= m=%d <= kappa=%d' % (m, kappa))


def two_degree_clause(facts, size):
    """``sigma_2^size >= n``; ``size`` below 2 cannot be evaluated and fails."""
    if size < 2:
        return Clause('degree', False, 'sigma_2^%d undefined' % size)
    value = facts.sigma_two_of(size)
    return Clause('degree', value >= facts.n, 'sigma_2^%d=%s >= %d' % (size, value, facts.n))


def bondy_degree_clause(facts, size):
    """``sigma_size > size (n - 1) / 2``."""
    if size < 1:
        return Clause('degree', False, 'sigma_%d undefined' % size)
    value = facts.sigma(size)
    bound = fractions.Fraction(size * (facts.n - 1), 2)
    return Clause('degree', value > bound, 'sigma_%d=%s > %s' % (size, value, bound))


def ore_clause(facts):
    value = facts.sigma(2)
    return Clause('degree', value >= facts.n, 'sigma_2=%s >= %d' % (value, facts.n))


def independence_clause(facts, bound, label):
    return Clause('independence', facts.alpha <= bound,
                  'alpha=%d <= %s=%d' % (facts.alpha, label, bound))


def packing_clause(facts):
    found = exact_cycle_packing(facts.g, facts.k, limits=facts.limits)
    return Clause('packing', found is not None, '%d disjoint cycles' % facts.k)


class Theorem(collections.namedtuple('Theorem', 'theorem_id title conclusion clauses')):
    """
    ``clauses`` maps a :class:`_Facts` to the list of hypothesis
    clauses; ``conclusion`` is one of :data:`HAMILTONIAN`,
    :data:`TWO_FACTOR`, :data:`PACKING`.
    """

    def hypothesis(self, facts):
        return self.clauses(facts)


def _theorems():
    return [
        Theorem('ore', 'Ore condition', HAMILTONIAN,
                lambda f: [order_clause(f, 3), ore_clause(f)]),
        Theorem('chvatal-erdos', 'Chvatal-Erdos condition', HAMILTONIAN,
                lambda f: [order_clause(f, 3), independence_clause(f, f.kappa, 'kappa')]),
        Theorem('bondy', 'Bondy condition', HAMILTONIAN,
                lambda f: [order_clause(f, 3), connected_clause(f),
                           bondy_degree_clause(f, f.m_value + 1)]),
        Theorem('yamashita', 'Yamashita condition', HAMILTONIAN,
                lambda f: [order_clause(f, 3), connected_clause(f),
                           two_degree_clause(f, f.m_value + 1)]),
        Theorem('brandt', 'Ore condition for k cycles', TWO_FACTOR,
                lambda f: [order_clause(f, 4 * f.k - 1), ore_clause(f)]),
        Theorem('main', 'two-vertex degree sum condition for k cycles', TWO_FACTOR,
                lambda f: [order_clause(f, 5 * f.k - 2), connected_clause(f),
                           two_degree_clause(f, f.l + 1)]),
        Theorem('ce-2f', 'Chvatal-Erdos condition for k cycles', TWO_FACTOR,
                lambda f: [order_clause(f, 5 * f.k - 2),
                           independence_clause(f, ceil_div(f.kappa, f.k), 'ceil(kappa/k)')]),
        Theorem('bondy-2f', 'Bondy condition for k cycles', TWO_FACTOR,
                lambda f: [order_clause(f, 5 * f.k - 2), connected_clause(f),
                           bondy_degree_clause(f, f.l + 1)]),
        Theorem('partition', 'degree sum condition given k disjoint cycles', TWO_FACTOR,
                lambda f: [connected_clause(f), packing_clause(f),
                           two_degree_clause(f, f.l + 1)]),
        Theorem('corollary8', 'Bondy condition for k cycles, sharp order', TWO_FACTOR,
                lambda f: [order_clause(f, 4 * f.k - 1), connected_clause(f),
                           bondy_degree_clause(f, f.l + 1)]),
        Theorem('packing', 'degree sum condition for k disjoint cycles', PACKING,
                lambda f: [order_clause(f, 5 * f.k - 2), connected_clause(f),
                           two_degree_clause(f, f.l + 1)]),
        Theorem('packing-ii', 'Bondy condition for k disjoint cycles', PACKING,
                lambda f: [order_clause(f, 4 * f.k - 1), connected_clause(f),
                           bondy_degree_clause(f, f.l + 1)]),
    ]


THEOREMS = collections.OrderedDict((t.theorem_id, t) for t in _theorems())

# Theorems whose Bondy-type degree clause should imply the two-vertex clause.
CHAIN_THEOREMS = ('bondy-2f', 'corollary8', 'packing-ii')
M_PARAMETERISED = ('bondy', 'yamashita', 'main', 'bondy-2f', 'partition', 'corollary8',
                   'packing', 'packing-ii')


class TheoremReport(collections.namedtuple(
        'TheoremReport',
        'graph_id theorem_id n k m kappa alpha sigmas clauses hypothesis conclusion'
        ' status chain_ok notes')):
    """
    One graph checked against one statement.  ``clauses`` lists every
    hypothesis :class:`Clause`; ``hypothesis`` is their conjunction.
    ``chain_ok`` is ``None`` unless the statement has a Bondy-type
    degree clause, in which case it is ``False`` when that clause holds
    but the two-vertex clause of the same size does not.
    """

    @property
    def failing_clause(self):
        return next((c.name for c in self.clauses if not c.holds), None)

    def as_dict(self):
        def plain(x):
            return x.to_json() if hasattr(x, 'to_json') else x
        return collections.OrderedDict([
            ('graph', self.graph_id),
            ('theorem', self.theorem_id),
            ('n', self.n), ('k', self.k), ('m', self.m),
            ('kappa', self.kappa), ('alpha', self.alpha),
            ('sigmas', collections.OrderedDict((key, plain(v))
                                               for key, v in self.sigmas.items())),
            ('clauses', collections.OrderedDict((c.name, c.holds) for c in self.clauses)),
            ('failing_clause', self.failing_clause),
            ('hypothesis', self.hypothesis),
            ('conclusion', self.conclusion),
            ('status', self.status),
            ('chain_ok', self.chain_ok),
            ('notes', list(self.notes)),
        ])


def status_of(hypothesis, conclusion):
    return COUNTEREXAMPLE if hypothesis and not conclusion else CONSISTENT


def _conclusion(g, theorem, facts, hypothesis, engine, limits, notes):
    k = facts.k
    if theorem.conclusion == PACKING:
        verdict = packing_feasible_by_theory(g, k, facts.m_value)
        notes.append('theory route: %s' % verdict.route)
        return exact_cycle_packing(g, k, limits=limits) is not None

    exact = exact_two_factor(g, k, limits=limits) is not None
    if engine == 'proof' and hypothesis and theorem.conclusion == TWO_FACTOR:
        try:
            found = two_factor_via_proof(g, k, facts.m_value, limits=limits)
        except ContextUnavailableError as e:
            notes.append('proof engine: %s' % e)
            return exact
        except InternalInvariantError as e:
            # An engine fault counts as a failed conclusion.
            notes.append('proof engine failed on %s: %s' % (to_graph6(g), e))
            log.warning('proof engine failed on %s: %s', to_graph6(g), e)
            return False
        by_proof = isinstance(found, TwoFactor)
        notes.append('proof engine: %s' % ('2-factor' if by_proof else found.tag))
        if by_proof != exact:
            notes.append('proof engine disagrees with exact search')
            log.warning('proof engine and exact search disagree on %s', to_graph6(g))
        return by_proof and exact
    return exact


def check_theorem(g, inst, engine='exact', limits=DEFAULT_LIMITS):
    """
    Evaluate every hypothesis clause of ``inst`` on ``g`` and decide its
    conclusion with the exact solvers.  With ``engine='proof'`` the
    2-factor of a hypothesis-satisfying graph is also built by
    :func:`twofactor.proof.two_factor_via_proof` and cross-checked; an
    internal fault of the engine is noted and fails the conclusion.

    >>> from twofactor.generators import complete_bipartite
    >>> r = check_theorem(complete_bipartite(3, 3), TheoremInstance('main', k=2, m=3))
    >>> r.failing_clause, r.conclusion, r.status
    ('order', False, 'consistent')

    :raises CapacityError: when a solver refuses ``g``; ``where`` names
        the graph
    """
    if g.n == 0:
        raise InvalidArgumentError('cannot check a theorem on the empty graph')
    if engine not in ('exact', 'proof'):
        raise InvalidArgumentError('engine must be "exact" or "proof" but got "%s"' % engine)
    theorem = inst.theorem
    facts = _Facts(g, inst.k, inst.m, limits)
    notes = []
    try:
        clauses = theorem.hypothesis(facts)
        hypothesis = all(c.holds for c in clauses)
        conclusion = _conclusion(g, theorem, facts, hypothesis, engine, limits, notes)
    except CapacityError as e:
        raise CapacityError(e.message, order=e.order, limit=e.limit, where=to_graph6(g))

    chain_ok = None
    if inst.theorem_id in CHAIN_THEOREMS:
        chain_ok = True
        if clauses[-1].holds and facts.l >= 1:
            chain_ok = two_degree_clause(facts, facts.l + 1).holds
            if not chain_ok:
                log.warning('Bondy-type clause holds but two-vertex clause fails on %s',
                            to_graph6(g))

    status = status_of(hypothesis, conclusion)
    if status == COUNTEREXAMPLE:
        log.warning('counterexample to %s (k=%d): %s', inst.theorem_id, inst.k, to_graph6(g))
    return TheoremReport(to_graph6(g), inst.theorem_id, g.n, inst.k, facts.m_value,
                         facts.kappa, facts.alpha, facts.sigmas, tuple(clauses), hypothesis,
                         conclusion, status, chain_ok, tuple(notes))
