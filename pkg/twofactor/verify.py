# -*- coding: utf-8 -*-

"""
Machine checks of the proven statements at small orders: theorem sweeps
over a corpus of graphs, the sharpness witnesses, and randomised or
exhaustive checks of the insertion and crossing lemmas.
"""

import collections
import functools
import logging
import multiprocessing

import numpy as np
from tqdm import tqdm

from twofactor.config import DEFAULT_LIMITS
from twofactor.cycles import CycleSystem, OrientedPath
from twofactor.enumeration import graph_classes
from twofactor.errors import CapacityError, ContextUnavailableError
from twofactor.generators import (complete_bipartite, odd_balanced_bipartite, random_graph,
                                  two_kk_join_complement, wheel)
from twofactor.graph6 import read_graph6_lines, to_graph6
from twofactor.insertion import crossing_certificate, insert_path, is_insertible
from twofactor.invariants import connectivity
from twofactor.proof import build_proof_context
from twofactor.solvers import exact_cycle_packing, exact_two_factor, shortest_cycle
from twofactor.theorems import COUNTEREXAMPLE, M_PARAMETERISED, check_theorem

log = logging.getLogger(__name__)


def corpus_from_graph6(lines):
    """Graphs from graph6 text lines, blank lines skipped."""
    return (g for _, g in read_graph6_lines(lines))


def corpus_from_enumeration(n, connected_only=False, limits=DEFAULT_LIMITS):
    """One graph per isomorphism class of order ``n``."""
    return graph_classes(n, connected_only=connected_only, limits=limits)


Skipped = collections.namedtuple('Skipped', 'graph_id reason')
Skipped.__doc__ = 'A graph a solver refused because of its size.'


class CorpusSummary(collections.namedtuple(
        'CorpusSummary',
        'theorem_id k graphs reports hypothesis_holds conclusion_holds'
        ' counterexamples chain_violations skipped')):
    """
    Totals over a sweep.  ``reports`` holds every :class:`TheoremReport`
    in input order (several per graph in thorough mode);
    ``counterexamples`` is the sublist with that status.
    """

    @property
    def ok(self):
        return not self.counterexamples and not self.chain_violations

    def counts(self):
        return collections.OrderedDict([
            ('theorem', self.theorem_id),
            ('k', self.k),
            ('graphs', self.graphs),
            ('reports', len(self.reports)),
            ('hypothesis_holds', self.hypothesis_holds),
            ('conclusion_holds', self.conclusion_holds),
            ('counterexamples', len(self.counterexamples)),
            ('chain_violations', self.chain_violations),
            ('skipped', len(self.skipped)),
        ])


def _instances_for(g, inst, thorough):
    if not thorough or inst.theorem_id not in M_PARAMETERISED or inst.m is not None:
        return [inst]
    kappa = connectivity(g)
    if kappa < 1:
        return [inst]
    return [inst._replace(m=m) for m in range(1, kappa + 1)]


def _check_one(g, inst, thorough, engine, limits):
    try:
        return [check_theorem(g, each, engine=engine, limits=limits)
                for each in _instances_for(g, inst, thorough)]
    except CapacityError as e:
        return Skipped(to_graph6(g), str(e))


def verify_corpus(graphs, inst, thorough=False, engine='exact', jobs=1, progress=False,
                  limits=DEFAULT_LIMITS):
    """
    Check ``inst`` on every graph of ``graphs``.  With ``thorough`` each
    connectivity-parameterised statement is checked for every ``m`` from
    1 to the connectivity.  ``jobs > 1`` fans the graphs out over a
    process pool; results keep input order either way.  Graphs a solver
    refuses are listed in ``skipped``.
    """
    check = functools.partial(_check_one, inst=inst, thorough=thorough, engine=engine,
                              limits=limits)
    log.info('verifying %s (k=%d)%s', inst.theorem_id, inst.k,
             ' thoroughly' if thorough else '')

    if jobs > 1:
        pool = multiprocessing.Pool(jobs)
        results = pool.imap(check, graphs, chunksize=64)
    else:
        pool = None
        results = (check(g) for g in graphs)
    if progress:
        results = tqdm(results, unit='graph')

    reports, skipped = [], []
    n_graphs = 0
    try:
        for result in results:
            n_graphs += 1
            if isinstance(result, Skipped):
                log.warning('skipped %s: %s', result.graph_id, result.reason)
                skipped.append(result)
            else:
                reports.extend(result)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    summary = CorpusSummary(
        theorem_id=inst.theorem_id, k=inst.k, graphs=n_graphs, reports=reports,
        hypothesis_holds=sum(r.hypothesis for r in reports),
        conclusion_holds=sum(r.conclusion for r in reports),
        counterexamples=[r for r in reports if r.status == COUNTEREXAMPLE],
        chain_violations=sum(r.chain_ok is False for r in reports),
        skipped=skipped)
    log.info('checked %d graphs: %d counterexamples, %d skipped', n_graphs,
             len(summary.counterexamples), len(skipped))
    return summary


# Sharpness witnesses

SharpnessRow = collections.namedtuple('SharpnessRow', 'graph_id name claim passed')


def has_two_factor(g, limits=DEFAULT_LIMITS):
    """True when some number of cycles gives a 2-factor."""
    return any(exact_two_factor(g, k, limits=limits) is not None
               for k in range(1, g.n // 3 + 1))


def _sharpness_cases():
    k33 = complete_bipartite(3, 3)
    return [
        ('K3,4', odd_balanced_bipartite(7), 'no 2-factor',
         lambda g: not has_two_factor(g)),
        ('K4,5', odd_balanced_bipartite(9), 'no 2-factor',
         lambda g: not has_two_factor(g)),
        ('K3,3', k33, 'hamiltonian',
         lambda g: exact_two_factor(g, 1) is not None),
        ('K3,3', k33, 'no 2-factor with 2 cycles',
         lambda g: exact_two_factor(g, 2) is None),
        ('W5', wheel(5), 'no 2 disjoint cycles',
         lambda g: exact_cycle_packing(g, 2) is None),
        ('W6', wheel(6), 'no 2 disjoint cycles',
         lambda g: exact_cycle_packing(g, 2) is None),
        ('2K3+K3c', two_kk_join_complement(3), 'no 3 disjoint cycles',
         lambda g: exact_cycle_packing(g, 3) is None),
    ]


def sharpness_suite():
    """
    The graphs showing the degree and order conditions cannot be
    weakened, each with the property it must have.

    >>> all(row.passed for row in sharpness_suite())
    True
    """
    rows = []
    for name, g, claim, check in _sharpness_cases():
        passed = bool(check(g))
        if not passed:
            log.warning('sharpness witness %s fails "%s"', name, claim)
        rows.append(SharpnessRow(to_graph6(g), name, claim, passed))
    return rows


# Lemma checks

LemmaSummary = collections.namedtuple('LemmaSummary', 'name instances skipped failures')
LemmaSummary.__doc__ = '``failures`` lists one message per violated property.'


def _random_walk_path(g, rng, available, max_length):
    start = int(rng.choice(sorted(available)))
    path = [start]
    while len(path) < max_length:
        options = sorted(w for w in g.neighbours(path[-1]) if w in available and w not in path)
        if not options:
            break
        path.append(int(rng.choice(options)))
    return path


def _random_system(g, rng):
    """Some disjoint cycles (shortest ones on random vertex subsets) and paths."""
    left = set(g.vertices)
    members = []
    for _ in range(int(rng.integers(1, 3))):
        keep = {v for v in left if rng.random() < 0.7}
        cycle = shortest_cycle(g, keep)
        if cycle is not None:
            members.append(cycle)
            left.difference_update(cycle)
    for _ in range(int(rng.integers(0, 2))):
        if left:
            path = _random_walk_path(g, rng, left, int(rng.integers(1, 4)))
            members.append(OrientedPath(path))
            left.difference_update(path)
    return CycleSystem(g, members)


def _insertible_path(g, sys, rng):
    movable = {v for v in sys.remainder().vertices if is_insertible(g, sys, v)}
    if not movable:
        return None
    return _random_walk_path(g, rng, movable, int(rng.integers(1, 5)))


def _insertion_instance(rng, max_order, attempts=200):
    for _ in range(attempts):
        n = int(rng.integers(5, max_order + 1))
        g = random_graph(n, float(rng.uniform(0.3, 0.9)), rng)
        sys = _random_system(g, rng)
        if not sys.members:
            continue
        path = _insertible_path(g, sys, rng)
        if path is not None:
            return g, sys, path
    return None


def _shape(sys):
    return len(sys.cycles), len(sys.paths)


def verify_insertion_lemma(count=1000, max_order=12, seed=0):
    """
    Splice random paths of insertible vertices into random systems and
    check that the result is valid, keeps its numbers of cycles and
    paths, and covers exactly the old vertices plus the path.
    """
    rng = np.random.default_rng(seed)
    failures = []
    skipped = 0
    for index in range(count):
        instance = _insertion_instance(rng, max_order)
        if instance is None:
            skipped += 1
            continue
        g, sys, path = instance
        result = insert_path(g, sys, path).result
        where = '%s %s path %s' % (to_graph6(g), sys.dump().replace('\n', '; '), path)
        report = result.validate()
        if not report:
            failures.append('invalid result (%s) for %s' % (report.message, where))
        if _shape(result) != _shape(sys):
            failures.append('shape changed for %s' % where)
        if result.covered() != sys.covered().union(path):
            failures.append('covered set wrong for %s' % where)
    log.info('insertion lemma: %d instances, %d failures', count - skipped, len(failures))
    return LemmaSummary('insertion', count - skipped, skipped, failures)


def crossing_pairs(ctx):
    """Every ``(x, x')`` the crossing bounds speak about, in both orientations."""
    for frame in ctx.frames:
        for i, u in enumerate(frame.attachments):
            partners = [ctx.x0] + [frame.cycle.successor(w)
                                   for j, w in enumerate(frame.attachments) if j != i]
            for x in frame.scanned(i):
                for xprime in partners:
                    if x != xprime:
                        yield x, xprime


def check_crossing_context(g, sys, ctx):
    """Violations of the crossing bounds and of the independence of ``X`` and ``Y``."""
    failures = []
    where = '%s %s' % (to_graph6(g), sys.dump().replace('\n', '; '))
    for x, xprime in crossing_pairs(ctx):
        cert = crossing_certificate(g, sys, ctx, x, xprime)
        if not cert.holds:
            failures.append('crossing bound fails for (%d, %d) on %s' % (x, xprime, where))
    for name, vertices in (('X', ctx.x_set), ('Y', ctx.y_set)):
        if None in vertices or len(set(vertices)) != ctx.l + 1:
            failures.append('%s has wrong size on %s' % (name, where))
        elif not g.is_independent(vertices):
            failures.append('%s not independent on %s' % (name, where))
    return failures


def verify_crossing_lemma(graphs, k, limits=DEFAULT_LIMITS):
    """
    For each connected graph take a maximum-order packing of ``k``
    cycles; when it leaves vertices uncovered, check the crossing bounds
    for every pair and the independence of ``X`` and ``Y``.
    """
    failures = []
    instances = skipped = 0
    for g in graphs:
        kappa = connectivity(g)
        if kappa < 1:
            continue
        sys = exact_cycle_packing(g, k, maximize_order=True, limits=limits)
        if sys is None or sys.is_spanning():
            continue
        try:
            ctx = build_proof_context(g, sys, kappa, k)
        except ContextUnavailableError:
            skipped += 1
            continue
        instances += 1
        failures.extend(check_crossing_context(g, sys, ctx))
    log.info('crossing lemma: %d instances, %d failures', instances, len(failures))
    return LemmaSummary('crossing', instances, skipped, failures)
