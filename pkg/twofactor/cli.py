# -*- coding: utf-8 -*-

"""
Command-line front end.  Exit codes: 0 on success (or a consistent
sweep), 1 when a counterexample or failed check is found, 2 for input
errors, 3 when a graph is above a configured size limit.
"""

import argparse
import json
import logging
import os
import sys

from twofactor._version import __version__
from twofactor.config import Limits
from twofactor.errors import CapacityError, InvalidArgumentError, TwoFactorError
from twofactor.generators import NAMED_GENERATORS
from twofactor.graph import read_edge_list, write_edge_list
from twofactor.graph6 import from_graph6, to_graph6
from twofactor.invariants import invariant_summary
from twofactor.packing import packing_feasible_by_theory
from twofactor.proof import HypothesisRefuted, format_round, two_factor_via_proof
from twofactor.reports import (format_lemma_summary, format_report, format_report_table,
                               format_sharpness, format_summary, write_json_lines,
                               write_summary_csv, write_summary_xml)
from twofactor.solvers import TwoFactor, exact_cycle_packing, exact_two_factor
from twofactor.theorems import THEOREMS, TheoremInstance, check_theorem
from twofactor.verify import (corpus_from_enumeration, corpus_from_graph6,
                              sharpness_suite, verify_corpus, verify_crossing_lemma,
                              verify_insertion_lemma)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _looks_like_edge_list(line):
    return all(field.isdigit() for field in line.split('#', 1)[0].split())


def load_graph(source):
    """
    A graph from a graph6 string, a file, or ``-`` for standard input.
    Files hold either edge-list text or graph6 (first graph taken).
    """
    if source == '-':
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source) as in_file:
            text = in_file.read()
    else:
        return from_graph6(source)
    lines = [line for line in text.splitlines()
             if line.strip() and not line.lstrip().startswith('#')]
    if not lines:
        return read_edge_list('')
    if _looks_like_edge_list(lines[0]):
        return read_edge_list(text)
    return from_graph6(lines[0])


def _print(text):
    sys.stdout.write(text)


# Subcommands

def cmd_invariants(args, limits):
    g = load_graph(args.graph)
    summary = invariant_summary(g, t=args.t, m=args.m)
    if args.json:
        _print(json.dumps(summary.as_dict()) + '\n')
    else:
        for key, value in summary.as_dict().items():
            if value is not None:
                _print('%-10s %s\n' % (key, value))
    return EXIT_OK


def cmd_solve(args, limits):
    g = load_graph(args.graph)
    if args.mode == 'exact':
        found = exact_two_factor(g, args.k, limits=limits)
        _print(found.dump() if found is not None else 'none\n')
        return EXIT_OK

    trace = []
    try:
        found = two_factor_via_proof(g, args.k, args.m, start=args.start, limits=limits,
                                     trace=trace)
    finally:
        if args.trace:
            for r in trace:
                sys.stderr.write(format_round(r) + '\n')
    if isinstance(found, TwoFactor):
        _print(found.dump())
    elif isinstance(found, HypothesisRefuted):
        _print('refuted: %s\n' % found.move)
    else:
        _print('not maximal: %s\n' % found.move)
    return EXIT_OK


def cmd_pack(args, limits):
    g = load_graph(args.graph)
    found = exact_cycle_packing(g, args.k, maximize_order=args.maximize_order,
                                limits=limits)
    _print(found.dump() if found is not None else 'none\n')
    if args.theory:
        verdict = packing_feasible_by_theory(g, args.k, args.m)
        _print('theory: %s (%s)\n' % (verdict.route, verdict.details))
    return EXIT_OK


def cmd_check(args, limits):
    g = load_graph(args.graph)
    report = check_theorem(g, TheoremInstance(args.theorem, args.k, args.m),
                           engine=args.engine, limits=limits)
    _print(format_report(report))
    return EXIT_FOUND if report.status != 'consistent' else EXIT_OK


def _lines_of(path):
    if path == '-':
        for line in sys.stdin:
            yield line
        return
    with open(path) as in_file:
        for line in in_file:
            yield line


def _corpus(args, limits):
    if args.corpus is not None:
        return corpus_from_graph6(_lines_of(args.corpus))
    return corpus_from_enumeration(args.enumerate, connected_only=args.connected,
                                   limits=limits)


def cmd_verify(args, limits):
    inst = TheoremInstance(args.theorem, args.k, args.m)
    summary = verify_corpus(_corpus(args, limits), inst, thorough=args.thorough,
                            engine=args.engine, jobs=args.jobs, progress=args.progress,
                            limits=limits)
    _print(format_summary(summary))
    if summary.counterexamples:
        _print(format_report_table(summary.counterexamples))
    if args.json:
        with open(args.json, 'w') as out_file:
            write_json_lines(summary.reports, out_file)
    if args.csv:
        with open(args.csv, 'w') as out_file:
            write_summary_csv([summary], out_file)
    if args.xml:
        with open(args.xml, 'w') as out_file:
            write_summary_xml(summary, out_file, include_reports=args.xml_reports)
    return EXIT_OK if summary.ok else EXIT_FOUND


def cmd_sharpness(args, limits):
    rows = sharpness_suite()
    _print(format_sharpness(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FOUND


def cmd_generate(args, limits):
    make = NAMED_GENERATORS[args.family]
    try:
        g = make(*args.params)
    except TypeError:
        raise InvalidArgumentError('wrong number of parameters for "%s"' % args.family)
    if args.graph6:
        _print(to_graph6(g) + '\n')
    else:
        _print(write_edge_list(g))
    return EXIT_OK


def cmd_lemmas(args, limits):
    if args.lemma == 'insertion':
        summary = verify_insertion_lemma(args.count, args.order, args.seed)
    else:
        graphs = corpus_from_enumeration(args.order, connected_only=True, limits=limits)
        summary = verify_crossing_lemma(graphs, args.k, limits=limits)
    _print(format_lemma_summary(summary))
    return EXIT_FOUND if summary.failures else EXIT_OK


def _add_graph(parser):
    parser.add_argument('graph', help='graph6 string, edge-list or graph6 file, or "-"')


def _add_k(parser, required=True):
    parser.add_argument('--k', type=int, required=required, default=1,
                        help='number of cycles')


def _add_m(parser):
    parser.add_argument('--m', type=int, default=None,
                        help='connectivity parameter (default: the connectivity)')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='twofactor',
        description='2-factors with exactly k cycles under degree-sum conditions')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('-q', '--quiet', action='store_true')
    parser.add_argument('--max-order', type=int, default=None,
                        help='raise the exact-solver order limits')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('invariants', help='print n, kappa, alpha, delta and sigma values')
    _add_graph(p)
    p.add_argument('--t', type=int, default=None)
    p.add_argument('--m', type=int, default=None)
    p.add_argument('--json', action='store_true')
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser('solve', help='a 2-factor with exactly k cycles')
    _add_graph(p)
    _add_k(p)
    _add_m(p)
    p.add_argument('--mode', choices=('exact', 'proof'), default='exact')
    p.add_argument('--start', choices=('exact-max', 'greedy'), default='exact-max')
    p.add_argument('--trace', action='store_true', help='print one line per augmentation round')
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser('pack', help='k disjoint cycles')
    _add_graph(p)
    _add_k(p)
    _add_m(p)
    p.add_argument('--maximize-order', action='store_true',
                   help='maximise the number of covered vertices')
    p.add_argument('--theory', action='store_true',
                   help='also report which sufficient condition holds')
    p.set_defaults(run=cmd_pack)

    p = sub.add_parser('check', help='check one theorem on one graph')
    _add_graph(p)
    p.add_argument('--theorem', choices=list(THEOREMS), required=True)
    _add_k(p, required=False)
    _add_m(p)
    p.add_argument('--engine', choices=('exact', 'proof'), default='exact')
    p.set_defaults(run=cmd_check)

    p = sub.add_parser('verify', help='check a theorem over a corpus')
    p.add_argument('--theorem', choices=list(THEOREMS), required=True)
    _add_k(p, required=False)
    _add_m(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--corpus', help='graph6 file, one graph per line, or "-"')
    source.add_argument('--enumerate', type=int, metavar='N',
                        help='every isomorphism class of order N')
    p.add_argument('--connected', action='store_true')
    p.add_argument('--thorough', action='store_true', help='every m from 1 to kappa')
    p.add_argument('--engine', choices=('exact', 'proof'), default='exact')
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--progress', action='store_true')
    p.add_argument('--json', metavar='OUT', help='write every report as JSON lines')
    p.add_argument('--csv', metavar='OUT', help='write the summary counts as CSV')
    p.add_argument('--xml', metavar='OUT', help='write the summary as XML')
    p.add_argument('--xml-reports', action='store_true', help='include every report in --xml')
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser('sharpness', help='check the sharpness witnesses')
    p.set_defaults(run=cmd_sharpness)

    p = sub.add_parser('generate', help='print a named graph')
    p.add_argument('family', choices=sorted(NAMED_GENERATORS))
    p.add_argument('params', type=int, nargs='*')
    p.add_argument('--graph6', action='store_true', help='graph6 instead of an edge list')
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser('lemmas', help='check the insertion or crossing lemma')
    p.add_argument('lemma', choices=('insertion', 'crossing'))
    p.add_argument('--count', type=int, default=1000)
    p.add_argument('--order', type=int, default=None,
                   help='largest random order (insertion) or enumerated order (crossing)')
    p.add_argument('--seed', type=int, default=0)
    _add_k(p, required=False)
    p.set_defaults(run=cmd_lemmas)

    return parser


def _configure_logging(verbose, quiet):
    if quiet:
        level = logging.ERROR
    else:
        level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    if getattr(args, 'order', 0) is None:
        args.order = 12 if args.lemma == 'insertion' else 7
    try:
        limits = Limits.from_environment()
        if args.max_order is not None:
            limits = limits.with_solver_order(args.max_order)
        return args.run(args, limits)
    except CapacityError as e:
        sys.stderr.write('twofactor: %s\n' % e)
        return EXIT_CAPACITY
    except TwoFactorError as e:
        sys.stderr.write('twofactor: %s\n' % e)
        return EXIT_INPUT
    except (IOError, OSError) as e:
        sys.stderr.write('twofactor: %s\n' % e)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
