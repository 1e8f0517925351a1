# -*- coding: utf-8  -*-

from twofactor.graph import Graph, read_edge_list, write_edge_list
from twofactor.graph6 import from_graph6, to_graph6
from twofactor.enumeration import (canonical_form, dedup_isomorphic, enumerate_small_graphs,
                                   graph_classes)
from twofactor.extended import ExtendedValue
from twofactor.invariants import (connectivity, delta_t, independence_number,
                                  independent_sets_of_size, sigma_m, sigma_t_m)
from twofactor.cycles import CycleSystem, OrientedCycle, OrientedPath, ValidationReport
from twofactor.insertion import (crossing_certificate, cycle_from_degree_rich_path,
                                 first_non_insertible, insert_path, is_insertible)
from twofactor.solvers import (TwoFactor, exact_cycle_packing, exact_two_factor,
                               greedy_cycle_packing)
from twofactor.packing import packing_feasible_by_theory
from twofactor.proof import (HypothesisRefuted, Improved, NotMaximal, ProofContext, Spanning,
                             augment, build_proof_context, two_factor_via_proof)
from twofactor.theorems import TheoremInstance, TheoremReport, check_theorem
from twofactor.verify import sharpness_suite, verify_corpus
from twofactor.config import DEFAULT_LIMITS, Limits

from twofactor._version import __version__


__all__ = [
    'Graph', 'read_edge_list', 'write_edge_list', 'from_graph6', 'to_graph6',
    'canonical_form', 'dedup_isomorphic', 'enumerate_small_graphs', 'graph_classes',
    'ExtendedValue', 'connectivity', 'delta_t', 'independence_number',
    'independent_sets_of_size', 'sigma_m', 'sigma_t_m',
    'CycleSystem', 'OrientedCycle', 'OrientedPath', 'ValidationReport',
    'crossing_certificate', 'cycle_from_degree_rich_path', 'first_non_insertible',
    'insert_path', 'is_insertible',
    'TwoFactor', 'exact_cycle_packing', 'exact_two_factor', 'greedy_cycle_packing',
    'packing_feasible_by_theory',
    'HypothesisRefuted', 'Improved', 'NotMaximal', 'ProofContext', 'Spanning', 'augment',
    'build_proof_context', 'two_factor_via_proof',
    'TheoremInstance', 'TheoremReport', 'check_theorem', 'sharpness_suite', 'verify_corpus',
    'DEFAULT_LIMITS', 'Limits', '__version__'
]
