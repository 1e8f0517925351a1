# -*- coding: utf-8  -*-

import json

import pytest

from twofactor.config import DEFAULT_LIMITS
from twofactor.enumeration import graph_classes
from twofactor import proof
from twofactor.errors import CapacityError, InternalInvariantError, InvalidArgumentError
from twofactor.generators import (complete_bipartite, complete_graph, odd_balanced_bipartite,
                                  petersen_graph, wheel)
from twofactor.graph import Graph
from twofactor.graph6 import to_graph6
from twofactor.theorems import (CHAIN_THEOREMS, CONSISTENT, COUNTEREXAMPLE, THEOREMS,
                                TheoremInstance, check_theorem, status_of)


def check(g, theorem_id, k=1, m=None, **kwargs):
    return check_theorem(g, TheoremInstance(theorem_id, k, m), **kwargs)


class TestInstances(object):
    def test_defaults(self):
        inst = TheoremInstance('ore')
        assert (inst.k, inst.m) == (1, None)
        assert inst.theorem.title == 'Ore condition'

    @pytest.mark.parametrize(
        'args, msg',
        [(('nope',), 'unknown theorem "nope"'),
         (('main', 0), 'cycle count must be positive'),
         (('ore', 2), 'k must be 1')],
        ids=['unknown', 'k0', 'hamiltonian-k'])
    #
    def test_rejects(self, args, msg):
        with pytest.raises(InvalidArgumentError, match=msg):
            TheoremInstance(*args)

    def test_every_theorem_registered(self):
        assert len(THEOREMS) == 12
        assert set(CHAIN_THEOREMS) <= set(THEOREMS)


class TestReports(object):
    @pytest.mark.parametrize(
        'g, theorem_id, k, m, failing, conclusion',
        [(complete_bipartite(3, 3), 'main', 2, 3, 'order', False),
         (odd_balanced_bipartite(7), 'brandt', 1, None, 'degree', False),
         (complete_graph(5), 'ore', 1, None, None, True),
         (complete_graph(8), 'main', 2, None, None, True),
         (complete_graph(6), 'partition', 2, None, None, True),
         (petersen_graph(), 'chvatal-erdos', 1, None, 'independence', False),
         (odd_balanced_bipartite(7), 'bondy', 1, 3, 'degree', False),
         (odd_balanced_bipartite(7), 'yamashita', 1, None, 'degree', False),
         (wheel(6), 'packing', 2, None, 'order', False)],
        ids=['K3,3-main', 'K3,4-brandt', 'K5-ore', 'K8-main', 'K6-partition',
             'petersen-ce', 'K3,4-bondy', 'K3,4-yamashita', 'W6-packing'])
    #
    def test_clauses_and_conclusion(self, g, theorem_id, k, m, failing, conclusion):
        report = check(g, theorem_id, k, m)
        assert report.failing_clause == failing
        assert report.hypothesis == (failing is None)
        assert report.conclusion == conclusion
        assert report.status == CONSISTENT

    def test_clause_details(self):
        report = check(complete_bipartite(3, 3), 'main', 2, 3)
        assert [c.name for c in report.clauses] == ['order', 'connectivity', 'degree']
        assert report.clauses[0].detail == 'n=6 >= 8'
        assert report.clauses[1].detail == '1 <= m=3 <= kappa=3'
        assert report.clauses[2].detail == 'sigma_2^3=6 >= 6'

    def test_connectivity_parameter_defaults_to_kappa(self):
        report = check(complete_graph(8), 'main', 2)
        assert (report.m, report.kappa) == (7, 7)

    def test_bondy_fraction_bound(self):
        report = check(odd_balanced_bipartite(7), 'bondy', 1, 3)
        assert report.clauses[-1].detail == 'sigma_4=12 > 12'

    def test_proof_engine(self):
        report = check(complete_graph(8), 'main', 2, engine='proof')
        assert 'proof engine: 2-factor' in report.notes
        assert report.conclusion

    def test_proof_engine_fault_fails_conclusion(self, monkeypatch):
        def broken_augment(*args, **kwargs):
            raise InternalInvariantError('crossing bound (ii) failed')

        monkeypatch.setattr(proof, 'augment', broken_augment)
        report = check(complete_graph(8), 'main', 2, engine='proof')
        assert report.hypothesis
        assert report.conclusion is False
        assert report.status == COUNTEREXAMPLE
        assert ('proof engine failed on G~~~~{: crossing bound (ii) failed'
                in report.notes)

    def test_packing_notes(self):
        report = check(complete_graph(8), 'packing', 2)
        assert report.notes == ('theory route: enomoto-wang',)

    def test_chain(self):
        assert check(complete_graph(8), 'bondy-2f', 2).chain_ok is True
        assert check(complete_graph(8), 'main', 2).chain_ok is None

    def test_as_dict_is_json(self):
        d = check(complete_graph(5), 'ore').as_dict()
        assert d['sigmas'] == {'sigma_2': '+inf'}
        assert d['clauses'] == {'order': True, 'degree': True}
        assert json.loads(json.dumps(d))['graph'] == 'D~{'

    def test_status(self):
        assert status_of(True, False) == COUNTEREXAMPLE
        assert status_of(False, False) == CONSISTENT
        assert status_of(True, True) == CONSISTENT


class TestErrors(object):
    def test_empty_graph(self):
        with pytest.raises(InvalidArgumentError, match='empty graph'):
            check(Graph(0), 'ore')

    def test_engine(self):
        with pytest.raises(InvalidArgumentError, match='engine must be'):
            check(complete_graph(4), 'ore', engine='fast')

    def test_capacity_names_graph(self):
        limits = DEFAULT_LIMITS._replace(max_two_factor_order=4)
        g = complete_graph(5)
        with pytest.raises(CapacityError, match='order 5 exceeds limit 4') as exc_info:
            check(g, 'ore', limits=limits)
        assert exc_info.value.where == to_graph6(g)


class TestSweeps(object):
    @pytest.mark.slow
    @pytest.mark.parametrize('theorem_id', list(THEOREMS), ids=list(THEOREMS))
    #
    def test_no_counterexample_at_order_six(self, theorem_id):
        k_values = [1] if THEOREMS[theorem_id].conclusion == 'hamiltonian' else [1, 2]
        for k in k_values:
            for g in graph_classes(6, connected_only=True):
                report = check(g, theorem_id, k)
                assert report.status == CONSISTENT
                assert report.chain_ok is not False
