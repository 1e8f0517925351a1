# -*- coding: utf-8  -*-

import io
import json

import lxml.etree
import pytest

from twofactor.generators import complete_bipartite, complete_graph
from twofactor.reports import (SUMMARY_FIELDS, format_lemma_summary, format_report,
                               format_report_table, format_sharpness, format_summary,
                               report_xml, summary_xml, write_json_lines, write_summary_csv,
                               write_summary_xml)
from twofactor.theorems import TheoremInstance, check_theorem
from twofactor.verify import LemmaSummary, SharpnessRow, verify_corpus


@pytest.fixture
def k33_report():
    return check_theorem(complete_bipartite(3, 3), TheoremInstance('main', 2, 3))


@pytest.fixture
def summary():
    return verify_corpus([complete_graph(4), complete_bipartite(3, 3)], TheoremInstance('ore'))


class TestText(object):
    def test_table(self, k33_report):
        lines = format_report_table([k33_report]).splitlines()
        assert lines[0].split() == ['graph', 'theorem', 'k', 'm', 'hypothesis', 'conclusion',
                                    'status']
        assert set(lines[1]) == {'-', ' '}
        assert lines[2].split() == ['EFz_', 'main', '2', '3', 'fails:', 'order', 'fails',
                                    'consistent']

    def test_report(self, k33_report):
        text = format_report(k33_report)
        assert text.startswith('graph EFz_: n=6 kappa=3 alpha=3\nmain with k=2 m=3\n')
        assert '  order        fails n=6 >= 8\n' in text
        assert text.endswith('status: consistent\n')

    def test_summary(self, summary):
        text = format_summary(summary)
        assert text.splitlines()[0] == 'theorem            ore'
        assert 'graphs             2\n' in text

    def test_sharpness(self):
        rows = [SharpnessRow('Bw', 'K3', 'hamiltonian', True),
                SharpnessRow('A_', 'K2', 'no 2-factor', False)]
        lines = format_sharpness(rows).splitlines()
        assert lines[2].split()[-1] == 'PASS'
        assert lines[3].split()[-1] == 'FAIL'

    def test_lemma_summary(self):
        text = format_lemma_summary(LemmaSummary('insertion', 9, 1, ['bad thing']))
        assert text == 'insertion: 9 instances, 1 skipped, 1 failures\n  bad thing\n'


class TestMachineReadable(object):
    def test_json_lines(self, summary):
        out = io.StringIO()
        write_json_lines(summary.reports, out)
        records = [json.loads(line) for line in out.getvalue().splitlines()]
        assert [r['graph'] for r in records] == ['C~', 'EFz_']
        assert records[0]['sigmas'] == {'sigma_2': '+inf'}
        assert records[1]['status'] == 'consistent'

    def test_csv(self, summary):
        out = io.StringIO()
        write_summary_csv([summary], out)
        header, row = out.getvalue().splitlines()
        assert header == ','.join(SUMMARY_FIELDS)
        assert row == 'ore,1,2,2,2,2,0,0,0'

    def test_report_xml(self, k33_report):
        elt = report_xml(k33_report)
        assert elt.get('graph') == 'EFz_'
        assert elt.get('m') == '3'
        assert [c.get('name') for c in elt.findall('clause')] == ['order', 'connectivity',
                                                                  'degree']
        assert elt.find('clause').get('holds') == 'false'
        assert elt.find('conclusion').text == 'false'

    def test_summary_xml(self, summary):
        elt = summary_xml(summary)
        assert elt.tag == 'sweep'
        assert elt.find('counts/hypothesis-holds').text == '2'
        assert elt.find('counterexamples') is not None
        assert elt.find('reports') is None
        assert len(summary_xml(summary, include_reports=True).findall('reports/report')) == 2

    def test_write_xml(self, summary):
        out = io.StringIO()
        write_summary_xml(summary, out)
        parsed = lxml.etree.fromstring(out.getvalue())
        assert parsed.get('theorem') == 'ore'
