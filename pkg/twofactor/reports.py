# -*- coding: utf-8 -*-

"""
Writers for sweep results: JSON lines (one object per report), a CSV
of summary counts, plain-text tables, and an XML document built with
``lxml``.
"""

import csv
import json

import lxml.etree

from twofactor.utils import str_from_xml_elt

SUMMARY_FIELDS = ('theorem', 'k', 'graphs', 'reports', 'hypothesis_holds',
                  'conclusion_holds', 'counterexamples', 'chain_violations', 'skipped')


def report_json(report):
    return json.dumps(report.as_dict())


def write_json_lines(reports, out_file):
    for report in reports:
        out_file.write(report_json(report) + '\n')


def write_summary_csv(summaries, out_file):
    """One CSV row of counts per :class:`twofactor.verify.CorpusSummary`."""
    writer = csv.DictWriter(out_file, fieldnames=SUMMARY_FIELDS, lineterminator='\n')
    writer.writeheader()
    for summary in summaries:
        writer.writerow(summary.counts())


def _format_rows(header, rows):
    widths = [max(len(str(x)) for x in column) for column in zip(header, *rows)]
    lines = ['  '.join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip()
             for row in [header] + list(rows)]
    lines.insert(1, '  '.join('-' * w for w in widths))
    return '\n'.join(lines) + '\n'


def format_report_table(reports):
    """
    >>> print(format_report_table([]), end='')
    graph  theorem  k  m  hypothesis  conclusion  status
    -----  -------  -  -  ----------  ----------  ------
    """
    header = ('graph', 'theorem', 'k', 'm', 'hypothesis', 'conclusion', 'status')
    rows = [(r.graph_id, r.theorem_id, r.k, r.m,
             'holds' if r.hypothesis else 'fails: %s' % r.failing_clause,
             'holds' if r.conclusion else 'fails', r.status)
            for r in reports]
    return _format_rows(header, rows)


def format_report(report):
    """Every clause of one report, one per line."""
    lines = ['graph %s: n=%d kappa=%d alpha=%d' % (report.graph_id, report.n, report.kappa,
                                                    report.alpha),
             '%s with k=%d m=%d' % (report.theorem_id, report.k, report.m)]
    for clause in report.clauses:
        lines.append('  %-12s %-5s %s' % (clause.name, 'holds' if clause.holds else 'fails',
                                          clause.detail))
    lines.append('  conclusion   %s' % ('holds' if report.conclusion else 'fails'))
    lines.extend('  note: %s' % note for note in report.notes)
    lines.append('status: %s' % report.status)
    return '\n'.join(lines) + '\n'


def format_summary(summary):
    return ''.join('%-18s %s\n' % (key, value) for key, value in summary.counts().items())


def format_sharpness(rows):
    header = ('graph', 'graph6', 'claim', 'result')
    return _format_rows(header, [(r.name, r.graph_id, r.claim, 'PASS' if r.passed else 'FAIL')
                                 for r in rows])


def format_lemma_summary(summary):
    lines = ['%s: %d instances, %d skipped, %d failures'
             % (summary.name, summary.instances, summary.skipped, len(summary.failures))]
    lines.extend('  ' + failure for failure in summary.failures)
    return '\n'.join(lines) + '\n'


def _text(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def report_xml(report):
    elt = lxml.etree.Element('report', graph=report.graph_id, status=report.status)
    for key in ('n', 'k', 'm', 'kappa', 'alpha'):
        elt.set(key, _text(getattr(report, key)))
    for name, value in report.sigmas.items():
        lxml.etree.SubElement(elt, 'sigma', name=name).text = _text(value)
    for clause in report.clauses:
        child = lxml.etree.SubElement(elt, 'clause', name=clause.name, holds=_text(clause.holds))
        child.text = clause.detail
    lxml.etree.SubElement(elt, 'conclusion').text = _text(report.conclusion)
    return elt


def summary_xml(summary, include_reports=False):
    """
    ``<sweep>`` element holding the counts, every counterexample, and
    (with ``include_reports``) every report.
    """
    elt = lxml.etree.Element('sweep', theorem=summary.theorem_id, k=str(summary.k))
    counts = lxml.etree.SubElement(elt, 'counts')
    for key, value in summary.counts().items():
        if key not in ('theorem', 'k'):
            lxml.etree.SubElement(counts, key.replace('_', '-')).text = _text(value)
    examples = lxml.etree.SubElement(elt, 'counterexamples')
    for report in summary.counterexamples:
        examples.append(report_xml(report))
    skipped = lxml.etree.SubElement(elt, 'skipped')
    for item in summary.skipped:
        lxml.etree.SubElement(skipped, 'graph', graph=item.graph_id).text = item.reason
    if include_reports:
        everything = lxml.etree.SubElement(elt, 'reports')
        for report in summary.reports:
            everything.append(report_xml(report))
    return elt


def write_summary_xml(summary, out_file, include_reports=False):
    out_file.write(str_from_xml_elt(summary_xml(summary, include_reports), pretty_print=True))
