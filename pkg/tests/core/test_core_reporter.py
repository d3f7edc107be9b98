"""Tests for core.reporter module."""

import csv
import json
from io import StringIO

import pytest
from fractions import Fraction

from einsteincheck.core.classify import Verdict
from einsteincheck.core.flagdecomp import make_decomposition
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.ratpoly import RationalPoly
from einsteincheck.core.reporter import OutputFormat, Reporter
from einsteincheck.core.reproduce import CheckRecord, SweepRow
from einsteincheck.core.rootsys import LieKind
from einsteincheck.core.solver import SolveResult, bi_invariant_solution, quotient_einstein_metrics


@pytest.fixture(scope="module")
def e6_iib():
    return make_decomposition(LieKind('E6'), 3)


@pytest.fixture(scope="module")
def result(e6_iib):
    return SolveResult(
        dims=e6_iib,
        solutions=[bi_invariant_solution(e6_iib)],
        polynomial=RationalPoly((-2, 0, 1)),
        notes=["sample note"],
    )


@pytest.fixture
def records():
    return [
        CheckRecord('tables.E6.IIb', 'E6 row', '(24, 3, 40, 10)', '(24, 3, 40, 10)', True),
        CheckRecord('poly.E6', 'E6 eliminant', '[1, 2]', '[1, 3]', False, note='differs'),
    ]


def _render(fmt, method, *args, **kwargs):
    output = StringIO()
    reporter = Reporter(OutputFormat(fmt), precision=kwargs.pop('precision', 12), verbose=kwargs.pop('verbose', False))
    getattr(reporter, method)(*args, output=output)
    return output.getvalue()


class TestValues:
    """Test value rendering."""

    def test_exact_values(self):
        reporter = Reporter()
        assert reporter.value_str(RationalInterval.exact(Fraction(2, 7))) == "2/7"
        assert reporter.value_str(Fraction(3, 1)) == "3"
        assert reporter.value_str(5) == "5"

    def test_inexact_values_use_midpoint(self):
        reporter = Reporter(precision=6)
        value = RationalInterval(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**20))
        assert reporter.value_str(value) == "0.333333"

    def test_stdout_default(self, e6_iib, capsys):
        Reporter(OutputFormat.CSV).report_spaces([e6_iib])
        assert capsys.readouterr().out.startswith("group,node,type")


class TestSpaces:
    """Test the spaces table."""

    def test_human(self, e6_iib):
        text = _render('human', 'report_spaces', [e6_iib])
        header, row = text.splitlines()
        assert header.split() == ['group', 'node', 'type', 'd0', 'd1', 'd2', 'd3', 'd4']
        assert row.split()[:3] == ['E6', '3', 'IIb']
        assert row.split()[4:] == ['24', '3', '40', '10']

    def test_human_with_quotients(self, e6_iib):
        quotients = {e6_iib.label: quotient_einstein_metrics(e6_iib)}
        text = _render('human', 'report_spaces', [e6_iib], quotients)
        assert "G/H Kahler-Einstein: (w1, w2) = (1, 2)" in text
        assert text.count("G/H ") == 2

    def test_json(self, e6_iib):
        quotients = {e6_iib.label: quotient_einstein_metrics(e6_iib)}
        data = json.loads(_render('json', 'report_spaces', [e6_iib], quotients))
        space = data['spaces'][0]
        assert space['group'] == 'E6'
        assert space['node'] == 3
        assert space['type'] == 'IIb'
        assert space['dims']['d3'] == 40
        assert [q['kahler'] for q in space['quotient_einstein'] if q['w2'] == '2'] == [True]

    def test_json_without_quotients(self, e6_iib):
        data = json.loads(_render('json', 'report_spaces', [e6_iib]))
        assert 'quotient_einstein' not in data['spaces'][0]

    def test_csv(self, e6_iib):
        g2 = make_decomposition(LieKind('G2'), 2)
        rows = list(csv.reader(StringIO(_render('csv', 'report_spaces', [e6_iib, g2]))))
        assert rows[0] == ['group', 'node', 'type', 'd0', 'd1', 'd2', 'd3', 'd4']
        assert rows[1][:3] == ['E6', '3', 'IIb']
        assert rows[2][:3] == ['G2', '2', 'Ia']
        assert rows[2][4:] == ['0', '3', '8', '2']


class TestSolve:
    """Test solve reports."""

    def test_human(self, result):
        text = _render('human', 'report_solve', [result])
        assert "E6[3] IIb  dims (d1, d2, d3, d4) = (24, 3, 40, 10)" in text
        assert "polynomial (degree 2): x**2 - 2" in text
        assert "note: sample note" in text
        assert "[BiInvariant] BiInvariant (x1 = x2, u0 = u1 = x2, all equal)" in text
        assert "u0 = 1, u1 = 1, u2 = 1, x1 = 1, x2 = 1, e = 1/4" in text
        assert "naturally reductive factor" not in text

    def test_json(self, result):
        data = json.loads(_render('json', 'report_solve', [result]))
        entry = data['results'][0]
        assert entry['dims'] == [24, 3, 40, 10]
        assert entry['polynomial'] == ['1', '0', '-2']
        assert entry['notes'] == ["sample note"]
        solution = entry['solutions'][0]
        assert solution['branch'] == 'BiInvariant'
        assert solution['classification'] == Verdict.BI_INVARIANT.value
        assert solution['params']['e'] == {'value': '1/4', 'decimal': '0.250000000000', 'exact': True}

    def test_json_without_polynomial(self, e6_iib):
        data = json.loads(_render('json', 'report_solve', [SolveResult(e6_iib, [bi_invariant_solution(e6_iib)])]))
        assert data['results'][0]['polynomial'] is None

    def test_json_is_stable(self, result):
        assert _render('json', 'report_solve', [result]) == _render('json', 'report_solve', [result])

    def test_csv(self, result):
        rows = list(csv.reader(StringIO(_render('csv', 'report_solve', [result]))))
        assert rows[0] == ['group', 'node', 'type', 'branch', 'classification',
                           'u0', 'u1', 'u2', 'x1', 'x2', 'e', 'residual_bound']
        assert rows[1][:5] == ['E6', '3', 'IIb', 'BiInvariant', 'BiInvariant']
        assert rows[1][5:11] == ['1', '1', '1', '1', '1', '1/4']

    def test_ia_leaves_missing_blocks_empty(self):
        g2 = make_decomposition(LieKind('G2'), 2)
        rows = list(csv.reader(StringIO(
            _render('csv', 'report_solve', [SolveResult(g2, [bi_invariant_solution(g2)])])
        )))
        assert rows[1][6] == ''


class TestSweep:
    """Test sweep reports."""

    @pytest.fixture
    def rows(self):
        return [
            SweepRow('B', 5, 3, (8, 10, 30, 6), 1, True, ('1.5',)),
            SweepRow('B', 6, 3, (8, 21, 42, 6), 0, False),
        ]

    def test_human(self, rows):
        lines = _render('human', 'report_sweep', rows).splitlines()
        assert len(lines) == 3
        assert lines[1].startswith('B5')
        assert '✔' in lines[1]
        assert '✖' in lines[2]

    def test_json(self, rows):
        data = json.loads(_render('json', 'report_sweep', rows))
        assert data['sweep'][0] == {
            'family': 'B', 'n': 5, 'p': 3, 'dims': [8, 10, 30, 6],
            'non_naturally_reductive': 1, 'in_window': True, 'x2': ['1.5'],
        }

    def test_csv(self, rows):
        out = list(csv.reader(StringIO(_render('csv', 'report_sweep', rows))))
        assert out[1] == ['B', '5', '3', '8', '10', '30', '6', '1', 'True', '1.5']
        assert out[2][-1] == ''


class TestChecks:
    """Test reproduction check reports."""

    def test_human(self, records):
        text = _render('human', 'report_checks', records)
        assert "✔" in text and "✖" in text
        assert "computed: [1, 3]" in text
        assert "computed: (24, 3, 40, 10)" not in text
        assert "1/2 checks passed" in text
        assert "some reproduction checks failed" in text

    def test_human_verbose_and_all_passed(self, records):
        text = _render('human', 'report_checks', records[:1], verbose=True)
        assert "computed: (24, 3, 40, 10)" in text
        assert "all reproduction checks passed" in text

    def test_json(self, records):
        data = json.loads(_render('json', 'report_checks', records))
        assert data['summary'] == {'total': 2, 'passed': 1, 'failed': 1}
        assert data['checks'][1]['pass'] is False
        assert data['checks'][1]['note'] == 'differs'
        assert set(data['checks'][0]) == {'id', 'paper_ref', 'expected', 'computed', 'pass', 'note'}
        assert data['checks'][0]['paper_ref'] == 'E6 row'

    def test_csv(self, records):
        rows = list(csv.reader(StringIO(_render('csv', 'report_checks', records))))
        assert rows[0] == ['id', 'paper_ref', 'expected', 'computed', 'pass', 'note']
        assert rows[2] == ['poly.E6', 'E6 eliminant', '[1, 2]', '[1, 3]', 'False', 'differs']
