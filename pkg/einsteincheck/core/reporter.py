"""Output reporting for EinsteinCheck."""

import csv
import json
import sys
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO

from einsteincheck.core.flagdecomp import Decomposition
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.reproduce import CheckRecord, SweepRow
from einsteincheck.core.solver import EinsteinSolution, QuotientEinstein, SolveResult
from einsteincheck.exceptions import EinsteinCheckInfo, EinsteinCheckWarning
from einsteincheck.utils import decimal_str, fraction_str


VALUE_NAMES = ('u0', 'u1', 'u2', 'x1', 'x2', 'e')


class OutputFormat(Enum):
    """Supported output formats."""
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


class Reporter:
    """Handles output reporting in various formats."""

    MARKS = {
        'pass': '✔',    # ✔ check mark
        'fail': '✖',    # ✖ error mark
    }

    def __init__(self, format: OutputFormat = OutputFormat.HUMAN, precision: int = 12, verbose: bool = False):
        self.format = format
        self.precision = precision
        self.verbose = verbose

    # -- value rendering ---------------------------------------------------------------------

    def value_str(self, value: Any) -> str:
        """``p/q`` for exact values, a rounded decimal of the midpoint otherwise."""
        if isinstance(value, RationalInterval):
            if value.is_exact:
                return fraction_str(value.lo)
            return decimal_str(value.midpoint, self.precision)
        return fraction_str(Fraction(value))

    def _value_json(self, value: RationalInterval) -> Dict[str, Any]:
        return {
            'value': self.value_str(value),
            'decimal': decimal_str(value.midpoint, self.precision),
            'exact': value.is_exact,
        }

    @staticmethod
    def _residual_str(bound: Fraction) -> str:
        return "0" if bound == 0 else f"{float(bound):.3e}"

    def _dispatch(self, kind: str, output: Optional[TextIO], *args) -> None:
        output = output or sys.stdout
        writer = getattr(self, f"_{kind}_{self.format.value}")
        writer(*args, output)

    # -- spaces ------------------------------------------------------------------------------

    def report_spaces(self, spaces: Sequence[Decomposition],
                      quotients: Optional[Dict[str, List[QuotientEinstein]]] = None,
                      output: Optional[TextIO] = None) -> None:
        """Table of painted nodes with q = 2, their block dimensions and Type.

        Args:
            spaces: Decompositions in display order
            quotients: Optional Einstein metrics on G/H keyed by decomposition label
            output: Output stream (defaults to stdout)
        """
        self._dispatch('spaces', output, spaces, quotients or {})

    def _spaces_human(self, spaces, quotients, output: TextIO) -> None:
        output.write(f"{'group':<6} {'node':>4}  {'type':<4}  {'d0':>3} {'d1':>5} {'d2':>5} {'d3':>5} {'d4':>5}\n")
        for d in spaces:
            output.write(
                f"{d.kind.label:<6} {d.node:>4}  {d.dtype.value:<4}  "
                f"{d.d0:>3} {d.d1:>5} {d.d2:>5} {d.d3:>5} {d.d4:>5}\n"
            )
            for q in quotients.get(d.label, []):
                tag = "Kahler-Einstein" if q.kahler else "Einstein"
                output.write(f"{'':<13}G/H {tag}: (w1, w2) = (1, {fraction_str(q.params.w2)}), "
                             f"e = {fraction_str(q.e)}\n")

    def _spaces_json(self, spaces, quotients, output: TextIO) -> None:
        rows = []
        for d in spaces:
            row = {
                'group': d.kind.label,
                'node': d.node,
                'type': d.dtype.value,
                'dims': {'d0': d.d0, 'd1': d.d1, 'd2': d.d2, 'd3': d.d3, 'd4': d.d4},
            }
            if d.label in quotients:
                row['quotient_einstein'] = [
                    {'w1': '1', 'w2': fraction_str(q.params.w2), 'e': fraction_str(q.e), 'kahler': q.kahler}
                    for q in quotients[d.label]
                ]
            rows.append(row)
        self._dump({'spaces': rows}, output)

    def _spaces_csv(self, spaces, quotients, output: TextIO) -> None:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(['group', 'node', 'type', 'd0', 'd1', 'd2', 'd3', 'd4'])
        for d in spaces:
            writer.writerow([d.kind.label, d.node, d.dtype.value, d.d0, d.d1, d.d2, d.d3, d.d4])

    # -- solve -------------------------------------------------------------------------------

    def report_solve(self, results: Sequence[SolveResult], output: Optional[TextIO] = None) -> None:
        """Every verified solution with its branch, verdict and residual bound."""
        self._dispatch('solve', output, results)

    def _solution_json(self, sol: EinsteinSolution) -> Dict[str, Any]:
        values = sol.values()
        return {
            'branch': sol.branch.value,
            'classification': sol.classification.verdict.value if sol.classification else None,
            'witness': list(sol.classification.witness) if sol.classification else [],
            'params': {name: self._value_json(values[name]) for name in VALUE_NAMES if name in values},
            'residual_bound': self._residual_str(sol.residual_bound),
        }

    def _solve_human(self, results, output: TextIO) -> None:
        for result in results:
            d = result.dims
            output.write(f"{d.label}  dims (d1, d2, d3, d4) = {d.dims}\n")
            if result.polynomial is not None:
                output.write(f"  polynomial (degree {result.polynomial.degree}): {result.polynomial}\n")
            if self.verbose and result.nr_polynomial is not None:
                output.write(f"  naturally reductive factor: {result.nr_polynomial}\n")
            for note in result.notes:
                output.write(f"  note: {note}\n")
            for sol in result:
                values = sol.values()
                params = ", ".join(f"{name} = {self.value_str(values[name])}" for name in VALUE_NAMES
                                   if name in values)
                verdict = str(sol.classification) if sol.classification else "unclassified"
                output.write(f"  [{sol.branch.value}] {verdict}\n")
                output.write(f"      {params}\n")
                output.write(f"      residual <= {self._residual_str(sol.residual_bound)}\n")
            if self.verbose:
                for rejected in result.rejected:
                    output.write(f"  rejected [{rejected.branch.value}] x2 ~ "
                                 f"{decimal_str(rejected.x2.midpoint, self.precision)}: {rejected.reason}\n")
            output.write("\n")

    def _solve_json(self, results, output: TextIO) -> None:
        report = []
        for result in results:
            d = result.dims
            report.append({
                'group': d.kind.label,
                'node': d.node,
                'type': d.dtype.value,
                'dims': list(d.dims),
                'polynomial': [fraction_str(c) for c in result.polynomial.highest_first()]
                if result.polynomial is not None else None,
                'solutions': [self._solution_json(s) for s in result],
                'rejected': [
                    {'branch': r.branch.value, 'x2': decimal_str(r.x2.midpoint, self.precision), 'reason': r.reason}
                    for r in result.rejected
                ],
                'notes': list(result.notes),
            })
        self._dump({'results': report}, output)

    def _solve_csv(self, results, output: TextIO) -> None:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(['group', 'node', 'type', 'branch', 'classification', *VALUE_NAMES, 'residual_bound'])
        for result in results:
            d = result.dims
            for sol in result:
                values = sol.values()
                writer.writerow([
                    d.kind.label, d.node, d.dtype.value, sol.branch.value,
                    sol.classification.verdict.value if sol.classification else '',
                    *[self.value_str(values[name]) if name in values else '' for name in VALUE_NAMES],
                    self._residual_str(sol.residual_bound),
                ])

    # -- sweep -------------------------------------------------------------------------------

    def report_sweep(self, rows: Sequence[SweepRow], output: Optional[TextIO] = None) -> None:
        self._dispatch('sweep', output, rows)

    def _sweep_human(self, rows, output: TextIO) -> None:
        output.write(f"{'group':<6} {'p':>3}  {'dims':<26} {'non-NR':>6}  {'window':<6}  x2\n")
        for row in rows:
            mark = self.MARKS['pass'] if row.in_window else self.MARKS['fail']
            output.write(f"{row.family + str(row.n):<6} {row.p:>3}  {str(row.dims):<26} {row.non_nr:>6}  "
                         f"{mark:<6}  {', '.join(row.x2)}\n")

    def _sweep_json(self, rows, output: TextIO) -> None:
        self._dump({'sweep': [
            {
                'family': row.family, 'n': row.n, 'p': row.p, 'dims': list(row.dims),
                'non_naturally_reductive': row.non_nr, 'in_window': row.in_window, 'x2': list(row.x2),
            }
            for row in rows
        ]}, output)

    def _sweep_csv(self, rows, output: TextIO) -> None:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(['family', 'n', 'p', 'd1', 'd2', 'd3', 'd4', 'non_naturally_reductive', 'in_window', 'x2'])
        for row in rows:
            writer.writerow([row.family, row.n, row.p, *row.dims, row.non_nr, row.in_window, ' '.join(row.x2)])

    # -- reproduction checks -----------------------------------------------------------------

    def report_checks(self, records: Sequence[CheckRecord], output: Optional[TextIO] = None) -> None:
        self._dispatch('checks', output, records)

    def _checks_human(self, records, output: TextIO) -> None:
        for record in records:
            mark = self.MARKS['pass'] if record.passed else self.MARKS['fail']
            output.write(f"{mark:<3} {record.id:<36} {record.ref}\n")
            if self.verbose or not record.passed:
                output.write(f"      expected: {record.expected}\n")
                output.write(f"      computed: {record.computed}\n")
            if record.note:
                output.write(f"      note: {record.note}\n")
        failed = sum(1 for r in records if not r.passed)
        output.write(f"{len(records) - failed}/{len(records)} checks passed\n")
        if failed:
            output.write(str(EinsteinCheckWarning()) + "\n")
        else:
            output.write(str(EinsteinCheckInfo()) + "\n")

    def _checks_json(self, records, output: TextIO) -> None:
        self._dump({
            'summary': {
                'total': len(records),
                'passed': sum(1 for r in records if r.passed),
                'failed': sum(1 for r in records if not r.passed),
            },
            'checks': [
                {
                    'id': r.id, 'paper_ref': r.ref, 'expected': r.expected, 'computed': r.computed,
                    'pass': r.passed, 'note': r.note,
                }
                for r in records
            ],
        }, output)

    def _checks_csv(self, records, output: TextIO) -> None:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(['id', 'paper_ref', 'expected', 'computed', 'pass', 'note'])
        for r in records:
            writer.writerow([r.id, r.ref, r.expected, r.computed, r.passed, r.note])

    @staticmethod
    def _dump(report: Dict[str, Any], output: TextIO) -> None:
        json.dump(report, output, indent=2, sort_keys=True)
        output.write("\n")
