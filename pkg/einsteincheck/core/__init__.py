"""Core functionality for EinsteinCheck."""

from einsteincheck.core.rootsys import LieKind, RootSystem, enumerate_positive_roots
from einsteincheck.core.flagdecomp import Decomposition, SpaceType, decompose, find_nodes_with_q2, make_decomposition
from einsteincheck.core.brackets import BracketTable, closed_form, verify_identities
from einsteincheck.core.ricci import MetricParams, ricci
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.ratpoly import RationalPoly, real_roots, sturm_roots
from einsteincheck.core.solver import Branch, EinsteinSolution, SolveResult, quotient_einstein_metrics, solve
from einsteincheck.core.classify import Classification, Verdict, classify
from einsteincheck.core.selector import parse_group, resolve_kind, resolve_nodes
from einsteincheck.core.config import ConfigManager, RunConfig
from einsteincheck.core.reproduce import CheckRecord, SweepRow, run_checks, sweep
from einsteincheck.core.reporter import OutputFormat, Reporter

__all__ = [
    'LieKind',
    'RootSystem',
    'enumerate_positive_roots',
    'Decomposition',
    'SpaceType',
    'decompose',
    'find_nodes_with_q2',
    'make_decomposition',
    'BracketTable',
    'closed_form',
    'verify_identities',
    'MetricParams',
    'ricci',
    'RationalInterval',
    'RationalPoly',
    'real_roots',
    'sturm_roots',
    'Branch',
    'EinsteinSolution',
    'SolveResult',
    'quotient_einstein_metrics',
    'solve',
    'Classification',
    'Verdict',
    'classify',
    'parse_group',
    'resolve_kind',
    'resolve_nodes',
    'ConfigManager',
    'RunConfig',
    'CheckRecord',
    'SweepRow',
    'run_checks',
    'sweep',
    'OutputFormat',
    'Reporter',
]
