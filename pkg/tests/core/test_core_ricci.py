"""Tests for core.ricci module."""

import random

import pytest
import sympy
from fractions import Fraction

from einsteincheck.core.brackets import closed_form
from einsteincheck.core.flagdecomp import make_decomposition
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.ricci import (
    MetricParams,
    QuotientMetricParams,
    RicciComponents,
    bi_invariant_params,
    naturally_reductive_metric,
    ricci,
    ricci_general,
    ricci_IIb,
    ricci_quotient,
)
from einsteincheck.core.rootsys import LieKind
from einsteincheck.exceptions import InvalidMetricError, ZeroParameterError


SPACES = [
    (LieKind('E6'), 3),
    (LieKind('E7'), 6),
    (LieKind('E7'), 2),
    (LieKind('F4'), 4),
    (LieKind('G2'), 2),
    (LieKind('E8'), 8),
    (LieKind('B', 5), 2),
    (LieKind('C', 4), 2),
    (LieKind('D', 6), 4),
]


@pytest.fixture(params=SPACES, ids=lambda s: f"{s[0].label}-{s[1]}")
def dims(request):
    kind, node = request.param
    return make_decomposition(kind, node)


def _metric(dims):
    return MetricParams(
        u0=Fraction(2),
        u1=Fraction(3, 2) if 1 in dims.blocks else None,
        u2=Fraction(5, 7) if 2 in dims.blocks else None,
        x1=Fraction(1),
        x2=Fraction(7, 3),
    )


def test_bi_invariant_metric_has_ricci_one_quarter(dims):
    components = ricci(dims, bi_invariant_params(dims))
    assert all(r == Fraction(1, 4) for r in components)
    assert components.blocks == dims.blocks


def test_closed_form_matches_general_formula(dims):
    m = _metric(dims)
    assert ricci(dims, m).as_dict() == ricci_general(closed_form(dims), dims, m).as_dict()


def test_ricci_is_homogeneous_of_degree_minus_one(dims):
    m = _metric(dims)
    scaled = m.scaled(Fraction(3))
    for block in dims.blocks:
        assert ricci(dims, scaled)[block] * 3 == ricci(dims, m)[block]


def test_symbolic_and_interval_inputs():
    dims = make_decomposition(LieKind('E6'), 3)
    x = sympy.Symbol('x')
    m = MetricParams(u0=Fraction(1), u1=Fraction(1), u2=Fraction(1), x1=Fraction(1), x2=x)
    r4 = sympy.simplify(ricci(dims, m)[4].subs(x, 1))
    assert r4 == sympy.Rational(1, 4)

    enclosure = RationalInterval(Fraction(99, 100), Fraction(101, 100))
    mi = MetricParams(u0=Fraction(1), u1=Fraction(1), u2=Fraction(1), x1=Fraction(1), x2=enclosure)
    assert ricci(dims, mi)[4].contains(Fraction(1, 4))


def test_kahler_einstein_quotient():
    dims = make_decomposition(LieKind('E7'), 6)
    r = ricci_quotient(closed_form(dims), dims, QuotientMetricParams(Fraction(1), Fraction(2)))
    assert r[3] == r[4]


def test_naturally_reductive_metric_ties_k_blocks():
    dims = make_decomposition(LieKind('E6'), 3)
    m = naturally_reductive_metric(dims, Fraction(3, 2), u2=Fraction(1, 2))
    assert m.u0 == m.u1 == m.x2 == Fraction(3, 2)
    assert m.x1 == 1
    ia = naturally_reductive_metric(make_decomposition(LieKind('G2'), 2), Fraction(2), u2=Fraction(1))
    assert ia.u1 is None and ia.u0 == 2


class TestMetricParams:
    """Test parameter validation."""

    def test_zero_parameter(self):
        with pytest.raises(ZeroParameterError):
            MetricParams(u0=0, x1=1, x2=1)

    def test_negative_parameter(self):
        with pytest.raises(InvalidMetricError):
            MetricParams(u0=1, x1=1, x2=Fraction(-1, 2))

    def test_missing_block(self):
        dims = make_decomposition(LieKind('E6'), 3)
        with pytest.raises(InvalidMetricError, match="u1"):
            ricci(dims, MetricParams(u0=1, x1=1, x2=1, u2=1))

    def test_wrong_type_for_closed_form(self):
        with pytest.raises(ValueError):
            ricci_IIb(make_decomposition(LieKind('G2'), 2), MetricParams(u0=1, x1=1, x2=1, u2=1))


def test_ricci_components_alignment():
    with pytest.raises(ValueError):
        RicciComponents(blocks=(0, 3), r=(Fraction(1),))


def _random_metric(dims, rng):
    def value():
        return Fraction(rng.randint(1, 60), rng.randint(1, 60))

    return MetricParams(
        u0=value(),
        u1=value() if 1 in dims.blocks else None,
        u2=value() if 2 in dims.blocks else None,
        x1=value(),
        x2=value(),
    )


@pytest.mark.slow
def test_closed_form_matches_general_formula_on_random_metrics(dims):
    rng = random.Random(dims.label)
    table = closed_form(dims)
    for _ in range(100):
        m = _random_metric(dims, rng)
        assert ricci(dims, m).as_dict() == ricci_general(table, dims, m).as_dict()
