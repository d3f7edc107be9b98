"""Tests for core.flagdecomp module."""

import pytest

from einsteincheck.core.flagdecomp import (
    PaintedDiagram,
    SpaceType,
    decompose,
    find_nodes_with_q2,
    grade_roots,
    ideal_killing_ratios,
    make_decomposition,
    pi0_components,
)
from einsteincheck.core.reference import EXCEPTIONAL_DIMS, classical_rows
from einsteincheck.core.rootsys import LieKind, enumerate_positive_roots
from einsteincheck.exceptions import NotTwoSummandsError


def _rows(kind):
    return {dims.node: (dims.dtype.value, dims.dims) for _, dims in find_nodes_with_q2(enumerate_positive_roots(kind))}


class TestExceptionalTables:
    """Exceptional rows of the dimension tables."""

    def test_e6(self):
        assert _rows(LieKind('E6')) == {
            2: ('Ia', (0, 35, 40, 2)),
            3: ('IIb', (24, 3, 40, 10)),
            5: ('IIb', (24, 3, 40, 10)),
        }

    def test_e7(self):
        assert _rows(LieKind('E7')) == {
            1: ('Ia', (0, 66, 64, 2)),
            2: ('Ib', (48, 0, 70, 14)),
            6: ('IIb', (45, 3, 64, 20)),
        }

    def test_e8(self):
        assert _rows(LieKind('E8')) == {
            1: ('Ib', (91, 0, 128, 28)),
            8: ('Ia', (0, 133, 112, 2)),
        }

    def test_f4(self):
        assert _rows(LieKind('F4')) == {
            1: ('Ia', (0, 21, 28, 2)),
            4: ('Ib', (21, 0, 16, 14)),
        }

    def test_g2_single_row(self):
        assert _rows(LieKind('G2')) == {2: ('Ia', (0, 3, 8, 2))}

    def test_every_reference_row_is_found(self):
        for (group, tag), dims in EXCEPTIONAL_DIMS.items():
            found = [d for node, (t, d) in _rows(LieKind(group)).items() if t == tag]
            assert dims in found, f"{group} {tag}"


@pytest.mark.parametrize("family,n", [
    ('B', 3), ('B', 5), ('B', 8), ('C', 3), ('C', 6), ('D', 4), ('D', 5), ('D', 9),
])
def test_classical_rows(family, n):
    expected = classical_rows(family, n)
    assert _rows(LieKind(family, n)) == expected


def test_blocks_add_up_to_dimension():
    for kind in (LieKind('E7'), LieKind('B', 7), LieKind('D', 6)):
        for _, dims in find_nodes_with_q2(enumerate_positive_roots(kind)):
            assert dims.d0 + dims.d1 + dims.d2 + dims.d3 + dims.d4 == kind.dimension


def test_e6_node3_decomposition_details():
    dims = make_decomposition(LieKind('E6'), 3)
    assert dims.i0 == 2
    assert dims.node == 3
    assert dims.q == 2
    assert dims.d0 == 1
    assert dims.D == 80
    assert dims.blocks == (0, 1, 2, 3, 4)
    assert dims.label == 'E6[3] IIb'
    assert dims.h1_component == (1, 3, 4, 5)
    assert dims.h2_component == (0,)


def test_grade_roots_sizes():
    rs = enumerate_positive_roots(LieKind('E6'))
    graded = grade_roots(PaintedDiagram(rs, 2))
    assert [len(g) for g in graded] == [11, 20, 5]


def test_pi0_components_d4_centre():
    rs = enumerate_positive_roots(LieKind('D', 4))
    assert pi0_components(rs, 1) == [(0,), (2,), (3,)]


def test_three_components_reported_as_type_ii():
    dims = make_decomposition(LieKind('D', 4), 2)
    assert dims.dtype == SpaceType.IIA
    assert len(dims.pi0_components) == 3
    assert dims.dims == (3, 6, 16, 2)


def test_type_ib_blocks_skip_h2():
    dims = make_decomposition(LieKind('B', 5), 5)
    assert dims.dtype == SpaceType.IB
    assert dims.blocks == (0, 1, 3, 4)


def test_killing_ratios_e6():
    """su(5) and su(2) inside E6 have ratios 5/12 and 2/12."""
    from fractions import Fraction
    ratios = ideal_killing_ratios(make_decomposition(LieKind('E6'), 3))
    assert ratios == {1: Fraction(5, 12), 2: Fraction(1, 6)}


@pytest.mark.parametrize("kind,node", [(LieKind('E6'), 4), (LieKind('E6'), 1), (LieKind('B', 5), 1)])
def test_not_two_summands(kind, node):
    with pytest.raises(NotTwoSummandsError):
        make_decomposition(kind, node)


def test_painted_node_out_of_range():
    with pytest.raises(IndexError):
        decompose(PaintedDiagram(enumerate_positive_roots(LieKind('G2')), 2))


def test_space_type_tags():
    assert SpaceType.from_tag('iib') == SpaceType.IIB
    assert SpaceType.IA.adjacent and not SpaceType.IB.adjacent
    with pytest.raises(ValueError):
        SpaceType.from_tag('III')
