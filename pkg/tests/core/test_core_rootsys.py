"""Tests for core.rootsys module."""

import pytest
from fractions import Fraction

from einsteincheck.core import rootsys
from einsteincheck.core.rootsys import (
    LieKind,
    cartan_matrix,
    coefficient_at,
    enumerate_positive_roots,
    extended_neighbors,
    gram_matrix,
)
from einsteincheck.exceptions import SelectorError


@pytest.mark.parametrize("kind,count", [
    (LieKind('B', 5), 25),
    (LieKind('C', 3), 9),
    (LieKind('D', 4), 12),
    (LieKind('D', 7), 42),
    (LieKind('E6'), 36),
    (LieKind('E7'), 63),
    (LieKind('E8'), 120),
    (LieKind('F4'), 24),
    (LieKind('G2'), 6),
])
def test_positive_root_count(kind, count):
    """Number of positive roots matches (dim - rank) / 2."""
    rs = enumerate_positive_roots(kind)
    assert len(rs.positive_roots) == count
    assert kind.dimension == kind.rank + 2 * count


@pytest.mark.parametrize("kind,highest", [
    (LieKind('E6'), (1, 2, 2, 3, 2, 1)),
    (LieKind('E7'), (2, 2, 3, 4, 3, 2, 1)),
    (LieKind('E8'), (2, 3, 4, 6, 5, 4, 3, 2)),
    (LieKind('F4'), (2, 3, 4, 2)),
    (LieKind('G2'), (3, 2)),
    (LieKind('B', 4), (1, 2, 2, 2)),
    (LieKind('C', 4), (2, 2, 2, 1)),
    (LieKind('D', 5), (1, 2, 2, 1, 1)),
])
def test_highest_root_in_bourbaki_numbering(kind, highest):
    assert enumerate_positive_roots(kind).highest_root.coeffs == highest


@pytest.mark.parametrize("kind,neighbour", [
    (LieKind('E6'), {1}),
    (LieKind('E7'), {0}),
    (LieKind('E8'), {7}),
    (LieKind('F4'), {0}),
    (LieKind('G2'), {1}),
    (LieKind('B', 6), {1}),
    (LieKind('C', 6), {0}),
    (LieKind('D', 6), {1}),
])
def test_extended_neighbors(kind, neighbour):
    """The simple root joined to -alpha~ in the extended diagram."""
    assert extended_neighbors(enumerate_positive_roots(kind)) == neighbour


def test_cartan_matrix_g2_short_root_first():
    assert cartan_matrix(LieKind('G2')) == ((2, -3), (-1, 2))


def test_cartan_matrix_b2():
    assert cartan_matrix(LieKind('B', 2)) == ((2, -1), (-2, 2))


def test_cartan_matrix_rejects_non_integral_entries(monkeypatch):
    gram = ((Fraction(2), Fraction(-1, 3)), (Fraction(-1, 3), Fraction(2)))
    monkeypatch.setattr(rootsys, 'gram_matrix', lambda kind: gram)
    with pytest.raises(SelectorError, match="non-integral"):
        cartan_matrix(LieKind('B', 2))


def test_gram_matrix_is_symmetric():
    gram = gram_matrix(LieKind('F4'))
    for i, row in enumerate(gram):
        for j, value in enumerate(row):
            assert value == gram[j][i]
    assert gram[1][2] == Fraction(-1)


def test_roots_are_closed_lookup():
    rs = enumerate_positive_roots(LieKind('E6'))
    assert rs.is_root((1, 2, 2, 3, 2, 1))
    assert not rs.is_root((1, 2, 2, 4, 2, 1))
    assert rs.pairing(rs.highest_root, rs.highest_root) == 2


def test_coefficient_at_out_of_range():
    root = enumerate_positive_roots(LieKind('G2')).highest_root
    assert coefficient_at(root, 0) == 3
    with pytest.raises(IndexError):
        coefficient_at(root, 2)


class TestLieKind:
    """Test rank bounds and labels."""

    def test_exceptional_rank_is_filled_in(self):
        assert LieKind('E7').rank == 7
        assert LieKind('E7', 7) == LieKind('E7')
        assert LieKind('E7').label == 'E7'

    def test_classical_label(self):
        kind = LieKind('B', 5)
        assert kind.label == 'B5'
        assert str(kind) == 'B5'
        assert kind.is_classical
        assert kind.dimension == 55

    @pytest.mark.parametrize("family,rank", [('B', 1), ('C', 2), ('D', 3), ('D', 31), ('E6', 7), ('A', 3)])
    def test_invalid_kinds(self, family, rank):
        with pytest.raises(SelectorError):
            LieKind(family, rank)
