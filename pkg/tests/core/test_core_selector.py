"""Tests for core.selector module."""

import pytest

from einsteincheck.core.flagdecomp import SpaceType
from einsteincheck.core.rootsys import LieKind
from einsteincheck.core.selector import parse_group, resolve_kind, resolve_nodes
from einsteincheck.exceptions import SelectorError


@pytest.mark.parametrize("text,kind", [
    ('E6', LieKind('E6')),
    ('e_6', LieKind('E6')),
    ('E-6', LieKind('E6')),
    (' f4 ', LieKind('F4')),
    ('B5', LieKind('B', 5)),
    ('b_5', LieKind('B', 5)),
    ('SO(11)', LieKind('B', 5)),
    ('Spin(9)', LieKind('B', 4)),
    ('Sp(3)', LieKind('C', 3)),
    ('SO(12)', LieKind('D', 6)),
])
def test_parse_group(text, kind):
    assert parse_group(text) == kind


@pytest.mark.parametrize("text", ['', '   ', 'SU(3)', 'A3', 'E9', 'SO(6)', 'B1'])
def test_parse_group_rejects(text):
    with pytest.raises(SelectorError):
        parse_group(text)


class TestResolveKind:
    """Test group and family selectors."""

    def test_group_wins(self):
        assert resolve_kind(group='E7') == LieKind('E7')
        assert resolve_kind(group='SO(11)', family='b') == LieKind('B', 5)

    def test_family_and_rank(self):
        assert resolve_kind(family='C', n=4) == LieKind('C', 4)
        assert resolve_kind(family='e6') == LieKind('E6')

    def test_family_needs_rank(self):
        with pytest.raises(SelectorError, match="--n"):
            resolve_kind(family='B')

    def test_conflicting_selectors(self):
        with pytest.raises(SelectorError, match="disagrees"):
            resolve_kind(group='E6', family='B')

    def test_nothing_selected(self):
        with pytest.raises(SelectorError):
            resolve_kind()

    def test_rank_out_of_range(self):
        with pytest.raises(SelectorError):
            resolve_kind(family='D', n=3)


class TestResolveNodes:
    """Test painted-node filters."""

    def test_all_nodes(self):
        nodes = [d.node for _, d in resolve_nodes(LieKind('E6'))]
        assert nodes == [2, 3, 5]

    def test_type_filter(self):
        matches = resolve_nodes(LieKind('E6'), dtype='IIb')
        assert [d.node for _, d in matches] == [3, 5]
        assert all(d.dtype == SpaceType.IIB for _, d in matches)

    def test_node_and_p_are_the_same_index(self):
        by_node = resolve_nodes(LieKind('C', 3), node=2)
        by_p = resolve_nodes(LieKind('C', 3), p=2)
        assert by_node == by_p
        assert by_node[0][0] == 1

    def test_conflicting_node_and_p(self):
        with pytest.raises(SelectorError, match="different nodes"):
            resolve_nodes(LieKind('B', 5), node=3, p=4)

    def test_node_without_q2(self):
        with pytest.raises(SelectorError, match="node 4"):
            resolve_nodes(LieKind('E6'), node=4)

    def test_type_not_present(self):
        with pytest.raises(SelectorError, match="type IIb"):
            resolve_nodes(LieKind('F4'), dtype='IIb')

    def test_bad_type_tag(self):
        with pytest.raises(SelectorError):
            resolve_nodes(LieKind('F4'), dtype='III')
