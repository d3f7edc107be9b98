"""Tests for utils module."""

import pytest
from fractions import Fraction

from einsteincheck.utils import (
    decimal_str,
    fraction_str,
    read_toml,
    read_yaml,
    to_fraction,
)


class TestReaders:
    """Test file readers."""

    def test_missing_files_read_empty(self, tmp_path):
        missing = str(tmp_path / 'absent')
        assert read_toml(missing) == {}
        assert read_yaml(missing) == {}

    def test_toml(self, tmp_path):
        path = tmp_path / 'conf.toml'
        path.write_text("[tool.x]\nvalue = 3\n")
        assert read_toml(str(path)) == {'tool': {'x': {'value': 3}}}

    def test_empty_yaml_is_empty_dict(self, tmp_path):
        path = tmp_path / 'empty.yaml'
        path.write_text("")
        assert read_yaml(str(path)) == {}


class TestRationals:
    """Test exact number parsing and rendering."""

    @pytest.mark.parametrize("value,expected", [
        ("2/7", Fraction(2, 7)),
        (" 3 ", Fraction(3)),
        ("1e-12", Fraction(1, 10**12)),
        (1e-12, Fraction(1, 10**12)),
        (0.1, Fraction(1, 10)),
        (5, Fraction(5)),
        (Fraction(1, 3), Fraction(1, 3)),
    ])
    def test_to_fraction(self, value, expected):
        assert to_fraction(value) == expected

    @pytest.mark.parametrize("value", ["abc", True, ""])
    def test_to_fraction_rejects(self, value):
        with pytest.raises(ValueError):
            to_fraction(value)

    def test_fraction_str(self):
        assert fraction_str(Fraction(2, 7)) == "2/7"
        assert fraction_str(Fraction(4, 2)) == "2"
        assert fraction_str(Fraction(-3, 4)) == "-3/4"

    def test_decimal_str(self):
        assert decimal_str(Fraction(1, 3), 4) == "0.3333"
        assert decimal_str(Fraction(2, 3), 4) == "0.6667"
        assert decimal_str(Fraction(-1, 8), 2) == "-0.12"
        assert decimal_str(Fraction(-1, 10**9), 3) == "0.000"
        assert decimal_str(Fraction(7, 2), 0) == "4"
        assert decimal_str(Fraction(1, 4)) == "0.250000000000"
