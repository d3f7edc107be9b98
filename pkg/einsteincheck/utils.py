import os
import toml
import yaml
from fractions import Fraction
from typing import Dict, Any, Union


def read_toml(fpath: str) -> Dict[str, Any]:
    if not os.path.isfile(fpath):
        return {}
    with open(fpath, 'r') as f:
        return toml.load(f)

def read_yaml(fpath: str) -> Dict[str, Any]:
    if not os.path.isfile(fpath):
        return {}
    with open(fpath, 'r') as f:
        return yaml.safe_load(f) or {}

def to_fraction(value: Union[str, int, float, Fraction]) -> Fraction:
    """Parse ``"2/7"``, ``"1e-12"``, ints and floats into an exact Fraction.

    Floats go through their decimal repr so ``1e-12`` becomes exactly 1/10**12.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip())

def fraction_str(value: Fraction) -> str:
    """Exact ``p/q`` rendering; integers print without a denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

def decimal_str(value: Fraction, digits: int = 12) -> str:
    """Round an exact rational to ``digits`` places after the point."""
    value = Fraction(value)
    scaled = round(abs(value) * 10 ** digits)
    whole, frac = divmod(scaled, 10 ** digits)
    sign = "-" if value < 0 and scaled else ""
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
