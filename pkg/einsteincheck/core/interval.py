"""Closed intervals with exact rational endpoints.

Endpoints are Fractions, so every operation is exact and no outward rounding is needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from einsteincheck.exceptions import IntervalError


Number = Union[int, Fraction]


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a number")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} in exact interval arithmetic")


@dataclass(frozen=True)
class RationalInterval:
    """[lo, hi] with lo <= hi."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo = _as_fraction(self.lo)
        hi = _as_fraction(self.hi)
        if lo > hi:
            raise IntervalError(f"invalid interval [{lo}, {hi}]")
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)

    @classmethod
    def exact(cls, value: Number) -> "RationalInterval":
        return cls(value, value)

    @classmethod
    def coerce(cls, value: Any) -> "RationalInterval":
        if isinstance(value, RationalInterval):
            return value
        return cls.exact(_as_fraction(value))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def magnitude(self) -> Fraction:
        """max |v| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, value: Any) -> bool:
        if isinstance(value, RationalInterval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def separated_from(self, other: Any) -> bool:
        """True when the two intervals are disjoint."""
        other = RationalInterval.coerce(other)
        return self.hi < other.lo or other.hi < self.lo

    def __add__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __pos__(self) -> "RationalInterval":
        return self

    def __sub__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalInterval":
        if self.contains_zero():
            raise IntervalError(f"division by an interval containing zero: [{self.lo}, {self.hi}]")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other: Any) -> "RationalInterval":
        try:
            other = RationalInterval.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent: int) -> "RationalInterval":
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            return (self ** -exponent).reciprocal()
        if exponent == 0:
            return RationalInterval.exact(1)
        lo_p, hi_p = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 1:
            return RationalInterval(lo_p, hi_p)
        if self.contains_zero():
            return RationalInterval(Fraction(0), max(lo_p, hi_p))
        return RationalInterval(min(lo_p, hi_p), max(lo_p, hi_p))

    def __float__(self) -> float:
        return float(self.midpoint)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{float(self.lo):.15g}, {float(self.hi):.15g}]"
