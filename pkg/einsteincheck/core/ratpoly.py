"""Exact univariate polynomials over QQ and real-root isolation by Sturm chains.

Polynomial algebra (division, gcd, square-free and irreducible factorization) is delegated to
sympy over the QQ domain; evaluation is a Horner scheme, so a polynomial can be evaluated at a
Fraction, a RationalInterval or a sympy expression.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, List, Optional, Sequence, Set, Tuple, Union

import sympy

from einsteincheck.core.interval import RationalInterval
from einsteincheck.exceptions import DegenerateDenominatorError, ZeroDivisionPolyError


logger = logging.getLogger(__name__)

X = sympy.Symbol('x')

Scalar = Union[int, Fraction]


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _to_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with Fraction coefficients, constant term first, no trailing zeros."""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = [_to_fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, 'coeffs', tuple(values))

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPoly":
        return cls((value,))

    @classmethod
    def from_highest(cls, coeffs: Sequence[Scalar]) -> "RationalPoly":
        """Build from coefficients listed highest power first, the way they are printed."""
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_poly(cls, poly: sympy.Poly) -> "RationalPoly":
        if poly.is_zero:
            return cls(())
        return cls.from_highest([_to_fraction(c) for c in poly.all_coeffs()])

    @classmethod
    def from_expr(cls, expr: Any, symbol: sympy.Symbol = X) -> "RationalPoly":
        return cls.from_poly(sympy.Poly(sympy.expand(expr), symbol, domain=sympy.QQ))

    def as_poly(self, symbol: sympy.Symbol = X) -> sympy.Poly:
        highest_first = [_to_rational(c) for c in reversed(self.coeffs)] or [sympy.Integer(0)]
        return sympy.Poly(highest_first, symbol, domain=sympy.QQ)

    def as_expr(self, symbol: sympy.Symbol = X) -> sympy.Expr:
        return self.as_poly(symbol).as_expr()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def highest_first(self) -> List[Fraction]:
        return list(reversed(self.coeffs))

    def _coerce(self, other: Any) -> Optional["RationalPoly"]:
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPoly.constant(other)
        return None

    def __add__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalPoly.from_poly(self.as_poly() * other.as_poly())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPoly":
        return RationalPoly.from_poly(self.as_poly() ** exponent)

    def __divmod__(self, other: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionPolyError("polynomial division by zero")
        quotient, remainder = self.as_poly().div(other.as_poly())
        return RationalPoly.from_poly(quotient), RationalPoly.from_poly(remainder)

    def __floordiv__(self, other: "RationalPoly") -> "RationalPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return divmod(self, other)[1]

    def divides(self, other: "RationalPoly") -> bool:
        """True when self divides ``other`` exactly."""
        return (other % self).is_zero

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def gcd(self, other: "RationalPoly") -> "RationalPoly":
        """Monic gcd."""
        return RationalPoly.from_poly(self.as_poly().gcd(other.as_poly())).monic()

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return RationalPoly(tuple(c / lead for c in self.coeffs))

    def primitive(self) -> "RationalPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero:
            return self
        _, prim = self.as_poly().clear_denoms(convert=True)
        result = RationalPoly.from_poly(prim.primitive()[1])
        return -result if result.leading < 0 else result

    def squarefree_part(self) -> "RationalPoly":
        if self.degree < 1:
            return self
        return (self // self.gcd(self.derivative())).monic()

    def sqf_list(self) -> List[Tuple["RationalPoly", int]]:
        """Square-free factors with multiplicities, constants dropped."""
        _, factors = self.as_poly().sqf_list()
        return [(RationalPoly.from_poly(f), k) for f, k in factors]

    def factor_list(self) -> List[Tuple["RationalPoly", int]]:
        """Irreducible factors over QQ with multiplicities, constants dropped."""
        _, factors = self.as_poly().factor_list()
        return [(RationalPoly.from_poly(f), k) for f, k in factors]

    def rational_roots(self) -> List[Fraction]:
        roots = [-f.coeffs[0] / f.coeffs[1] for f, _ in self.factor_list() if f.degree == 1]
        return sorted(roots)

    def is_proportional(self, other: "RationalPoly") -> bool:
        """True when self = c * other for a nonzero rational c."""
        if self.degree != other.degree or self.is_zero:
            return self.is_zero and other.is_zero
        ratio = self.leading / other.leading
        return all(a == ratio * b for a, b in zip(self.coeffs, other.coeffs))

    def __call__(self, value: Any) -> Any:
        """Horner evaluation at a Fraction, an int, a RationalInterval or a sympy expression."""
        if not self.coeffs:
            return Fraction(0)
        result: Any = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * value + c
        return result

    def compose(self, inner: Union["RationalPoly", "RationalFunction"]) -> Union["RationalPoly", "RationalFunction"]:
        """self(inner) for a polynomial or rational-function argument."""
        if isinstance(inner, RationalPoly):
            return RationalPoly.from_poly(self.as_poly().compose(inner.as_poly()))
        result = RationalFunction.constant(Fraction(0))
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def cauchy_bound(self) -> Fraction:
        """1 + max |a_k / a_n|; every complex root has modulus below it."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        return 1 + max(abs(c) / lead for c in self.coeffs[:-1])

    def __str__(self) -> str:
        return str(self.as_expr())


@dataclass(frozen=True)
class RationalFunction:
    """num / den in lowest terms with a monic denominator."""
    num: RationalPoly
    den: RationalPoly = RationalPoly((Fraction(1),))

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionPolyError("rational function with zero denominator")
        num, den = self.num, self.den
        if num.is_zero:
            num, den = RationalPoly(()), RationalPoly((Fraction(1),))
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            num = RationalPoly(tuple(c / lead for c in num.coeffs))
            den = den.monic()
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def constant(cls, value: Scalar) -> "RationalFunction":
        return cls(RationalPoly.constant(value))

    @classmethod
    def from_expr(cls, expr: Any, symbol: sympy.Symbol = X) -> "RationalFunction":
        num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
        return cls(RationalPoly.from_expr(num, symbol), RationalPoly.from_expr(den, symbol))

    def as_expr(self, symbol: sympy.Symbol = X) -> sympy.Expr:
        return self.num.as_expr(symbol) / self.den.as_expr(symbol)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @staticmethod
    def _coerce(other: Any) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, RationalPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction.constant(other)
        return None

    def __add__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionPolyError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __call__(self, value: Any) -> Any:
        """Evaluate; an exact zero of the denominator raises DegenerateDenominatorError."""
        den = self.den(value)
        if isinstance(den, (int, Fraction)) and den == 0:
            raise DegenerateDenominatorError(f"denominator {self.den} vanishes at {value}")
        return self.num(value) / den

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True)
class IsolatedRoot:
    """A real root of ``poly`` inside (lo, hi]; lo == hi marks an exact rational root."""
    lo: Fraction
    hi: Fraction
    poly: RationalPoly
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def interval(self) -> RationalInterval:
        return RationalInterval(self.lo, self.hi)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint)


@lru_cache(maxsize=256)
def sturm_chain(p: RationalPoly) -> Tuple[RationalPoly, ...]:
    """p, p', then negated remainders until the remainder vanishes."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        remainder = chain[-2] % chain[-1]
        if remainder.is_zero:
            break
        chain.append(-remainder)
    return tuple(c for c in chain if not c.is_zero)


def sign_variations(chain: Iterable[RationalPoly], point: Fraction) -> int:
    """Number of sign changes in the chain evaluated at ``point``, zeros skipped."""
    signs = [v > 0 for v in (c(point) for c in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: RationalPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in (lo, hi]."""
    chain = sturm_chain(p)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def _isolate(p: RationalPoly, lo: Fraction, hi: Fraction, multiplicity: int) -> List[IsolatedRoot]:
    chain = sturm_chain(p)
    exact: Set[Fraction] = set(p.rational_roots())
    found = []
    stack = [(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            hits = [r for r in exact if a < r <= b]
            if hits:
                found.append(IsolatedRoot(hits[0], hits[0], p, multiplicity))
            else:
                found.append(IsolatedRoot(a, b, p, multiplicity))
            continue
        mid = (a + b) / 2
        vm = sign_variations(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return found


def sturm_roots(p: RationalPoly, lo: Optional[Scalar] = None, hi: Optional[Scalar] = None) -> List[IsolatedRoot]:
    """Isolate every distinct real root of p in (lo, hi].

    Args:
        p: Nonzero polynomial; it is split into square-free factors first
        lo: Lower end, excluded; defaults to minus the Cauchy bound
        hi: Upper end, included; defaults to the Cauchy bound

    Returns:
        One IsolatedRoot per root, sorted, each carrying its square-free factor and multiplicity
    """
    if p.is_zero:
        raise ZeroDivisionPolyError("the zero polynomial has no isolated roots")
    bound = p.cauchy_bound()
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    roots: List[IsolatedRoot] = []
    for factor, multiplicity in p.sqf_list():
        if factor.degree < 1:
            continue
        roots.extend(_isolate(factor, lo, hi, multiplicity))
    roots.sort(key=lambda r: (r.lo, r.hi))
    logger.debug("isolated %d roots of a degree %d polynomial in (%s, %s]", len(roots), p.degree, lo, hi)
    return roots


def real_roots(p: RationalPoly) -> List[IsolatedRoot]:
    return sturm_roots(p)


def positive_roots(p: RationalPoly) -> List[IsolatedRoot]:
    return sturm_roots(p, 0, None)


def refine(root: IsolatedRoot, width: Scalar) -> IsolatedRoot:
    """Bisect until hi - lo <= width; the result is nested in the input."""
    width = Fraction(width)
    if root.is_exact or root.width <= width:
        return root
    p = root.poly
    chain = sturm_chain(p)
    lo, hi = root.lo, root.hi
    lo_value = p(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        mid_value = p(mid)
        if mid_value == 0:
            return IsolatedRoot(mid, mid, p, root.multiplicity)
        if lo_value != 0:
            left = (lo_value > 0) != (mid_value > 0)
        else:
            left = sign_variations(chain, lo) - sign_variations(chain, mid) > 0
        if left:
            hi = mid
        else:
            lo, lo_value = mid, mid_value
    return IsolatedRoot(lo, hi, p, root.multiplicity)
