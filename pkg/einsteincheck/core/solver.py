"""Einstein equations r_k = e for the two-summand metrics, solved with x1 = 1.

Elimination is done once per decomposition in sympy over QQ(x): a linear solve for the
parameters that enter linearly, the quadratic in u2 and a univariate polynomial in x = x2.
Every positive root is then back-substituted over its isolating interval and checked against
the general Ricci formula in exact interval arithmetic before it is reported.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import sympy

from einsteincheck.core.brackets import closed_form
from einsteincheck.core.classify import Classification, classify
from einsteincheck.core.flagdecomp import Decomposition, SpaceType
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.ratpoly import (
    X,
    IsolatedRoot,
    RationalFunction,
    RationalPoly,
    positive_roots,
    refine,
)
from einsteincheck.core.ricci import (
    MetricParams,
    QuotientMetricParams,
    bi_invariant_params,
    ricci,
    ricci_general,
    ricci_quotient,
)
from einsteincheck.exceptions import (
    DegenerateDenominatorError,
    EliminationError,
    IntervalError,
)


logger = logging.getLogger(__name__)

U0, U1, U2, E = sympy.symbols('u0 u1 u2 e')

DEFAULT_WIDTH = Fraction(1, 10**12)
RESIDUAL_THRESHOLD = Fraction(1, 10**8)
TOLERANCE = Fraction(1, 10**6)
MIN_WIDTH = Fraction(1, 10**30)
REFINE_STEP = 10**4

PARAM_NAMES = ('u0', 'u1', 'u2', 'x2')


class Branch(Enum):
    NATURALLY_REDUCTIVE = "NaturallyReductiveBranch"
    GENERIC = "GenericBranch"
    BI_INVARIANT = "BiInvariant"


@dataclass(frozen=True)
class EinsteinSolution:
    """A verified Einstein metric with x1 = 1, parameters as rational enclosures."""
    dims: Decomposition
    params: MetricParams
    e: RationalInterval
    branch: Branch
    residual_bound: Fraction
    root: Optional[IsolatedRoot] = None
    classification: Optional[Classification] = None

    @property
    def x2(self) -> RationalInterval:
        return self.params.x2

    @property
    def is_exact(self) -> bool:
        return self.e.is_exact and all(v.is_exact for v in self.params.y.values())

    def values(self) -> Dict[str, RationalInterval]:
        """Named parameters present for this Type, plus x1 and e."""
        names = {0: 'u0', 1: 'u1', 2: 'u2', 3: 'x1', 4: 'x2'}
        out = {names[k]: v for k, v in self.params.y.items()}
        out['e'] = self.e
        return out

    def rescaled(self) -> "EinsteinSolution":
        """The homothetic metric with Einstein constant 1."""
        factor = self.e
        return replace(self, params=self.params.scaled(factor), e=RationalInterval.exact(1))


@dataclass(frozen=True)
class RejectedRoot:
    branch: Branch
    x2: RationalInterval
    reason: str


@dataclass
class SolveResult:
    """Solutions of one decomposition together with the polynomials that produced them."""
    dims: Decomposition
    solutions: List[EinsteinSolution] = field(default_factory=list)
    polynomial: Optional[RationalPoly] = None
    nr_polynomial: Optional[RationalPoly] = None
    rejected: List[RejectedRoot] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def __iter__(self) -> Iterator[EinsteinSolution]:
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def by_branch(self, branch: Branch) -> List[EinsteinSolution]:
        return [s for s in self.solutions if s.branch == branch]


@dataclass(frozen=True)
class BranchFunctions:
    """Metric parameters and e as rational functions of x2 along one branch."""
    u0: RationalFunction
    e: RationalFunction
    u1: Optional[RationalFunction] = None
    u2: Optional[RationalFunction] = None

    def evaluate(self, x: Any) -> Dict[str, Any]:
        values = {'u0': self.u0(x), 'x2': x, 'e': self.e(x)}
        if self.u1 is not None:
            values['u1'] = self.u1(x)
        if self.u2 is not None:
            values['u2'] = self.u2(x)
        return values


@dataclass(frozen=True)
class QuotientEinstein:
    """Einstein metric w1 B|m1 + w2 B|m2 on G/H with w1 = 1."""
    params: QuotientMetricParams
    e: Fraction
    kahler: bool


# -- symbolic helpers ------------------------------------------------------------------------


def _numerator(expr: Any) -> sympy.Expr:
    num, _ = sympy.fraction(sympy.cancel(sympy.together(expr)))
    return sympy.expand(num)


def _symbolic_metric(dims: Decomposition, u0=U0, u1=U1, u2=U2) -> MetricParams:
    blocks = dims.blocks
    return MetricParams(
        u0=u0,
        u1=u1 if 1 in blocks else None,
        u2=u2 if 2 in blocks else None,
        x1=Fraction(1),
        x2=X,
    )


def _rf(expr: Any, symbol: sympy.Symbol = X) -> RationalFunction:
    return RationalFunction.from_expr(expr, symbol)


def _strip(poly: RationalPoly, avoid: List[RationalPoly]) -> RationalPoly:
    """Remove powers of x and factors shared with the elimination denominators."""
    coeffs = list(poly.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    result = RationalPoly(tuple(coeffs))
    if shift:
        logger.debug("removed x^%d from an eliminant", shift)
    for other in avoid:
        if other.degree < 1:
            continue
        g = result.gcd(other)
        while g.degree > 0:
            logger.debug("removed spurious factor %s", g)
            result = result // g
            g = result.gcd(other)
    return result.primitive()


def linear_denominator(dims: Decomposition) -> RationalPoly:
    """d1 d3 x^4 + 2(4 + 4 d1 + 2 d3 - 2 d4 + 2 d1 d4 - d3 d4) x^2 - 8 d4 (d4 - 2).

    The linear solve for (u0, u1, e) is singular exactly where this vanishes.
    """
    d1, _, d3, d4 = dims.dims
    middle = 2 * (4 + 4 * d1 + 2 * d3 - 2 * d4 + 2 * d1 * d4 - d3 * d4)
    return RationalPoly((-8 * d4 * (d4 - 2), 0, middle, 0, d1 * d3))


def nr_branch_u2(dims: Decomposition) -> RationalFunction:
    """u2 = (4 d4 - (2 d3 + 8 d4) x + (2 + 2 d1 + d3 + 2 d4) x^2) / ((2 + 2 d1 - d3 - 2 d4) x)."""
    d1, _, d3, d4 = dims.dims
    lead = 2 + 2 * d1 - d3 - 2 * d4
    if lead == 0:
        raise DegenerateDenominatorError(f"{dims.label}: 2 + 2 d1 - d3 - 2 d4 vanishes")
    num = RationalPoly((4 * d4, -(2 * d3 + 8 * d4), 2 + 2 * d1 + d3 + 2 * d4))
    return RationalFunction(num, RationalPoly((0, lead)))


def ib_quadratic(dims: Decomposition) -> RationalPoly:
    """(2 d1 + d3 + 2 d4 + 2) x^2 - 2 (d3 + 4 d4) x + 4 d4."""
    d1, _, d3, d4 = dims.dims
    return RationalPoly((4 * d4, -2 * (d3 + 4 * d4), 2 * d1 + d3 + 2 * d4 + 2))


def ib_octic(dims: Decomposition) -> RationalPoly:
    """Degree 8 factor of the Type Ib eliminant carrying the non naturally reductive metrics."""
    d1, _, d3, d4 = dims.dims
    D = d3 + 4 * d4
    c8 = d1 * d3**3 * (d3 + 2 * d4 + 2)
    c7 = -2 * d1 * d3**3 * D
    c6 = 2 * d3**2 * d4 * (4 * d1**2 + 10 * d3 * d1 + 10 * d4 * d1 + 28 * d1 + 2 * d4**2
                           - 2 * d3 + d3 * d4 - 2 * d4 - 4)
    c5 = -4 * d3**2 * D * (d4**2 + 6 * d1 * d4 - 2 * d4 + 4 * d1)
    c4 = 8 * d3 * d4 * (4 * d4**3 + 8 * d1 * d4**2 + 5 * d3 * d4**2 + 8 * d4**2 + 8 * d1**2 * d4
                        + 24 * d1 * d4 + 16 * d1 * d3 * d4 - 10 * d3 * d4 - 32 * d4
                        + 16 * d1**2 + 16 * d1)
    c3 = -32 * d3 * d4 * D * (d4**2 + 3 * d1 * d4 + 2 * d1 - 4)
    c2 = 32 * d4 * (2 * d4**4 + 2 * d1 * d4**3 + 7 * d3 * d4**3 + 10 * d4**3 + 4 * d1**2 * d4**2
                    + 10 * d1 * d3 * d4**2 - 10 * d3 * d4**2 - 12 * d4**2 + 16 * d1**2 * d4
                    - 24 * d1 * d4 - 8 * d1 * d3 * d4 - 12 * d3 * d4 - 40 * d4 + 16 * d1**2
                    + 32 * d1 + 8 * d1 * d3 + 8 * d3 + 16)
    c1 = -64 * (d4 - 2) * d4 * (d4 + 2) * (2 * d1 + d4 + 2) * D
    c0 = 128 * (d4 - 2) * d4**2 * (3 * d4**2 + 2 * d1 * d4 + 4 * d4 - 4 * d1 - 4)
    return RationalPoly((c0, c1, c2, c3, c4, c5, c6, c7, c8))


# -- elimination per Type ---------------------------------------------------------------------


@dataclass(frozen=True)
class EliminationIIb:
    linear: Dict[sympy.Symbol, sympy.Expr]
    quadratic: Tuple[sympy.Expr, sympy.Expr, sympy.Expr]
    polynomial: RationalPoly
    nr_polynomial: RationalPoly
    generic: BranchFunctions
    naturally_reductive: BranchFunctions


def _linear_solve(dims: Decomposition, equations: List[sympy.Expr], unknowns: List[sympy.Symbol]) -> Dict[sympy.Symbol, sympy.Expr]:
    solution = sympy.linsolve(equations, unknowns)
    if not solution:
        raise EliminationError(f"{dims.label}: the linear Einstein equations have no solution")
    values = next(iter(solution))
    if any(v.free_symbols & set(unknowns) for v in values):
        raise EliminationError(f"{dims.label}: the linear Einstein equations are underdetermined")
    return {s: sympy.cancel(v) for s, v in zip(unknowns, values)}


@lru_cache(maxsize=None)
def _linear_IIb(dims: Decomposition) -> Dict[sympy.Symbol, sympy.Expr]:
    r = ricci(dims, _symbolic_metric(dims))
    equations = [_numerator(r[0] - E), _numerator(r[3] - E), _numerator(r[4] - E)]
    return _linear_solve(dims, equations, [U0, U1, E])


def _along(linear: Dict[sympy.Symbol, sympy.Expr], u2: sympy.Expr) -> Dict[sympy.Symbol, sympy.Expr]:
    return {s: sympy.cancel(v.subs(U2, u2)) for s, v in linear.items()}


@lru_cache(maxsize=None)
def eliminate_IIb(dims: Decomposition) -> EliminationIIb:
    """Linear solve, the two u2 branches and the univariate polynomials for Type IIb.

    Raises:
        EliminationError: If the naturally reductive branch does not solve the quadratic
    """
    if dims.dtype != SpaceType.IIB:
        raise ValueError(f"eliminate_IIb needs a Type IIb decomposition, got {dims.dtype.value}")
    linear = _linear_IIb(dims)
    logger.debug("%s: linear solve done", dims.label)

    r = ricci(dims, _symbolic_metric(dims, u0=linear[U0], u1=linear[U1]))
    quad = sympy.Poly(_numerator(r[1] - linear[E]), U2)
    if quad.degree() != 2:
        raise EliminationError(f"{dims.label}: expected a quadratic in u2, got degree {quad.degree()}")
    a, b, c = quad.all_coeffs()

    u2_nr = nr_branch_u2(dims).as_expr()
    if sympy.cancel(a * u2_nr**2 + b * u2_nr + c) != 0:
        raise EliminationError(f"{dims.label}: the naturally reductive branch does not solve the u2 quadratic")
    u2_generic = sympy.cancel(-b / a - u2_nr)

    avoid = [linear_denominator(dims), _rf(u2_generic).den, _rf(u2_generic).num]
    branches = {}
    polys = {}
    for name, u2 in (('generic', u2_generic), ('nr', u2_nr)):
        values = _along(linear, u2)
        r = ricci(dims, _symbolic_metric(dims, u0=values[U0], u1=values[U1], u2=u2))
        polys[name] = _strip(RationalPoly.from_expr(_numerator(r[2] - values[E])), avoid)
        branches[name] = BranchFunctions(
            u0=_rf(values[U0]), u1=_rf(values[U1]), u2=_rf(u2), e=_rf(values[E]),
        )
    logger.debug("%s: eliminant of degree %d, naturally reductive factor of degree %d",
                 dims.label, polys['generic'].degree, polys['nr'].degree)
    return EliminationIIb(
        linear=linear,
        quadratic=(a, b, c),
        polynomial=polys['generic'],
        nr_polynomial=polys['nr'],
        generic=branches['generic'],
        naturally_reductive=branches['nr'],
    )


def linear_solve_IIb(dims: Decomposition, x2: Any, u2: Any = None) -> Tuple[Any, Any, Any]:
    """(u0, u1, e) solving r0 = r3 = r4 = e at the given x2.

    With u2 given the values are exact rationals; without it they are rational functions of u2.

    Raises:
        DegenerateDenominatorError: If the linear system is singular at x2
    """
    x2 = Fraction(x2)
    if linear_denominator(dims)(x2) == 0:
        raise DegenerateDenominatorError(f"{dims.label}: linear system singular at x2 = {x2}")
    linear = _linear_IIb(dims)
    at_x = {s: sympy.cancel(v.subs(X, sympy.Rational(x2.numerator, x2.denominator))) for s, v in linear.items()}
    if u2 is None:
        return tuple(_rf(at_x[s], U2) for s in (U0, U1, E))
    u2 = Fraction(u2)
    return tuple(_rf(at_x[s], U2)(u2) for s in (U0, U1, E))


def u2_branches(dims: Decomposition, x2: Any) -> Tuple[Fraction, Fraction]:
    """Both roots in u2 of the quadratic from r1 = e at x2: (naturally reductive, generic)."""
    x2 = Fraction(x2)
    elim = eliminate_IIb(dims)
    return elim.naturally_reductive.u2(x2), elim.generic.u2(x2)


def build_polynomial_IIb(dims: Decomposition) -> RationalPoly:
    """Primitive polynomial in x2 whose positive roots carry the generic-branch metrics."""
    return eliminate_IIb(dims).polynomial


@dataclass(frozen=True)
class EliminationIb:
    linear: BranchFunctions
    numerator: RationalPoly
    quadratic: RationalPoly
    octic: RationalPoly
    cofactor: RationalPoly


@lru_cache(maxsize=None)
def linear_solve_Ib_functions(dims: Decomposition) -> BranchFunctions:
    if dims.dtype != SpaceType.IB:
        raise ValueError(f"Type Ib solve needs a Type Ib decomposition, got {dims.dtype.value}")
    r = ricci(dims, _symbolic_metric(dims))
    equations = [_numerator(r[0] - E), _numerator(r[3] - E), _numerator(r[4] - E)]
    linear = _linear_solve(dims, equations, [U0, U1, E])
    return BranchFunctions(u0=_rf(linear[U0]), u1=_rf(linear[U1]), e=_rf(linear[E]))


def linear_solve_Ib(dims: Decomposition, x2: Any) -> Tuple[Fraction, Fraction, Fraction]:
    """(u0, u1, e) solving r0 = r3 = r4 = e at x2 for Type Ib.

    Raises:
        DegenerateDenominatorError: If the linear system is singular at x2
    """
    x2 = Fraction(x2)
    if linear_denominator(dims)(x2) == 0:
        raise DegenerateDenominatorError(f"{dims.label}: linear system singular at x2 = {x2}")
    f = linear_solve_Ib_functions(dims)
    return f.u0(x2), f.u1(x2), f.e(x2)


@lru_cache(maxsize=None)
def branch_split_Ib(dims: Decomposition) -> EliminationIb:
    """Split the Type Ib eliminant into the quadratic and the octic.

    Raises:
        EliminationError: If either factor fails to divide the eliminant
    """
    f = linear_solve_Ib_functions(dims)
    r = ricci(dims, _symbolic_metric(dims, u0=f.u0.as_expr(), u1=f.u1.as_expr()))
    numerator = RationalPoly.from_expr(_numerator(r[1] - f.e.as_expr()))
    numerator = _strip(numerator, [linear_denominator(dims)])
    quadratic = ib_quadratic(dims)
    octic = ib_octic(dims)
    for name, factor in (('quadratic', quadratic), ('octic', octic)):
        if not factor.divides(numerator):
            raise EliminationError(f"{dims.label}: the {name} does not divide the Type Ib eliminant")
    cofactor = (numerator // quadratic).primitive()
    return EliminationIb(linear=f, numerator=numerator, quadratic=quadratic, octic=octic, cofactor=cofactor)


@dataclass(frozen=True)
class EliminationIa:
    """Type Ia and IIa: u0 = x2 is forced and a single polynomial remains."""
    polynomial: RationalPoly
    functions: Optional[BranchFunctions]
    pair: Optional[Tuple[sympy.Expr, sympy.Expr]] = None
    linear: Optional[Dict[sympy.Symbol, sympy.Expr]] = None


def forced_u0_equals_x2(dims: Decomposition) -> bool:
    """Numerator of r0 - r4 is (u0 - x2) times a factor whose coefficients share one sign."""
    r = ricci(dims, _symbolic_metric(dims))
    difference = sympy.Poly(_numerator(r[0] - r[4]), U0, U1, U2, X)
    quotient, remainder = difference.div(sympy.Poly(U0 - X, U0, U1, U2, X))
    if not remainder.is_zero:
        return False
    coeffs = [c for c in quotient.coeffs() if c != 0]
    return bool(coeffs) and (all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs))


@lru_cache(maxsize=None)
def eliminate_Ia_IIa(dims: Decomposition) -> EliminationIa:
    if dims.dtype == SpaceType.IA:
        r = ricci(dims, _symbolic_metric(dims))
        equations = [_numerator(r[0] - E), _numerator(r[3] - E), _numerator(r[4] - E)]
        linear = _linear_solve(dims, equations, [U0, U2, E])
        r = ricci(dims, _symbolic_metric(dims, u0=linear[U0], u2=linear[U2]))
        avoid = [_rf(v).den for v in linear.values()]
        polynomial = _strip(RationalPoly.from_expr(_numerator(r[2] - linear[E])), avoid)
        functions = BranchFunctions(u0=_rf(linear[U0]), u2=_rf(linear[U2]), e=_rf(linear[E]))
        return EliminationIa(polynomial=polynomial, functions=functions)

    if dims.dtype != SpaceType.IIA:
        raise ValueError(f"eliminate_Ia_IIa needs Type Ia or IIa, got {dims.dtype.value}")
    linear = _linear_IIb(dims)
    r = ricci(dims, _symbolic_metric(dims, u0=linear[U0], u1=linear[U1]))
    p1 = _numerator(r[1] - linear[E])
    p2 = _numerator(r[2] - linear[E])
    chain = sympy.subresultants(p1, p2, U2)
    resultant = next((s for s in reversed(chain) if sympy.degree(s, U2) == 0 and s != 0), None)
    linear_term = next((s for s in chain if sympy.degree(s, U2) == 1), None)
    if resultant is None or linear_term is None:
        raise EliminationError(f"{dims.label}: the u2 equations share a factor for every x2")
    s1, s0 = sympy.Poly(linear_term, U2).all_coeffs()
    u2 = sympy.cancel(-s0 / s1)
    avoid = [linear_denominator(dims), _rf(s1).num]
    polynomial = _strip(RationalPoly.from_expr(_numerator(resultant)), avoid)
    values = _along(linear, u2)
    functions = BranchFunctions(u0=_rf(values[U0]), u1=_rf(values[U1]), u2=_rf(u2), e=_rf(values[E]))
    return EliminationIa(polynomial=polynomial, functions=functions, pair=(p1, p2), linear=linear)


# -- verification ----------------------------------------------------------------------------


def residuals(dims: Decomposition, params: MetricParams, e: Any) -> List[Any]:
    """r_k - e for every block from the general formula and the closed-form table."""
    components = ricci_general(closed_form(dims), dims, params)
    return [r - e for r in components]


def _magnitude(value: Any) -> Fraction:
    if isinstance(value, RationalInterval):
        return value.magnitude
    return abs(Fraction(value))


def _excludes_zero(value: Any) -> bool:
    if isinstance(value, RationalInterval):
        return not value.contains_zero()
    return value != 0


def verify_solution(sol: EinsteinSolution, dims: Optional[Decomposition] = None) -> Fraction:
    """Rigorous upper bound on max_k |r_k - e| over the solution's enclosures."""
    dims = dims or sol.dims
    return max(_magnitude(v) for v in residuals(dims, sol.params, sol.e))


def _params(dims: Decomposition, values: Dict[str, Any]) -> MetricParams:
    blocks = dims.blocks
    return MetricParams(
        u0=values['u0'],
        u1=values.get('u1') if 1 in blocks else None,
        u2=values.get('u2') if 2 in blocks else None,
        x1=Fraction(1),
        x2=values['x2'],
    )


def _enclose(params: MetricParams) -> MetricParams:
    y = {name: getattr(params, name) for name in ('u0', 'u1', 'u2', 'x1', 'x2')}
    return MetricParams(**{k: (None if v is None else RationalInterval.coerce(v)) for k, v in y.items()})


def _is_bi_invariant(values: Dict[str, Any]) -> bool:
    return all(not isinstance(v, RationalInterval) and v == 1 for k, v in values.items() if k != 'e')


class _Reject(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Duplicate(Exception):
    pass


def _sign_check(values: Dict[str, Any]) -> bool:
    """True when every value is certainly positive, False while some enclosure still straddles 0."""
    for name in PARAM_NAMES + ('e',):
        if name not in values:
            continue
        v = values[name]
        if isinstance(v, RationalInterval):
            if v.hi <= 0:
                raise _Reject(f"{name} is negative")
            if not v.is_positive():
                return False
        elif v <= 0:
            raise _Reject(f"{name} is not positive")
    return True


def _attempt(dims: Decomposition, root: IsolatedRoot, branch: Branch,
             params_of: Callable[[Any], Dict[str, Any]], width: Fraction,
             threshold: Fraction) -> Optional[EinsteinSolution]:
    """One back-substitution at the given width; None means refine further."""
    current = refine(root, width)
    x = current.lo if current.is_exact else current.interval
    try:
        values = params_of(x)
    except IntervalError:
        return None
    except DegenerateDenominatorError as exc:
        raise _Reject(f"singular back-substitution: {exc}")
    if current.is_exact and _is_bi_invariant(values):
        raise _Duplicate()
    if not _sign_check(values):
        return None
    params = _params(dims, values)
    try:
        diffs = residuals(dims, params, values['e'])
    except IntervalError:
        return None
    if any(_excludes_zero(d) for d in diffs):
        raise _Reject("fails the unreduced Einstein system")
    bound = max(_magnitude(d) for d in diffs)
    if bound > threshold:
        return None
    return EinsteinSolution(
        dims=dims,
        params=_enclose(params),
        e=RationalInterval.coerce(values['e']),
        branch=branch,
        residual_bound=bound,
        root=current,
    )


def _solutions_from(dims: Decomposition, poly: RationalPoly, branch: Branch,
                    params_of: Callable[[Any], Dict[str, Any]], result: SolveResult,
                    width: Fraction, threshold: Fraction, tolerance: Fraction) -> None:
    if poly.degree < 1:
        return
    for root in positive_roots(poly):
        step = width
        while True:
            try:
                sol = _attempt(dims, root, branch, params_of, step, threshold)
            except _Duplicate:
                break
            except _Reject as exc:
                logger.debug("%s: rejected root near %s: %s", dims.label, float(root), exc.reason)
                result.rejected.append(RejectedRoot(branch, refine(root, width).interval, exc.reason))
                break
            if sol is not None:
                result.solutions.append(_classified(sol, dims, params_of, threshold, tolerance, step))
                break
            if step <= MIN_WIDTH:
                result.rejected.append(RejectedRoot(branch, refine(root, step).interval, "indeterminate"))
                break
            step = max(step / REFINE_STEP, MIN_WIDTH)
            logger.debug("%s: refining root near %s to width %s", dims.label, float(root), float(step))


def _classified(sol: EinsteinSolution, dims: Decomposition, params_of, threshold: Fraction,
                tolerance: Fraction, width: Fraction) -> EinsteinSolution:
    state = {'width': width}

    def tighter(current: EinsteinSolution) -> Optional[EinsteinSolution]:
        while state['width'] > MIN_WIDTH:
            state['width'] = max(state['width'] / REFINE_STEP, MIN_WIDTH)
            try:
                better = _attempt(dims, current.root, current.branch, params_of, state['width'], threshold)
            except (_Reject, _Duplicate):
                return None
            if better is not None:
                return better
        return None

    verdict = classify(sol, dims, tolerance=tolerance, refine=tighter)
    return replace(sol, classification=verdict)


def bi_invariant_solution(dims: Decomposition) -> EinsteinSolution:
    params = _enclose(bi_invariant_params(dims))
    sol = EinsteinSolution(
        dims=dims,
        params=params,
        e=RationalInterval.exact(Fraction(1, 4)),
        branch=Branch.BI_INVARIANT,
        residual_bound=Fraction(0),
    )
    sol = replace(sol, residual_bound=verify_solution(sol, dims))
    verdict = classify(sol, dims)
    return replace(sol, classification=verdict)


def _sorted(result: SolveResult) -> SolveResult:
    order = {Branch.BI_INVARIANT: 0, Branch.NATURALLY_REDUCTIVE: 1, Branch.GENERIC: 2}
    result.solutions.sort(key=lambda s: (order[s.branch], s.x2.lo))
    return result


# -- public solves ---------------------------------------------------------------------------


def solve_IIb(dims: Decomposition, width: Fraction = DEFAULT_WIDTH, threshold: Fraction = RESIDUAL_THRESHOLD,
              tolerance: Fraction = TOLERANCE) -> SolveResult:
    """All verified Einstein metrics of the Type IIb family with x1 = 1."""
    elim = eliminate_IIb(dims)
    result = SolveResult(dims=dims, polynomial=elim.polynomial, nr_polynomial=elim.nr_polynomial)
    result.solutions.append(bi_invariant_solution(dims))
    _solutions_from(dims, elim.nr_polynomial, Branch.NATURALLY_REDUCTIVE, elim.naturally_reductive.evaluate,
                    result, width, threshold, tolerance)
    _solutions_from(dims, elim.polynomial, Branch.GENERIC, elim.generic.evaluate,
                    result, width, threshold, tolerance)
    return _sorted(result)


def solve_Ib(dims: Decomposition, width: Fraction = DEFAULT_WIDTH, threshold: Fraction = RESIDUAL_THRESHOLD,
             tolerance: Fraction = TOLERANCE) -> SolveResult:
    """All verified Einstein metrics of the Type Ib family with x1 = 1."""
    split = branch_split_Ib(dims)
    result = SolveResult(dims=dims, polynomial=split.octic, nr_polynomial=split.quadratic)
    if not split.cofactor.is_proportional(split.octic):
        result.notes.append(f"eliminant has an extra factor beyond the octic: {split.cofactor // split.octic}")
    result.solutions.append(bi_invariant_solution(dims))
    _solutions_from(dims, split.quadratic, Branch.NATURALLY_REDUCTIVE, split.linear.evaluate,
                    result, width, threshold, tolerance)
    _solutions_from(dims, split.cofactor, Branch.GENERIC, split.linear.evaluate,
                    result, width, threshold, tolerance)
    return _sorted(result)


def _exact_root_params(dims: Decomposition, elim: EliminationIa, x: Fraction) -> List[Dict[str, Any]]:
    """Type IIa values at an exact x2, where the linear subresultant may vanish."""
    q = sympy.Rational(x.numerator, x.denominator)
    p1 = sympy.Poly(elim.pair[0].subs(X, q), U2)
    p2 = sympy.Poly(elim.pair[1].subs(X, q), U2)
    common = RationalPoly.from_expr(p1.gcd(p2).as_expr(), U2)
    found = []
    for root in positive_roots(common) if common.degree > 0 else []:
        u2 = root.lo if root.is_exact else refine(root, MIN_WIDTH).interval
        at_x = {s: _rf(v.subs(X, q), U2) for s, v in elim.linear.items()}
        found.append({'u0': at_x[U0](u2), 'u1': at_x[U1](u2), 'u2': u2, 'x2': x, 'e': at_x[E](u2)})
    return found


def solve_Ia_IIa(dims: Decomposition, width: Fraction = DEFAULT_WIDTH, threshold: Fraction = RESIDUAL_THRESHOLD,
                 tolerance: Fraction = TOLERANCE) -> SolveResult:
    """Einstein metrics for Types Ia and IIa, where r0 = r4 forces u0 = x2."""
    if not forced_u0_equals_x2(dims):
        raise EliminationError(f"{dims.label}: r0 = r4 does not factor through u0 = x2")
    elim = eliminate_Ia_IIa(dims)
    result = SolveResult(dims=dims, polynomial=elim.polynomial)
    result.notes.append("r0 = r4 forces u0 = x2")
    result.solutions.append(bi_invariant_solution(dims))
    if dims.dtype == SpaceType.IA:
        _solutions_from(dims, elim.polynomial, Branch.NATURALLY_REDUCTIVE, elim.functions.evaluate,
                        result, width, threshold, tolerance)
        return _sorted(result)

    def params_of(x: Any) -> Dict[str, Any]:
        if isinstance(x, Fraction):
            try:
                return elim.functions.evaluate(x)
            except DegenerateDenominatorError:
                candidates = _exact_root_params(dims, elim, x)
                if not candidates:
                    raise
                non_trivial = [c for c in candidates if not _is_bi_invariant(c)]
                return (non_trivial or candidates)[0]
        return elim.functions.evaluate(x)

    _solutions_from(dims, elim.polynomial, Branch.NATURALLY_REDUCTIVE, params_of,
                    result, width, threshold, tolerance)
    return _sorted(result)


def solve(dims: Decomposition, width: Fraction = DEFAULT_WIDTH, threshold: Fraction = RESIDUAL_THRESHOLD,
          tolerance: Fraction = TOLERANCE) -> SolveResult:
    """Dispatch on the Type of ``dims``."""
    logger.debug("solving %s with dims %s", dims.label, dims.dims)
    if dims.dtype == SpaceType.IIB:
        return solve_IIb(dims, width, threshold, tolerance)
    if dims.dtype == SpaceType.IB:
        return solve_Ib(dims, width, threshold, tolerance)
    return solve_Ia_IIa(dims, width, threshold, tolerance)


def quotient_einstein_metrics(dims: Decomposition) -> List[QuotientEinstein]:
    """Invariant Einstein metrics (1, t) on G/H: the Kahler-Einstein t = 2 and one more."""
    t = sympy.Symbol('t')
    r = ricci_quotient(closed_form(dims), dims, QuotientMetricParams(Fraction(1), t))
    poly = RationalPoly.from_expr(_numerator(r[3] - r[4]).subs(t, X))
    metrics = []
    for ratio in poly.rational_roots():
        if ratio <= 0:
            continue
        w = QuotientMetricParams(Fraction(1), ratio)
        e = ricci_quotient(closed_form(dims), dims, w)[3]
        metrics.append(QuotientEinstein(params=w, e=e, kahler=ratio == 2))
    return metrics
