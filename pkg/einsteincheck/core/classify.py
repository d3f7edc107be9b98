"""Naturally reductive test for Einstein solutions.

A metric of the two-summand family is naturally reductive exactly when x1 = x2 (with respect
to G x H) or when the parameters on k = h0 + h1 + m2 agree with x2 (with respect to G x K);
for Types Ia and IIa the second pattern reduces to u0 = x2.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Dict, Optional, Tuple

from einsteincheck.core.flagdecomp import Decomposition, SpaceType
from einsteincheck.core.interval import RationalInterval
from einsteincheck.core.ratpoly import X, RationalFunction, RationalPoly
from einsteincheck.exceptions import IndeterminateError

if TYPE_CHECKING:
    from einsteincheck.core.solver import EinsteinSolution


TOLERANCE = Fraction(1, 10**6)


class Verdict(Enum):
    NATURALLY_REDUCTIVE_GXH = "NaturallyReductive_GxH"
    NATURALLY_REDUCTIVE_GXK = "NaturallyReductive_GxK"
    BI_INVARIANT = "BiInvariant"
    NOT_NATURALLY_REDUCTIVE = "NotNaturallyReductive"

    @property
    def naturally_reductive(self) -> bool:
        return self != Verdict.NOT_NATURALLY_REDUCTIVE


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: Tuple[str, ...] = ()

    @property
    def naturally_reductive(self) -> bool:
        return self.verdict.naturally_reductive

    def __str__(self) -> str:
        if not self.witness:
            return self.verdict.value
        return f"{self.verdict.value} ({', '.join(self.witness)})"


def _equal(a: RationalInterval, b: RationalInterval, tolerance: Fraction) -> Optional[bool]:
    """Decide a = b for positive enclosures; None when the enclosures are too wide."""
    if a.is_exact and b.is_exact:
        return a.lo == b.lo
    if a.separated_from(b):
        return False
    scale = min(a.lo, b.lo)
    if scale > 0 and (a - b).magnitude <= tolerance * scale:
        return True
    return None


def _patterns(values: Dict[str, RationalInterval], dtype: SpaceType) -> Dict[str, Tuple[str, ...]]:
    k_names = ('u0', 'u1') if dtype in (SpaceType.IB, SpaceType.IIB) else ('u0',)
    return {
        'x1 = x2': ('x1',),
        ' = '.join(k_names + ('x2',)): k_names,
        'all equal': tuple(name for name in values if name not in ('x2', 'e')),
    }


def _decide(sol: "EinsteinSolution", dims: Decomposition, tolerance: Fraction) -> Optional[Classification]:
    values = sol.values()
    x2 = values['x2']
    fired = []
    for label, names in _patterns(values, dims.dtype).items():
        outcomes = [_equal(values[name], x2, tolerance) for name in names]
        if any(o is False for o in outcomes):
            continue
        if any(o is None for o in outcomes):
            return None
        fired.append(label)
    if 'all equal' in fired:
        return Classification(Verdict.BI_INVARIANT, tuple(fired))
    if 'x1 = x2' in fired:
        return Classification(Verdict.NATURALLY_REDUCTIVE_GXH, tuple(fired))
    if fired:
        return Classification(Verdict.NATURALLY_REDUCTIVE_GXK, tuple(fired))
    return Classification(Verdict.NOT_NATURALLY_REDUCTIVE)


def classify(sol: "EinsteinSolution", dims: Optional[Decomposition] = None, tolerance: Fraction = TOLERANCE,
             refine: Optional[Callable[["EinsteinSolution"], Optional["EinsteinSolution"]]] = None) -> Classification:
    """Naturally reductive verdict for a verified solution.

    Args:
        sol: Verified solution
        dims: Decomposition of the solution, defaults to ``sol.dims``
        tolerance: Relative tolerance for equal parameters
        refine: Returns the same solution on a narrower enclosure, or None at maximal refinement

    Raises:
        IndeterminateError: If an equality stays undecided at maximal refinement
    """
    dims = dims or sol.dims
    current = sol
    while True:
        verdict = _decide(current, dims, tolerance)
        if verdict is not None:
            return verdict
        current = refine(current) if refine is not None else None
        if current is None:
            raise IndeterminateError(f"{dims.label}: cannot decide the naturally reductive patterns")


def generic_branch_is_nr_IIb(dims: Decomposition) -> bool:
    """The u2 branch from the linear factor of the quadratic gives u0 = u1 = x2 identically.

    Also checks e = (4 d4 + d3 x^2) / (4 (d3 + 4 d4) x) along that branch.
    """
    from einsteincheck.core.solver import eliminate_IIb

    branch = eliminate_IIb(dims).naturally_reductive
    identity = RationalFunction(RationalPoly.from_expr(X))
    expected_e = RationalFunction(
        RationalPoly((4 * dims.d4, 0, dims.d3)),
        RationalPoly((0, 4 * dims.D)),
    )
    return branch.u0 == identity and branch.u1 == identity and branch.e == expected_e
