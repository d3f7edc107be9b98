"""Ricci components of left-invariant metrics on G and of invariant metrics on G/H.

The metric is u0 B|h0 + u1 B|h1 + u2 B|h2 + x1 B|m1 + x2 B|m2 with B minus the Killing form.
The formulas are written once and evaluated on exact rationals, rational intervals or sympy
symbols alike, so the solver builds its equations from the same code that verifies them.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Tuple

from einsteincheck.core.brackets import BracketTable
from einsteincheck.core.flagdecomp import Decomposition, SpaceType
from einsteincheck.exceptions import InvalidMetricError, ZeroParameterError


ONE = Fraction(1)

BLOCK_NAMES = {0: 'u0', 1: 'u1', 2: 'u2', 3: 'x1', 4: 'x2'}


def _checked(name: str, value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, bool):
        raise InvalidMetricError(f"{name} must be a number")
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        if value == 0:
            raise ZeroParameterError(f"metric parameter {name} is zero")
        if value < 0:
            raise InvalidMetricError(f"metric parameter {name} = {value} is negative")
    return value


@dataclass(frozen=True)
class MetricParams:
    """Scalars of the metric on each block; absent blocks are None."""
    u0: Any
    x1: Any
    x2: Any
    u1: Any = None
    u2: Any = None

    def __post_init__(self):
        for name in ('u0', 'u1', 'u2', 'x1', 'x2'):
            object.__setattr__(self, name, _checked(name, getattr(self, name)))

    @property
    def y(self) -> Dict[int, Any]:
        values = (self.u0, self.u1, self.u2, self.x1, self.x2)
        return {k: v for k, v in enumerate(values) if v is not None}

    def for_blocks(self, blocks: Tuple[int, ...]) -> Dict[int, Any]:
        y = self.y
        missing = [BLOCK_NAMES[k] for k in blocks if k not in y]
        if missing:
            raise InvalidMetricError(f"metric is missing parameters {', '.join(missing)}")
        return {k: y[k] for k in blocks}

    def scaled(self, factor: Any) -> "MetricParams":
        return MetricParams(**{
            name: (None if value is None else value * factor)
            for name, value in (('u0', self.u0), ('u1', self.u1), ('u2', self.u2),
                                ('x1', self.x1), ('x2', self.x2))
        })

    def replace(self, **changes) -> "MetricParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class QuotientMetricParams:
    """Invariant metric w1 B|m1 + w2 B|m2 on G/H."""
    w1: Any
    w2: Any

    def __post_init__(self):
        object.__setattr__(self, 'w1', _checked('w1', self.w1))
        object.__setattr__(self, 'w2', _checked('w2', self.w2))


@dataclass(frozen=True)
class RicciComponents:
    """Ricci components r_k, aligned with ``blocks``."""
    blocks: Tuple[int, ...]
    r: Tuple[Any, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.blocks) != len(self.r):
            raise ValueError("Ricci components must align with the metric blocks")

    def __getitem__(self, block: int) -> Any:
        return self.r[self.blocks.index(block)]

    def __iter__(self) -> Iterator[Any]:
        return iter(self.r)

    def as_dict(self) -> Dict[int, Any]:
        return dict(zip(self.blocks, self.r))


def _general(t: BracketTable, blocks: Tuple[int, ...], dims: Decomposition, y: Dict[int, Any]) -> RicciComponents:
    values = []
    for k in blocks:
        dk = dims.dim(k)
        gain = 0
        loss = 0
        for i in blocks:
            for j in blocks:
                kji = t.get(k, j, i)
                if kji:
                    gain = gain + kji * y[k] / (y[j] * y[i])
                jki = t.get(j, k, i)
                if jki:
                    loss = loss + jki * y[j] / (y[k] * y[i])
        values.append(ONE / (2 * y[k]) + gain / (4 * dk) - loss / (2 * dk))
    return RicciComponents(blocks=blocks, r=tuple(values))


def ricci_general(t: BracketTable, dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Ricci components from the general formula

        r_k = 1/(2 y_k) + 1/(4 d_k) sum_{i,j} y_k/(y_j y_i) [k;ji] - 1/(2 d_k) sum_{i,j} y_j/(y_k y_i) [j;ki]

    Raises:
        ZeroParameterError: If a parameter is zero
    """
    blocks = dims.blocks
    return _general(t, blocks, dims, m.for_blocks(blocks))


def ricci_quotient(t: BracketTable, dims: Decomposition, w: QuotientMetricParams) -> RicciComponents:
    """Ricci components of w1 B|m1 + w2 B|m2 on G/H; sums run over m1, m2 only."""
    return _general(t, (3, 4), dims, {3: w.w1, 4: w.w2})


def ricci_IIb(dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Closed-form Ricci components for Types IIa and IIb."""
    if dims.dtype not in (SpaceType.IIA, SpaceType.IIB):
        raise ValueError(f"ricci_IIb needs a Type II decomposition, got {dims.dtype.value}")
    d1, d2, d3, d4 = dims.dims
    D = dims.D
    y = m.for_blocks((0, 1, 2, 3, 4))
    u0, u1, u2, x1, x2 = y[0], y[1], y[2], y[3], y[4]
    s = d3 + 2 * d4 - 2 * d1 - 2
    h2_self = d2 - Fraction(d3 * s, 2 * D)
    h2_m1 = Fraction(d3 * s, 2 * D)

    r0 = Fraction(d3, 4 * D) * u0 / x1 ** 2 + Fraction(d4, D) * u0 / x2 ** 2
    r1 = (Fraction(d4 * (2 * d1 + 2 - d4), 2 * d1 * D) / u1
          + Fraction(d3, 4 * D) * u1 / x1 ** 2
          + Fraction(d4 * (d4 - 2), 2 * d1 * D) * u1 / x2 ** 2)
    r2 = h2_self / (4 * d2) / u2 + h2_m1 / (4 * d2) * u2 / x1 ** 2
    r3 = (ONE / (2 * x1) - Fraction(d4, 2 * D) * x2 / x1 ** 2
          - (Fraction(1, D) * u0 + Fraction(d1, D) * u1 + Fraction(s, 2 * D) * u2) / (2 * x1 ** 2))
    r4 = (Fraction(2 * d4, D) / x2 + Fraction(d3, 4 * D) * x2 / x1 ** 2
          - (Fraction(2, D) * u0 + Fraction(d4 - 2, D) * u1) / x2 ** 2)
    return RicciComponents(blocks=(0, 1, 2, 3, 4), r=(r0, r1, r2, r3, r4))


def ricci_Ib(dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Closed-form Ricci components for Type Ib."""
    if dims.dtype != SpaceType.IB:
        raise ValueError(f"ricci_Ib needs a Type Ib decomposition, got {dims.dtype.value}")
    d1, _, d3, d4 = dims.dims
    D = dims.D
    y = m.for_blocks((0, 1, 3, 4))
    u0, u1, x1, x2 = y[0], y[1], y[3], y[4]

    r0 = Fraction(d3, 4 * D) * u0 / x1 ** 2 + Fraction(d4, D) * u0 / x2 ** 2
    r1 = (Fraction(d4 * (2 * d1 + 2 - d4), 2 * d1 * D) / u1
          + Fraction(d3, 4 * D) * u1 / x1 ** 2
          + Fraction(d4 * (d4 - 2), 2 * d1 * D) * u1 / x2 ** 2)
    r3 = (ONE / (2 * x1) - Fraction(d4, 2 * D) * x2 / x1 ** 2
          - (Fraction(1, D) * u0 + Fraction(d1, D) * u1) / (2 * x1 ** 2))
    r4 = (Fraction(2 * d4, D) / x2 + Fraction(d3, 4 * D) * x2 / x1 ** 2
          - (Fraction(2, D) * u0 + Fraction(d4 - 2, D) * u1) / x2 ** 2)
    return RicciComponents(blocks=(0, 1, 3, 4), r=(r0, r1, r3, r4))


def ricci_Ia(dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Closed-form Ricci components for Type Ia, where m2 is always two-dimensional."""
    if dims.dtype != SpaceType.IA:
        raise ValueError(f"ricci_Ia needs a Type Ia decomposition, got {dims.dtype.value}")
    if dims.d4 != 2:
        raise ValueError(f"Type Ia has dim m2 = 2, got {dims.d4}")
    _, d2, d3, _ = dims.dims
    D = d3 + 8
    y = m.for_blocks((0, 2, 3, 4))
    u0, u2, x1, x2 = y[0], y[2], y[3], y[4]

    r0 = Fraction(d3, 4 * D) * u0 / x1 ** 2 + Fraction(2, D) * u0 / x2 ** 2
    r2 = ((d2 - Fraction(d3 * (d3 + 2), 2 * D)) / (4 * d2) / u2
          + Fraction(d3 * (d3 + 2), 8 * d2 * D) * u2 / x1 ** 2)
    r3 = (ONE / (2 * x1) - Fraction(1, D) * x2 / x1 ** 2
          - (Fraction(1, D) * u0 + Fraction(d3 + 2, 2 * D) * u2) / (2 * x1 ** 2))
    r4 = Fraction(4, D) / x2 + Fraction(d3, 4 * D) * x2 / x1 ** 2 - Fraction(2, D) * u0 / x2 ** 2
    return RicciComponents(blocks=(0, 2, 3, 4), r=(r0, r2, r3, r4))


def ricci(dims: Decomposition, m: MetricParams) -> RicciComponents:
    """Closed-form Ricci components for the Type of ``dims``."""
    if dims.dtype == SpaceType.IA:
        return ricci_Ia(dims, m)
    if dims.dtype == SpaceType.IB:
        return ricci_Ib(dims, m)
    return ricci_IIb(dims, m)


def naturally_reductive_metric(dims: Decomposition, x2: Any, x1: Any = ONE, u2: Optional[Any] = None) -> MetricParams:
    """Ad(K)-invariant metric with K generated by h and m2: u0 = u1 = x2.

    For Type Ia there is no h1 and only u0 = x2 is imposed.
    """
    blocks = dims.blocks
    return MetricParams(
        u0=x2,
        u1=x2 if 1 in blocks else None,
        u2=u2 if 2 in blocks else None,
        x1=x1,
        x2=x2,
    )


def bi_invariant_params(dims: Decomposition) -> MetricParams:
    blocks = dims.blocks
    return MetricParams(
        u0=ONE,
        u1=ONE if 1 in blocks else None,
        u2=ONE if 2 in blocks else None,
        x1=ONE,
        x2=ONE,
    )
