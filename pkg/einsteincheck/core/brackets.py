"""Structure-constant sums [k;ij] for the two-summand decompositions.

[k;ij] is the sum of B([e_a, e_b], e_c)^2 over B-orthonormal bases of the blocks i, j, k. It is
symmetric in all three indices, so tables are stored on sorted triples.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from einsteincheck.core.flagdecomp import Decomposition, SpaceType, ideal_killing_ratios
from einsteincheck.exceptions import NegativeEntryError


Triple = Tuple[int, int, int]

# nonzero patterns per type, on sorted triples
ZERO_PATTERN = {
    SpaceType.IIB: {(0, 3, 3), (0, 4, 4), (1, 1, 1), (1, 3, 3), (1, 4, 4), (2, 2, 2), (2, 3, 3), (3, 3, 4)},
    SpaceType.IIA: {(0, 3, 3), (0, 4, 4), (1, 1, 1), (1, 3, 3), (2, 2, 2), (2, 3, 3), (3, 3, 4)},
    SpaceType.IB: {(0, 3, 3), (0, 4, 4), (1, 1, 1), (1, 3, 3), (1, 4, 4), (3, 3, 4)},
    SpaceType.IA: {(0, 3, 3), (0, 4, 4), (2, 2, 2), (2, 3, 3), (3, 3, 4)},
}


def _key(k: int, i: int, j: int) -> Triple:
    a, b, c = sorted((k, i, j))
    return (a, b, c)


@dataclass(frozen=True)
class BracketTable:
    """Nonzero [k;ij] of one decomposition with symmetrized lookup."""
    dims: Decomposition
    entries: Dict[Triple, Fraction] = field(default_factory=dict)

    def get(self, k: int, i: int, j: int) -> Fraction:
        return self.entries.get(_key(k, i, j), Fraction(0))

    def __getitem__(self, triple: Triple) -> Fraction:
        return self.get(*triple)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.entries))

    def row_sum(self, k: int) -> Fraction:
        """Sum over ordered (i, j) of [k;ij]; equals d_k."""
        blocks = self.dims.blocks
        return sum((self.get(k, i, j) for i in blocks for j in blocks), Fraction(0))


def _closed_entries(d1: int, d2: int, d3: int, d4: int) -> Dict[Triple, Fraction]:
    D = d3 + 4 * d4
    s = d3 + 2 * d4 - 2 * d1 - 2
    return {
        (0, 3, 3): Fraction(d3, D),
        (0, 4, 4): Fraction(4 * d4, D),
        (1, 1, 1): Fraction(2 * d4 * (2 * d1 + 2 - d4), D),
        (1, 3, 3): Fraction(d1 * d3, D),
        (1, 4, 4): Fraction(2 * d4 * (d4 - 2), D),
        (2, 2, 2): d2 - Fraction(d3 * s, 2 * D),
        (2, 3, 3): Fraction(d3 * s, 2 * D),
        (3, 3, 4): Fraction(d3 * d4, D),
    }


def _build(dims: Decomposition, raw: Dict[Triple, Fraction], allowed) -> BracketTable:
    entries = {}
    for triple, value in raw.items():
        if triple not in allowed:
            continue
        if value < 0:
            raise NegativeEntryError(
                f"{dims.label}: [{triple[0]};{triple[1]}{triple[2]}] = {value} is negative"
            )
        if value:
            entries[triple] = value
    return BracketTable(dims=dims, entries=entries)


def closed_form_IIb(d: Decomposition) -> BracketTable:
    """Closed forms for Types IIa and IIb (for IIa, d4 = 2 kills [1;44]).

    Raises:
        NegativeEntryError: If a closed form is negative for these dimensions
    """
    if d.dtype not in (SpaceType.IIA, SpaceType.IIB):
        raise ValueError(f"closed_form_IIb needs a Type II decomposition, got {d.dtype.value}")
    return _build(d, _closed_entries(d.d1, d.d2, d.d3, d.d4), ZERO_PATTERN[SpaceType.IIB])


def closed_form_Ib(d: Decomposition) -> BracketTable:
    """Closed forms for Type Ib: the Type II formulas without the h2 rows."""
    if d.dtype != SpaceType.IB:
        raise ValueError(f"closed_form_Ib needs a Type Ib decomposition, got {d.dtype.value}")
    return _build(d, _closed_entries(d.d1, 0, d.d3, d.d4), ZERO_PATTERN[SpaceType.IB])


def closed_form_Ia(d: Decomposition) -> BracketTable:
    """Closed forms for Type Ia: the Type II formulas with d1 = 0, ideal in the h2 slot."""
    if d.dtype != SpaceType.IA:
        raise ValueError(f"closed_form_Ia needs a Type Ia decomposition, got {d.dtype.value}")
    return _build(d, _closed_entries(0, d.d2, d.d3, d.d4), ZERO_PATTERN[SpaceType.IA])


def closed_form(d: Decomposition) -> BracketTable:
    if d.dtype == SpaceType.IA:
        return closed_form_Ia(d)
    if d.dtype == SpaceType.IB:
        return closed_form_Ib(d)
    return closed_form_IIb(d)


@dataclass
class IdentityReport:
    """Outcome of the bracket identity checks, one boolean per named identity."""
    label: str
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]


def verify_identities(t: BracketTable) -> IdentityReport:
    """Check the identities the closed forms must satisfy.

    Row sums sum_{i,j} [k;ij] = d_k for every block, [4;33] = d3 d4 / (d3 + 4 d4), the
    Kahler-Einstein quotient metric (w1, w2) = (1, 2), the zero pattern and the Killing
    ratios [1;11] = d1 c1 and [2;22] = d2 c2 computed from the root system.
    """
    from einsteincheck.core.ricci import QuotientMetricParams, ricci_quotient

    dims = t.dims
    report = IdentityReport(label=dims.label)
    for k in dims.blocks:
        report.checks[f"row_sum[{k}]"] = t.row_sum(k) == dims.dim(k)
    report.checks["kahler_bracket"] = t.get(4, 3, 3) == Fraction(dims.d3 * dims.d4, dims.D)
    quotient = ricci_quotient(t, dims, QuotientMetricParams(Fraction(1), Fraction(2)))
    report.checks["kahler_einstein"] = quotient[3] == quotient[4]
    report.checks["zero_pattern"] = set(t.entries) <= ZERO_PATTERN[dims.dtype]
    report.checks["symmetry"] = all(
        t.get(k, i, j) == t.get(k, j, i) == t.get(j, k, i)
        for k in dims.blocks for i in dims.blocks for j in dims.blocks
    )
    for block, ratio in ideal_killing_ratios(dims).items():
        if ratio is not None:
            report.checks[f"killing_ratio[{block}]"] = t.get(block, block, block) == dims.dim(block) * ratio
    return report
