"""Root systems of the compact simple Lie algebras B_n, C_n, D_n, E6, E7, E8, F4, G2.

Simple roots are numbered as in Bourbaki; indices are 0-based in code and reported 1-based.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Set, Tuple

from einsteincheck.exceptions import SelectorError


FAMILIES = ('B', 'C', 'D', 'E6', 'E7', 'E8', 'F4', 'G2')

EXCEPTIONAL_RANKS = {'E6': 6, 'E7': 7, 'E8': 8, 'F4': 4, 'G2': 2}

MIN_RANKS = {'B': 2, 'C': 3, 'D': 4}

MAX_RANK = 30

DIMENSIONS = {
    'B': lambda n: n * (2 * n + 1),
    'C': lambda n: n * (2 * n + 1),
    'D': lambda n: n * (2 * n - 1),
    'E6': lambda n: 78,
    'E7': lambda n: 133,
    'E8': lambda n: 248,
    'F4': lambda n: 52,
    'G2': lambda n: 14,
}


@dataclass(frozen=True)
class LieKind:
    """Cartan type of a compact simple Lie algebra."""
    family: str
    rank: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SelectorError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family in EXCEPTIONAL_RANKS:
            fixed = EXCEPTIONAL_RANKS[self.family]
            if self.rank not in (0, fixed):
                raise SelectorError(f"{self.family} has rank {fixed}, got {self.rank}")
            object.__setattr__(self, 'rank', fixed)
            return
        low = MIN_RANKS[self.family]
        if not low <= self.rank <= MAX_RANK:
            raise SelectorError(
                f"{self.family}_n requires {low} <= n <= {MAX_RANK}, got n = {self.rank}"
            )

    @property
    def dimension(self) -> int:
        return DIMENSIONS[self.family](self.rank)

    @property
    def is_classical(self) -> bool:
        return self.family in MIN_RANKS

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}" if self.is_classical else self.family

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, order=True)
class Root:
    """Positive root as its coefficients over the simple roots."""
    coeffs: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def coefficient_at(self, i0: int) -> int:
        return coefficient_at(self, i0)

    def support(self) -> Set[int]:
        return {j for j, m in enumerate(self.coeffs) if m}


@dataclass(frozen=True)
class RootSystem:
    kind: LieKind
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    extended_adjacency: Tuple[bool, ...]
    _index: Dict[Tuple[int, ...], int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.kind.rank

    def simple_root(self, i: int) -> Root:
        return Root(tuple(1 if j == i else 0 for j in range(self.rank)))

    def is_root(self, coeffs: Tuple[int, ...]) -> bool:
        return tuple(coeffs) in self._index

    def inner_product(self, a: Root, b: Root) -> Fraction:
        """Invariant inner product induced by the Cartan matrix and the relative root lengths."""
        b_support = [(j, m) for j, m in enumerate(b.coeffs) if m]
        total = Fraction(0)
        for i, a_i in enumerate(a.coeffs):
            if a_i:
                row = self.gram[i]
                total += a_i * sum(m * row[j] for j, m in b_support)
        return total

    def pairing(self, gamma: Root, beta: Root) -> Fraction:
        """<gamma, beta^vee> = 2 (gamma, beta) / (beta, beta)."""
        return 2 * self.inner_product(gamma, beta) / self.inner_product(beta, beta)


def coefficient_at(root: Root, i0: int) -> int:
    """Coefficient m_{i0} of ``root`` in the simple-root basis."""
    if not 0 <= i0 < len(root.coeffs):
        raise IndexError(f"simple-root index {i0} out of range for rank {len(root.coeffs)}")
    return root.coeffs[i0]


def _diagram(kind: LieKind) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Squared root lengths and Dynkin edges in Bourbaki numbering."""
    n = kind.rank
    family = kind.family
    if family == 'B':
        lengths = [Fraction(2)] * (n - 1) + [Fraction(1)]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == 'C':
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == 'D':
        lengths = [Fraction(2)] * n
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family in ('E6', 'E7', 'E8'):
        lengths = [Fraction(2)] * n
        # alpha_1 - alpha_3 - alpha_4 - ... - alpha_n with alpha_2 hanging off alpha_4
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    elif family == 'F4':
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        edges = [(0, 1), (1, 2), (2, 3)]
    else:
        # G2: alpha_1 short, alpha_2 long
        lengths = [Fraction(1), Fraction(3)]
        edges = [(0, 1)]
    return lengths, edges


def gram_matrix(kind: LieKind) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inner products (alpha_i, alpha_j) of the simple roots."""
    lengths, edges = _diagram(kind)
    n = kind.rank
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j in edges:
        # adjacent simple roots: (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
    return tuple(tuple(row) for row in gram)


def cartan_matrix(kind: LieKind) -> Tuple[Tuple[int, ...], ...]:
    """Cartan integers A[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)."""
    gram = gram_matrix(kind)
    rows = []
    for i, gram_row in enumerate(gram):
        values = [2 * g / gram[i][i] for g in gram_row]
        if any(v.denominator != 1 for v in values):
            raise SelectorError(f"{kind.label}: non-integral Cartan integers in row {i + 1}")
        rows.append(tuple(int(v) for v in values))
    return tuple(rows)


def _close_under_strings(cartan: Tuple[Tuple[int, ...], ...]) -> List[Tuple[int, ...]]:
    """Generate positive roots height by height from the alpha_i-string condition.

    For a root beta and simple alpha_i, beta + alpha_i is a root iff q > 0 where
    p - q = <beta, alpha_i^vee> and p is how far the string extends below beta.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: Set[Tuple[int, ...]] = set(simple)
    layer = simple
    while layer:
        next_layer: Set[Tuple[int, ...]] = set()
        for beta in layer:
            for i in range(n):
                p = 0
                lower = list(beta)
                lower[i] -= 1
                while tuple(lower) in roots:
                    p += 1
                    lower[i] -= 1
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    next_layer.add(tuple(raised))
        next_layer -= roots
        roots |= next_layer
        layer = sorted(next_layer)
    return sorted(roots)


@lru_cache(maxsize=None)
def enumerate_positive_roots(kind: LieKind) -> RootSystem:
    """Build the root system of ``kind``.

    Args:
        kind: Cartan type; rank bounds are enforced by LieKind itself

    Returns:
        RootSystem with positive roots in lexicographic order
    """
    cartan = cartan_matrix(kind)
    roots = tuple(Root(c) for c in _close_under_strings(cartan))
    highest = max(roots, key=lambda r: r.height)
    rs = RootSystem(
        kind=kind,
        cartan=cartan,
        gram=gram_matrix(kind),
        positive_roots=roots,
        highest_root=highest,
        extended_adjacency=(),
        _index={r.coeffs: k for k, r in enumerate(roots)},
    )
    adjacency = tuple(rs.inner_product(rs.simple_root(i), highest) != 0 for i in range(kind.rank))
    object.__setattr__(rs, 'extended_adjacency', adjacency)
    return rs


def extended_neighbors(rs: RootSystem) -> Set[int]:
    """Simple-root indices joined to -alpha~ in the extended Dynkin diagram."""
    return {i for i, adjacent in enumerate(rs.extended_adjacency) if adjacent}
