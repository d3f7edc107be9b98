"""Painted Dynkin diagrams with one painted node and their block decompositions.

A node i0 of the Dynkin diagram defines g = h0 + h1 + h2 + m1 + m2, where h0 is the
one-dimensional center, h1 and h2 are the ideals generated by the remaining simple roots and
m_k is spanned by the root spaces whose coefficient at i0 equals k.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from einsteincheck.core.rootsys import LieKind, Root, RootSystem, coefficient_at, enumerate_positive_roots
from einsteincheck.exceptions import NotTwoSummandsError


class SpaceType(Enum):
    """Type tags of the two-summand spaces."""
    IA = "Ia"
    IB = "Ib"
    IIA = "IIa"
    IIB = "IIb"

    @classmethod
    def from_tag(cls, tag: str) -> "SpaceType":
        for member in cls:
            if member.value.lower() == tag.strip().lower():
                return member
        raise ValueError(f"Unknown type tag {tag!r}; expected one of Ia, Ib, IIa, IIb")

    @property
    def adjacent(self) -> bool:
        """Painted node joined to -alpha~ in the extended diagram."""
        return self in (SpaceType.IA, SpaceType.IIA)


@dataclass(frozen=True)
class PaintedDiagram:
    rs: RootSystem
    i0: int

    def __post_init__(self):
        if not 0 <= self.i0 < self.rs.rank:
            raise IndexError(f"painted node {self.i0} out of range for rank {self.rs.rank}")


@dataclass(frozen=True)
class Decomposition:
    """Block dimensions of g = h0 + h1 + h2 + m1 + m2 for one painted node."""
    kind: LieKind
    i0: int
    q: int
    d0: int
    d1: int
    d2: int
    d3: int
    d4: int
    dtype: SpaceType
    pi0_components: Tuple[Tuple[int, ...], ...]
    h1_component: Tuple[int, ...] = ()
    h2_component: Tuple[int, ...] = ()

    @property
    def dims(self) -> Tuple[int, int, int, int]:
        return (self.d1, self.d2, self.d3, self.d4)

    @property
    def D(self) -> int:
        """The recurring denominator d3 + 4 d4."""
        return self.d3 + 4 * self.d4

    @property
    def blocks(self) -> Tuple[int, ...]:
        """Block indices present: 0=h0, 1=h1, 2=h2, 3=m1, 4=m2."""
        return tuple(k for k, d in enumerate((self.d0, self.d1, self.d2, self.d3, self.d4)) if d)

    def dim(self, block: int) -> int:
        return (self.d0, self.d1, self.d2, self.d3, self.d4)[block]

    @property
    def node(self) -> int:
        """Bourbaki (1-based) label of the painted node."""
        return self.i0 + 1

    @property
    def label(self) -> str:
        return f"{self.kind.label}[{self.node}] {self.dtype.value}"


def grade_roots(pd: PaintedDiagram) -> List[List[Root]]:
    """Split the positive roots by their coefficient at the painted node.

    Returns:
        [Delta_0, Delta_1, ..., Delta_t] with t the coefficient of the highest root at i0
    """
    t = coefficient_at(pd.rs.highest_root, pd.i0)
    graded: List[List[Root]] = [[] for _ in range(t + 1)]
    for root in pd.rs.positive_roots:
        graded[coefficient_at(root, pd.i0)].append(root)
    return graded


def pi0_components(rs: RootSystem, i0: int) -> List[Tuple[int, ...]]:
    """Connected components of the diagram with node i0 removed."""
    remaining = [i for i in range(rs.rank) if i != i0]
    seen: Set[int] = set()
    components = []
    for start in remaining:
        if start in seen:
            continue
        stack = [start]
        component = set()
        while stack:
            i = stack.pop()
            if i in component:
                continue
            component.add(i)
            stack.extend(j for j in remaining if j not in component and rs.cartan[i][j] != 0)
        seen |= component
        components.append(tuple(sorted(component)))
    return components


def _roots_in(delta0: Sequence[Root], component: FrozenSet[int]) -> List[Root]:
    return [root for root in delta0 if root.support() <= component]


def killing_ratio(rs: RootSystem, component: Sequence[int]) -> Fraction:
    """Ratio B_h / B on the simple ideal generated by ``component``.

    Both Killing forms are evaluated on the coroot of a simple root beta of the component:
    sum over the roots gamma of each algebra of <gamma, beta^vee>^2.
    """
    comp = frozenset(component)
    beta = rs.simple_root(min(comp))
    inside = Fraction(0)
    total = Fraction(0)
    for gamma in rs.positive_roots:
        value = rs.pairing(gamma, beta) ** 2
        total += value
        if gamma.support() <= comp:
            inside += value
    return inside / total


def _highest_root_ratio(rs: RootSystem) -> Fraction:
    """Killing ratio of the su(2) spanned by the highest root."""
    highest = rs.highest_root
    total = sum((rs.pairing(gamma, highest) ** 2 for gamma in rs.positive_roots), Fraction(0))
    return Fraction(4) / total


def _split_ideals(rs: RootSystem, i0: int, components: List[Tuple[int, ...]],
                  adjacent: bool) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Assign the components of Pi_0 to h1 and h2.

    h2 is the part with [h2, m2] = 0: for a non-adjacent node that is every component whose
    simple roots are orthogonal to the highest root. When i0 is itself the neighbour of
    -alpha~ all components commute with m2; then h1 is the component isomorphic, as an
    embedded su(2), to the one spanned by the highest root.
    """
    if adjacent:
        target = _highest_root_ratio(rs)
        matches = [c for c in components if killing_ratio(rs, c) == target]
        h1 = min(matches) if matches else ()
    else:
        highest = rs.highest_root
        touching = [c for c in components
                    if any(rs.inner_product(rs.simple_root(j), highest) != 0 for j in c)]
        h1 = touching[0] if touching else ()
    h2 = tuple(sorted(j for c in components if c != h1 for j in c))
    return h1, h2


@lru_cache(maxsize=None)
def _decompose_cached(kind: LieKind, i0: int) -> Decomposition:
    rs = enumerate_positive_roots(kind)
    pd = PaintedDiagram(rs, i0)
    graded = grade_roots(pd)
    t = len(graded) - 1
    if t != 2:
        raise NotTwoSummandsError(
            f"{kind.label} node {i0 + 1}: highest-root coefficient is {t}, need exactly 2"
        )
    delta0 = graded[0]
    components = pi0_components(rs, i0)
    adjacent = rs.extended_adjacency[i0]

    def ideal_dim(nodes: Tuple[int, ...]) -> int:
        if not nodes:
            return 0
        return len(nodes) + 2 * len(_roots_in(delta0, frozenset(nodes)))

    if len(components) == 1:
        dtype = SpaceType.IA if adjacent else SpaceType.IB
        # single ideal: h2 for Ia, h1 for Ib
        h1, h2 = ((), components[0]) if adjacent else (components[0], ())
    else:
        dtype = SpaceType.IIA if adjacent else SpaceType.IIB
        h1, h2 = _split_ideals(rs, i0, components, adjacent)

    return Decomposition(
        kind=kind,
        i0=i0,
        q=t,
        d0=rs.rank - sum(len(c) for c in components),
        d1=ideal_dim(h1),
        d2=ideal_dim(h2),
        d3=2 * len(graded[1]),
        d4=2 * len(graded[2]),
        dtype=dtype,
        pi0_components=tuple(components),
        h1_component=h1,
        h2_component=h2,
    )


def decompose(pd: PaintedDiagram) -> Decomposition:
    """Block dimensions and Type of the painted diagram.

    Raises:
        NotTwoSummandsError: If the highest root has coefficient other than 2 at i0
    """
    return _decompose_cached(pd.rs.kind, pd.i0)


def find_nodes_with_q2(rs: RootSystem) -> List[Tuple[int, Decomposition]]:
    """Every node whose highest-root coefficient is exactly 2, with its decomposition."""
    return [
        (i0, decompose(PaintedDiagram(rs, i0)))
        for i0 in range(rs.rank)
        if coefficient_at(rs.highest_root, i0) == 2
    ]


def make_decomposition(kind: LieKind, node: int) -> Decomposition:
    """Decomposition for a 1-based Bourbaki node."""
    return decompose(PaintedDiagram(enumerate_positive_roots(kind), node - 1))


def ideal_killing_ratios(dims: Decomposition) -> Dict[int, Fraction]:
    """Killing ratios of the blocks h1 and h2 keyed by block index.

    h2 may be a sum of isomorphic ideals (D_n at p = n-2); their ratios coincide.
    """
    rs = enumerate_positive_roots(dims.kind)
    ratios = {}
    for block, nodes in ((1, dims.h1_component), (2, dims.h2_component)):
        if not nodes:
            continue
        parts = [c for c in dims.pi0_components if set(c) <= set(nodes)]
        values = {killing_ratio(rs, c) for c in parts}
        ratios[block] = values.pop() if len(values) == 1 else None
    return ratios
