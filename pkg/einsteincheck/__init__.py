__name__ = "EinsteinCheck"
__version__ = "1.0.0"
__summary__ = "EinsteinCheck: Einstein metrics on compact simple Lie groups from two-summand flag manifolds"

__description__ = """
EinsteinCheck builds and solves the Einstein equations for left-invariant metrics on compact
simple Lie groups G that come from Kahler C-spaces G/H whose isotropy representation splits
into two summands.

Every step is exact: root systems, structure-constant sums, Ricci components, elimination to a
univariate polynomial, Sturm root isolation and interval verification all run over rationals.
Solutions are classified as naturally reductive or not.
"""

__features__ = """
Painted Dynkin diagrams:
    Enumerates every node with highest-root coefficient 2 for B_n, C_n, D_n, E6, E7, E8, F4, G2
    and computes the block dimensions and the Type (Ia, Ib, IIa, IIb) of the decomposition.

Exact Einstein equations:
    Ricci components from closed-form structure constants, checked against their identities
    and against the general formula.

Certified solutions:
    Elimination to a univariate polynomial, Sturm isolation, interval back-substitution and a
    rigorous residual bound for every reported metric.

Reproduction reports:
    Dimension tables, published polynomials, sign checks and solution tuples regenerated with
    pass/fail flags in human, JSON or CSV form.
"""
