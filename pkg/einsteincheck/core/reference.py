"""Published values the reproduction checks compare against.

IIb eliminant coefficient lists are constant-first; the Type Ib quadratics and octics are
highest-first as printed. Classical rows are functions of the rank n
(and of the painted node p where the row depends on it).
"""

from fractions import Fraction
from typing import Callable, Dict, List, Tuple

Dims = Tuple[int, int, int, int]


# -- dimension tables (d1, d2, d3, d4) -------------------------------------------------------

EXCEPTIONAL_DIMS: Dict[Tuple[str, str], Dims] = {
    ('E6', 'Ia'): (0, 35, 40, 2),
    ('E7', 'Ia'): (0, 66, 64, 2),
    ('E8', 'Ia'): (0, 133, 112, 2),
    ('F4', 'Ia'): (0, 21, 28, 2),
    ('G2', 'Ia'): (0, 3, 8, 2),
    ('E7', 'Ib'): (48, 0, 70, 14),
    ('E8', 'Ib'): (91, 0, 128, 28),
    ('F4', 'Ib'): (21, 0, 16, 14),
    ('E6', 'IIb'): (24, 3, 40, 10),
    ('E7', 'IIb'): (45, 3, 64, 20),
}


def _c_ia(n: int) -> Dims:
    return (0, (n - 1) * (2 * n - 1), 4 * (n - 1), 2)


def _b_iia(n: int) -> Dims:
    return (3, (n - 2) * (2 * n - 3), 4 * (2 * n - 3), 2)


def _d_iia(n: int) -> Dims:
    return (3, (n - 2) * (2 * n - 5), 8 * (n - 2), 2)


def _b_iib(n: int, p: int) -> Dims:
    m = n - p
    return (p * p - 1, m * (2 * m + 1), 2 * p * (2 * m + 1), p * (p - 1))


def _c_iib(n: int, p: int) -> Dims:
    m = n - p
    return (p * p - 1, m * (2 * m + 1), 4 * p * m, p * (p + 1))


def _d_iib(n: int, p: int) -> Dims:
    m = n - p
    return (p * p - 1, m * (2 * m - 1), 4 * p * m, p * (p - 1))


def _b_ib(n: int) -> Dims:
    return (n * n - 1, 0, 2 * n, n * (n - 1))


def classical_rows(family: str, n: int) -> Dict[int, Tuple[str, Dims]]:
    """Expected ``{node: (type tag, dims)}`` for B_n, C_n or D_n.

    B_n at node n is a Type Ib space missing from the printed tables.
    """
    rows: Dict[int, Tuple[str, Dims]] = {}
    if family == 'B':
        if n > 2:
            rows[2] = ('IIa', _b_iia(n))
        rows.update({p: ('IIb', _b_iib(n, p)) for p in range(3, n)})
        rows[n] = ('Ib', _b_ib(n))
    elif family == 'C':
        rows[1] = ('Ia', _c_ia(n))
        rows.update({p: ('IIb', _c_iib(n, p)) for p in range(2, n)})
    elif family == 'D':
        rows[2] = ('IIa', _d_iia(n))
        rows.update({p: ('IIb', _d_iib(n, p)) for p in range(3, n - 1)})
    else:
        raise ValueError(f"no classical table for family {family!r}")
    return rows


# -- classical IIb eliminants ------------------------------------------------------------------


def eq_b(n: int) -> List[int]:
    """B_n, p = 3."""
    a, b = 2 * n - 5, 2 * n - 1
    return [
        -524288 * n,
        262144 * (3 + n) * b,
        65536 * (27 + 49 * n - 43 * n**2 - 2 * n**3),
        16384 * b * (-345 + 31 * n + 62 * n**2),
        2048 * (-6480 - 1023 * n + 8284 * n**2 - 2332 * n**3 - 192 * n**4),
        2048 * a * b * (-1605 + 191 * n + 382 * n**2),
        256 * a * (-30240 + 5521 * n + 30262 * n**2 - 9444 * n**3 - 920 * n**4),
        64 * a**2 * b * (-15567 + 2449 * n + 4898 * n**2),
        8 * a**2 * (-274320 + 71119 * n + 269348 * n**2 - 89124 * n**3 - 9024 * n**4),
        12 * a**3 * b * (-14017 + 2967 * n + 5934 * n**2),
        a**3 * (-300735 + 34744 * n + 377253 * n**2 - 126480 * n**3 - 12004 * n**4),
        3 * a**4 * b * (-5155 + 1539 * n + 3078 * n**2),
        3 * a**4 * (-4442 - 4565 * n + 13645 * n**2 - 4422 * n**3 - 344 * n**4),
        6 * a**5 * b * (-113 + 53 * n + 106 * n**2),
        3 * a**5 * (311 - 830 * n + 845 * n**2 - 252 * n**3 - 12 * n**4),
        9 * (1 + n) * a**6 * b**2,
        3 * a**6 * (-4 + 3 * n) * (-7 + 5 * n - 2 * n**2),
    ]


def eq_c(n: int) -> List[int]:
    """C_n, p = 2."""
    a, b = n - 2, n + 1
    return [
        207936 * (1 + 2 * n),
        -102144 * b * (5 + 2 * n),
        16 * (-16577 - 41122 * n + 64640 * n**2 + 1568 * n**3),
        -64 * b * (-24590 + 3103 * n + 6206 * n**2),
        16 * (-29251 + 29870 * n - 136972 * n**2 + 61176 * n**3 + 2576 * n**4),
        -128 * a * b * (-7475 + 1264 * n + 2528 * n**2),
        4 * a * (-155306 + 25437 * n - 248456 * n**2 + 133792 * n**3 + 6920 * n**4),
        -128 * a**2 * b * (-2207 + 559 * n + 1118 * n**2),
        8 * a**2 * (-34571 + 3055 * n - 35132 * n**2 + 21996 * n**3 + 1216 * n**4),
        -16 * a**3 * b * (-2324 + 1159 * n + 2318 * n**2),
        2 * a**3 * (-31006 + 5873 * n - 25762 * n**2 + 17808 * n**3 + 944 * n**4),
        -32 * a**4 * b * (-5 + 88 * n + 176 * n**2),
        a**4 * (-7229 + 3419 * n - 6086 * n**2 + 4328 * n**3 + 192 * n**4),
        -8 * a**5 * b * (56 + 29 * n + 58 * n**2),
        2 * a**5 * (-191 + 229 * n - 215 * n**2 + 144 * n**3 + 4 * n**4),
        -8 * a**6 * b * (4 + n + 2 * n**2),
        a**6 * (-1 + 4 * n) * (5 - 3 * n + 2 * n**2),
    ]


def eq_d(n: int) -> List[int]:
    """D_n, p = 3."""
    a, b = n - 3, n - 1
    return [
        32768 * (2 * n - 1),
        -32768 * b * (5 + 2 * n),
        4096 * (16 - 181 * n + 80 * n**2 + 4 * n**3),
        -4096 * b * (-345 - 31 * n + 62 * n**2),
        512 * (1809 + 5480 * n - 5747 * n**2 + 974 * n**3 + 96 * n**4),
        -1024 * a * b * (-1605 - 191 * n + 382 * n**2),
        256 * a * (6078 + 7841 * n - 10762 * n**2 + 1901 * n**3 + 230 * n**4),
        -64 * a**2 * b * (-15567 - 2449 * n + 4898 * n**2),
        8 * a**2 * (115983 + 130280 * n - 194749 * n**2 + 35538 * n**3 + 4512 * n**4),
        -24 * a**3 * b * (-14017 - 2967 * n + 5934 * n**2),
        a**3 * (208734 + 431367 * n - 548967 * n**2 + 102472 * n**3 + 12004 * n**4),
        -12 * a**4 * b * (-5155 - 1539 * n + 3078 * n**2),
        3 * a**4 * (-3566 + 42709 * n - 39524 * n**2 + 7468 * n**3 + 688 * n**4),
        -48 * a**5 * b * (-113 - 53 * n + 106 * n**2),
        12 * a**5 * (-968 + 1858 * n - 1205 * n**2 + 228 * n**3 + 12 * n**4),
        -144 * a**6 * b**2 * (1 + 2 * n),
        12 * a**6 * (-11 + 6 * n) * (10 - 7 * n + 2 * n**2),
    ]


# family: (painted node, eliminant as a function of n, ranks checked, window of the non-NR root)
CLASSICAL_IIB: Dict[str, Tuple[int, Callable[[int], List[int]], range, Tuple[Fraction, Fraction]]] = {
    'B': (3, eq_b, range(5, 13), (Fraction(1), Fraction(17, 10))),
    'C': (2, eq_c, range(3, 13), (Fraction(1), Fraction(5, 4))),
    'D': (3, eq_d, range(6, 13), (Fraction(1), Fraction(5, 3))),
}

SWEEP_RANKS = {'B': range(5, 31), 'C': range(3, 31), 'D': range(6, 31)}


def eq_b_at_one(n: int) -> int:
    """Printed factorization of the B_n eliminant at x2 = 1."""
    return 8 * (2 * n - 7) * (2 * n - 5) * (2 * n + 1) ** 2 * (6 + 17 * n + 7 * n**2 - 40 * n**3 + 12 * n**4)


# -- exceptional IIb eliminants ----------------------------------------------------------------

EXCEPTIONAL_IIB: Dict[str, List[int]] = {
    'E6': list(reversed([
        94860, -468000, 1562520, -4008000, 8070115, -13885480, 20117227, -25245080, 27575870,
        -25883264, 21320504, -14780736, 8807200, -4242816, 1608048, -445824, 59616,
    ])),
    'E7': list(reversed([
        24313856, -128581632, 482637824, -1357332480, 3043447808, -5804421120, 9347615296,
        -13107483648, 15962982496, -16875749376, 15608426188, -12310144128, 8333330528,
        -4638529008, 2039329151, -672320880, 114663500,
    ])),
}

# (u0, u1, u2, x2, e) with x1 = 1
IIB_SOLUTIONS: Dict[str, List[Tuple[float, ...]]] = {
    'E6': [
        (1.88908, 0.379243, 0.140912, 1.62965, 0.32505),
        (0.393637, 0.308385, 0.103143, 0.361629, 0.425457),
        (0.547238, 0.370178, 1.60644, 0.483835, 0.360612),
        (1.52202, 0.418588, 1.31967, 1.27928, 0.306505),
    ],
    'E7': [
        (0.633451, 0.328931, 0.0705205, 0.509298, 0.409568),
        (0.819745, 0.377972, 1.54275, 0.649661, 0.360839),
        (1.56687, 0.432465, 1.3115, 1.25338, 0.312624),
        (1.8899, 0.414278, 0.0931131, 1.55163, 0.319015),
    ],
}

# -- Type Ib -------------------------------------------------------------------------------------

# naturally reductive quadratic, printed as c (x - 1)(a x - b)
IB_QUADRATICS: Dict[str, List[int]] = {
    'E7': [196, -252, 56],
    'E8': [368, -480, 112],
    'F4': [88, -144, 56],
}

IB_OCTICS: Dict[str, List[int]] = {
    'E7': [6250, -15750, 27125, -41175, 36030, -34560, 17248, -9216, 2048],
    'E8': [11904, -30720, 56144, -86400, 80752, -79440, 42853, -23850, 6293],
    'F4': [46, -144, 767, -1728, 4116, -6696, 8119, -8352, 4004],
}

# exact naturally reductive metric (u0 = u1 = x2, e)
IB_NATURALLY_REDUCTIVE: Dict[str, Tuple[Fraction, Fraction]] = {
    'E7': (Fraction(2, 7), Fraction(3, 7)),
    'E8': (Fraction(7, 23), Fraction(39, 92)),
    'F4': (Fraction(7, 11), Fraction(15, 44)),
}

# the F4 case prints E8's values; these are what the F4 quadratic gives
IB_ERRATA: Dict[str, Tuple[Tuple[Fraction, Fraction], str]] = {
    'F4': ((Fraction(7, 23), Fraction(39, 92)),
           "printed metric repeats E8's 7/23, 39/92; the F4 quadratic 8(x-1)(11x-7) gives x2 = 7/11, e = 15/44"),
}

# (u0, u1, x2, e) with x1 = 1
IB_SOLUTIONS: Dict[str, List[Tuple[float, ...]]] = {
    'E7': [
        (0.348835, 0.275827, 0.319422, 0.428332),
        (1.86993, 0.334612, 1.62088, 0.338795),
    ],
    'E8': [
        (0.475824, 0.282007, 0.39314, 0.422612),
        (1.88246, 0.345485, 1.59071, 0.337789),
    ],
    'F4': [],
}

TUPLE_TOLERANCE = 1e-4

