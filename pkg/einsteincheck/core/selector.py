"""Resolve user group selectors to Lie kinds and painted nodes."""

import re
from typing import List, Optional, Tuple

from einsteincheck.core.flagdecomp import Decomposition, SpaceType, find_nodes_with_q2
from einsteincheck.core.rootsys import EXCEPTIONAL_RANKS, LieKind, enumerate_positive_roots
from einsteincheck.exceptions import SelectorError


_CARTAN = re.compile(r'^([BCD])(\d+)$')
_MATRIX = re.compile(r'^(SO|SPIN|SP)\((\d+)\)$')


def _normalized(text: str) -> str:
    return re.sub(r'[\s_\-]', '', text).upper()


def parse_group(text: str) -> LieKind:
    """Parse ``E6``, ``e_6``, ``B5``, ``b_5``, ``SO(11)``, ``Sp(3)`` or ``SO(12)``.

    Raises:
        SelectorError: If the name is not a supported compact simple group
    """
    if not text or not text.strip():
        raise SelectorError("empty group name")
    name = _normalized(text)
    if name in EXCEPTIONAL_RANKS:
        return LieKind(name)

    match = _CARTAN.match(name)
    if match:
        return LieKind(match.group(1), int(match.group(2)))

    match = _MATRIX.match(name)
    if match:
        family, m = match.group(1), int(match.group(2))
        if family == 'SP':
            return LieKind('C', m)
        if m % 2:
            return LieKind('B', (m - 1) // 2)
        return LieKind('D', m // 2)

    raise SelectorError(f"Unknown group {text!r}; try E6, F4, B5, Sp(3) or SO(12)")


def resolve_kind(group: Optional[str] = None, family: Optional[str] = None, n: Optional[int] = None) -> LieKind:
    """Lie kind from either ``group`` or a ``family`` with rank ``n``."""
    if group:
        kind = parse_group(group)
        if family and _normalized(family) != kind.family:
            raise SelectorError(f"--family {family} disagrees with --group {group}")
        return kind
    if not family:
        raise SelectorError("select a group with --group or --family")
    family = _normalized(family)
    if family in EXCEPTIONAL_RANKS:
        return LieKind(family)
    if n is None:
        raise SelectorError(f"--family {family} needs --n")
    return LieKind(family, n)


def resolve_nodes(kind: LieKind, node: Optional[int] = None, p: Optional[int] = None,
                  dtype: Optional[str] = None) -> List[Tuple[int, Decomposition]]:
    """Painted nodes with q = 2 of ``kind`` matching the filters.

    ``node`` and ``p`` are both 1-based Bourbaki indices. ``dtype`` is a type tag such as ``IIb``.

    Raises:
        SelectorError: If nothing matches
    """
    if node is not None and p is not None and node != p:
        raise SelectorError(f"--node {node} and --p {p} name different nodes")
    wanted = node if node is not None else p
    try:
        tag = SpaceType.from_tag(dtype) if dtype else None
    except ValueError as e:
        raise SelectorError(str(e))

    matches = [
        (i0, dims) for i0, dims in find_nodes_with_q2(enumerate_positive_roots(kind))
        if (wanted is None or dims.node == wanted) and (tag is None or dims.dtype == tag)
    ]
    if not matches:
        filters = []
        if wanted is not None:
            filters.append(f"node {wanted}")
        if tag is not None:
            filters.append(f"type {tag.value}")
        detail = f" with {' and '.join(filters)}" if filters else ""
        raise SelectorError(f"{kind.label} has no two-summand painted node{detail}")
    return matches
