"""The preorder that entailment induces on sets of variables.

``leq(a, b, f)`` holds when ``f`` entails every variable of ``a`` from ``b``.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .horn import Clause, Formula, Variable
from .propagation import bcn


class OrderRelation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


def leq(a: Iterable[Variable], b: Iterable[Variable], f: Formula | Iterable[Clause]) -> bool:
    return frozenset(a) <= bcn(b, f)


def compare(a: Iterable[Variable], b: Iterable[Variable],
            f: Formula | Iterable[Clause]) -> OrderRelation:
    a = frozenset(a)
    b = frozenset(b)
    below = leq(a, b, f)
    above = leq(b, a, f)
    if below and above:
        return OrderRelation.EQUIVALENT
    if below:
        return OrderRelation.LESS
    if above:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def less(a: Iterable[Variable], b: Iterable[Variable], f: Formula | Iterable[Clause]) -> bool:
    return compare(a, b, f) is OrderRelation.LESS
