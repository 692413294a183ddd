"""Unit propagation over definite Horn clauses.

``rcnucl`` separates the given variables from the generated ones: it returns
the variables produced by some clause application (the real consequences)
and the clauses whose bodies end up satisfied (the used clauses).  The
propagation is counter based: each clause keeps the number of its body
variables not yet known, and each variable points to the clauses whose
bodies contain it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .horn import Clause, Formula, Variable


class PropagationIndex:
    """Scratch state for one propagation run.

    ``remaining[i]`` counts the body variables of clause ``i`` outside
    ``member``; ``reverse`` maps a variable to the indices of the clauses
    having it in their body.
    """

    __slots__ = ("clauses", "remaining", "reverse", "member")

    def __init__(self, clauses: Sequence[Clause]):
        self.clauses = clauses
        self.remaining = [len(c.body) for c in clauses]
        self.reverse: dict[Variable, list[int]] = {}
        for i, c in enumerate(clauses):
            for v in c.body:
                self.reverse.setdefault(v, []).append(i)
        self.member: set[Variable] = set()

    def saturate(self, given: Iterable[Variable]) -> tuple[set[Variable], list[int]]:
        """Propagate from ``given``; return (derived heads, fired clause indices)."""
        h: set[Variable] = set()
        fired: list[int] = []
        queue: deque[Variable] = deque()
        member = self.member
        for v in given:
            if v not in member:
                member.add(v)
                queue.append(v)
        # clauses with an empty body fire unconditionally
        for i, n in enumerate(self.remaining):
            if n == 0:
                fired.append(i)
                x = self.clauses[i].head
                h.add(x)
                if x not in member:
                    member.add(x)
                    queue.append(x)
        remaining = self.remaining
        reverse = self.reverse
        clauses = self.clauses
        while queue:
            v = queue.popleft()
            for i in reverse.get(v, ()):
                remaining[i] -= 1
                if remaining[i] == 0:
                    fired.append(i)
                    x = clauses[i].head
                    h.add(x)
                    if x not in member:
                        member.add(x)
                        queue.append(x)
        return h, fired


@dataclass(frozen=True)
class RcnResult:
    h: frozenset[Variable]
    u: tuple[Clause, ...]

    @property
    def used(self) -> Formula:
        return Formula(self.u)


def _clauses(f: Formula | Iterable[Clause]) -> Sequence[Clause]:
    if isinstance(f, Formula):
        return f.clauses
    return tuple(f)


def rcnucl(b: Iterable[Variable], f: Formula | Iterable[Clause]) -> RcnResult:
    """Real consequences and used clauses of ``b`` under ``f``.

    ``h`` holds the head of every clause whose body gets satisfied, including
    heads that were already in ``b``; ``u`` holds those clauses, in ``f``'s
    order.
    """
    clauses = _clauses(f)
    index = PropagationIndex(clauses)
    h, fired = index.saturate(b)
    fired.sort()
    return RcnResult(frozenset(h), tuple(clauses[i] for i in fired))


def bcn(b: Iterable[Variable], f: Formula | Iterable[Clause]) -> frozenset[Variable]:
    """All variables entailed by ``b``."""
    b = frozenset(b)
    return b | rcnucl(b, f).h


def entails(f: Formula | Iterable[Clause], body: Iterable[Variable], head: Variable) -> bool:
    """Whether ``f`` entails ``body -> head``; true for tautologies."""
    body = frozenset(body)
    return head in body or head in rcnucl(body, f).h


def entails_clause(f: Formula | Iterable[Clause], c: Clause) -> bool:
    return entails(f, c.body, c.head)


def entails_formula(f: Formula | Iterable[Clause], g: Iterable[Clause]) -> bool:
    clauses = _clauses(f)
    return all(entails_clause(clauses, c) for c in g)


def equivalent(f: Formula | Iterable[Clause], g: Formula | Iterable[Clause]) -> bool:
    f = _clauses(f)
    g = _clauses(g)
    return entails_formula(f, g) and entails_formula(g, f)


def unentailed(f: Formula | Iterable[Clause], g: Iterable[Clause]) -> list[Clause]:
    """Clauses of ``g`` that ``f`` does not entail."""
    clauses = _clauses(f)
    return [c for c in g if not entails_clause(clauses, c)]
