"""Single-head body minimization (SHMIN).

Each input clause ``A -> x`` whose head has not been emitted yet is turned
into one clause with the same head.  The body first moves down the
entailment order, replacing ``A`` with ``BCN(A) - {a, x}`` for some
``a`` in ``A`` that is not a real consequence of ``A``; then it shrinks
by single removals of variables that are real consequences.  Every emitted
clause is entailed by the input, so the output is single-head and implied
by the input; equivalence holds for inequivalent single-head-equivalent
formulae and is checked at the end.

Candidates inside each phase are scanned in descending variable-name order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .horn import Clause, Formula, HornError, Variable
from .order import leq
from .propagation import bcn, entails, equivalent, rcnucl, unentailed


class PreconditionViolated(HornError, ValueError):
    pass


@dataclass(frozen=True)
class ShminTraceEntry:
    source: Clause
    order_phase_bodies: tuple[frozenset[Variable], ...] = ()
    subset_phase_bodies: tuple[frozenset[Variable], ...] = ()
    result: Clause | None = None
    skipped: bool = False
    propagations: int = 0


@dataclass(frozen=True)
class ShminOutcome:
    formula: Formula
    equivalent: bool
    trace: tuple[ShminTraceEntry, ...]
    source: Formula = field(default_factory=Formula)

    def unentailed(self) -> list[Clause]:
        """Input clauses the single-head candidate fails to entail."""
        return unentailed(self.formula, self.source)

    def generated_bodies(self) -> list[tuple[frozenset[Variable], Variable]]:
        """Every body the run produced, with its head; all are entailed."""
        out = []
        for e in self.trace:
            if e.skipped:
                continue
            x = e.source.head
            out.append((e.source.body, x))
            out.extend((b, x) for b in e.order_phase_bodies)
            out.extend((b, x) for b in e.subset_phase_bodies)
        return out


def _scan(vs: Iterable[Variable]) -> list[Variable]:
    return sorted(vs, reverse=True)


def minimize_body(c: Clause, f: Formula | Sequence[Clause], check: bool = False) -> ShminTraceEntry:
    """Run both minimization phases on one clause.

    With ``check`` set, every propagation restricted to the used clauses is
    repeated on the whole formula and the two are compared.
    """
    clauses = f.clauses if isinstance(f, Formula) else tuple(f)
    x = c.head
    a = c.body
    res = rcnucl(a, clauses)
    r, u = res.h, res.u
    calls = 1
    order_bodies = []
    subset_bodies = []

    def probe(nb: frozenset[Variable]):
        nonlocal calls
        calls += 1
        got = rcnucl(nb, u)
        if check:
            full = rcnucl(nb, clauses)
            assert got.h == full.h and set(got.u) == set(full.u), (nb, x)
        return got

    # order phase: a in A that is not a real consequence of A
    moved = True
    while moved:
        moved = False
        for e in _scan(a - r):
            nb = (a | r) - {e, x}
            got = probe(nb)
            if x in got.h:
                if check:
                    assert bcn(nb, clauses) < bcn(a, clauses)
                a, r, u = nb, got.h, got.u
                order_bodies.append(a)
                moved = True
                break

    # subset phase: only removals of real consequences can succeed here
    moved = True
    while moved:
        moved = False
        for e in _scan(a & r):
            nb = a - {e}
            got = probe(nb)
            if x in got.h:
                a, r, u = nb, got.h, got.u
                subset_bodies.append(a)
                moved = True
                break

    return ShminTraceEntry(c, tuple(order_bodies), tuple(subset_bodies), Clause(a, x),
                           propagations=calls)


def shmin(f: Formula, check: bool = False) -> ShminOutcome:
    emitted: list[Clause] = []
    trace: list[ShminTraceEntry] = []
    done: set[Variable] = set()
    for c in f:
        if c.head in done:
            trace.append(ShminTraceEntry(c, skipped=True))
            continue
        done.add(c.head)
        entry = minimize_body(c, f, check)
        trace.append(entry)
        emitted.append(entry.result)
    candidate = Formula(emitted, f.universe)
    return ShminOutcome(candidate, equivalent(f, candidate), tuple(trace), f)


def shmin_restarts(f: Formula, attempts: int = 1, seed: int = 0, check: bool = False) -> ShminOutcome:
    """Run SHMIN on shuffled clause orders until one run is equivalent.

    Returns the first equivalent outcome, otherwise the last one.
    """
    if attempts < 1:
        raise ValueError("attempts must be at least 1")
    rng = random.Random(seed)
    outcome = None
    for _ in range(attempts):
        order = list(f.clauses)
        rng.shuffle(order)
        outcome = shmin(Formula(order, f.universe), check)
        if outcome.equivalent:
            break
    return outcome


def disprove_single_head_equivalence(
        f: Formula, generated: Iterable[tuple[Iterable[Variable], Variable]]) -> bool:
    """Sufficient test for *not* being single-head equivalent.

    ``generated`` holds entailed clauses ``C -> x`` given as (body, head)
    pairs.  The formula is not single-head equivalent if, for some head
    ``x``, no clause ``B -> x`` of ``f`` has ``B`` below every generated
    body for ``x``.  False means inconclusive.
    """
    by_head: dict[Variable, list[frozenset[Variable]]] = {}
    for body, x in generated:
        body = frozenset(body)
        if not entails(f, body, x):
            raise PreconditionViolated(f"{''.join(sorted(body))}->{x} is not entailed")
        by_head.setdefault(x, []).append(body)
    for x, bodies in by_head.items():
        bodies = [b for b in bodies if x not in b]
        if not bodies:
            continue
        if not any(all(leq(c.body, b, f) for b in bodies) for c in f.heading(x)):
            return True
    return False
