"""Forgetting variables from definite Horn formulae by replacement.

A forgotten variable in a clause body is replaced by the body of a clause
having it as head.  When a variable heads several clauses the choice is
nondeterministic: the naive algorithm explores one branch per choice of a
defining clause for every forgotten variable, and the result is the union
of what all branches produce.  On a single-head formula there is exactly
one branch, which is why SHMIN preprocessing pays off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .horn import Clause, Formula, HornError, Variable
from .propagation import entails
from .shmin import shmin_restarts
from .structure import SUBSET_CAP, CapExceeded


class UnforgettableVariable(HornError, ValueError):
    pass


@dataclass(frozen=True)
class ForgetResult:
    formula: Formula
    branches: int
    preprocessed: bool = False


def normalize(clauses: Iterable[Clause], universe: Iterable[Variable] = ()) -> Formula:
    """Deduplicate and drop clauses subsumed by a smaller body with the same head."""
    unique = list(dict.fromkeys(clauses))
    kept = [c for c in unique
            if not any(d.head == c.head and d.body < c.body for d in unique)]
    return Formula(sorted(kept), universe)


class _Unfolder:
    """Replacement of forgotten variables under one fixed choice of
    defining clauses.  A variable whose expansion needs itself, or that has
    no defining clause, cannot be eliminated on this branch."""

    def __init__(self, choice: dict[Variable, Clause], forgotten: frozenset[Variable]):
        self.choice = choice
        self.forgotten = forgotten
        self.done: dict[Variable, frozenset[Variable] | None] = {}

    def expand(self, v: Variable, active: set[Variable]) -> frozenset[Variable] | None:
        if v in self.done:
            return self.done[v]
        if v in active or v not in self.choice:
            return None
        active.add(v)
        result = self.body(self.choice[v].body, active)
        active.discard(v)
        # a failure caused by a cycle through an outer variable is not final
        if result is not None or not active:
            self.done[v] = result
        return result

    def body(self, body: Iterable[Variable], active: set[Variable] | None = None) -> frozenset[Variable] | None:
        active = set() if active is None else active
        out: set[Variable] = set()
        for w in body:
            if w in self.forgotten:
                sub = self.expand(w, active)
                if sub is None:
                    return None
                out |= sub
            else:
                out.add(w)
        return frozenset(out)


def forget_replace(f: Formula, vars: Iterable[Variable]) -> ForgetResult:
    forgotten = frozenset(vars)
    if not forgotten <= f.universe:
        raise UnforgettableVariable(f"not in the formula: {sorted(forgotten - f.universe)}")
    retained = f.universe - forgotten
    if not forgotten:
        return ForgetResult(normalize(f.clauses, f.universe), 0)

    order = sorted(forgotten)
    options = [f.heading(v) or [None] for v in order]
    kept = [c for c in f.clauses if c.head not in forgotten]
    out: list[Clause] = []
    branches = 0
    for picks in itertools.product(*options):
        branches += 1
        unfolder = _Unfolder({v: c for v, c in zip(order, picks) if c is not None}, forgotten)
        for c in kept:
            body = unfolder.body(c.body)
            if body is not None and c.head not in body:
                out.append(Clause(body, c.head))
    return ForgetResult(normalize(out, retained), branches)


def forget_fast(f: Formula, vars: Iterable[Variable], attempts: int = 1, seed: int = 0) -> ForgetResult:
    """Forget after converting to a single-head formula when SHMIN manages to.

    If the candidate is not equivalent, the input clauses it misses are added
    back, which keeps the formula equivalent and the duplicate heads few.
    """
    forgotten = frozenset(vars)
    if not forgotten <= f.universe:
        raise UnforgettableVariable(f"not in the formula: {sorted(forgotten - f.universe)}")
    outcome = shmin_restarts(f, attempts, seed)
    if outcome.equivalent:
        result = forget_replace(outcome.formula, forgotten)
        return ForgetResult(result.formula, result.branches, preprocessed=True)
    augmented = Formula(list(outcome.formula) + outcome.unentailed(), f.universe)
    result = forget_replace(augmented, forgotten)
    return ForgetResult(result.formula, result.branches, preprocessed=False)


def forget_oracle(f: Formula, vars: Iterable[Variable], cap: int = SUBSET_CAP) -> Formula:
    """Every non-tautologic clause over the retained variables that ``f`` entails."""
    forgotten = frozenset(vars)
    retained = sorted(f.universe - forgotten)
    if len(f.universe) > cap:
        raise CapExceeded(f"forget_oracle: {len(f.universe)} variables exceed the cap of {cap}")
    out = []
    for x in retained:
        others = [v for v in retained if v != x]
        for k in range(len(others) + 1):
            for body in itertools.combinations(others, k):
                if entails(f, body, x):
                    out.append(Clause(body, x))
    return Formula(out, retained)
