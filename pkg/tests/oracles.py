"""Brute-force oracles for the test suite.

Nothing here calls the propagation engine: entailment is decided on the
full truth table, with each assignment one bit of a Python int.
"""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterable, Sequence

from singlehead import Clause, Formula

TRUTH_TABLE_CAP = 20


class TruthTable:
    def __init__(self, universe: Iterable[str]):
        self.vars = sorted(universe)
        n = len(self.vars)
        if n > TRUTH_TABLE_CAP:
            raise ValueError(f"truth table over {n} variables refused (cap {TRUTH_TABLE_CAP})")
        self.n = n
        self.size = 1 << n
        self.all = (1 << self.size) - 1
        # true[v]: the assignments (as bit positions) where v is true
        self.true = {}
        for i, v in enumerate(self.vars):
            m = 0
            for a in range(self.size):
                if a >> i & 1:
                    m |= 1 << a
            self.true[v] = m

    def conj(self, vs: Iterable[str]) -> int:
        m = self.all
        for v in vs:
            m &= self.true[v]
        return m

    def clause_models(self, c: Clause) -> int:
        return self.all & ~(self.conj(c.body) & ~self.true[c.head])

    def models(self, clauses: Iterable[Clause]) -> int:
        m = self.all
        for c in clauses:
            m &= self.clause_models(c)
        return m

    def entails(self, clauses: Iterable[Clause], body: Iterable[str], head: str) -> bool:
        return self.models(clauses) & self.conj(body) & ~self.true[head] == 0


@functools.lru_cache(maxsize=256)
def _table(vs: tuple[str, ...]) -> TruthTable:
    return TruthTable(vs)


def table(universe: Iterable[str]) -> TruthTable:
    """Shared, cached truth table over ``universe``."""
    return _table(tuple(sorted(universe)))


def universe_of(*formulas: Iterable[Clause], extra: Iterable[str] = ()) -> set[str]:
    u = set(extra)
    for f in formulas:
        if isinstance(f, Formula):
            u |= f.universe
        for c in f:
            u |= c.variables
    return u


def tt_entails(f: Formula, body: Iterable[str], head: str) -> bool:
    body = set(body)
    return table(universe_of(f, extra=body | {head})).entails(f, body, head)


def tt_equivalent(f: Iterable[Clause], g: Iterable[Clause]) -> bool:
    f, g = list(f), list(g)
    tt = table(universe_of(f, g))
    return tt.models(f) == tt.models(g)


def tt_bcn(f: Formula, b: Iterable[str]) -> frozenset[str]:
    b = frozenset(b)
    tt = table(universe_of(f, extra=b))
    return frozenset(x for x in tt.vars if x in b or tt.entails(f, b, x))


def definitional_rcn(f: Formula, b: Iterable[str]) -> frozenset[str]:
    """{a in BCN(b) | F |= BCN(b) - {a} -> a}."""
    closure = tt_bcn(f, b)
    tt = table(universe_of(f, extra=closure))
    return frozenset(a for a in closure if tt.entails(f, closure - {a}, a))


def definitional_ucl(f: Formula, b: Iterable[str]) -> frozenset[Clause]:
    closure = tt_bcn(f, b)
    return frozenset(c for c in f if c.body <= closure)


def subsets(vs: Sequence[str]) -> Iterable[frozenset[str]]:
    for k in range(len(vs) + 1):
        for combo in itertools.combinations(vs, k):
            yield frozenset(combo)


def definitional_semantic_edges(f: Formula) -> set[tuple[str, str]]:
    """y -> x when some P has F |= P+{y} -> x and not F |= P -> x.

    Only non-tautologic clauses count: x is neither y nor in P.
    """
    u = sorted(f.universe)
    tt = table(u)
    models = tt.models(f)
    edges = set()
    for x in u:
        for y in u:
            if y == x:
                continue
            for p in subsets([v for v in u if v not in (x, y)]):
                yes = models & tt.conj(p | {y}) & ~tt.true[x] == 0
                if yes and models & tt.conj(p) & ~tt.true[x] != 0:
                    edges.add((y, x))
                    break
    return edges


def single_head_equivalent(f: Formula) -> bool:
    """Search every single-head formula that could be equivalent to ``f``.

    Only heads of ``f`` can head a clause of an equivalent formula, and for
    each head only subset-minimal entailed bodies need trying: a smaller
    entailed body keeps the candidate entailed by ``f`` and makes it
    stronger.
    """
    u = sorted(f.universe)
    tt = table(u)
    fm = tt.models(f)
    options = []
    for x in sorted(f.heads):
        entailed = [p for p in subsets([v for v in u if v != x])
                    if fm & tt.conj(p) & ~tt.true[x] == 0]
        minimal = [p for p in entailed if not any(q < p for q in entailed)]
        options.append([tt.clause_models(Clause(p, x)) for p in minimal])
    for combo in itertools.product(*options):
        m = tt.all
        for cm in combo:
            m &= cm
        if m == fm:
            return True
    return False


def pairwise_inequivalent(f: Formula) -> bool:
    u = sorted(f.universe)
    tt = table(u)
    fm = tt.models(f)
    sets = list(subsets(u))

    def closure(s):
        return frozenset(x for x in u if x in s or fm & tt.conj(s) & ~tt.true[x] == 0)

    cl = {s: closure(s) for s in sets}
    for a in sets:
        for b in sets:
            if cl[a] == cl[b] and cl[a & b] != cl[a]:
                return False
    return True


# -- random formulae ---------------------------------------------------------

LETTERS = "abcdefghijklmnop"


def random_formula(rng: random.Random, max_vars: int, max_clauses: int,
                   max_body: int = 3, min_vars: int = 2) -> Formula:
    n = rng.randint(min_vars, max_vars)
    vs = LETTERS[:n]
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        head = rng.choice(vs)
        others = [v for v in vs if v != head]
        k = rng.randint(1, min(max_body, len(others)))
        clauses.append(Clause(rng.sample(others, k), head))
    return Formula(clauses)


def random_acyclic_formula(rng: random.Random, max_vars: int, max_clauses: int,
                           max_body: int = 3) -> Formula:
    """Every body variable precedes the head in a random variable order."""
    n = rng.randint(2, max_vars)
    vs = list(LETTERS[:n])
    rng.shuffle(vs)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        pos = rng.randint(1, n - 1)
        head = vs[pos]
        k = rng.randint(1, min(max_body, pos))
        clauses.append(Clause(rng.sample(vs[:pos], k), head))
    return Formula(clauses)


def chain_with_jumps(n: int) -> Formula:
    """v1 -> v2 -> ... -> vn plus every jump vi -> vi+2."""
    vs = LETTERS[:n]
    chain = [Clause([vs[i]], vs[i + 1]) for i in range(n - 1)]
    jumps = [Clause([vs[i]], vs[i + 2]) for i in range(n - 2)]
    return Formula(chain + jumps)
