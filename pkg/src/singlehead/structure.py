"""Graphs of a formula and brute-force semantic analysis.

The graph functions are polynomial.  Everything that quantifies over sets of
variables enumerates subsets of the universe and refuses to run past a size
cap (``CapExceeded``); closures are computed once per subset and kept as
bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .horn import Clause, Formula, HornError, Variable, is_single_head
from .propagation import bcn, entails_clause

SUBSET_CAP = 20
PAIR_CAP = 12


class CapExceeded(HornError):
    pass


class NotSyntacticallyAcyclic(HornError, ValueError):
    pass


Edge = tuple[Variable, Variable]


@dataclass(frozen=True)
class DirectedGraph:
    nodes: frozenset[Variable] = field(default=frozenset())
    edges: frozenset[Edge] = field(default=frozenset())

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], nodes: Iterable[Variable] = ()) -> "DirectedGraph":
        edges = frozenset(edges)
        ns = set(nodes)
        for y, x in edges:
            ns.update((y, x))
        return cls(frozenset(ns), edges)

    def successors(self) -> dict[Variable, list[Variable]]:
        out: dict[Variable, list[Variable]] = {n: [] for n in self.nodes}
        for y, x in sorted(self.edges):
            out[y].append(x)
        return out

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {_dot_id(y)} -> {_dot_id(x)};" for y, x in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_id(v: Variable) -> str:
    return v if v.replace("_", "").isalnum() else '"' + v.replace('"', '\\"') + '"'


def syntactic_graph(f: Iterable[Clause]) -> DirectedGraph:
    clauses = list(f)
    nodes: set[Variable] = set()
    for c in clauses:
        nodes |= c.variables
    return DirectedGraph.from_edges(((y, c.head) for c in clauses for y in c.body), nodes)


def transitive_closure(g: DirectedGraph) -> DirectedGraph:
    succ = g.successors()
    edges: set[Edge] = set()
    for start in g.nodes:
        seen: set[Variable] = set()
        stack = list(succ[start])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ[v])
        edges.update((start, v) for v in seen)
    return DirectedGraph(g.nodes, frozenset(edges))


def strongly_connected_components(g: DirectedGraph) -> list[frozenset[Variable]]:
    """Tarjan's algorithm, iterative."""
    succ = g.successors()
    index: dict[Variable, int] = {}
    low: dict[Variable, int] = {}
    on_stack: set[Variable] = set()
    stack: list[Variable] = []
    components: list[frozenset[Variable]] = []
    counter = 0

    for root in sorted(g.nodes):
        if root in index:
            continue
        work: list[tuple[Variable, Iterator[Variable]]] = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(frozenset(comp))
    return components


def has_nontrivial_cycle(g: DirectedGraph) -> bool:
    """True iff some cycle goes through at least two distinct nodes."""
    return any(len(c) >= 2 for c in strongly_connected_components(g))


# -- brute force over subsets of the universe --------------------------------


class _Lattice:
    """Closure of every subset of a universe, as bitmasks."""

    def __init__(self, f: Formula, cap: int, what: str):
        self.vars = sorted(f.universe)
        n = len(self.vars)
        if n > cap:
            raise CapExceeded(f"{what}: {n} variables exceed the brute-force cap of {cap}")
        self.n = n
        self.bit = {v: 1 << i for i, v in enumerate(self.vars)}
        clauses = f.clauses
        self.closure = [self.mask(bcn(self.members(m), clauses)) for m in range(1 << n)]
        self.full = (1 << n) - 1

    def mask(self, vs: Iterable[Variable]) -> int:
        m = 0
        for v in vs:
            m |= self.bit[v]
        return m

    def members(self, m: int) -> frozenset[Variable]:
        return frozenset(v for i, v in enumerate(self.vars) if m >> i & 1)

    def var(self, bit: int) -> Variable:
        return self.vars[bit.bit_length() - 1]

    def entails(self, body: int, head_bit: int) -> bool:
        return bool(self.closure[body] & head_bit)

    def classes(self) -> dict[int, list[int]]:
        """Subsets grouped by closure (the equisets)."""
        out: dict[int, list[int]] = {}
        for m, c in enumerate(self.closure):
            out.setdefault(c, []).append(m)
        return out


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low
        m ^= low


def _sorted_formula(clauses: Iterable[Clause], universe: Iterable[Variable]) -> Formula:
    return Formula(sorted(clauses), universe)


def prime_implicates(f: Formula, cap: int = SUBSET_CAP) -> Formula:
    """Non-tautologic entailed clauses whose bodies are subset-minimal."""
    lat = _Lattice(f, cap, "prime_implicates")
    out = []
    for a in range(1 << lat.n):
        derived = lat.closure[a] & ~a
        for xb in _bits(derived):
            # minimality needs only one-element removals, by monotonicity
            if all(not lat.entails(a ^ ab, xb) for ab in _bits(a)):
                out.append(Clause(lat.members(a), lat.var(xb)))
    return _sorted_formula(out, f.universe)


def semantic_graph(f: Formula, cap: int = SUBSET_CAP) -> DirectedGraph:
    g = syntactic_graph(prime_implicates(f, cap))
    return DirectedGraph(g.nodes | f.universe, g.edges)


def is_semantically_acyclic(f: Formula, cap: int = SUBSET_CAP) -> bool:
    return not has_nontrivial_cycle(semantic_graph(f, cap))


def is_inequivalent(f: Formula, cap: int = PAIR_CAP) -> bool:
    """Whether equivalent sets are always equivalent to their intersection.

    Pairwise closure under intersection is the same as the intersection of
    a whole equivalence class staying in the class.
    """
    lat = _Lattice(f, cap, "is_inequivalent")
    for closure, members in lat.classes().items():
        common = lat.full
        for m in members:
            common &= m
        if lat.closure[common] != closure:
            return False
    return True


def check_condition_one(f: Formula, cap: int = PAIR_CAP) -> dict[Variable, frozenset[Variable] | None]:
    """Witness set for each variable, or None when none exists.

    The witness for ``x`` is the first set ``A`` (by size, then by sorted
    names) with ``x`` not in ``A``, ``A -> x`` entailed, and ``B -> A``
    entailed by every ``B`` that entails ``x`` without containing it.  A
    variable entailed by no such ``B`` gets the empty set.
    """
    lat = _Lattice(f, cap, "check_condition_one")
    order = sorted(range(1 << lat.n),
                   key=lambda m: (bin(m).count("1"), sorted(lat.members(m))))
    result: dict[Variable, frozenset[Variable] | None] = {}
    for x in lat.vars:
        xb = lat.bit[x]
        entailing = [b for b in range(1 << lat.n) if not b & xb and lat.entails(b, xb)]
        if not entailing:
            result[x] = frozenset()
            continue
        common = lat.full
        for b in entailing:
            common &= lat.closure[b]
        result[x] = None
        for a in order:
            if a & xb or a & ~common:
                continue
            if lat.entails(a, xb):
                result[x] = lat.members(a)
                break
    return result


def condition_one_holds(f: Formula, cap: int = PAIR_CAP) -> bool:
    return all(w is not None for w in check_condition_one(f, cap).values())


def equiset(a: Iterable[Variable], f: Formula, cap: int = PAIR_CAP) -> list[frozenset[Variable]]:
    lat = _Lattice(f, cap, "equiset")
    target = lat.closure[lat.mask(a)]
    return [lat.members(m) for m in range(1 << lat.n) if lat.closure[m] == target]


def equiall(a: Iterable[Variable], f: Formula, cap: int = PAIR_CAP) -> frozenset[Variable]:
    sets = equiset(a, f, cap)
    return frozenset.intersection(*sets)


def check_condition_two(f: Formula, cap: int = PAIR_CAP) -> bool:
    """For all A, B with A -> B entailed, some C equivalent to B has
    C minus equiall(B) inside A."""
    lat = _Lattice(f, cap, "check_condition_two")
    classes = []
    for closure, members in lat.classes().items():
        common = lat.full
        for m in members:
            common &= m
        reduced = {m & ~common for m in members}
        minimal = [r for r in reduced if not any(s != r and s & r == s for s in reduced)]
        classes.append((closure, minimal))
    for a in range(1 << lat.n):
        ca = lat.closure[a]
        for closure, minimal in classes:
            # every member of the class has this closure, so A entails one
            # member iff it entails all of them
            if closure & ~ca:
                continue
            if not any(r & ~a == 0 for r in minimal):
                return False
    return True


def min_formula(f: Formula, cap: int = PAIR_CAP) -> Formula:
    """Entailed clauses whose bodies are minimal under both the strict
    entailment order and strict set containment."""
    lat = _Lattice(f, cap, "min_formula")
    out = []
    for x in lat.vars:
        xb = lat.bit[x]
        entailing = [b for b in range(1 << lat.n) if not b & xb and lat.entails(b, xb)]
        closures = {lat.closure[b] for b in entailing}
        lowest = {c for c in closures if not any(d != c and d & c == d for d in closures)}
        for a in entailing:
            if lat.closure[a] not in lowest:
                continue
            if any(lat.entails(a ^ ab, xb) for ab in _bits(a)):
                continue
            out.append(Clause(lat.members(a), x))
    return _sorted_formula(out, f.universe)


def reduce_irredundant(f: Formula) -> Formula:
    """Drop redundant clauses one at a time, scanning in stored order and
    restarting after each removal."""
    current = list(f.clauses)
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(current):
            rest = current[:i] + current[i + 1:]
            if entails_clause(rest, c):
                current = rest
                changed = True
                break
    return f.with_clauses(current)


def decide_acyclic_single_head_equivalence(f: Formula) -> bool:
    """Complete single-head-equivalence test for syntactically acyclic
    formulae: reduce to an irredundant subformula and look at its heads."""
    if has_nontrivial_cycle(syntactic_graph(f)):
        raise NotSyntacticallyAcyclic("the syntactic graph has a cycle through two or more variables")
    return is_single_head(reduce_irredundant(f))
