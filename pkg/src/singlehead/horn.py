"""Definite Horn clauses and formulae, and the textual clause syntax.

A clause spec is ``<body>-><heads>`` or ``<side>=<side>``.  In the default
single-character mode every character is a variable (``ab->cd``); in multi
mode variables are comma-separated identifiers (``a1,b->c``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Variable = str

_SINGLE_OK = re.compile(r"^[A-Za-z0-9_]$")
_IDENT = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_']*$")


class HornError(Exception):
    """Base class for errors raised by this package."""


class ParseError(HornError, ValueError):
    pass


class TautologyError(HornError, ValueError):
    pass


@dataclass(frozen=True)
class Clause:
    """A definite Horn clause ``body -> head``.

    The empty body is allowed only for enumeration code; the parser never
    produces it.
    """

    body: frozenset[Variable]
    head: Variable

    def __init__(self, body: Iterable[Variable], head: Variable):
        body = frozenset(body)
        if head in body:
            raise TautologyError(f"head {head!r} occurs in the body")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "head", head)

    @property
    def variables(self) -> frozenset[Variable]:
        return self.body | {self.head}

    def __str__(self) -> str:
        return format_clause(self, multi=any(len(v) > 1 for v in self.variables))

    def __repr__(self) -> str:
        return f"Clause({str(self)!r})"

    def __lt__(self, other: "Clause") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.head, len(self.body), sorted(self.body))


@dataclass(frozen=True)
class Formula:
    """An ordered, duplicate-free sequence of clauses.

    Iteration follows the stored order; SHMIN depends on it.  ``universe``
    holds every variable occurring in a clause plus any declared ones.
    """

    clauses: tuple[Clause, ...]
    universe: frozenset[Variable] = field(default=frozenset())

    def __init__(self, clauses: Iterable[Clause] = (), universe: Iterable[Variable] = ()):
        unique = tuple(dict.fromkeys(clauses))
        names = set(universe)
        for c in unique:
            names |= c.variables
        object.__setattr__(self, "clauses", unique)
        object.__setattr__(self, "universe", frozenset(names))

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def __contains__(self, c: object) -> bool:
        return c in self.clauses

    def __eq__(self, other: object) -> bool:
        # set semantics: order is not part of identity
        if not isinstance(other, Formula):
            return NotImplemented
        return set(self.clauses) == set(other.clauses)

    def __hash__(self) -> int:
        return hash(frozenset(self.clauses))

    def __str__(self) -> str:
        return format_formula(self)

    def __repr__(self) -> str:
        return f"Formula({str(self)!r})"

    @property
    def heads(self) -> frozenset[Variable]:
        return frozenset(c.head for c in self.clauses)

    def clause_set(self) -> frozenset[Clause]:
        return frozenset(self.clauses)

    def with_clauses(self, clauses: Iterable[Clause]) -> "Formula":
        """A formula over the same universe with different clauses."""
        return Formula(clauses, self.universe)

    def without(self, clause: Clause) -> "Formula":
        return Formula((c for c in self.clauses if c != clause), self.universe)

    def heading(self, x: Variable) -> list[Clause]:
        return [c for c in self.clauses if c.head == x]


def _split_vars(text: str, multi: bool) -> list[Variable]:
    if not text:
        raise ParseError("empty variable list")
    if multi:
        names = [t.strip() for t in text.split(",")]
        for n in names:
            if not _IDENT.match(n):
                raise ParseError(f"illegal variable name {n!r}")
        return names
    for ch in text:
        if not _SINGLE_OK.match(ch):
            raise ParseError(f"illegal character {ch!r} in {text!r}")
    return list(text)


def _implications(body: list[Variable], heads: list[Variable]) -> list[Clause]:
    return [Clause(body, h) for h in dict.fromkeys(heads) if h not in body]


def parse_clause_spec(text: str, multi: bool = False) -> list[Clause]:
    """Expand one clause spec into its clauses.

    >>> [str(c) for c in parse_clause_spec("ab->cd")]
    ['ab->c', 'ab->d']
    >>> [str(c) for c in parse_clause_spec("b=d")]
    ['b->d', 'd->b']
    """
    text = text.strip()
    if "->" in text:
        parts = text.split("->")
        if len(parts) != 2:
            raise ParseError(f"malformed clause {text!r}")
        body = _split_vars(parts[0], multi)
        heads = _split_vars(parts[1], multi)
        return _implications(body, heads)
    if "=" in text:
        parts = text.split("=")
        if len(parts) != 2:
            raise ParseError(f"malformed equivalence {text!r}")
        left = _split_vars(parts[0], multi)
        right = _split_vars(parts[1], multi)
        return _implications(left, right) + _implications(right, left)
    raise ParseError(f"expected '->' or '=' in {text!r}")


def parse_formula(specs: Iterable[str], multi: bool = False,
                  universe: Iterable[Variable] = ()) -> Formula:
    clauses: list[Clause] = []
    for s in specs:
        clauses.extend(parse_clause_spec(s, multi))
    return Formula(clauses, universe)


def format_body(body: Iterable[Variable], multi: bool = False) -> str:
    return ("," if multi else "").join(sorted(body))


def format_clause(c: Clause, multi: bool = False) -> str:
    return f"{format_body(c.body, multi)}->{c.head}"


def format_formula(f: Iterable[Clause], multi: bool | None = None) -> str:
    clauses = list(f)
    if multi is None:
        multi = any(len(v) > 1 for c in clauses for v in c.variables)
    return " ".join(format_clause(c, multi) for c in clauses)


def is_single_head(f: Iterable[Clause]) -> bool:
    seen: set[Variable] = set()
    for c in f:
        if c.head in seen:
            return False
        seen.add(c.head)
    return True


def clause(text: str) -> Clause:
    """Parse exactly one clause; handy in tests and the REPL."""
    cs = parse_clause_spec(text, multi="," in text)
    if len(cs) != 1:
        raise ParseError(f"{text!r} does not denote a single clause")
    return cs[0]


def formula(*specs: str, universe: Iterable[Variable] = ()) -> Formula:
    """Build a formula from clause specs, e.g. ``formula("a->b", "b=c")``."""
    multi = any("," in s for s in specs)
    return parse_formula(specs, multi=multi, universe=universe)
