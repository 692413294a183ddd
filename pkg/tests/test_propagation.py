import random

import pytest
from hypothesis import given, settings

from singlehead import (
    Clause,
    Formula,
    PropagationIndex,
    bcn,
    entails,
    entails_clause,
    entails_formula,
    equivalent,
    formula,
    rcnucl,
)

from strategies import bodies, formulas
from oracles import definitional_rcn, definitional_ucl, random_formula, tt_bcn, tt_equivalent


def test_rcnucl_minimal_set_example():
    f = formula("ab->d", "ad->b", "bd->a", "d->x")
    r = rcnucl("ab", f)
    assert r.h == {"a", "b", "d", "x"}
    assert r.h == definitional_rcn(f, "ab")


def test_rcnucl_empty_given_set():
    r = rcnucl(set(), formula("a->b"))
    assert r.h == set() and r.u == ()


def test_rcnucl_chain():
    f = formula("a->b", "b->c", "d->e")
    r = rcnucl("a", f)
    assert r.h == {"b", "c"}
    assert set(r.u) == {Clause("a", "b"), Clause("b", "c")}
    # frozen values agree with the truth-table oracle
    assert r.h == definitional_rcn(f, "a")
    assert set(r.u) == definitional_ucl(f, "a")


def test_rcnucl_keeps_input_order_of_used_clauses():
    f = formula("b->c", "c->d", "a->b")
    assert [str(c) for c in rcnucl("a", f).u] == ["b->c", "c->d", "a->b"]


def test_rcnucl_variables_outside_universe_are_inert():
    f = formula("a->b")
    assert rcnucl("az", f).h == {"b"}
    assert bcn("z", f) == {"z"}


def test_empty_body_clauses_fire():
    f = Formula([Clause((), "a"), Clause("a", "b")])
    assert rcnucl((), f).h == {"a", "b"}


def test_bcn_examples():
    assert bcn("ab", formula("ab->x", "bx->c", "ac->d", "d->x")) == set("abxcd")
    assert bcn("c", formula("a->b", "b->c", "c->b")) == {"c", "b"}
    assert bcn("a", formula("ab->d", "ad->b", "bd->a", "d->x")) == {"a"}


def test_entails_clause_examples():
    assert entails_clause(formula("a->b", "b->c"), Clause("a", "c"))
    assert entails(Formula(), "a", "a")
    assert entails_clause(formula("ab->x", "bx->c", "ac->d", "d->x"), Clause("ab", "d"))


def test_entails_formula_examples():
    assert entails_formula(formula("a->b", "b->c"), formula("a->c"))
    assert entails_formula(formula("a->b"), Formula())
    assert not entails_formula(formula("a->b"), formula("b->a"))


def test_equivalent_examples():
    assert equivalent(formula("a->b", "b->c", "a->c"), formula("a->b", "b->c"))
    assert equivalent(formula("a->b", "b->a", "b->c", "c->b"), formula("a->b", "b->c", "c->a"))
    assert not equivalent(formula("a->b"), formula("b->a"))


def test_index_counters_after_saturation():
    f = formula("ab->c", "c->d", "de->f", "a->e")
    index = PropagationIndex(f.clauses)
    h, fired = index.saturate("a")
    known = set("a") | h
    for i, c in enumerate(f.clauses):
        assert index.remaining[i] == len(c.body - known)
        assert (index.remaining[i] == 0) == (i in fired)


# -- properties --------------------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(formulas(), bodies)
def test_rcnucl_matches_definitions(f, b):
    r = rcnucl(b, f)
    assert r.h == definitional_rcn(f, b)
    assert set(r.u) == definitional_ucl(f, b)


@settings(max_examples=300, deadline=None)
@given(formulas(), bodies)
def test_bcn_is_given_plus_real_consequences(f, b):
    assert bcn(b, f) == frozenset(b) | rcnucl(b, f).h
    assert bcn(b, f) == tt_bcn(f, b)


@settings(max_examples=200, deadline=None)
@given(formulas(), bodies)
def test_use_clause_law(f, b):
    closure = bcn(b, f)
    h = rcnucl(b, f).h
    for x in f.universe:
        assert (x in h) == any(c.head == x and c.body <= closure for c in f)


@settings(max_examples=200, deadline=None)
@given(formulas(), formulas(), bodies)
def test_monotone_in_formula(f, g, b):
    bigger = Formula(f.clauses + g.clauses)
    assert rcnucl(b, f).h <= rcnucl(b, bigger).h


@settings(max_examples=200, deadline=None)
@given(formulas(), bodies)
def test_replay_on_used_clauses(f, b):
    r = rcnucl(b, f)
    again = rcnucl(b, r.u)
    assert again.h == r.h
    assert set(again.u) == set(r.u)


def test_equivalent_agrees_with_truth_tables():
    rng = random.Random(7)
    for _ in range(300):
        f = random_formula(rng, 5, 6)
        g = random_formula(rng, 5, 6)
        assert equivalent(f, g) == tt_equivalent(f, g)
        assert equivalent(f, f.clauses[::-1])
