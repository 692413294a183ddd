"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from singlehead import Clause, Formula

letters = st.sampled_from("abcdef")
bodies = st.sets(letters, max_size=4)


@st.composite
def formulas(draw, max_clauses=8, alphabet="abcdef"):
    vs = st.sampled_from(alphabet)
    n = draw(st.integers(1, max_clauses))
    clauses = []
    for _ in range(n):
        head = draw(vs)
        body = draw(st.sets(vs.filter(lambda v: v != head), min_size=1, max_size=3))
        clauses.append(Clause(body, head))
    return Formula(clauses)
