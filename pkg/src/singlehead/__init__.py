"""Single-head normalization of definite Horn formulae and fast forgetting."""

from .forgetting import ForgetResult, UnforgettableVariable, forget_fast, forget_oracle, forget_replace
from .horn import (
    Clause,
    Formula,
    HornError,
    ParseError,
    TautologyError,
    Variable,
    clause,
    format_clause,
    format_formula,
    formula,
    is_single_head,
    parse_clause_spec,
    parse_formula,
)
from .order import OrderRelation, compare, leq
from .propagation import (
    PropagationIndex,
    RcnResult,
    bcn,
    entails,
    entails_clause,
    entails_formula,
    equivalent,
    rcnucl,
)
from .shmin import (
    PreconditionViolated,
    ShminOutcome,
    ShminTraceEntry,
    disprove_single_head_equivalence,
    shmin,
    shmin_restarts,
)
from .structure import (
    CapExceeded,
    DirectedGraph,
    NotSyntacticallyAcyclic,
    check_condition_one,
    check_condition_two,
    decide_acyclic_single_head_equivalence,
    has_nontrivial_cycle,
    is_inequivalent,
    is_semantically_acyclic,
    min_formula,
    prime_implicates,
    reduce_irredundant,
    semantic_graph,
    syntactic_graph,
    transitive_closure,
)

__version__ = "0.1.0"
