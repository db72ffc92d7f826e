"""Rational abstract numeration systems realised as weighted automata."""
from .automata import (
    Dfa,
    Nfa,
    OrderedAlphabet,
    determinize,
    is_infinite,
    is_unambiguous,
    load_automaton,
    minimize,
    to_linear_representation,
)
from .congruence import (
    CongruenceSpec,
    RecognizableSetSpec,
    congruence_dfa,
    congruence_dfa_unambiguous,
    recognizable_set_dfa,
)
from .decision import equivalent, is_enumerating_series, is_zero, subtract, support_dfa
from .exactalg import Matrix, Semiring, Vector
from .regex import parse_regex
from .series import LinearRepresentation, hadamard, series_coefficient
from .system import (
    AnsSystem,
    enumerate_words,
    enumerating_series,
    new_ans,
    radix_cmp,
    representation,
    value,
    value_trace,
)

__all__ = [
    "AnsSystem", "CongruenceSpec", "Dfa", "LinearRepresentation", "Matrix", "Nfa",
    "OrderedAlphabet", "RecognizableSetSpec", "Semiring", "Vector",
    "congruence_dfa", "congruence_dfa_unambiguous", "determinize", "enumerate_words",
    "enumerating_series", "equivalent", "hadamard", "is_enumerating_series", "is_infinite",
    "is_unambiguous", "is_zero", "load_automaton", "minimize", "new_ans", "parse_regex",
    "radix_cmp", "recognizable_set_dfa", "representation", "series_coefficient", "subtract",
    "support_dfa", "to_linear_representation", "value", "value_trace",
]
