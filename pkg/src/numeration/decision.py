"""Zero-testing and equivalence of series, and recognition of enumerating series.

A series given by an N-representation is an enumerating series exactly when
it equals the enumerating series rebuilt from its own support. Both
comparisons reduce to deciding whether a Z-rational series is zero, which
is done over Q by spanning the reachable row space.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import Dfa, Nfa, is_infinite, minimize
from .exactalg import (
    Semiring,
    SemiringError,
    RowEchelon,
    Scalar,
    Vector,
    direct_sum,
    join,
    vec_mat,
)
from .series import LinearRepresentation
from .system import enumerating_series, new_ans

DEFAULT_WITNESS_DEPTH = 12


def support_dfa(s: LinearRepresentation) -> Dfa:
    """Minimal DFA of the words with nonzero coefficient in an N-series.

    Without cancellation, a word has a nonzero coefficient iff it labels a
    path of nonzero weights, so the support is the language of the
    underlying Boolean automaton.
    """
    if s.semiring is not Semiring.N:
        raise SemiringError(f"support is only computed for N-series, not {s.semiring.value}")
    n = s.dimension
    transitions = {(p, a, q) for a, m in s.transition.items()
                   for p, row in enumerate(m.entries) for q, x in enumerate(row) if x}
    boolean = Nfa(n, s.alphabet, transitions,
                  {p for p, x in enumerate(s.initial) if x},
                  {q for q, x in enumerate(s.final) if x})
    return minimize(boolean)


def subtract(s1: LinearRepresentation, s2: LinearRepresentation) -> LinearRepresentation:
    """Representation of s1 - s2 by direct sum, over Z (or Q if either input is over Q)."""
    if s1.alphabet != s2.alphabet:
        raise ValueError("cannot subtract series over different alphabets")
    sr = join(Semiring.Z, s1.semiring, s2.semiring)
    a, b = s1.to_semiring(sr), s2.to_semiring(sr)
    return LinearRepresentation(
        a.alphabet,
        Vector("row", a.initial.entries + (-b.initial).entries, sr),
        {x: direct_sum(a.transition[x], b.transition[x]) for x in a.alphabet},
        Vector("column", a.final.entries + b.final.entries, sr),
    )


def is_zero(s: LinearRepresentation) -> bool:
    """True iff every coefficient of ``s`` is zero.

    Spans the vectors ``initial . M(w)`` breadth-first, only extending from
    vectors that enlarged the span, so at most ``dimension`` of them are
    ever expanded. The series is zero iff each spanning vector is
    annihilated by ``final``.
    """
    q = s.to_semiring(Semiring.Q)
    basis = RowEchelon(q.dimension)
    queue = [q.initial]
    while queue:
        v = queue.pop(0)
        if not basis.add(v.entries):
            continue
        if sum(x * y for x, y in zip(v.entries, q.final.entries)):
            return False
        queue.extend(vec_mat(v, m) for m in q.transition.values())
    return True


def equivalent(s1: LinearRepresentation, s2: LinearRepresentation) -> bool:
    return is_zero(subtract(s1, s2))


@dataclass(frozen=True)
class EnumVerdict:
    """Outcome of :func:`is_enumerating_series`.

    On a negative answer ``witness`` is the radix-smallest word whose
    coefficient differs from the enumerating series of the support, when
    one exists within the search depth. ``expected`` and ``actual`` are
    the coefficients of that word in the enumerating series and in the input.
    """
    is_enumerating: bool
    reason: str = ""
    witness: str | None = None
    expected: Scalar | None = None
    actual: Scalar | None = None

    def __bool__(self):
        return self.is_enumerating


def first_difference(s1: LinearRepresentation, s2: LinearRepresentation, max_length: int):
    """Radix-first word of length <= ``max_length`` where the two series differ, or None."""
    if s1.alphabet != s2.alphabet:
        raise ValueError("alphabet mismatch")
    level = [("", s1.initial, s2.initial)]
    for length in range(max_length + 1):
        for w, v1, v2 in level:
            c1 = sum(x * y for x, y in zip(v1.entries, s1.final.entries))
            c2 = sum(x * y for x, y in zip(v2.entries, s2.final.entries))
            if c1 != c2:
                return w, c1, c2
        if length == max_length:
            break
        level = [(w + a, vec_mat(v1, s1.transition[a]), vec_mat(v2, s2.transition[a]))
                 for w, v1, v2 in level for a in s1.alphabet]
    return None


def is_enumerating_series(s: LinearRepresentation, depth: int = DEFAULT_WITNESS_DEPTH) -> EnumVerdict:
    """Decide whether ``s`` is the enumerating series of its own support."""
    if s.semiring is not Semiring.N:
        raise SemiringError(f"expected an N-series, got {s.semiring.value}")
    support = support_dfa(s)
    if not is_infinite(support):
        return EnumVerdict(False, "finite support")
    expected = enumerating_series(new_ans(support)).final_rep
    if equivalent(s, expected):
        return EnumVerdict(True)
    hit = first_difference(expected, s, depth)
    if hit is None:
        return EnumVerdict(False, "mismatch beyond search depth")
    w, e, a = hit
    return EnumVerdict(False, "coefficient mismatch", w, e, a)
