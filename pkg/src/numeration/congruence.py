"""Automata recognising the representations of recognisable sets of numbers.

The automaton for ``{n : n = r mod p}`` runs the value recurrences with the
counting vector reduced modulo ``p``. A state is a pair
``(alpha(w), gamma(w) mod p)``. It is final when ``alpha(w)`` is accepting
and the reduced count dotted with the final vector is ``r`` mod ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .automata import (
    AutomatonError,
    Dfa,
    difference,
    dfa_from_table,
    empty_dfa,
    finite_language_dfa,
    minimize,
    union,
)
from .system import AnsSystem, representation


@dataclass(frozen=True)
class CongruenceSpec:
    p: int
    r: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"modulus must be >= 1, got {self.p}")
        if not 0 <= self.r < self.p:
            raise ValueError(f"residue must satisfy 0 <= r < p, got r={self.r}, p={self.p}")

    def __contains__(self, n: int) -> bool:
        return n % self.p == self.r


@dataclass(frozen=True)
class RecognizableSetSpec:
    """Union of progressions, plus ``include``, minus ``exclude``."""
    progressions: tuple[CongruenceSpec, ...] = ()
    include: frozenset = field(default_factory=frozenset)
    exclude: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "progressions", tuple(self.progressions))
        object.__setattr__(self, "include", frozenset(self.include))
        object.__setattr__(self, "exclude", frozenset(self.exclude))
        if self.include & self.exclude:
            raise ValueError(f"numbers both included and excluded: {sorted(self.include & self.exclude)}")
        if any(n < 0 for n in self.include | self.exclude):
            raise ValueError("numbers are non-negative")

    def __contains__(self, n: int) -> bool:
        if n in self.exclude:
            return False
        return n in self.include or any(n in c for c in self.progressions)


@dataclass(frozen=True)
class CongruenceAutomaton:
    """A congruence DFA together with the (alpha, delta) pair labelling each state."""
    dfa: Dfa
    labels: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def states(self) -> int:
        return self.dfa.states

    def label_strings(self) -> dict[int, str]:
        out = {}
        for s, (alpha, delta) in enumerate(self.labels):
            q = alpha.index(1) if sum(alpha) == 1 else None
            head = f"q{q}" if q is not None else "".join(map(str, alpha))
            out[s] = f"{head}:[{','.join(map(str, delta))}]"
        return out


def _build(sys: AnsSystem, spec: CongruenceSpec) -> CongruenceAutomaton:
    p, r = spec.p, spec.r
    k = sys.k
    lam = sys.rep.initial.entries
    nu = sys.rep.final.entries
    mu = {a: m.entries for a, m in sys.rep.transition.items()}
    below = {a: m.entries for a, m in sys.sigma_below.items()}
    sigma = sys.sigma.entries

    def times(v, m):
        acc = [0] * k
        for x, row in zip(v, m):
            if x:
                for j, y in enumerate(row):
                    if y:
                        acc[j] += x * y
        return acc

    start = (tuple(lam), (0,) * k)
    index = {start: 0}
    order = [start]
    table = {}
    i = 0
    while i < len(order):
        alpha, delta = order[i]
        carried = times(delta, sigma)
        for a in sys.alphabet:
            nxt_alpha = tuple(times(alpha, mu[a]))
            if not any(nxt_alpha):
                continue  # no computation survives: the missing transition is the sink
            beta = times(alpha, below[a])
            nxt_delta = tuple((l + b + c) % p for l, b, c in zip(lam, beta, carried))
            key = (nxt_alpha, nxt_delta)
            if key not in index:
                index[key] = len(order)
                order.append(key)
            table[i, a] = index[key]
        i += 1

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    finals = {s for s, (alpha, delta) in enumerate(order)
              if dot(alpha, nu) == 1 and dot(delta, nu) % p == r}
    dfa = dfa_from_table(sys.alphabet, table, 0, finals, len(order))
    return CongruenceAutomaton(dfa, tuple(order))


def congruence_automaton(sys: AnsSystem, spec: CongruenceSpec) -> CongruenceAutomaton:
    """Like :func:`congruence_dfa_unambiguous` but keeps the state labels."""
    return _build(sys, spec)


def congruence_dfa(sys: AnsSystem, spec: CongruenceSpec) -> Dfa:
    """Reachable congruence DFA for a deterministic system; at most ``k p^k`` states."""
    if not sys.is_deterministic:
        raise AutomatonError("system automaton is not deterministic; use congruence_dfa_unambiguous")
    built = _build(sys, spec)
    bound = sys.k * spec.p ** sys.k
    assert built.states <= bound, (built.states, bound)
    return built.dfa


def congruence_dfa_unambiguous(sys: AnsSystem, spec: CongruenceSpec) -> Dfa:
    """Same construction for any unambiguous system; at most ``2^k p^k`` states."""
    built = _build(sys, spec)
    bound = 2 ** sys.k * spec.p ** sys.k
    assert built.states <= bound, (built.states, bound)
    return built.dfa


def _any_congruence_dfa(sys: AnsSystem, spec: CongruenceSpec) -> Dfa:
    if sys.is_deterministic:
        return congruence_dfa(sys, spec)
    return congruence_dfa_unambiguous(sys, spec)


def recognizable_set_dfa(sys: AnsSystem, spec: RecognizableSetSpec) -> Dfa:
    """Minimal DFA of the representations of a recognisable set of numbers."""
    parts = [_any_congruence_dfa(sys, c) for c in spec.progressions]
    if spec.include:
        parts.append(finite_language_dfa((representation(sys, n) for n in sorted(spec.include)),
                                         sys.alphabet))
    if not parts:
        return empty_dfa(sys.alphabet)
    result = union(*parts) if len(parts) > 1 else parts[0]
    if spec.exclude:
        result = difference(result, finite_language_dfa(
            (representation(sys, n) for n in sorted(spec.exclude)), sys.alphabet))
    return minimize(result)


def progressions(pairs: Iterable[tuple[int, int]]) -> tuple[CongruenceSpec, ...]:
    """Specs from (modulus, residue) pairs, with residues reduced modulo the modulus."""
    return tuple(CongruenceSpec(p, r % p if p >= 1 else r) for p, r in pairs)
