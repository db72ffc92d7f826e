"""Abstract numeration systems built on a rational language.

Integer ``n`` is represented by the ``(n+1)``-th word of the language in
radix order. Values are computed with three running row vectors of the
automaton's dimension ``k``:

* ``alpha(w) = initial . M(w)``, the state reached (a 0/1 vector);
* ``beta(wa) = alpha(w) . S_a`` where ``S_a`` sums the matrices of the letters below ``a``;
* ``gamma(wa) = initial + beta(wa) + gamma(w) . S`` where ``S`` sums all letter matrices.

``gamma(w) . final`` counts the words of the language smaller than ``w``,
at a cost of O(|w| k^2) integer operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .automata import (
    AutomatonError,
    Dfa,
    Nfa,
    OrderedAlphabet,
    is_infinite,
    is_unambiguous,
    minimize,
    to_linear_representation,
)
from .exactalg import Matrix, Semiring, Vector, block, dot, mat_vec, vec_mat
from .series import LinearRepresentation, hadamard

LESS, EQUAL, GREATER = -1, 0, 1


class FiniteLanguageError(AutomatonError):
    """The language is finite (or empty) and so defines no numeration system."""


class NotInLanguageError(ValueError):
    pass


class RankingConsistencyError(RuntimeError):
    """Counted and consumed ranks disagree; indicates a corrupted system."""


def radix_cmp(u: str, v: str, alphabet: OrderedAlphabet) -> int:
    alphabet.check_word(u)
    alphabet.check_word(v)
    if len(u) != len(v):
        return LESS if len(u) < len(v) else GREATER
    for a, b in zip(u, v):
        if a != b:
            return LESS if alphabet.index(a) < alphabet.index(b) else GREATER
    return EQUAL


def radix_key(alphabet: OrderedAlphabet):
    """Sort key realising the radix order."""
    def key(w: str):
        return len(w), tuple(alphabet.index(a) for a in w)
    return key


@dataclass(frozen=True)
class AnsSystem:
    alphabet: OrderedAlphabet
    automaton: Nfa
    rep: LinearRepresentation
    sigma: Matrix                     # sum of all letter matrices
    sigma_below: Mapping[str, Matrix]  # letter -> sum of matrices of strictly smaller letters

    def __hash__(self):
        return hash((self.alphabet, self.automaton))

    @property
    def k(self) -> int:
        return self.rep.dimension

    @property
    def is_deterministic(self) -> bool:
        return isinstance(self.automaton, Dfa)

    def __contains__(self, w: str) -> bool:
        return self.automaton.accepts(w)

    def value(self, w: str) -> int:
        return value(self, w)

    def representation(self, n: int) -> str:
        return representation(self, n)

    def enumerate(self, start: int = 0, count: int = 10) -> list[str]:
        return enumerate_words(self, start, count)


def new_ans(language: Nfa, alphabet: OrderedAlphabet | None = None, minimal: bool = True) -> AnsSystem:
    """Validate ``language`` and precompute everything the queries need.

    With ``minimal=True`` (the default) the automaton is replaced by its
    minimal DFA. Otherwise it is only trimmed and must be unambiguous.
    """
    if alphabet is not None and alphabet != language.alphabet:
        raise AutomatonError(
            f"automaton alphabet {str(language.alphabet)!r} differs from {str(alphabet)!r}")
    alphabet = language.alphabet
    if minimal:
        aut = minimize(language)
        if not aut.finals:
            raise FiniteLanguageError("the language is empty")
    else:
        aut = language.trim()
        if not aut.states:
            raise FiniteLanguageError("the language is empty")
        if not is_unambiguous(aut):
            raise AutomatonError("automaton is ambiguous")
        if aut.is_deterministic:
            aut = aut.as_dfa()
    if not is_infinite(aut):
        raise FiniteLanguageError("the language is finite; a numeration system needs an infinite language")
    rep = to_linear_representation(aut, check=False)
    sigma = rep.letter_sum()
    below = {a: rep.letter_sum(alphabet.below(a)) for a in alphabet}
    return AnsSystem(alphabet, aut, rep, sigma, below)


# ---------------------------------------------------------------------------
# value

@dataclass(frozen=True)
class TraceRow:
    i: int
    letter: str | None
    alpha: tuple
    beta: tuple
    gamma: tuple


@dataclass(frozen=True)
class ValueTrace:
    word: str
    rows: tuple[TraceRow, ...]
    accepted: bool
    value: int | None

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i) -> TraceRow:
        return self.rows[i]

    def table(self, epsilon: str = "") -> str:
        def vec(v):
            return "(" + ",".join(map(str, v)) + ")"
        lines = ["i\ta_i\talpha_i\tbeta_i\tgamma_i"]
        for r in self.rows:
            lines.append(f"{r.i}\t{r.letter or epsilon}\t{vec(r.alpha)}\t{vec(r.beta)}\t{vec(r.gamma)}")
        return "\n".join(lines)


def _steps(sys: AnsSystem, w: str):
    lam = sys.rep.initial
    alpha, beta, gamma = lam, lam, Vector.zeros(sys.k)
    yield None, alpha, beta, gamma
    for a in sys.alphabet.check_word(w):
        beta = vec_mat(alpha, sys.sigma_below[a])
        gamma = lam + beta + vec_mat(gamma, sys.sigma)
        alpha = vec_mat(alpha, sys.rep.transition[a])
        yield a, alpha, beta, gamma


def value_trace(sys: AnsSystem, w: str) -> ValueTrace:
    rows = []
    for i, (a, alpha, beta, gamma) in enumerate(_steps(sys, w)):
        rows.append(TraceRow(i, a, alpha.entries, beta.entries, gamma.entries))
    last = rows[-1]
    nu = sys.rep.final.entries
    accepted = sum(x * y for x, y in zip(last.alpha, nu)) == 1
    val = sum(x * y for x, y in zip(last.gamma, nu)) if accepted else None
    return ValueTrace(w, tuple(rows), accepted, val)


def value(sys: AnsSystem, w: str) -> int:
    """Rank of ``w`` in the language (0-based, radix order)."""
    for _, alpha, _, gamma in _steps(sys, w):
        pass
    if dot(alpha, sys.rep.final) != 1:
        raise NotInLanguageError(f"word {w!r} is not in the language")
    return dot(gamma, sys.rep.final)


def rank_below(sys: AnsSystem, w: str) -> int:
    """Number of words of the language strictly smaller than ``w``; defined for every ``w``."""
    for _, _, _, gamma in _steps(sys, w):
        pass
    return dot(gamma, sys.rep.final)


# ---------------------------------------------------------------------------
# representation (unranking) and enumeration

def _completion_columns(sys: AnsSystem):
    """Yield S^l . final for l = 0, 1, 2, ..."""
    col = sys.rep.final
    while True:
        yield col
        col = mat_vec(sys.sigma, col)


def representation(sys: AnsSystem, n: int) -> str:
    """The word of value ``n``.

    Finds the length first by accumulating per-length word counts, then
    fixes letters left to right, skipping over the blocks of completions
    that start with smaller letters.
    """
    if n < 0:
        raise ValueError("numbers are non-negative")
    lam = sys.rep.initial
    cols = []
    remaining = n
    for col in _completion_columns(sys):
        cols.append(col)
        c = dot(lam, col)
        if remaining < c:
            break
        remaining -= c
    length = len(cols) - 1
    word = []
    alpha = lam
    for i in range(length):
        tail = cols[length - i - 1]
        for a in sys.alphabet:
            nxt = vec_mat(alpha, sys.rep.transition[a])
            c = dot(nxt, tail)
            if remaining < c:
                word.append(a)
                alpha = nxt
                break
            remaining -= c
        else:
            raise RankingConsistencyError(f"no letter fits at position {i} while unranking {n}")
    if remaining != 0 or dot(alpha, sys.rep.final) != 1:
        raise RankingConsistencyError(f"unranking {n} ended outside the language")
    return "".join(word)


def enumerate_words(sys: AnsSystem, start: int, count: int) -> list[str]:
    return [representation(sys, n) for n in range(start, start + count)]


# ---------------------------------------------------------------------------
# enumerating series

@dataclass(frozen=True)
class EnumeratorRep:
    """Block representation counting smaller words, and the enumerating series.

    ``eta . kappa(u) . zeta`` is the number of words of the language smaller
    than ``u``; swapping ``zeta`` for ``xi`` adds one. ``product_rep`` is the
    Hadamard product of ``(eta, kappa, xi)`` with the characteristic series,
    of dimension ``(2k+1) k``; ``final_rep`` is its trimmed form.
    """
    eta: Vector
    kappa: Mapping[str, Matrix]
    zeta: Vector
    xi: Vector
    counting_rep: LinearRepresentation   # (eta, kappa, zeta)
    shifted_rep: LinearRepresentation    # (eta, kappa, xi)
    product_rep: LinearRepresentation
    final_rep: LinearRepresentation

    @property
    def pre_trim_dimension(self) -> int:
        return self.product_rep.dimension


def enumerating_series(sys: AnsSystem) -> EnumeratorRep:
    k = sys.k
    rep = sys.rep
    N = Semiring.N
    one = Matrix.identity(1, N)

    def row(v: Vector) -> Matrix:
        return Matrix(1, len(v), (v.entries,), N)

    def col(v: Vector) -> Matrix:
        return Matrix(len(v), 1, tuple((x,) for x in v.entries), N)

    z1k, zk1, zkk = Matrix.zero(1, k), Matrix.zero(k, 1), Matrix.zero(k, k)
    lam = rep.initial
    eta = Vector.row((1,) + lam.entries + (0,) * k)
    kappa = {
        a: block([
            [one, z1k, row(lam)],
            [zk1, rep.transition[a], sys.sigma_below[a]],
            [zk1, zkk, sys.sigma],
        ])
        for a in sys.alphabet
    }
    zeta = Vector.column((0,) * (k + 1) + rep.final.entries)
    xi = Vector.column((1,) + (0,) * k + rep.final.entries)
    counting = LinearRepresentation(sys.alphabet, eta, kappa, zeta)
    shifted = LinearRepresentation(sys.alphabet, eta, kappa, xi)
    prod = hadamard(shifted, rep)
    return EnumeratorRep(eta, kappa, zeta, xi, counting, shifted, prod, prod.trim())
