"""Boolean finite automata over totally ordered alphabets.

Automata are immutable. States are the integers ``0 .. states-1``. A
:class:`Dfa` is an :class:`Nfa` with one initial state and at most one
successor per (state, letter); partial transition functions are allowed and
nothing is ever completed with a sink state.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .exactalg import Matrix, Semiring, Vector, dot, vec_mat


class AutomatonError(ValueError):
    pass


class AmbiguousAutomatonError(AutomatonError):
    pass


@dataclass(frozen=True)
class OrderedAlphabet:
    """Letters listed in increasing order; ``index(a) < index(b)`` iff ``a < b``."""
    letters: tuple[str, ...]

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters!r}")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1 or a.isspace():
                raise ValueError(f"letters must be single visible characters, got {a!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "OrderedAlphabet":
        """``"ab"`` or ``"a b"`` or ``"a,b"`` all mean a < b."""
        if any(c in text for c in " ,"):
            return cls(t for t in text.replace(",", " ").split())
        return cls(text)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.letters)}

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise ValueError(f"letter {a!r} is not in the alphabet {''.join(self.letters)!r}") from None

    def __contains__(self, a) -> bool:
        return a in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def below(self, a: str) -> tuple[str, ...]:
        """Letters strictly smaller than ``a``."""
        return self.letters[: self.index(a)]

    def check_word(self, w: str) -> str:
        for c in w:
            self.index(c)
        return w

    def words(self, length: int) -> Iterator[str]:
        """All words of the given length, in radix (here: lexicographic) order."""
        for t in product(self.letters, repeat=length):
            yield "".join(t)

    def words_up_to(self, max_length: int) -> Iterator[str]:
        for n in range(max_length + 1):
            yield from self.words(n)

    def __str__(self):
        return "".join(self.letters)


@dataclass(frozen=True)
class Nfa:
    states: int
    alphabet: OrderedAlphabet
    transitions: frozenset  # of (p, letter, q)
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        for p, a, q in self.transitions:
            if not (0 <= p < self.states and 0 <= q < self.states):
                raise AutomatonError(f"transition ({p}, {a}, {q}) references a missing state")
            if a not in self.alphabet:
                raise AutomatonError(f"transition letter {a!r} not in alphabet")
        for s in self.initials | self.finals:
            if not 0 <= s < self.states:
                raise AutomatonError(f"state {s} out of range")

    @cached_property
    def successors(self) -> dict[tuple[int, str], tuple[int, ...]]:
        out: dict[tuple[int, str], list[int]] = {}
        for p, a, q in self.transitions:
            out.setdefault((p, a), []).append(q)
        return {k: tuple(sorted(v)) for k, v in out.items()}

    def step(self, current: Iterable[int], a: str) -> frozenset:
        succ = self.successors
        return frozenset(q for p in current for q in succ.get((p, a), ()))

    def accepts(self, w: str) -> bool:
        current = self.initials
        for a in w:
            current = self.step(current, a)
            if not current:
                return False
        return bool(current & self.finals)

    @property
    def is_deterministic(self) -> bool:
        return len(self.initials) == 1 and all(len(v) == 1 for v in self.successors.values())

    def as_dfa(self) -> "Dfa":
        if not self.is_deterministic:
            raise AutomatonError("automaton is not deterministic")
        return Dfa(self.states, self.alphabet, self.transitions, self.initials, self.finals)

    def accessible(self) -> set[int]:
        seen = set(self.initials)
        todo = list(seen)
        while todo:
            p = todo.pop()
            for a in self.alphabet:
                for q in self.successors.get((p, a), ()):
                    if q not in seen:
                        seen.add(q)
                        todo.append(q)
        return seen

    def coaccessible(self) -> set[int]:
        back: dict[int, set[int]] = {}
        for p, _, q in self.transitions:
            back.setdefault(q, set()).add(p)
        seen = set(self.finals)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for p in back.get(q, ()):
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
        return seen

    def useful_states(self) -> set[int]:
        return self.accessible() & self.coaccessible()

    def restrict(self, keep: Iterable[int]) -> "Nfa":
        """Sub-automaton on ``keep``, renumbered in increasing order of old index."""
        order = sorted(set(keep))
        new = {s: i for i, s in enumerate(order)}
        nfa = Nfa(
            len(order), self.alphabet,
            {(new[p], a, new[q]) for p, a, q in self.transitions if p in new and q in new},
            {new[s] for s in self.initials if s in new},
            {new[s] for s in self.finals if s in new},
        )
        if isinstance(self, Dfa) and len(nfa.initials) == 1:
            return nfa.as_dfa()
        return nfa

    def trim(self) -> "Nfa":
        return self.restrict(self.useful_states())


@dataclass(frozen=True)
class Dfa(Nfa):
    def __post_init__(self):
        super().__post_init__()
        if len(self.initials) != 1:
            raise AutomatonError("a DFA has exactly one initial state")
        if any(len(v) > 1 for v in self.successors.values()):
            raise AutomatonError("transition function is not deterministic")

    @property
    def initial(self) -> int:
        return next(iter(self.initials))

    @cached_property
    def delta(self) -> dict[tuple[int, str], int]:
        return {(p, a): q for p, a, q in self.transitions}

    def run(self, w: str, start: int | None = None) -> int | None:
        s = self.initial if start is None else start
        for a in w:
            s = self.delta.get((s, a))
            if s is None:
                return None
        return s

    def accepts(self, w: str) -> bool:
        s = self.run(w)
        return s is not None and s in self.finals


def empty_dfa(alphabet: OrderedAlphabet) -> Dfa:
    """The DFA of the empty language: one non-final state, no transitions."""
    return Dfa(1, alphabet, frozenset(), frozenset({0}), frozenset())


def dfa_from_table(alphabet: OrderedAlphabet, table: dict[tuple[int, str], int],
                   initial: int, finals: Iterable[int], states: int | None = None) -> Dfa:
    if states is None:
        used = {initial, *finals, *(p for p, _ in table), *table.values()}
        states = max(used) + 1
    return Dfa(states, alphabet, frozenset((p, a, q) for (p, a), q in table.items()),
               frozenset({initial}), frozenset(finals))


def determinize(n: Nfa) -> Dfa:
    """Subset construction; only subsets reachable from the initial set are built."""
    start = frozenset(n.initials)
    index = {start: 0}
    order = [start]
    table: dict[tuple[int, str], int] = {}
    i = 0
    while i < len(order):
        subset = order[i]
        for a in n.alphabet:
            target = n.step(subset, a)
            if not target:
                continue
            if target not in index:
                index[target] = len(order)
                order.append(target)
            table[i, a] = index[target]
        i += 1
    finals = {index[s] for s in order if s & n.finals}
    return dfa_from_table(n.alphabet, table, 0, finals, len(order))


def canonical(d: Dfa) -> Dfa:
    """Renumber accessible states breadth-first, exploring letters in alphabet order."""
    new = {d.initial: 0}
    queue = deque([d.initial])
    while queue:
        p = queue.popleft()
        for a in d.alphabet:
            q = d.delta.get((p, a))
            if q is not None and q not in new:
                new[q] = len(new)
                queue.append(q)
    table = {(new[p], a): new[q] for (p, a), q in d.delta.items() if p in new}
    return dfa_from_table(d.alphabet, table, 0, {new[s] for s in d.finals if s in new}, len(new))


def minimize(d: Dfa | Nfa) -> Dfa:
    """Minimal trim DFA of the language, canonically numbered.

    The empty language yields :func:`empty_dfa`. Equivalent states are found by
    Moore refinement on the trimmed automaton, where a missing transition is
    its own class (every remaining state is co-accessible, so no real state
    is equivalent to the missing sink).
    """
    if not isinstance(d, Dfa):
        d = determinize(d)
    useful = d.useful_states()
    if d.initial not in useful:
        return empty_dfa(d.alphabet)
    d = d.restrict(useful)
    letters = d.alphabet.letters
    cls = [1 if s in d.finals else 0 for s in range(d.states)]
    nclasses = len(set(cls))
    while True:
        sigs = {}
        new = []
        for s in range(d.states):
            sig = (cls[s],) + tuple(
                cls[t] if (t := d.delta.get((s, a))) is not None else -1 for a in letters)
            new.append(sigs.setdefault(sig, len(sigs)))
        cls = new
        if len(sigs) == nclasses:
            break
        nclasses = len(sigs)
    table = {(cls[p], a): cls[q] for (p, a), q in d.delta.items()}
    quotient = dfa_from_table(d.alphabet, table, cls[d.initial],
                              {cls[s] for s in d.finals}, nclasses)
    return canonical(quotient)


def is_unambiguous(n: Nfa) -> bool:
    """True iff no word labels two distinct accepting computations.

    Builds the self-product of the trim part; the automaton is ambiguous
    exactly when some off-diagonal pair (p, q), p != q, is both accessible
    and co-accessible in that product.
    """
    t = n.trim()
    if not t.states:
        return True
    pairs = {}
    trans = set()
    start = [(p, q) for p in t.initials for q in t.initials]
    todo = list(start)
    seen = set(start)
    while todo:
        p, q = todo.pop()
        for a in t.alphabet:
            for p2 in t.successors.get((p, a), ()):
                for q2 in t.successors.get((q, a), ()):
                    trans.add(((p, q), (p2, q2)))
                    if (p2, q2) not in seen:
                        seen.add((p2, q2))
                        todo.append((p2, q2))
    back: dict = {}
    for src, dst in trans:
        back.setdefault(dst, set()).add(src)
    co = {(p, q) for (p, q) in seen if p in t.finals and q in t.finals}
    todo = list(co)
    while todo:
        x = todo.pop()
        for y in back.get(x, ()):
            if y not in co:
                co.add(y)
                todo.append(y)
    return all(p == q for (p, q) in co)


def is_infinite(n: Nfa) -> bool:
    """True iff the trim part of the automaton has a cycle."""
    t = n.trim()
    adj: dict[int, set[int]] = {}
    for p, _, q in t.transitions:
        adj.setdefault(p, set()).add(q)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * t.states
    for root in range(t.states):
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(adj.get(root, ())))]
        while stack:
            p, it = stack[-1]
            for q in it:
                if colour[q] == GREY:
                    return True
                if colour[q] == WHITE:
                    colour[q] = GREY
                    stack.append((q, iter(adj.get(q, ()))))
                    break
            else:
                colour[p] = BLACK
                stack.pop()
    return False


def is_empty(n: Nfa) -> bool:
    return not (n.accessible() & n.finals)


# ---------------------------------------------------------------------------
# Boolean combinations of DFAs (product construction over partial automata)

def product(dfas: Sequence[Dfa], accept) -> Dfa:
    """Reachable product of ``dfas``; ``accept`` maps a tuple of memberships to a bool.

    Missing transitions are tracked as ``None`` components so partial DFAs
    combine correctly under union and difference.
    """
    alphabet = dfas[0].alphabet
    for d in dfas:
        if d.alphabet != alphabet:
            raise AutomatonError("alphabet mismatch in product")
    start = tuple(d.initial for d in dfas)
    index = {start: 0}
    order = [start]
    table = {}
    i = 0
    while i < len(order):
        tup = order[i]
        for a in alphabet:
            nxt = tuple(None if s is None else d.delta.get((s, a)) for s, d in zip(tup, dfas))
            if all(s is None for s in nxt):
                continue
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            table[i, a] = index[nxt]
        i += 1
    finals = {index[t] for t in order
              if accept(tuple(s is not None and s in d.finals for s, d in zip(t, dfas)))}
    return dfa_from_table(alphabet, table, 0, finals, len(order))


def union(*dfas: Dfa) -> Dfa:
    return product(dfas, any)


def intersection(*dfas: Dfa) -> Dfa:
    return product(dfas, all)


def difference(a: Dfa, b: Dfa) -> Dfa:
    return product((a, b), lambda m: m[0] and not m[1])


def finite_language_dfa(words: Iterable[str], alphabet: OrderedAlphabet) -> Dfa:
    """Trie automaton of a finite set of words."""
    table: dict[tuple[int, str], int] = {}
    finals = set()
    nstates = 1
    for w in words:
        s = 0
        for a in alphabet.check_word(w):
            nxt = table.get((s, a))
            if nxt is None:
                nxt = table[s, a] = nstates
                nstates += 1
            s = nxt
        finals.add(s)
    return dfa_from_table(alphabet, table, 0, finals, nstates)


def equivalent_languages(a: Nfa, b: Nfa) -> bool:
    return minimize(a) == minimize(b)


# ---------------------------------------------------------------------------
# Linear representations of Boolean automata

def to_linear_representation(n: Nfa, check: bool = True):
    """Characteristic N-representation of an unambiguous automaton.

    The coefficient of ``w`` counts accepting computations, so it is 1 on the
    language and 0 elsewhere.
    """
    from .series import LinearRepresentation

    if check and not is_unambiguous(n):
        raise AmbiguousAutomatonError("automaton is ambiguous; its N-representation is not characteristic")
    k = n.states
    initial = Vector.row([1 if s in n.initials else 0 for s in range(k)])
    final = Vector.column([1 if s in n.finals else 0 for s in range(k)])
    mu = {}
    for a in n.alphabet:
        grid = [[0] * k for _ in range(k)]
        for p, b, q in n.transitions:
            if b == a:
                grid[p][q] += 1
        mu[a] = Matrix.from_rows(grid, Semiring.N)
    return LinearRepresentation(n.alphabet, initial, mu, final)


def count_words_of_length(rep, length: int) -> int:
    """Number of accepted words of the given length, as initial . sigma^length . final."""
    sigma = rep.letter_sum()
    v = rep.initial
    for _ in range(length):
        v = vec_mat(v, sigma)
    return dot(v, rep.final)


# ---------------------------------------------------------------------------
# Text format and DOT export

def load_automaton(text: str) -> Nfa:
    """Parse the ``key: value`` automaton format.

    Returns a :class:`Dfa` when the automaton happens to be deterministic.
    """
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("alphabet", "states", "initial", "final", "trans"):
            raise AutomatonError(f"line {lineno}: expected 'alphabet|states|initial|final|trans: ...'")
        if key == "trans" and key in fields:
            fields[key] += " | " + value
        elif key in fields:
            raise AutomatonError(f"line {lineno}: duplicate {key!r}")
        else:
            fields[key] = value
    for key in ("alphabet", "states", "initial"):
        if key not in fields:
            raise AutomatonError(f"missing {key!r} line")
    alphabet = OrderedAlphabet(fields["alphabet"].split())
    try:
        states = int(fields["states"])
        initials = {int(x) for x in fields["initial"].split()}
        finals = {int(x) for x in fields.get("final", "").split()}
    except ValueError as e:
        raise AutomatonError(f"bad state number: {e}") from None
    transitions = set()
    for chunk in fields.get("trans", "").split("|"):
        parts = chunk.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise AutomatonError(f"bad transition {chunk.strip()!r}, expected 'p letter q'")
        p, a, q = parts
        try:
            transitions.add((int(p), a, int(q)))
        except ValueError:
            raise AutomatonError(f"bad transition {chunk.strip()!r}") from None
    nfa = Nfa(states, alphabet, transitions, initials, finals)
    return nfa.as_dfa() if nfa.is_deterministic else nfa


def dump_automaton(n: Nfa) -> str:
    order = {a: i for i, a in enumerate(n.alphabet)}
    trans = sorted(n.transitions, key=lambda t: (t[0], order[t[1]], t[2]))
    lines = [
        f"alphabet: {' '.join(n.alphabet)}",
        f"states: {n.states}",
        f"initial: {' '.join(map(str, sorted(n.initials)))}",
        f"final: {' '.join(map(str, sorted(n.finals)))}",
        "trans: " + " | ".join(f"{p} {a} {q}" for p, a, q in trans),
    ]
    return "\n".join(lines) + "\n"


def to_dot(n: Nfa, name: str = "automaton", labels: dict[int, str] | None = None) -> str:
    """Graphviz source with states and edges in a fixed order."""
    order = {a: i for i, a in enumerate(n.alphabet)}
    edges: dict[tuple[int, int], list[str]] = {}
    for p, a, q in n.transitions:
        edges.setdefault((p, q), []).append(a)
    out = [f'digraph "{name}" {{', "  rankdir=LR;", '  node [shape=circle];']
    for s in range(n.states):
        shape = "doublecircle" if s in n.finals else "circle"
        label = labels.get(s, str(s)) if labels else str(s)
        out.append(f'  {s} [shape={shape}, label="{label}"];')
    for s in sorted(n.initials):
        out.append(f'  _init{s} [shape=point];')
        out.append(f'  _init{s} -> {s};')
    for (p, q) in sorted(edges):
        lab = ",".join(sorted(edges[p, q], key=order.__getitem__))
        out.append(f'  {p} -> {q} [label="{lab}"];')
    out.append("}")
    return "\n".join(out) + "\n"
