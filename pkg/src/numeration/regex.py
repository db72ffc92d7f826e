"""Minimal regular expressions compiled by the Glushkov (position) construction.

Grammar::

    alt    := concat ('|' concat)*
    concat := repeat*
    repeat := atom ('*' | '+' | '?')*
    atom   := LETTER | '(' alt ')'

An empty ``concat`` denotes the empty word, so ``""``, ``"()"`` and
``"a|"`` are all legal. Whitespace is ignored. The construction yields an
NFA with one state per letter occurrence plus an initial state and no
epsilon-transitions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import Nfa, OrderedAlphabet


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, pattern: str, position: int):
        super().__init__(f"{message} at position {position} in {pattern!r}")
        self.position = position


@dataclass
class _Node:
    nullable: bool
    first: frozenset
    last: frozenset


class _Parser:
    def __init__(self, pattern: str, alphabet: OrderedAlphabet):
        self.tokens = [(i, c) for i, c in enumerate(pattern) if not c.isspace()]
        self.pattern = pattern
        self.alphabet = alphabet
        self.pos = 0
        self.letters: list[str] = []      # letter of each position (1-based index = position)
        self.follow: dict[int, set[int]] = {}

    def peek(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def where(self) -> int:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else len(self.pattern)

    def parse(self) -> _Node:
        node = self.alt()
        if self.pos < len(self.tokens):
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pattern, self.where())
        return node

    def alt(self) -> _Node:
        node = self.concat()
        while self.peek() == "|":
            self.pos += 1
            other = self.concat()
            node = _Node(node.nullable or other.nullable, node.first | other.first, node.last | other.last)
        return node

    def concat(self) -> _Node:
        node = _Node(True, frozenset(), frozenset())
        while self.peek() not in (None, "|", ")"):
            right = self.repeat()
            for p in node.last:
                self.follow[p] |= right.first
            node = _Node(
                node.nullable and right.nullable,
                node.first | right.first if node.nullable else node.first,
                node.last | right.last if right.nullable else right.last,
            )
        return node

    def repeat(self) -> _Node:
        node = self.atom()
        while self.peek() in ("*", "+", "?"):
            op = self.peek()
            self.pos += 1
            if op in "*+":
                for p in node.last:
                    self.follow[p] |= node.first
            if op in "*?":
                node = _Node(True, node.first, node.last)
        return node

    def atom(self) -> _Node:
        c = self.peek()
        at = self.where()
        if c == "(":
            self.pos += 1
            node = self.alt()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pattern, self.where())
            self.pos += 1
            return node
        if c in ("*", "+", "?"):
            raise RegexSyntaxError(f"nothing to repeat before {c!r}", self.pattern, at)
        if c not in self.alphabet:
            raise RegexSyntaxError(f"letter {c!r} not in alphabet {str(self.alphabet)!r}", self.pattern, at)
        self.pos += 1
        self.letters.append(c)
        p = len(self.letters)
        self.follow[p] = set()
        return _Node(False, frozenset({p}), frozenset({p}))


def parse_regex(pattern: str, alphabet: OrderedAlphabet) -> Nfa:
    parser = _Parser(pattern, alphabet)
    root = parser.parse()
    letters = parser.letters
    transitions = {(0, letters[q - 1], q) for q in root.first}
    for p, targets in parser.follow.items():
        transitions |= {(p, letters[q - 1], q) for q in targets}
    finals = set(root.last) | ({0} if root.nullable else set())
    return Nfa(len(letters) + 1, alphabet, transitions, {0}, finals)
