"""Shared systems and brute-force oracles.

The oracles decide membership with plain string predicates and rank words
by sorting an exhaustive listing, so they share no code with the automata
under test.
"""
import re
from itertools import product

import pytest

from numeration.automata import OrderedAlphabet
from numeration.bundled import bundled_system
from numeration.regex import parse_regex
from numeration.system import new_ans

AB = OrderedAlphabet("ab")
BITS = OrderedAlphabet("01")

L1_REGEX = "a*(ba*ba*)*"


def in_l1(w):
    return w.count("b") % 2 == 0


def in_binary(w):
    return re.fullmatch(r"0|1[01]*", w) is not None


def in_fibonacci(w):
    return w == "0" or (w.startswith("1") and "11" not in w)


def radix_words(letters, max_length):
    """Every word up to ``max_length`` in radix order; ``letters`` listed smallest first."""
    for n in range(max_length + 1):
        for t in product(letters, repeat=n):
            yield "".join(t)


def brute_language(letters, predicate, max_length):
    return [w for w in radix_words(letters, max_length) if predicate(w)]


@pytest.fixture(scope="session")
def l1():
    return new_ans(parse_regex(L1_REGEX, AB))


@pytest.fixture(scope="session")
def binary():
    return bundled_system("binary")


@pytest.fixture(scope="session")
def fibonacci():
    return bundled_system("fibonacci")


SYSTEMS = {
    "even-b": ("ab", in_l1),
    "binary": ("01", in_binary),
    "fibonacci": ("01", in_fibonacci),
}
