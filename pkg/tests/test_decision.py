import random
from fractions import Fraction

import pytest

from conftest import AB, radix_words
from numeration.automata import (
    OrderedAlphabet,
    empty_dfa,
    finite_language_dfa,
    minimize,
    to_linear_representation,
)
from numeration.decision import (
    equivalent,
    first_difference,
    is_enumerating_series,
    is_zero,
    subtract,
    support_dfa,
)
from numeration.exactalg import Matrix, Semiring, SemiringError, Vector, direct_sum
from numeration.regex import parse_regex
from numeration.series import LinearRepresentation, SeriesFormatError
from numeration.system import enumerating_series, new_ans, value

Z, Q = Semiring.Z, Semiring.Q


def rep(initial, mats, final, sr=Semiring.N, alphabet=AB):
    return LinearRepresentation(
        alphabet, Vector.row(initial, sr), {a: Matrix.from_rows(m, sr) for a, m in mats.items()},
        Vector.column(final, sr))


def count_a(sr=Semiring.N):
    """Coefficient of w is the number of a's in w."""
    return rep([1, 0], {"a": [[1, 1], [0, 1]], "b": [[1, 0], [0, 1]]}, [0, 1], sr)


def count_a_other_way(sr=Semiring.N):
    """Same series; marks the counted a with a 'seen' state and a redundant copy."""
    return rep([1, 0, 0, 0],
               {"a": [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                "b": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]},
               [0, 1, 0, 0], sr)


def random_rep(rng, dim):
    def q():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return rep([q() for _ in range(dim)],
               {a: [[q() for _ in range(dim)] for _ in range(dim)] for a in "ab"},
               [q() for _ in range(dim)], Q)


@pytest.fixture(scope="module")
def enum_l1(l1):
    return enumerating_series(l1).final_rep


def test_support(l1, enum_l1):
    assert support_dfa(enum_l1) == l1.automaton
    zero = rep([0, 0], {"a": [[0, 0], [0, 0]], "b": [[0, 0], [0, 0]]}, [0, 0])
    assert support_dfa(zero) == empty_dfa(AB)
    a_star = to_linear_representation(parse_regex("a*", AB))
    assert support_dfa(a_star) == minimize(parse_regex("a*", AB))
    with pytest.raises(SemiringError):
        support_dfa(count_a(Z))


def test_subtract(l1, enum_l1):
    s = count_a()
    d = subtract(s, s)
    assert d.semiring is Z
    assert d.dimension == 4
    assert all(d.coefficient(w) == 0 for w in radix_words("ab", 6))
    diff = subtract(enum_l1, l1.rep)
    for w in radix_words("ab", 7):
        if w.count("b") % 2 == 0:
            assert diff.coefficient(w) == value(l1, w)
    assert subtract(count_a(), count_a(Q)).semiring is Q
    with pytest.raises(ValueError):
        subtract(s, rep([1], {"0": [[1]], "1": [[1]]}, [1], alphabet=OrderedAlphabet("01")))


def test_is_zero_examples():
    s = count_a()
    assert is_zero(subtract(s, s))
    assert not is_zero(to_linear_representation(parse_regex("a*", AB)))
    other = count_a_other_way()
    assert all(s.coefficient(w) == other.coefficient(w) == w.count("a") for w in radix_words("ab", 5))
    assert is_zero(subtract(s, other))


def test_is_zero_agrees_with_short_words():
    rng = random.Random(11)
    for _ in range(40):
        dim = rng.randint(1, 6)
        r = random_rep(rng, dim)
        # plant zeros: a random rep is almost never zero, so also try ones with
        # final vector annihilating everything reachable
        if rng.random() < 0.3:
            r = rep([1] + [0] * (dim - 1),
                    {a: [[0] * dim for _ in range(dim)] for a in "ab"},
                    [0] + [rng.randint(-3, 3) for _ in range(dim - 1)], Q)
        short = all(r.coefficient(w) == 0 for w in radix_words("ab", dim - 1))
        assert is_zero(r) == short


def test_equivalent_is_an_equivalence(l1, enum_l1):
    corpus = [count_a(), count_a_other_way(), l1.rep, enum_l1, enumerating_series(l1).product_rep]
    for s in corpus:
        assert equivalent(s, s)
    for s in corpus:
        for t in corpus:
            assert equivalent(s, t) == equivalent(t, s)
    assert equivalent(count_a(), count_a_other_way())
    assert equivalent(enum_l1, enumerating_series(l1).product_rep)
    assert not equivalent(enum_l1, l1.rep)


def test_hand_written_enumerating_series(l1, enum_l1):
    """A second presentation of Enum(L1), written out by hand and checked word by word first."""
    k_a = [[1, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 1], [0, 0, 0, 1, 1]]
    k_b = [[1, 0, 0, 1, 0], [0, 0, 1, 1, 0], [0, 1, 0, 0, 1], [0, 0, 0, 1, 1], [0, 0, 0, 1, 1]]
    mu_a, mu_b = [[1, 0], [0, 1]], [[0, 1], [1, 0]]

    def kr(x, y):
        return [[x[i][j] * y[p][q] for j in range(len(x)) for q in range(len(y))]
                for i in range(len(x)) for p in range(len(y))]

    eta, xi = [1, 1, 0, 0, 0], [1, 0, 0, 1, 0]
    hand = rep([e * l for e in eta for l in (1, 0)], {"a": kr(k_a, mu_a), "b": kr(k_b, mu_b)},
               [x * n for x in xi for n in (1, 0)])
    words = [w for w in radix_words("ab", 6)]
    assert all(hand.coefficient(w) == (value(l1, w) + 1 if w.count("b") % 2 == 0 else 0) for w in words)
    assert equivalent(enum_l1, hand)


def test_decide_yes(l1, binary, fibonacci):
    for sys in (l1, binary, fibonacci):
        assert is_enumerating_series(enumerating_series(sys).final_rep)
        assert is_enumerating_series(enumerating_series(sys).product_rep)


def test_decide_characteristic_series(l1):
    v = is_enumerating_series(l1.rep)
    assert not v
    assert (v.witness, v.expected, v.actual) == ("a", 2, 1)
    assert l1.rep.coefficient(v.witness) == v.actual


def test_decide_doubled(enum_l1):
    doubled = enum_l1.scale_initial(2)
    v = is_enumerating_series(doubled)
    assert not v
    assert (v.witness, v.expected, v.actual) == ("", 1, 2)


def test_decide_finite_support():
    v = is_enumerating_series(to_linear_representation(finite_language_dfa([""], AB)))
    assert not v and v.reason == "finite support" and v.witness is None


def test_decide_beyond_depth(l1, enum_l1):
    # adds one to the coefficient of aaaa only
    bump = to_linear_representation(finite_language_dfa(["aaaa"], AB))
    plus = LinearRepresentation(
        AB,
        Vector.row(enum_l1.initial.entries + bump.initial.entries),
        {a: direct_sum(enum_l1.transition[a], bump.transition[a]) for a in AB},
        Vector.column(enum_l1.final.entries + bump.final.entries),
    )
    assert plus.coefficient("aaaa") == enum_l1.coefficient("aaaa") + 1
    v = is_enumerating_series(plus, depth=3)
    assert not v and v.witness is None and v.reason == "mismatch beyond search depth"
    v = is_enumerating_series(plus)
    assert v.witness == "aaaa"


def test_witnesses_are_sound(l1, enum_l1):
    candidates = [l1.rep, enum_l1.scale_initial(3), count_a()]
    for s in candidates:
        v = is_enumerating_series(s)
        assert not v
        if v.witness is not None:
            rebuilt = new_ans(support_dfa(s))
            w = v.witness
            assert s.coefficient(w) == v.actual
            assert v.expected == (value(rebuilt, w) + 1 if w in rebuilt else 0)
            assert v.actual != v.expected


def test_first_difference(enum_l1, l1):
    assert first_difference(enum_l1, enum_l1, 6) is None
    assert first_difference(enum_l1, l1.rep, 6) == ("a", 2, 1)


def test_decide_rejects_non_n():
    with pytest.raises(SemiringError):
        is_enumerating_series(count_a(Z))


def test_exchange_format_round_trip(enum_l1):
    text = enum_l1.dumps()
    back = LinearRepresentation.loads(text)
    assert back == enum_l1
    q = rep(["1/2", "-3"], {"a": [["1", "0"], ["2/3", "1"]], "b": [["0", "0"], ["0", "0"]]}, ["1", "1"], Q)
    assert LinearRepresentation.loads(q.dumps()) == q
    assert '"1/2"' in q.dumps()


@pytest.mark.parametrize("text", [
    "not json",
    '{"semiring": "N", "dimension": 1, "alphabet": ["a"], "initial": ["1"], "final": ["1"]}',
    '{"semiring": "N", "dimension": 2, "alphabet": ["a"], "initial": ["1"],'
    ' "transitions": {"a": [["1"]]}, "final": ["1"]}',
    '{"semiring": "N", "dimension": 1, "alphabet": ["a"], "initial": ["-1"],'
    ' "transitions": {"a": [["1"]]}, "final": ["1"]}',
    '{"semiring": "R", "dimension": 1, "alphabet": ["a"], "initial": ["1"],'
    ' "transitions": {"a": [["1"]]}, "final": ["1"]}',
])
def test_exchange_format_errors(text):
    with pytest.raises(SeriesFormatError):
        LinearRepresentation.loads(text)
