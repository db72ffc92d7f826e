import pytest

from conftest import AB, radix_words
from numeration.automata import AutomatonError, Nfa, empty_dfa, minimize
from numeration.congruence import (
    CongruenceSpec,
    RecognizableSetSpec,
    congruence_automaton,
    congruence_dfa,
    congruence_dfa_unambiguous,
    recognizable_set_dfa,
)
from numeration.system import enumerate_words, new_ans

L1_UNAMBIGUOUS = Nfa(
    3, AB,
    {(0, "a", 0), (0, "b", 1), (1, "a", 1), (1, "b", 0), (0, "a", 2), (1, "b", 2)},
    {0, 2}, {2},
)


def accepted_numbers(dfa, words):
    return [n for n, w in enumerate(words) if dfa.accepts(w)]


@pytest.fixture(scope="module")
def l1_words(l1):
    return enumerate_words(l1, 0, 1000)


def test_spec_validation():
    with pytest.raises(ValueError):
        CongruenceSpec(0, 0)
    with pytest.raises(ValueError):
        CongruenceSpec(3, 3)
    with pytest.raises(ValueError):
        RecognizableSetSpec(include={1}, exclude={1})


def test_mod_3_residue_1(l1, l1_words):
    c = congruence_dfa(l1, CongruenceSpec(3, 1))
    assert c.states == 12
    assert c.states <= l1.k * 3 ** l1.k
    assert minimize(c).states == 8
    assert c.accepts("a") and c.accepts("bba")
    assert not c.accepts("aa")
    assert accepted_numbers(c, l1_words) == [n for n in range(1000) if n % 3 == 1]


def test_mod_3_residue_1_state_labels(l1):
    built = congruence_automaton(l1, CongruenceSpec(3, 1))
    # expected multiset of the twelve reduced count vectors
    deltas = sorted(delta for _, delta in built.labels)
    assert deltas == sorted([(0, 0), (2, 0), (1, 0), (0, 2), (2, 1), (0, 1),
                             (2, 2), (2, 1), (0, 2), (1, 0), (1, 1), (1, 2)])


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_every_residue(l1, l1_words, p):
    for r in range(p):
        c = congruence_dfa(l1, CongruenceSpec(p, r))
        assert c.states <= l1.k * p ** l1.k
        assert accepted_numbers(c, l1_words) == [n for n in range(1000) if n % p == r]


def test_accepted_words_lie_in_the_language(l1):
    c = congruence_dfa(l1, CongruenceSpec(4, 3))
    assert all(w.count("b") % 2 == 0 for w in radix_words("ab", 8) if c.accepts(w))


def test_minimization_preserves_language(l1):
    c = congruence_dfa(l1, CongruenceSpec(3, 1))
    m = minimize(c)
    assert all(c.accepts(w) == m.accepts(w) for w in radix_words("ab", 8))


def test_modulus_one_gives_the_language(l1):
    assert minimize(congruence_dfa(l1, CongruenceSpec(1, 0))) == l1.automaton


@pytest.mark.parametrize("name", ["binary", "fibonacci"])
def test_other_systems(request, name):
    sys = request.getfixturevalue(name)
    words = enumerate_words(sys, 0, 1000)
    for p, r in [(2, 0), (3, 2), (5, 1)]:
        c = congruence_dfa(sys, CongruenceSpec(p, r))
        assert c.states <= sys.k * p ** sys.k
        assert accepted_numbers(c, words) == [n for n in range(1000) if n % p == r]


def test_unambiguous_input(l1, l1_words):
    nd = new_ans(L1_UNAMBIGUOUS, minimal=False)
    with pytest.raises(AutomatonError):
        congruence_dfa(nd, CongruenceSpec(2, 0))
    c = congruence_dfa_unambiguous(nd, CongruenceSpec(2, 0))
    assert c.states <= 2 ** nd.k * 2 ** nd.k
    assert accepted_numbers(c, l1_words[:500]) == [n for n in range(500) if n % 2 == 0]
    # on a deterministic system both constructions give the same language
    spec = CongruenceSpec(3, 1)
    assert minimize(congruence_dfa_unambiguous(l1, spec)) == minimize(congruence_dfa(l1, spec))


def test_recognizable_set_single_progression(l1):
    d = recognizable_set_dfa(l1, RecognizableSetSpec([CongruenceSpec(3, 1)]))
    assert d == minimize(congruence_dfa(l1, CongruenceSpec(3, 1)))
    assert d.states == 8


def test_recognizable_set_finite(l1):
    d = recognizable_set_dfa(l1, RecognizableSetSpec(include={0, 4}))
    assert [w for w in radix_words("ab", 8) if d.accepts(w)] == ["", "aaa"]


def test_recognizable_set_full_cover(l1):
    d = recognizable_set_dfa(l1, RecognizableSetSpec([CongruenceSpec(2, 0), CongruenceSpec(2, 1)]))
    assert d == l1.automaton


def test_recognizable_set_empty(l1):
    assert recognizable_set_dfa(l1, RecognizableSetSpec()) == empty_dfa(AB)


@pytest.mark.parametrize("spec", [
    RecognizableSetSpec([CongruenceSpec(3, 0), CongruenceSpec(5, 2)], include={1, 4}, exclude={0, 12, 27}),
    RecognizableSetSpec([CongruenceSpec(2, 1)], exclude={1, 3, 5}),
    RecognizableSetSpec([CongruenceSpec(4, 0)], include={7}),
])
def test_recognizable_set_against_oracle(l1, l1_words, spec):
    d = recognizable_set_dfa(l1, spec)
    assert accepted_numbers(d, l1_words) == [n for n in range(1000) if n in spec]
