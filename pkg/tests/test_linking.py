from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from modknot.errors import EquivalentWordsError, NotReciprocalError
from modknot.linking import (
    RsTriple,
    branch_position,
    check_reciprocal_identity,
    linking_number,
    oracle_link,
    rs_self,
    rs_triples,
    symmetrized_link,
)
from modknot.words import LorenzWord, cyclically_equivalent, inverse_word, letter_at, single_shift

from conftest import lorenz_word_strategy

W = LorenzWord


def brute_triples(wa, wb):
    """Triples straight from the definition, with x bounded by lcm(m, n)."""
    m, n = len(wa), len(wb)
    found = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            for x in range(lcm(m, n)):
                if (letter_at(wa, i) == "L" and letter_at(wb, j) == "R"
                        and all(letter_at(wa, i + k) == letter_at(wb, j + k) for k in range(1, x + 1))
                        and letter_at(wa, i + x + 1) == "R" and letter_at(wb, j + x + 1) == "L"):
                    found.add((i, j, x))
    return found


def test_rs_triples_examples():
    assert rs_triples(W("RRLLRL"), W("LR")) == {(3, 2, 4), (4, 2, 0), (6, 2, 0)}
    assert rs_triples(W("LLR"), W("LR")) == {(2, 2, 0)}
    assert rs_triples(W("LR"), W("LR")) == {RsTriple(1, 2, 0)}


@given(lorenz_word_strategy.filter(lambda w: len(w) <= 9), lorenz_word_strategy.filter(lambda w: len(w) <= 9))
@settings(max_examples=60)
def test_rs_triples_match_definition(wa, wb):
    assert rs_triples(wa, wb) == brute_triples(wa, wb)


def test_linking_number_examples():
    assert linking_number(W("RRLLRL"), W("LR")) == -3
    assert linking_number(W("LLR"), W("LR")) == -1
    with pytest.raises(EquivalentWordsError):
        linking_number(W("LR"), W("RL"))


def test_branch_positions():
    assert [branch_position(W("LLR"), i) for i in (1, 2, 3)] == [Fraction(1, 7), Fraction(2, 7), Fraction(4, 7)]
    assert [branch_position(W("LR"), i) for i in (1, 2)] == [Fraction(1, 3), Fraction(2, 3)]
    # the doubling map carries each position to the next one
    w = W("RRLLRL")
    for i in range(1, 7):
        assert (2 * branch_position(w, i)) % 1 == branch_position(w, i + 1)


def test_oracle_examples():
    assert oracle_link(W("RRLLRL"), W("LR")) == -3
    assert oracle_link(W("LLR"), W("LR")) == -1
    with pytest.raises(EquivalentWordsError):
        oracle_link(W("LR"), W("RL"))


def test_rs_self():
    assert rs_self(W("LR")) == 1
    # regression values, confirmed against the brute-force definition
    assert rs_self(W("LLR")) == len(brute_triples(W("LLR"), W("LLR"))) == 2
    assert rs_self(W("RRLLRL")) == len(brute_triples(W("RRLLRL"), W("RRLLRL"))) == 7


def test_symmetrized_link():
    assert symmetrized_link(W("LLR"), W("LLLLRLR")) == -12
    assert symmetrized_link(W("LLR"), W("LLRRLRR")) == -14
    assert symmetrized_link(W("LLLLRLR"), W("LLLLLLLLLRRR")) == -24
    with pytest.raises(EquivalentWordsError):
        symmetrized_link(W("LLR"), W("LRR"))


def test_check_reciprocal_identity():
    assert check_reciprocal_identity(W("RRLLRL"), W("LR"))
    assert check_reciprocal_identity(W("RRLLRL"), W("LLR"))
    with pytest.raises(NotReciprocalError):
        check_reciprocal_identity(W("LLR"), W("LLLLRLR"))


def test_table3_consistency():
    words = [W("LLR"), W("LLLLRLR"), W("LLRRLRR"), W("LLLLLLLLLRRR")]
    for a in words:
        for b in words:
            if a != b:
                assert symmetrized_link(a, b) == 2 * (linking_number(a, b) + linking_number(a, inverse_word(b)))


pairs = st.tuples(lorenz_word_strategy, lorenz_word_strategy).filter(
    lambda p: not cyclically_equivalent(*p)
)


@given(pairs, st.integers(0, 20))
def test_link_invariances(pair, k):
    wa, wb = pair
    value = linking_number(wa, wb)
    assert value <= -1
    assert value == oracle_link(wa, wb)
    assert value == linking_number(wb, wa)
    assert value == linking_number(inverse_word(wa), inverse_word(wb))
    shifted = wa
    for _ in range(k):
        shifted = single_shift(shifted)
    assert linking_number(shifted, wb) == value
