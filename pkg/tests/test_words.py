import itertools

import pytest
from hypothesis import given, strategies as st

from modknot.errors import InputError
from modknot.words import (
    LorenzWord,
    canonical,
    cyclically_equivalent,
    inverse_word,
    is_reciprocal,
    least_rotation_index,
    letter_at,
    lorenz_words,
    minimal_period,
    parse_word,
    single_shift,
)

from conftest import lorenz_word_strategy


def brute_period(s):
    return next(p for p in range(1, len(s) + 1) if len(s) % p == 0 and s[:p] * (len(s) // p) == s)


def brute_canonical(s):
    return min(s[k:] + s[:k] for k in range(len(s)))


def all_strings(max_len):
    for m in range(1, max_len + 1):
        for t in itertools.product("LR", repeat=m):
            yield "".join(t)


def test_parse_valid():
    w = parse_word("RRLLRL")
    assert len(w) == 6 and w.letters == "RRLLRL"


@pytest.mark.parametrize("text", ["LL", "LRLR", "LRX", "L", "", "lr", "RLRLRL"])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_word(text)


def test_minimal_period_and_least_rotation_match_brute_force():
    for s in all_strings(11):
        assert minimal_period(s) == brute_period(s)
        k = least_rotation_index(s)
        assert s[k:] + s[:k] == brute_canonical(s)


def test_single_shift():
    assert single_shift(LorenzWord("RRLLRL")).letters == "RLLRLR"
    assert single_shift(LorenzWord("LR")).letters == "RL"
    w = LorenzWord("RRLLRL")
    v = w
    for _ in range(6):
        v = single_shift(v)
    assert v == w


def test_letter_at():
    w = LorenzWord("RRLLRL")
    assert letter_at(w, 3) == "L"
    assert letter_at(w, 0) == "L"
    assert letter_at(LorenzWord("LR"), 3) == "L"
    assert w[-5] == letter_at(w, 1)


def test_canonical():
    assert canonical(LorenzWord("RRLLRL")).letters == "LLRLRR"
    assert canonical(LorenzWord("RL")).letters == "LR"
    assert canonical(LorenzWord("LLR")).letters == "LLR"


def test_cyclically_equivalent():
    assert cyclically_equivalent(LorenzWord("RRLLRL"), LorenzWord("LLRLRR"))
    assert cyclically_equivalent(LorenzWord("LR"), LorenzWord("RL"))
    assert not cyclically_equivalent(LorenzWord("LLR"), LorenzWord("LR"))


def test_inverse_word():
    assert inverse_word(LorenzWord("RRLLRL")).letters == "RLRRLL"
    assert inverse_word(LorenzWord("LR")).letters == "LR"
    assert inverse_word(LorenzWord("LLR")).letters == "LRR"


def test_is_reciprocal():
    assert is_reciprocal(LorenzWord("RRLLRL"))
    assert not is_reciprocal(LorenzWord("LLR"))
    assert is_reciprocal(LorenzWord("LR"))
    # RLRRLL is RRLLRL shifted by four places
    v = LorenzWord("RRLLRL")
    for _ in range(4):
        v = single_shift(v)
    assert v == inverse_word(LorenzWord("RRLLRL"))


def test_lorenz_words_counts():
    # number of binary Lyndon words of length 2..8
    counts = [1, 2, 3, 6, 9, 18, 30]
    words = lorenz_words(8)
    for m, expected in zip(range(2, 9), counts):
        assert sum(len(w) == m for w in words) == expected
    assert [w.letters for w in lorenz_words(2)] == ["LR"]


def test_inverse_involution_exhaustive():
    for w in lorenz_words(10):
        assert cyclically_equivalent(inverse_word(inverse_word(w)), w)


@given(lorenz_word_strategy, st.integers(0, 40))
def test_canonical_shift_invariant(w, k):
    v = w
    for _ in range(k):
        v = single_shift(v)
    assert canonical(v) == canonical(w)
    assert canonical(canonical(w)) == canonical(w)


@given(lorenz_word_strategy)
def test_reciprocity_invariances(w):
    r = is_reciprocal(w)
    assert r == is_reciprocal(single_shift(w)) == is_reciprocal(inverse_word(w))


@given(lorenz_word_strategy, st.integers(-100, 100))
def test_letter_at_periodic(w, i):
    assert letter_at(w, i) == letter_at(w, i + len(w))
