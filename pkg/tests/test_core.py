import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zimin.core import (
    apply_morphism,
    decompose,
    iterate_morphism,
    max_sequence_value,
    zimin_word,
    ztype,
    ztype_prefixes,
)
from zimin.fibonacci import fib_prefix
from zimin.oracle import ztype_brute

from conftest import all_words

U = "adbadccccadbad"


@pytest.mark.parametrize(
    "w, expected",
    [(U, 3), ("", 0), ("aabaabcaabaabaabcaabaab", 2), ("a", 1), ("ab", 1), ("aa", 1), ("aba", 2)],
)
def test_ztype_examples(w, expected):
    assert ztype(w) == expected


def test_ztype_prefixes_examples():
    assert ztype_prefixes(U)[-1] == 3
    assert ztype_prefixes("aaaaaaa").tolist() == [0, 1, 1, 2, 2, 2, 2, 3]
    assert ztype_prefixes("").tolist() == [0]


@given(st.text(alphabet="abcd", min_size=1, max_size=30))
def test_single_letter_prefix_has_type_one(w):
    assert ztype_prefixes(w)[1] == 1


def test_zimin_words():
    assert str(zimin_word(3)) == "x1x2x1x3x1x2x1"
    assert zimin_word(1).symbols == (1,)
    assert len(zimin_word(4)) == 15 == len(zimin_word(4).symbols)
    with pytest.raises(ValueError):
        zimin_word(0)


@pytest.mark.parametrize("k", range(1, 11))
def test_zimin_word_variable_counts(k):
    z = zimin_word(k)
    assert len(z.symbols) == 2**k - 1
    for j in range(1, k + 1):
        assert z.symbols.count(j) == 2 ** (k - j)
    if k > 1:
        prev = zimin_word(k - 1).symbols
        assert z.symbols == prev + (k,) + prev


def test_decompose_examples():
    assert decompose(U, 3) == {1: "ad", 2: "b", 3: "cccc"}
    assert decompose("aba", 2) == {1: "a", 2: "b"}
    assert decompose(U, 2) == {1: "adbad", 2: "cccc"}
    assert decompose(U, 1) == {1: U}


@pytest.mark.parametrize("w, k", [(U, 4), (U, 0), ("", 1), ("ab", 2)])
def test_decompose_rejects(w, k):
    with pytest.raises(ValueError):
        decompose(w, k)


def test_apply_morphism_examples():
    assert apply_morphism(zimin_word(2), {1: "ad", 2: "b"}) == "adbad"
    assert apply_morphism(zimin_word(3), {1: "ad", 2: "b", 3: "cccc"}) == U
    assert apply_morphism(zimin_word(1), {1: "a"}) == "a"
    with pytest.raises(KeyError):
        apply_morphism(zimin_word(2), {1: "a"})


def test_apply_morphism_on_tuples():
    assert apply_morphism(zimin_word(2), {1: (1, 2), 2: (3,)}) == (1, 2, 3, 1, 2)


@given(st.text(alphabet="abc", min_size=1, max_size=40))
def test_decompose_round_trip(w):
    for k in range(1, ztype(w) + 1):
        h = decompose(w, k)
        assert all(len(img) > 0 for img in h.values())
        assert apply_morphism(zimin_word(k), h) == w


@pytest.mark.parametrize(
    "i, expected",
    [(1, 1), (2, 1), (3, 2), (6, 2), (7, 3), (14, 3), (15, 4), (30, 4), (31, 5)],
)
def test_max_sequence_value(i, expected):
    assert max_sequence_value(i) == expected


def test_max_sequence_value_blocks():
    # n occupies exactly 2^n positions
    seq = [max_sequence_value(i) for i in range(1, 2**8 - 1)]
    for n in range(1, 8):
        assert seq.count(n) == 2**n


@given(st.text(alphabet="ab", min_size=1, max_size=80))
def test_prefix_types_dominated(w):
    Z = ztype_prefixes(w)
    for j in range(1, len(w) + 1):
        assert Z[j] <= max_sequence_value(j)


def test_unary_is_the_only_binary_word_reaching_the_maximum():
    target = [max_sequence_value(j) for j in range(1, 17)]
    hits = [w for w in all_words("ab", 16, min_len=16) if ztype_prefixes(w)[1:].tolist() == target]
    assert hits == ["a" * 16, "b" * 16]


def test_iterate_morphism_examples():
    assert iterate_morphism({"a": "abaa", "b": "abab"}, "a", 8) == "abaaabab"
    assert iterate_morphism({"a": "ab", "b": "a"}, "a", 5) == "abaab"
    assert iterate_morphism({"a": "aa"}, "a", 4) == "aaaa"
    assert iterate_morphism({"a": "ab", "b": "a"}, "a", 1000) == fib_prefix(1000)


@pytest.mark.parametrize(
    "rules, seed",
    [({"a": "ba", "b": "a"}, "a"), ({"a": "a"}, "a"), ({"a": "ab", "b": ""}, "a")],
)
def test_iterate_morphism_rejects(rules, seed):
    with pytest.raises(ValueError):
        iterate_morphism(rules, seed, 5)


def test_zimin_encoding_prefix_types():
    g = iterate_morphism({"a": "abaa", "b": "abab"}, "a", 2**14 - 1)
    Z = ztype_prefixes(g)
    for n in range(1, 15):
        assert Z[2**n - 1] == n


def test_ztype_matches_oracle_on_random_words():
    rng = random.Random(11)
    for _ in range(10_000):
        k = rng.randint(1, 4)
        w = "".join(rng.choice("abcd"[:k]) for _ in range(rng.randint(0, 40)))
        assert ztype(w) == ztype_brute(w), w
