import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zimin.borders import BorderTracker, border_array, new_tracker, scan, short_border_array

from conftest import all_words, brute_border, brute_short_border

words = st.text(alphabet="abc", max_size=60)


def test_new_tracker_is_empty():
    state = new_tracker()
    assert state.i == 0
    assert state.B == [-1]
    assert state.Ztype == [0]
    assert (state.t, state.s) == (0, 0)


def test_first_push_gives_type_one():
    state = new_tracker()
    assert state.push("x") == (0, 0, 1)


def test_two_distinct_letters():
    state = new_tracker()
    state.push("a")
    b, sb, zt = state.push("b")
    assert (sb, zt) == (0, 1)


def test_example_zimin_type_three():
    state = new_tracker()
    state.extend("adbadccccadbad")
    assert state.ztype == 3


def test_border_example():
    state = new_tracker()
    state.extend("aabaabcaabaabaabcaabaab")
    assert state.B[-1] == 13
    assert state.SB[-1] == 6


def test_square_of_ababa_short_border_is_three():
    state = new_tracker()
    state.extend("ababaababa")
    assert state.SB[9] == 4
    assert state.SB[10] == 3


@pytest.mark.parametrize(
    "w, expected",
    [("aabaabcaabaabaabcaabaab", 13), ("", None), ("aaaa", None)],
)
def test_border_array_examples(w, expected):
    B = border_array(w)
    assert B[0] == -1
    if expected is not None:
        assert B[len(w)] == expected


def test_border_array_literal_values():
    assert border_array("").tolist() == [-1]
    assert border_array("aaaa").tolist() == [-1, 0, 1, 2, 3]


def test_short_border_array_examples():
    assert short_border_array("aabaabcaabaabaabcaabaab")[-1] == 6
    assert short_border_array("ab").tolist() == [0, 0]
    assert short_border_array("").tolist() == []


def test_arrays_match_brute_force_exhaustively():
    for w in all_words("ab", 11, min_len=1):
        B = border_array(w)
        SB = short_border_array(w)
        for j in range(1, len(w) + 1):
            assert B[j] == brute_border(w[:j])
            assert SB[j - 1] == brute_short_border(w[:j])


@given(words)
def test_short_border_relations(w):
    B = border_array(w)
    SB = short_border_array(w)
    for j in range(1, len(w) + 1):
        sb = SB[j - 1]
        assert 0 <= B[j] <= j - 1
        assert 0 <= sb <= B[j]
        assert 2 * sb < j
        if 2 * B[j] < j:
            assert sb == B[j]


@given(words)
def test_online_matches_batch(w):
    state = BorderTracker()
    state.extend(w)
    B, SB, Z, _ = scan(w)
    assert state.B == B.tolist()
    assert state.SB == SB.tolist()
    assert state.Ztype == Z.tolist()


@given(words)
def test_ztype_recurrence_holds(w):
    state = BorderTracker()
    state.extend(w)
    for j in range(1, len(w) + 1):
        assert state.Ztype[j] == 1 + state.Ztype[state.SB[j]]


@given(st.text(alphabet="ab", min_size=1, max_size=25))
def test_square_keeps_short_border_when_it_is_the_border(w):
    B = border_array(w)
    SB = short_border_array(w)
    if SB[-1] == B[-1]:
        assert short_border_array(w + w)[-1] == SB[-1]


def test_square_lemma_on_random_words():
    rng = random.Random(7)
    checked = 0
    for _ in range(3000):
        w = "".join(rng.choice("ab") for _ in range(rng.randint(1, 30)))
        if short_border_array(w)[-1] == border_array(w)[-1]:
            assert short_border_array(w + w)[-1] == short_border_array(w)[-1]
            checked += 1
    assert checked > 100


def test_short_border_shrinks_by_one_when_last_letter_removed():
    # a short border of length k > 0 of w[1..i] leaves a short border of
    # length k-1 in w[1..i-1]
    for w in all_words("ab", 14, min_len=2):
        i = len(w)
        for k in range(1, (i + 1) // 2):
            if 2 * k < i and w[:k] == w[i - k :]:
                u = w[:-1]
                assert 2 * (k - 1) < i - 1 and u[: k - 1] == u[len(u) - (k - 1) :]


@pytest.mark.parametrize("alphabet", ["ab", "abcd"])
def test_decrements_bounded_by_twice_pushes(alphabet):
    rng = random.Random(3)
    w = "".join(rng.choice(alphabet) for _ in range(20000))
    state = BorderTracker()
    state.extend(w)
    assert state.decrements <= state.increments <= 2 * len(w)
    _, _, _, dec = scan(w)
    assert dec == state.decrements


def test_decrements_on_unary_and_periodic_words():
    for w in ["a" * 5000, "ab" * 2500, "aab" * 1700]:
        assert scan(w)[3] <= 2 * len(w)


def test_arbitrary_hashable_symbols():
    w = [("x", 1), ("y", 2), ("x", 1)]
    assert border_array(w).tolist() == [-1, 0, 0, 1]
    state = BorderTracker()
    state.extend(w)
    assert state.ztype == 2


def test_bytes_input():
    assert short_border_array(b"aabaabcaabaabaabcaabaab")[-1] == 6


def test_integer_array_input():
    x = np.array([0, 1, 0, 0, 1, 0, 1, 0], dtype=np.int64)
    assert scan(x)[2][-1] == 3
