import pytest
from hypothesis import given
from hypothesis import strategies as st

from zimin.core import apply_morphism, zimin_word, ztype
from zimin.oracle import embeds_zimin_brute, ztype_brute
from zimin.search import max_factor_ztype, search_zimin

from conftest import all_words

W_YES = "ccccadbadccccadbadccccc"
W_NO = "aaabbaabbaa"


def _check_occurrence(w, occ, k):
    assert occ.rank == k
    assert 1 <= occ.start <= occ.end <= len(w)
    factor = occ.factor(w)
    assert apply_morphism(zimin_word(k), occ.witness) == factor
    assert ztype(factor) >= k


def test_search_examples():
    occ = search_zimin(W_YES, 3)
    assert occ is not None
    _check_occurrence(W_YES, occ, 3)
    assert search_zimin(W_NO, 3) is None


def test_search_yes_instance_contains_the_example_factor():
    # the example factor is one image of Z_3; the reported one is leftmost
    assert "adbadccccadbad" in W_YES
    occ = search_zimin(W_YES, 3)
    assert (occ.start, occ.end) == (1, 12)


@given(st.text(alphabet="abc", min_size=1, max_size=30))
def test_rank_one_found_at_first_letter(w):
    occ = search_zimin(w, 1)
    assert (occ.start, occ.end) == (1, 1)


def test_search_rejects_rank_zero():
    with pytest.raises(ValueError):
        search_zimin("abc", 0)


def test_search_on_empty_word():
    assert search_zimin("", 1) is None
    assert max_factor_ztype("") == (0, None)


def test_max_factor_examples():
    assert max_factor_ztype(W_NO)[0] == 2
    rank, occ = max_factor_ztype(W_YES)
    assert rank == 3
    _check_occurrence(W_YES, occ, 3)


def test_search_agrees_with_brute_force_exhaustively():
    for w in all_words("ab", 12):
        for k in (1, 2, 3):
            assert (search_zimin(w, k) is not None) == embeds_zimin_brute(w, k), (w, k)


@given(st.text(alphabet="abc", max_size=40))
def test_search_properties(w):
    rank, occ = max_factor_ztype(w)
    assert rank >= ztype(w)
    if occ is not None:
        _check_occurrence(w, occ, rank)
    for k in range(1, rank + 2):
        found = search_zimin(w, k)
        assert (found is not None) == (k <= rank)
        if found is not None:
            _check_occurrence(w, found, k)
            if k >= 2:
                assert search_zimin(w, k - 1) is not None


@given(st.text(alphabet="ab", max_size=16))
def test_search_returns_leftmost_then_shortest(w):
    for k in (1, 2, 3):
        occ = search_zimin(w, k)
        if occ is None:
            continue
        best = min(
            (i, j)
            for i in range(len(w))
            for j in range(i + 1, len(w) + 1)
            if ztype_brute(w[i:j]) >= k
        )
        assert (occ.start - 1, occ.end) == best


def test_max_factor_witness_is_first_in_order():
    w = "abbabaab"
    rank, occ = max_factor_ztype(w)
    first = min(
        (i, j)
        for i in range(len(w))
        for j in range(i + 1, len(w) + 1)
        if ztype_brute(w[i:j]) == rank
    )
    assert (occ.start - 1, occ.end) == first
