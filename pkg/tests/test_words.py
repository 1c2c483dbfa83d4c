"""Unit tests for word classes, the b-recurrence, and the rescaled slice."""
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from treechild import (
    BTable,
    ETable,
    Params,
    Word,
    b_max_table,
    b_max_table_binomial,
    b_table,
    count_tc_total,
    count_tc_words,
    count_words,
    count_words_direct,
    e_table,
    enumerate_words,
    is_valid_word,
    lambda_factor,
    tc_table,
)

# spot values fixed before the recurrence implementation existed
C_VALUES = {
    2: {(2, 0): 2, (2, 1): 7, (2, 2): 7, (3, 0): 5, (3, 1): 38, (3, 2): 106,
        (3, 3): 106, (5, 5): 87595},
    3: {(2, 1): 11, (2, 2): 25, (5, 5): 183500625},
    4: {(5, 5): 404793761526},
}


def test_word_from_string_round_trip():
    w = Word.from_string("baaabb")
    assert w.letters == (2, 1, 1, 1, 2, 2)
    assert w.profile == (3, 3)
    assert w.to_string() == "baaabb"


def test_word_from_letters_infers_profile():
    w = Word.from_letters([1, 2, 1, 2])
    assert w.profile == (2, 2)
    assert Word.from_letters([]).profile == ()


def test_validity_examples_light_only():
    assert is_valid_word(2, Word.from_string("aabb"))
    assert is_valid_word(2, Word.from_string("abab"))
    assert not is_valid_word(2, Word.from_string("abba"))
    assert not is_valid_word(2, Word.from_string("baba"))
    assert not is_valid_word(2, Word.from_string("bbaa"))


def test_validity_examples_heavy():
    assert is_valid_word(2, Word.from_string("baaabb"))
    assert not is_valid_word(2, Word.from_string("bbbaaa"))
    assert is_valid_word(3, Word.from_string("bbaaaabb"))


def test_validity_rejects_malformed_words():
    with pytest.raises(ValueError):
        is_valid_word(2, Word.from_string("aab"))
    with pytest.raises(ValueError):
        is_valid_word(3, Word.from_string("aaabb"))
    with pytest.raises(ValueError):
        is_valid_word(2, Word(letters=(1, 3, 1, 3), profile=(2, 0, 2)))


def test_count_words_spot_values():
    for d, table in C_VALUES.items():
        for (n, k), want in table.items():
            assert count_words(d, n, k) == want, (d, n, k)


def test_count_words_direct_spot_values():
    for d, table in C_VALUES.items():
        for (n, k), want in table.items():
            if n <= 3:
                assert count_words_direct(d, n, k) == want, (d, n, k)


def test_enumeration_ceiling_guard():
    with pytest.raises(ValueError):
        list(enumerate_words(2, 6, 0))
    with pytest.raises(ValueError):
        count_words_direct(2, 6, 0)
    assert count_words_direct(2, 6, 0, ceiling=6) == count_words(2, 6, 0)


@settings(deadline=None)
@given(
    st.integers(min_value=2, max_value=4),
    st.integers(min_value=1, max_value=3),
    st.data(),
)
def test_enumeration_streams_each_valid_word_once(d, n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    seen = set()
    length = 2 * n + (d - 1) * k
    for w in enumerate_words(d, n, k):
        assert len(w.letters) == length
        assert is_valid_word(d, w)
        seen.add(w.letters)
    assert len(seen) == count_words(d, n, k)


def test_btable_accessors():
    table = b_table(2, 4)
    assert isinstance(table, BTable)
    assert table.b(1, 0, 1) == 1
    assert table.b(1, 1, 1) == 1
    assert table.b(1, 0, 2) == 0
    assert table.c(0, 0) == 1
    assert table.c(0, 1) == 0
    assert table.c(3, 2) == 106


def test_btable_k_max_restriction():
    table = b_table(2, 5, k_max=1)
    assert table.c(5, 1) == count_words(2, 5, 1)
    assert table.c(4, 0) == count_words(2, 4, 0)


def test_tc_spot_values():
    assert count_tc_words(Params(2, 8, 7)) == 8485564550400
    assert count_tc_words(Params(3, 7, 6)) == 560319972030000
    assert count_tc_words(Params(6, 5, 4)) == 483098464854720
    assert count_tc_words(Params(2, 1, 0)) == 1


def test_tc_table_matches_pointwise_counts():
    for d in (2, 3):
        table = tc_table(d, 6)
        for n in range(1, 7):
            assert table[n] == [count_tc_words(Params(d, n, k)) for k in range(n)]
            assert count_tc_total(d, n) == sum(table[n])


def test_all_heavy_slice_three_routes_agree():
    for d in (2, 3, 4):
        two_term = b_max_table(d, 10)
        binomial = b_max_table_binomial(d, 10)
        assert two_term == binomial
        full = b_table(d, 10)
        for (n, m), v in two_term.items():
            assert full.b(n, n, m) == v


def test_lambda_factor_values():
    assert lambda_factor(2) == 3
    assert lambda_factor(3) == 8
    assert lambda_factor(4) == Fraction(125, 6)
    with pytest.raises(ValueError):
        lambda_factor(1)


def test_e_table_boundary_and_scaling():
    for d in (2, 3):
        table = e_table(d, 6)
        assert isinstance(table, ETable)
        lam = lambda_factor(d)
        assert table.e(2, 0) == 1 / lam
        assert table.e(2, 2) == 0
        assert table.e(3, -1) == 0
        assert table.e(3, 0) == 0  # parity
        b = b_max_table(d, 6)
        want = Fraction(b[(2, 2)]) / (lam**2 * factorial(2) ** (d - 1))
        assert table.e(4, 0) == want
        assert table.as_float(4, 0) == float(want)
        with pytest.raises(ValueError):
            table.e(14, 0)


def test_word_class_argument_validation():
    with pytest.raises(ValueError):
        count_words(1, 3, 0)
    with pytest.raises(ValueError):
        count_words(2, 3, 4)
    with pytest.raises(ValueError):
        count_words(2, -1, 0)
    assert count_words(2, 0, 0) == 1
