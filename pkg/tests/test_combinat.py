from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apolar import binom, ci_hilbert, dim_forms, multinomial


def test_binom_small_values():
    assert binom(5, 2) == 10
    assert binom(7, 0) == 1
    assert binom(0, 0) == 1


def test_binom_vanishing_convention():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0


def test_binom_rejects_negative_top():
    with pytest.raises(ValueError):
        binom(-1, 0)


@given(st.integers(0, 60), st.integers(-5, 65))
def test_binom_matches_math_comb(a, b):
    expected = comb(a, b) if 0 <= b <= a else 0
    assert binom(a, b) == expected


def test_dim_forms():
    assert dim_forms(2, 3) == 4
    assert dim_forms(3, 2) == 6
    assert dim_forms(4, 8) == 165
    assert dim_forms(3, 0) == 1
    assert dim_forms(3, -2) == 0


def test_multinomial():
    assert multinomial((2, 0, 0)) == 1
    assert multinomial((1, 1)) == 2
    assert multinomial((2, 1, 1)) == 12


def test_ci_hilbert_small_cases():
    assert ci_hilbert(2, 2) == (1, 2, 1)
    assert ci_hilbert(2, 3) == (1, 2, 3, 2, 1)
    assert ci_hilbert(3, 2) == (1, 3, 3, 1)
    assert ci_hilbert(3, 3) == (1, 3, 6, 7, 6, 3, 1)


@given(st.integers(2, 5), st.integers(2, 5))
def test_ci_hilbert_shape(n, d):
    hf = ci_hilbert(n, d)
    assert len(hf) == n * (d - 1) + 1
    assert hf[0] == 1 and hf[-1] == 1
    assert hf[1] == n
    assert hf == hf[::-1]
    assert sum(hf) == d**n
