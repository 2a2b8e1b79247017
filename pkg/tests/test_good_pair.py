# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for good pairs and their windows.
"""

from fractions import Fraction
import math

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import good_pair

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_large_n_without_odd_cycles():
    pair = good_pair.good_pair(n=10**6, k=0, eta=0.1)

    assert (pair.a, pair.b, pair.cap) == (1000, 1985, 2000)
    assert pair.window[1] == Fraction(199, 100)
    assert Fraction(1984, 1000) < pair.window[0] < Fraction(1985, 1000)
    assert pair.is_good()

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_outside_the_regime_has_no_pair():
    assert not good_pair.in_guaranteed_regime(n=100, k=99, eta=0.1)

    with pytest.raises(ValueError):
        good_pair.good_pair(n=100, k=99, eta=0.1)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("n, k, eta", [(10, 0, 0), (10, 0, 1), (10, 10, 0.1), (0, 0, 0.1)])
def test_invalid_parameters(n, k, eta):
    with pytest.raises(ValueError):
        good_pair.good_pair(n=n, k=k, eta=eta)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_b_is_the_smallest_numerator():
    pair = good_pair.good_pair(n=600, k=10, eta="1/20")

    assert pair.is_good()
    assert Fraction(pair.b - 1, pair.a) < pair.window[0]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _regime(draw):
    eta = Fraction(draw(st.integers(min_value=10, max_value=40)), 1000)
    n = draw(st.integers(min_value=6, max_value=10**6))
    k_limit = math.ceil((1 - eta / 5) * n / 6)
    k = draw(st.integers(min_value=0, max_value=max(0, k_limit - 1)))

    return (n, k, eta)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(params=_regime())
@settings(max_examples=500, deadline=None)
def test_window_is_wide_in_the_regime(params):
    (n, k, eta) = params

    assert good_pair.in_guaranteed_regime(n=n, k=k, eta=eta)

    (lower, upper) = good_pair.good_window(n=n, k=k, eta=eta)

    assert upper - lower >= Fraction(2, 100) * eta

    pair = good_pair.good_pair(n=n, k=k, eta=eta)

    assert pair.is_good()
    assert pair.a == math.ceil(100 / eta)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_window_width():
    pair = good_pair.good_pair(n=10**6, k=0, eta=0.1)

    assert pair.window_width == pair.window[1] - pair.window[0]
    assert pair.window_width > 0
