# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for rounding proportional shares.
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import apportion

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("q, weights, expected", [
    (10, [0.5, 0.5], [5, 5]),
    (10, [Fraction(1, 3)] * 3, [4, 3, 3]),
    (7, [0.6, 0.4], [5, 2]),
    (1, ["1"], [1])
])
def test_apportion(q, weights, expected):
    counts = apportion.apportion(q=q, weights=weights)

    assert counts == expected
    assert apportion.max_deviation(q=q, weights=weights, counts=counts) <= 1

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_floats_are_read_as_decimals():
    assert apportion.to_fraction(value=0.6) == Fraction(3, 5)
    assert apportion.to_fraction(value="1/3") == Fraction(1, 3)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("q, weights", [(0, [1]), (5, []), (5, [0.5, 0.6]), (5, [1.5, -0.5])])
def test_invalid_inputs(q, weights):
    with pytest.raises(ValueError):
        apportion.apportion(q=q, weights=weights)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _weights(draw):
    raw = draw(st.lists(st.integers(min_value=1, max_value=1000), min_size=1, max_size=6))

    return [Fraction(x, sum(raw)) for x in raw]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(weights=_weights())
@settings(max_examples=1000, deadline=None)
def test_sum_and_deviation(weights):
    for q in range(1, 51):
        counts = apportion.apportion(q=q, weights=weights)

        assert sum(counts) == q
        assert all(
            abs(count - q * a) <= 1 for (count, a) in zip(counts, weights)
        )
