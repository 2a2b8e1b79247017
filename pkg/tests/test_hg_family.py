# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for cycle families, their parity and cover numbers.
"""

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import hg_family

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("lengths, n, k", [
    ([6, 8], 14, 1),
    ([8, 12], 20, 0),
    ([6, 6, 8], 20, 2),
    ([10], 10, 1)
])
def test_family_from_lengths(lengths, n, k):
    spec = hg_family.family_from_lengths(lengths=lengths)

    assert (spec.n, spec.k) == (n, k)
    assert spec.lengths == tuple(lengths)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("lengths", [[5], [4], [6, 7], []])
def test_invalid_lengths_are_rejected(lengths):
    with pytest.raises(ValueError):
        hg_family.family_from_lengths(lengths=lengths)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("lengths, expected", [([6], 2), ([8], 2), ([6, 6, 8], 6), ([10, 12], 6)])
def test_cover_number(lengths, expected):
    assert hg_family.cover_number(spec=hg_family.family_from_lengths(lengths=lengths)) == expected

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_parse_family_accepts_both_delimiters():
    assert hg_family.parse_family(a_string="6,8").lengths == (6, 8)
    assert hg_family.parse_family(a_string="6;8").lengths == (6, 8)
    assert hg_family.parse_family(a_string=" 6 , 8 ,").lengths == (6, 8)

    with pytest.raises(ValueError):
        hg_family.parse_family(a_string="6,x")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_label_and_str():
    spec = hg_family.family_from_lengths(lengths=[6, 8])

    assert spec.label == "6;8"
    assert str(spec) == "6,8"
    assert hg_family.parse_family(a_string=spec.label) == spec

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_iter_families():
    assert [f.lengths for f in hg_family.iter_families(n=12)] == [(12,), (6, 6)]
    assert [f.lengths for f in hg_family.iter_families(n=14)] == [(14,), (8, 6)]
    assert [f.lengths for f in hg_family.iter_families(n=9)] == []
    assert list(hg_family.iter_families(n=0)) == []

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(lengths=st.lists(st.integers(min_value=3, max_value=20).map(lambda x: 2 * x), min_size=1,
                        max_size=6))
@settings(max_examples=200, deadline=None)
def test_cover_number_identity(lengths):
    spec = hg_family.family_from_lengths(lengths=lengths)

    assert 4 * hg_family.cover_number(spec=spec) == spec.n + 2 * spec.k
    assert hg_family.threshold_floor(spec=spec) == hg_family.cover_number(spec=spec)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("n", range(6, 25, 2))
def test_iter_families_sum_to_n(n):
    families = list(hg_family.iter_families(n=n))

    assert families
    assert all(f.n == n and list(f.lengths) == sorted(f.lengths, reverse=True) for f in families)
    assert len(set(families)) == len(families)
