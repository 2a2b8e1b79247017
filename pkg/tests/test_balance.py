# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for balancing cycles into bins and for A-transformations.
"""

import itertools
import math

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import balance

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _brute_force_feasible(targets, lengths, tol, odd_cap):
    for bins in itertools.product(range(len(targets)), repeat=len(lengths)):
        sums = [0] * len(targets)
        odds = [0] * len(targets)

        for (length, index) in zip(lengths, bins):
            sums[index] += length
            odds[index] += balance.is_odd(length=length)

        if all(abs(s - t) <= tol for (s, t) in zip(sums, targets)) and max(odds) <= odd_cap:
            return True

    return False

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_exact_split():
    result = balance.balance_partition(targets=(30, 30), lengths=[6, 6, 6, 8, 8, 8, 8, 10])

    assert result.feasible
    assert result.sums == (30, 30)
    assert sorted(result.contents()) == [[6, 6, 8, 10], [6, 8, 8, 8]]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_seed_apportions_each_parity():
    bins = balance.seed_assignment(targets=(30, 30), lengths=[6, 6, 6, 8, 8, 8, 8, 10])
    odd = [0, 0]
    even = [0, 0]

    for (length, index) in zip([6, 6, 6, 8, 8, 8, 8, 10], bins):
        (odd if balance.is_odd(length=length) else even)[index] += 1

    assert odd == [2, 2]
    assert even == [2, 2]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_one_bin_takes_everything():
    result = balance.balance_partition(targets=(25,), lengths=[6, 8, 10])

    assert result.bins == (0, 0, 0)
    assert result.deviations == (-1,)
    assert not result.feasible
    assert result.proven_infeasible

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_tolerance():
    result = balance.balance_partition(targets=(20, 20), lengths=[6, 6, 6, 6, 8, 8], tol=2)

    assert result.feasible
    assert sorted(result.sums) in ([20, 20], [18, 22])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_odd_cap_is_respected():
    result = balance.balance_partition(targets=(20, 20), lengths=[6, 6, 6, 6, 8, 8], odd_cap=2)

    assert result.feasible
    assert result.odd_counts == (2, 2)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_infeasible_instance_is_proven():
    result = balance.balance_partition(targets=(10, 10), lengths=[6, 6, 8])

    assert not result.feasible
    assert result.proven_infeasible
    assert result.to_dict()["proven_infeasible"]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("targets, tol", [((), 0), ((10, 0), 0), ((10,), -1)])
def test_invalid_parameters(targets, tol):
    with pytest.raises(ValueError):
        balance.balance_partition(targets=targets, lengths=[6], tol=tol)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("support, coefficients", [
    ([6, 8], (-1, 1)),
    ([6, 10], (2, -1)),
    ([10, 6], (2, -1)),
    ([6, 8, 10], (-1, 1, 0))
])
def test_a_transform_coeffs(support, coefficients):
    transform = balance.a_transform_coeffs(support=support)

    assert transform.coefficients == coefficients
    assert transform.shift() == 2

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("support", [[8, 12], [6, 12], [6], [6, 7], [6, 16]])
def test_invalid_supports(support):
    with pytest.raises(ValueError):
        balance.a_transform_coeffs(support=support)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("support", [
    list(s) for size in range(2, 6) for s in itertools.combinations(balance.A_LENGTHS, size)
    if math.gcd(*s) == 2
])
def test_every_admissible_support_has_a_transform(support):
    assert balance.a_transform_coeffs(support=support).shift() == 2

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_apply_and_reverse():
    transform = balance.a_transform_coeffs(support=[6, 8])
    start = balance.BalanceAssignment(
        targets=(28, 12), lengths=(6, 6, 8, 8, 6, 6), bins=(0, 0, 0, 0, 1, 1)
    )
    moved = balance.apply_a_transform(assignment=start, from_bin=0, to_bin=1, coeffs=transform)

    assert moved.sums == (26, 14)
    assert moved.odd_counts == (3, 1)

    back = balance.apply_a_transform(assignment=moved, from_bin=1, to_bin=0, coeffs=transform)

    assert back.sums == start.sums
    assert back.contents() == start.contents()

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_apply_needs_the_cycles():
    transform = balance.a_transform_coeffs(support=[6, 8])
    start = balance.BalanceAssignment(targets=(12, 16), lengths=(6, 6, 8, 8), bins=(0, 0, 1, 1))

    with pytest.raises(ValueError):
        balance.apply_a_transform(assignment=start, from_bin=0, to_bin=1, coeffs=transform)

    with pytest.raises(ValueError):
        balance.apply_a_transform(assignment=start, from_bin=1, to_bin=1, coeffs=transform)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_balance_with_a_transforms():
    transform = balance.a_transform_coeffs(support=[6, 8])
    start = balance.BalanceAssignment(
        targets=(24, 16), lengths=(6, 6, 8, 8, 6, 6), bins=(0, 0, 0, 0, 1, 1)
    )

    assert balance.balance_with_a_transforms(assignment=start, coeffs=transform).sums == (24, 16)

    with pytest.raises(ValueError):
        balance.balance_with_a_transforms(
            assignment=balance.BalanceAssignment(
                targets=(25, 15), lengths=start.lengths, bins=start.bins
            ), coeffs=transform
        )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _instances(draw):
    lengths = draw(st.lists(st.sampled_from([6, 8, 10, 12, 14]), min_size=1, max_size=7))
    count = draw(st.integers(min_value=1, max_value=3))
    bins = draw(st.lists(st.integers(min_value=0, max_value=count - 1), min_size=len(lengths),
                         max_size=len(lengths)))
    sums = [0] * count

    for (length, index) in zip(lengths, bins):
        sums[index] += length

    shifts = draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=count,
                           max_size=count))
    targets = tuple(max(1, s + d) for (s, d) in zip(sums, shifts))
    tol = draw(st.integers(min_value=0, max_value=2))
    odd_cap = draw(st.integers(min_value=1, max_value=len(lengths)))

    return (targets, lengths, tol, odd_cap)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(instance=_instances())
@settings(max_examples=200, deadline=None)
def test_matches_brute_force(instance):
    (targets, lengths, tol, odd_cap) = instance
    result = balance.balance_partition(targets=targets, lengths=lengths, tol=tol, odd_cap=odd_cap)

    if _brute_force_feasible(targets=targets, lengths=lengths, tol=tol, odd_cap=odd_cap):
        assert result.feasible
        assert all(abs(d) <= tol for d in result.deviations)
        assert max(result.odd_counts) <= odd_cap
    else:
        assert not result.feasible
        assert result.proven_infeasible

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(
    support=st.sampled_from([[6, 8], [6, 10], [8, 10], [6, 8, 10], [10, 14], [6, 14]]),
    extra=st.lists(st.sampled_from([6, 8, 10, 12, 14]), max_size=6)
)
@settings(max_examples=100, deadline=None)
def test_transforms_shift_by_two(support, extra):
    transform = balance.a_transform_coeffs(support=support)
    need = [length for (length, b) in zip(transform.support, transform.coefficients)
            for _ in range(abs(b))]
    lengths = tuple(need + need + list(extra))
    bins = tuple([0] * len(need) + [1] * len(need) + [index % 3 for index in range(len(extra))])
    start = balance.BalanceAssignment(targets=(1, 1, 1), lengths=lengths, bins=bins)
    moved = balance.apply_a_transform(assignment=start, from_bin=0, to_bin=1, coeffs=transform)

    assert moved.sums[0] == start.sums[0] - 2
    assert moved.sums[1] == start.sums[1] + 2
    assert moved.sums[2] == start.sums[2]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_swap_history():
    # The seed puts 8 + 6 in each bin; one swap of a 6 for an 8 halves both totals.
    result = balance.balance_partition(targets=[10, 18], lengths=[6, 6, 8, 8])

    assert result.history == ((4, -4), (2, -2))
    assert not result.feasible
    assert result.proven_infeasible

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(instance=_instances())
@settings(max_examples=200, deadline=None)
def test_swap_phase_makes_monotone_progress(instance):
    (targets, lengths, tol, odd_cap) = instance
    result = balance.balance_partition(targets=targets, lengths=lengths, tol=tol, odd_cap=odd_cap)
    seeded = balance.BalanceAssignment(
        targets=tuple(targets), lengths=tuple(lengths),
        bins=tuple(balance.seed_assignment(targets=targets, lengths=lengths))
    )

    assert result.history[0] == balance.badness(deviations=seeded.deviations, tol=tol)

    for (before, after) in zip(result.history, result.history[1:]):
        assert after[0] <= before[0]
        assert after[1] >= before[1]
        assert after != before

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _planted_instances(draw):
    count = draw(st.integers(min_value=1, max_value=4))
    lengths = draw(st.lists(st.sampled_from(balance.A_LENGTHS), min_size=count, max_size=30))
    rest = draw(st.lists(st.integers(min_value=0, max_value=count - 1),
                         min_size=len(lengths) - count, max_size=len(lengths) - count))
    planted = balance.BalanceAssignment(
        targets=(1,) * count, lengths=tuple(lengths), bins=tuple(range(count)) + tuple(rest)
    )
    tol = draw(st.integers(min_value=0, max_value=2))
    shifts = draw(st.lists(st.integers(min_value=-tol, max_value=tol), min_size=count,
                           max_size=count))
    targets = tuple(s + d for (s, d) in zip(planted.sums, shifts))

    return (targets, lengths, tol, max(planted.odd_counts))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.slow
@given(instance=_planted_instances())
@settings(max_examples=200, deadline=None)
def test_finds_a_planted_assignment(instance):
    (targets, lengths, tol, odd_cap) = instance
    result = balance.balance_partition(
        targets=targets, lengths=lengths, tol=tol, odd_cap=max(1, odd_cap), budget=10**7
    )

    assert result.feasible
    assert all(abs(d) <= tol for d in result.deviations)
    assert sorted(result.lengths) == sorted(lengths)
