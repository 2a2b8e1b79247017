# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains integer apportionment: rounding `q * a_i` to integers that sum to `q` with
every entry within 1 of its share.
"""

from fractions import Fraction
from typing import List, Sequence, Union

import math

Weight = Union[Fraction, float, int, str]

_TOLERANCE = Fraction(1, 10**9)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def to_fraction(value: Weight) -> Fraction:
    """
    Convert a weight to an exact rational. Floats go through their shortest decimal form, so `0.6`
    becomes `3/5` rather than its binary expansion.
    """
    if isinstance(value, float):
        return Fraction(repr(value))

    return Fraction(value)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def normalized_weights(weights: Sequence[Weight]) -> List[Fraction]:
    """
    Convert and validate weights, then scale them to sum to exactly 1.

    Raises
    ------
    ValueError
        If `weights` is empty, a weight is not positive, or the sum is more than `1e-9` from 1.
    """
    if len(weights) == 0:
        raise ValueError("The weights are empty.")

    exact = [to_fraction(value=w) for w in weights]

    for (index, w) in enumerate(exact):
        if w <= 0:
            raise ValueError(f"Weight {index} is not positive: {weights[index]}.")

    total = sum(exact)

    if abs(total - 1) > _TOLERANCE:
        raise ValueError(f"The weights sum to {float(total)}, not 1.")

    return [w / total for w in exact]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def apportion(q: int, weights: Sequence[Weight]) -> List[int]:
    """
    Round the shares `q * a_i` to integers `q_i` with `sum(q_i) == q` and `|q_i - q * a_i| <= 1`.

    Every share is rounded down, then the `w = q - sum(floor(q * a_i))` first entries get one more.

    Parameters
    ----------
    q : int
        The positive total.
    weights : list of Fraction, float, int or str
        The positive weights `a_i`, summing to 1 within `1e-9`. They are rescaled to sum to exactly
        1 in rational arithmetic.

    Returns
    -------
    list of int
        The integers `q_i`.

    Raises
    ------
    ValueError
        If `q` is not positive or the weights are invalid.
    """
    if q <= 0:
        raise ValueError(f"The total must be positive, got {q}.")

    shares = [q * a for a in normalized_weights(weights=weights)]
    counts = [math.floor(share) for share in shares]
    extra = q - sum(counts)

    for index in range(extra):
        counts[index] += 1

    return counts

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def max_deviation(q: int, weights: Sequence[Weight], counts: Sequence[int]) -> Fraction:
    """
    Get `max_i |q_i - q * a_i|` in exact arithmetic against the normalized weights.
    """
    shares = [q * a for a in normalized_weights(weights=weights)]

    return max(abs(count - share) for (count, share) in zip(counts, shares))
