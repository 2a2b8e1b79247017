# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the search for `(n, k, eta)`-good pairs: positive integers `a, b` whose ratio
lies in a window just below `(2n - 4k)/(n + 2k)`, with both at most `ceil(200/eta)`.
"""

from fractions import Fraction
from typing import Tuple, Union

import dataclasses
import logging
import math

import apportion

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class GoodPair:
    """
    A good pair with its window.

    Attributes
    ----------
    a : int
        The denominator, `ceil(100/eta)`.
    b : int
        The smallest numerator in the window.
    window : tuple of Fraction
        The closed interval `[lower, upper]` that `b/a` must lie in.
    cap : int
        `ceil(200/eta)`, the bound on `a` and `b`.
    """
    a: int
    b: int
    window: Tuple[Fraction, Fraction]
    cap: int

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def window_width(self) -> Fraction:
        return self.window[1] - self.window[0]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def is_good(self) -> bool:
        """
        Check both clauses of the definition in exact arithmetic.
        """
        ratio = Fraction(self.b, self.a)
        in_window = self.window[0] <= ratio <= self.window[1]

        return self.a >= 1 and self.b >= 1 and in_window and max(self.a, self.b) <= self.cap

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def good_window(n: int, k: int, eta: Union[Fraction, float, str]) -> Tuple[Fraction, Fraction]:
    """
    Compute the window `[(2n - 4k - 0.08 eta n)/(n + 2k + 0.04 eta n), (2n - 4k)/(n + 2k) - eta^2]`
    exactly.

    Parameters
    ----------
    n, k : int
        The vertex count and the number of odd cycles.
    eta : Fraction, float or str
        The slack, `0 < eta < 1`.

    Returns
    -------
    tuple of Fraction
        The lower and upper ends.
    """
    eta = apportion.to_fraction(value=eta)
    lower = (2*n - 4*k - Fraction(8, 100) * eta * n) / (n + 2*k + Fraction(4, 100) * eta * n)
    upper = Fraction(2*n - 4*k, n + 2*k) - eta**2

    return (lower, upper)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def in_guaranteed_regime(n: int, k: int, eta: Union[Fraction, float, str]) -> bool:
    """
    Check `k < (1 - eta/5) n / 6`, where the window is known to be wide enough to hold a
    numerator.
    """
    eta = apportion.to_fraction(value=eta)

    return k < (1 - eta / 5) * n / 6

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def good_pair(n: int, k: int, eta: Union[Fraction, float, str]) -> GoodPair:
    """
    Find the good pair with `a = ceil(100/eta)` and the smallest valid `b`.

    Parameters
    ----------
    n : int
        The positive vertex count.
    k : int
        The number of odd cycles, `0 <= k < n`.
    eta : Fraction, float or str
        The slack, `0 < eta < 1`.

    Returns
    -------
    GoodPair
        The pair.

    Raises
    ------
    ValueError
        If the parameters are out of range or the window holds no valid `b`.
    """
    exact = apportion.to_fraction(value=eta)

    if not 0 < exact < 1:
        raise ValueError(f"eta must lie strictly between 0 and 1, got {eta}.")

    if n <= 0 or not 0 <= k < n:
        raise ValueError(f"Expected 0 <= k < n with n positive, got n = {n}, k = {k}.")

    a = math.ceil(100 / exact)
    cap = math.ceil(200 / exact)
    window = good_window(n=n, k=k, eta=exact)
    b = max(1, math.ceil(a * window[0]))

    if Fraction(b, a) > window[1] or b > cap:
        regime = in_guaranteed_regime(n=n, k=k, eta=exact)
        raise ValueError(
            f"No good b exists for n = {n}, k = {k}, eta = {eta}: the window "
            f"[{float(window[0]):.6f}, {float(window[1]):.6f}] holds no b/{a} with b <= {cap}"
            + (" (inside the guaranteed regime)." if regime else ".")
        )

    _logger.debug("Good pair for n=%d, k=%d, eta=%s: a=%d, b=%d.", n, k, eta, a, b)

    return GoodPair(a=a, b=b, window=window, cap=cap)
