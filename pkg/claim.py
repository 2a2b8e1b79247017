# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the error raised when a step of a construction is contradicted at runtime.
"""

import logging

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
class ClaimViolation(AssertionError):
    """
    Raised when a deduction that a construction relies on turns out to be false. This always
    signals a bug or an input that does not meet the hypothesis of the construction.
    """

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def check(condition: bool, message: str):
    """
    Raise a `ClaimViolation` with `message` if `condition` does not hold. Unlike `assert`, this is
    never stripped by `python -O`.

    Parameters
    ----------
    condition : bool
        The claimed condition.
    message : str
        The description of the claim.

    Raises
    ------
    ClaimViolation
        If `condition` is false.
    """
    if not condition:
        _logger.error("Claim violated: %s", message)
        raise ClaimViolation(message)
