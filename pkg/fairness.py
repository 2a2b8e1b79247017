# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains checks of whether a sample `Q` of a ground set `T = {0..t-1}` splits sets
fairly: `A` is split `gamma`-fairly by `Q` if `| |A & Q|/|Q| - |A|/|T| | <= gamma`.
"""

from fractions import Fraction
from typing import AbstractSet, List, Sequence, Tuple, Union

import dataclasses
import logging

import numpy as np
import scipy.stats

import apportion

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class FairnessTrials:
    """
    The outcome of repeated random samples.

    Attributes
    ----------
    trials : int
        The number of samples drawn.
    all_fair : int
        The number of samples that split every set fairly.
    interval : tuple of float
        The exact (Clopper-Pearson) 95% confidence interval of the all-fair probability.
    """
    trials: int
    all_fair: int
    interval: Tuple[float, float]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def fraction(self) -> float:
        return self.all_fair / self.trials

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def fair_split_check(
    t: int, family: Sequence[AbstractSet[int]], sample: AbstractSet[int],
    gamma: Union[Fraction, float, str]
) -> List[bool]:
    """
    Check, in exact arithmetic, which sets of the family are split `gamma`-fairly by the sample.

    Parameters
    ----------
    t : int
        The size of the ground set `{0..t-1}`.
    family : list of set of int
        The sets `A`.
    sample : set of int
        The non-empty sample `Q`.
    gamma : Fraction, float or str
        The allowed gap.

    Returns
    -------
    list of bool
        One verdict per set.

    Raises
    ------
    ValueError
        If the sample is empty or not inside the ground set.
    """
    sample = frozenset(sample)

    if not sample:
        raise ValueError("The sample is empty.")

    if min(sample) < 0 or max(sample) >= t:
        raise ValueError(f"The sample is not inside the ground set of size {t}.")

    gamma = apportion.to_fraction(value=gamma)

    return [
        abs(Fraction(len(a & sample), len(sample)) - Fraction(len(a), t)) <= gamma
    for a in (frozenset(x) for x in family)]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def fair_split_trials(
    t: int, family: Sequence[AbstractSet[int]], q: int, gamma: Union[Fraction, float, str],
    trials: int, seed: int
) -> FairnessTrials:
    """
    Draw uniform samples of size `q` and count how often every set is split fairly.

    Parameters
    ----------
    t : int
        The size of the ground set.
    family : list of set of int
        The sets `A`.
    q : int
        The sample size, `1 <= q <= t`.
    gamma : Fraction, float or str
        The allowed gap.
    trials : int
        The number of samples.
    seed : int
        The seed of the random number generator.

    Returns
    -------
    FairnessTrials
        The counts and the confidence interval.
    """
    if not 1 <= q <= t:
        raise ValueError(f"The sample size {q} is outside 1..{t}.")

    if trials <= 0:
        raise ValueError(f"The number of trials must be positive, got {trials}.")

    rng = np.random.default_rng(seed=seed)
    all_fair = 0

    for _ in range(trials):
        sample = frozenset(int(x) for x in rng.choice(t, size=q, replace=False))

        if all(fair_split_check(t=t, family=family, sample=sample, gamma=gamma)):
            all_fair += 1

    interval = scipy.stats.binomtest(k=all_fair, n=trials).proportion_ci(
        confidence_level=0.95, method="exact"
    )

    _logger.info("%d of %d samples of size %d split every set fairly.", all_fair, trials, q)

    return FairnessTrials(
        trials=trials, all_fair=all_fair, interval=(float(interval.low), float(interval.high))
    )
