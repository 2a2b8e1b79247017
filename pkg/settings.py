# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the default parameters for the toolkit.
"""

import dataclasses

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass
class Parameters:
    """
    The global defaults. Command line flags override these per invocation.

    Attributes
    ----------
    budget : int
        The node budget of the exact searches.
    delimiter : str
        The delimiter of cycle lengths inside a single CSV cell.
    exhaustive_budget : int
        The largest product of `2**|V_i|` that the regularity checker enumerates exhaustively.
    output_format : str
        The default output format of the command line.
    rng_name : str
        The name of the bit generator behind `numpy.random.default_rng`.
    sample_count : int
        The number of sub-triples drawn when the regularity checker falls back to sampling.
    schema_version : int
        The version of the experiment CSV schema.
    seed : int
        The default seed.
    """
    budget: int
    delimiter: str
    exhaustive_budget: int
    output_format: str
    rng_name: str
    sample_count: int
    schema_version: int
    seed: int

#***************************************************************************************************
#***************************************************************************************************
parameters = Parameters(
    budget=2_000_000,
    delimiter=";",
    exhaustive_budget=2**24,
    output_format="text",
    rng_name="PCG64",
    sample_count=20_000,
    schema_version=1,
    seed=42
)
