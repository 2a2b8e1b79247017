# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the experiment record and factory functions for making and storing result
tables.
"""

from typing import Sequence

import dataclasses
import pathlib

import pandas as pd
import pyarrow.feather

import settings

COLUMNS = ["n", "family", "k", "generator", "seed", "delta2", "status", "nodes", "ms"]

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ExperimentRecord:
    """
    One row of a threshold experiment.

    Attributes
    ----------
    n : int
        The vertex count.
    family : str
        The family label, lengths joined by the settings delimiter.
    k : int
        The number of odd cycles.
    generator : str
        The name of the host prototype, enough with `n`, `family` and `seed` to rebuild the host.
        Codegree-floor names carry their signed offset, as in `codegree-floor-1`.
    seed : int
        The seed the host was made with.
    delta2 : int
        The achieved minimum codegree of the host.
    status : str
        The solver status.
    nodes : int
        The nodes the solver expanded.
    ms : float
        The solver wall time in milliseconds.
    """
    n: int
    family: str
    k: int
    generator: str
    seed: int
    delta2: int
    status: str
    nodes: int
    ms: float

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def make_results_df(records: Sequence[ExperimentRecord]) -> pd.DataFrame:
    """
    Make the result table from the records, keeping their order.

    Parameters
    ----------
    records : list of ExperimentRecord
        The records.

    Returns
    -------
    pandas.DataFrame
        The table with the columns in `COLUMNS`.
    """
    data = {column: [] for column in COLUMNS}

    for record in records:
        for column in COLUMNS:
            data[column].append(getattr(record, column))

    results_df = pd.DataFrame(data=data, columns=COLUMNS)
    results_df["ms"] = results_df["ms"].astype(float).round(3)

    return results_df

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def write_results(results_df: pd.DataFrame, out_dir: str):
    """
    Write `results.csv`, whose first line is a `# schema=N` comment, and a `results.feather` copy.
    """
    basepath = pathlib.Path(out_dir)

    with open(basepath / "results.csv", mode="w", encoding="utf-8", newline="") as handle:
        handle.write(f"# schema={settings.parameters.schema_version}\n")
        results_df.to_csv(handle, index=False)

    pyarrow.feather.write_feather(df=results_df, dest=str(basepath / "results.feather"))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def read_results(path: str) -> pd.DataFrame:
    """
    Read a `results.csv`, checking its schema comment.

    Raises
    ------
    ValueError
        If the schema line is missing or names another version.
    """
    with open(path, mode="r", encoding="utf-8") as handle:
        first = handle.readline().strip()

    expected = f"# schema={settings.parameters.schema_version}"

    if first != expected:
        raise ValueError(f"Expected the header '{expected}' in {path}, got '{first}'.")

    return pd.read_csv(path, skiprows=1, dtype={"family": str})
