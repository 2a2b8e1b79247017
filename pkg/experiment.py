# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the threshold experiment: for each vertex count and family, the extremal host,
the complete host, and random hosts whose minimum codegree sits just below, at, and just above
`floor((n + 2k)/4)`, each handed to the exact solver.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

import concurrent.futures
import dataclasses
import json
import logging
import pathlib

from rich.progress import track
import numpy as np

import graph_prototype
import hg_embedding
import hg_family
import prototype
import record_factory
import settings
import solver

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass
class ExperimentPlan:
    """
    The description of a threshold experiment.

    Attributes
    ----------
    n_range : tuple of int
        The vertex counts.
    families : optional of list of hg_family.CycleFamilySpec
        The families to try. `None` tries every family on each vertex count.
    trials : int
        The number of random hosts per codegree offset.
    seed : int
        The seed from which the trial seeds are drawn.
    out : str
        The run directory.
    budget : int
        The solver's node budget per row.
    workers : int
        The number of rows solved concurrently.
    offsets : tuple of int
        The codegree offsets from `floor((n + 2k)/4)`.
    """
    n_range: Tuple[int, ...]
    families: Optional[List[hg_family.CycleFamilySpec]]
    trials: int
    seed: int
    out: str
    budget: int = settings.parameters.budget
    workers: int = 1
    offsets: Tuple[int, ...] = (-1, 0, 1)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def trial_seeds(self) -> List[int]:
        """
        Draw the trial seeds from the plan seed, in increasing order.
        """
        rng = np.random.default_rng(seed=self.seed)

        return sorted(int(rng.integers(np.iinfo(np.int64).max)) for _ in range(self.trials))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": settings.parameters.schema_version,
            "rng": settings.parameters.rng_name,
            "n_range": list(self.n_range),
            "families": None if self.families is None else [str(f) for f in self.families],
            "trials": self.trials,
            "seed": self.seed,
            "trial_seeds": self.trial_seeds(),
            "budget": self.budget,
            "workers": self.workers,
            "offsets": list(self.offsets)
        }

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class _Row:
    spec: hg_family.CycleFamilySpec
    prototype: prototype.Prototype
    seed: int
    offset: Optional[int] = None

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class RunVerification:
    """
    The outcome of `verify_run`.

    Attributes
    ----------
    rows : int
        The number of rows in the table.
    found : int
        The number of rows with status `found`.
    verified : int
        The number of stored embeddings that re-verified.
    failures : tuple of str
        A description of each failure.
    """
    rows: int
    found: int
    verified: int
    failures: Tuple[str, ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def ok(self) -> bool:
        return not self.failures and self.verified == self.found

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def all_families(n: int) -> List[hg_family.CycleFamilySpec]:
    """
    Get every family on exactly `n` vertices.
    """
    return list(hg_family.iter_families(n=n))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def make_rows(plan: ExperimentPlan) -> List[_Row]:
    """
    Make the rows of a plan in (n, family, seed) order. Codegree targets above `n - 2` are
    skipped.
    """
    rows = []
    trial_seeds = plan.trial_seeds()

    for n in plan.n_range:
        if plan.families is None:
            families = all_families(n=n)
        else:
            families = [f for f in plan.families if f.n == n]

        for spec in families:
            rows.append(_Row(spec=spec, prototype=graph_prototype.ExtremalGraphPrototype(),
                             seed=plan.seed))
            rows.append(_Row(spec=spec, prototype=graph_prototype.CompleteGraphPrototype(),
                             seed=plan.seed))

            for seed in trial_seeds:
                for offset in plan.offsets:
                    maker = graph_prototype.CodegreeFloorGraphPrototype(offset=offset)

                    if 0 <= maker.target(spec=spec) <= n - 2:
                        rows.append(_Row(spec=spec, prototype=maker, seed=seed, offset=offset))

    return rows

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _solve_row(row: _Row, budget: int) -> Tuple[record_factory.ExperimentRecord, Optional[Dict]]:
    host = row.prototype.clone(spec=row.spec, seed=row.seed)
    result = solver.solve_spanning(host=host, spec=row.spec, budget=budget)

    record = record_factory.ExperimentRecord(
        n=row.spec.n, family=row.spec.label, k=row.spec.k, generator=row.prototype.name,
        seed=row.seed, delta2=host.min_codegree(), status=result.status.value,
        nodes=result.stats.nodes, ms=result.stats.ms
    )

    stored = None

    if result.embedding is not None:
        stored = {
            "n": row.spec.n, "family": row.spec.label, "generator": row.prototype.name,
            "seed": row.seed, "offset": row.offset,
            "cycles": [list(cycle) for cycle in result.embedding.cycles]
        }

    return (record, stored)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def run_threshold_experiment(plan: ExperimentPlan) -> List[record_factory.ExperimentRecord]:
    """
    Run a threshold experiment and write its run directory.

    The directory receives `results.csv` (with a schema comment), `results.feather`,
    `embeddings.json` holding the embedding of every found row, and `run.json` describing the
    plan. Rows are solved concurrently when `plan.workers > 1` and written in plan order.

    Parameters
    ----------
    plan : ExperimentPlan
        The plan.

    Returns
    -------
    list of record_factory.ExperimentRecord
        The records, in plan order.
    """
    basepath = pathlib.Path(plan.out)
    basepath.mkdir(parents=True, exist_ok=True)

    rows = make_rows(plan=plan)
    records = []
    embeddings = []

    _logger.info("Running %d rows with seed %d.", len(rows), plan.seed)

    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, plan.workers)) as executor:
        outcomes = executor.map(lambda row: _solve_row(row=row, budget=plan.budget), rows)

        for (index, (record, stored)) in enumerate(
            track(outcomes, "Solving rows...", total=len(rows))
        ):
            records.append(record)

            if stored is not None:
                embeddings.append({"row": index, **stored})

    record_factory.write_results(
        results_df=record_factory.make_results_df(records=records), out_dir=str(basepath)
    )

    with open(basepath / "embeddings.json", mode="w", encoding="utf-8") as handle:
        json.dump(embeddings, handle, indent=1)

    with open(basepath / "run.json", mode="w", encoding="utf-8") as handle:
        json.dump(plan.to_dict(), handle, indent=1)

    return records

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def verify_run(run_dir: str) -> RunVerification:
    """
    Re-generate the host of every found row from its stored parameters and re-verify the stored
    embedding.

    Parameters
    ----------
    run_dir : str
        The run directory.

    Returns
    -------
    RunVerification
        The counts and failures.
    """
    basepath = pathlib.Path(run_dir)
    results_df = record_factory.read_results(path=str(basepath / "results.csv"))

    with open(basepath / "embeddings.json", mode="r", encoding="utf-8") as handle:
        embeddings = json.load(handle)

    failures = []
    found_rows = set(int(i) for i in np.flatnonzero(results_df["status"].to_numpy() == "found"))
    stored_rows = set(entry["row"] for entry in embeddings)

    for row in sorted(found_rows - stored_rows):
        failures.append(f"Row {row} is found but has no stored embedding.")

    verified = 0

    for entry in embeddings:
        row = entry["row"]

        if row not in found_rows:
            failures.append(f"Row {row} has an embedding but is not found.")
            continue

        stored = results_df.iloc[row]
        spec = hg_family.parse_family(a_string=entry["family"])

        if (int(stored["n"]), str(stored["family"]), stored["generator"], int(stored["seed"])) != (
            entry["n"], entry["family"], entry["generator"], entry["seed"]
        ):
            failures.append(f"Row {row} does not match its stored embedding.")
            continue

        maker = graph_prototype.from_descriptor(generator=str(stored["generator"]))
        host = maker.clone(spec=spec, seed=entry["seed"])
        embedding = hg_embedding.Embedding(
            cycles=tuple(tuple(cycle) for cycle in entry["cycles"]), host=host
        )
        report = hg_embedding.verify_embedding(
            host=host, spec=spec, embedding=embedding, spanning=True
        )

        if report.ok:
            verified += 1
        else:
            failures.append(f"Row {row}: {report.violation}")

    _logger.info("Verified %d of %d found rows.", verified, len(found_rows))

    return RunVerification(
        rows=len(results_df), found=len(found_rows), verified=verified, failures=tuple(failures)
    )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def summarize(records: Sequence[record_factory.ExperimentRecord]) -> Dict[str, Dict[str, int]]:
    """
    Count statuses per generator.
    """
    summary: Dict[str, Dict[str, int]] = {}

    for record in records:
        counts = summary.setdefault(record.generator, {})
        counts[record.status] = counts.get(record.status, 0) + 1

    return summary
