# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the extremal construction that shows the codegree threshold `(n + 2k)/4` is
tight: the host holds every triple that meets a small set `A`, so `A` covers every edge, while the
family needs a cover of `(n + 2k)/4` vertices.
"""

from typing import Any, Dict, Optional, Tuple

import dataclasses
import itertools
import logging

import scipy.special

import claim
import hg_family
import hg_graph
import solver

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ExtremalInstance:
    """
    A host whose edges are exactly the triples meeting `A`.

    Attributes
    ----------
    host : hg_graph.ThreeGraph
        The host graph.
    cover : tuple of int
        The set `A = {0..|A|-1}`.
    rest : tuple of int
        The complement `B`.
    spec : hg_family.CycleFamilySpec
        The family the instance was built for.
    """
    host: hg_graph.ThreeGraph
    cover: Tuple[int, ...]
    rest: Tuple[int, ...]
    spec: hg_family.CycleFamilySpec

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ExtremalReport:
    """
    The outcome of `verify_extremal`.

    Attributes
    ----------
    n : int
        The vertex count.
    spec : hg_family.CycleFamilySpec
        The family.
    min_codegree : int
        The minimum codegree of the host, which equals `|A|`.
    cover_size : int
        `|A|`.
    cover_number : int
        The cover number of the family, `(n + 2k)/4`.
    solver_status : optional of solver.Status
        The solver's verdict, when it was run.
    solver_nodes : int
        The nodes the solver expanded.
    """
    n: int
    spec: hg_family.CycleFamilySpec
    min_codegree: int
    cover_size: int
    cover_number: int
    solver_status: Optional[solver.Status] = None
    solver_nodes: int = 0

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "family": str(self.spec),
            "min_codegree": self.min_codegree,
            "cover_size": self.cover_size,
            "cover_number": self.cover_number,
            "solver_status": None if self.solver_status is None else self.solver_status.value,
            "solver_nodes": self.solver_nodes
        }

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def default_cover_size(spec: hg_family.CycleFamilySpec) -> int:
    """
    Get `floor((n + 2k)/4) - 1`.
    """
    return hg_family.threshold_floor(spec=spec) - 1

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def build_extremal(
    n: int, spec: hg_family.CycleFamilySpec, cover_size: Optional[int] = None
) -> ExtremalInstance:
    """
    Build the host on `n` vertices whose edges are the triples meeting `A = {0..|A|-1}`.

    Parameters
    ----------
    n : int
        The vertex count.
    spec : hg_family.CycleFamilySpec
        The family, on `n` vertices.
    cover_size : optional of int, default=None
        `|A|`. The default is `floor((n + 2k)/4) - 1`.

    Returns
    -------
    ExtremalInstance
        The instance.

    Raises
    ------
    ValueError
        If the family does not have `n` vertices or the cover size is outside `0..n`.
    """
    if spec.n != n:
        raise ValueError(f"The family {spec} has {spec.n} vertices, not {n}.")

    size = default_cover_size(spec=spec) if cover_size is None else cover_size

    if not 0 <= size <= n:
        raise ValueError(f"The cover size {size} is outside 0..{n}.")

    edges = [e for e in itertools.combinations(range(n), 3) if e[0] < size]

    return ExtremalInstance(
        host=hg_graph.new_graph(n=n, edges=edges), cover=tuple(range(size)),
        rest=tuple(range(size, n)), spec=spec
    )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _check_codegrees(instance: ExtremalInstance) -> int:
    """
    Derive both pair classes and confirm them against the host: pairs inside `B` have codegree
    `|A|`, and pairs meeting `A` have codegree `n - 2`.
    """
    host = instance.host
    n = host.n
    size = len(instance.cover)
    matrix = host.codegree_matrix()

    for (u, v) in itertools.combinations(range(n), 2):
        expected = n - 2 if u < size else size

        claim.check(
            int(matrix[u, v]) == expected,
            f"The pair ({u}, {v}) has codegree {int(matrix[u, v])}, expected {expected}."
        )

    expected_edges = int(
        scipy.special.comb(n, 3, exact=True) - scipy.special.comb(n - size, 3, exact=True)
    )

    claim.check(
        host.edge_count == expected_edges,
        f"The host has {host.edge_count} edges, expected {expected_edges}."
    )

    observed = host.min_codegree()
    expected_min = size if n - size >= 2 else n - 2

    claim.check(
        observed == expected_min,
        f"The minimum codegree is {observed}, expected {expected_min}."
    )

    return observed

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def verify_extremal(
    n: int, spec: hg_family.CycleFamilySpec, use_solver: bool = False, budget: int = 2_000_000
) -> ExtremalReport:
    """
    Build the default instance and check that it is extremal: its minimum codegree is exactly
    `floor((n + 2k)/4) - 1`, its cover `A` is smaller than the family's cover number, and
    optionally the solver finds no spanning copy.

    Parameters
    ----------
    n : int
        The vertex count.
    spec : hg_family.CycleFamilySpec
        The family, on `n` vertices.
    use_solver : bool, default=False
        Whether to run the exact solver.
    budget : int, default=2_000_000
        The solver's node budget.

    Returns
    -------
    ExtremalReport
        The report. A solver timeout is recorded, not raised.

    Raises
    ------
    claim.ClaimViolation
        If any check fails.
    """
    instance = build_extremal(n=n, spec=spec)
    size = len(instance.cover)

    min_codegree = _check_codegrees(instance=instance)

    claim.check(
        min_codegree == hg_family.threshold_floor(spec=spec) - 1,
        f"The minimum codegree {min_codegree} is not floor((n + 2k)/4) - 1."
    )

    cover_number = hg_family.cover_number(spec=spec)

    claim.check(
        4 * cover_number == n + 2 * spec.k,
        f"The family {spec} has cover number {cover_number}, not (n + 2k)/4."
    )
    claim.check(
        all(any(v < size for v in edge) for edge in instance.host.edge_list),
        "An edge misses the cover set."
    )
    claim.check(
        cover_number > size,
        f"The cover set has {size} vertices, which could cover the family ({cover_number})."
    )

    status = None
    nodes = 0

    if use_solver:
        result = solver.solve_spanning(host=instance.host, spec=spec, budget=budget)
        (status, nodes) = (result.status, result.stats.nodes)

        claim.check(
            status is not solver.Status.FOUND,
            f"The solver embedded {spec} into the extremal host on {n} vertices."
        )

        if status is solver.Status.TIMEOUT:
            _logger.warning("The solver timed out on the extremal host for n=%d, %s.", n, spec)

    _logger.info(
        "Extremal n=%d, family=%s: codegree %d, cover %d > %d.", n, spec, min_codegree,
        cover_number, size
    )

    return ExtremalReport(
        n=n, spec=spec, min_codegree=min_codegree, cover_size=size, cover_number=cover_number,
        solver_status=status, solver_nodes=nodes
    )
