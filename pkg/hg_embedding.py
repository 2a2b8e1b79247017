# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains classes for embeddings of a cycle family into a host 3-graph and their
verification.
"""

from typing import Any, Dict, Optional, Sequence, Tuple

import dataclasses
import logging

import hg_family
import hg_graph
import hg_loose

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class Embedding:
    """
    An assignment of each cycle of a family to an ordered list of host vertices.

    Attributes
    ----------
    cycles : tuple of tuple of int
        The cyclic ordering of each cycle, index-aligned with the family's lengths.
    host : hg_graph.ThreeGraph
        The host graph.
    """
    cycles: Tuple[Tuple[int, ...], ...]
    host: hg_graph.ThreeGraph = dataclasses.field(compare=False, repr=False)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def loose_cycles(self) -> Tuple[hg_loose.LooseCycle, ...]:
        return tuple(hg_loose.LooseCycle(vertices=cycle) for cycle in self.cycles)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def canonical(self) -> "Embedding":
        """
        Make the embedding with every cycle in canonical form.
        """
        cycles = tuple(c.canonical().vertices for c in self.loose_cycles())

        return Embedding(cycles=cycles, host=self.host)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {"cycles": [list(cycle) for cycle in self.cycles]}

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class EmbeddingReport:
    """
    The result of verifying an embedding.

    Attributes
    ----------
    ok : bool
        True if every check passed.
    violation : optional of str
        A description of the first failed check.
    missing_edge : optional of tuple of int
        The first cycle edge absent from the host, when that is the violation.
    """
    ok: bool
    violation: Optional[str] = None
    missing_edge: Optional[hg_graph.Edge] = None

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __bool__(self) -> bool:
        return self.ok

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def verify_embedding(
    host: hg_graph.ThreeGraph, spec: hg_family.CycleFamilySpec, embedding: Embedding,
    spanning: bool = False
) -> EmbeddingReport:
    """
    Verify that an embedding is injective, matches the family's lengths, and maps every cycle edge
    to a host edge.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host graph.
    spec : hg_family.CycleFamilySpec
        The family.
    embedding : Embedding
        The embedding to check.
    spanning : bool, default=False
        Also require that every host vertex is used.

    Returns
    -------
    EmbeddingReport
        The verdict with the first violation found.
    """
    report = _verify(host=host, spec=spec, cycles=embedding.cycles, spanning=spanning)

    if not report.ok:
        _logger.debug("Embedding rejected: %s", report.violation)

    return report

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _verify(
    host: hg_graph.ThreeGraph, spec: hg_family.CycleFamilySpec,
    cycles: Sequence[Sequence[int]], spanning: bool
) -> EmbeddingReport:
    if len(cycles) != len(spec.lengths):
        return EmbeddingReport(
            ok=False, violation=f"The family has {len(spec.lengths)} cycles but the embedding has "
            f"{len(cycles)}."
        )

    used = set()

    for (i, (cycle, length)) in enumerate(zip(cycles, spec.lengths)):
        if len(cycle) != length:
            return EmbeddingReport(
                ok=False, violation=f"Cycle {i} should have {length} vertices but has {len(cycle)}."
            )

        for v in cycle:
            if not 0 <= v < host.n:
                return EmbeddingReport(ok=False, violation=f"Vertex {v} is not a host vertex.")

            if v in used:
                return EmbeddingReport(ok=False, violation=f"Vertex {v} is used twice.")

            used.add(v)

    for cycle in cycles:
        for edge in hg_loose.LooseCycle(vertices=cycle).edges:
            if edge not in host.edges:
                return EmbeddingReport(
                    ok=False, violation=f"The edge {set(edge)} is missing from the host.",
                    missing_edge=edge
                )

    if spanning and len(used) != host.n:
        return EmbeddingReport(
            ok=False, violation=f"The embedding uses {len(used)} of {host.n} host vertices."
        )

    return EmbeddingReport(ok=True)
