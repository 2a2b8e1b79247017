# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the gadget `A(p, q)` and the search for vertex-disjoint copies of it.

The gadget has `q - p` disjoint pairs `A_1..A_{q-p}` and a set `B` of `2p` vertices, and its edges
are the triples `{x} | A_j` with `x` in `B`. A copy in a host needs those edges only.
"""

from typing import Any, Dict, List, Optional, Tuple

import dataclasses
import itertools
import logging
import math

import hg_graph
import solver

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ApqGadget:
    """
    The gadget on vertices `0..2q-1`: pairs `(0, 1), (2, 3), ...` then `B`.

    Attributes
    ----------
    p : int
        Half the size of `B`.
    q : int
        Half the vertex count.
    """
    p: int
    q: int

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((2 * j, 2 * j + 1) for j in range(self.q - self.p))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def rest(self) -> Tuple[int, ...]:
        return tuple(range(2 * (self.q - self.p), 2 * self.q))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def vertex_count(self) -> int:
        return 2 * self.q

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edges(self) -> List[hg_graph.Edge]:
        return sorted(
            tuple(sorted((x, a, b))) for (a, b) in self.pairs for x in self.rest
        )

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def graph(self) -> hg_graph.ThreeGraph:
        return hg_graph.new_graph(n=self.vertex_count, edges=self.edges)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ApqCopy:
    """
    A copy of the gadget in a host.

    Attributes
    ----------
    pairs : tuple of tuple of int
        The images of `A_1..A_{q-p}`.
    rest : tuple of int
        The image of `B`.
    """
    pairs: Tuple[Tuple[int, int], ...]
    rest: Tuple[int, ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted([v for pair in self.pairs for v in pair] + list(self.rest)))

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ApqTiling:
    """
    Vertex-disjoint copies of a gadget.

    Attributes
    ----------
    gadget : ApqGadget
        The gadget.
    copies : tuple of ApqCopy
        The copies.
    """
    gadget: ApqGadget
    copies: Tuple[ApqCopy, ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def covered(self) -> int:
        return self.gadget.vertex_count * len(self.copies)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.gadget.p,
            "q": self.gadget.q,
            "covered": self.covered,
            "copies": [
                {"pairs": [list(pair) for pair in c.pairs], "rest": list(c.rest)}
            for c in self.copies]
        }

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def build_apq(p: int, q: int) -> ApqGadget:
    """
    Make the gadget.

    Raises
    ------
    ValueError
        Unless `1 <= p < q`.
    """
    if not 1 <= p < q:
        raise ValueError(f"Expected 1 <= p < q, got p = {p}, q = {q}.")

    return ApqGadget(p=p, q=q)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def is_copy(host: hg_graph.ThreeGraph, gadget: ApqGadget, copy: ApqCopy) -> bool:
    """
    Check that a copy has the gadget's shape, is injective and has every gadget edge in the host.
    """
    vertices = copy.vertices

    if len(copy.pairs) != gadget.q - gadget.p or len(copy.rest) != 2 * gadget.p:
        return False

    if len(set(vertices)) != len(vertices):
        return False

    return all(host.has_edge(x, a, b) for (a, b) in copy.pairs for x in copy.rest)

#===================================================================================================
#===================================================================================================
class _CopyFinder:
    """
    Enumerates gadget copies inside a set of free vertices.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, host: hg_graph.ThreeGraph, gadget: ApqGadget, budget: int):
        self._host = host
        self._gadget = gadget
        self._budget = budget
        self.nodes = 0

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def _tick(self):
        self.nodes += 1

        if self.nodes > self._budget:
            raise solver.SearchTimeout(f"The tiling search exceeded {self._budget} nodes.")

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def copies(self, free: int, first_above: int = -1, all_rests: bool = True):
        """
        Yield copies inside `free` whose first pair starts above `first_above`. Pairs are taken in
        increasing order and `B` lies in the common pair neighbourhood of all pairs.
        """
        pairs = self._host.pair_index
        needed = self._gadget.q - self._gadget.p
        size = 2 * self._gadget.p

        def grow(chosen: List[Tuple[int, int]], common: int, avail: int, low: int):
            self._tick()

            if len(chosen) == needed:
                candidates = list(hg_graph.iter_bits(common & avail))
                rests = itertools.combinations(candidates, size) if all_rests else [
                    tuple(candidates[:size])
                ]

                for rest in rests:
                    yield ApqCopy(pairs=tuple(chosen), rest=tuple(rest))

                return

            for a in hg_graph.iter_bits(avail & ~((1 << (low + 1)) - 1)):
                for b in hg_graph.iter_bits(avail & ~((1 << (a + 1)) - 1)):
                    narrowed = common & pairs[a][b]
                    rest = avail & ~(1 << a) & ~(1 << b)

                    if (narrowed & rest).bit_count() < size:
                        continue

                    yield from grow(chosen=chosen + [(a, b)], common=narrowed, avail=rest, low=a)

        yield from grow(chosen=[], common=free, avail=free, low=first_above)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def find_apq_tiling(
    host: hg_graph.ThreeGraph, p: int, q: int, min_cover: int, budget: int = 2_000_000
) -> Optional[ApqTiling]:
    """
    Find vertex-disjoint copies of the gadget covering at least `min_cover` vertices.

    A greedy pass takes the first copy among the free vertices until none is left. If that covers
    too little, an exact search looks for `ceil(min_cover / 2q)` copies, ordered by the first
    vertex of their first pair.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host.
    p, q : int
        The gadget parameters.
    min_cover : int
        The number of vertices to cover.
    budget : int, default=2_000_000
        The node budget of the exact search.

    Returns
    -------
    optional of ApqTiling
        The tiling, or `None` if there is none.

    Raises
    ------
    solver.SearchTimeout
        If the exact search runs out of budget.
    """
    gadget = build_apq(p=p, q=q)
    wanted = max(0, math.ceil(min_cover / gadget.vertex_count))

    if wanted * gadget.vertex_count > host.n:
        return None

    finder = _CopyFinder(host=host, gadget=gadget, budget=budget)
    free = (1 << host.n) - 1
    greedy = []

    while len(greedy) < wanted:
        copy = next(finder.copies(free=free, all_rests=False), None)

        if copy is None:
            break

        greedy.append(copy)
        free &= ~hg_graph.mask_of(copy.vertices)

    if len(greedy) >= wanted:
        _logger.debug("The greedy pass found %d copies of A(%d, %d).", len(greedy), p, q)
        return ApqTiling(gadget=gadget, copies=tuple(greedy))

    def search(chosen: List[ApqCopy], free: int, first_above: int) -> Optional[List[ApqCopy]]:
        if len(chosen) == wanted:
            return chosen

        if free.bit_count() < (wanted - len(chosen)) * gadget.vertex_count:
            return None

        for copy in finder.copies(free=free, first_above=first_above):
            found = search(
                chosen=chosen + [copy], free=free & ~hg_graph.mask_of(copy.vertices),
                first_above=copy.pairs[0][0]
            )

            if found is not None:
                return found

        return None

    found = search(chosen=[], free=(1 << host.n) - 1, first_above=-1)

    _logger.debug("The exact search for A(%d, %d) expanded %d nodes.", p, q, finder.nodes)

    return None if found is None else ApqTiling(gadget=gadget, copies=tuple(found))
