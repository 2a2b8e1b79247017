# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains a class for representing a family of loose cycles by their vertex counts.
"""

from typing import Iterator, List, Sequence, Tuple

import dataclasses

import settings

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class CycleFamilySpec:
    """
    A multiset of loose-cycle orders.

    Attributes
    ----------
    lengths : tuple of int
        The vertex count of each cycle, in the order the caller gave them. Embeddings are
        index-aligned with this tuple.
    """
    lengths: Tuple[int, ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def n(self) -> int:
        """
        The total number of vertices.
        """
        return sum(self.lengths)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def k(self) -> int:
        """
        The number of odd cycles, those with an odd number of edges (`n_i % 4 == 2`).
        """
        return sum(1 for length in self.lengths if length % 4 == 2)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def label(self) -> str:
        """
        The lengths joined by the CSV cell delimiter, e.g. `6;8`.
        """
        return settings.parameters.delimiter.join(str(length) for length in self.lengths)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __str__(self) -> str:
        return ",".join(str(length) for length in self.lengths)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def family_from_lengths(lengths: Sequence[int]) -> CycleFamilySpec:
    """
    Make a validated family.

    Parameters
    ----------
    lengths : list of int
        The vertex count of each loose cycle.

    Returns
    -------
    CycleFamilySpec
        The family.

    Raises
    ------
    ValueError
        If `lengths` is empty, or a length is odd or smaller than 6.
    """
    lengths = tuple(int(length) for length in lengths)

    if not lengths:
        raise ValueError("A cycle family needs at least one cycle.")

    for length in lengths:
        if length % 2 != 0:
            raise ValueError(f"A loose cycle has an even number of vertices, got {length}.")

        if length < 6:
            raise ValueError(f"A loose cycle has at least 6 vertices, got {length}.")

    return CycleFamilySpec(lengths=lengths)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def parse_family(a_string: str) -> CycleFamilySpec:
    """
    Parse a family from a string such as `6,8` or `6;8`.

    Raises
    ------
    ValueError
        If a token is not an integer or the lengths are invalid.
    """
    tokens = a_string.replace(settings.parameters.delimiter, ",").split(",")

    return family_from_lengths(lengths=[int(token, base=10) for token in tokens if token.strip()])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def cycle_cover_number(length: int) -> int:
    """
    Get the vertex cover number of a single loose cycle on `length` vertices: `length/4` when the
    cycle has an even number of edges and `(length + 2)/4` otherwise.
    """
    return length // 4 if length % 4 == 0 else (length + 2) // 4

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def cover_number(spec: CycleFamilySpec) -> int:
    """
    Get the vertex cover number of the disjoint union of the family, which is `(n + 2k)/4`.

    Parameters
    ----------
    spec : CycleFamilySpec
        The family.

    Returns
    -------
    int
        The cover number.
    """
    return sum(cycle_cover_number(length=length) for length in spec.lengths)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def threshold_floor(spec: CycleFamilySpec) -> int:
    """
    Get `floor((n + 2k)/4)`, the codegree at which every host contains the family asymptotically.
    """
    return (spec.n + 2 * spec.k) // 4

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def iter_families(n: int, smallest: int = 6) -> Iterator[CycleFamilySpec]:
    """
    Yield every family on exactly `n` vertices, each as a non-increasing list of lengths, in
    reverse lexicographic order.

    Parameters
    ----------
    n : int
        The total vertex count.
    smallest : int, default=6
        The smallest length allowed.
    """
    def partitions(remaining: int, largest: int) -> Iterator[List[int]]:
        if remaining == 0:
            yield []
            return

        for length in range(min(largest, remaining), smallest - 1, -1):
            if length % 2 != 0:
                continue

            for rest in partitions(remaining=remaining - length, largest=length):
                yield [length] + rest

    if n <= 0:
        return

    for lengths in partitions(remaining=n, largest=n):
        yield CycleFamilySpec(lengths=tuple(lengths))
