# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the embedding of a family of vertex-disjoint 2-uniform cycles into a complete
tripartite graph whose part sizes lie in the degree window, and the triple split used when the
cycles are blown up into loose cycles.

Cycle lengths here are graph-cycle lengths `m_i >= 3`. A loose cycle on `n_i` vertices is the
1-expansion of a graph cycle of length `n_i/2`.
"""

from typing import List, Optional, Sequence, Tuple

import dataclasses
import functools
import logging

import claim
import coloring

_logger = logging.getLogger(__name__)

_MOVES = {"e12": (0, 1), "e13": (0, 2), "e23": (1, 2)}

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class Allocation:
    """
    The number of vertices each cycle takes from each part.

    Attributes
    ----------
    parts : tuple of int
        The part sizes `(|V_1|, |V_2|, |V_3|)`.
    lengths : tuple of int
        The cycle lengths.
    rows : tuple of tuple of int
        `rows[i][j]` is the number of vertices of cycle `i` placed in part `j`.
    """
    parts: Tuple[int, int, int]
    lengths: Tuple[int, ...]
    rows: Tuple[Tuple[int, int, int], ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def column_sums(self) -> Tuple[int, int, int]:
        return tuple(sum(row[j] for row in self.rows) for j in range(3))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def is_valid(self) -> bool:
        """
        Check that the columns sum to the parts and that every row is colorable.
        """
        if self.column_sums() != tuple(self.parts) or len(self.rows) != len(self.lengths):
            return False

        return all(
            coloring.is_feasible(n=length, sizes=row)
            for (row, length) in zip(self.rows, self.lengths)
        )

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class TransferStep:
    """
    One unit move of the part-size vector.

    Attributes
    ----------
    move : str
        `e12`, `e13` or `e23`, over the sorted parts.
    case : int
        1 if one cycle had at least two more vertices in the source part, else 2.
    cycle : int
        The index of the cycle whose row changed.
    state : tuple of int
        The sorted part-size vector after the move.
    """
    move: str
    case: int
    cycle: int
    state: Tuple[int, int, int]

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class TripartiteEmbedding:
    """
    The result of embedding a cycle family into a complete tripartite graph.

    Attributes
    ----------
    allocation : Allocation
        The allocation in the caller's part order.
    steps : tuple of TransferStep
        The moves from the base case to the sorted target.
    cycles : tuple of tuple of int
        The vertex ordering of each cycle. Part `j` holds the vertices
        `[sum(parts[:j]), sum(parts[:j + 1]))`.
    """
    allocation: Allocation
    steps: Tuple[TransferStep, ...]
    cycles: Tuple[Tuple[int, ...], ...]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def odd_count(lengths: Sequence[int]) -> int:
    return sum(1 for length in lengths if length % 2 == 1)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def verify_window(parts: Sequence[int], k: int) -> bool:
    """
    Check `k <= v(1) <= v(2) <= v(3) <= (n - k)/2` on the sorted part sizes.

    Parameters
    ----------
    parts : triple of int
        The part sizes in any order.
    k : int
        The number of odd cycles.

    Returns
    -------
    bool
        True if the sorted sizes lie in the window.
    """
    (s1, _, s3) = sorted(parts)
    n = sum(parts)

    return k <= s1 and 2 * s3 <= n - k

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def min_degree_of_parts(parts: Sequence[int]) -> int:
    """
    Get the minimum degree of the complete tripartite graph with the given part sizes.
    """
    return sum(parts) - max(parts)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def degree_condition(parts: Sequence[int], k: int) -> bool:
    """
    Check that the complete tripartite graph has minimum degree at least `n/2 + k/2`.
    """
    return 2 * min_degree_of_parts(parts=parts) >= sum(parts) + k

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def triple_split(v1: int, v2: int, v3: int) -> Tuple[int, int, int]:
    """
    Compute `x_i = (v_j + v_h - v_i)/2` for `{i, j, h} = {1, 2, 3}`, so that `x_i + x_j = v_h`.

    Parameters
    ----------
    v1, v2, v3 : int
        The part sizes.

    Returns
    -------
    tuple of int
        The split `(x1, x2, x3)`.

    Raises
    ------
    ValueError
        If `v1 + v2 + v3` is odd, or some `x_i` is negative.
    """
    if (v1 + v2 + v3) % 2 != 0:
        raise ValueError(f"The part sizes ({v1}, {v2}, {v3}) have an odd sum.")

    split = ((v2 + v3 - v1) // 2, (v1 + v3 - v2) // 2, (v1 + v2 - v3) // 2)

    if min(split) < 0:
        raise ValueError(f"The part sizes ({v1}, {v2}, {v3}) violate the triangle inequality, "
                         f"giving {split}.")

    return split

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _check_instance(parts: Sequence[int], lengths: Sequence[int]):
    if len(parts) != 3 or min(parts) < 0:
        raise ValueError(f"Expected three non-negative part sizes, got {tuple(parts)}.")

    if not lengths:
        raise ValueError("The cycle family is empty.")

    for length in lengths:
        if length < 3:
            raise ValueError(f"A graph cycle has at least 3 vertices, got {length}.")

    if sum(parts) != sum(lengths):
        raise ValueError(f"The parts hold {sum(parts)} vertices but the cycles need "
                         f"{sum(lengths)}.")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def base_rows(lengths: Sequence[int]) -> List[List[int]]:
    """
    Make the base allocation `(0, m/2, m/2)` for even `m` and `(1, (m-1)/2, (m-1)/2)` for odd `m`.
    """
    return [[length % 2, length // 2, length // 2] for length in lengths]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _next_move(state: Sequence[int], target: Sequence[int]) -> str:
    """
    Pick the next unit move so that the state stays sorted, hence inside the window.
    """
    (a, b, c) = state

    if c > target[2] and a + 1 <= b <= c - 1:
        return "e13"

    return "e12"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _apply_move(rows: List[List[int]], lengths: Sequence[int], move: str) -> Tuple[int, int]:
    """
    Shift one vertex of one cycle from part `j` to part `i`.

    Returns
    -------
    case : int
        The case used.
    index : int
        The index of the cycle shifted.
    """
    (i, j) = _MOVES[move]

    for (index, row) in enumerate(rows):
        if row[j] >= row[i] + 2:
            row[i] += 1
            row[j] -= 1

            return (1, index)

    candidates = [index for (index, row) in enumerate(rows) if row[j] >= row[i] + 1]

    claim.check(
        len(candidates) >= 1,
        f"Move {move} found no cycle with a surplus in part {j + 1} over part {i + 1} in {rows} "
        f"(lengths {list(lengths)})."
    )

    # A surplus of exactly one swaps x_i and x_j in the row, so one candidate is enough.
    index = candidates[0]
    rows[index][i] += 1
    rows[index][j] -= 1

    return (2, index)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def transfer_path(
    parts: Sequence[int], lengths: Sequence[int]
) -> Tuple[List[List[int]], List[TransferStep]]:
    """
    Walk from the base case to the sorted `parts` by unit moves, keeping every row colorable.

    Parameters
    ----------
    parts : triple of int
        The target part sizes, sorted non-decreasingly and inside the window.
    lengths : list of int
        The cycle lengths.

    Returns
    -------
    rows : list of list of int
        The allocation over the sorted parts.
    steps : list of TransferStep
        The moves taken.

    Raises
    ------
    claim.ClaimViolation
        If a move cannot be realized or breaks an invariant.
    """
    rows = base_rows(lengths=lengths)
    k = odd_count(lengths=lengths)
    half = (sum(lengths) - k) // 2
    state = [k, half, half]
    target = list(parts)
    steps = []

    while state != target:
        claim.check(
            state[0] < target[0] and state[1] >= target[1] and state[2] >= target[2],
            f"The state {state} overshot the target {target}."
        )

        move = _next_move(state=state, target=target)
        (i, j) = _MOVES[move]
        (case, index) = _apply_move(rows=rows, lengths=lengths, move=move)

        state[i] += 1
        state[j] -= 1

        claim.check(state == sorted(state), f"The state {state} after {move} is not sorted.")
        claim.check(
            coloring.is_feasible(n=lengths[index], sizes=rows[index]),
            f"Row {rows[index]} of cycle {index} is not colorable after {move}."
        )
        claim.check(
            [sum(row[x] for row in rows) for x in range(3)] == state,
            f"The rows {rows} do not sum to the state {state} after {move}."
        )

        steps.append(TransferStep(move=move, case=case, cycle=index, state=tuple(state)))

    return (rows, steps)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def embed_tripartite(parts: Sequence[int], lengths: Sequence[int]) -> TripartiteEmbedding:
    """
    Embed vertex-disjoint cycles of the given lengths into the complete tripartite graph with the
    given part sizes.

    Parameters
    ----------
    parts : triple of int
        The part sizes `(|V_1|, |V_2|, |V_3|)` in any order.
    lengths : list of int
        The graph-cycle lengths, each at least 3, summing to the number of vertices.

    Returns
    -------
    TripartiteEmbedding
        The allocation, the moves from the base case, and the explicit vertex orderings.

    Raises
    ------
    ValueError
        If the sizes do not match or the parts are outside the degree window.
    claim.ClaimViolation
        If the construction breaks down.
    """
    _check_instance(parts=parts, lengths=lengths)

    k = odd_count(lengths=lengths)

    if not verify_window(parts=parts, k=k):
        raise ValueError(f"The parts {tuple(parts)} are outside the window for k = {k}: need "
                         f"{k} <= v(1) <= v(2) <= v(3) <= {(sum(parts) - k) / 2}.")

    # Stable order so equal parts keep their relative order.
    order = sorted(range(3), key=lambda x: (parts[x], x))
    sorted_parts = [parts[x] for x in order]
    (sorted_rows, steps) = transfer_path(parts=sorted_parts, lengths=lengths)

    rows = []

    for sorted_row in sorted_rows:
        row = [0, 0, 0]

        for (position, x) in enumerate(order):
            row[x] = sorted_row[position]

        rows.append(tuple(row))

    allocation = Allocation(parts=tuple(parts), lengths=tuple(lengths), rows=tuple(rows))

    claim.check(allocation.is_valid(), f"The allocation {allocation} is not valid.")

    cycles = place_cycles(allocation=allocation)

    _logger.debug(
        "Embedded cycles %s into parts %s with %d moves.", list(lengths), tuple(parts), len(steps)
    )

    return TripartiteEmbedding(allocation=allocation, steps=tuple(steps), cycles=cycles)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def place_cycles(allocation: Allocation) -> Tuple[Tuple[int, ...], ...]:
    """
    Turn an allocation into vertex orderings by coloring each cycle and handing out the vertices of
    each part in increasing order.

    Parameters
    ----------
    allocation : Allocation
        A valid allocation.

    Returns
    -------
    tuple of tuple of int
        The vertex ordering of each cycle.
    """
    starts = [0, allocation.parts[0], allocation.parts[0] + allocation.parts[1]]
    cursors = list(starts)
    cycles = []

    for (row, length) in zip(allocation.rows, allocation.lengths):
        classes = coloring.color_cycle_unsorted(n=length, sizes=row)
        cycle = []

        for part in classes:
            cycle.append(cursors[part])
            cursors[part] += 1

        cycles.append(tuple(cycle))

    return tuple(cycles)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def part_of(parts: Sequence[int], vertex: int) -> int:
    """
    Get the index of the part holding `vertex` when parts are consecutive ranges from 0.
    """
    boundary = 0

    for (index, size) in enumerate(parts):
        boundary += size

        if vertex < boundary:
            return index

    raise ValueError(f"The vertex {vertex} is outside the {sum(parts)} vertices of the parts.")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def verify_tripartite_embedding(parts: Sequence[int], cycles: Sequence[Sequence[int]]) -> bool:
    """
    Check that the cycles use every vertex exactly once and that cyclically consecutive vertices
    lie in different parts, so every cycle edge is an edge of the complete tripartite graph.
    """
    vertices = [v for cycle in cycles for v in cycle]

    if sorted(vertices) != list(range(sum(parts))):
        return False

    for cycle in cycles:
        m = len(cycle)

        if m < 3:
            return False

        for position in range(m):
            u = cycle[position]
            v = cycle[(position + 1) % m]

            if part_of(parts=parts, vertex=u) == part_of(parts=parts, vertex=v):
                return False

    return True

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def find_allocation_exhaustive(
    parts: Sequence[int], lengths: Sequence[int]
) -> Optional[Allocation]:
    """
    Search all colorable rows for an allocation whose columns sum to `parts`. This is independent
    of the move-based construction and serves as its oracle.

    Parameters
    ----------
    parts : triple of int
        The part sizes.
    lengths : list of int
        The graph-cycle lengths.

    Returns
    -------
    optional of Allocation
        The first allocation found in lexicographic row order, or `None` if there is none.
    """
    _check_instance(parts=parts, lengths=lengths)

    lengths = tuple(lengths)

    @functools.lru_cache(maxsize=None)
    def solve(index: int, remaining: Tuple[int, int, int]) -> Optional[Tuple[Tuple[int, ...], ...]]:
        if index == len(lengths):
            return () if remaining == (0, 0, 0) else None

        length = lengths[index]
        cap = length // 2

        for x1 in range(min(cap, remaining[0]) + 1):
            for x2 in range(min(cap, remaining[1]) + 1):
                x3 = length - x1 - x2

                if not 0 <= x3 <= min(cap, remaining[2]):
                    continue

                rest = solve(index + 1, (remaining[0] - x1, remaining[1] - x2, remaining[2] - x3))

                if rest is not None:
                    return ((x1, x2, x3),) + rest

        return None

    rows = solve(0, tuple(parts))

    if rows is None:
        return None

    return Allocation(parts=tuple(parts), lengths=lengths, rows=rows)
