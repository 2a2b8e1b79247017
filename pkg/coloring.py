# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the constructive proper 3-coloring of a 2-uniform cycle with prescribed color
class sizes.

Positions on the cycle are `1..n`, so the odd positions form the set `A` and the even positions
form the set `B`. Position `i` is adjacent to `i + 1` and position `n` is adjacent to `1`.
"""

from typing import List, Sequence, Tuple

import dataclasses
import enum
import logging

import claim

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
class Color(enum.Enum):
    """
    Enums for the three colors. The green class has size `a`, blue `b` and red `c`.
    """
    GREEN = "G"
    BLUE = "B"
    RED = "R"

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class CycleColoring:
    """
    A coloring of the cycle on positions `1..n`.

    Attributes
    ----------
    n : int
        The cycle length.
    colors : tuple of Color
        The color of each position; `colors[0]` is position 1.
    sizes : tuple of int
        The class sizes `(a, b, c)` as (green, blue, red).
    """
    n: int
    colors: Tuple[Color, ...]
    sizes: Tuple[int, int, int]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def positions(self, color: Color) -> List[int]:
        """
        Get the 1-based positions that have `color`.
        """
        return [i + 1 for (i, x) in enumerate(self.colors) if x is color]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __str__(self) -> str:
        return coloring_to_string(coloring=self)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def check_sizes(n: int, a: int, b: int, c: int):
    """
    Check the preconditions of `color_cycle`.

    Raises
    ------
    ValueError
        If `n < 3`, `a + b + c != n`, or not `0 <= a <= b <= c <= n // 2`.
    """
    if n < 3:
        raise ValueError(f"A cycle has at least 3 vertices, got {n}.")

    if a + b + c != n:
        raise ValueError(f"The sizes ({a}, {b}, {c}) do not sum to {n}.")

    if not 0 <= a <= b <= c:
        raise ValueError(f"The sizes ({a}, {b}, {c}) are not non-decreasing and non-negative.")

    if c > n // 2:
        raise ValueError(f"The largest class {c} exceeds floor({n}/2) = {n // 2}.")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def color_cycle(n: int, a: int, b: int, c: int) -> CycleColoring:
    """
    Make a proper coloring of the cycle `C_n` whose green, blue and red classes have sizes `a`,
    `b` and `c`.

    The red class is `{1, 3, ..., 2c - 1}`. The odd positions left over form `A'`. If `A'` has at
    least `b` positions then `a = floor(n/2)`, `|A'| = b`, `A'` is blue and the even positions are
    green. If `A'` is empty then `n` is even with `c = n/2`, and blue takes `{2, 4, ..., 2b}`.
    Otherwise blue is `A'` together with `{2, 4, ..., 2(b - |A'|)}`. Green is the rest.

    Parameters
    ----------
    n : int
        The cycle length, at least 3.
    a, b, c : int
        The class sizes with `0 <= a <= b <= c <= n // 2` and `a + b + c == n`.

    Returns
    -------
    CycleColoring
        The proper coloring.

    Raises
    ------
    ValueError
        If the sizes violate the preconditions.
    claim.ClaimViolation
        If a deduction of the construction fails at runtime.
    """
    check_sizes(n=n, a=a, b=b, c=c)

    odd = [i for i in range(1, n + 1, 2)]

    red = set(range(1, 2*c, 2))
    rest_odd = [i for i in odd if i not in red]

    if len(rest_odd) >= b:
        claim.check(
            a == n // 2 and len(rest_odd) == b,
            f"With |A'| = {len(rest_odd)} >= b = {b} on C_{n}, expected a = {n // 2} and |A'| = b."
        )
        blue = set(rest_odd)
    elif not rest_odd:
        claim.check(n % 2 == 0 and c == n // 2, f"A' is empty on C_{n} with c = {c}.")
        red = set(odd)
        blue = set(range(2, 2*b + 1, 2))
    else:
        blue = set(rest_odd) | set(range(2, 2*(b - len(rest_odd)) + 1, 2))

    colors = []

    for position in range(1, n + 1):
        if position in red:
            colors.append(Color.RED)
        elif position in blue:
            colors.append(Color.BLUE)
        else:
            colors.append(Color.GREEN)

    coloring = CycleColoring(n=n, colors=tuple(colors), sizes=(a, b, c))

    claim.check(is_proper(coloring=coloring), f"The coloring {coloring} of C_{n} is not proper.")

    return coloring

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def is_proper(coloring: CycleColoring) -> bool:
    """
    Check that adjacent positions differ in color and that the class sizes match `sizes`.

    Parameters
    ----------
    coloring : CycleColoring
        The coloring.

    Returns
    -------
    bool
        True if the coloring is proper with the stated sizes.
    """
    colors = coloring.colors
    n = len(colors)

    if n != coloring.n or n < 3:
        return False

    if any(colors[i] is colors[(i + 1) % n] for i in range(n)):
        return False

    counts = (
        colors.count(Color.GREEN), colors.count(Color.BLUE), colors.count(Color.RED)
    )

    return counts == tuple(coloring.sizes)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def color_cycle_unsorted(n: int, sizes: Sequence[int]) -> List[int]:
    """
    Color the cycle `C_n` with three classes of the given sizes in any order.

    Parameters
    ----------
    n : int
        The cycle length.
    sizes : triple of int
        The class sizes, not necessarily sorted.

    Returns
    -------
    list of int
        The class index (0, 1 or 2, into `sizes`) of each position `1..n`.

    Raises
    ------
    ValueError
        If the sorted sizes are not feasible.
    """
    if len(sizes) != 3:
        raise ValueError(f"Expected three sizes, got {len(sizes)}.")

    # Stable order so equal sizes map to the lower index first.
    order = sorted(range(3), key=lambda i: (sizes[i], i))
    (a, b, c) = (sizes[i] for i in order)
    coloring = color_cycle(n=n, a=a, b=b, c=c)
    mapping = {Color.GREEN: order[0], Color.BLUE: order[1], Color.RED: order[2]}

    return [mapping[color] for color in coloring.colors]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def is_feasible(n: int, sizes: Sequence[int]) -> bool:
    """
    Check whether sizes of any order admit a proper coloring by the closed-form criterion: the
    sizes sum to `n`, are non-negative, and none exceeds `n // 2`.
    """
    return (
        n >= 3 and len(sizes) == 3 and sum(sizes) == n and min(sizes) >= 0
        and max(sizes) <= n // 2
    )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def exhaustive_colorable(n: int, sizes: Sequence[int]) -> bool:
    """
    Decide by exhaustive search whether `C_n` has a proper coloring with class sizes `sizes`.

    The search walks the positions in order and keeps every reachable state (first color, last
    color, class counts so far), so it covers all `3**n` colorings without listing them.

    Parameters
    ----------
    n : int
        The cycle length, at least 3.
    sizes : triple of int
        The target class sizes.

    Returns
    -------
    bool
        True if a proper coloring with these class sizes exists.
    """
    if n < 3 or len(sizes) != 3 or sum(sizes) != n or min(sizes) < 0:
        return False

    target = tuple(sizes)
    states = set()

    for first in range(3):
        counts = [0, 0, 0]
        counts[first] = 1
        states.add((first, first, tuple(counts)))

    for _ in range(n - 1):
        following = set()

        for (first, last, counts) in states:
            for color in range(3):
                if color == last or counts[color] == target[color]:
                    continue

                updated = list(counts)
                updated[color] += 1
                following.add((first, color, tuple(updated)))

        states = following

    return any(first != last and counts == target for (first, last, counts) in states)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def coloring_to_string(coloring: CycleColoring) -> str:
    """
    Write the coloring as a string of `G`, `B` and `R`, position 1 first.
    """
    return "".join(color.value for color in coloring.colors)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def string_to_coloring(a_string: str) -> CycleColoring:
    """
    Converts a string of `G`, `B` and `R` characters to a `CycleColoring`. The sizes are the
    counts of each character. Lowercase is accepted.

    Parameters
    ----------
    a_string : str
        The color string.

    Returns
    -------
    CycleColoring
        The coloring, which need not be proper.

    Raises
    ------
    KeyError
        If a character is not a color.
    """
    lookup = {color.value: color for color in Color}
    colors = []

    for character in a_string.upper():
        if character not in lookup:
            raise KeyError(f"'{character}' is an invalid color.")

        colors.append(lookup[character])

    sizes = (colors.count(Color.GREEN), colors.count(Color.BLUE), colors.count(Color.RED))

    return CycleColoring(n=len(colors), colors=tuple(colors), sizes=sizes)
