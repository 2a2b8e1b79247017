# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the partitioning of a multiset of cycle lengths into bins whose sums track
target capacities, and the A-transformations that shift exactly 2 vertices between two bins.

A cycle is odd when its number of edges is odd, i.e. its length is `2 (mod 4)`.
"""

from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import dataclasses
import itertools
import logging
import math

import apportion

_logger = logging.getLogger(__name__)

A_LENGTHS = (6, 8, 10, 12, 14)

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class BalanceAssignment:
    """
    An assignment of cycles to bins.

    Attributes
    ----------
    targets : tuple of int
        The target capacity of each bin.
    lengths : tuple of int
        The cycle lengths.
    bins : tuple of int
        The bin of each cycle.
    tol : int
        The allowed absolute deviation of each bin sum from its target.
    odd_cap : int
        The allowed number of odd cycles per bin.
    phase : str
        The stage that produced the assignment: `seed`, `swap`, `repair` or `exact`.
    history : tuple of tuple of int
        The badness pair `(S, S')` after the seed and after each accepted swap.
    proven_infeasible : bool
        True if the exact search proved that no feasible assignment exists.
    """
    targets: Tuple[int, ...]
    lengths: Tuple[int, ...]
    bins: Tuple[int, ...]
    tol: int = 0
    odd_cap: int = 2**31
    phase: str = "seed"
    history: Tuple[Tuple[int, int], ...] = ()
    proven_infeasible: bool = False

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def sums(self) -> Tuple[int, ...]:
        totals = [0] * len(self.targets)

        for (length, index) in zip(self.lengths, self.bins):
            totals[index] += length

        return tuple(totals)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def deviations(self) -> Tuple[int, ...]:
        return tuple(s - t for (s, t) in zip(self.sums, self.targets))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def odd_counts(self) -> Tuple[int, ...]:
        counts = [0] * len(self.targets)

        for (length, index) in zip(self.lengths, self.bins):
            counts[index] += is_odd(length=length)

        return tuple(counts)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def badness(self) -> Tuple[int, int]:
        return badness(deviations=self.deviations, tol=self.tol)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def feasible(self) -> bool:
        return (
            all(abs(d) <= self.tol for d in self.deviations)
            and all(c <= self.odd_cap for c in self.odd_counts)
        )

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def contents(self) -> List[List[int]]:
        """
        Get the sorted lengths in each bin.
        """
        contents = [[] for _ in self.targets]

        for (length, index) in zip(self.lengths, self.bins):
            contents[index].append(length)

        return [sorted(c) for c in contents]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "targets": list(self.targets),
            "lengths": list(self.lengths),
            "bins": list(self.bins),
            "contents": self.contents(),
            "sums": list(self.sums),
            "deviations": list(self.deviations),
            "odd_counts": list(self.odd_counts),
            "tol": self.tol,
            "odd_cap": self.odd_cap,
            "feasible": self.feasible,
            "phase": self.phase,
            "history": [list(h) for h in self.history],
            "proven_infeasible": self.proven_infeasible
        }

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class ATransform:
    """
    Signed cycle counts whose lengths sum to exactly 2.

    Attributes
    ----------
    support : tuple of int
        The lengths `a_l`, increasing.
    coefficients : tuple of int
        The counts `b_l` with `sum(a_l * b_l) == 2`.
    """
    support: Tuple[int, ...]
    coefficients: Tuple[int, ...]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def as_mapping(self) -> Dict[int, int]:
        return dict(zip(self.support, self.coefficients))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def shift(self) -> int:
        return sum(a * b for (a, b) in zip(self.support, self.coefficients))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def is_odd(length: int) -> bool:
    return length % 4 == 2

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def badness(deviations: Sequence[int], tol: int) -> Tuple[int, int]:
    """
    Get `S`, the total deviation of the bins more than `tol` over their target, and `S'`, the total
    (non-positive) deviation of the bins more than `tol` under it.
    """
    s = sum(d for d in deviations if d > tol)
    s_prime = sum(d for d in deviations if d < -tol)

    return (s, s_prime)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _excess(sums: Sequence[int], odds: Sequence[int], targets: Sequence[int], tol: int,
            odd_cap: int) -> Tuple[int, int]:
    """
    Get the penalty `(odd excess, deviation excess)`, compared lexicographically.
    """
    odd_excess = sum(max(0, c - odd_cap) for c in odds)
    deviation_excess = sum(max(0, abs(s - t) - tol) for (s, t) in zip(sums, targets))

    return (odd_excess, deviation_excess)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def seed_assignment(targets: Sequence[int], lengths: Sequence[int]) -> List[int]:
    """
    Seed the bins. The number of odd and of even cycles per bin are apportioned separately in
    proportion to the targets. Cycles are then handed out longest first, each to the bin with room
    in its quota and the largest remaining deficit, ties to the lowest bin.

    Returns
    -------
    list of int
        The bin of each cycle.
    """
    total = sum(targets)
    weights = [apportion.to_fraction(value=t) / total for t in targets]
    odd_total = sum(1 for length in lengths if is_odd(length=length))
    even_total = len(lengths) - odd_total

    def quota(count: int) -> List[int]:
        return apportion.apportion(q=count, weights=weights) if count else [0] * len(targets)

    quotas = {True: quota(count=odd_total), False: quota(count=even_total)}

    bins = [0] * len(lengths)
    sums = [0] * len(targets)
    order = sorted(range(len(lengths)), key=lambda c: (-lengths[c], c))

    for c in order:
        parity = is_odd(length=lengths[c])
        open_bins = [i for i in range(len(targets)) if quotas[parity][i] > 0]
        best = max(open_bins, key=lambda i: (targets[i] - sums[i], -i))

        bins[c] = best
        sums[best] += lengths[c]
        quotas[parity][best] -= 1

    return bins

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _ordered_cycles(lengths: Sequence[int], bins: Sequence[int]) -> List[int]:
    return sorted(range(len(lengths)), key=lambda c: (lengths[c], bins[c], c))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _swap_search(
    targets: Sequence[int], lengths: Sequence[int], bins: List[int], tol: int
) -> List[Tuple[int, int]]:
    """
    Swap same-parity cycles between bins while a swap either lowers `S` without lowering `S'`, or
    raises `S'` without raising `S`. The first improving swap in (length, bin) order is taken.

    Returns
    -------
    list of tuple of int
        The `(S, S')` pair after the seed and after every accepted swap.
    """
    sums = [0] * len(targets)

    for (length, index) in zip(lengths, bins):
        sums[index] += length

    current = badness(deviations=[s - t for (s, t) in zip(sums, targets)], tol=tol)
    history = [current]

    while current != (0, 0):
        order = _ordered_cycles(lengths=lengths, bins=bins)
        accepted = False

        for (x, y) in itertools.combinations(order, 2):
            (i, j) = (bins[x], bins[y])

            if i == j or lengths[x] == lengths[y] or is_odd(lengths[x]) != is_odd(lengths[y]):
                continue

            delta = lengths[y] - lengths[x]
            sums[i] += delta
            sums[j] -= delta
            candidate = badness(deviations=[s - t for (s, t) in zip(sums, targets)], tol=tol)

            improves_overfull = candidate[0] < current[0] and candidate[1] >= current[1]
            improves_underfull = candidate[1] > current[1] and candidate[0] <= current[0]

            if improves_overfull or improves_underfull:
                (bins[x], bins[y]) = (j, i)
                current = candidate
                history.append(current)
                accepted = True
                break

            sums[i] -= delta
            sums[j] += delta

        if not accepted:
            break

    return history

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _repair_search(
    targets: Sequence[int], lengths: Sequence[int], bins: List[int], tol: int, odd_cap: int
) -> bool:
    """
    Move single cycles and swap cycles of any parity while the penalty drops.

    Returns
    -------
    bool
        True if some move was accepted.
    """
    count = len(targets)
    sums = [0] * count
    odds = [0] * count

    for (length, index) in zip(lengths, bins):
        sums[index] += length
        odds[index] += is_odd(length=length)

    current = _excess(sums=sums, odds=odds, targets=targets, tol=tol, odd_cap=odd_cap)
    changed = False

    while current != (0, 0):
        order = _ordered_cycles(lengths=lengths, bins=bins)
        accepted = False

        for x in order:
            i = bins[x]

            for j in range(count):
                if j == i:
                    continue

                sums[i] -= lengths[x]
                sums[j] += lengths[x]
                odds[i] -= is_odd(lengths[x])
                odds[j] += is_odd(lengths[x])
                candidate = _excess(sums=sums, odds=odds, targets=targets, tol=tol, odd_cap=odd_cap)

                if candidate < current:
                    bins[x] = j
                    current = candidate
                    accepted = True
                    break

                sums[i] += lengths[x]
                sums[j] -= lengths[x]
                odds[i] += is_odd(lengths[x])
                odds[j] -= is_odd(lengths[x])

            if accepted:
                break

        if not accepted:
            for (x, y) in itertools.combinations(order, 2):
                (i, j) = (bins[x], bins[y])

                if i == j or lengths[x] == lengths[y]:
                    continue

                delta = lengths[y] - lengths[x]
                odd_delta = is_odd(lengths[y]) - is_odd(lengths[x])
                sums[i] += delta
                sums[j] -= delta
                odds[i] += odd_delta
                odds[j] -= odd_delta
                candidate = _excess(sums=sums, odds=odds, targets=targets, tol=tol, odd_cap=odd_cap)

                if candidate < current:
                    (bins[x], bins[y]) = (j, i)
                    current = candidate
                    accepted = True
                    break

                sums[i] -= delta
                sums[j] += delta
                odds[i] -= odd_delta
                odds[j] += odd_delta

        if not accepted:
            break

        changed = True

    return changed

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield every way to write `total` as an ordered sum of `parts` non-negative integers, with the
    first part largest first.
    """
    if parts == 1:
        yield (total,)
        return

    for first in range(total, -1, -1):
        for rest in _compositions(total=total - first, parts=parts - 1):
            yield (first,) + rest

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def exact_counts(
    targets: Sequence[int], lengths: Sequence[int], tol: int, odd_cap: int, budget: int
) -> Tuple[Optional[Dict[int, Tuple[int, ...]]], bool]:
    """
    Search, class by class of equal lengths, for per-bin counts that meet `tol` and `odd_cap`.

    Parameters
    ----------
    targets : list of int
        The bin targets.
    lengths : list of int
        The cycle lengths.
    tol : int
        The allowed deviation.
    odd_cap : int
        The allowed number of odd cycles per bin.
    budget : int
        The number of search nodes allowed.

    Returns
    -------
    counts : optional of dict of {int: tuple of int}
        The number of cycles of each length in each bin, or `None`.
    complete : bool
        True if the search finished within the budget, so `None` proves infeasibility.
    """
    classes = sorted(((length, lengths.count(length)) for length in set(lengths)), reverse=True)
    suffix = [0] * (len(classes) + 1)

    for index in range(len(classes) - 1, -1, -1):
        suffix[index] = suffix[index + 1] + classes[index][0] * classes[index][1]

    count = len(targets)
    failed = set()
    nodes = 0

    def fits(index: int, sums: Tuple[int, ...]) -> bool:
        remaining = suffix[index]
        room = 0
        need = 0

        for (s, t) in zip(sums, targets):
            if s > t + tol:
                return False

            room += t + tol - s
            need += max(0, t - tol - s)

        return need <= remaining <= room

    def search(index: int, sums: Tuple[int, ...], odds: Tuple[int, ...]) -> Optional[list]:
        nonlocal nodes

        nodes += 1

        if nodes > budget:
            raise TimeoutError

        if index == len(classes):
            return [] if all(abs(s - t) <= tol for (s, t) in zip(sums, targets)) else None

        key = (index, sums, odds)

        if key in failed:
            return None

        (length, multiplicity) = classes[index]
        odd = is_odd(length=length)

        for split in _compositions(total=multiplicity, parts=count):
            new_sums = tuple(s + length * c for (s, c) in zip(sums, split))
            new_odds = tuple(o + c * odd for (o, c) in zip(odds, split)) if odd else odds

            if odd and max(new_odds) > odd_cap:
                continue

            if not fits(index=index + 1, sums=new_sums):
                continue

            rest = search(index + 1, new_sums, new_odds)

            if rest is not None:
                return [(length, split)] + rest

        failed.add(key)

        return None

    zero = tuple([0] * count)

    try:
        found = search(0, zero, zero) if fits(index=0, sums=zero) else None
    except TimeoutError:
        return (None, False)

    if found is None:
        return (None, True)

    return ({length: split for (length, split) in found}, True)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _bins_from_counts(
    lengths: Sequence[int], counts: Mapping[int, Sequence[int]]
) -> List[int]:
    remaining = {length: list(split) for (length, split) in counts.items()}
    bins = []

    for length in lengths:
        split = remaining[length]
        index = next(i for (i, c) in enumerate(split) if c > 0)
        split[index] -= 1
        bins.append(index)

    return bins

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def balance_partition(
    targets: Sequence[int], lengths: Sequence[int], tol: int = 0, odd_cap: Optional[int] = None,
    budget: int = 1_000_000
) -> BalanceAssignment:
    """
    Partition the cycles into bins whose sums are within `tol` of the targets and whose odd-cycle
    counts are at most `odd_cap`.

    The seed apportions odd and even cycles separately. Same-parity swaps then lower the overfull
    total `S` or raise the underfull total `S'` without undoing the other. If that stalls short of
    feasibility, a repair phase moves and swaps cycles of either parity, and finally an exact
    search over per-length counts either completes the assignment or proves none exists.

    Parameters
    ----------
    targets : list of int
        The positive bin targets.
    lengths : list of int
        The cycle lengths.
    tol : int, default=0
        The allowed deviation of each bin sum.
    odd_cap : optional of int, default=None
        The allowed number of odd cycles per bin. `None` means unbounded.
    budget : int, default=1_000_000
        The node budget of the exact search.

    Returns
    -------
    BalanceAssignment
        The assignment. If it is infeasible, it is the best found and `proven_infeasible` tells
        whether the exact search ruled out every alternative.

    Raises
    ------
    ValueError
        If there are no bins, a target is not positive, or `tol` is negative.
    """
    targets = tuple(int(t) for t in targets)
    lengths = tuple(int(length) for length in lengths)
    odd_cap = len(lengths) if odd_cap is None else int(odd_cap)

    if not targets or min(targets) <= 0:
        raise ValueError(f"Expected positive targets, got {targets}.")

    if tol < 0:
        raise ValueError(f"The tolerance must be non-negative, got {tol}.")

    if abs(sum(lengths) - sum(targets)) > tol * len(targets):
        _logger.warning(
            "The cycles hold %d vertices but the targets sum to %d, beyond %d per bin; the result "
            "cannot be feasible.", sum(lengths), sum(targets), tol
        )

    def assignment(bins: Sequence[int], phase: str, proven: bool = False) -> BalanceAssignment:
        return BalanceAssignment(
            targets=targets, lengths=lengths, bins=tuple(bins), tol=tol, odd_cap=odd_cap,
            phase=phase, history=tuple(history), proven_infeasible=proven
        )

    bins = seed_assignment(targets=targets, lengths=lengths)
    history = _swap_search(targets=targets, lengths=lengths, bins=bins, tol=tol)
    result = assignment(bins=bins, phase="swap" if len(history) > 1 else "seed")

    if result.feasible:
        return result

    if _repair_search(targets=targets, lengths=lengths, bins=bins, tol=tol, odd_cap=odd_cap):
        result = assignment(bins=bins, phase="repair")

        if result.feasible:
            return result

    (counts, complete) = exact_counts(
        targets=targets, lengths=list(lengths), tol=tol, odd_cap=odd_cap, budget=budget
    )

    if counts is not None:
        return assignment(bins=_bins_from_counts(lengths=lengths, counts=counts), phase="exact")

    if complete:
        _logger.info("No assignment of %s to %s meets tol=%d, odd_cap=%d.", lengths, targets, tol,
                     odd_cap)
    else:
        _logger.info("The exact balance search ran out of its %d node budget.", budget)

    return dataclasses.replace(result, proven_infeasible=complete)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0)

    (g, x, y) = _extended_gcd(b, a % b)

    return (g, y, x - (a // b) * y)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _bezout(support: Sequence[int]) -> List[int]:
    """
    Get coefficients with `sum(a_l * b_l) == gcd(support)` by folding the extended gcd.
    """
    coefficients = [1] + [0] * (len(support) - 1)
    g = support[0]

    for (index, a) in enumerate(support[1:], start=1):
        (g, x, y) = _extended_gcd(g, a)
        coefficients = [c * x for c in coefficients]
        coefficients[index] = y

    return coefficients

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _vectors_with_norm(size: int, norm: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield every integer vector of the given size whose absolute values sum to `norm`.
    """
    if size == 1:
        yield from {(norm,), (-norm,)}
        return

    for first in range(-norm, norm + 1):
        for rest in _vectors_with_norm(size=size - 1, norm=norm - abs(first)):
            yield (first,) + rest

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def a_transform_coeffs(support: Sequence[int]) -> ATransform:
    """
    Find integers `b_l` with `sum(a_l * b_l) == 2` over a set of short cycle lengths.

    The extended gcd proves a solution exists. Among all solutions, the one with the smallest
    `sum(|b_l|)`, then the smallest `max(|b_l|)`, then the lexicographically smallest is returned.

    Parameters
    ----------
    support : list of int
        Distinct lengths from `{6, 8, 10, 12, 14}`, at least two.

    Returns
    -------
    ATransform
        The coefficients, aligned with the increasing support.

    Raises
    ------
    ValueError
        If the support is too small, contains other lengths, or has gcd other than 2 (for example
        `{8, 12}`).
    """
    support = tuple(sorted(set(int(a) for a in support)))

    if len(support) < 2:
        raise ValueError(f"An A-transformation needs at least two lengths, got {support}.")

    if any(a not in A_LENGTHS for a in support):
        raise ValueError(f"The lengths {support} are not all in {A_LENGTHS}.")

    g = math.gcd(*support)

    if g != 2:
        raise ValueError(f"The lengths {support} have gcd {g}, not 2.")

    bound = sum(abs(b) for b in _bezout(support=support))

    for norm in range(1, bound + 1):
        solutions = [
            b for b in _vectors_with_norm(size=len(support), norm=norm)
            if sum(a * x for (a, x) in zip(support, b)) == 2
        ]

        if solutions:
            best = min(solutions, key=lambda b: (max(abs(x) for x in b), b))

            return ATransform(support=support, coefficients=best)

    # The folded extended gcd always gives a solution within `bound`.
    raise AssertionError(f"No A-transformation found for {support}.")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def apply_a_transform(
    assignment: BalanceAssignment, from_bin: int, to_bin: int, coeffs: ATransform
) -> BalanceAssignment:
    """
    Shift exactly 2 vertices from `from_bin` to `to_bin`: for a positive `b_l`, move `b_l` cycles
    of length `a_l` from `from_bin` to `to_bin`, and for a negative one move `-b_l` of them back.
    The highest-index cycles of each length move.

    Parameters
    ----------
    assignment : BalanceAssignment
        The assignment.
    from_bin, to_bin : int
        Two distinct bins.
    coeffs : ATransform
        The transformation.

    Returns
    -------
    BalanceAssignment
        The new assignment.

    Raises
    ------
    ValueError
        If the bins are invalid or a bin lacks the cycles a move needs.
    """
    count = len(assignment.targets)

    if from_bin == to_bin or not (0 <= from_bin < count and 0 <= to_bin < count):
        raise ValueError(f"Invalid bins {from_bin} and {to_bin} for {count} bins.")

    bins = list(assignment.bins)

    for (length, b) in zip(coeffs.support, coeffs.coefficients):
        (source, destination) = (from_bin, to_bin) if b > 0 else (to_bin, from_bin)
        available = [
            c for (c, (cycle_length, index)) in enumerate(zip(assignment.lengths, bins))
            if cycle_length == length and index == source
        ]

        if len(available) < abs(b):
            raise ValueError(f"Bin {source} holds {len(available)} cycles of length {length} but "
                             f"the transformation moves {abs(b)}.")

        for c in sorted(available, reverse=True)[:abs(b)]:
            bins[c] = destination

    return dataclasses.replace(assignment, bins=tuple(bins))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def balance_with_a_transforms(
    assignment: BalanceAssignment, coeffs: ATransform
) -> BalanceAssignment:
    """
    Zero the deviation of every bin but the last, bin by bin: while bin `i` is over its target,
    transform from `i` to `i + 1`, and while it is under, transform from `i + 1` to `i`.

    Parameters
    ----------
    assignment : BalanceAssignment
        The assignment, with even deviations.
    coeffs : ATransform
        The transformation.

    Returns
    -------
    BalanceAssignment
        The assignment where bins `0..N-2` meet their targets exactly.

    Raises
    ------
    ValueError
        If a deviation is odd or a bin runs out of the cycles a transformation needs.
    """
    current = assignment

    for i in range(len(assignment.targets) - 1):
        deviation = current.deviations[i]

        if deviation % 2 != 0:
            raise ValueError(f"Bin {i} deviates by {deviation}, which is odd.")

        while current.deviations[i] > 0:
            current = apply_a_transform(assignment=current, from_bin=i, to_bin=i + 1, coeffs=coeffs)

        while current.deviations[i] < 0:
            current = apply_a_transform(assignment=current, from_bin=i + 1, to_bin=i, coeffs=coeffs)

    return current
