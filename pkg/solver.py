# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains exact backtracking searches for spanning loose-cycle families, single loose
cycles and loose paths in small 3-graphs.

Each search grows a cycle or path one edge at a time. The linking vertex `x` reached so far picks
the next middle vertex from its link and the next linking vertex from the pair index `N(x, m)`,
both in increasing order. Budgets count search nodes, not seconds.
"""

from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import concurrent.futures
import dataclasses
import enum
import itertools
import logging
import threading
import time

import claim
import hg_embedding
import hg_family
import hg_graph
import hg_loose

_logger = logging.getLogger(__name__)

#===================================================================================================
#===================================================================================================
class Status(enum.Enum):
    """
    Enums for the outcome of a search.
    """
    FOUND = "found"
    EXHAUSTED = "exhausted"
    TIMEOUT = "timeout"

#===================================================================================================
#===================================================================================================
class SearchTimeout(RuntimeError):
    """
    Raised when a search that must give an exact answer runs out of its node budget.
    """

#===================================================================================================
#===================================================================================================
class _Cancelled(Exception):
    pass

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass
class SearchStats:
    """
    The counters of a search.

    Attributes
    ----------
    nodes : int
        The number of nodes expanded.
    max_depth : int
        The largest number of vertices placed at once.
    ms : float
        The wall time in milliseconds.
    status : Status
        `EXHAUSTED` certifies that no solution exists.
    """
    nodes: int = 0
    max_depth: int = 0
    ms: float = 0.0
    status: Status = Status.EXHAUSTED

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value, "nodes": self.nodes, "max_depth": self.max_depth,
            "ms": round(self.ms, 3)
        }

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class SolveResult:
    """
    The result of `solve_spanning`.

    Attributes
    ----------
    embedding : optional of hg_embedding.Embedding
        The spanning embedding, when found.
    stats : SearchStats
        The counters.
    """
    embedding: Optional[hg_embedding.Embedding]
    stats: SearchStats

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def status(self) -> Status:
        return self.stats.status

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        result = self.stats.to_dict()

        if self.embedding is not None:
            result["embedding"] = self.embedding.to_dict()["cycles"]

        return result

#===================================================================================================
#===================================================================================================
class _Budget:
    """
    A node counter shared by the workers of one search.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, limit: int):
        self.limit = limit
        self.count = 0
        self.max_depth = 0
        self._lock = threading.Lock()

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def tick(self, depth: int):
        with self._lock:
            self.count += 1
            self.max_depth = max(self.max_depth, depth)

            if self.count > self.limit:
                raise SearchTimeout(f"The search exceeded its budget of {self.limit} nodes.")

#===================================================================================================
#===================================================================================================
class _TaskBudget:
    """
    The counter of one root branch of a parallel search. It ticks the shared budget and cancels
    the branch once an earlier branch has a solution.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, shared: _Budget, position: int, best: List[int]):
        self.count = 0
        self.max_depth = 0
        self._shared = shared
        self._position = position
        self._best = best

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def tick(self, depth: int):
        self.count += 1
        self.max_depth = max(self.max_depth, depth)
        self._shared.tick(depth=depth)

        if self._best[0] < self._position:
            raise _Cancelled()

#===================================================================================================
#===================================================================================================
class _CycleGrower:
    """
    Generates the loose cycles through a vertex, each in canonical form.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, host: hg_graph.ThreeGraph, budget: _Budget):
        self._pairs = host.pair_index
        self._links = [host.link(v) for v in range(host.n)]
        self._budget = budget

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def first_edges(self, u: int, avail: int) -> Iterator[Tuple[List[int], Optional[int]]]:
        """
        Yield the first edge of every canonical cycle whose minimum vertex is `u`, with the lower
        bound the closing vertex must exceed.

        The minimum vertex is either a linking vertex at position 0, oriented so that
        `c_1 < c_{t-1}`, or a middle vertex at position 1, oriented so that `c_0 < c_2`.
        """
        pairs = self._pairs[u]

        for c1 in hg_graph.iter_bits(self._links[u] & avail):
            for c2 in hg_graph.iter_bits(pairs[c1] & avail):
                yield ([u, c1, c2], c1)

        for c0 in hg_graph.iter_bits(self._links[u] & avail):
            above = avail & ~((1 << (c0 + 1)) - 1)

            for c2 in hg_graph.iter_bits(pairs[c0] & above):
                yield ([c0, u, c2], None)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def extend(
        self, ordering: List[int], t: int, avail: int, low: Optional[int], depth: int
    ) -> Iterator[List[int]]:
        """
        Yield every completion of the partial cycle `ordering` to `t` vertices from `avail`.

        Parameters
        ----------
        ordering : list of int
            The vertices `c_0..c_{2i}`, ending at a linking vertex.
        t : int
            The cycle length.
        avail : int
            The bitset of vertices still free, excluding `ordering`.
        low : optional of int
            The closing vertex must exceed this, when given.
        depth : int
            The number of vertices placed before this cycle.
        """
        self._budget.tick(depth=depth + len(ordering))

        x = ordering[-1]
        start = ordering[0]

        if len(ordering) == t - 1:
            closing = self._pairs[x][start] & avail

            if low is not None:
                closing &= ~((1 << (low + 1)) - 1)

            for c in hg_graph.iter_bits(closing):
                yield ordering + [c]

            return

        if avail.bit_count() < t - len(ordering) or not self._links[start] & avail:
            return

        pairs = self._pairs[x]

        for a in hg_graph.iter_bits(self._links[x] & avail):
            rest = avail & ~(1 << a)

            for b in hg_graph.iter_bits(pairs[a] & rest):
                yield from self.extend(
                    ordering=ordering + [a, b], t=t, avail=rest & ~(1 << b), low=low, depth=depth
                )

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def cycles_through(self, u: int, t: int, avail: int, depth: int = 0) -> Iterator[List[int]]:
        """
        Yield every canonical cycle on `t` vertices with minimum vertex `u` inside `avail | {u}`.
        """
        avail &= ~(1 << u)

        for (prefix, low) in self.first_edges(u=u, avail=avail):
            rest = avail & ~(1 << prefix[0]) & ~(1 << prefix[1]) & ~(1 << prefix[2])

            yield from self.extend(ordering=prefix, t=t, avail=rest, low=low, depth=depth)

#===================================================================================================
#===================================================================================================
class _SpanningSearch:
    """
    The worker-private state of a spanning search.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, host: hg_graph.ThreeGraph, budget: _Budget):
        self._grower = _CycleGrower(host=host, budget=budget)
        self._links = [host.link(v) for v in range(host.n)]
        self._n = host.n

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def place(
        self, free: int, remaining: Dict[int, int], cycles: List[List[int]]
    ) -> Optional[List[List[int]]]:
        """
        Cover the free vertices, anchoring each new cycle at the least free vertex and trying the
        remaining lengths from largest to smallest.
        """
        if free == 0:
            return list(cycles)

        u = (free & -free).bit_length() - 1

        if not self._links[u] & free:
            return None

        for t in sorted((length for (length, c) in remaining.items() if c > 0), reverse=True):
            found = self.place_with(free=free, remaining=remaining, cycles=cycles, t=t,
                                    orderings=self._grower.cycles_through(
                                        u=u, t=t, avail=free, depth=self._n - free.bit_count()
                                    ))

            if found is not None:
                return found

        return None

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def place_with(
        self, free: int, remaining: Dict[int, int], cycles: List[List[int]], t: int,
        orderings: Iterator[List[int]]
    ) -> Optional[List[List[int]]]:
        """
        Try each ordering as the next cycle of length `t` and recurse.
        """
        for ordering in orderings:
            mask = hg_graph.mask_of(ordering)
            remaining[t] -= 1
            cycles.append(ordering)

            found = self.place(free=free & ~mask, remaining=remaining, cycles=cycles)

            cycles.pop()
            remaining[t] += 1

            if found is not None:
                return found

        return None

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def run_task(
        self, task: Tuple[int, List[int], Optional[int]], remaining: Dict[int, int]
    ) -> Optional[List[List[int]]]:
        """
        Search below one root branch: a length and the first edge of the cycle through vertex 0.
        """
        (t, prefix, low) = task
        full = (1 << self._n) - 1
        rest = full & ~hg_graph.mask_of(prefix)
        orderings = self._grower.extend(ordering=prefix, t=t, avail=rest, low=low, depth=0)

        return self.place_with(
            free=full, remaining=dict(remaining), cycles=[], t=t, orderings=orderings
        )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _to_embedding(
    host: hg_graph.ThreeGraph, spec: hg_family.CycleFamilySpec, cycles: Sequence[Sequence[int]]
) -> hg_embedding.Embedding:
    """
    Align found cycles with the family: equal lengths go to increasing family indices in the order
    the cycles were found.
    """
    pool: Dict[int, List[Sequence[int]]] = {}

    for cycle in cycles:
        pool.setdefault(len(cycle), []).append(cycle)

    aligned = tuple(tuple(pool[length].pop(0)) for length in spec.lengths)

    return hg_embedding.Embedding(cycles=aligned, host=host)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def solve_spanning(
    host: hg_graph.ThreeGraph, spec: hg_family.CycleFamilySpec, budget: int, workers: int = 1
) -> SolveResult:
    """
    Decide whether the host contains the family as a spanning sub-graph.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host graph.
    spec : hg_family.CycleFamilySpec
        The family, on exactly `host.n` vertices.
    budget : int
        The node budget.
    workers : int, default=1
        The number of threads that split the root branching. Any worker count returns the
        single-threaded embedding and counters unless the shared budget runs out.

    Returns
    -------
    SolveResult
        A verified embedding with status `FOUND`, or no embedding with status `EXHAUSTED`
        (certified absent) or `TIMEOUT`.

    Raises
    ------
    ValueError
        If the family does not have `host.n` vertices.
    """
    if spec.n != host.n:
        raise ValueError(f"The family has {spec.n} vertices but the host has {host.n}.")

    started = time.perf_counter()
    remaining: Dict[int, int] = {}

    for length in spec.lengths:
        remaining[length] = remaining.get(length, 0) + 1

    if workers <= 1:
        counter = _Budget(limit=budget)
        search = _SpanningSearch(host=host, budget=counter)

        try:
            cycles = search.place(free=(1 << host.n) - 1, remaining=remaining, cycles=[])
            status = Status.FOUND if cycles is not None else Status.EXHAUSTED
        except SearchTimeout:
            (cycles, status) = (None, Status.TIMEOUT)

        (nodes, max_depth) = (min(counter.count, budget), counter.max_depth)
    else:
        (cycles, status, nodes, max_depth) = _solve_parallel(
            host=host, remaining=remaining, budget=budget, workers=workers
        )

    stats = SearchStats(
        nodes=nodes, max_depth=max_depth, ms=(time.perf_counter() - started) * 1000.0,
        status=status
    )
    embedding = None

    if cycles is not None:
        embedding = _to_embedding(host=host, spec=spec, cycles=cycles)
        report = hg_embedding.verify_embedding(
            host=host, spec=spec, embedding=embedding, spanning=True
        )
        claim.check(report.ok, f"The solver returned an invalid embedding: {report.violation}")

    _logger.debug("solve_spanning(n=%d, family=%s): %s after %d nodes.", host.n, spec,
                  status.value, stats.nodes)

    return SolveResult(embedding=embedding, stats=stats)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _solve_parallel(
    host: hg_graph.ThreeGraph, remaining: Dict[int, int], budget: int, workers: int
) -> Tuple[Optional[List[List[int]]], Status, int, int]:
    """
    Split the root branching across threads.

    Each root branch is a task. The tasks are dealt round robin and each worker searches its own
    in order. A solution in task `p` cancels every task after `p`, so the first solvable task wins
    as it does in the single-threaded search. The counters sum over the tasks up to the winner,
    hence they match the single-threaded ones unless the shared budget runs out.

    Returns
    -------
    cycles : optional of list of list of int
        The cycles found.
    status : Status
        The status.
    nodes : int
        The nodes counted.
    max_depth : int
        The largest depth reached.
    """
    counter = _Budget(limit=budget)

    if host.n == 0:
        return ([], Status.FOUND, 0, 0)

    grower = _CycleGrower(host=host, budget=counter)
    rest = ((1 << host.n) - 1) & ~1
    tasks = [
        (t, prefix, low)
    for t in sorted(remaining, reverse=True)
    for (prefix, low) in grower.first_edges(u=0, avail=rest)]

    best = [len(tasks)]
    lock = threading.Lock()
    timed_out = threading.Event()
    outcomes: Dict[int, Tuple[Optional[List[List[int]]], _TaskBudget]] = {}

    def work(index: int):
        for position in range(index, len(tasks), workers):
            if position > best[0] or timed_out.is_set():
                return

            ticker = _TaskBudget(shared=counter, position=position, best=best)
            search = _SpanningSearch(host=host, budget=ticker)

            try:
                found = search.run_task(task=tasks[position], remaining=remaining)
            except SearchTimeout:
                timed_out.set()
                return
            except _Cancelled:
                return

            with lock:
                outcomes[position] = (found, ticker)

                if found is not None:
                    best[0] = min(best[0], position)
                    return

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        list(executor.map(work, range(workers)))

    explored = [outcomes[p][1] for p in sorted(outcomes) if p <= best[0]]
    nodes = sum(ticker.count for ticker in explored)
    max_depth = max((ticker.max_depth for ticker in explored), default=0)

    if best[0] < len(tasks):
        return (outcomes[best[0]][0], Status.FOUND, nodes, max_depth)

    if timed_out.is_set():
        return (None, Status.TIMEOUT, min(counter.count, budget), counter.max_depth)

    return (None, Status.EXHAUSTED, nodes, max_depth)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def naive_spanning_oracle(host: hg_graph.ThreeGraph, spec: hg_family.CycleFamilySpec) -> bool:
    """
    Decide spanning containment by trying every vertex permutation, cut into consecutive blocks of
    the family's lengths. Only usable for tiny hosts.
    """
    if spec.n != host.n:
        raise ValueError(f"The family has {spec.n} vertices but the host has {host.n}.")

    bounds = list(itertools.accumulate(spec.lengths, initial=0))

    for permutation in itertools.permutations(range(host.n)):
        blocks = [permutation[bounds[i]:bounds[i + 1]] for i in range(len(spec.lengths))]

        if all(
            all(edge in host.edges for edge in hg_loose.LooseCycle(vertices=block).edges)
            for block in blocks
        ):
            return True

    return False

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _greedy_cycle(
    host: hg_graph.ThreeGraph, t: int, allowed: int
) -> Optional[hg_loose.LooseCycle]:
    """
    Grow a loose path greedily from each start vertex, always taking the smallest available pair,
    and close it with a common neighbour of its last linking vertex and its start.
    """
    pairs = host.pair_index

    for start in hg_graph.iter_bits(allowed):
        ordering = [start]
        avail = allowed & ~(1 << start)
        stuck = False

        while len(ordering) < t - 1 and not stuck:
            x = ordering[-1]
            stuck = True

            for a in hg_graph.iter_bits(host.link(x) & avail):
                b_options = pairs[x][a] & avail & ~(1 << a)

                if b_options:
                    b = (b_options & -b_options).bit_length() - 1
                    ordering.extend([a, b])
                    avail &= ~(1 << a) & ~(1 << b)
                    stuck = False
                    break

        if stuck:
            continue

        closing = pairs[ordering[-1]][start] & avail

        if closing:
            ordering.append((closing & -closing).bit_length() - 1)

            return hg_loose.LooseCycle(vertices=ordering)

    return None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def find_loose_cycle(
    host: hg_graph.ThreeGraph, t: int, allowed: Optional[Sequence[int]] = None,
    budget: int = 2_000_000
) -> Optional[hg_loose.LooseCycle]:
    """
    Find a loose cycle on `t` vertices inside `allowed`: a greedy path closed at its start, and if
    that fails an exact search anchored at each possible minimum vertex.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host.
    t : int
        The number of vertices, even and at least 6.
    allowed : optional list of int, default=None
        The usable vertices. `None` allows all.
    budget : int, default=2_000_000
        The node budget of the exact search.

    Returns
    -------
    optional of hg_loose.LooseCycle
        The cycle in canonical form, or `None` if there is none.

    Raises
    ------
    ValueError
        If `t` is odd or smaller than 6.
    SearchTimeout
        If the exact search runs out of budget.
    """
    if t < 6 or t % 2 != 0:
        raise ValueError(f"A loose cycle needs an even number of at least 6 vertices, got {t}.")

    allowed_mask = (1 << host.n) - 1 if allowed is None else hg_graph.mask_of(allowed)

    if allowed_mask.bit_count() < t:
        return None

    greedy = _greedy_cycle(host=host, t=t, allowed=allowed_mask)

    if greedy is not None:
        return greedy.canonical()

    grower = _CycleGrower(host=host, budget=_Budget(limit=budget))

    for u in hg_graph.iter_bits(allowed_mask):
        above = allowed_mask & ~((1 << (u + 1)) - 1)

        if above.bit_count() < t - 1:
            break

        for ordering in grower.cycles_through(u=u, t=t, avail=above):
            return hg_loose.LooseCycle(vertices=ordering)

    return None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def find_loose_path(
    host: hg_graph.ThreeGraph, length: int, start_set: Sequence[int], end_set: Sequence[int],
    allowed: Optional[Sequence[int]] = None, budget: int = 2_000_000
) -> Optional[hg_loose.LoosePath]:
    """
    Find a loose path with `length` edges whose first vertex lies in `start_set` and whose last
    vertex lies in `end_set`, using only `allowed` vertices.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host.
    length : int
        The number of edges, at least 1.
    start_set, end_set : list of int
        The admissible endpoints.
    allowed : optional list of int, default=None
        The usable vertices. `None` allows all.
    budget : int, default=2_000_000
        The node budget.

    Returns
    -------
    optional of hg_loose.LoosePath
        The path, or `None` if there is none.

    Raises
    ------
    ValueError
        If `length < 1`.
    SearchTimeout
        If the search runs out of budget.
    """
    if length < 1:
        raise ValueError(f"A loose path has at least one edge, got {length}.")

    allowed_mask = (1 << host.n) - 1 if allowed is None else hg_graph.mask_of(allowed)
    end_mask = hg_graph.mask_of(end_set) & allowed_mask
    counter = _Budget(limit=budget)
    pairs = host.pair_index

    def grow(ordering: List[int], avail: int) -> Optional[List[int]]:
        counter.tick(depth=len(ordering))

        x = ordering[-1]
        last = (len(ordering) - 1) // 2 == length - 1

        for a in hg_graph.iter_bits(host.link(x) & avail):
            rest = avail & ~(1 << a)
            options = pairs[x][a] & rest

            if last:
                options &= end_mask

            for b in hg_graph.iter_bits(options):
                if last:
                    return ordering + [a, b]

                found = grow(ordering=ordering + [a, b], avail=rest & ~(1 << b))

                if found is not None:
                    return found

        return None

    for p0 in sorted(set(start_set)):
        if not allowed_mask >> p0 & 1:
            continue

        found = grow(ordering=[p0], avail=allowed_mask & ~(1 << p0))

        if found is not None:
            return hg_loose.LoosePath(vertices=found)

    return None

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class PancyclicEntry:
    """
    The verdict for one cycle length.

    Attributes
    ----------
    q : int
        The number of vertices.
    status : Status
        `FOUND`, `EXHAUSTED` or `TIMEOUT`.
    cycle : optional of hg_loose.LooseCycle
        The cycle found.
    """
    q: int
    status: Status
    cycle: Optional[hg_loose.LooseCycle] = None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def greedy_pancyclic_report(
    host: hg_graph.ThreeGraph, budget: int = 2_000_000
) -> List[PancyclicEntry]:
    """
    Look for a loose cycle on every even number of vertices `q` from 6 to `n`.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host.
    budget : int, default=2_000_000
        The node budget per length.

    Returns
    -------
    list of PancyclicEntry
        One entry per `q`.
    """
    entries = []

    for q in range(6, host.n + 1, 2):
        try:
            cycle = find_loose_cycle(host=host, t=q, budget=budget)
            status = Status.FOUND if cycle is not None else Status.EXHAUSTED
        except SearchTimeout:
            (cycle, status) = (None, Status.TIMEOUT)

        entries.append(PancyclicEntry(q=q, status=status, cycle=cycle))

    return entries

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class PathEndpointEntry:
    """
    Whether a loose path of a given length joins two parts.

    Attributes
    ----------
    length : int
        The number of edges.
    start_part, end_part : int
        The parts holding the endpoints.
    status : Status
        `FOUND`, `EXHAUSTED` or `TIMEOUT`.
    """
    length: int
    start_part: int
    end_part: int
    status: Status

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def path_endpoint_report(
    host: hg_graph.ThreeGraph, parts: Sequence[Sequence[int]], lengths: Sequence[int],
    budget: int = 2_000_000
) -> List[PathEndpointEntry]:
    """
    Record, for each path length and each pair of parts `i <= j`, whether some loose path inside
    the union of the parts has one endpoint in each.

    Parameters
    ----------
    host : hg_graph.ThreeGraph
        The host.
    parts : list of list of int
        The vertex parts.
    lengths : list of int
        The path lengths to try.
    budget : int, default=2_000_000
        The node budget per query.

    Returns
    -------
    list of PathEndpointEntry
        One entry per `(length, i, j)`.
    """
    allowed = sorted(set(v for part in parts for v in part))
    entries = []

    for length in lengths:
        for (i, j) in itertools.combinations_with_replacement(range(len(parts)), 2):
            try:
                path = find_loose_path(
                    host=host, length=length, start_set=parts[i], end_set=parts[j],
                    allowed=allowed, budget=budget
                )
                status = Status.FOUND if path is not None else Status.EXHAUSTED
            except SearchTimeout:
                status = Status.TIMEOUT

            entries.append(
                PathEndpointEntry(length=length, start_part=i, end_part=j, status=status)
            )

    return entries
