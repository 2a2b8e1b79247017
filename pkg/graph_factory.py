# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains factory functions for making host 3-graphs. Every random generator is a pure
function of its parameters and seed.
"""

from typing import Sequence

import itertools
import logging

import numpy as np

import hg_graph
import settings

_logger = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def make_rng(seed: int) -> np.random.Generator:
    """
    Make the generator named in the settings, seeded with `seed`.
    """
    bit_generator = getattr(np.random, settings.parameters.rng_name)

    return np.random.Generator(bit_generator(seed))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def gen_complete(n: int) -> hg_graph.ThreeGraph:
    """
    Make the complete 3-graph on `n` vertices.
    """
    return hg_graph.new_graph(n=n, edges=itertools.combinations(range(n), 3))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def gen_random(n: int, p: float, seed: int) -> hg_graph.ThreeGraph:
    """
    Make a random 3-graph that keeps each triple independently with probability `p`.

    Parameters
    ----------
    n : int
        The vertex count.
    p : float
        The edge probability, in `[0, 1]`.
    seed : int
        The seed of the random number generator.

    Returns
    -------
    hg_graph.ThreeGraph
        The graph.

    Raises
    ------
    ValueError
        If `p` is outside `[0, 1]`.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"The edge probability must lie in [0, 1], got {p}.")

    triples = list(itertools.combinations(range(n), 3))
    keep = make_rng(seed=seed).random(size=len(triples)) < p

    return hg_graph.new_graph(n=n, edges=[t for (t, kept) in zip(triples, keep) if kept])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def gen_codegree_floor(n: int, target: int, seed: int) -> hg_graph.ThreeGraph:
    """
    Make a random 3-graph with minimum codegree at least `target`.

    The pairs are visited in a random order. While a pair is below `target`, it gets an edge with a
    uniformly random third vertex outside its neighbourhood. Codegrees only grow, so one pass
    suffices.

    Parameters
    ----------
    n : int
        The vertex count.
    target : int
        The minimum codegree wanted, at most `n - 2`.
    seed : int
        The seed of the random number generator.

    Returns
    -------
    hg_graph.ThreeGraph
        The graph.

    Raises
    ------
    ValueError
        If `target > n - 2`.
    """
    if target > n - 2:
        raise ValueError(f"The codegree {target} is unreachable on {n} vertices (at most {n - 2}).")

    rng = make_rng(seed=seed)
    pairs = list(itertools.combinations(range(n), 2))
    codegree = np.zeros(shape=(n, n), dtype=np.int64)
    neighbors = [[set() for _ in range(n)] for _ in range(n)]
    edges = set()

    for index in rng.permutation(len(pairs)):
        (u, v) = pairs[index]

        while codegree[u, v] < target:
            options = [w for w in range(n) if w not in (u, v) and w not in neighbors[u][v]]
            w = options[int(rng.integers(low=0, high=len(options)))]
            edge = tuple(sorted((u, v, w)))
            edges.add(edge)

            for (x, y, z) in ((edge[0], edge[1], edge[2]), (edge[0], edge[2], edge[1]),
                              (edge[1], edge[2], edge[0])):
                codegree[x, y] += 1
                codegree[y, x] += 1
                neighbors[x][y].add(z)
                neighbors[y][x].add(z)

    graph = hg_graph.new_graph(n=n, edges=edges)

    _logger.debug(
        "gen_codegree_floor(n=%d, target=%d, seed=%d): %d edges, codegree %d.", n, target, seed,
        graph.edge_count, graph.min_codegree()
    )

    return graph

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def gen_disjoint_blocks(sizes: Sequence[int]) -> hg_graph.ThreeGraph:
    """
    Make the disjoint union of complete 3-graphs on consecutive blocks of the given sizes.
    """
    if any(size < 0 for size in sizes):
        raise ValueError(f"Block sizes must be non-negative, got {list(sizes)}.")

    edges = []
    start = 0

    for size in sizes:
        edges.extend(itertools.combinations(range(start, start + size), 3))
        start += size

    return hg_graph.new_graph(n=start, edges=edges)
