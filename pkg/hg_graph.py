# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains a class for representing a 3-uniform hypergraph (3-graph) together with its
pair index.
"""

from typing import Iterable, Iterator, Optional, Sequence, Tuple
from nptyping import Int, NDArray, Shape

import numpy as np

Edge = Tuple[int, int, int]

#===================================================================================================
#===================================================================================================
class ThreeGraph:
    """
    An immutable 3-graph on the vertices `0..n-1`.

    The pair index maps each unordered pair `{u, v}` to the set of vertices `w` such that
    `{u, v, w}` is an edge. Each set is stored as an integer bitset, so codegrees are popcounts and
    common neighbourhoods are bitwise ands.

    Attributes
    ----------
    n : int
        The number of vertices.
    edges : frozenset of tuple of int
        The edges as sorted triples.
    """
    __slots__ = ("_n", "_edges", "_edge_list", "_pairs", "_links", "_degrees")

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        """
        The designated initializer.

        Parameters
        ----------
        n : int
            The number of vertices.
        edges : iterable of triple of int
            The edges. The vertices of an edge may be given in any order.

        Raises
        ------
        ValueError
            If `n` is negative, an edge does not have three distinct vertices, a vertex is out of
            range, or an edge is given twice.
        """
        if n < 0:
            raise ValueError(f"The vertex count must be non-negative, got {n}.")

        seen = set()
        pairs = [[0] * n for _ in range(n)]
        links = [0] * n
        degrees = [0] * n

        for raw in edges:
            edge = tuple(sorted(int(x) for x in raw))

            if len(edge) != 3 or len(set(edge)) != 3:
                raise ValueError(f"The edge {tuple(raw)} does not have three distinct vertices.")

            if edge[0] < 0 or edge[2] >= n:
                raise ValueError(f"The edge {edge} has a vertex outside 0..{n - 1}.")

            if edge in seen:
                raise ValueError(f"The edge {edge} is given more than once.")

            seen.add(edge)
            (u, v, w) = edge

            for (x, y, z) in ((u, v, w), (u, w, v), (v, w, u)):
                pairs[x][y] |= 1 << z
                pairs[y][x] |= 1 << z
                links[x] |= 1 << y
                links[y] |= 1 << x

            for x in edge:
                degrees[x] += 1

        self._n = n
        self._edges = frozenset(seen)
        self._edge_list = tuple(sorted(seen))
        self._pairs = tuple(tuple(row) for row in pairs)
        self._links = tuple(links)
        self._degrees = tuple(degrees)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThreeGraph):
            return NotImplemented

        return self._n == other._n and self._edges == other._edges

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"ThreeGraph(n={self._n}, edge_count={len(self._edges)})"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edges(self) -> frozenset:
        return self._edges

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edge_list(self) -> Tuple[Edge, ...]:
        """
        The edges in lexicographic order.
        """
        return self._edge_list

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edge_count(self) -> int:
        return len(self._edges)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def pair_index(self) -> Tuple[Tuple[int, ...], ...]:
        """
        The pair index as an `n` by `n` table of bitsets. The diagonal is empty.
        """
        return self._pairs

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def _check_vertex(self, v: int):
        if not 0 <= v < self._n:
            raise ValueError(f"The vertex {v} is outside 0..{self._n - 1}.")

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def has_edge(self, u: int, v: int, w: int) -> bool:
        """
        Check whether `{u, v, w}` is an edge.

        Parameters
        ----------
        u, v, w : int
            The vertices, in any order.

        Returns
        -------
        bool
            True if the triple is an edge.
        """
        return tuple(sorted((u, v, w))) in self._edges

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def neighbors(self, u: int, v: int) -> int:
        """
        Get the common neighbourhood `N(u, v)` as a bitset.

        Parameters
        ----------
        u, v : int
            Two distinct vertices.

        Returns
        -------
        int
            The bitset of vertices `w` with `{u, v, w}` an edge.

        Raises
        ------
        ValueError
            If `u == v` or a vertex is out of range.
        """
        self._check_vertex(u)
        self._check_vertex(v)

        if u == v:
            raise ValueError(f"The codegree needs two distinct vertices, got {u} twice.")

        return self._pairs[u][v]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def link(self, u: int) -> int:
        """
        Get the bitset of vertices `v` that lie in at least one edge with `u`.
        """
        self._check_vertex(u)

        return self._links[u]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def codegree(self, u: int, v: int) -> int:
        """
        Get the number of edges that contain both `u` and `v`.

        Parameters
        ----------
        u, v : int
            Two distinct vertices.

        Returns
        -------
        int
            The codegree `|N(u, v)|`.
        """
        return self.neighbors(u=u, v=v).bit_count()

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def degree(self, v: int) -> int:
        """
        Get the number of edges that contain `v`.
        """
        self._check_vertex(v)

        return self._degrees[v]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def min_degree(self) -> int:
        return min(self._degrees, default=0)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def codegree_matrix(self) -> NDArray[Shape["*, *"], Int]:
        """
        Make the symmetric matrix of codegrees. The diagonal is zero.

        Returns
        -------
        NDArray[Shape["*, *"], Int]
            The codegree of every ordered pair.
        """
        matrix = np.zeros(shape=(self._n, self._n), dtype=np.int64)

        for (u, v, w) in self._edge_list:
            matrix[u, v] += 1
            matrix[u, w] += 1
            matrix[v, w] += 1

        return matrix + matrix.T

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def min_codegree(self) -> int:
        """
        Get the minimum codegree over all pairs of distinct vertices.

        Returns
        -------
        int
            The minimum codegree. A graph with fewer than two vertices has no pairs, and reports 0.
        """
        if self._n < 2:
            return 0

        matrix = self.codegree_matrix()
        (rows, columns) = np.triu_indices(n=self._n, k=1)

        return int(matrix[rows, columns].min())

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> "ThreeGraph":
        """
        Make the sub-graph induced on `vertices`, relabelled to `0..len(vertices)-1` in increasing
        vertex order.

        Parameters
        ----------
        vertices : iterable of int
            The vertices to keep.

        Returns
        -------
        ThreeGraph
            The induced sub-graph.
        """
        kept = sorted(set(vertices))

        for v in kept:
            self._check_vertex(v)

        relabel = {v: i for (i, v) in enumerate(kept)}
        edges = [
            (relabel[u], relabel[v], relabel[w])
        for (u, v, w) in self._edge_list if u in relabel and v in relabel and w in relabel]

        return ThreeGraph(n=len(kept), edges=edges)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def with_edges(self, extra: Iterable[Sequence[int]]) -> "ThreeGraph":
        """
        Make a new graph with `extra` edges added. The extra edges must not already be present.
        """
        return ThreeGraph(n=self._n, edges=list(self._edge_list) + [tuple(e) for e in extra])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def new_graph(n: int, edges: Iterable[Sequence[int]]) -> ThreeGraph:
    """
    Make a validated 3-graph.

    Parameters
    ----------
    n : int
        The number of vertices.
    edges : iterable of triple of int
        The edges.

    Returns
    -------
    ThreeGraph
        The graph with its pair index built.

    See Also
    --------
    ThreeGraph.__init__ : For the errors raised.
    """
    return ThreeGraph(n=n, edges=edges)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def iter_bits(mask: int) -> Iterator[int]:
    """
    Yield the positions of the set bits of `mask` in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def mask_of(vertices: Iterable[int]) -> int:
    mask = 0

    for v in vertices:
        mask |= 1 << v

    return mask

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def min_vertex_cover(graph: ThreeGraph, limit: Optional[int] = None) -> Tuple[int, ...]:
    """
    Find a minimum vertex cover by bounded branching on an uncovered edge.

    Parameters
    ----------
    graph : ThreeGraph
        A small graph.
    limit : optional of int, default=None
        The largest cover size to try. `None` allows up to `n`.

    Returns
    -------
    tuple of int
        A minimum vertex cover in increasing order.

    Raises
    ------
    ValueError
        If no cover of size at most `limit` exists.
    """
    edges = graph.edge_list
    limit = graph.n if limit is None else limit

    def branch(chosen: int, budget: int) -> Optional[int]:
        uncovered = next((e for e in edges if not any(chosen >> x & 1 for x in e)), None)

        if uncovered is None:
            return chosen

        if budget == 0:
            return None

        for x in uncovered:
            found = branch(chosen=chosen | (1 << x), budget=budget - 1)

            if found is not None:
                return found

        return None

    for size in range(limit + 1):
        cover = branch(chosen=0, budget=size)

        if cover is not None:
            return tuple(iter_bits(cover))

    raise ValueError(f"No vertex cover with at most {limit} vertices exists.")
