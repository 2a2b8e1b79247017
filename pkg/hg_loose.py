# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains classes for loose cycles and loose paths given as ordered vertex lists.

A loose cycle on `t` vertices `v_0, ..., v_{t-1}` has the edges `(v_{2i}, v_{2i+1}, v_{2i+2})`
with indices taken modulo `t`. The vertices at even positions are linking vertices, each in two
edges. The vertices at odd positions lie in a single edge. A loose path on `t = 2l + 1` vertices
has the edges `(v_{2i}, v_{2i+1}, v_{2i+2})` for `i < l`.
"""

from typing import Iterator, List, Sequence, Tuple

import hg_graph

#===================================================================================================
#===================================================================================================
class LooseCycle:
    """
    A loose cycle.

    Attributes
    ----------
    vertices : tuple of int
        The cyclic vertex ordering.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, vertices: Sequence[int]):
        """
        The designated initializer.

        Parameters
        ----------
        vertices : list of int
            The cyclic vertex ordering.

        Raises
        ------
        ValueError
            If the ordering has an odd number of vertices, fewer than 6, or repeats a vertex.
        """
        vertices = tuple(int(v) for v in vertices)

        if len(vertices) < 6 or len(vertices) % 2 != 0:
            raise ValueError(f"A loose cycle needs an even number of at least 6 vertices, got "
                             f"{len(vertices)}.")

        if len(set(vertices)) != len(vertices):
            raise ValueError(f"The ordering {vertices} repeats a vertex.")

        self.vertices = vertices

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LooseCycle):
            return NotImplemented

        return self.vertices == other.vertices

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash(self.vertices)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"LooseCycle({list(self.vertices)})"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.vertices)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edges(self) -> List[hg_graph.Edge]:
        """
        The `t/2` edges as sorted triples, in cyclic order.
        """
        t = len(self.vertices)
        v = self.vertices

        return [tuple(sorted((v[2*i], v[2*i + 1], v[(2*i + 2) % t]))) for i in range(t // 2)]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def linking_vertices(self) -> Tuple[int, ...]:
        return self.vertices[0::2]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def variants(self) -> Iterator["LooseCycle"]:
        """
        Yield every ordering that describes the same cycle: the rotations by an even number of
        positions, in both orientations.
        """
        t = len(self.vertices)
        reflected = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))

        for ordering in (self.vertices, reflected):
            for shift in range(0, t, 2):
                yield LooseCycle(vertices=ordering[shift:] + ordering[:shift])

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def canonical(self) -> "LooseCycle":
        """
        Make the canonical ordering. A linking minimum vertex goes to position 0 and a single-edge
        minimum vertex goes to position 1, since only even rotations keep the edge structure. The
        orientation puts the smaller of the two vertices that flank it first.

        Returns
        -------
        LooseCycle
            The canonical ordering of the same cycle.
        """
        t = len(self.vertices)
        v = self.vertices
        position = v.index(min(v))

        if position % 2 == 0:
            rotated = v[position:] + v[:position]

            if rotated[1] > rotated[t - 1]:
                rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        else:
            shift = position - 1
            rotated = v[shift:] + v[:shift]

            if rotated[0] > rotated[2]:
                # Reflect around the middle vertex, keeping it at position 1.
                reflected = (rotated[2], rotated[1], rotated[0]) + tuple(reversed(rotated[3:]))
                rotated = reflected

        return LooseCycle(vertices=rotated)

#===================================================================================================
#===================================================================================================
class LoosePath:
    """
    A loose path on an odd number of vertices.

    Attributes
    ----------
    vertices : tuple of int
        The linear vertex ordering.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, vertices: Sequence[int]):
        """
        The designated initializer.

        Parameters
        ----------
        vertices : list of int
            The linear vertex ordering.

        Raises
        ------
        ValueError
            If the ordering has an even number of vertices, fewer than 3, or repeats a vertex.
        """
        vertices = tuple(int(v) for v in vertices)

        if len(vertices) < 3 or len(vertices) % 2 != 1:
            raise ValueError(f"A loose path needs an odd number of at least 3 vertices, got "
                             f"{len(vertices)}.")

        if len(set(vertices)) != len(vertices):
            raise ValueError(f"The ordering {vertices} repeats a vertex.")

        self.vertices = vertices

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoosePath):
            return NotImplemented

        return self.vertices == other.vertices

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __hash__(self) -> int:
        return hash(self.vertices)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"LoosePath({list(self.vertices)})"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def length(self) -> int:
        """
        The number of edges.
        """
        return (len(self.vertices) - 1) // 2

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edges(self) -> List[hg_graph.Edge]:
        v = self.vertices

        return [tuple(sorted((v[2*i], v[2*i + 1], v[2*i + 2]))) for i in range(self.length)]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.vertices[0], self.vertices[-1])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def expand_path(ordering: Sequence[int], fresh: Sequence[int]) -> LoosePath:
    """
    Make the 1-expansion of a 2-graph path: the fresh vertex `fresh[i]` joins the edge between
    `ordering[i]` and `ordering[i + 1]`.

    Parameters
    ----------
    ordering : list of int
        The vertices of the 2-graph path, at least 2.
    fresh : list of int
        One fresh vertex per path edge.

    Returns
    -------
    LoosePath
        The loose path `ordering[0], fresh[0], ordering[1], ...`.
    """
    if len(fresh) != len(ordering) - 1:
        raise ValueError(f"A path on {len(ordering)} vertices needs {len(ordering) - 1} fresh "
                         f"vertices, got {len(fresh)}.")

    vertices = [ordering[0]]

    for (f, u) in zip(fresh, ordering[1:]):
        vertices.extend([f, u])

    return LoosePath(vertices=vertices)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def expand_cycle(ordering: Sequence[int], fresh: Sequence[int]) -> LooseCycle:
    """
    Make the 1-expansion of a 2-graph cycle: the fresh vertex `fresh[i]` joins the edge between
    `ordering[i]` and `ordering[(i + 1) % m]`.

    Parameters
    ----------
    ordering : list of int
        The vertices of the 2-graph cycle, at least 3.
    fresh : list of int
        One fresh vertex per cycle edge.

    Returns
    -------
    LooseCycle
        The loose cycle on `2m` vertices.
    """
    if len(fresh) != len(ordering):
        raise ValueError(f"A cycle on {len(ordering)} vertices needs {len(ordering)} fresh "
                         f"vertices, got {len(fresh)}.")

    vertices = []

    for (u, f) in zip(ordering, fresh):
        vertices.extend([u, f])

    return LooseCycle(vertices=vertices)
