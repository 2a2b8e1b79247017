# SPDX-License-Identifier: BSD-3-Clause

"""
The module contains classes for host graph prototypes used by the threshold experiments.
"""

from typing import Any, Dict, Optional

import extremal
import graph_factory
import hg_family
import hg_graph
import prototype

FLOOR_PREFIX = "codegree-floor"

#===================================================================================================
#===================================================================================================
class ExtremalGraphPrototype(prototype.Prototype):
    """
    This class clones the extremal host for a family.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def name(self) -> str:
        return "extremal"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def clone(self, **kwargs: Any) -> hg_graph.ThreeGraph:
        """
        Make a clone of the prototype.

        Parameters
        ----------
        **kwargs : dict of {str, any}
            spec : hg_family.CycleFamilySpec
                The family.

        Returns
        -------
        hg_graph.ThreeGraph
            The host.
        """
        spec = kwargs["spec"]

        return extremal.build_extremal(n=spec.n, spec=spec).host

#===================================================================================================
#===================================================================================================
class CompleteGraphPrototype(prototype.Prototype):
    """
    This class clones the complete host.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def name(self) -> str:
        return "complete"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def clone(self, **kwargs: Any) -> hg_graph.ThreeGraph:
        """
        Make a clone of the prototype.

        Parameters
        ----------
        **kwargs : dict of {str, any}
            spec : hg_family.CycleFamilySpec
                The family, whose vertex count is used.

        Returns
        -------
        hg_graph.ThreeGraph
            The host.
        """
        return graph_factory.gen_complete(n=kwargs["spec"].n)

#===================================================================================================
#===================================================================================================
class CodegreeFloorGraphPrototype(prototype.Prototype):
    """
    This class clones random hosts whose minimum codegree is at least `floor((n + 2k)/4) + offset`.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, offset: int):
        """
        The designated initializer.

        Parameters
        ----------
        offset : int
            The offset of the target codegree from `floor((n + 2k)/4)`.
        """
        self._offset = offset

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def name(self) -> str:
        return f"{FLOOR_PREFIX}{self._offset:+d}"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def offset(self) -> int:
        return self._offset

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def target(self, spec: hg_family.CycleFamilySpec) -> int:
        return hg_family.threshold_floor(spec=spec) + self._offset

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def clone(self, **kwargs: Any) -> hg_graph.ThreeGraph:
        """
        Make a clone of the prototype.

        Parameters
        ----------
        **kwargs : dict of {str, any}
            spec : hg_family.CycleFamilySpec
                The family.
            seed : int
                The seed for the generator.

        Returns
        -------
        hg_graph.ThreeGraph
            The host.
        """
        spec = kwargs["spec"]

        return graph_factory.gen_codegree_floor(
            n=spec.n, target=self.target(spec=spec), seed=kwargs["seed"]
        )

#===================================================================================================
#===================================================================================================
class RandomGraphPrototype(prototype.Prototype):
    """
    This class clones random hosts with a fixed edge probability.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __init__(self, p: float):
        """
        The designated initializer.

        Parameters
        ----------
        p : float
            The edge probability.
        """
        self._p = p

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def name(self) -> str:
        return "random"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def clone(self, **kwargs: Any) -> hg_graph.ThreeGraph:
        """
        Make a clone of the prototype.

        Parameters
        ----------
        **kwargs : dict of {str, any}
            spec : hg_family.CycleFamilySpec
                The family, whose vertex count is used.
            seed : int
                The seed for the generator.

        Returns
        -------
        hg_graph.ThreeGraph
            The host.
        """
        return graph_factory.gen_random(n=kwargs["spec"].n, p=self._p, seed=kwargs["seed"])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def from_descriptor(generator: str, p: Optional[float] = None) -> prototype.Prototype:
    """
    Make the prototype that a stored row names.

    Parameters
    ----------
    generator : str
        `extremal`, `complete`, `random`, or `codegree-floor` followed by a signed offset such as
        `codegree-floor-1` or `codegree-floor+0`.
    p : optional of float, default=None
        The edge probability, for `random`.

    Raises
    ------
    KeyError
        If the generator is unknown.
    """
    makers: Dict[str, Any] = {
        "extremal": ExtremalGraphPrototype,
        "complete": CompleteGraphPrototype,
        "random": lambda: RandomGraphPrototype(p=p)
    }

    if generator in makers:
        return makers[generator]()

    suffix = generator.removeprefix(FLOOR_PREFIX)

    if suffix != generator and suffix[:1] in ("+", "-") and suffix[1:].isdigit():
        return CodegreeFloorGraphPrototype(offset=int(suffix))

    raise KeyError(f"Invalid generator: {generator}")
