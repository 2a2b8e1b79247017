# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains the abstract base class for a prototype of experiment instances.
"""

from typing import Any

import abc

#===================================================================================================
#===================================================================================================
class Prototype(abc.ABC):
    """
    The abstract base class for a prototype. A prototype is configured once and cloned per
    experiment row.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    @abc.abstractmethod
    def name(self) -> str:
        """
        The name recorded in result tables for instances made by this prototype.
        """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @abc.abstractmethod
    def clone(self, **kwargs: Any) -> Any:
        """
        Make a clone of the prototype.

        Parameters
        ----------
        **kwargs : dict of {str, any}
            See concrete implementations.

        Returns
        -------
        any
            A clone of the prototype.
        """
