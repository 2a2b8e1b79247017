# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains shared fixtures and hypothesis strategies for the tests.
"""

import itertools

from hypothesis import strategies as st
import pytest

import graph_factory
import hg_graph

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def three_graphs(draw, min_n: int = 0, max_n: int = 8) -> hg_graph.ThreeGraph:
    """
    Draw a 3-graph by picking a subset of all triples.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    triples = list(itertools.combinations(range(n), 3))
    keep = draw(st.lists(st.booleans(), min_size=len(triples), max_size=len(triples)))

    return hg_graph.new_graph(n=n, edges=[t for (t, kept) in zip(triples, keep) if kept])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.fixture
def k6() -> hg_graph.ThreeGraph:
    return graph_factory.gen_complete(n=6)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.fixture
def k8() -> hg_graph.ThreeGraph:
    return graph_factory.gen_complete(n=8)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.fixture
def empty6() -> hg_graph.ThreeGraph:
    return hg_graph.new_graph(n=6, edges=[])
