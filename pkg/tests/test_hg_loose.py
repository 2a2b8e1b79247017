# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for loose cycles, loose paths and 1-expansions.
"""

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import hg_loose

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_cycle_edges():
    cycle = hg_loose.LooseCycle(vertices=[0, 1, 2, 3, 4, 5])

    assert cycle.edges == [(0, 1, 2), (2, 3, 4), (0, 4, 5)]
    assert cycle.linking_vertices == (0, 2, 4)
    assert len(cycle) == 6

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("vertices", [[0, 1, 2, 3], [0, 1, 2, 3, 4, 5, 6], [0, 1, 2, 3, 4, 0]])
def test_invalid_cycles_are_rejected(vertices):
    with pytest.raises(ValueError):
        hg_loose.LooseCycle(vertices=vertices)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_canonical_of_a_middle_minimum():
    cycle = hg_loose.LooseCycle(vertices=[3, 0, 2, 1, 4, 5])
    canonical = cycle.canonical()

    assert canonical.vertices[1] == 0
    assert canonical.vertices[0] < canonical.vertices[2]
    assert sorted(canonical.edges) == sorted(cycle.edges)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_path():
    path = hg_loose.LoosePath(vertices=[4, 0, 1, 2, 3])

    assert path.length == 2
    assert path.edges == [(0, 1, 4), (1, 2, 3)]
    assert path.endpoints == (4, 3)

    with pytest.raises(ValueError):
        hg_loose.LoosePath(vertices=[0, 1])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_expansions():
    assert hg_loose.expand_path(ordering=[0, 1, 2], fresh=[5, 6]).vertices == (0, 5, 1, 6, 2)
    assert hg_loose.expand_cycle(ordering=[0, 1, 2], fresh=[3, 4, 5]).vertices == (
        0, 3, 1, 4, 2, 5
    )

    with pytest.raises(ValueError):
        hg_loose.expand_cycle(ordering=[0, 1, 2], fresh=[3, 4])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _cycles(draw) -> hg_loose.LooseCycle:
    t = 2 * draw(st.integers(min_value=3, max_value=8))
    vertices = draw(st.permutations(list(range(t + 4))))

    return hg_loose.LooseCycle(vertices=vertices[:t])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(cycle=_cycles())
@settings(max_examples=200, deadline=None)
def test_variants_share_edges_and_canonical_form(cycle):
    canonical = cycle.canonical()
    edges = sorted(cycle.edges)

    assert canonical.canonical() == canonical
    assert min(canonical.vertices[:2]) == min(cycle.vertices)

    for variant in cycle.variants():
        assert sorted(variant.edges) == edges
        assert variant.canonical() == canonical
