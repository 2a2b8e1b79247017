# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for the 3-graph type and its codegree queries.
"""

import itertools

from hypothesis import given, settings
import numpy as np
import pytest

from conftest import three_graphs
import extremal
import hg_family
import hg_graph

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_complete_graph_codegrees(k6):
    assert k6.edge_count == 20
    assert k6.min_codegree() == 4
    assert all(k6.codegree(u, v) == 4 for (u, v) in itertools.combinations(range(6), 2))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_single_edge():
    graph = hg_graph.new_graph(n=3, edges=[(2, 0, 1)])

    assert graph.codegree(0, 1) == 1
    assert graph.has_edge(1, 2, 0)
    assert graph.edge_list == ((0, 1, 2),)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_empty_graph_has_zero_codegree():
    graph = hg_graph.new_graph(n=5, edges=[])

    assert graph.min_codegree() == 0
    assert graph.min_degree() == 0

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_tiny_graphs_report_zero():
    assert hg_graph.new_graph(n=0, edges=[]).min_codegree() == 0
    assert hg_graph.new_graph(n=1, edges=[]).min_codegree() == 0

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_extremal_codegree():
    spec = hg_family.family_from_lengths(lengths=[6])
    host = extremal.build_extremal(n=6, spec=spec).host

    assert host.min_codegree() == 1

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("edges", [
    [(0, 1, 2), (2, 1, 0)],
    [(0, 1, 1)],
    [(0, 1, 6)],
    [(-1, 1, 2)],
    [(0, 1)]
])
def test_invalid_edges_are_rejected(edges):
    with pytest.raises(ValueError):
        hg_graph.new_graph(n=6, edges=edges)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_codegree_needs_distinct_vertices(k6):
    with pytest.raises(ValueError):
        k6.codegree(2, 2)

    with pytest.raises(ValueError):
        k6.neighbors(0, 6)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_neighbors_is_a_bitset():
    graph = hg_graph.new_graph(n=5, edges=[(0, 1, 2), (0, 1, 4)])

    assert list(hg_graph.iter_bits(graph.neighbors(1, 0))) == [2, 4]
    assert hg_graph.mask_of([2, 4]) == graph.neighbors(0, 1)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_induced_relabels():
    graph = hg_graph.new_graph(n=6, edges=[(1, 3, 5), (0, 1, 2)])
    sub = graph.induced(vertices=[5, 3, 1])

    assert sub.n == 3
    assert sub.edge_list == ((0, 1, 2),)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_with_edges_rejects_present_edges():
    graph = hg_graph.new_graph(n=4, edges=[(0, 1, 2)])

    assert graph.with_edges(extra=[(1, 2, 3)]).edge_count == 2

    with pytest.raises(ValueError):
        graph.with_edges(extra=[(0, 1, 2)])

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_min_vertex_cover_of_a_loose_cycle_family():
    # Two C_6 and one C_8 on 20 vertices need 2 + 2 + 2 cover vertices.
    spec = hg_family.family_from_lengths(lengths=[6, 6, 8])
    edges = []
    start = 0

    for length in spec.lengths:
        v = list(range(start, start + length))
        edges.extend((v[2*i], v[2*i + 1], v[(2*i + 2) % length]) for i in range(length // 2))
        start += length

    graph = hg_graph.new_graph(n=spec.n, edges=edges)

    assert len(hg_graph.min_vertex_cover(graph=graph)) == hg_family.cover_number(spec=spec) == 6

    with pytest.raises(ValueError):
        hg_graph.min_vertex_cover(graph=graph, limit=5)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(graph=three_graphs())
@settings(max_examples=100, deadline=None)
def test_degree_sums(graph):
    matrix = graph.codegree_matrix()

    assert sum(graph.degree(v) for v in range(graph.n)) == 3 * graph.edge_count
    assert int(np.triu(matrix, k=1).sum()) == 3 * graph.edge_count
    assert (matrix == matrix.T).all()

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(graph=three_graphs(min_n=2))
@settings(max_examples=100, deadline=None)
def test_min_codegree_matches_pairs(graph):
    expected = min(graph.codegree(u, v) for (u, v) in itertools.combinations(range(graph.n), 2))

    assert graph.min_codegree() == expected

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(graph=three_graphs(min_n=1))
@settings(max_examples=50, deadline=None)
def test_link_holds_edge_partners(graph):
    for u in range(graph.n):
        partners = set(v for edge in graph.edge_list if u in edge for v in edge if v != u)

        assert set(hg_graph.iter_bits(graph.link(u))) == partners
