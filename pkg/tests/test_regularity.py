# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for the regularity predicates and pruning.
"""

from fractions import Fraction
import itertools

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

import claim
import hg_graph
import regularity

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _complete_without(sizes, isolated):
    """
    Make a complete view whose `isolated` vertices lie in no edge.
    """
    view = regularity.complete_view(sizes=sizes)
    edges = [e for e in view.host.edge_list if not set(e) & set(isolated)]

    return regularity.TripartiteView(
        host=hg_graph.new_graph(n=view.host.n, edges=edges), parts=view.parts
    )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_complete_view_holds_everywhere():
    view = regularity.complete_view(sizes=(2, 3, 4))

    assert regularity.density(view=view) == 1
    assert view.edge_count == 24

    for mode in regularity.Mode:
        verdict = regularity.check_regular(view=view, eps=0.5, d=0.5, mode=mode)

        assert verdict.status is regularity.VerdictStatus.HOLDS
        assert verdict.exhaustive
        assert bool(verdict)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_empty_view():
    view = regularity.TripartiteView(
        host=hg_graph.new_graph(n=6, edges=[]), parts=((0, 1), (2, 3), (4, 5))
    )

    assert regularity.density(view=view) == 0

    verdict = regularity.check_regular(view=view, eps="1/2", d="1/10", mode=regularity.Mode.REGULAR)

    assert verdict.status is regularity.VerdictStatus.VIOLATED
    assert verdict.witness.kind == "density"
    assert verdict.to_dict()["witness"]["value"] == "0"
    assert regularity.check_regular(view=view, eps=0.5, d=0, mode=regularity.Mode.REGULAR)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_isolated_vertex_fails_the_degree_clause():
    view = _complete_without(sizes=(3, 3, 3), isolated=[0])

    assert regularity.density(view=view) == Fraction(2, 3)

    verdict = regularity.check_regular(view=view, eps=0.5, d=0.5, mode=regularity.Mode.SUPER)

    assert verdict.status is regularity.VerdictStatus.VIOLATED
    assert (verdict.witness.kind, verdict.witness.vertex, verdict.witness.value) == ("degree", 0, 0)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_sparse_sub_triple_is_reported():
    view = _complete_without(sizes=(4, 4, 4), isolated=[0, 1])
    verdict = regularity.check_regular(view=view, eps=0.5, d=0.5, mode=regularity.Mode.HALF)

    assert verdict.status is regularity.VerdictStatus.VIOLATED
    assert verdict.witness.kind == "sub-triple"
    assert verdict.witness.value < Fraction(1, 2)
    assert all(len(part) >= 2 for part in verdict.witness.parts)

    (s1, s2, s3) = verdict.witness.parts
    edges = sum(1 for triple in itertools.product(s1, s2, s3) if view.host.has_edge(*triple))

    assert Fraction(edges, len(s1) * len(s2) * len(s3)) == verdict.witness.value

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@st.composite
def _views(draw, largest=4):
    sizes = tuple(draw(st.integers(min_value=1, max_value=largest)) for _ in range(3))
    p = draw(st.sampled_from([0.3, 0.6, 0.9, 1.0]))
    seed = draw(st.integers(min_value=0, max_value=10**6))

    return regularity.random_view(sizes=sizes, p=p, seed=seed)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@given(
    view=_views(), mode=st.sampled_from(list(regularity.Mode)),
    eps=st.sampled_from(["1/4", "1/3", "1/2", "2/3"]), d=st.sampled_from(["0", "1/4", "1/2"])
)
@settings(max_examples=300, deadline=None)
def test_agrees_with_the_oracle(view, mode, eps, d):
    verdict = regularity.check_regular(view=view, eps=eps, d=d, mode=mode)

    assert verdict.exhaustive
    assert bool(verdict) == regularity.naive_regularity_oracle(view=view, eps=eps, d=d, mode=mode)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.slow
@pytest.mark.parametrize("mode", list(regularity.Mode))
@given(view=_views(largest=6), eps=st.sampled_from(["1/2", "2/3"]),
       d=st.sampled_from(["1/4", "1/2"]))
@settings(max_examples=200, deadline=None)
def test_agrees_with_the_oracle_on_parts_up_to_six(mode, view, eps, d):
    verdict = regularity.check_regular(view=view, eps=eps, d=d, mode=mode)

    assert verdict.exhaustive
    assert bool(verdict) == regularity.naive_regularity_oracle(view=view, eps=eps, d=d, mode=mode)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_sampling_without_witness_is_inconclusive():
    view = regularity.complete_view(sizes=(4, 4, 4))
    verdict = regularity.check_regular(
        view=view, eps=0.5, d=0.5, mode=regularity.Mode.REGULAR, budget=1, samples=50, seed=1
    )

    assert verdict.status is regularity.VerdictStatus.INCONCLUSIVE
    assert not verdict.exhaustive
    assert not verdict

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_sampling_finds_a_gross_violation():
    view = _complete_without(sizes=(6, 6, 6), isolated=[0, 1, 2, 3])
    verdict = regularity.check_regular(
        view=view, eps="1/6", d="1/2", mode=regularity.Mode.HALF, budget=1, samples=2000, seed=5
    )

    assert verdict.status is regularity.VerdictStatus.VIOLATED
    assert verdict.witness.value < Fraction(1, 2)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("eps, d", [(0, 0.5), (1, 0.5), (0.5, -0.1), (0.5, 1.5)])
def test_invalid_parameters(eps, d):
    view = regularity.complete_view(sizes=(1, 1, 1))

    with pytest.raises(ValueError):
        regularity.check_regular(view=view, eps=eps, d=d, mode=regularity.Mode.HALF)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_str_to_mode():
    assert regularity.str_to_mode(a_string="HALF-SUPER") is regularity.Mode.HALF_SUPER
    assert regularity.Mode.HALF_SUPER.is_half
    assert regularity.Mode.SUPER.has_degree_clause
    assert not regularity.Mode.HALF.has_degree_clause

    with pytest.raises(KeyError):
        regularity.str_to_mode(a_string="bogus")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_parse_parts():
    assert regularity.parse_parts(a_string="0-2;3,4;5-5") == [(0, 1, 2), (3, 4), (5,)]

    with pytest.raises(ValueError):
        regularity.parse_parts(a_string="0-x;1;2")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("parts", [
    ((0, 1), (2, 3)),
    ((0, 1), (), (2, 3)),
    ((0, 1), (1, 2), (3, 4)),
    ((0,), (1,), (6,))
])
def test_invalid_views(parts):
    with pytest.raises(ValueError):
        regularity.TripartiteView(host=hg_graph.new_graph(n=6, edges=[]), parts=parts)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_prune_complete_view_trims_the_slack():
    view = regularity.complete_view(sizes=(10, 10, 10))
    pruned = regularity.prune_to_superregular(view=view, eps=0.2, d=0.5)

    assert pruned.parts == (tuple(range(8)), tuple(range(10, 18)), tuple(range(20, 28)))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_prune_drops_isolated_vertices():
    view = _complete_without(sizes=(20, 20, 20), isolated=[0, 20, 40])

    assert regularity.low_degree_vertices(view=view, eps=0.1, d=0.5) == [(0,), (20,), (40,)]

    pruned = regularity.prune_to_superregular(view=view, eps=0.1, d=0.5)

    assert pruned.sizes == (18, 18, 18)
    assert not {0, 20, 40} & set(v for part in pruned.parts for v in part)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_prune_rejects_too_many_low_vertices():
    view = _complete_without(sizes=(10, 10, 10), isolated=[0, 1])

    with pytest.raises(claim.ClaimViolation):
        regularity.prune_to_superregular(view=view, eps=0.1, d=0.5)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_prune_rejects_an_empty_part():
    with pytest.raises(ValueError):
        regularity.prune_to_superregular(
            view=regularity.complete_view(sizes=(1, 4, 4)), eps=0.5, d=0.5
        )

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.slow
@pytest.mark.parametrize("seed", range(3))
def test_pruned_random_view_is_half_superregular(seed):
    view = regularity.random_view(sizes=(8, 8, 8), p=0.95, seed=seed)

    assert regularity.check_regular(view=view, eps=0.3, d=0.5, mode=regularity.Mode.HALF)

    pruned = regularity.prune_to_superregular(view=view, eps=0.3, d=0.5)

    assert pruned.sizes == (5, 5, 5)
    assert regularity.check_regular(
        view=pruned, eps=0.6, d=0.25, mode=regularity.Mode.HALF_SUPER
    )
