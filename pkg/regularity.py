# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains densities of 3-partite 3-graphs, the four (half/super)regularity predicates,
and the pruning of a regular triple to a superregular one.

Only crossing edges, with one vertex in each part, count. All comparisons against `eps` and `d` are
exact.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import dataclasses
import enum
import functools
import itertools
import logging
import math

from nptyping import Int, NDArray, Shape
import numpy as np

import apportion
import claim
import hg_graph
import settings

_logger = logging.getLogger(__name__)

Rational = Union[Fraction, float, int, str]

#===================================================================================================
#===================================================================================================
class Mode(enum.Enum):
    """
    Enums for the regularity predicates.
    """
    REGULAR = "regular"
    HALF = "half"
    SUPER = "super"
    HALF_SUPER = "half-super"

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def is_half(self) -> bool:
        return self in (Mode.HALF, Mode.HALF_SUPER)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def has_degree_clause(self) -> bool:
        return self in (Mode.SUPER, Mode.HALF_SUPER)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def str_to_mode(a_string: str) -> Mode:
    """
    Convert a string to a mode.

    Raises
    ------
    KeyError
        If the string is not a mode.
    """
    for mode in Mode:
        if mode.value == a_string.lower():
            return mode

    raise KeyError(f"Invalid mode: {a_string}")

#===================================================================================================
#===================================================================================================
class VerdictStatus(enum.Enum):
    """
    Enums for the outcome of a regularity check.
    """
    HOLDS = "holds"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class TripartiteView:
    """
    Three disjoint vertex sets of a host.

    Attributes
    ----------
    host : hg_graph.ThreeGraph
        The host graph.
    parts : tuple of tuple of int
        `V_1, V_2, V_3`, each sorted and non-empty.
    """
    host: hg_graph.ThreeGraph
    parts: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __post_init__(self):
        if len(self.parts) != 3:
            raise ValueError(f"A tripartite view needs 3 parts, got {len(self.parts)}.")

        parts = tuple(tuple(sorted(part)) for part in self.parts)
        flat = [v for part in parts for v in part]

        if any(len(part) == 0 for part in parts):
            raise ValueError("A part of the view is empty.")

        if len(set(flat)) != len(flat):
            raise ValueError("The parts of the view are not disjoint.")

        if min(flat) < 0 or max(flat) >= self.host.n:
            raise ValueError(f"A part holds a vertex outside 0..{self.host.n - 1}.")

        object.__setattr__(self, "parts", parts)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def sizes(self) -> Tuple[int, int, int]:
        return tuple(len(part) for part in self.parts)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def volume(self) -> int:
        """
        Get `|V_1||V_2||V_3|`.
        """
        return math.prod(self.sizes)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @functools.cached_property
    def tensor(self) -> NDArray[Shape["*, *, *"], Int]:
        """
        Get the 0/1 tensor `T[a, b, c]` of crossing edges, indexed by positions within the parts.
        """
        (v1, v2, v3) = self.parts
        pairs = self.host.pair_index
        result = np.zeros(shape=self.sizes, dtype=np.int64)

        for (a, x) in enumerate(v1):
            for (b, y) in enumerate(v2):
                mask = pairs[x][y]

                if mask:
                    result[a, b, :] = [(mask >> z) & 1 for z in v3]

        return result

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    @property
    def edge_count(self) -> int:
        return int(self.tensor.sum())

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def degrees(self, index: int) -> NDArray[Shape["*"], Int]:
        """
        Get the crossing degrees of the vertices of part `index`, in the part's order.
        """
        axes = tuple(axis for axis in range(3) if axis != index)

        return self.tensor.sum(axis=axes)

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def sub_view(self, parts: Sequence[Sequence[int]]) -> "TripartiteView":
        return TripartiteView(host=self.host, parts=tuple(tuple(part) for part in parts))

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class Witness:
    """
    A counterexample to a regularity predicate.

    Attributes
    ----------
    kind : str
        `density` (the whole triple is too sparse), `degree` (a vertex has too small a degree) or
        `sub-triple`.
    parts : optional of tuple of tuple of int
        The offending sub-triple.
    vertex : optional of int
        The offending vertex.
    value : Fraction
        The offending density, or degree.
    """
    kind: str
    value: Fraction
    parts: Optional[Tuple[Tuple[int, ...], ...]] = None
    vertex: Optional[int] = None

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        result = {"kind": self.kind, "value": str(self.value)}

        if self.parts is not None:
            result["parts"] = [list(part) for part in self.parts]

        if self.vertex is not None:
            result["vertex"] = self.vertex

        return result

#===================================================================================================
#===================================================================================================
@dataclasses.dataclass(frozen=True)
class Verdict:
    """
    The outcome of `check_regular`.

    Attributes
    ----------
    status : VerdictStatus
        `HOLDS` only after an exhaustive search.
    exhaustive : bool
        Whether every qualifying sub-triple was examined.
    witness : optional of Witness
        The counterexample, when violated.
    """
    status: VerdictStatus
    exhaustive: bool
    witness: Optional[Witness] = None

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def __bool__(self) -> bool:
        return self.status is VerdictStatus.HOLDS

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "exhaustive": self.exhaustive,
            "witness": None if self.witness is None else self.witness.to_dict()
        }

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def density(view: TripartiteView) -> Fraction:
    """
    Get `e / (|V_1||V_2||V_3|)` over crossing edges, exactly.
    """
    return Fraction(view.edge_count, view.volume)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def min_sub_sizes(view: TripartiteView, eps: Fraction) -> Tuple[int, int, int]:
    """
    Get the smallest admissible sub-part sizes, `ceil(eps * |V_i|)`.
    """
    return tuple(max(1, math.ceil(eps * size)) for size in view.sizes)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _check_parameters(eps: Rational, d: Rational) -> Tuple[Fraction, Fraction]:
    eps = apportion.to_fraction(value=eps)
    d = apportion.to_fraction(value=d)

    if not 0 < eps < 1:
        raise ValueError(f"eps must lie strictly between 0 and 1, got {eps}.")

    if not 0 <= d <= 1:
        raise ValueError(f"d must lie in [0, 1], got {d}.")

    return (eps, d)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _degree_witness(view: TripartiteView, d: Fraction) -> Optional[Witness]:
    """
    Find the first vertex with crossing degree below `d |V_j||V_h|`.
    """
    for index in range(3):
        others = view.volume // view.sizes[index]
        degrees = view.degrees(index=index)

        for (position, vertex) in enumerate(view.parts[index]):
            if int(degrees[position]) < d * others:
                return Witness(kind="degree", value=Fraction(int(degrees[position])), vertex=vertex)

    return None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _subset_masks(size: int, smallest: int) -> NDArray[Shape["*, *"], Int]:
    """
    Get the 0/1 indicator rows of every subset of `range(size)` with at least `smallest` members.
    """
    rows = [
        [(mask >> bit) & 1 for bit in range(size)]
    for mask in range(1, 1 << size) if mask.bit_count() >= smallest]

    return np.array(rows, dtype=np.int64).reshape(-1, size)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _exhaustive_witness(
    view: TripartiteView, eps: Fraction, d: Fraction, mode: Mode, whole: Fraction
) -> Optional[Witness]:
    """
    Examine every qualifying sub-triple.

    For each pair of sub-parts `(S_1, S_2)` the edge counts into `V_3` are sorted, so for each size
    of `S_3` the sparsest and densest choices are prefix sums of the sorted counts. Only those two
    need comparing.
    """
    (m1, m2, m3) = min_sub_sizes(view=view, eps=eps)
    (n1, n2, n3) = view.sizes
    rows1 = _subset_masks(size=n1, smallest=m1)
    rows2 = _subset_masks(size=n2, smallest=m2)
    counts = np.einsum("ia,jb,abz->ijz", rows1, rows2, view.tensor)

    order = np.argsort(counts, axis=2, kind="stable")
    ascending = np.take_along_axis(counts, order, axis=2)
    low = np.cumsum(ascending, axis=2)
    high = np.cumsum(ascending[:, :, ::-1], axis=2)

    s3 = np.arange(1, n3 + 1, dtype=np.int64)
    volume = rows1.sum(axis=1)[:, None, None] * rows2.sum(axis=1)[None, :, None] * s3[None, None, :]
    admissible = s3[None, None, :] >= m3

    bound = int(volume.max()) * max(
        d.numerator, d.denominator, eps.numerator * whole.denominator,
        eps.denominator * max(whole.numerator, whole.denominator)
    )
    dtype = np.int64 if bound < 2**62 else object

    (low, high, volume) = (low.astype(dtype), high.astype(dtype), volume.astype(dtype))

    if mode.is_half:
        bad_low = low * d.denominator < d.numerator * volume
        bad_high = np.zeros_like(bad_low, dtype=bool)
    else:
        # |e/P - D| < eps  <=>  |e * den - num * P| * eps_den < eps_num * den * P
        scaled = whole.numerator * volume
        limit = eps.numerator * whole.denominator * volume

        bad_low = (scaled - low * whole.denominator) * eps.denominator >= limit
        bad_high = (high * whole.denominator - scaled) * eps.denominator >= limit

    for (bad, reverse, totals) in ((bad_low, False, low), (bad_high, True, high)):
        hits = np.argwhere(np.asarray(bad & admissible, dtype=bool))

        if len(hits) == 0:
            continue

        (i, j, s) = (int(x) for x in hits[0])
        picked = order[i, j, ::-1] if reverse else order[i, j, :]
        parts = (
            tuple(view.parts[0][a] for a in range(n1) if rows1[i, a]),
            tuple(view.parts[1][b] for b in range(n2) if rows2[j, b]),
            tuple(sorted(view.parts[2][int(z)] for z in picked[:s + 1]))
        )

        return Witness(
            kind="sub-triple", value=Fraction(int(totals[i, j, s]), int(volume[i, j, s])),
            parts=parts
        )

    return None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _violates(sub: Fraction, eps: Fraction, d: Fraction, mode: Mode, whole: Fraction) -> bool:
    if mode.is_half:
        return sub < d

    return abs(sub - whole) >= eps

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _sampled_witness(
    view: TripartiteView, eps: Fraction, d: Fraction, mode: Mode, whole: Fraction, samples: int,
    seed: int
) -> Optional[Witness]:
    """
    Examine random qualifying sub-triples: a uniform size for each part, then a uniform subset.
    """
    rng = np.random.default_rng(seed=seed)
    minimums = min_sub_sizes(view=view, eps=eps)

    for _ in range(samples):
        indices = []

        for (size, smallest) in zip(view.sizes, minimums):
            count = int(rng.integers(low=smallest, high=size + 1))
            indices.append(np.sort(rng.choice(size, size=count, replace=False)))

        block = view.tensor[np.ix_(*indices)]
        sub = Fraction(int(block.sum()), block.size)

        if _violates(sub=sub, eps=eps, d=d, mode=mode, whole=whole):
            parts = tuple(
                tuple(view.parts[p][int(x)] for x in positions)
            for (p, positions) in enumerate(indices))

            return Witness(kind="sub-triple", value=sub, parts=parts)

    return None

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def check_regular(
    view: TripartiteView, eps: Rational, d: Rational, mode: Mode, budget: Optional[int] = None,
    samples: Optional[int] = None, seed: Optional[int] = None
) -> Verdict:
    """
    Check whether the view is `(eps, d)`-regular, half-regular, superregular or
    half-superregular.

    Sub-triples `(V_1', V_2', V_3')` qualify when `|V_i'| >= ceil(eps |V_i|)` for each part. In the
    regular modes every qualifying sub-triple must have density within `eps` of the whole (strictly)
    and the whole must have density at least `d`. In the half modes every qualifying sub-triple must
    have density at least `d`. The super modes add the degree clause
    `d(x) >= d |V_1||V_2||V_3| / |V_i|` for every vertex `x` of every part `V_i`.

    Parameters
    ----------
    view : TripartiteView
        The triple.
    eps : Fraction, float or str
        The slack, `0 < eps < 1`.
    d : Fraction, float or str
        The density, `0 <= d <= 1`.
    mode : Mode
        The predicate.
    budget : optional of int, default=None
        The search is exhaustive when `prod(2^|V_i|)` is at most this. The default comes from
        `settings.parameters.exhaustive_budget`.
    samples : optional of int, default=None
        The number of random sub-triples to examine otherwise. The default comes from
        `settings.parameters.sample_count`.
    seed : optional of int, default=None
        The seed for sampling. The default comes from `settings.parameters.seed`.

    Returns
    -------
    Verdict
        `HOLDS` after an exhaustive search without counterexample, `VIOLATED` with a witness, or
        `INCONCLUSIVE` when sampling found none.
    """
    (eps, d) = _check_parameters(eps=eps, d=d)
    budget = settings.parameters.exhaustive_budget if budget is None else budget
    samples = settings.parameters.sample_count if samples is None else samples
    seed = settings.parameters.seed if seed is None else seed

    whole = density(view=view)
    exhaustive = 2**sum(view.sizes) <= budget

    if not mode.is_half and whole < d:
        return Verdict(
            status=VerdictStatus.VIOLATED, exhaustive=exhaustive,
            witness=Witness(kind="density", value=whole, parts=view.parts)
        )

    if mode.has_degree_clause:
        witness = _degree_witness(view=view, d=d)

        if witness is not None:
            return Verdict(status=VerdictStatus.VIOLATED, exhaustive=exhaustive, witness=witness)

    if exhaustive:
        witness = _exhaustive_witness(view=view, eps=eps, d=d, mode=mode, whole=whole)
    else:
        _logger.info("Sampling %d sub-triples of a view with parts %s.", samples, view.sizes)
        witness = _sampled_witness(
            view=view, eps=eps, d=d, mode=mode, whole=whole, samples=samples, seed=seed
        )

    if witness is not None:
        return Verdict(status=VerdictStatus.VIOLATED, exhaustive=exhaustive, witness=witness)

    status = VerdictStatus.HOLDS if exhaustive else VerdictStatus.INCONCLUSIVE

    return Verdict(status=status, exhaustive=exhaustive)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def naive_regularity_oracle(view: TripartiteView, eps: Rational, d: Rational, mode: Mode) -> bool:
    """
    Decide a regularity predicate by unfolding its definition over every sub-triple, counting
    edges with `has_edge`. Only usable for tiny parts.
    """
    (eps, d) = _check_parameters(eps=eps, d=d)
    host = view.host
    volume = view.volume

    def count(parts: Sequence[Sequence[int]]) -> int:
        return sum(1 for triple in itertools.product(*parts) if host.has_edge(*triple))

    whole = Fraction(count(view.parts), volume)

    if not mode.is_half and whole < d:
        return False

    if mode.has_degree_clause:
        for (index, part) in enumerate(view.parts):
            for x in part:
                parts = [p if i != index else (x,) for (i, p) in enumerate(view.parts)]

                if count(parts) * len(part) < d * volume:
                    return False

    choices = []

    for part in view.parts:
        smallest = math.ceil(eps * len(part))
        choices.append([
            subset
        for size in range(max(1, smallest), len(part) + 1)
        for subset in itertools.combinations(part, size)])

    for parts in itertools.product(*choices):
        sub = Fraction(count(parts), math.prod(len(p) for p in parts))

        if _violates(sub=sub, eps=eps, d=d, mode=mode, whole=whole):
            return False

    return True

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def low_degree_vertices(view: TripartiteView, eps: Rational, d: Rational) -> List[Tuple[int, ...]]:
    """
    Get `V_i'' = {v in V_i : d(v) < (d - 3 eps) |V_j||V_h|}` for each part.
    """
    (eps, d) = _check_parameters(eps=eps, d=d)
    result = []

    for index in range(3):
        others = view.volume // view.sizes[index]
        degrees = view.degrees(index=index)
        result.append(tuple(
            v
        for (position, v) in enumerate(view.parts[index])
        if int(degrees[position]) < (d - 3 * eps) * others))

    return result

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def prune_to_superregular(view: TripartiteView, eps: Rational, d: Rational) -> TripartiteView:
    """
    Prune a regular (or half-regular) triple to a superregular one.

    Each part loses its low-degree vertices `V_i''`, then keeps the `floor((1 - eps)|V_i|)`
    survivors of largest degree, ties going to the lower vertex. The result is meant to be
    `(2 eps, d/2)`-superregular (or half-superregular).

    Parameters
    ----------
    view : TripartiteView
        An `(eps, d)`-regular or half-regular triple.
    eps : Fraction, float or str
        The slack.
    d : Fraction, float or str
        The density.

    Returns
    -------
    TripartiteView
        The pruned triple.

    Raises
    ------
    claim.ClaimViolation
        If some `|V_i''| >= eps |V_i|`, which means the input was not regular.
    ValueError
        If a pruned part would be empty.
    """
    (eps, d) = _check_parameters(eps=eps, d=d)
    low = low_degree_vertices(view=view, eps=eps, d=d)
    parts = []

    for index in range(3):
        size = view.sizes[index]
        keep = math.floor((1 - eps) * size)

        claim.check(
            len(low[index]) < eps * size,
            f"Part {index} has {len(low[index])} low-degree vertices, not fewer than "
            f"{float(eps * size):.3f}."
        )

        if keep == 0:
            raise ValueError(f"Part {index} of size {size} would be pruned to nothing.")

        degrees = view.degrees(index=index)
        removed = set(low[index])
        survivors = sorted(
            ((int(degrees[position]), v)
            for (position, v) in enumerate(view.parts[index]) if v not in removed),
            key=lambda item: (-item[0], item[1])
        )

        claim.check(
            len(survivors) >= keep,
            f"Part {index} has {len(survivors)} survivors, fewer than {keep}."
        )

        parts.append(tuple(sorted(v for (_, v) in survivors[:keep])))

    _logger.info(
        "Pruned parts %s to %s (low-degree: %s).", view.sizes, tuple(len(p) for p in parts),
        tuple(len(x) for x in low)
    )

    return view.sub_view(parts=parts)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _consecutive_parts(sizes: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    bounds = list(itertools.accumulate(sizes, initial=0))

    return tuple(tuple(range(bounds[i], bounds[i + 1])) for i in range(len(sizes)))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def complete_view(sizes: Sequence[int]) -> TripartiteView:
    """
    Make a view on `sum(sizes)` vertices, parts consecutive, with every crossing edge.
    """
    parts = _consecutive_parts(sizes=sizes)
    edges = list(itertools.product(*parts))

    return TripartiteView(host=hg_graph.new_graph(n=sum(sizes), edges=edges), parts=parts)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def random_view(sizes: Sequence[int], p: float, seed: int) -> TripartiteView:
    """
    Make a view on `sum(sizes)` vertices, parts consecutive, keeping each crossing edge with
    probability `p`.

    Parameters
    ----------
    sizes : list of int
        The three part sizes.
    p : float
        The edge probability.
    seed : int
        The seed of the random number generator.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"The edge probability must lie in [0, 1], got {p}.")

    parts = _consecutive_parts(sizes=sizes)
    rng = np.random.default_rng(seed=seed)
    keep = rng.random(size=tuple(sizes)) < p
    edges = [
        (parts[0][a], parts[1][b], parts[2][c])
    for (a, b, c) in itertools.product(*(range(s) for s in sizes)) if keep[a, b, c]]

    return TripartiteView(host=hg_graph.new_graph(n=sum(sizes), edges=edges), parts=parts)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def parse_parts(a_string: str) -> List[Tuple[int, ...]]:
    """
    Parse parts written as `0-5;6-11;12-17`, where each part is a `;`-separated item holding
    `,`-separated vertices or inclusive `a-b` ranges.

    Raises
    ------
    ValueError
        If an item cannot be parsed.
    """
    parts = []

    for item in a_string.split(";"):
        vertices = []

        for token in item.split(","):
            token = token.strip()

            if not token:
                continue

            if "-" in token:
                (first, last) = token.split("-", maxsplit=1)
                vertices.extend(range(int(first), int(last) + 1))
            else:
                vertices.append(int(token))

        parts.append(tuple(vertices))

    return parts
