"""Bigraded magnitude homology of a hypergraph over the intercrossing distance.

Lengths live in ``Z[1/2]``; internally every length is doubled so the
arithmetic is on ints, with ``None`` for infinity.  Public results use
``Fraction`` and ``math.inf``.
"""
from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .. import guards
from ..core.hypergraph import Hypergraph
from ..engine.chain import ChainComplex, homology_ranks
from ..engine.linalg import Field

Doubled = Optional[int]


def step_length(e: frozenset, f: frozenset) -> Doubled:
    """Doubled single-step length: ``None`` disjoint, 0 equal, 1 strict containment, 2 otherwise."""
    if not e & f:
        return None
    if e == f:
        return 0
    if e < f or f < e:
        return 1
    return 2


def doubled_distances(H: Hypergraph) -> List[List[Doubled]]:
    sets = H.member_sets()
    n = len(sets)
    adj = [[(j, step_length(sets[i], sets[j])) for j in range(n) if j != i] for i in range(n)]
    out: List[List[Doubled]] = []
    for src in range(n):
        dist: List[Doubled] = [None] * n
        if not sets[src]:
            dist[src] = 0  # an empty edge meets nothing, itself included
            out.append(dist)
            continue
        dist[src] = 0
        heap = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w in adj[u]:
                if w is None:
                    continue
                nd = d + w
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        out.append(dist)
    return out


def _public(d: Doubled):
    return math.inf if d is None else Fraction(d, 2)


def intercrossing_distances(H: Hypergraph) -> List[List[object]]:
    """|E| x |E| matrix of ``Fraction`` distances, ``math.inf`` between unconnected edges."""
    return [[_public(d) for d in row] for row in doubled_distances(H)]


def tuple_length(t: Sequence[int], dist: List[List[Doubled]]) -> Doubled:
    total = 0
    for a, b in zip(t, t[1:]):
        d = dist[a][b]
        if d is None:
            return None
        total += d
    return total


def magnitude_generators(H: Hypergraph, k_max: int, l_max2: int,
                         allow_repeats: bool = False) -> Dict[Tuple[int, int], List[Tuple[int, ...]]]:
    """Tuples of edge indices grouped by ``(k, doubled length)`` for ``k <= k_max``, ``l <= l_max``.

    Consecutive entries must intersect (so the empty edge only appears as a
    0-tuple), and must differ unless ``allow_repeats``.  Lengths still use the
    shortest-path distance ``d``.
    """
    dist = doubled_distances(H)
    sets = H.member_sets()
    n = len(dist)
    out: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    budget = guards.limit("magnitude-tuples")
    count = 0
    stack = [((i,), 0) for i in range(n - 1, -1, -1)]
    while stack:
        t, L = stack.pop()
        out.setdefault((len(t) - 1, L), []).append(t)
        count += 1
        if count > budget:
            raise guards.ResourceGuardError("magnitude-tuples", count, budget)
        if len(t) - 1 == k_max:
            continue
        last = t[-1]
        for j in range(n - 1, -1, -1):
            d = dist[last][j]
            if not sets[last] & sets[j] or (d == 0 and not allow_repeats) or L + d > l_max2:
                continue
            stack.append((t + (j,), L + d))
    for key in out:
        out[key].sort()
    return out


def magnitude_complexes(H: Hypergraph, k_max: int, l_max2: int, field: Field | str = Field.GF2,
                        allow_repeats: bool = False) -> Dict[int, ChainComplex]:
    """One chain complex ``MC_{*,l}`` per doubled length ``l``, degrees ``0..k_max``."""
    field = Field.parse(field)
    dist = doubled_distances(H)
    gens = magnitude_generators(H, k_max, l_max2, allow_repeats)
    out = {}
    for l2 in range(l_max2 + 1):
        bases = [gens.get((k, l2), []) for k in range(k_max + 1)]
        index = [{t: i for i, t in enumerate(b)} for b in bases]
        boundaries = []
        for k, basis in enumerate(bases):
            cols = []
            for t in basis:
                entries = []
                if k > 0:
                    for i in range(k + 1):
                        face = t[:i] + t[i + 1:]
                        # a length-preserving face can still pair disjoint edges
                        if face in index[k - 1]:
                            entries.append((index[k - 1][face], -1 if i % 2 else 1))
                cols.append(field.vector(entries))
            boundaries.append(tuple(cols))
        out[l2] = ChainComplex(field, tuple(tuple(b) for b in bases), tuple(boundaries))
    return out


def magnitude_betti_table(H: Hypergraph, k_max: int = 2, l_max=2, field: Field | str = Field.GF2,
                          allow_repeats: bool = False) -> Dict[Tuple[int, Fraction], int]:
    """Ranks of ``MH_{k,l}`` for ``0 <= k <= k_max`` and ``l`` in ``0, 1/2, ..., l_max``."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    l = Fraction(l_max)
    if l < 0 or (2 * l).denominator != 1:
        raise ValueError("l_max must be a nonnegative multiple of 1/2")
    l_max2 = int(2 * l)
    table = {}
    for l2, C in magnitude_complexes(H, k_max + 1, l_max2, field, allow_repeats).items():
        betti = homology_ranks(C)
        for k in range(k_max + 1):
            table[(k, Fraction(l2, 2))] = betti[k]
    return table
