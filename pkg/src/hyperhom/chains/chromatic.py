"""Chromatic hypergraph homology over ``k[x]/(x^2)``.

An enhanced state is an edge subset together with the set of components of
``[H:s]`` labeled ``x``.  The differential adds one edge at a time and raises
``i`` by one while keeping ``j``; it is fed to the chain machinery with the
degree reversed.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from .. import guards
from ..core.hypergraph import Hypergraph, collapse_multiedges
from ..engine.chain import ChainComplex, homology_ranks
from ..engine.linalg import Field

Component = FrozenSet[str]
State = Tuple[int, FrozenSet[Component]]  # (edge bitmask, components labeled x)


def components(H: Hypergraph, mask: int) -> List[Component]:
    """Components of ``[H:s]``: every vertex of ``H``, joined through the edges in ``s``."""
    parent = {v: v for v in H.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, (_, m) in enumerate(H.edges):
        if mask >> i & 1:
            ms = sorted(m)
            for v in ms[1:]:
                parent[find(v)] = find(ms[0])
    groups: Dict[str, set] = {}
    for v in H.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=sorted)


def enhanced_states(H: Hypergraph) -> Dict[Tuple[int, int], List[State]]:
    """Generators of ``CC_{i,j}`` keyed by ``(i, j)``."""
    out: Dict[Tuple[int, int], List[State]] = {}
    n = len(H.edges)
    for mask in range(2 ** n):
        comps = components(H, mask)
        i = bin(mask).count("1")
        for j in range(len(comps) + 1):
            for xs in combinations(comps, j):
                out.setdefault((i, j), []).append((mask, frozenset(xs)))
    return out


def _add_edge(H: Hypergraph, state: State, f: int, comps_after: List[Component]):
    """Coefficient-free image ``S_f`` of ``state`` under adding edge ``f``, or None if it vanishes."""
    mask, xs = state
    new_xs = set()
    for c in comps_after:
        merged = [x for x in xs if x <= c]
        if len(merged) > 1:
            return None  # x * x = 0
        if merged:
            new_xs.add(c)
    return (mask | 1 << f, frozenset(new_xs))


def chromatic_complexes(H: Hypergraph, field: Field | str = Field.RATIONAL) -> Dict[int, ChainComplex]:
    """Per ``j``, the cochain complex ``CC_{0,j} -> ... -> CC_{n,j}`` stored with degree ``n - i``."""
    field = Field.parse(field)
    H = collapse_multiedges(H)
    n = len(H.edges)
    guards.check("chromatic-edges", n)
    states = enhanced_states(H)
    comp_cache: Dict[int, List[Component]] = {}

    def comps(mask: int) -> List[Component]:
        if mask not in comp_cache:
            comp_cache[mask] = components(H, mask)
        return comp_cache[mask]

    js = sorted({j for _, j in states})
    out = {}
    for j in js:
        by_i = [sorted(states.get((i, j), []), key=lambda s: (s[0], sorted(sorted(c) for c in s[1])))
                for i in range(n + 1)]
        index = [{s: k for k, s in enumerate(b)} for b in by_i]
        # degree p = n - i; boundary_p maps degree p (i) to degree p-1 (i+1)
        bases, boundaries = [], []
        for p in range(n + 1):
            i = n - p
            cols = []
            for state in by_i[i]:
                entries = []
                if p > 0:
                    mask = state[0]
                    for f in range(n):
                        if mask >> f & 1:
                            continue
                        image = _add_edge(H, state, f, comps(mask | 1 << f))
                        if image is None:
                            continue
                        below = bin(mask & ((1 << f) - 1)).count("1")
                        entries.append((index[i + 1][image], -1 if below % 2 else 1))
                cols.append(field.vector(entries))
            bases.append(tuple(by_i[i]))
            boundaries.append(tuple(cols))
        out[j] = ChainComplex(field, tuple(bases), tuple(boundaries))
    return out


def chromatic_betti_table(H: Hypergraph, field: Field | str = Field.RATIONAL) -> Dict[Tuple[int, int], int]:
    """Ranks of ``CH_{i,j}`` for every grade with a nonzero chain group."""
    out = {}
    for j, C in chromatic_complexes(H, field).items():
        betti = homology_ranks(C)
        n = len(betti) - 1
        for p, b in enumerate(betti):
            if C.bases[p]:
                out[(n - p, j)] = b
    return dict(sorted(out.items()))


def chain_dimensions(H: Hypergraph) -> Dict[Tuple[int, int], int]:
    return {k: len(v) for k, v in sorted(enhanced_states(collapse_multiedges(H)).items())}
