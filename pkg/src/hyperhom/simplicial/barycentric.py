"""Barycentric subdivisions: the restricted order complex and the relative theory.

``restricted_barycentric_complex`` works directly on the edge-containment
poset.  ``barycentric_subdivision`` and ``missing_subcomplex`` build the full
subdivision of the closure, so they are exponential in the largest edge and
guarded (``barycentric-edge-size``).
"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Sequence, Set, Tuple

from .. import guards
from ..core.complex import Simplex, SimplicialComplex
from ..core.hypergraph import Hypergraph, collapse_multiedges, upper_closure
from ..engine.chain import relative_betti, simplicial_betti
from ..engine.linalg import Field


def order_complex(elements: Sequence[Hashable], less: Callable[[Hashable, Hashable], bool]) -> SimplicialComplex:
    """Simplices are the chains ``x_0 < x_1 < ... < x_k`` of a strict partial order."""
    up: Dict[Hashable, List[Hashable]] = {x: [y for y in elements if less(x, y)] for x in elements}
    out: Set[Simplex] = set()

    def grow(chain: Tuple[Hashable, ...]) -> None:
        out.add(tuple(sorted(chain)))
        for y in up[chain[-1]]:
            grow(chain + (y,))

    for x in elements:
        grow((x,))
    return SimplicialComplex(frozenset(out))


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Vertices are the simplices of ``K``; simplices are strict containment chains."""
    return order_complex(K.sorted_simplices(), lambda s, t: len(s) < len(t) and set(s) <= set(t))


def containment_pairs(H: Hypergraph) -> List[Tuple[str, str]]:
    """Strict containments ``(e, f)`` with ``member(e) < member(f)``."""
    return [(a, b) for a, ma in H.edges for b, mb in H.edges if ma < mb]


def restricted_barycentric_complex(H: Hypergraph) -> SimplicialComplex:
    """Order complex of the edge-containment poset, with multi-edges collapsed first.

    Empty edges are dropped: the empty set is not a simplex of the closure.
    """
    Hc = collapse_multiedges(H)
    sets = {lab: m for lab, m in Hc.edges if m}
    return order_complex(sorted(sets), lambda e, f: sets[e] < sets[f])


def rbs_betti(H: Hypergraph, field: Field | str = Field.GF2) -> List[int]:
    return simplicial_betti(restricted_barycentric_complex(H), field)


def fence_components(H: Hypergraph) -> List[List[str]]:
    """Components of the comparability graph on nonempty edges (multi-edges collapsed)."""
    Hc = collapse_multiedges(H)
    edges = [(lab, m) for lab, m in Hc.edges if m]
    parent = {lab: lab for lab, _ in edges}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, ma) in enumerate(edges):
        for b, mb in edges[i + 1:]:
            if ma <= mb or mb <= ma:
                parent[find(a)] = find(b)
    groups: Dict[str, List[str]] = {}
    for lab, _ in edges:
        groups.setdefault(find(lab), []).append(lab)
    return list(groups.values())


def _guarded_closure(H: Hypergraph) -> SimplicialComplex:
    biggest = max((len(m) for m in H.member_sets()), default=0)
    guards.check("barycentric-edge-size", biggest)
    return upper_closure(H)


def closure_subdivision(H: Hypergraph) -> SimplicialComplex:
    """``B(Δ(H))`` with subdivision vertices labeled by sorted member tuples."""
    return barycentric_subdivision(_guarded_closure(H))


def missing_subcomplex(H: Hypergraph) -> SimplicialComplex:
    """Induced subcomplex of ``B(Δ(H))`` on the simplices that are not edges."""
    present = {tuple(sorted(m)) for m in H.member_sets() if m}
    K = _guarded_closure(H)
    return barycentric_subdivision(K).induced(s for s in K.simplices if s not in present)


def relbs_betti(H: Hypergraph, field: Field | str = Field.GF2) -> List[int]:
    """Homology of ``B(Δ(H))`` relative to the missing subcomplex, degrees ``0..dim``."""
    if not any(H.member_sets()):
        raise ValueError("relative barycentric homology needs at least one nonempty edge")
    B = closure_subdivision(H)
    present = {tuple(sorted(m)) for m in H.member_sets() if m}
    M = B.induced(v for v in B.vertices if v not in present)
    return relative_betti(B, M, field)


def induced_on_edges(H: Hypergraph) -> SimplicialComplex:
    """Brute-force form of the restricted complex: ``B(Δ(H))`` induced on edge sets, relabeled by edge."""
    Hc = collapse_multiedges(H)
    by_set = {tuple(sorted(m)): lab for lab, m in Hc.edges if m}
    B = closure_subdivision(Hc)
    return B.induced(by_set).relabel(by_set)
