"""The polar complex on ``V`` plus a barred copy of ``V``."""
from __future__ import annotations

from typing import List

from ..core.complex import SimplicialComplex
from ..core.hypergraph import Hypergraph, complement
from ..engine.chain import simplicial_betti
from ..engine.linalg import Field

BAR = "~"


def bar(v: str) -> str:
    return v[len(BAR):] if v.startswith(BAR) else BAR + v


def polar_facet(H: Hypergraph, members) -> tuple:
    return tuple(sorted([v for v in H.vertices if v in members] +
                        [BAR + v for v in H.vertices if v not in members]))


def polar_complex(H: Hypergraph) -> SimplicialComplex:
    """Closure of the facets ``e ⊔ bar(V \\ e)``, one per edge (the empty edge included)."""
    if not H.vertices:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_facets(polar_facet(H, m) for m in H.member_sets())


def polar_betti(H: Hypergraph, field: Field | str = Field.GF2) -> List[int]:
    return simplicial_betti(polar_complex(H), field)


def swap_bars(K: SimplicialComplex) -> SimplicialComplex:
    """Relabel ``v <-> ~v``; maps the polar complex of ``H`` onto that of its edge-complement."""
    return K.relabel({v: bar(v) for v in K.vertices})


def all_subsets(n: int) -> Hypergraph:
    """``2^[n]`` on vertices ``1..n``, the empty edge included."""
    verts = [str(i) for i in range(1, n + 1)]
    edges = {}
    for mask in range(2 ** n):
        members = [verts[i] for i in range(n) if mask >> i & 1]
        edges["s" + ("".join(members) or "0")] = members
    return Hypergraph.from_edges(edges, vertices=verts)


__all__ = ["polar_complex", "polar_betti", "swap_bars", "all_subsets", "complement", "bar"]
