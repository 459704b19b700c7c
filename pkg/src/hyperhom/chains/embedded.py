"""Embedded homology: the infimum chain complex of the edge spans inside the closure."""
from __future__ import annotations

from typing import List

from ..core.hypergraph import Hypergraph, collapse_multiedges, upper_closure
from ..engine.chain import ChainComplex, build_chain_complex, homology_ranks, infimum_subcomplex
from ..engine.linalg import Field


def embedded_complex(H: Hypergraph, field: Field | str = Field.GF2) -> ChainComplex:
    Hc = collapse_multiedges(H)
    K = upper_closure(Hc)
    C = build_chain_complex(K, field)
    D = [[] for _ in range(K.dimension + 1)]
    for m in Hc.member_sets():
        if m:
            D[len(m) - 1].append(tuple(sorted(m)))
    return infimum_subcomplex(C, D)


def embedded_betti(H: Hypergraph, field: Field | str = Field.GF2) -> List[int]:
    return homology_ranks(embedded_complex(H, field))
