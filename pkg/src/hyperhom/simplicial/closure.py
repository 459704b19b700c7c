"""Closure homology: homology of the upper or lower closure."""
from __future__ import annotations

from typing import List

from ..core.hypergraph import Hypergraph, lower_closure, upper_closure
from ..engine.chain import simplicial_betti
from ..engine.linalg import Field


def closure_betti(H: Hypergraph, which: str = "upper", field: Field | str = Field.GF2,
                  reduced: bool = False) -> List[int]:
    if which == "upper":
        K = upper_closure(H)
    elif which == "lower":
        K = lower_closure(H)
    else:
        raise ValueError(f"which must be 'upper' or 'lower', not {which!r}")
    return simplicial_betti(K, field, reduced=reduced)
