"""Weighted nerve, its descending-weight persistence, and reconstruction by Möbius inversion."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Mapping

from ..core.complex import Simplex, SimplicialComplex
from ..core.hypergraph import Hypergraph, iter_nerve
from ..engine.linalg import Field
from ..engine.persistence import Barcode, FilteredComplex, persistent_homology


class NotAWeightedNerveError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedSimplicialComplex:
    complex: SimplicialComplex
    weights: Mapping[Simplex, int]

    def __post_init__(self) -> None:
        for s in self.complex.simplices:
            w = self.weights.get(s)
            if w is None:
                raise ValueError(f"simplex {s!r} has no weight")
            if w < 0:
                raise ValueError(f"simplex {s!r} has negative weight {w}")
            for j in range(len(s) if len(s) > 1 else 0):
                if self.weights[s[:j] + s[j + 1:]] < w:
                    raise ValueError(f"weights are not antitone at {s!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedSimplicialComplex):
            return NotImplemented
        return (self.complex.simplices == other.complex.simplices and
                all(self.weights[s] == other.weights[s] for s in self.complex.simplices))

    def __hash__(self) -> int:
        return hash(self.complex.simplices)

    def threshold(self, a: int) -> SimplicialComplex:
        return SimplicialComplex(frozenset(s for s in self.complex.simplices if self.weights[s] >= a))


def weighted_nerve(H: Hypergraph) -> WeightedSimplicialComplex:
    weights = {s: len(common) for s, common in iter_nerve(H)}
    return WeightedSimplicialComplex(SimplicialComplex(frozenset(weights)), weights)


def nerve_barcode(N: WeightedSimplicialComplex, field: Field | str = Field.GF2) -> Barcode:
    """Filter by ``w >= a`` for the distinct weights ``a`` in descending order.

    Internally time is ``-w``; bars come back in weight coordinates with
    ``None`` for ``-inf``.
    """
    F = FilteredComplex(N.complex, {s: -w for s, w in N.weights.items() if s in N.complex.simplices})
    raw = persistent_homology(F, field)
    bars = {}
    for p, ivs in raw.bars.items():
        conv = [(-b, None if d is None else -d) for b, d in ivs]
        conv.sort(key=lambda iv: (-iv[0], float("-inf") if iv[1] is None else -iv[1]))
        bars[p] = tuple(conv)
    return Barcode(bars, descending=True)


def wnerve_barcode(H: Hypergraph, field: Field | str = Field.GF2) -> Barcode:
    return nerve_barcode(weighted_nerve(H), field)


def mobius_multiplicities(N: WeightedSimplicialComplex) -> Dict[Simplex, int]:
    """``f(σ) = Σ_{τ ⊇ σ} (-1)^{|τ|-|σ|} w(τ)``: the number of vertices lying in exactly the edges of σ."""
    simplices = N.complex.simplices
    f = {}
    for s in simplices:
        rest = [v for v in N.complex.vertices if v not in s]
        total = 0
        # only supersets inside the complex carry weight; w = 0 elsewhere
        for k in range(len(rest) + 1):
            hit = False
            for extra in combinations(rest, k):
                t = tuple(sorted(s + extra))
                if t in simplices:
                    hit = True
                    total += (-1) ** k * N.weights[t]
            if not hit:
                break
        f[s] = total
    return f


def reconstruct_from_weighted_nerve(N: WeightedSimplicialComplex) -> Hypergraph:
    """Hypergraph (up to vertex relabeling) whose weighted nerve is ``N``.

    Vertices are fresh labels ``v1, v2, ...``; edges are the nerve vertices.
    Only edge-covered vertices can be recovered.
    """
    f = mobius_multiplicities(N)
    neg = {s: c for s, c in f.items() if c < 0}
    if neg:
        s, c = sorted(neg.items())[0]
        raise NotAWeightedNerveError(f"Möbius inversion gives f({s!r}) = {c} < 0")
    members: Dict[str, set] = {e: set() for e in N.complex.vertices}
    vertices = []
    for s in N.complex.sorted_simplices():
        for _ in range(f[s]):
            v = f"v{len(vertices) + 1}"
            vertices.append(v)
            for e in s:
                members[e].add(v)
    H = Hypergraph(tuple(vertices), tuple((str(e), frozenset(m)) for e, m in members.items()))
    if weighted_nerve(H) != N:
        raise NotAWeightedNerveError("reconstructed hypergraph does not reproduce the weighted nerve")
    return H
