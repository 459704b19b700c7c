"""Path homology of a hypergraph at density ``q``.

A sequence is allowed when every window of ``q`` consecutive entries has its
set of distinct vertices inside some edge; sequences shorter than ``q`` must
fit inside an edge as a whole.  Omega is computed as the infimum sub-complex
of the allowed spans inside a face-closed piece of the ambient complex of all
sequences (or of regular sequences, for the regular variant).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .. import guards
from ..core.hypergraph import Hypergraph, toplexes
from ..engine.chain import ChainComplex, homology_ranks, infimum_subcomplex
from ..engine.linalg import Field

Path = Tuple[str, ...]


@dataclass(frozen=True)
class PathBasis:
    q: int
    paths: Tuple[Tuple[Path, ...], ...]  # paths[p] = allowed elementary p-paths

    @property
    def p_max(self) -> int:
        return len(self.paths) - 1

    def regular(self) -> "PathBasis":
        return PathBasis(self.q, tuple(tuple(x for x in ps if is_regular(x)) for ps in self.paths))

    def __len__(self) -> int:
        return sum(len(ps) for ps in self.paths)


def is_regular(path: Sequence[str]) -> bool:
    return all(a != b for a, b in zip(path, path[1:]))


def _window_test(H: Hypergraph):
    tops = [H.members(lab) for lab in toplexes(H)]

    @lru_cache(maxsize=None)
    def fits(vs: FrozenSet[str]) -> bool:
        return any(vs <= t for t in tops)

    return fits


def allowed_paths(H: Hypergraph, q: int = 2, p_max: int = 3) -> PathBasis:
    if q < 1:
        raise ValueError("density q must be at least 1")
    if p_max < 0:
        raise ValueError("p_max must be nonnegative")
    fits = _window_test(H)
    verts = [v for v in H.vertices if fits(frozenset((v,)))]
    layers: List[List[Path]] = [[(v,) for v in verts]]
    budget = guards.limit("path-basis")
    total = len(layers[0])
    for _ in range(p_max):
        nxt = []
        for path in layers[-1]:
            for v in verts:
                window = (path + (v,))[-q:]
                if fits(frozenset(window)):
                    nxt.append(path + (v,))
        total += len(nxt)
        if total > budget:
            raise guards.ResourceGuardError("path-basis", total, budget)
        layers.append(nxt)
    return PathBasis(q, tuple(tuple(layer) for layer in layers))


def _faces(path: Path, regular: bool):
    for i in range(len(path)):
        face = path[:i] + path[i + 1:]
        if regular and not is_regular(face):
            continue
        yield i, face


def ambient_complex(paths: PathBasis, field: Field | str = Field.GF2, regular: bool = False) -> ChainComplex:
    """Face-closed span of the allowed paths inside the (regular) sequence complex."""
    field = Field.parse(field)
    P = paths.p_max
    layers = [set(ps) for ps in paths.paths]
    for p in range(P, 0, -1):
        for x in layers[p]:
            for _, face in _faces(x, regular):
                layers[p - 1].add(face)
    bases = [sorted(layer) for layer in layers]
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    boundaries = []
    for p, basis in enumerate(bases):
        cols = []
        for x in basis:
            if p == 0:
                cols.append({})
                continue
            cols.append(field.vector((index[p - 1][face], -1 if i % 2 else 1)
                                     for i, face in _faces(x, regular)))
        boundaries.append(tuple(cols))
    return ChainComplex(field, tuple(tuple(b) for b in bases), tuple(boundaries))


def omega_complex(H: Hypergraph, q: int = 2, p_max: int = 3, regular: bool = False,
                  field: Field | str = Field.GF2) -> ChainComplex:
    paths = allowed_paths(H, q, p_max)
    if regular:
        paths = paths.regular()
    ambient = ambient_complex(paths, field, regular)
    return infimum_subcomplex(ambient, paths.paths)


def path_betti(H: Hypergraph, q: int = 2, p_max: int = 3, regular: bool = False,
               field: Field | str = Field.GF2) -> List[int]:
    """``β_0 .. β_{p_max-1}``; the top degree is dropped since ``Ω_{p_max+1}`` is not built."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1 (the top degree is not reported)")
    if not H.covered_vertices():
        return []
    betti = homology_ranks(omega_complex(H, q, p_max, regular, field))
    return betti[:p_max]
