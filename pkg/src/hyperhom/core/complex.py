"""Abstract simplicial complexes stored as sorted vertex tuples."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Tuple

Simplex = Tuple[Hashable, ...]


def _faces_of(simplex: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of nonempty simplices.

    Vertex labels may be any mutually comparable hashables (strings for
    closures and nerves, simplex tuples for barycentric subdivisions).
    Construct with :meth:`from_simplices` or :meth:`from_facets` unless the
    family is already known to be closed.
    """

    simplices: FrozenSet[Simplex]
    vertices: Tuple[Hashable, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.vertices:
            verts = sorted({v for s in self.simplices for v in s})
            object.__setattr__(self, "vertices", tuple(verts))
        for s in self.simplices:
            if len(s) > 1:
                for j in range(len(s)):
                    face = s[:j] + s[j + 1:]
                    if face not in self.simplices:
                        raise ValueError(f"not downward closed: {s!r} lacks face {face!r}")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        out = set()
        for f in facets:
            top = tuple(sorted(set(f)))
            if not top or top in out:
                continue
            out.update(_faces_of(top))
        return cls(frozenset(out))

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        """Checked constructor for an explicit simplex list."""
        return cls(frozenset(tuple(sorted(set(s))) for s in simplices if s))

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(frozenset())

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex: Iterable[Hashable]) -> bool:
        return tuple(sorted(simplex)) in self.simplices

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_simplices())

    @property
    def dimension(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(s) for s in self.simplices), default=0) - 1

    def sorted_simplices(self) -> List[Simplex]:
        return sorted(self.simplices, key=lambda s: (len(s), s))

    def skeleton_sizes(self) -> List[int]:
        sizes = [0] * (self.dimension + 1)
        for s in self.simplices:
            sizes[len(s) - 1] += 1
        return sizes

    def by_dimension(self) -> Dict[int, List[Simplex]]:
        out: Dict[int, List[Simplex]] = {p: [] for p in range(self.dimension + 1)}
        for s in self.simplices:
            out[len(s) - 1].append(s)
        for p in out:
            out[p].sort()
        return out

    def facets(self) -> List[Simplex]:
        """Maximal simplices."""
        cofaced = set()
        for s in self.simplices:
            if len(s) > 1:
                for j in range(len(s)):
                    cofaced.add(s[:j] + s[j + 1:])
        return sorted((s for s in self.simplices if s not in cofaced), key=lambda s: (len(s), s))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def induced(self, vertices: Iterable[Hashable]) -> "SimplicialComplex":
        keep = set(vertices)
        return SimplicialComplex(frozenset(s for s in self.simplices if keep.issuperset(s)))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def relabel(self, mapping: Dict[Hashable, Hashable]) -> "SimplicialComplex":
        return SimplicialComplex.from_simplices([mapping[v] for v in s] for s in self.simplices)
