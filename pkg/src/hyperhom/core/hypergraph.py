"""Hypergraph data model and its purely combinatorial derived structures."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .complex import SimplicialComplex

Edge = Tuple[str, FrozenSet[str]]


class HypergraphError(ValueError):
    """Invalid hypergraph data."""


class UnknownLabelError(HypergraphError, KeyError):
    """A vertex or edge label that does not exist in the hypergraph."""

    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


@dataclass(frozen=True)
class Hypergraph:
    """A vertex set with an indexed family of (possibly repeated or empty) hyperedges.

    ``vertices`` keeps its given order; ``edges`` is an ordered tuple of
    ``(label, member-set)`` pairs.
    """

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise HypergraphError("vertex labels must be distinct")
        labels = [lab for lab, _ in self.edges]
        if len(set(labels)) != len(labels):
            dup = next(lab for lab in labels if labels.count(lab) > 1)
            raise HypergraphError(f"duplicate edge label {dup!r}")
        vs = set(self.vertices)
        for lab, members in self.edges:
            extra = members - vs
            if extra:
                raise HypergraphError(f"edge {lab!r} has undeclared vertices {sorted(extra)}")

    @classmethod
    def from_edges(
        cls,
        edges: Union[Mapping[str, Iterable[str]], Iterable[Iterable[str]]],
        vertices: Optional[Iterable[str]] = None,
    ) -> "Hypergraph":
        """Build from ``{label: members}`` or from a list of member lists (auto-labeled e1, e2, ...).

        Strings are split into characters, so ``["abc", "ab"]`` is shorthand
        for two edges on single-letter vertices.
        """
        if isinstance(edges, Mapping):
            pairs = [(str(k), frozenset(v)) for k, v in edges.items()]
        else:
            pairs = [(f"e{i}", frozenset(v)) for i, v in enumerate(edges, 1)]
        if vertices is None:
            verts = tuple(sorted(set().union(*(m for _, m in pairs)))) if pairs else ()
        else:
            verts = tuple(vertices)
        return cls(verts, tuple(pairs))

    @property
    def edge_labels(self) -> Tuple[str, ...]:
        return tuple(lab for lab, _ in self.edges)

    def members(self, label: str) -> FrozenSet[str]:
        for lab, m in self.edges:
            if lab == label:
                return m
        raise UnknownLabelError(f"no edge labeled {label!r}")

    def edge_map(self) -> Dict[str, FrozenSet[str]]:
        return dict(self.edges)

    def member_sets(self) -> List[FrozenSet[str]]:
        return [m for _, m in self.edges]

    def covered_vertices(self) -> Tuple[str, ...]:
        used = set().union(*self.member_sets()) if self.edges else set()
        return tuple(v for v in self.vertices if v in used)

    def restrict_edges(self, labels: Iterable[str]) -> "Hypergraph":
        keep = set(labels)
        return Hypergraph(self.vertices, tuple(e for e in self.edges if e[0] in keep))

    def add_edges(self, edges: Mapping[str, Iterable[str]]) -> "Hypergraph":
        new = tuple((str(k), frozenset(v)) for k, v in edges.items())
        extra = sorted(set().union(*(m for _, m in new)) - set(self.vertices)) if new else []
        return Hypergraph(self.vertices + tuple(extra), self.edges + new)

    def sorted_members(self, label: str) -> Tuple[str, ...]:
        order = {v: i for i, v in enumerate(self.vertices)}
        return tuple(sorted(self.members(label), key=order.__getitem__))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class HypergraphMorphism:
    """Pair of set maps: ``vertex_map`` (g) on vertices and ``edge_map`` (f) on edges."""

    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]


def incidence_matrix(H: Hypergraph) -> np.ndarray:
    """|V| x |E| 0/1 matrix in the stored vertex and edge orders."""
    S = np.zeros((len(H.vertices), len(H.edges)), dtype=np.uint8)
    row = {v: i for i, v in enumerate(H.vertices)}
    for j, (_, members) in enumerate(H.edges):
        for v in members:
            S[row[v], j] = 1
    return S


def dual(H: Hypergraph) -> Hypergraph:
    """Swap vertices and hyperedges; dual edge ``v`` is the set of edges containing ``v``."""
    edges = tuple((v, frozenset(lab for lab, m in H.edges if v in m)) for v in H.vertices)
    return Hypergraph(H.edge_labels, edges)


def collapse_multiedges(H: Hypergraph) -> Hypergraph:
    """Keep the first edge of every group of edges sharing a member-set."""
    seen = set()
    kept = []
    for lab, m in H.edges:
        if m not in seen:
            seen.add(m)
            kept.append((lab, m))
    return Hypergraph(H.vertices, tuple(kept))


def toplexes(H: Hypergraph) -> List[str]:
    """Edges whose member-set is not strictly contained in another member-set."""
    sets = H.member_sets()
    return [lab for lab, m in H.edges if not any(m < other for other in sets)]


def simple(H: Hypergraph) -> Hypergraph:
    """The simple hypergraph of ``H``: collapsed toplexes only."""
    return collapse_multiedges(H.restrict_edges(toplexes(H)))


def complement(H: Hypergraph) -> Hypergraph:
    """Replace every edge by its complement in the vertex set."""
    vs = frozenset(H.vertices)
    return Hypergraph(H.vertices, tuple((lab, vs - m) for lab, m in H.edges))


def upper_closure(H: Hypergraph) -> SimplicialComplex:
    """Smallest simplicial complex containing every nonempty edge."""
    return SimplicialComplex.from_facets(m for m in H.member_sets() if m)


def lower_closure(H: Hypergraph) -> SimplicialComplex:
    """Largest simplicial complex contained in the edge family (peel until stable)."""
    family = {tuple(sorted(m)) for m in H.member_sets() if m}
    changed = True
    while changed:
        changed = False
        for s in sorted(family, key=len, reverse=True):
            if len(s) > 1 and any(s[:j] + s[j + 1:] not in family for j in range(len(s))):
                family.discard(s)
                changed = True
    return SimplicialComplex(frozenset(family))


def same_hyperblock(H1: Hypergraph, H2: Hypergraph) -> bool:
    return upper_closure(H1).simplices == upper_closure(H2).simplices


def line_graph(H: Hypergraph) -> SimplicialComplex:
    simplices = {(lab,) for lab in H.edge_labels}
    for (a, ma), (b, mb) in combinations(H.edges, 2):
        if ma & mb:
            simplices.add(tuple(sorted((a, b))))
    return SimplicialComplex(frozenset(simplices))


def iter_nerve(H: Hypergraph) -> Iterator[Tuple[Tuple[str, ...], FrozenSet[str]]]:
    """Yield ``(sorted edge labels, common intersection)`` for every nerve simplex.

    Depth-first over edge positions; a branch is abandoned as soon as the
    running intersection becomes empty.
    """
    edges = H.edges

    def extend(start: int, chosen: Tuple[str, ...], common: FrozenSet[str]):
        for j in range(start, len(edges)):
            lab, m = edges[j]
            inter = common & m
            if inter:
                sigma = chosen + (lab,)
                yield tuple(sorted(sigma)), inter
                yield from extend(j + 1, sigma, inter)

    for i, (lab, m) in enumerate(edges):
        if m:
            yield (lab,), m
            yield from extend(i + 1, (lab,), m)


def nerve(H: Hypergraph) -> SimplicialComplex:
    return SimplicialComplex(frozenset(s for s, _ in iter_nerve(H)))


def s_components(H: Hypergraph, s: int) -> List[List[str]]:
    """Connected components of edges under ``|e & f| >= s``, in edge order."""
    if s < 1:
        raise HypergraphError("s must be a positive integer")
    parent = list(range(len(H.edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(H.edges)), 2):
        if len(H.edges[i][1] & H.edges[j][1]) >= s:
            parent[find(i)] = find(j)
    groups: Dict[int, List[str]] = {}
    for i, (lab, _) in enumerate(H.edges):
        groups.setdefault(find(i), []).append(lab)
    return sorted(groups.values(), key=lambda g: H.edge_labels.index(g[0]))


def validate_morphism(H1: Hypergraph, H2: Hypergraph, m: HypergraphMorphism) -> bool:
    """True iff ``g(e) == f(e)`` as vertex sets for every edge ``e`` of ``H1``."""
    target_edges = H2.edge_map()
    targets_v = set(H2.vertices)
    for v in H1.vertices:
        if v not in m.vertex_map:
            raise UnknownLabelError(f"vertex map is not defined on {v!r}")
        if m.vertex_map[v] not in targets_v:
            raise UnknownLabelError(f"vertex map sends {v!r} to unknown vertex {m.vertex_map[v]!r}")
    for lab, members in H1.edges:
        if lab not in m.edge_map:
            raise UnknownLabelError(f"edge map is not defined on {lab!r}")
        image = m.edge_map[lab]
        if image not in target_edges:
            raise UnknownLabelError(f"edge map sends {lab!r} to unknown edge {image!r}")
        if {m.vertex_map[v] for v in members} != target_edges[image]:
            return False
    return True


def _vertex_signatures(H: Hypergraph, edge_order: Sequence[str]) -> List[Tuple[int, ...]]:
    pos = {lab: i for i, lab in enumerate(edge_order)}
    em = H.edge_map()
    sigs = []
    for v in H.vertices:
        sigs.append(tuple(sorted(pos[lab] for lab in edge_order if v in em[lab])))
    return sorted(sigs)


def is_isomorphic(H1: Hypergraph, H2: Hypergraph, match_edge_labels: bool = False) -> bool:
    """Isomorphism up to vertex relabeling (and edge relabeling unless ``match_edge_labels``).

    Vertices are compared through the multiset of their edge-membership
    signatures; unlabeled edge correspondences are searched exhaustively among
    edges of equal size, which is fine at desk scale.
    """
    if len(H1.vertices) != len(H2.vertices) or len(H1.edges) != len(H2.edges):
        return False
    if sorted(len(m) for m in H1.member_sets()) != sorted(len(m) for m in H2.member_sets()):
        return False
    if match_edge_labels:
        if set(H1.edge_labels) != set(H2.edge_labels):
            return False
        order = list(H1.edge_labels)
        return _vertex_signatures(H1, order) == _vertex_signatures(H2, order)

    target = _vertex_signatures(H1, list(H1.edge_labels))
    e1 = list(H1.edges)
    e2 = list(H2.edges)
    used = [False] * len(e2)
    assignment: List[str] = []

    def search(i: int) -> bool:
        if i == len(e1):
            return _vertex_signatures(H2, assignment) == target
        size = len(e1[i][1])
        for j, (lab, m) in enumerate(e2):
            if not used[j] and len(m) == size:
                used[j] = True
                assignment.append(lab)
                if search(i + 1):
                    return True
                assignment.pop()
                used[j] = False
        return False

    return search(0)
