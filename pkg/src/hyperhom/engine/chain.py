"""Chain complexes, Betti numbers, relative homology and infimum sub-complexes."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from ..core.complex import SimplicialComplex
from . import linalg
from .linalg import Field, Vector

Column = Dict[int, object]


class ChainComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ChainComplex:
    """Finite chain complex over a field.

    ``bases[p]`` lists the degree-``p`` basis labels and ``boundaries[p]``
    holds one sparse column per degree-``p`` basis element, indexed by the
    degree ``p-1`` basis (``boundaries[0]`` is all empty).  The boundary
    composition is checked to vanish on construction.
    """

    field: Field
    bases: Tuple[Tuple[Hashable, ...], ...]
    boundaries: Tuple[Tuple[Column, ...], ...]
    # Optional: degree-p generators as vectors over a parent complex's basis.
    generators: Optional[Tuple[Tuple[Dict[Hashable, object], ...], ...]] = dc_field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.bases) != len(self.boundaries):
            raise ChainComplexError("one boundary matrix per degree is required")
        for p, (basis, cols) in enumerate(zip(self.bases, self.boundaries)):
            if len(cols) != len(basis):
                raise ChainComplexError(f"degree {p}: {len(cols)} columns for {len(basis)} basis elements")
            rows = len(self.bases[p - 1]) if p > 0 else 0
            for col in cols:
                if any(not 0 <= i < rows for i in col):
                    raise ChainComplexError(f"degree {p}: boundary row index out of range")
        for p in range(2, len(self.bases)):
            if not linalg.compose_is_zero(self.boundaries[p - 1], self.boundaries[p], self.field):
                raise ChainComplexError(f"boundary composition nonzero in degree {p}")

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def dims(self) -> List[int]:
        return [len(b) for b in self.bases]

    def boundary_rank(self, p: int) -> int:
        if p <= 0 or p >= len(self.bases):
            return 0
        return linalg.rank(self.boundaries[p], self.field)


def _simplex_columns(simplices: Mapping[int, Sequence[Tuple]], field: Field,
                     index: Mapping[int, Mapping[Tuple, int]]) -> List[Tuple[Column, ...]]:
    out = []
    for p in sorted(simplices):
        cols = []
        for s in simplices[p]:
            col: Column = {}
            if p > 0:
                rows = index[p - 1]
                for j in range(len(s)):
                    r = rows.get(s[:j] + s[j + 1:])
                    if r is not None:
                        col[r] = field.coerce(-1 if j % 2 else 1)
            cols.append(col)
        out.append(tuple(cols))
    return out


def _from_simplices(by_dim: Mapping[int, Sequence[Tuple]], field: Field) -> ChainComplex:
    index = {p: {s: i for i, s in enumerate(ss)} for p, ss in by_dim.items()}
    cols = _simplex_columns(by_dim, field, index)
    bases = tuple(tuple(by_dim[p]) for p in sorted(by_dim))
    return ChainComplex(field, bases, tuple(cols))


def build_chain_complex(K: SimplicialComplex, field: Field | str = Field.GF2) -> ChainComplex:
    """Simplicial chain complex with basis = sorted simplices, face ``j`` signed ``(-1)**j``."""
    return _from_simplices(K.by_dimension(), Field.parse(field))


def homology_ranks(C: ChainComplex, reduced: bool = False) -> List[int]:
    """Betti numbers ``dim C_p - rank d_p - rank d_{p+1}`` for every degree."""
    ranks = [C.boundary_rank(p) for p in range(len(C.bases) + 1)]
    betti = [len(C.bases[p]) - ranks[p] - ranks[p + 1] for p in range(len(C.bases))]
    if reduced and betti and len(C.bases[0]) > 0:
        betti[0] -= 1
    return betti


def simplicial_betti(K: SimplicialComplex, field: Field | str = Field.GF2, reduced: bool = False) -> List[int]:
    return homology_ranks(build_chain_complex(K, field), reduced=reduced)


def relative_chain_complex(K: SimplicialComplex, K0: SimplicialComplex,
                           field: Field | str = Field.GF2) -> ChainComplex:
    """Quotient ``C(K)/C(K0)``: simplices of ``K0`` are deleted from every basis."""
    if not K0.is_subcomplex_of(K):
        raise ChainComplexError("relative homology needs K0 to be a subcomplex of K")
    by_dim = {p: [s for s in ss if s not in K0.simplices] for p, ss in K.by_dimension().items()}
    return _from_simplices(by_dim, Field.parse(field))


def relative_betti(K: SimplicialComplex, K0: SimplicialComplex, field: Field | str = Field.GF2) -> List[int]:
    return homology_ranks(relative_chain_complex(K, K0, field))


def _fmt_label(label: Hashable) -> str:
    if isinstance(label, tuple):
        parts = [_fmt_label(x) for x in label]
        return "".join(parts) if all(len(x) == 1 for x in parts) else "{" + ",".join(parts) + "}"
    return str(label)


def combination_label(vec: Mapping[Hashable, object], field: Field) -> str:
    terms = []
    for lab, c in vec.items():
        name = _fmt_label(lab)
        if c == 1:
            terms.append(("+", name))
        elif c == -1:
            terms.append(("-", name))
        else:
            terms.append(("+", f"{c}*{name}"))
    text = "".join(s + t for s, t in terms)
    return text[1:] if text.startswith("+") else text


def infimum_subcomplex(C: ChainComplex, D: Sequence[Sequence[Hashable]]) -> ChainComplex:
    """Largest sub-complex supported on the spans ``D[p]``: ``D_p ∩ d^{-1}(D_{p-1})``.

    Each output degree is given a fully reduced echelon basis; its labels are
    the rendered linear combinations and ``generators`` holds the vectors in
    terms of ``C``'s basis labels.
    """
    field = C.field
    P = len(C.bases)
    spans: List[List[int]] = []
    for p in range(P):
        wanted = list(D[p]) if p < len(D) else []
        index = {lab: i for i, lab in enumerate(C.bases[p])}
        missing = [lab for lab in wanted if lab not in index]
        if missing:
            raise ChainComplexError(f"degree {p}: labels not in the chain complex: {missing[:5]}")
        spans.append(sorted({index[lab] for lab in wanted}))

    (bases, pivots) = ([], [])
    for p in range(P):
        inside_below = set(spans[p - 1]) if p > 0 else set()
        killed_cols = []
        for i in spans[p]:
            col = C.boundaries[p][i]
            killed_cols.append({r: c for r, c in col.items() if r not in inside_below})
        kern = linalg.kernel(killed_cols, field)
        vectors = [{spans[p][j]: c for j, c in v.items()} for v in kern]
        b, piv = linalg.echelon_basis(vectors, field)
        bases.append(b)
        pivots.append(piv)

    out_cols = []
    for p in range(P):
        cols = []
        for v in bases[p]:
            if p == 0:
                cols.append({})
                continue
            w = linalg.apply(C.boundaries[p], v, field)
            coords = {j: w[piv] for j, piv in enumerate(pivots[p - 1]) if w.get(piv)}
            recon = linalg.apply(bases[p - 1], coords, field)
            if field.vector(recon.items()) != field.vector(w.items()):
                raise ChainComplexError(f"degree {p}: boundary leaves the infimum sub-complex")
            cols.append(coords)
        out_cols.append(tuple(cols))

    gens = tuple(tuple({C.bases[p][i]: c for i, c in sorted(v.items())} for v in bases[p]) for p in range(P))
    labels = tuple(tuple(combination_label(g, field) for g in gens[p]) for p in range(P))
    return ChainComplex(field, labels, tuple(out_cols), generators=gens)
