"""Exact sparse linear algebra over GF(2) and the rationals.

Vectors and matrix columns are ``dict[int, coeff]`` with zero entries omitted.
GF(2) work is done on Python ints used as bitsets; rational work uses
:class:`fractions.Fraction`.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Vector = Dict[int, object]


class Field(str, Enum):
    """Coefficient field."""

    GF2 = "gf2"
    RATIONAL = "q"

    @classmethod
    def parse(cls, value: "Field | str") -> "Field":
        if isinstance(value, Field):
            return value
        key = str(value).strip().lower()
        aliases = {"gf2": cls.GF2, "z2": cls.GF2, "f2": cls.GF2,
                   "q": cls.RATIONAL, "rational": cls.RATIONAL, "qq": cls.RATIONAL}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown field {value!r}; expected 'gf2' or 'q'") from None

    def coerce(self, x):
        if self is Field.GF2:
            return int(x) % 2
        return Fraction(x)

    def vector(self, entries: Iterable[Tuple[int, object]]) -> Vector:
        """Accumulate ``(index, coeff)`` pairs into a sparse vector."""
        out: Vector = {}
        for i, c in entries:
            c = self.coerce(c)
            if not c:
                continue
            s = self.coerce(out.get(i, 0) + c)
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return out


def _mask(col: Mapping[int, object]) -> int:
    m = 0
    for i, c in col.items():
        if int(c) % 2:
            m |= 1 << i
    return m


def _bits(m: int) -> List[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _axpy(y: Vector, a, x: Mapping[int, object]) -> None:
    """In place ``y += a * x`` over the rationals."""
    for i, xi in x.items():
        v = y.get(i, 0) + a * xi
        if v:
            y[i] = v
        else:
            y.pop(i, None)


def rank(columns: Sequence[Mapping[int, object]], field: Field) -> int:
    if field is Field.GF2:
        pivots: Dict[int, int] = {}
        r = 0
        for col in columns:
            v = _mask(col)
            while v:
                low = v & -v
                p = pivots.get(low)
                if p is None:
                    pivots[low] = v
                    r += 1
                    break
                v ^= p
        return r
    qpivots: Dict[int, Vector] = {}
    for col in columns:
        v = {i: Fraction(c) for i, c in col.items() if c}
        while v:
            low = min(v)
            p = qpivots.get(low)
            if p is None:
                inv = 1 / v[low]
                qpivots[low] = {i: c * inv for i, c in v.items()}
                break
            _axpy(v, -v[low], p)
    return len(qpivots)


def kernel(columns: Sequence[Mapping[int, object]], field: Field) -> List[Vector]:
    """Basis of the null space; each vector is indexed by column position."""
    basis: List[Vector] = []
    if field is Field.GF2:
        pivots: Dict[int, Tuple[int, int]] = {}
        for j, col in enumerate(columns):
            v, combo = _mask(col), 1 << j
            while v:
                low = v & -v
                p = pivots.get(low)
                if p is None:
                    pivots[low] = (v, combo)
                    break
                v ^= p[0]
                combo ^= p[1]
            if not v:
                basis.append({i: 1 for i in _bits(combo)})
        return basis
    qpivots: Dict[int, Tuple[Vector, Vector]] = {}
    for j, col in enumerate(columns):
        v: Vector = {i: Fraction(c) for i, c in col.items() if c}
        combo: Vector = {j: Fraction(1)}
        while v:
            low = min(v)
            p = qpivots.get(low)
            if p is None:
                inv = 1 / v[low]
                qpivots[low] = ({i: c * inv for i, c in v.items()},
                                {i: c * inv for i, c in combo.items()})
                break
            a = -v[low]
            _axpy(v, a, p[0])
            _axpy(combo, a, p[1])
        if not v:
            basis.append(combo)
    return basis


def echelon_basis(vectors: Iterable[Mapping[int, object]], field: Field) -> Tuple[List[Vector], List[int]]:
    """Fully reduced echelon basis of the span of ``vectors``.

    Returns ``(basis, pivots)`` where ``basis[j][pivots[j]] == 1`` and every
    other basis vector vanishes at ``pivots[j]``.  The coordinates of any
    ``w`` in the span are therefore ``[w.get(p, 0) for p in pivots]``.
    """
    basis: List[Vector] = []
    pivots: List[int] = []
    for vec in vectors:
        v = field.vector(vec.items())
        for b, p in zip(basis, pivots):
            c = v.get(p)
            if c:
                if field is Field.GF2:
                    _xor(v, b)
                else:
                    _axpy(v, -c, b)
        if not v:
            continue
        p = min(v)
        if field is Field.RATIONAL:
            inv = 1 / v[p]
            v = {i: c * inv for i, c in v.items()}
        for b in basis:
            c = b.get(p)
            if c:
                if field is Field.GF2:
                    _xor(b, v)
                else:
                    _axpy(b, -c, v)
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[k] for k in order], [pivots[k] for k in order]


def _xor(y: Vector, x: Mapping[int, object]) -> None:
    for i in x:
        if i in y:
            del y[i]
        else:
            y[i] = 1


def apply(columns: Sequence[Mapping[int, object]], x: Mapping[int, object], field: Field) -> Vector:
    """Matrix-vector product for a matrix stored by columns."""
    out: Vector = {}
    for j, a in x.items():
        if not a:
            continue
        col = columns[j]
        if field is Field.GF2:
            if int(a) % 2:
                _xor(out, {i: 1 for i, c in col.items() if int(c) % 2})
        else:
            _axpy(out, Fraction(a), {i: Fraction(c) for i, c in col.items()})
    return out


def compose_is_zero(outer: Sequence[Mapping[int, object]],
                    inner: Sequence[Mapping[int, object]], field: Field) -> bool:
    """True iff ``outer @ inner == 0``."""
    return all(not apply(outer, col, field) for col in inner)
