"""Filtered simplicial complexes and barcodes via the standard column reduction."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Tuple

from ..core.complex import Simplex, SimplicialComplex
from .linalg import Field

Interval = Tuple[float, Optional[float]]  # death None = essential


class FiltrationError(ValueError):
    pass


@dataclass(frozen=True)
class FilteredComplex:
    complex: SimplicialComplex
    times: Mapping[Simplex, float]

    def __post_init__(self) -> None:
        for s in self.complex.simplices:
            if s not in self.times:
                raise FiltrationError(f"simplex {s!r} has no appearance time")
            if len(s) > 1:
                for j in range(len(s)):
                    face = s[:j] + s[j + 1:]
                    if self.times[face] > self.times[s]:
                        raise FiltrationError(f"face {face!r} appears after {s!r}")

    def order(self) -> List[Simplex]:
        """Insertion order: (time, dimension, lexicographic)."""
        return sorted(self.complex.simplices, key=lambda s: (self.times[s], len(s), s))

    def sublevel(self, t: float) -> SimplicialComplex:
        return SimplicialComplex(frozenset(s for s in self.complex.simplices if self.times[s] <= t))


@dataclass(frozen=True)
class Barcode:
    """Per-dimension sorted intervals ``(birth, death)``; ``death is None`` marks an essential class.

    With ``descending=True`` the coordinates run downward (weight
    coordinates, birth > death) and ``None`` stands for ``-inf``.
    """

    bars: Dict[int, Tuple[Interval, ...]]
    descending: bool = False

    def __getitem__(self, p: int) -> Tuple[Interval, ...]:
        return self.bars.get(p, ())

    def dimensions(self) -> List[int]:
        return sorted(p for p, b in self.bars.items() if b)

    def alive(self, p: int, t: float) -> int:
        """Number of bars of dimension ``p`` containing ``t``."""
        if self.descending:
            return sum(1 for b, d in self[p] if b >= t and (d is None or t > d))
        return sum(1 for b, d in self[p] if b <= t and (d is None or t < d))

    def to_json(self) -> Dict[str, list]:
        return {str(p): [[b, d] for b, d in bars] for p, bars in sorted(self.bars.items()) if bars}

    def essential(self, p: int) -> int:
        return sum(1 for _, d in self[p] if d is None)


def _low(col) -> int:
    return col.bit_length() - 1 if isinstance(col, int) else max(col)


def persistent_homology(F: FilteredComplex, field: Field | str = Field.GF2) -> Barcode:
    field = Field.parse(field)
    order = F.order()
    index = {s: i for i, s in enumerate(order)}

    columns: List = []
    for s in order:
        if field is Field.GF2:
            m = 0
            if len(s) > 1:
                for j in range(len(s)):
                    m |= 1 << index[s[:j] + s[j + 1:]]
            columns.append(m)
        else:
            col: Dict[int, Fraction] = {}
            if len(s) > 1:
                for j in range(len(s)):
                    col[index[s[:j] + s[j + 1:]]] = Fraction(-1 if j % 2 else 1)
            columns.append(col)

    pivot_of: Dict[int, int] = {}
    pairs: Dict[int, int] = {}
    for j in range(len(columns)):
        col = columns[j]
        while col:
            low = _low(col)
            k = pivot_of.get(low)
            if k is None:
                break
            other = columns[k]
            if field is Field.GF2:
                col ^= other
            else:
                a = col[low] / other[low]
                for i, c in other.items():
                    v = col.get(i, 0) - a * c
                    if v:
                        col[i] = v
                    else:
                        col.pop(i, None)
        columns[j] = col
        if col:
            low = _low(col)
            pivot_of[low] = j
            pairs[low] = j

    bars: Dict[int, List[Interval]] = {}
    for i, s in enumerate(order):
        p = len(s) - 1
        if columns[i]:
            continue  # s kills a class one dimension down
        birth = F.times[s]
        if i in pairs:
            death = F.times[order[pairs[i]]]
            if death == birth:
                continue
            bars.setdefault(p, []).append((birth, death))
        else:
            bars.setdefault(p, []).append((birth, None))
    return Barcode({p: tuple(sorted(b, key=lambda iv: (iv[0], float("inf") if iv[1] is None else iv[1])))
                    for p, b in sorted(bars.items())})


def barcode_from_times(K: SimplicialComplex, times: Mapping[Hashable, float],
                       field: Field | str = Field.GF2) -> Barcode:
    return persistent_homology(FilteredComplex(K, dict(times)), field)
