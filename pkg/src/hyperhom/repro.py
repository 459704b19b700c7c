"""Regression of the Betti-number and barcode tables against the bundled fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .chains.embedded import embedded_betti
from .chains.path import path_betti
from .core.hypergraph import Hypergraph
from .core.io import parse_hypergraph
from .simplicial.barycentric import rbs_betti, relbs_betti
from .simplicial.closure import closure_betti
from .simplicial.polar import polar_betti
from .simplicial.wnerve import wnerve_barcode

BETTI_COLUMNS: Dict[str, Callable[[Hypergraph], List[int]]] = {
    "closure": closure_betti,
    "rbs": rbs_betti,
    "relbs": relbs_betti,
    "polar": polar_betti,
    "embedded": embedded_betti,
}
PATH_ROWS = [str(i) for i in range(1, 9)]


def _data():
    return resources.files("hyperhom") / "data"


def expected_values() -> dict:
    return json.loads((_data() / "expected.json").read_text(encoding="utf-8"))


def load_fixtures() -> Dict[str, Hypergraph]:
    doc = expected_values()
    return {row: parse_hypergraph((_data() / "table1" / name).read_text(encoding="utf-8"))
            for row, name in doc["fixtures"].items()}


def betti_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equal after zero-padding to a common length (the tables truncate trailing zeros unevenly)."""
    n = max(len(a), len(b))
    return list(a) + [0] * (n - len(a)) == list(b) + [0] * (n - len(b))


def barcode_json(bc) -> Dict[str, list]:
    return {str(p): sorted([list(iv) for iv in bars], key=_bar_key) for p, bars in bc.bars.items() if bars}


def _bar_key(iv):
    b, d = iv
    return (-b, float("-inf") if d is None else -d)


def barcodes_equal(a: Dict[str, list], b: Dict[str, list]) -> bool:
    dims = set(a) | set(b)
    return all(sorted(map(tuple, a.get(p, [])), key=_bar_key) == sorted(map(tuple, b.get(p, [])), key=_bar_key)
               for p in dims)


@dataclass
class Cell:
    table: str
    row: str
    column: str
    expected: object
    actual: object
    passed: bool


@dataclass
class ReproReport:
    cells: List[Cell] = field(default_factory=list)
    path_q: Optional[int] = None
    path_regular: Optional[bool] = None
    path_note: str = ""

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cells)

    def failures(self) -> List[Cell]:
        return [c for c in self.cells if not c.passed]

    def render(self) -> str:
        lines = []
        for c in self.cells:
            tag = "PASS" if c.passed else "FAIL"
            line = f"{tag}  {c.table:<6} row {c.row:<3} {c.column:<9}"
            if c.passed:
                lines.append(f"{line} {json.dumps(c.actual)}")
            else:
                lines.append(f"{line} expected {json.dumps(c.expected)} got {json.dumps(c.actual)}")
        lines.append(f"path column: {self.path_note}")
        n_fail = len(self.failures())
        lines.append(f"{len(self.cells) - n_fail}/{len(self.cells)} cells pass")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "path": {"q": self.path_q, "regular": self.path_regular, "note": self.path_note},
            "cells": [c.__dict__ for c in self.cells],
        }


def choose_path_convention(fixtures: Dict[str, Hypergraph], expected: dict,
                           p_max: int = 3) -> Tuple[Optional[Tuple[int, bool]], Dict[Tuple[int, bool], Dict[str, list]]]:
    """Try ``q in {1,2,3}``, non-regular then regular; return the first matching all of Rows 1-8."""
    tried = {}
    for q in (1, 2, 3):
        for regular in (False, True):
            got = {r: path_betti(fixtures[r], q=q, p_max=p_max, regular=regular) for r in PATH_ROWS}
            tried[(q, regular)] = got
            if all(betti_equal(got[r], expected["table1"][r]["path"]) for r in PATH_ROWS):
                return (q, regular), tried
    return None, tried


def run_repro(fixtures: Optional[Dict[str, Hypergraph]] = None, expected: Optional[dict] = None,
              path_q: int = 2, p_max: int = 3) -> ReproReport:
    fixtures = fixtures if fixtures is not None else load_fixtures()
    expected = expected if expected is not None else expected_values()
    report = ReproReport()
    rows = [r for r in expected["rows"] if r in fixtures]
    for col, fn in BETTI_COLUMNS.items():
        for r in rows:
            want = expected["table1"][r][col]
            got = fn(fixtures[r])
            report.cells.append(Cell("table1", r, col, want, got, betti_equal(got, want)))

    path_rows = [r for r in PATH_ROWS if r in fixtures]
    choice, tried = choose_path_convention(fixtures, expected, p_max) if path_rows == PATH_ROWS else (None, {})
    if choice is not None:
        q, regular = choice
        report.path_note = f"q={q}, {'regular' if regular else 'non-regular'}, p_max={p_max} matches Rows 1-8"
    else:
        q, regular = path_q, False
        report.path_note = (f"no q in {{1,2,3}} (regular or not) matches Rows 1-8; "
                            f"reporting q={q}, non-regular, p_max={p_max}")
    report.path_q, report.path_regular = q, regular
    for r in path_rows:
        want = expected["table1"][r]["path"]
        got = tried.get((q, regular), {}).get(r) or path_betti(fixtures[r], q=q, p_max=p_max, regular=regular)
        report.cells.append(Cell("table1", r, "path", want, got, betti_equal(got, want)))

    for r, want in expected["table2"].items():
        if r not in fixtures:
            continue
        got = barcode_json(wnerve_barcode(fixtures[r]))
        report.cells.append(Cell("table2", r, "barcode", want, got, barcodes_equal(got, want)))
    return report
