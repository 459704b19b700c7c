"""Reading and writing hypergraphs: the line-oriented ``.hg`` format and JSON.

``.hg`` grammar::

    # comment
    vertices: a b c d        (optional header, before any edge)
    F: a b c                 (labeled edge)
    a b                      (unlabeled edge, auto-labeled e<position>)
    E:                       (labeled empty edge)
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .hypergraph import Hypergraph, HypergraphError

_TOKEN = re.compile(r"^[^\s:#]+$")


class ParseError(HypergraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _tokens(text: str, lineno: int) -> List[str]:
    toks = text.split()
    for t in toks:
        if not _TOKEN.match(t):
            raise ParseError(f"invalid vertex token {t!r}", lineno)
    return toks


def parse_hypergraph(text: str) -> Hypergraph:
    declared: Optional[List[str]] = None
    edges: List[Tuple[str, List[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        label: Optional[str] = None
        body = line
        if ":" in line:
            head, _, body = line.partition(":")
            head = head.strip()
            if ":" in body:
                raise ParseError("more than one ':' on a line", lineno)
            if not _TOKEN.match(head):
                raise ParseError(f"invalid label {head!r}", lineno)
            if head == "vertices" and not edges and declared is None:
                declared = _tokens(body, lineno)
                if len(set(declared)) != len(declared):
                    raise ParseError("repeated vertex in header", lineno)
                continue
            label = head
        members = _tokens(body, lineno)
        if label is None:
            label = f"e{len(edges) + 1}"
        if any(label == lab for lab, _, _ in edges):
            raise ParseError(f"duplicate edge label {label!r}", lineno)
        edges.append((label, members, lineno))

    if declared is None:
        vertices = sorted({v for _, ms, _ in edges for v in ms})
    else:
        vertices = declared
        known = set(declared)
        for lab, ms, lineno in edges:
            extra = [v for v in ms if v not in known]
            if extra:
                raise ParseError(f"edge {lab!r} uses undeclared vertices {extra}", lineno)
    return Hypergraph(tuple(vertices), tuple((lab, frozenset(ms)) for lab, ms, _ in edges))


def parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("edges", {}), dict):
        raise ParseError('JSON hypergraph must be an object with an "edges" mapping')
    edges = doc.get("edges", {})
    for lab, ms in edges.items():
        if not isinstance(ms, list) or not all(isinstance(v, str) for v in ms):
            raise ParseError(f"edge {lab!r} must map to an array of strings")
    vertices = doc.get("vertices")
    if vertices is None:
        vertices = sorted({v for ms in edges.values() for v in ms})
    return Hypergraph(tuple(vertices), tuple((str(k), frozenset(v)) for k, v in edges.items()))


def format_hypergraph(H: Hypergraph) -> str:
    """Canonical ``.hg`` text; ``parse_hypergraph(format_hypergraph(H)) == H``."""
    lines = []
    implied = sorted(set(H.covered_vertices()))
    if list(H.vertices) != implied:
        lines.append("vertices: " + " ".join(H.vertices))
    for lab, _ in H.edges:
        members = " ".join(H.sorted_members(lab))
        lines.append(f"{lab}: {members}" if members else f"{lab}:")
    return "\n".join(lines) + ("\n" if lines else "")


def to_json(H: Hypergraph) -> dict:
    return {"vertices": list(H.vertices), "edges": {lab: list(H.sorted_members(lab)) for lab, _ in H.edges}}


def load_hypergraph(path: Union[str, Path]) -> Hypergraph:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return parse_json(text)
    return parse_hypergraph(text)
