"""Command line entry point: ``hyperhom compute | transform | repro``.

Exit codes: 0 success, 1 unreadable or malformed input, 2 invalid
parameters, 3 resource guard tripped, 4 regression mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from . import guards
from .chains.chromatic import chromatic_betti_table
from .chains.embedded import embedded_betti
from .chains.magnitude import magnitude_betti_table
from .chains.path import path_betti
from .core.complex import SimplicialComplex
from .core.hypergraph import (
    HypergraphError, collapse_multiedges, dual, line_graph, lower_closure, nerve, simple, upper_closure,
)
from .core.io import format_hypergraph, load_hypergraph, parse_hypergraph
from .engine.linalg import Field
from .simplicial.barycentric import rbs_betti, relbs_betti, restricted_barycentric_complex
from .simplicial.closure import closure_betti
from .simplicial.polar import polar_betti, polar_complex
from .simplicial.wnerve import wnerve_barcode

EXIT_PARSE, EXIT_PARAMS, EXIT_GUARD, EXIT_MISMATCH = 1, 2, 3, 4

THEORIES = ["closure", "lower-closure", "rbs", "relbs", "polar", "embedded", "path", "magnitude",
            "chromatic", "wnerve-ph"]
# parameters each theory accepts; anything else given explicitly is rejected
THEORY_PARAMS = {
    "closure": {"reduced"},
    "lower-closure": {"reduced"},
    "path": {"q_density", "p_max", "regular"},
    "magnitude": {"k_max", "l_max"},
}
PARAM_FLAGS = {"q_density": "--q-density", "p_max": "--p-max", "regular": "--regular",
               "k_max": "--k-max", "l_max": "--l-max", "reduced": "--reduced"}
DEFAULTS = {"q_density": 2, "p_max": 3, "regular": False, "k_max": 2, "l_max": Fraction(2), "reduced": False}
TRANSFORMS = ["closure", "lower-closure", "dual", "collapse", "simple", "nerve", "linegraph", "polar", "rbs"]


class UsageError(Exception):
    pass


def _half_integer(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value < 0 or (2 * value).denominator != 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a nonnegative multiple of 1/2")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperhom", description="Homology theories for hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one homology theory of a hypergraph")
    c.add_argument("--theory", required=True, choices=THEORIES)
    c.add_argument("--input", required=True, help=".hg or .json hypergraph file ('-' for stdin)")
    c.add_argument("--field", choices=["gf2", "q"], default=None,
                   help="coefficient field (default gf2; chromatic defaults to q)")
    c.add_argument("--output", help="write the result here instead of stdout")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.add_argument("--q-density", dest="q_density", type=_positive, default=None)
    c.add_argument("--p-max", dest="p_max", type=_positive, default=None)
    c.add_argument("--regular", action="store_const", const=True, default=None,
                   help="regular path homology (path only)")
    c.add_argument("--k-max", dest="k_max", type=_nonnegative, default=None)
    c.add_argument("--l-max", dest="l_max", type=_half_integer, default=None)
    c.add_argument("--reduced", action="store_const", const=True, default=None)

    t = sub.add_parser("transform", help="emit a derived hypergraph or simplicial complex")
    t.add_argument("--op", required=True, choices=TRANSFORMS)
    t.add_argument("path", nargs="?", help="input file")
    t.add_argument("--input", dest="input_opt")
    t.add_argument("--output")

    r = sub.add_parser("repro", help="recompute the bundled Betti and barcode tables")
    r.add_argument("--data", help="directory holding expected.json and table1/ (default: bundled)")
    r.add_argument("--json", action="store_true", help="emit the report as JSON")
    r.add_argument("--output")
    return parser


def _read_input(path: str):
    if path == "-":
        return parse_hypergraph(sys.stdin.read())
    return load_hypergraph(path)


def _params(args: argparse.Namespace) -> Dict[str, object]:
    allowed = THEORY_PARAMS.get(args.theory, set())
    given = {k for k in PARAM_FLAGS if getattr(args, k) is not None}
    unused = sorted(given - allowed)
    if unused:
        flags = ", ".join(PARAM_FLAGS[k] for k in unused)
        raise UsageError(f"theory '{args.theory}' does not take {flags}")
    return {k: (getattr(args, k) if getattr(args, k) is not None else DEFAULTS[k]) for k in sorted(allowed)}


def compute(H, theory: str, field: Field, params: Dict[str, object]) -> Dict[str, object]:
    """Library dispatch shared by the CLI; returns the result part of the JSON document."""
    if theory == "closure":
        return {"betti": closure_betti(H, "upper", field, reduced=params["reduced"])}
    if theory == "lower-closure":
        return {"betti": closure_betti(H, "lower", field, reduced=params["reduced"])}
    if theory == "rbs":
        return {"betti": rbs_betti(H, field)}
    if theory == "relbs":
        return {"betti": relbs_betti(H, field)}
    if theory == "polar":
        return {"betti": polar_betti(H, field)}
    if theory == "embedded":
        return {"betti": embedded_betti(H, field)}
    if theory == "path":
        return {"betti": path_betti(H, params["q_density"], params["p_max"], params["regular"], field)}
    if theory == "magnitude":
        table = magnitude_betti_table(H, params["k_max"], params["l_max"], field)
        entries = [[k, int(2 * l), rank] for (k, l), rank in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
        return {"bigraded": {"grading": ["k", "l"], "doubled": True, "entries": entries}}
    if theory == "chromatic":
        table = chromatic_betti_table(H, field)
        entries = [[i, j, rank] for (i, j), rank in sorted(table.items())]
        return {"bigraded": {"grading": ["i", "j"], "doubled": False, "entries": entries}}
    if theory == "wnerve-ph":
        return {"barcode": wnerve_barcode(H, field).to_json()}
    raise UsageError(f"unknown theory {theory!r}")


def _json_params(params: Dict[str, object]) -> Dict[str, object]:
    out = {}
    for k, v in params.items():
        if isinstance(v, Fraction):
            out[k.replace("_", "-")] = {"doubled": int(2 * v)}
        else:
            out[k.replace("_", "-")] = v
    return out


def _text(doc: Dict[str, object]) -> str:
    lines = [f"theory: {doc['theory']}  field: {doc['field']}"]
    if "betti" in doc:
        lines.append("betti: " + " ".join(map(str, doc["betti"])))
    elif "bigraded" in doc:
        bg = doc["bigraded"]
        a, b = bg["grading"]
        for x, y, rank in bg["entries"]:
            y_text = str(Fraction(y, 2)) if bg["doubled"] else str(y)
            lines.append(f"{a}={x} {b}={y_text}: {rank}")
    else:
        for p, bars in doc["barcode"].items():
            rendered = ", ".join(f"[{b}, {'-inf' if d is None else d})" for b, d in bars)
            lines.append(f"PH_{p}: {rendered}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    params = _params(args)
    field = Field.parse(args.field or ("q" if args.theory == "chromatic" else "gf2"))
    H = _read_input(args.input)
    result = compute(H, args.theory, field, params)
    doc = {"input": args.input, "theory": args.theory, "field": field.value, "params": _json_params(params)}
    doc.update(result)
    text = json.dumps(doc, indent=2) + "\n" if args.format == "json" else _text(doc)
    _emit(text, args.output)
    return 0


def _complex_json(K: SimplicialComplex) -> str:
    return json.dumps([list(map(str, s)) for s in K.sorted_simplices()]) + "\n"


def cmd_transform(args: argparse.Namespace) -> int:
    path = args.input_opt or args.path
    if path is None:
        raise UsageError("transform needs an input file")
    H = _read_input(path)
    op = args.op
    if op in ("dual", "collapse", "simple"):
        out = {"dual": dual, "collapse": collapse_multiedges, "simple": simple}[op](H)
        text = format_hypergraph(out)
    else:
        build = {"closure": upper_closure, "lower-closure": lower_closure, "nerve": nerve,
                 "linegraph": line_graph, "polar": polar_complex, "rbs": restricted_barycentric_complex}[op]
        text = _complex_json(build(H))
    _emit(text, args.output)
    return 0


def cmd_repro(args: argparse.Namespace) -> int:
    from .repro import expected_values, load_fixtures, run_repro

    if args.data:
        base = Path(args.data)
        expected = json.loads((base / "expected.json").read_text(encoding="utf-8"))
        fixtures = {row: load_hypergraph(base / "table1" / name) for row, name in expected["fixtures"].items()}
    else:
        expected, fixtures = expected_values(), load_fixtures()
    report = run_repro(fixtures, expected)
    text = json.dumps(report.to_json(), indent=2) + "\n" if args.json else report.render() + "\n"
    _emit(text, args.output)
    return 0 if report.ok else EXIT_MISMATCH


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"compute": cmd_compute, "transform": cmd_transform, "repro": cmd_repro}
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hyperhom: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except guards.ResourceGuardError as exc:
        print(f"hyperhom: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (HypergraphError, OSError, UnicodeDecodeError) as exc:
        print(f"hyperhom: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"hyperhom: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
