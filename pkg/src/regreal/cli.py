"""Command-line front end.  Every command prints one JSON report on stdout.

Exit status: 0 for success or a positive verdict, 1 for a negative verdict,
2 for errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, geometry
from .automaton import (
    Automaton,
    Lasso,
    closure,
    is_closed,
    is_weak,
    path_label_count,
    sinks,
    trim,
    validate,
)
from .errors import NotNowhereDense, RegRealError
from .omega import (
    complement_det,
    determinize_closed,
    product_intersect,
    project,
)
from .reals import eval_function, saturate
from .regba import load, serialize

SCHEMA = 1


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Lasso):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(report: dict, code: int = 0) -> int:
    print(json.dumps(_jsonable({"schema": SCHEMA, **report}), indent=2))
    return code


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _coords(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices: {text!r}") from None


def _automaton_report(a: Automaton, args, **extra) -> int:
    text = serialize(a)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    report = {"command": args.command, "states": len(a.states),
              "transitions": len(a.transitions), **extra}
    if args.out:
        report["out"] = args.out
    else:
        report["automaton"] = text
    return _emit(report)


def _verdict(args, v: analysis.Verdict, yes: str, no: str) -> int:
    report = {"command": args.command, "verdict": yes if v.holds else no, "holds": v.holds}
    if not v.holds:
        report["counterexample"] = v.witness
        report["reason"] = v.reason
    return _emit(report, 0 if v.holds else 1)


def cmd_info(args):
    a = load(args.file)
    diags = validate(a)
    report = {
        "command": "info", "radix": a.radix, "states": len(a.states),
        "transitions": len(a.transitions), "initial": a.initial,
        "deterministic": a.is_deterministic(), "complete": a.is_complete(),
        "weak": is_weak(a), "closed": is_closed(a),
        "sinks": [sorted(s) for s in sinks(a)], "diagnostics": diags,
    }
    return _emit(report, 2 if diags else 0)


def cmd_trim(args):
    return _automaton_report(trim(load(args.file)), args)


def cmd_closure(args):
    return _automaton_report(closure(load(args.file)), args)


def cmd_determinize(args):
    return _automaton_report(determinize_closed(load(args.file)), args)


def cmd_complement(args):
    a = load(args.file)
    if not (a.is_deterministic() and a.is_complete() and is_weak(a)):
        a = determinize_closed(a)
    return _automaton_report(complement_det(a), args)


def cmd_product(args):
    return _automaton_report(product_intersect(load(args.file), load(args.other)), args)


def cmd_project(args):
    if not args.keep:
        raise RegRealError("project needs --keep")
    return _automaton_report(project(load(args.file), args.keep), args)


def cmd_saturate(args):
    return _automaton_report(saturate(load(args.file)), args)


def cmd_is_function(args):
    return _verdict(args, analysis.is_function(load(args.file)), "function", "not a function")


def cmd_is_continuous(args):
    return _verdict(args, analysis.is_continuous(load(args.file)), "continuous",
                    "not continuous")


def cmd_diff_check(args):
    return _verdict(args, analysis.is_differentiable(load(args.file)), "differentiable",
                    "not differentiable")


def cmd_eval(args):
    if args.at is None:
        raise RegRealError("eval needs --at p/q")
    y = eval_function(load(args.file), args.at)
    return _emit({"command": "eval", "x": args.at, "value": y})


def cmd_slopes(args):
    report = analysis.slope_set(load(args.file), args.depth)
    return _emit({"command": "slopes", **report.to_dict()})


def cmd_render(args):
    cover = geometry.attractor_boxes(load(args.file), args.depth)
    text = cover.to_csv() if args.format == "csv" else cover.to_json()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    report = {"command": "render", "depth": cover.depth, "radix": cover.radix,
              "boxes": len(cover), "format": args.format}
    if args.out:
        report["out"] = args.out
    else:
        report["data"] = text
    return _emit(report)


def cmd_measure(args):
    a = load(args.file)
    est = geometry.box_measure_estimate(a, args.depth)
    return _emit({"command": "measure", "depth": args.depth, "upper_bound": est})


def cmd_kernel(args):
    classes = geometry.kernel_residuals(load(args.file))
    return _emit({"command": "kernel", "classes": len(classes),
                  "residuals": [{"representative": c.representative, "members": c.members}
                                for c in classes]})


def cmd_porosity(args):
    try:
        w = geometry.porosity_witness(load(args.file))
    except NotNowhereDense as exc:
        return _emit({"command": "porosity", "verdict": "not nowhere dense",
                      "holds": False, "reason": str(exc)}, 1)
    return _emit({"command": "porosity", "verdict": "porous", "holds": True, "k": w.k,
                  "interval": w.interval, "constant": w.constant})


def cmd_paths(args):
    a = load(args.file)
    src = args.src or sorted(a.initial)[0]
    pc = path_label_count(a, src, args.dst, args.depth)
    r = a.radix[0]
    return _emit({"command": "paths", "from": src, "to": args.dst, "length": args.depth,
                  "count": pc.count, "ratio": Fraction(pc.count, r**args.depth)})


COMMANDS = {
    "info": (cmd_info, "summary and structural checks"),
    "trim": (cmd_trim, "drop inaccessible and unproductive states"),
    "closure": (cmd_closure, "make every state accepting"),
    "determinize": (cmd_determinize, "subset construction for closed automata"),
    "complement": (cmd_complement, "complement a closed or deterministic weak automaton"),
    "product": (cmd_product, "intersection with a second automaton"),
    "project": (cmd_project, "existential projection onto --keep coordinates"),
    "saturate": (cmd_saturate, "accept every encoding of every accepted value"),
    "is-function": (cmd_is_function, "is the value set a function graph?"),
    "is-continuous": (cmd_is_continuous, "is the function continuous?"),
    "diff-check": (cmd_diff_check, "is the function differentiable (affine)?"),
    "eval": (cmd_eval, "exact value at --at p/q"),
    "slopes": (cmd_slopes, "slope set and affine witness intervals"),
    "render": (cmd_render, "box cover of the value set at --depth"),
    "measure": (cmd_measure, "box-count upper bound on length"),
    "kernel": (cmd_kernel, "residual classes of the states"),
    "porosity": (cmd_porosity, "porosity witness for a nowhere dense set"),
    "paths": (cmd_paths, "count path labels of length --depth"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regreal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help=".regba file (corpus/NAME uses the bundled corpus)")
        if name == "product":
            s.add_argument("other", help="second .regba file")
        s.add_argument("--depth", type=int, default=6)
        s.add_argument("--at", type=_rational)
        s.add_argument("--keep", type=_coords, help="0-based coordinates, e.g. 0,2")
        s.add_argument("--out")
        s.add_argument("--format", choices=["csv", "json"], default="json")
        s.add_argument("--from", dest="src")
        s.add_argument("--to", dest="dst")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except (RegRealError, OSError, ValueError) as exc:
        return _emit({"command": args.command, "error": type(exc).__name__,
                      "message": str(exc)}, 2)


if __name__ == "__main__":
    sys.exit(main())
