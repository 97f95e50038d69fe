"""
Decision procedures and piecewise-affine structure of regular functions.

The input to most functions here is an automaton over two coordinates in a
common base ``r`` whose value set is the graph of ``f: [0,1] -> [0,1]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .automaton import (
    Automaton,
    complete,
    is_closed,
    is_uniform,
    path_label_count,
    sinks,
    trim,
)
from .errors import (
    EmptyLanguage,
    MixedRadix,
    NotAffineSink,
    NotAFunction,
    NotClosed,
    NotDeterministic,
    RangeViolation,
    UnknownSink,
)
from .omega import (
    complement_det,
    is_empty,
    is_universal_closed,
    join,
    language_equal,
    normalize_closed,
    project,
)
from .reals import (
    affine_graph_automaton,
    as_fraction,
    equal_value_automaton,
    eval_function,
    midpoint_relation_automaton,
    saturate,
    valuation,
)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class AffinePiece:
    alpha: Fraction
    beta: Fraction
    sink: frozenset
    entry: str


@dataclass(frozen=True)
class WitnessInterval:
    left: Fraction
    depth: int
    slope: Fraction
    r: int

    @property
    def right(self) -> Fraction:
        return self.left + Fraction(1, self.r**self.depth)


@dataclass
class PiecewiseReport:
    slopes: set
    pieces: list
    witnesses: list
    depth: int
    covered: Fraction
    by_slope: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "slopes": [str(s) for s in sorted(self.slopes)],
            "pieces": [
                {"alpha": str(p.alpha), "beta": str(p.beta),
                 "sink": sorted(p.sink), "entry": p.entry}
                for p in self.pieces
            ],
            "depth": self.depth,
            "witnesses": [
                {"left": str(w.left), "depth": w.depth, "slope": str(w.slope)}
                for w in self.witnesses
            ],
            "covered_measure": str(self.covered),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _radix_of(a: Automaton) -> int:
    if a.arity != 2:
        raise NotAFunction("a function graph needs exactly two coordinates")
    if not is_uniform(a.radix):
        raise MixedRadix(f"analysis needs equal bases, got {a.radix}")
    return a.radix[0]


def value_universal(a: Automaton) -> Verdict:
    """Does the value set of the closed automaton ``a`` fill ``[0,1]^n``?"""
    sat = saturate(a)
    ok, w = is_universal_closed(complete(sat))
    if ok:
        return Verdict(True)
    return Verdict(False, {"point": valuation(w, a.radix)}, "value set misses a point")


def is_function(a: Automaton) -> Verdict:
    """Is the value set of ``a`` the graph of a total function [0,1] -> [0,1]?

    Single-valuedness is checked first, then totality.  The witness is
    ``{"x", "y1", "y2"}`` for a two-valued point or ``{"x"}`` for a point
    outside the domain.
    """
    r = _radix_of(a)
    sat = saturate(a)
    if not sat.accepting:
        return Verdict(False, {"x": Fraction(0)}, "empty graph")
    differ = complement_det(complete(equal_value_automaton(r)))
    pairs = join(sat, ["x", "y1"], sat, ["x", "y2"])
    triples = join(pairs, ["x", "y1", "y2"], differ, ["y1", "y2"])
    empty, w = is_empty(triples)
    if not empty:
        x, y1, y2 = valuation(w, (r, r, r))
        return Verdict(False, {"x": x, "y1": y1, "y2": y2}, "two values above x")
    dom = normalize_closed(project(sat, [0]))
    ok, w = is_universal_closed(complete(dom))
    if not ok:
        return Verdict(False, {"x": valuation(w, (r,))[0]}, "x outside the domain")
    return Verdict(True)


def is_continuous(a: Automaton) -> Verdict:
    """Continuity of the function whose graph ``a`` presents.

    A total function with closed graph on [0,1] is continuous, so a closed
    presentation only needs the function check.  For a non-closed presentation
    the graph is continuous exactly when its closure is still single-valued.
    """
    t = trim(a)
    if is_closed(t):
        fn = is_function(t)
        if not fn:
            raise NotAFunction(fn.reason)
        return Verdict(True)
    fn = is_function(t.with_accepting(t.states))
    return Verdict(fn.holds, fn.witness, fn.reason or "closure of the graph is a function")


def deterministic_presentation(a: Automaton) -> Automaton:
    """Trim closed deterministic automaton with the same value set."""
    t = trim(a)
    if not is_closed(t):
        raise NotClosed("expected a closed automaton")
    if t.is_deterministic():
        return t
    return normalize_closed(t)


def _require_full_input(a: Automaton) -> Automaton:
    t = trim(a)
    if not is_closed(t):
        raise NotClosed("expected a closed automaton")
    if not t.is_deterministic():
        raise NotDeterministic("expected a deterministic automaton")
    return t


def sink_projection_full(a: Automaton, sink: Iterable, q) -> bool:
    """Does the sub-automaton on ``sink`` started at ``q`` project onto all of [0,1]?"""
    sink = frozenset(sink)
    if sink not in sinks(a) or q not in sink:
        raise UnknownSink(f"{sorted(sink)} / {q!r} is not a sink of the automaton")
    sub = a.restrict(sink, [q])
    try:
        shadow = project(trim(sub), [0])
    except EmptyLanguage:
        return False
    return value_universal(shadow).holds


def make_full(a: Automaton) -> Automaton:
    """Delete sinks none of whose states projects onto [0,1]; repeat until none."""
    a = _require_full_input(a)
    _radix_of(a)
    while True:
        for sink in sinks(a):
            if not any(sink_projection_full(a, sink, q) for q in sorted(sink)):
                a = trim(a.restrict(set(a.states) - sink))
                break
        else:
            return a


def sink_affine(a: Automaton, sink: Iterable, q) -> AffinePiece:
    """Slope and intercept of the affine graph accepted from ``q`` inside ``sink``."""
    sink = frozenset(sink)
    r = _radix_of(a)
    if not sink_projection_full(a, sink, q):
        raise NotAffineSink(f"sink {sorted(sink)} at {q!r} is not full")
    sub = trim(a.restrict(sink, [q]))
    beta = eval_function(sub, 0)
    alpha = eval_function(sub, 1) - beta
    try:
        target = affine_graph_automaton(alpha, beta, r)
    except RangeViolation as exc:
        raise NotAffineSink(str(exc)) from exc
    if not language_equal(saturate(sub), target):
        raise NotAffineSink(f"sink {sorted(sink)} at {q!r} is not the graph of "
                            f"{alpha}*x + {beta}")
    return AffinePiece(alpha, beta, sink, q)


def merge_intervals(intervals: Iterable) -> list:
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def _measure(intervals: Iterable, upto=None) -> Fraction:
    total = Fraction(0)
    for lo, hi in merge_intervals(intervals):
        if upto is not None:
            hi = min(hi, upto)
        if hi > lo:
            total += hi - lo
    return total


def slope_set(a: Automaton, depth: int) -> PiecewiseReport:
    """Slopes of all full sinks plus the depth-bounded affine witness intervals.

    Witnesses are the path labels of length at most ``depth`` that first reach
    a full-sink entry state from the initial state; deeper labels through the
    same entry give sub-intervals and are not listed.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    full = make_full(a)
    r = _radix_of(full)
    pieces = []
    for sink in sinks(full):
        for q in sorted(sink):
            if sink_projection_full(full, sink, q):
                pieces.append(sink_affine(full, sink, q))
    entry = {p.entry: p.alpha for p in pieces}
    (q0,) = full.initial
    witnesses = []
    stack = [(q0, 0, 0)]  # state, depth, integer prefix of x
    while stack:
        q, n, xint = stack.pop()
        if q in entry:
            witnesses.append(WitnessInterval(Fraction(xint, r**n), n, entry[q], r))
            continue
        if n == depth:
            continue
        for d, ts in full.succ.get(q, {}).items():
            stack.append((ts[0], n + 1, xint * r + d[0]))
    witnesses.sort(key=lambda w: (w.left, w.depth, w.slope))
    by_slope = {}
    for w in witnesses:
        by_slope.setdefault(w.slope, []).append((w.left, w.right))
    covered = _measure((w.left, w.right) for w in witnesses)
    return PiecewiseReport({p.alpha for p in pieces}, pieces, witnesses, depth, covered,
                           by_slope)


def sum_form_check(a: Automaton, t, depth: int) -> Fraction:
    """``|f(t) - (f(0) + sum_i slope_i * |U_i ∩ [0,t]|)|`` with each ``U_i`` the
    union of depth-bounded witness intervals of slope ``slope_i``."""
    t = as_fraction(t)
    report = slope_set(a, depth)
    f0 = eval_function(a, 0)
    ft = eval_function(a, t)
    total = f0 + sum((alpha * _measure(ivs, upto=t) for alpha, ivs in report.by_slope.items()),
                     Fraction(0))
    return abs(ft - total)


def midpoint_graphs(a: Automaton):
    """Recognizers over (x, y, z) for ``z = f((x+y)/2)`` and ``z = (f(x)+f(y))/2``."""
    r = _radix_of(a)
    graph = saturate(a)
    mid = midpoint_relation_automaton(r)
    f_of_mid = normalize_closed(
        join(mid, ["x", "y", "m"], graph, ["m", "z"], out_vars=["x", "y", "z"]))
    half = normalize_closed(
        join(graph, ["x", "u"], mid, ["u", "v", "z"], out_vars=["x", "v", "z"]))
    mean_of_f = normalize_closed(
        join(half, ["x", "v", "z"], graph, ["y", "v"], out_vars=["x", "y", "z"]))
    return f_of_mid, mean_of_f


def is_differentiable(a: Automaton, check: bool = True) -> Verdict:
    """Differentiability of a continuous regular function, decided as affineness.

    Builds the set of pairs ``(x, y)`` where ``f((x+y)/2) == (f(x)+f(y))/2`` and
    tests whether it is all of ``[0,1]^2``.  A negative verdict carries a
    rational pair breaking the midpoint identity, re-verified exactly.
    """
    r = _radix_of(a)
    if check:
        fn = is_function(a)
        if not fn:
            raise NotAFunction(fn.reason)
    f_of_mid, mean_of_f = midpoint_graphs(a)
    xyz = ["x", "y", "z"]
    agree = normalize_closed(join(f_of_mid, xyz, mean_of_f, xyz, out_vars=["x", "y"]))
    agree = saturate(agree)
    ok, w = is_universal_closed(complete(agree))
    if ok:
        return Verdict(True)
    x, y = valuation(w, (r, r))
    fx, fy = eval_function(a, x), eval_function(a, y)
    fm = eval_function(a, (x + y) / 2)
    if fm == (fx + fy) / 2:
        raise AssertionError(f"counterexample ({x}, {y}) does not break the midpoint identity")
    return Verdict(False, {"x": x, "y": y, "f(x)": fx, "f(y)": fy, "f((x+y)/2)": fm},
                   "midpoint identity fails")


def path_count_ratios(a: Automaton, p, n: int) -> dict:
    """``|P_{p,q}(n)| / r^n`` for every state ``q``, plus the union over ``q``."""
    r = a.radix[0]
    out = {q: Fraction(path_label_count(a, p, q, n).count, r**n) for q in a.states}
    out[None] = Fraction(path_label_count(a, p, None, n).count, r**n)
    return out
