"""
Fractal geometry of value sets: graph-directed IFS, box covers, residuals,
porosity and box-counting bounds.

A transition labelled ``d`` shrinks the unit cube by the similarity
``x -> (x + d) / r`` (coordinatewise, ratio ``r_i`` on coordinate ``i``), so the
value set of a closed automaton is the attractor of these maps.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .automaton import Automaton, Lasso, complete, trim
from .errors import EmptyLanguage, NotNowhereDense, ResourceCap
from .omega import (
    complement_det,
    is_empty,
    is_universal_closed,
    join,
    language_equal,
    normalize_closed,
)
from .reals import lasso_automaton, saturate

BOX_BUDGET = 10**7


@dataclass(frozen=True)
class GdifsEdge:
    source: str
    target: str
    shift: tuple

    def apply(self, point, ratios):
        return tuple((Fraction(x) + s) / r for x, s, r in zip(point, self.shift, ratios))


@dataclass(frozen=True)
class Gdifs:
    vertices: tuple
    edges: tuple
    ratios: tuple

    def maps_from(self, v) -> list:
        return [e for e in self.edges if e.source == v]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "ratios": list(self.ratios),
            "edges": [{"from": e.source, "to": e.target, "shift": list(e.shift)}
                      for e in self.edges],
        }


def gdifs_of(a: Automaton) -> Gdifs:
    """One vertex per state and one similarity ``(x + shift) / r`` per transition."""
    edges = tuple(GdifsEdge(s, t, d) for s, d, t in sorted(a.transitions))
    return Gdifs(tuple(sorted(a.states)), edges, a.radix)


@dataclass(frozen=True)
class BoxCover:
    depth: int
    radix: tuple
    boxes: tuple  # sorted integer multi-indices

    def __len__(self):
        return len(self.boxes)

    def box(self, m) -> list:
        """``[(lo, hi), ...]`` per coordinate for multi-index ``m``."""
        return [(Fraction(i, r**self.depth), Fraction(i + 1, r**self.depth))
                for i, r in zip(m, self.radix)]

    def contains(self, point) -> bool:
        box_set = set(self.boxes)
        candidates = [[]]
        for x, r in zip(point, self.radix):
            x = Fraction(x)
            scaled = x * r**self.depth
            lo = int(scaled)
            opts = {min(lo, r**self.depth - 1)}
            if scaled == lo and lo > 0:
                opts.add(lo - 1)  # shared face of two boxes
            candidates = [c + [i] for c in candidates for i in sorted(opts)]
        return any(tuple(c) in box_set for c in candidates)

    def refines(self, coarser: "BoxCover") -> bool:
        """Is every box here inside a box of ``coarser`` (a cover of lower depth)?"""
        gap = self.depth - coarser.depth
        parents = set(coarser.boxes)
        scale = [r**gap for r in self.radix]
        return all(tuple(i // s for i, s in zip(m, scale)) in parents for m in self.boxes)

    def project(self, coords) -> set:
        return {tuple(m[i] for i in coords) for m in self.boxes}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k"] + [f"m{i + 1}" for i in range(len(self.radix))])
        for m in self.boxes:
            w.writerow([self.depth, *m])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"depth": self.depth, "radix": list(self.radix),
                "boxes": [list(m) for m in self.boxes]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def attractor_boxes(a: Automaton, depth: int) -> BoxCover:
    """Depth-``k`` r-adic boxes hit by length-``k`` path labels of the trimmed
    automaton, starting from its initial states."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    try:
        t = trim(a)
    except EmptyLanguage:
        return BoxCover(depth, a.radix, ())
    zero = (0,) * a.arity
    frontier = {(q, zero) for q in t.initial}
    for _ in range(depth):
        nxt = set()
        for q, m in frontier:
            for d, ts in t.succ.get(q, {}).items():
                idx = tuple(i * r + x for i, r, x in zip(m, a.radix, d))
                for s in ts:
                    nxt.add((s, idx))
            if len(nxt) > BOX_BUDGET:
                raise ResourceCap(f"box enumeration exceeds {BOX_BUDGET} states")
        frontier = nxt
    return BoxCover(depth, a.radix, tuple(sorted({m for _, m in frontier})))


def box_measure_estimate(a: Automaton, depth: int) -> Fraction:
    """Total length of the depth-``k`` box cover of a one-dimensional value set."""
    if a.arity != 1:
        raise ValueError("box measure is defined for one coordinate")
    cover = attractor_boxes(a, depth)
    return Fraction(len(cover), a.radix[0] ** depth)


@dataclass(frozen=True)
class KernelResidual:
    representative: str
    members: tuple
    automaton: Automaton


def _residual(a: Automaton, q) -> Automaton:
    return a.with_initial([q])


def kernel_residuals(a: Automaton) -> list:
    """States of the trimmed deterministic automaton grouped by residual language.

    Each class is one window-and-rescale of the value set; their number is
    finite by construction.
    """
    t = trim(a)
    det = t if t.is_deterministic() else normalize_closed(t)
    dfa = complete(det)
    classes = []
    for q in sorted(det.states):
        res = _residual(dfa, q)
        for cls in classes:
            if language_equal(res, cls[1]):
                cls[0].append(q)
                break
        else:
            classes.append(([q], res))
    return [KernelResidual(m[0], tuple(m), res) for m, res in classes]


@dataclass(frozen=True)
class PorosityWitness:
    k: int
    m: int
    r: int
    constant: Fraction

    @property
    def interval(self) -> tuple:
        return (Fraction(self.m, self.r**self.k), Fraction(self.m + 1, self.r**self.k))


def _digits(m: int, k: int, r: int) -> list:
    out = []
    for _ in range(k):
        out.append(m % r)
        m //= r
    return out[::-1]


def porosity_witness(a: Automaton) -> PorosityWitness:
    """Smallest ``k`` and then smallest ``m`` such that the open interval
    ``(m r^-k, (m+1) r^-k)`` misses every residual value set.

    The set is then ``2 r^-(k+1)``-porous.
    """
    if a.arity != 1:
        raise ValueError("porosity is checked for one coordinate")
    r = a.radix[0]
    sat = saturate(a)
    if not sat.accepting:
        return PorosityWitness(1, 0, r, Fraction(2, r**2))
    dfa = complete(sat)
    states = sorted(trim(dfa).states)
    for q in states:
        if is_universal_closed(_residual(dfa, q))[0]:
            raise NotNowhereDense(f"residual at {q} fills [0, 1]")
    ends = complement_det(complete(lasso_automaton(
        [Lasso([], [(0,)]), Lasso([], [(r - 1,)])], (r,))))
    interior_cache = {}

    def hits_interior(p) -> bool:
        # does L(p) contain a word other than 0^w and (r-1)^w ?
        if p not in interior_cache:
            rest = join(_residual(dfa, p), [0], ends, [0])
            interior_cache[p] = not is_empty(rest)[0]
        return interior_cache[p]

    for k in range(1, len(states) + 1):
        for m in range(r**k):
            word = _digits(m, k, r)
            ok = True
            for q in states:
                p = q
                for d in word:
                    p = dfa.step(p, (d,))
                if hits_interior(p):
                    ok = False
                    break
            if ok:
                return PorosityWitness(k, m, r, Fraction(2, r ** (k + 1)))
    raise NotNowhereDense(f"no gap interval up to depth {len(states)}")


def cover_counts(a: Automaton, depths) -> dict:
    """Number of boxes per depth, for box-counting plots."""
    return {k: len(attractor_boxes(a, k)) for k in depths}

