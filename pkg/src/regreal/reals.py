"""
From words to reals and back.

Digits are read most-significant first: the word ``w`` over base ``r`` denotes
``sum(w[i] * r**-(i+1))``, so the first digit has weight ``1/r``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import gcd, lcm
from typing import Sequence

from .automaton import Automaton, Lasso, alphabet, is_uniform, renumber, trim
from .errors import (
    EmptyFiber,
    EmptyLanguage,
    MixedRadix,
    NotAFunction,
    NotClosed,
    OutOfRange,
    RangeViolation,
)
from .omega import find_lasso, join, language_equal, normalize_closed

__all__ = [
    "valuation", "encode_rational", "encodings_1d", "lasso_from_tracks",
    "linear_relation_automaton", "equal_value_automaton", "affine_graph_automaton",
    "midpoint_relation_automaton", "singleton_automaton", "lasso_automaton",
    "saturate", "eval_function", "as_fraction",
]


def as_fraction(q) -> Fraction:
    return q if isinstance(q, Fraction) else Fraction(q)


def _value(digits: Sequence[int], cycle: Sequence[int], r: int) -> Fraction:
    head = Fraction(0)
    for i, d in enumerate(digits, 1):
        head += Fraction(d, r**i)
    period = 0
    for d in cycle:
        period = period * r + d
    tail = Fraction(period, r**len(cycle) - 1)
    return head + tail / r**len(digits)


def valuation(w: Lasso, radix: Sequence[int]) -> tuple:
    """Exact value of each coordinate of an ultimately periodic word."""
    return tuple(
        _value([d[i] for d in w.prefix], [d[i] for d in w.cycle], r)
        for i, r in enumerate(radix)
    )


def encodings_1d(q, r: int) -> list:
    """All base-``r`` encodings of ``q`` in [0, 1] as single-coordinate lassos.

    The encoding without an all-``(r-1)`` tail comes first.
    """
    q = as_fraction(q)
    if not 0 <= q <= 1:
        raise OutOfRange(f"{q} is outside [0, 1]")
    if q == 1:
        return [Lasso([], [(r - 1,)])]
    if q == 0:
        return [Lasso([], [(0,)])]
    num, den = q.numerator, q.denominator
    # r-adic: den divides a power of r
    k, d = 0, den
    while d != 1:
        g = gcd(d, r)
        if g == 1:
            break
        d //= g
        k += 1
    if d == 1:
        m = num * r**k // den
        digits = []
        for _ in range(k):
            digits.append(m % r)
            m //= r
        digits.reverse()
        upper = Lasso([(x,) for x in digits], [(0,)])
        lowered = digits[:]
        i = len(lowered) - 1
        lowered[i] -= 1  # last digit is nonzero since k is minimal
        lower = Lasso([(x,) for x in lowered], [(r - 1,)])
        return [upper, lower]
    # periodic long division
    digits, seen = [], {}
    rem = num
    while rem not in seen:
        seen[rem] = len(digits)
        rem *= r
        digits.append(rem // den)
        rem %= den
    start = seen[rem]
    return [Lasso([(x,) for x in digits[:start]], [(x,) for x in digits[start:]])]


def lasso_from_tracks(tracks: Sequence[Lasso]) -> Lasso:
    """Zip single-coordinate lassos into one multi-coordinate lasso."""
    pre = max(len(t.prefix) for t in tracks)
    per = lcm(*(len(t.cycle) for t in tracks))
    prefix = [tuple(t.letter(i)[0] for t in tracks) for i in range(pre)]
    cycle = [tuple(t.letter(i)[0] for t in tracks) for i in range(pre, pre + per)]
    return Lasso(prefix, cycle)


def encode_rational(q, radix: Sequence[int]) -> list:
    """Every ultimately periodic encoding of the rational point ``q``."""
    if not isinstance(q, (tuple, list)):
        q = (q,)
    if len(q) != len(radix):
        raise ValueError("point and radix vector differ in length")
    per_coord = [encodings_1d(x, r) for x, r in zip(q, radix)]
    return [lasso_from_tracks(combo) for combo in cartesian(*per_coord)]


def linear_relation_automaton(coeffs: Sequence[int], const: int, r: int) -> Automaton:
    """Recognize ``{z in [0,1]^n : sum(coeffs[j] * z[j]) + const == 0}`` in base ``r``.

    After ``n`` digits the carry ``c = sum(a_j Z_j) + const * r**n`` (``Z_j`` the
    integer read so far on track ``j``) must equal ``-sum(a_j t_j)`` for the
    unread tails ``t_j``, hence stays in a fixed interval; it leaves that
    interval exactly when the relation fails.
    """
    coeffs = [int(c) for c in coeffs]
    lo = -sum(c for c in coeffs if c > 0)
    hi = -sum(c for c in coeffs if c < 0)
    radix = (r,) * len(coeffs)
    letters = alphabet(radix)
    start = int(const)
    if not lo <= start <= hi:
        return Automaton.empty(radix)
    trans, seen, todo = [], {start}, [start]
    while todo:
        c = todo.pop()
        for d in letters:
            nxt = r * c + sum(a * x for a, x in zip(coeffs, d))
            if lo <= nxt <= hi:
                trans.append((c, d, nxt))
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    a = Automaton.build(radix, [(f"c{s}", d, f"c{t}") for s, d, t in trans], [f"c{start}"])
    assert all(lo <= c <= hi for c in seen)
    try:
        return renumber(trim(a))
    except EmptyLanguage:
        return Automaton.empty(radix)


def equal_value_automaton(r: int) -> Automaton:
    """Pairs of base-``r`` words with equal value (three states)."""
    return linear_relation_automaton((1, -1), 0, r)


def affine_graph_automaton(alpha, beta, r: int) -> Automaton:
    """Recognize the graph of ``x -> alpha*x + beta`` over [0, 1]."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if not (0 <= beta <= 1 and 0 <= alpha + beta <= 1):
        raise RangeViolation(f"{alpha}*x + {beta} leaves [0, 1]")
    den = lcm(alpha.denominator, beta.denominator)
    p, s = int(alpha * den), int(beta * den)
    # den*y - p*x - s == 0
    return linear_relation_automaton((-p, den), -s, r)


def midpoint_relation_automaton(r: int) -> Automaton:
    """Triples ``(x, y, m)`` with ``2m = x + y``."""
    return linear_relation_automaton((1, 1, -2), 0, r)


def lasso_automaton(words: Sequence[Lasso], radix: Sequence[int]) -> Automaton:
    """Deterministic closed automaton accepting exactly the given lassos."""
    trans, init = [], []
    for k, w in enumerate(words):
        n = w.positions()
        names = [f"w{k}_{i}" for i in range(n)]
        init.append(names[0])
        for i in range(n):
            trans.append((names[i], w.letter(i), names[w.next_position(i)]))
    return normalize_closed(Automaton.build(radix, trans, init))


def singleton_automaton(point: Sequence, radix: Sequence[int]) -> Automaton:
    """All encodings of a rational point.  ``None`` entries leave that coordinate
    free, giving fibers such as ``{q} x [0, 1]``."""
    point = list(point) if isinstance(point, (tuple, list)) else [point]
    if len(point) != len(radix):
        raise ValueError("point and radix vector differ in length")
    result, vars_ = None, []
    for i, (x, r) in enumerate(zip(point, radix)):
        if x is None:
            part = Automaton.universal((r,))
        else:
            part = lasso_automaton(encodings_1d(x, r), (r,))
        if result is None:
            result, vars_ = part, [i]
        else:
            result = join(result, vars_, part, [i])
            vars_.append(i)
    return normalize_closed(result)


def _require_uniform(a: Automaton):
    if not is_uniform(a.radix):
        raise MixedRadix(f"operation needs a uniform radix, got {a.radix}")


def saturate(a: Automaton) -> Automaton:
    """Close the language of a closed automaton under equality of values.

    One coordinate at a time, the automaton is joined with the equal-value
    relation on (old, fresh) and the old coordinate is projected away.
    """
    _require_uniform(a)
    r = a.radix[0]
    eq = equal_value_automaton(r)
    cur = normalize_closed(a)
    if not cur.accepting:
        return cur
    n = a.arity
    for i in range(n):
        vars_ = list(range(n))
        out = vars_[:i] + ["new"] + vars_[i + 1:]
        cur = normalize_closed(join(cur, vars_, eq, [i, "new"], out_vars=out))
    return cur


def eval_function(graph: Automaton, x, strict: bool = False) -> Fraction:
    """Value at the rational ``x`` of the function whose graph ``graph`` accepts.

    With ``strict``, also confirm that the fiber over ``x`` holds a single value
    (raises NotAFunction otherwise).
    """
    if graph.arity != 2:
        raise NotAFunction("graph automaton must have two coordinates")
    _require_uniform(graph)
    r = graph.radix[0]
    fiber = singleton_automaton((x, None), graph.radix)
    ys = join(graph, [0, 1], fiber, [0, 1], out_vars=[1])
    w = find_lasso(ys)
    if w is None:
        raise EmptyFiber(f"no point of the graph above x = {x}")
    y = valuation(w, (r,))[0]
    if strict:
        try:
            sat = saturate(ys)
        except NotClosed:
            sat = None
        if sat is not None and not language_equal(sat, singleton_automaton((y,), (r,))):
            raise NotAFunction(f"several values above x = {x}")
    return y
