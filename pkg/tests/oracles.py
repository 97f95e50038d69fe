"""Brute-force reference implementations used by the tests.

Nothing here calls into regreal except to read an automaton's fields, so a
bug in the library cannot hide behind the same bug in its oracle.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from regreal.automaton import Automaton, Lasso


def run_graph(a: Automaton, w: Lasso):
    """Explicit product of the automaton's runs with the positions of ``w``."""
    n = len(w.prefix) + len(w.cycle)

    def letter(i):
        return w.prefix[i] if i < len(w.prefix) else w.cycle[i - len(w.prefix)]

    def nxt(i):
        return len(w.prefix) if i + 1 == n else i + 1

    edges = {}
    for s, d, t in a.transitions:
        edges.setdefault((s, d), []).append(t)
    start = {(q, 0) for q in a.initial}
    graph, todo = {}, list(start)
    seen = set(start)
    while todo:
        q, i = todo.pop()
        outs = [(t, nxt(i)) for t in edges.get((q, letter(i)), [])]
        graph[(q, i)] = outs
        for o in outs:
            if o not in seen:
                seen.add(o)
                todo.append(o)
    return graph


def _returns(graph, node) -> bool:
    todo, seen = list(graph.get(node, [])), set()
    while todo:
        x = todo.pop()
        if x == node:
            return True
        if x not in seen:
            seen.add(x)
            todo.extend(graph.get(x, []))
    return False


def oracle_accepts(a: Automaton, w: Lasso) -> bool:
    """Büchi acceptance: some reachable accepting node lies on a cycle."""
    g = run_graph(a, w)
    return any(q in a.accepting and _returns(g, (q, i)) for q, i in g)


def oracle_has_run(a: Automaton, w: Lasso) -> bool:
    """Some infinite run exists, accepting or not."""
    g = run_graph(a, w)
    return any(_returns(g, node) for node in g)


def oracle_value(digits, cycle, r) -> Fraction:
    """Value of ``digits . cycle^w`` by solving ``v = S + r^-L v`` for the cycle."""
    s = sum(Fraction(d, r ** (j + 1)) for j, d in enumerate(cycle))
    v_cycle = s / (1 - Fraction(1, r ** len(cycle)))
    v = v_cycle
    for d in reversed(digits):
        v = (d + v) / r
    return v


def has_value(w: Lasso, q: Fraction, r: int) -> bool:
    """Does the one-coordinate word ``w`` denote ``q``?  Follows the orbit
    ``x -> r*x - digit`` in integers scaled by the denominator: the word denotes
    ``q`` exactly when the orbit stays in [0, 1] and closes up over the cycle."""
    den = q.denominator
    n = q.numerator
    for (d,) in w.prefix:
        n = r * n - d * den
        if not 0 <= n <= den:
            return False
    start = n
    for (d,) in w.cycle:
        n = r * n - d * den
        if not 0 <= n <= den:
            return False
    return n == start


def oracle_values(w: Lasso, radix) -> tuple:
    return tuple(
        oracle_value([x[i] for x in w.prefix], [x[i] for x in w.cycle], r)
        for i, r in enumerate(radix))


def _dual_track(prefix, cycle, r):
    """The other expansion of a one-coordinate word, or None."""
    if all(d == 0 for d in cycle):
        low, high, new_tail = 0, r - 1, r - 1
        step = -1
    elif all(d == r - 1 for d in cycle):
        low, high, new_tail = r - 1, 0, 0
        step = 1
    else:
        return None
    prefix = list(prefix)
    for j in range(len(prefix) - 1, -1, -1):
        if prefix[j] != low:
            prefix[j] += step
            return prefix[:j + 1] + [high] * (len(prefix) - j - 1), [new_tail]
    return None  # value 0 or 1


def oracle_encodings(w: Lasso, radix) -> list:
    """``w`` together with every word obtained by swapping tails of some coordinates."""
    tracks = []
    for i, r in enumerate(radix):
        pre = [x[i] for x in w.prefix]
        cyc = [x[i] for x in w.cycle]
        opts = [(pre, cyc)]
        dual = _dual_track(pre, cyc, r)
        if dual:
            opts.append(dual)
        tracks.append(opts)
    out = []
    for combo in product(*tracks):
        plen = max(len(p) for p, _ in combo)
        per = 1
        for _, c in combo:
            per = per * len(c) // _gcd(per, len(c))

        def at(track, j):
            p, c = track
            return p[j] if j < len(p) else c[(j - len(p)) % len(c)]

        prefix = [tuple(at(t, j) for t in combo) for j in range(plen)]
        cycle = [tuple(at(t, j) for t in combo) for j in range(plen, plen + per)]
        out.append(Lasso(prefix, cycle))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def oracle_saturated_accepts(a: Automaton, w: Lasso) -> bool:
    return any(oracle_accepts(a, v) for v in oracle_encodings(w, a.radix))


def random_lasso(rng: random.Random, radix, max_prefix=4, max_cycle=3) -> Lasso:
    def letter():
        return tuple(rng.randrange(r) for r in radix)
    return Lasso([letter() for _ in range(rng.randint(0, max_prefix))],
                 [letter() for _ in range(rng.randint(1, max_cycle))])


def accepted_lasso(rng: random.Random, a: Automaton):
    """Random walk from an initial state until a state repeats; the loop gives
    a word accepted by a closed automaton (or None on a dead end)."""
    edges = {}
    for s, d, t in a.transitions:
        edges.setdefault(s, []).append((d, t))
    q = rng.choice(sorted(a.initial))
    states, letters = [q], []
    while True:
        outs = sorted(edges.get(q, []))
        if not outs:
            return None
        d, q = rng.choice(outs)
        letters.append(d)
        if q in states:
            k = states.index(q)
            return Lasso(letters[:k], letters[k:])
        states.append(q)


def random_closed_automaton(rng: random.Random, max_states=6, max_radix=3, max_arity=2,
                            radix=None) -> Automaton:
    """Random automaton whose cyclic states all accept; transient states may not."""
    while True:
        if radix is None:
            arity = rng.randint(1, max_arity)
            r = rng.randint(2, max_radix)
            rad = (r,) * arity
        else:
            rad = tuple(radix)
        n = rng.randint(1, max_states)
        names = [f"p{i}" for i in range(n)]
        letters = list(product(*(range(r) for r in rad)))
        density = rng.uniform(0.1, 0.5)
        trans = [(s, d, t) for s in names for d in letters for t in names
                 if rng.random() < density / n]
        initial = rng.sample(names, rng.randint(1, min(2, n)))
        a = Automaton.build(rad, trans, initial, accepting=names, states=names)
        # make states on no cycle non-accepting at random to exercise trim
        cyclic = {q for q in names if _on_cycle(a, q)}
        accepting = [q for q in names if q in cyclic or rng.random() < 0.5]
        a = Automaton.build(rad, trans, initial, accepting=accepting, states=names)
        w = accepted_lasso(rng, a)
        if w is not None and oracle_accepts(a, w):
            return a


def _on_cycle(a: Automaton, q) -> bool:
    g = {}
    for s, _, t in a.transitions:
        g.setdefault(s, []).append(t)
    return _returns(g, q)


# Cantor distance, transcribed independently as a transition table
FIG3 = {
    "q0": {(0, 0): "q0", (2, 0): "q0", (1, 0): "q1"},
    "q1": {(1, 1): "q1", (0, 0): "q2", (2, 0): "q3"},
    "q2": {(0, 0): "q2", (1, 1): "q2", (2, 2): "q2"},
    "q3": {(0, 2): "q3", (1, 1): "q3", (2, 0): "q3"},
}


def fig3_uncovered_count(k: int) -> int:
    """Number of length-``k`` x-digit strings whose run from q0 has not entered
    q2 or q3, found by enumerating all ``3**k`` strings."""
    count = 0
    for xs in product(range(3), repeat=k):
        q = "q0"
        for x in xs:
            q = next(t for (dx, _), t in FIG3[q].items() if dx == x)
            if q in ("q2", "q3"):
                break
        else:
            count += 1
    return count


def cantor_cover(depth: int) -> list:
    """Closed intervals of the depth-``k`` middle-thirds construction."""
    out = []
    for digits in product((0, 2), repeat=depth):
        m = 0
        for d in digits:
            m = 3 * m + d
        out.append((Fraction(m, 3**depth), Fraction(m + 1, 3**depth)))
    return out


def distance_to_cover(x, intervals) -> Fraction:
    x = Fraction(x)
    best = None
    for lo, hi in intervals:
        d = Fraction(0) if lo <= x <= hi else min(abs(x - lo), abs(x - hi))
        if best is None or d < best:
            best = d
    return best


def random_rational(rng: random.Random, max_den=30) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)
