"""
Language-level operations on weak and closed Büchi automata.

Products assume weak inputs (acceptance constant on every SCC), where the
conjunctive product is language-exact.  Determinization is restricted to closed
automata: after trimming, their languages are safety languages and the plain
subset construction is exact.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .automaton import (
    Automaton,
    Lasso,
    _tarjan,
    complete,
    is_closed,
    is_weak,
    renumber,
    trim,
)
from .errors import (
    BadCoordinates,
    EmptyLanguage,
    NotClosed,
    NotComplete,
    NotDeterministic,
    NotWeak,
    RadixMismatch,
    ResourceCap,
)

__all__ = [
    "Lasso", "join", "product_intersect", "product_union", "project",
    "determinize_closed", "complement_det", "is_empty", "find_lasso",
    "is_universal_closed", "normalize_closed", "minimize_safety", "includes",
    "language_equal",
]

SUBSET_CAP = 2**20


def _require_weak(*autos):
    for a in autos:
        if not is_weak(a):
            raise NotWeak("product construction needs weak automata")


def join(a: Automaton, a_vars: Sequence, b: Automaton, b_vars: Sequence,
         out_vars: Sequence | None = None, accept: str = "and") -> Automaton:
    """Synchronized product over named coordinates.

    Coordinates of ``a`` and ``b`` are named by ``a_vars`` and ``b_vars``; letters
    must agree on shared names.  The result ranges over ``a_vars`` followed by the
    new names of ``b_vars``, or over ``out_vars`` when given (the remaining
    coordinates are projected away existentially).
    """
    a_vars, b_vars = list(a_vars), list(b_vars)
    if len(a_vars) != a.arity or len(b_vars) != b.arity:
        raise BadCoordinates("variable list does not match automaton arity")
    radix = dict(zip(a_vars, a.radix))
    for v, r in zip(b_vars, b.radix):
        if radix.setdefault(v, r) != r:
            raise RadixMismatch(f"coordinate {v!r}: radix {radix[v]} vs {r}")
    _require_weak(a, b)
    all_vars = a_vars + [v for v in b_vars if v not in a_vars]
    out_vars = all_vars if out_vars is None else list(out_vars)
    if not set(out_vars) <= set(all_vars) or len(set(out_vars)) != len(out_vars):
        raise BadCoordinates(f"bad output coordinates {out_vars}")

    shared_a = [a_vars.index(v) for v in b_vars if v in a_vars]
    shared_b = [j for j, v in enumerate(b_vars) if v in a_vars]
    extra_b = [j for j, v in enumerate(b_vars) if v not in a_vars]
    out_pos = [all_vars.index(v) for v in out_vars]

    b_index = {}
    for s, d, t in b.transitions:
        key = tuple(d[j] for j in shared_b)
        b_index.setdefault(s, {}).setdefault(key, []).append((tuple(d[j] for j in extra_b), t))

    init = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
    ids = {pq: i for i, pq in enumerate(init)}
    todo = deque(init)
    trans = set()
    while todo:
        p, q = todo.popleft()
        src = ids[(p, q)]
        bq = b_index.get(q)
        if not bq:
            continue
        for d, targets in a.succ.get(p, {}).items():
            matches = bq.get(tuple(d[i] for i in shared_a))
            if not matches:
                continue
            for pt in targets:
                for ext, qt in matches:
                    full = d + ext
                    letter = tuple(full[i] for i in out_pos)
                    node = (pt, qt)
                    if node not in ids:
                        ids[node] = len(ids)
                        todo.append(node)
                    trans.add((src, letter, ids[node]))
    if accept == "and":
        acc = [i for (p, q), i in ids.items() if p in a.accepting and q in b.accepting]
    else:
        acc = [i for (p, q), i in ids.items() if p in a.accepting or q in b.accepting]
    name = lambda i: f"s{i}"
    return Automaton(
        tuple(radix[v] for v in out_vars),
        tuple(name(i) for i in range(len(ids))),
        frozenset((name(s), d, name(t)) for s, d, t in trans),
        frozenset(name(ids[pq]) for pq in init),
        frozenset(name(i) for i in acc),
    )


def _same_radix(a: Automaton, b: Automaton):
    if a.radix != b.radix:
        raise RadixMismatch(f"{a.radix} vs {b.radix}")


def product_intersect(a: Automaton, b: Automaton) -> Automaton:
    _same_radix(a, b)
    vs = list(range(a.arity))
    return join(a, vs, b, vs)


def product_union(a: Automaton, b: Automaton) -> Automaton:
    _same_radix(a, b)
    for x in (a, b):
        if not x.is_deterministic():
            raise NotDeterministic("product_union needs deterministic automata")
        if not x.is_complete():
            raise NotComplete("product_union needs complete automata")
    vs = list(range(a.arity))
    return join(a, vs, b, vs, accept="or")


def reorder(a: Automaton, keep: Sequence[int]) -> Automaton:
    """Relabel letters to the coordinates ``keep`` (any order, no checks)."""
    keep = list(keep)
    return Automaton(
        tuple(a.radix[i] for i in keep),
        a.states,
        frozenset((s, tuple(d[i] for i in keep), t) for s, d, t in a.transitions),
        a.initial,
        a.accepting,
    )


def project(a: Automaton, keep: Sequence[int]) -> Automaton:
    """Existential projection onto the coordinates ``keep`` (strictly increasing)."""
    keep = list(keep)
    if (not keep or any(i < 0 or i >= a.arity for i in keep)
            or any(x >= y for x, y in zip(keep, keep[1:]))):
        raise BadCoordinates(f"invalid coordinate list {keep} for arity {a.arity}")
    return reorder(a, keep)


def _trim_or_none(a: Automaton):
    try:
        return trim(a)
    except EmptyLanguage:
        return None


def _subset_dfa(a: Automaton) -> Automaton:
    """Subset construction on a trim closed automaton; result is a partial DFA
    whose states all accept (missing letters lead to rejection)."""
    start = frozenset(a.initial)
    ids = {start: 0}
    todo = deque([start])
    trans = []
    succ = a.succ
    while todo:
        subset = todo.popleft()
        moves = {}
        for q in subset:
            for d, ts in succ.get(q, {}).items():
                moves.setdefault(d, set()).update(ts)
        for d in sorted(moves):
            tgt = frozenset(moves[d])
            if tgt not in ids:
                if len(ids) >= SUBSET_CAP:
                    raise ResourceCap(f"subset construction exceeds {SUBSET_CAP} states")
                ids[tgt] = len(ids)
                todo.append(tgt)
            trans.append((ids[subset], d, ids[tgt]))
    names = [f"s{i}" for i in range(len(ids))]
    return Automaton(a.radix, tuple(names),
                     frozenset((names[s], d, names[t]) for s, d, t in trans),
                     frozenset([names[0]]), frozenset(names))


def _closed_trim(a: Automaton):
    t = _trim_or_none(a)
    if t is not None and not is_closed(t):
        raise NotClosed("operation needs a closed automaton")
    return t


def determinize_closed(a: Automaton) -> Automaton:
    """Deterministic complete automaton for the language of a closed automaton.

    Every subset state accepts; a fresh non-accepting sink absorbs missing
    letters.  The input is trimmed first.
    """
    t = _closed_trim(a)
    if t is None:
        return complete(Automaton.empty(a.radix).with_accepting([]))
    return complete(_subset_dfa(t))


def minimize_safety(a: Automaton) -> Automaton:
    """Moore partition refinement for a trim deterministic closed automaton
    whose missing transitions mean rejection."""
    states = list(a.states)
    block = {q: 0 for q in states}
    n_blocks = 1
    while True:
        sigs = {}
        new_block = {}
        for q in states:
            sig = (block[q], tuple(sorted((d, block[ts[0]]) for d, ts in a.succ.get(q, {}).items())))
            new_block[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == n_blocks:
            break
        block, n_blocks = new_block, len(sigs)
    trans = {(block[s], d, block[t]) for s, d, t in a.transitions}
    q0 = next(iter(a.initial))
    names = [f"b{i}" for i in range(n_blocks)]
    m = Automaton(a.radix, tuple(names),
                  frozenset((names[s], d, names[t]) for s, d, t in trans),
                  frozenset([names[block[q0]]]), frozenset(names))
    return renumber(m)


def normalize_closed(a: Automaton) -> Automaton:
    """Trimmed, minimal, deterministic presentation of a closed language.

    Returns ``Automaton.empty`` for the empty language.
    """
    t = _closed_trim(a)
    if t is None:
        return Automaton.empty(a.radix)
    return minimize_safety(_subset_dfa(t))


def complement_det(a: Automaton) -> Automaton:
    if not a.is_deterministic():
        raise NotDeterministic("complement needs a deterministic automaton")
    if not a.is_complete():
        raise NotComplete("complement needs a complete automaton")
    if not is_weak(a):
        raise NotWeak("complement by flipping acceptance needs a weak automaton")
    return a.with_accepting(set(a.states) - a.accepting)


def _bfs_paths(a: Automaton, source, allowed=None) -> dict:
    """Lexicographically least shortest label word from ``source`` to every
    reachable state (optionally staying inside ``allowed``)."""
    paths = {source: ()}
    todo = deque([source])
    while todo:
        q = todo.popleft()
        for d in sorted(a.succ.get(q, {})):
            for t in a.succ[q][d]:
                if t not in paths and (allowed is None or t in allowed):
                    paths[t] = paths[q] + (d,)
                    todo.append(t)
    return paths


def find_lasso(a: Automaton):
    """Shortest accepted lasso (ties broken lexicographically), or None."""
    prefixes = {}
    for q0 in sorted(a.initial, key=repr):
        for q, w in _bfs_paths(a, q0).items():
            if q not in prefixes or (len(w), w) < (len(prefixes[q]), prefixes[q]):
                prefixes[q] = w
    reachable = set(prefixes)
    sub = {q: {t for t in a.graph.get(q, ()) if t in reachable} for q in reachable}
    best = None
    for comp in _tarjan(sorted(reachable, key=repr), sub):
        cset = set(comp)
        accepting = [q for q in comp if q in a.accepting]
        nontrivial = len(comp) > 1 or comp[0] in sub.get(comp[0], ())
        if not nontrivial or not accepting:
            continue
        inner = {q: _bfs_paths(a, q, cset) for q in comp}
        for q in comp:
            for f in accepting:
                if q != f:
                    cyc = inner[q][f] + inner[f][q]
                else:
                    options = []
                    for d in sorted(a.succ.get(q, {})):
                        for s in a.succ[q][d]:
                            if s in cset:
                                options.append((d,) + inner[s][q])
                    cyc = min(options, key=lambda w: (len(w), w))
                pre = prefixes[q]
                key = (len(pre) + len(cyc), pre + cyc, len(pre))
                if best is None or key < best[0]:
                    best = (key, pre, cyc)
    if best is None:
        return None
    return Lasso(best[1], best[2])


def is_empty(a: Automaton):
    """``(True, None)`` when the language is empty, else ``(False, witness)``."""
    w = find_lasso(a)
    return (w is None, w)


def is_universal_closed(a: Automaton):
    """``(True, None)`` if ``a`` accepts every word, else ``(False, counterexample)``."""
    empty, w = is_empty(complement_det(a))
    return (empty, w)


def _dfa_for(b: Automaton) -> Automaton:
    if b.is_deterministic() and b.is_complete() and is_weak(b):
        return b
    return complete(normalize_closed(b))


def includes(a: Automaton, b: Automaton):
    """Check L(a) ⊆ L(b) for weak ``a`` and closed (or deterministic complete
    weak) ``b``.  Returns ``(holds, witness in L(a) \\ L(b))``."""
    _same_radix(a, b)
    diff = product_intersect(a, complement_det(_dfa_for(b)))
    empty, w = is_empty(diff)
    return (empty, w)


def language_equal(a: Automaton, b: Automaton) -> bool:
    return includes(a, b)[0] and includes(b, a)[0]
