"""
Büchi automata over digit-tuple alphabets and their structural algorithms.

An automaton reads infinite words whose letters are tuples of digits, one digit
per coordinate, coordinate ``i`` written in base ``radix[i]``.  Automata are
immutable; every operation returns a new object.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import EmptyLanguage, NotDeterministic, ResourceCap, UnknownState

Letter = tuple
Transition = tuple  # (source, letter, target)

PATH_COUNT_BUDGET = 10**7


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic word ``prefix · cycle^ω``."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(tuple(x) for x in self.prefix))
        object.__setattr__(self, "cycle", tuple(tuple(x) for x in self.cycle))
        if not self.cycle:
            raise ValueError("lasso cycle must be nonempty")

    def letter(self, i: int) -> Letter:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def positions(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def next_position(self, i: int) -> int:
        i += 1
        return len(self.prefix) if i == self.positions() else i

    def track(self, coord: int) -> "Lasso":
        """Single-coordinate lasso for coordinate ``coord``."""
        return Lasso([(d[coord],) for d in self.prefix], [(d[coord],) for d in self.cycle])

    def __str__(self):
        return format_lasso(self)


def _digit_char(d: int) -> str:
    return "0123456789abcdefghijklmnopqrstuvwxyz"[d]


def format_lasso(w: Lasso) -> str:
    """Render as ``prefix(cycle)`` per coordinate, coordinates joined by ``,``."""
    arity = len(w.cycle[0])
    parts = []
    for c in range(arity):
        pre = "".join(_digit_char(d[c]) for d in w.prefix)
        cyc = "".join(_digit_char(d[c]) for d in w.cycle)
        parts.append(f"{pre}({cyc})")
    return ",".join(parts)


def is_uniform(radix: Sequence[int]) -> bool:
    return all(r == radix[0] for r in radix)


def alphabet(radix: Sequence[int]) -> list:
    """All digit tuples over ``radix`` in lexicographic order."""
    return list(itertools.product(*(range(r) for r in radix)))


@dataclass(frozen=True)
class Automaton:
    radix: tuple
    states: tuple
    transitions: frozenset
    initial: frozenset
    accepting: frozenset

    def __post_init__(self):
        object.__setattr__(self, "radix", tuple(int(r) for r in self.radix))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(
            self, "transitions",
            frozenset((s, tuple(d), t) for s, d, t in self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    @classmethod
    def build(cls, radix, transitions, initial, accepting=None, states=None):
        """Convenience constructor; ``states`` defaults to every mentioned state,
        ``accepting`` defaults to all states."""
        transitions = [(s, tuple(d), t) for s, d, t in transitions]
        if states is None:
            seen = dict.fromkeys(initial)
            for s, _, t in transitions:
                seen.setdefault(s)
                seen.setdefault(t)
            if accepting is not None:
                for s in accepting:
                    seen.setdefault(s)
            states = sorted(seen)
        if accepting is None:
            accepting = states
        return cls(tuple(radix), tuple(states), frozenset(transitions),
                   frozenset(initial), frozenset(accepting))

    @classmethod
    def empty(cls, radix) -> "Automaton":
        return cls(tuple(radix), ("s0",), frozenset(), frozenset(["s0"]), frozenset())

    @classmethod
    def universal(cls, radix) -> "Automaton":
        return cls.build(radix, [("s0", d, "s0") for d in alphabet(radix)], ["s0"])

    @property
    def arity(self) -> int:
        return len(self.radix)

    @cached_property
    def succ(self) -> dict:
        """state -> letter -> tuple of targets."""
        out = {q: {} for q in self.states}
        for s, d, t in self.transitions:
            out.setdefault(s, {}).setdefault(d, []).append(t)
        return {q: {d: tuple(sorted(ts)) for d, ts in m.items()} for q, m in out.items()}

    @cached_property
    def graph(self) -> dict:
        """Underlying successor sets, ignoring labels."""
        g = {q: set() for q in self.states}
        for s, _, t in self.transitions:
            g.setdefault(s, set()).add(t)
        return g

    def letters(self) -> list:
        return alphabet(self.radix)

    def is_deterministic(self) -> bool:
        if len(self.initial) != 1:
            return False
        return all(len(ts) <= 1 for m in self.succ.values() for ts in m.values())

    def is_complete(self) -> bool:
        n = prod(self.radix)
        return all(len(self.succ.get(q, {})) == n for q in self.states)

    def step(self, q, letter):
        """Unique successor in a deterministic automaton, or None."""
        ts = self.succ.get(q, {}).get(tuple(letter))
        return ts[0] if ts else None

    def with_initial(self, initial: Iterable) -> "Automaton":
        return Automaton(self.radix, self.states, self.transitions, frozenset(initial),
                         self.accepting)

    def with_accepting(self, accepting: Iterable) -> "Automaton":
        return Automaton(self.radix, self.states, self.transitions, self.initial,
                         frozenset(accepting))

    def restrict(self, keep: Iterable, initial: Iterable | None = None) -> "Automaton":
        """The sub-automaton on ``keep`` (``A_{Q1,Q2}``)."""
        keep = set(keep)
        init = self.initial if initial is None else frozenset(initial)
        return Automaton(
            self.radix,
            tuple(q for q in self.states if q in keep),
            frozenset(tr for tr in self.transitions if tr[0] in keep and tr[2] in keep),
            frozenset(q for q in init if q in keep),
            frozenset(q for q in self.accepting if q in keep),
        )

    def accepts(self, w: Lasso) -> bool:
        return accepts(self, w)

    def __contains__(self, w: Lasso) -> bool:
        return accepts(self, w)

    def __hash__(self):
        return hash((self.radix, self.transitions, self.initial, self.accepting))


def validate(a: Automaton) -> list:
    """Return one human-readable diagnostic per violated invariant."""
    diags = []
    if not a.radix:
        diags.append("radix vector is empty")
    for i, r in enumerate(a.radix):
        if r < 2:
            diags.append(f"radix of coordinate {i} is {r} < 2")
    states = set(a.states)
    if len(states) != len(a.states):
        diags.append("duplicate state names")
    if not a.initial:
        diags.append("initial state set is empty")
    for q in sorted(a.initial - states):
        diags.append(f"initial state {q!r} is not a declared state")
    for q in sorted(a.accepting - states):
        diags.append(f"accepting state {q!r} is not a declared state")
    for s, d, t in sorted(a.transitions):
        for end in (s, t):
            if end not in states:
                diags.append(f"transition {s} {d} {t}: dangling state {end!r}")
        if len(d) != len(a.radix):
            diags.append(f"transition {s} {d} {t}: arity {len(d)} != {len(a.radix)}")
            continue
        for i, (digit, r) in enumerate(zip(d, a.radix)):
            if not 0 <= digit < r:
                diags.append(f"transition {s} {d} {t}: digit {digit} out of range "
                             f"for radix {r} at coordinate {i}")
    return diags


def _reach(graph: dict, start: Iterable) -> set:
    seen = set(start)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for t in graph.get(q, ()):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _reverse(graph: dict) -> dict:
    rev = {q: set() for q in graph}
    for s, ts in graph.items():
        for t in ts:
            rev.setdefault(t, set()).add(s)
    return rev


def productive_states(a: Automaton) -> set:
    """States from which some infinite word is accepted."""
    comps = _tarjan(a.states, a.graph)
    good = set()
    for comp in comps:
        nontrivial = len(comp) > 1 or comp[0] in a.graph.get(comp[0], ())
        if nontrivial and any(q in a.accepting for q in comp):
            good.update(comp)
    return _reach(_reverse(a.graph), good)


def trim(a: Automaton) -> Automaton:
    """Keep the states that are accessible and from which an accepting cycle is
    reachable.  Raises EmptyLanguage when nothing survives."""
    keep = _reach(a.graph, a.initial) & productive_states(a)
    if not keep & a.initial:
        raise EmptyLanguage("automaton accepts no word")
    return a.restrict(keep)


def closure(a: Automaton) -> Automaton:
    return a.with_accepting(a.states)


def _tarjan(states: Sequence, graph: dict) -> list:
    """Strongly connected components, iterative Tarjan.  Components come out in
    reverse topological order (sinks first)."""
    index, low, on_stack = {}, {}, set()
    stack, comps = [], []
    counter = 0
    for root in states:
        if root in index:
            continue
        work = [(root, iter(sorted(graph.get(root, ()))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(graph.get(w, ())))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class SccDecomposition:
    component: dict       # state -> component id
    members: tuple        # component id -> sorted tuple of states
    edges: frozenset      # (c1, c2): c1 != c2 and some path from c1 to c2
    order: tuple          # component ids, topological (sources first)

    def successors(self, c) -> set:
        return {b for a, b in self.edges if a == c}


def scc(a: Automaton) -> SccDecomposition:
    comps = list(reversed(_tarjan(a.states, a.graph)))
    component = {q: i for i, comp in enumerate(comps) for q in comp}
    direct = {(component[s], component[t]) for s, ts in a.graph.items() for t in ts
              if component[s] != component[t]}
    cgraph = {i: set() for i in range(len(comps))}
    for x, y in direct:
        cgraph[x].add(y)
    edges = frozenset((x, y) for x in cgraph for y in _reach(cgraph, cgraph[x]))
    return SccDecomposition(component, tuple(tuple(c) for c in comps), edges,
                            tuple(range(len(comps))))


def sinks(a: Automaton) -> list:
    """SCCs without outgoing condensation edges, as frozensets."""
    dec = scc(a)
    sources = {x for x, _ in dec.edges}
    return [frozenset(dec.members[c]) for c in dec.order if c not in sources]


def _on_cycle(a: Automaton, dec: SccDecomposition) -> set:
    out = set()
    for comp in dec.members:
        if len(comp) > 1 or comp[0] in a.graph.get(comp[0], ()):
            out.update(comp)
    return out


def is_closed(a: Automaton) -> bool:
    """Every state lying on a nonempty cycle is accepting."""
    return _on_cycle(a, scc(a)) <= a.accepting


def is_weak(a: Automaton) -> bool:
    dec = scc(a)
    return all(len({q in a.accepting for q in comp}) == 1 for comp in dec.members)


def _fresh(a: Automaton, base: str) -> str:
    name, i = base, 0
    while name in a.states:
        i += 1
        name = f"{base}{i}"
    return name


def complete(a: Automaton) -> Automaton:
    """Add a non-accepting sink absorbing every missing (state, letter) pair."""
    if not a.is_deterministic():
        raise NotDeterministic("complete() needs a deterministic automaton")
    if a.is_complete():
        return a
    sink = _fresh(a, "sink")
    extra = []
    letters = a.letters()
    for q in a.states:
        have = a.succ.get(q, {})
        extra.extend((q, d, sink) for d in letters if d not in have)
    extra.extend((sink, d, sink) for d in letters)
    return Automaton(a.radix, a.states + (sink,), a.transitions | frozenset(extra),
                     a.initial, a.accepting)


@dataclass(frozen=True)
class PathCount:
    source: object
    target: object
    length: int
    count: int


def path_label_count(a: Automaton, p, q, n: int) -> PathCount:
    """Number of distinct labels of length-``n`` paths from ``p`` to ``q``.

    ``q=None`` counts the labels of all length-``n`` paths leaving ``p``.
    """
    if p not in a.states:
        raise UnknownState(p)
    if q is not None and q not in a.states:
        raise UnknownState(q)
    if n < 0:
        raise ValueError("path length must be non-negative")
    if prod(a.radix) ** n > PATH_COUNT_BUDGET:
        raise ResourceCap(f"label space {prod(a.radix)}^{n} exceeds {PATH_COUNT_BUDGET}")
    # labels[state] = set of words reaching state
    labels = {p: {()}}
    for _ in range(n):
        nxt = {}
        for s, words in labels.items():
            for d, ts in a.succ.get(s, {}).items():
                for t in ts:
                    nxt.setdefault(t, set()).update(w + (d,) for w in words)
        labels = nxt
    if q is None:
        total = set().union(*labels.values()) if labels else set()
    else:
        total = labels.get(q, set())
    return PathCount(p, q, n, len(total))


def accepts(a: Automaton, w: Lasso) -> bool:
    """Exact membership of an ultimately periodic word.

    Builds the product of the lasso with the automaton and looks for a
    reachable cycle through an accepting state.
    """
    start = [(q, 0) for q in a.initial]
    graph = {}
    seen = set(start)
    todo = deque(start)
    while todo:
        node = todo.popleft()
        q, i = node
        nxt = w.next_position(i)
        succ = [(t, nxt) for t in a.succ.get(q, {}).get(w.letter(i), ())]
        graph[node] = succ
        for m in succ:
            if m not in seen:
                seen.add(m)
                todo.append(m)
    for comp in _tarjan(sorted(graph, key=repr), graph):
        if len(comp) == 1 and comp[0] not in graph.get(comp[0], ()):
            continue
        if any(q in a.accepting for q, _ in comp):
            return True
    return False


def renumber(a: Automaton, prefix: str = "s") -> Automaton:
    """Rename states to ``s0, s1, ...`` in breadth-first order from the initial
    states, taking letters in lexicographic order."""
    order = {}
    todo = deque(sorted(a.initial, key=repr))
    for q in todo:
        order.setdefault(q, len(order))
    while todo:
        q = todo.popleft()
        for d in sorted(a.succ.get(q, {})):
            for t in a.succ[q][d]:
                if t not in order:
                    order[t] = len(order)
                    todo.append(t)
    for q in a.states:
        order.setdefault(q, len(order))
    name = {q: f"{prefix}{i}" for q, i in order.items()}
    return Automaton(
        a.radix,
        tuple(name[q] for q in sorted(order, key=order.get)),
        frozenset((name[s], d, name[t]) for s, d, t in a.transitions),
        frozenset(name[q] for q in a.initial),
        frozenset(name[q] for q in a.accepting),
    )


def iter_words(radix, n: int) -> Iterator[tuple]:
    return itertools.product(alphabet(radix), repeat=n)
