"""
The ``.regba`` text format and the bundled corpus.

    # comment
    radix 3 3
    states q0 q1
    initial q0
    accepting q0 q1
    trans q0 (1,0) q1

``states`` may be omitted (then every mentioned state is declared).  An
``accepting`` line with no names means no state accepts; a missing
``accepting`` line means every state accepts.
"""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .automaton import Automaton
from .errors import ParseError

_TRANS = re.compile(r"^trans\s+(\S+)\s*\(([^)]*)\)\s*(\S+)$")
_NAME = re.compile(r"^[^\s(),#]+$")
_HEADERS = ("radix", "states", "initial", "accepting")


def parse(text: str) -> Automaton:
    seen = {}
    radix = None
    states = initial = accepting = None
    trans = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word = line.split(None, 1)[0]
        if word == "trans":
            m = _TRANS.match(line)
            if not m:
                raise ParseError(lineno, "expected 'trans SRC (d1,...,dn) DST'")
            src, digits, dst = m.groups()
            try:
                d = tuple(int(x) for x in digits.split(","))
            except ValueError:
                raise ParseError(lineno, f"bad digit tuple ({digits})") from None
            if radix is None:
                raise ParseError(lineno, "'radix' must come before transitions")
            if len(d) != len(radix):
                raise ParseError(lineno, f"tuple has {len(d)} digits, radix has {len(radix)}")
            for i, (x, r) in enumerate(zip(d, radix)):
                if not 0 <= x < r:
                    raise ParseError(lineno, f"digit {x} out of range for radix {r} "
                                             f"at coordinate {i + 1}")
            for name in (src, dst):
                if not _NAME.match(name):
                    raise ParseError(lineno, f"bad state name {name!r}")
            trans.append((lineno, src, d, dst))
            continue
        if word not in _HEADERS:
            raise ParseError(lineno, f"unknown keyword {word!r}")
        if word in seen:
            raise ParseError(lineno, f"duplicate '{word}' line (first on line {seen[word]})")
        seen[word] = lineno
        args = line.split()[1:]
        if word == "radix":
            try:
                radix = tuple(int(x) for x in args)
            except ValueError:
                raise ParseError(lineno, "radix entries must be integers") from None
            if not radix or any(r < 2 for r in radix):
                raise ParseError(lineno, "radix needs one or more integers >= 2")
            continue
        for name in args:
            if not _NAME.match(name):
                raise ParseError(lineno, f"bad state name {name!r}")
        if word == "states":
            states = args
        elif word == "initial":
            initial = args
        else:
            accepting = args

    if radix is None:
        raise ParseError(0, "missing 'radix' line")
    if not initial:
        raise ParseError(seen.get("initial", 0), "no initial state")
    if states is not None:
        declared = set(states)
        if len(declared) != len(states):
            raise ParseError(seen["states"], "duplicate state name")
        for lineno, src, _, dst in trans:
            for q in (src, dst):
                if q not in declared:
                    raise ParseError(lineno, f"undeclared state {q!r}")
        for key, names in (("initial", initial), ("accepting", accepting or [])):
            for q in names:
                if q not in declared:
                    raise ParseError(seen[key], f"undeclared state {q!r}")
    return Automaton.build(radix, [(s, d, t) for _, s, d, t in trans], initial,
                           accepting=accepting, states=states)


def serialize(a: Automaton) -> str:
    def names(xs):
        return " ".join(sorted(xs))

    lines = [
        "radix " + " ".join(str(r) for r in a.radix),
        ("states " + names(a.states)).rstrip(),
        ("initial " + names(a.initial)).rstrip(),
        ("accepting " + names(a.accepting)).rstrip(),
    ]
    for s, d, t in sorted(a.transitions):
        lines.append(f"trans {s} ({','.join(str(x) for x in d)}) {t}")
    return "\n".join(lines) + "\n"


def normalize(text: str) -> str:
    return serialize(parse(text))


def load(path) -> Automaton:
    """Read a ``.regba`` file.  ``corpus/NAME`` falls back to the bundled copy."""
    p = Path(path)
    if not p.exists() and p.parts[:1] == ("corpus",) and len(p.parts) == 2:
        return load_corpus(p.name)
    return parse(p.read_text(encoding="utf-8"))


def save(a: Automaton, path):
    Path(path).write_text(serialize(a), encoding="utf-8")


def corpus_names() -> list:
    root = resources.files("regreal") / "corpus"
    return sorted(f.name for f in root.iterdir() if f.name.endswith(".regba"))


def load_corpus(name: str) -> Automaton:
    if not name.endswith(".regba"):
        name += ".regba"
    ref = resources.files("regreal") / "corpus" / name
    if not ref.is_file():
        raise FileNotFoundError(f"no corpus file {name!r}; have {corpus_names()}")
    return parse(ref.read_text(encoding="utf-8"))
