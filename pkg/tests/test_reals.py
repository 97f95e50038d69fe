import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    accepted_lasso,
    has_value,
    oracle_accepts,
    oracle_encodings,
    oracle_values,
    random_closed_automaton,
    random_lasso,
)
from regreal.automaton import Automaton, Lasso, accepts, trim
from regreal.errors import EmptyFiber, MixedRadix, OutOfRange, RangeViolation
from regreal.omega import is_empty, join, language_equal
from regreal.reals import (
    affine_graph_automaton,
    encode_rational,
    encodings_1d,
    equal_value_automaton,
    eval_function,
    lasso_from_tracks,
    midpoint_relation_automaton,
    saturate,
    singleton_automaton,
    valuation,
)


def L(prefix, cycle):
    return Lasso([(d,) for d in prefix], [(d,) for d in cycle])


def test_valuation_examples():
    assert valuation(L([1], [0]), (3,)) == (Fraction(1, 3),)
    assert valuation(L([], [1]), (3,)) == (Fraction(1, 2),)
    assert valuation(L([0], [2]), (3,)) == (Fraction(1, 3),)


def test_encodings():
    assert encodings_1d(Fraction(1, 3), 3) == [L([1], [0]), L([0], [2])]
    assert encodings_1d(Fraction(1, 2), 3) == [L([], [1])]
    assert encodings_1d(0, 5) == [L([], [0])]
    assert encodings_1d(1, 5) == [L([], [4])]
    with pytest.raises(OutOfRange):
        encodings_1d(Fraction(3, 2), 3)
    assert len(encode_rational((Fraction(1, 3), Fraction(1, 9)), (3, 3))) == 4


def test_encode_then_value_random():
    rng = random.Random(1000)
    for _ in range(1000):
        r = rng.randint(2, 7)
        den = rng.randint(1, 10**6)
        q = Fraction(rng.randint(0, den), den)
        encs = encodings_1d(q, r)
        assert 1 <= len(encs) <= 2
        for w in encs:
            assert has_value(w, q, r)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7), st.fractions(0, 1, max_denominator=500))
def test_encode_then_value(r, q):
    for w in encodings_1d(q, r):
        assert oracle_values(w, (r,)) == (q,)
        assert valuation(w, (r,)) == (q,)


def test_equal_value_automaton():
    eq = equal_value_automaton(3)
    assert len(eq.states) == 3
    assert accepts(eq, Lasso([(1, 0)], [(0, 2)]))
    assert not accepts(eq, Lasso([(0, 1)], [(0, 0)]))
    rng = random.Random(3)
    for _ in range(500):
        r = rng.choice([2, 3])
        if rng.random() < 0.3:
            # both expansions of one value, in either order
            x = random_lasso(rng, (r,), max_cycle=1)
            encs = oracle_encodings(x, (r,))
            rng.shuffle(encs)
            w = lasso_from_tracks([encs[0], encs[-1]])
        else:
            w = random_lasso(rng, (r, r))
        vx, vy = oracle_values(w, (r, r))
        assert accepts(equal_value_automaton(r), w) == (vx == vy)


def test_saturate_adds_dual_encoding():
    one_third = Automaton.build((3,), [("a", (1,), "b"), ("b", (0,), "b")], ["a"])
    s = saturate(one_third)
    assert accepts(s, L([0], [2]))
    assert language_equal(s, singleton_automaton((Fraction(1, 3),), (3,)))


def test_saturate_fig2(fig2):
    # the five-state figure misses some alternative encodings, e.g. of (4/9, 1/9)
    s = saturate(fig2)
    w = Lasso([(1, 0), (1, 0)], [(0, 2)])
    assert oracle_values(w, (3, 3)) == (Fraction(4, 9), Fraction(1, 9))
    assert accepts(s, w) and not accepts(fig2, w)
    rng = random.Random(2)
    for _ in range(200):
        w = random_lasso(rng, (3, 3))
        if accepts(fig2, w):
            assert accepts(s, w)
    assert language_equal(saturate(s), s)


def test_saturate_value_sets_of_figures(fig2, fig3):
    assert language_equal(saturate(fig2), saturate(fig3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_saturate_contains_all_encodings(seed):
    rng = random.Random(seed)
    a = trim(random_closed_automaton(rng, max_states=4))
    s = saturate(a)
    for _ in range(10):
        w = accepted_lasso(rng, a)
        if w is None:
            continue
        for v in oracle_encodings(w, a.radix):
            assert accepts(s, v)
    assert language_equal(saturate(s), s)


def test_affine_examples(fig3, identity):
    ident = affine_graph_automaton(1, 0, 3)
    # every encoding of the diagonal, so the dual pairs need the two extra states
    assert language_equal(ident, equal_value_automaton(3))
    assert language_equal(saturate(identity), ident)
    assert eval_function(ident, Fraction(1, 2)) == Fraction(1, 2)
    flip = affine_graph_automaton(-1, 1, 3)
    q3 = trim(fig3.restrict({"q3"}, ["q3"]))
    assert language_equal(saturate(q3), flip)
    half = affine_graph_automaton(Fraction(1, 2), 0, 2)
    assert eval_function(half, Fraction(1, 3)) == Fraction(1, 6)
    with pytest.raises(RangeViolation):
        affine_graph_automaton(2, 0, 3)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 6), st.integers(0, 6), st.integers(1, 6),
       st.lists(st.fractions(0, 1, max_denominator=30), min_size=3, max_size=3))
def test_affine_eval(r, b, e, den, xs):
    beta, end = Fraction(min(b, den), den), Fraction(min(e, den), den)
    g = affine_graph_automaton(end - beta, beta, r)
    for x in xs:
        assert eval_function(g, x) == (end - beta) * x + beta


def test_midpoint_relation():
    m = midpoint_relation_automaton(3)
    assert accepts(m, Lasso([], [(0, 0, 0)]))
    assert accepts(m, Lasso([], [(0, 2, 1)]))
    rng = random.Random(9)
    for _ in range(500):
        w = random_lasso(rng, (3, 3, 3), max_cycle=2)
        x, y, z = oracle_values(w, (3, 3, 3))
        assert accepts(m, w) == (2 * z == x + y)
        swapped = Lasso([(b, a, c) for a, b, c in w.prefix], [(b, a, c) for a, b, c in w.cycle])
        assert accepts(m, swapped) == accepts(m, w)


def test_singletons_and_fibers(fig3):
    s = singleton_automaton((Fraction(1, 3),), (3,))
    assert accepts(s, L([1], [0])) and accepts(s, L([0], [2]))
    assert not accepts(s, L([], [1]))
    z = singleton_automaton((0,), (3,))
    assert accepts(z, L([], [0])) and not accepts(z, L([0, 1], [0]))
    fiber = singleton_automaton((Fraction(1, 2), None), (3, 3))
    empty, w = is_empty(join(fig3, [0, 1], fiber, [0, 1]))
    assert not empty and oracle_values(w, (3, 3)) == (Fraction(1, 2), Fraction(1, 6))


def test_eval_fig3(fig3):
    expect = {Fraction(1, 2): Fraction(1, 6), Fraction(1, 3): 0, Fraction(1, 4): 0,
              0: 0, 1: 0, Fraction(4, 9): Fraction(1, 9)}
    for x, y in expect.items():
        assert eval_function(fig3, x) == y
        assert eval_function(fig3, x, strict=True) == y


def test_eval_errors():
    half = Automaton.build((2, 2), [("a", (0, 0), "b"), ("b", (0, 0), "b"), ("b", (1, 1), "b")],
                           ["a"])
    with pytest.raises(EmptyFiber):
        eval_function(half, Fraction(3, 4))
    with pytest.raises(MixedRadix):
        eval_function(Automaton.universal((2, 3)), 0)


def test_oracle_membership_of_equal_value_matches():
    rng = random.Random(1)
    eq = equal_value_automaton(2)
    for _ in range(200):
        w = random_lasso(rng, (2, 2))
        assert accepts(eq, w) == oracle_accepts(eq, w)
