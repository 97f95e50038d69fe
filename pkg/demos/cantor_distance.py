"""Walk through the distance-to-Cantor-set function as an automaton."""
from fractions import Fraction

from regreal import (
    eval_function,
    is_continuous,
    is_differentiable,
    is_function,
    load_corpus,
    slope_set,
    sum_form_check,
)

d = load_corpus("fig3_cantor_dist")
print("states:", len(d.states), "transitions:", len(d.transitions))

# a graph that really is a continuous function
print("function?", is_function(d).holds)
print("continuous?", is_continuous(d).holds)

# exact values at a few rationals
for x in ["0", "1/4", "1/3", "1/2", "4/9", "1"]:
    print(f"d({x}) =", eval_function(d, Fraction(x)))

# not affine, so not differentiable; the pair below breaks the midpoint rule
v = is_differentiable(d)
print("differentiable?", v.holds, v.witness)

# slopes of the affine pieces and how much of [0,1] they explain by depth k
for k in (2, 4, 6, 8):
    rep = slope_set(d, k)
    print(k, sorted(rep.slopes), "covered", rep.covered, float(rep.covered))

# rebuild d(t) from f(0) and the slopes, integrated over covered intervals
for t in ["1/4", "1/2", "3/4", "1"]:
    print("t =", t, "residual", sum_form_check(d, Fraction(t), 8))
