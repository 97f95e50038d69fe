"""Affine maps are regular in every base, and the decision procedures agree."""
import random
from fractions import Fraction

from regreal import affine_graph_automaton, eval_function, is_differentiable, is_function

rng = random.Random(1)
for r in (2, 3, 5):
    for _ in range(3):
        den = rng.randint(1, 6)
        beta = Fraction(rng.randint(0, den), den)
        end = Fraction(rng.randint(0, den), den)
        alpha = end - beta
        g = affine_graph_automaton(alpha, beta, r)
        x = Fraction(rng.randint(0, 9), 9)
        print(f"r={r} y={alpha}x+{beta}: {len(g.states)} states,",
              "function", is_function(g).holds,
              "affine", is_differentiable(g, check=False).holds,
              f"f({x})={eval_function(g, x)}")
