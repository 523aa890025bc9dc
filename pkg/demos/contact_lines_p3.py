"""
Contact lines in P^3, term by term
==================================

A line in P^3 is contact when it lies in the contact plane of each of its
points.  Through a general point and meeting three general lines there are
two of them; this walks through the localization sum that produces the 2.
"""
from fractions import Fraction

from contact_curves import IncidenceSpec, cached_graphs, count, draw_weights, graph_contribution

# The torus-fixed lines are the six coordinate lines q_i q_j.
graphs = cached_graphs(3, 1)
for g in graphs:
    print(g.code, "a_gamma =", g.a_gamma)

# Three conditions of codimension 2 (lines) and none of codimension 3.
spec = IncidenceSpec(1, (3, 0))
w = draw_weights(3, seed=1)
terms = [graph_contribution(g, 1, 1, spec, w) for g in graphs]

# Each term is a large rational number ...
for g, t in zip(graphs, terms):
    print(f"{g.code:>12}  {float(t): .3e}")

# ... but they sum to an integer, whatever the weights.
print("sum:", sum(terms, Fraction(0)))

# Small weights make the cancellation visible.
small = [1, 2, 5, 11]
print("with weights", small, "->", sum(graph_contribution(g, 1, 1, spec, small) for g in graphs))

# The engine does the same with two independent 64-bit draws and checks they agree.
result = count(1, 1, spec)
print("N_1(3,0) =", result.count, "from weight seeds", result.weight_seeds)
