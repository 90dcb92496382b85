"""
Greedy optimization, diameters and circuit walks
================================================
"""

# %%
import random

from gpfp import BVector, edge_graph
from gpfp.minkowski import random_directions, verify_signed_minkowski, y_coefficients
from gpfp.oracle import bfs_diameter
from gpfp.polymatroid import (
    brute_force_optimum,
    cardinality_profile,
    circuit_bound,
    circuit_walk,
    combinatorial_diameter,
    greedy_maximize,
)

b = BVector((2, 3, 4))

# %% Shifted by the all-ones vector the polytope is a polymatroid whose rank
# depends only on |I|, so greedy solves linear programs over it.
print("g =", cardinality_profile(b).g)
rng = random.Random(0)
for _ in range(3):
    w = [rng.randint(-5, 9) for _ in range(b.n)]
    y, value = greedy_maximize(b, w)
    print(w, "->", y, value, "brute force:", brute_force_optimum(b, w))

# %% The simplex coefficients y_I can go negative; the signed decomposition
# still reproduces the support function.
odd = BVector((3, 1, 4, 1))
print("negative y:", {k: v for k, v in y_coefficients(odd).nonzero().items() if v < 0})
print("support identity:", verify_signed_minkowski(odd, random_directions(5, 200, seed=1)))

# %% Edge-graph diameter against the closed form, and circuit walks that are
# shorter than edge walks.
for e in [(1, 2, 3), (2, 3, 4), (1, 1, 1, 1), (2, 1, 1, 1)]:
    c = BVector(e)
    print(e, "bfs:", bfs_diameter(edge_graph(c)), "formula:", combinatorial_diameter(c),
          "circuit bound:", circuit_bound(c))

walk = circuit_walk(b, (1, 1, 1), (9, 5, 2))
for step in walk.steps:
    print(step.circuit, step.length, "->", step.arrival)
