"""
Parking functions as projected assignments
==========================================

Car i chooses spot j (x_ij = 1).  Relaxing the column equalities of the
assignment polytope to prefix lower bounds and projecting by
x -> (sum_j j x_ij)_i recovers the polytope.
"""

# %%
import numpy as np

from gpfp import BVector
from gpfp.birkhoff import build_relaxed_partition, projected_point, verify_projection_theorem, zero_one_points

b = BVector((1, 2))
system = build_relaxed_partition(b)
print(f"{system.num_vars} variables, cuts at {b.prefix_sums}")

# %% Each 0/1 point is a parking assignment; its image is the parking function.
for x in zero_one_points(system):
    print(np.array(x).reshape(system.rows, system.cols), "->", [int(v) for v in projected_point(system, x)])

# %% The certificate also checks every basic feasible solution is 0/1.
for e in [(1, 1), (1, 1, 1), (1, 2), (2, 2)]:
    print(e, verify_projection_theorem(BVector(e)).to_json())
