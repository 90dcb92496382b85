"""
Vertices, facets and the lattice points in between
===================================================

Two small examples side by side: b = (1, 2, 3), where b_1 = 1, and
b = (2, 3, 4). Run with ``python demos/01_vertices_and_facets.py``.
"""

# %%
import numpy as np

from gpfp import BVector, contains, enumerate_parking_functions, facets, vertex_points
from gpfp.oracle import certify_hull, count_lattice_points

small, large = BVector((1, 2, 3)), BVector((2, 3, 4))

# %% The vertex sets.  With b_1 = 1 the all-ones point absorbs one family,
# so the first polytope has 10 vertices and the second has 16.
for b in (small, large):
    pts = np.array(vertex_points(b))
    print(f"b={b}: {len(pts)} vertices")
    print(pts)

# %% Facets: one lower bound per coordinate, then an upper bound for
# every nonempty subset (size n-1 is dropped when b_1 = 1).
for b in (small, large):
    print(f"b={b}:", ", ".join(f"{f} <= {f.rhs(b)}" if f.rhs(b) > 0 else str(f) for f in facets(b)))

# %% The convex hull of the parking functions equals that H-description.
# The certificate checks it without a convex-hull code.
for b in (small, large):
    cert = certify_hull(b)
    print(b, cert.passed, cert.witness)

# %% The hull picks up integer points that are not parking functions.
pfs = enumerate_parking_functions(small)
print("parking functions:", len(pfs), " lattice points:", count_lattice_points(small))
print("(2, 2, 2) inside:", contains(small, (2, 2, 2)), " a parking function:", (2, 2, 2) in set(pfs))
