"""
Counting faces two ways
=======================

h- and f-vectors from closed forms, from vertex posets, and from the
nested-set description of the face lattice.
"""

# %%
from gpfp import BVector, f_vector, h_polynomial
from gpfp.counting import h_polynomial_from_posets, vertex_poset
from gpfp.nestedsets import building_for, combinatorial_type, face_lattice, maximal_nested_sets, vertex_from_maximal_nested_set
from gpfp.oracle import brute_face_lattice, compare_face_lattices

# %% The h-polynomial only sees whether b_1 = 1.
for e in [(1, 2, 3), (1, 7, 2), (2, 3, 4), (5, 1, 1)]:
    b = BVector(e)
    print(e, combinatorial_type(b).value, h_polynomial(b), "| f =", f_vector(b))

# %% The same polynomial as a descent count over vertex posets on [n+1].
b = BVector((2, 3, 4))
print(h_polynomial_from_posets(b) == h_polynomial(b))
print("poset at (2, 5, 9):", sorted(vertex_poset(b, (2, 5, 9)).covers))

# %% Maximal nested sets place the vertices directly.
for N in maximal_nested_sets(building_for(b))[:6]:
    print(f"{str(N):24s} -> {vertex_from_maximal_nested_set(b, N)}")

# %% The nested-set lattice agrees with the lattice of facet intersections.
lattice = face_lattice(b)
print("faces per dimension:", lattice.rank_sizes())
print(compare_face_lattices(lattice, brute_face_lattice(b)).to_json())
