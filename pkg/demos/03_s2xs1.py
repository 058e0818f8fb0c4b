"""
A 10-vertex S^2 x S^1
=====================

The 10-vertex triangulation splits into two solid tori swapped by the
rotation v_i -> v_(i+5).
"""

from contact_tri import generators as g
from contact_tri import homology
from contact_tri.symmetry import automorphism_group, group_from_generators

X = g.s21_10().complex
print("f =", X.f_vector(), " H =", homology(X))

# %%
# The three listed symmetries generate the full group.
sym = g.s21_10_symmetries()
G = group_from_generators(X.vertices, sym.values())
print("generated:", G.order, " full group:", automorphism_group(X).order)

# %%
# Rotation by five swaps the two halves.
gamma = sym["gamma"]
image = {tuple(sorted((gamma[v] for v in f), key=lambda s: int(s[1:]))) for f in g.t4().complex.facets}
print("gamma(T4) == T5:", image == set(g.t5().complex.facets))
