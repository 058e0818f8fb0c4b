"""
Chains of connected sums
========================

Connected sums remove one tetrahedron from each side and glue along the
exposed boundaries, so the vertex count drops by four per sum.
"""

from contact_tri import generators as g
from contact_tri import connected_sum, homology, s_chain

X, Y = g.sigma8().complex, g.s21_10().complex
Z = connected_sum(X, Y)
print("sigma8 # s21_10:", Z.f_vector(), homology(Z))

# %%
# A chain of n twisted 7-vertex spheres has 3n + 4 vertices.
for n in range(0, 6):
    nc = s_chain(n, "+")
    print(f"n = {n}: f0 = {nc.complex.f_vector()[0]}, d3 = {nc.notes['ledger'].d3}")
