"""
Three solid tori around one torus
=================================

The 7-vertex torus bounds three different 7-vertex solid tori.  Gluing two
of them along the torus gives a 7-vertex 3-sphere.
"""

from contact_tri import generators as g
from contact_tri import h1_class, homology

tau = g.torus7().complex
print("torus:", tau.f_vector())

# %%
# Each solid torus has the torus as boundary, and its meridian loop bounds.
for i in (1, 2, 3):
    T = g.solid_torus(i).complex
    print(f"T{i}: {len(T.facets)} tetrahedra, boundary is the torus: {T.boundary() == tau},",
          "meridian class:", h1_class(T, g.meridian_loop(i)))

# %%
# Pairwise unions are spheres.
for i, j in ((1, 2), (1, 3), (2, 3)):
    S = g.s_ij(i, j).complex
    print(f"S_{i}{j}: f = {S.f_vector()}, H = {homology(S)}")
