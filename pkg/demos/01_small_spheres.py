"""
Small spheres and their symmetries
==================================

Build the boundary of the 4-simplex and the 8-vertex octahedral sphere,
check that they are combinatorial 3-spheres and count their automorphisms.
"""

from contact_tri import automorphism_group, certify_manifold, generate, homology
from contact_tri.symmetry import orbits

# %%
# Face counts and homology
# ------------------------
for name in ("s3_5", "sigma8"):
    X = generate(name).complex
    cert = certify_manifold(X)
    print(f"{name}: f = {X.f_vector()}, H = {homology(X)}, closed manifold: {cert.is_closed_manifold}")

# %%
# The octahedral sphere acts transitively on edges and triangles.
X = generate("sigma8").complex
G = automorphism_group(X)
print("|Aut| =", G.order)
for k in (1, 2):
    print(f"orbits on {k}-faces:", len(orbits(G, X.faces(k))))
