"""
Legendrian edges and transverse faces
=====================================

Radial arcs on the unit 3-sphere are tested against the standard contact
form, and the triangles of the octahedral sphere are checked to never be
tangent to the contact planes.
"""

from contact_tri import generators as g
from contact_tri.geometry.contact import (
    example_edge_arc,
    example_edge_arc_derivative,
    face_tangency_margin,
    legendrian_deviation,
    legendrian_edges,
    lemma_profile,
    lutz_profile_check,
)

print("arc from e2 to e1:", legendrian_deviation(example_edge_arc, 1000, example_edge_arc_derivative))

# %%
nc = g.sigma8()
dev = legendrian_edges(nc.complex, nc.realization)
print("radial edges within 1e-9:", sum(d < 1e-9 for d in dev.values()), "of", len(dev))
margins = [face_tangency_margin([nc.realization.point(v) for v in f]).plane_margin for f in nc.complex.faces(2)]
print("smallest face margin:", min(margins))

# %%
# The twisting profile stays contact on (0.001, 1].
print(lutz_profile_check(lemma_profile(0.5)).to_json())
