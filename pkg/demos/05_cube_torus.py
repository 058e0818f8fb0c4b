"""
The 40-vertex 3-torus
=====================

Twenty-seven cube blocks fill a 3 x 3 x 3 grid.  The assembly is checked
square by square, then opposite faces are identified.
"""

import math

from contact_tri import homology
from contact_tri.cubes import cube77_assembly, t3_40
from contact_tri.geometry.realization import max_diameter

assembly, info, report = cube77_assembly()
X = assembly.complex()
print("cube:", X.f_vector(), " squares checked:", report.interior_squares, " mismatches:",
      len(report.mismatched_interior))
print("C blocks:", info["c_blocks"])

# %%
# After the quotient the torus has 40 vertices and the same tetrahedra.
nc = t3_40()
print("torus:", nc.complex.f_vector(), homology(nc.complex))
print("max diameter:", max_diameter(nc.complex, nc.realization), "vs", math.sqrt(2) / 3)
