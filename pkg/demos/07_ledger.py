"""
Tracking invariants through twists
==================================

A ledger records the relative invariants of a contact structure as twists
along knots accumulate, together with a vertex bound.
"""

from contact_tri.ledger import (
    TREFOIL_FRONT,
    UNKNOT_FRONT,
    ContactClass,
    KnotClass,
    apply_lutz,
    s3_vertex_bound,
    t3_ledger,
)

trefoil = KnotClass.from_diagram(TREFOIL_FRONT, 0, "s3")
unknot = KnotClass.from_diagram(UNKNOT_FRONT, 0, "s3")

c = ContactClass.new("s3", 0, 4)
for k in (trefoil, trefoil, unknot):
    c = apply_lutz(c, k, 3)
    print(f"after {k.name}: d3 = {c.d3}, f0 <= {c.f0_bound}")
print("bound for d3 = 1:", s3_vertex_bound(1))

# %%
# On the 3-torus the twists run along a non-trivial class.
c, disks = t3_ledger(2, 0.45)
print("d2 =", c.d2, " f0 =", c.f0_bound)
for d in disks:
    print(f"disk {d.k}: radius in ({d.r_lo:.3f}, {d.r_hi:.3f})")
