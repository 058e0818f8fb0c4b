"""Explicit triangulations of contact 3-manifolds.

Combinatorial core (complexes, homology, symmetry, surgery), named
generators, coordinate checks against the standard contact form and a
ledger of relative homotopy invariants under Lutz twists.
"""

__version__ = "0.1.0"

from .complex import (
    BallLevel,
    SimplicialComplex,
    certify_ball,
    certify_manifold,
    classify_surface,
    euler_characteristic,
    f_vector,
    from_facets,
    link,
)
from .algebra import fundamental_group, h1_class, homology, smith_normal_form, sphere_certificate
from .generators import NamedComplex, generate, names
from .surgery import connected_sum, quotient, s_chain
from .symmetry import automorphism_group, find_isomorphism, verify_automorphisms
from .errors import ContactTriError

__all__ = [
    "__version__",
    "BallLevel",
    "ContactTriError",
    "NamedComplex",
    "SimplicialComplex",
    "automorphism_group",
    "certify_ball",
    "certify_manifold",
    "classify_surface",
    "connected_sum",
    "euler_characteristic",
    "f_vector",
    "find_isomorphism",
    "from_facets",
    "fundamental_group",
    "generate",
    "h1_class",
    "homology",
    "link",
    "names",
    "quotient",
    "s_chain",
    "smith_normal_form",
    "sphere_certificate",
    "verify_automorphisms",
]
