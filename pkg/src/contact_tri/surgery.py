"""Connected sums, iterated sum chains and vertex-identification quotients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .complex import (
    SimplicialComplex,
    canonical_face,
    coherent_orientation,
    label_key,
    permutation_parity,
)
from .errors import (
    BadParameter,
    DimensionMismatch,
    FacetCollapse,
    FacetCollision,
    NotAFacet,
)


@dataclass(frozen=True)
class GluingMap:
    """Bijection ``psi`` from facet ``sigma1`` of X1 onto facet ``sigma2`` of X2."""

    sigma1: tuple
    sigma2: tuple
    psi: Mapping

    def __post_init__(self):
        s1, s2 = canonical_face(self.sigma1), canonical_face(self.sigma2)
        object.__setattr__(self, "sigma1", s1)
        object.__setattr__(self, "sigma2", s2)
        psi = dict(self.psi)
        if set(psi) != set(s1) or sorted(map(label_key, psi.values())) != sorted(map(label_key, s2)):
            raise BadParameter("psi must be a bijection from sigma1 onto sigma2")
        object.__setattr__(self, "psi", psi)

    @classmethod
    def canonical(cls, sigma1, sigma2) -> "GluingMap":
        s1, s2 = canonical_face(sigma1), canonical_face(sigma2)
        if len(s1) != len(s2):
            raise DimensionMismatch("facets of different sizes")
        return cls(s1, s2, dict(zip(s1, s2)))

    @property
    def parity(self) -> int:
        """+1 when psi carries the sorted order of sigma1 to an even
        permutation of the sorted order of sigma2."""
        return permutation_parity([self.psi[x] for x in self.sigma1])

    def flipped(self) -> "GluingMap":
        s1 = self.sigma1
        psi = dict(self.psi)
        psi[s1[-1]], psi[s1[-2]] = self.psi[s1[-2]], self.psi[s1[-1]]
        return GluingMap(self.sigma1, self.sigma2, psi)


@dataclass(frozen=True)
class SumResult:
    complex: SimplicialComplex
    gluing: GluingMap
    x2_labels: dict  # original X2 label -> label in the sum
    flipped: bool


def _fresh_labels(X2: SimplicialComplex, taken: set) -> dict:
    suffix = "'"
    while True:
        mapping = {v: f"{v}{suffix}" for v in X2.vertices}
        if not set(mapping.values()) & taken:
            return mapping
        suffix += "'"


def connected_sum_details(
    X1: SimplicialComplex,
    X2: SimplicialComplex,
    sigma1=None,
    sigma2=None,
    psi: Mapping | None = None,
    orient: bool = True,
) -> SumResult:
    """Remove a facet from each complex and identify the two boundaries.

    When X2 shares labels with X1 its vertices are renamed with a prime
    suffix first; ``sigma2`` and ``psi`` refer to the original labels.
    Without ``psi`` the i-th smallest vertex of ``sigma1`` goes to the i-th
    smallest of ``sigma2``, composed with a transposition when that is needed
    for the sum to carry the orientations of both summands.
    """
    if X1.dimension != X2.dimension:
        raise DimensionMismatch(f"dimensions {X1.dimension} and {X2.dimension} differ")
    sigma1 = canonical_face(sigma1) if sigma1 is not None else X1.facets[0]
    sigma2 = canonical_face(sigma2) if sigma2 is not None else X2.facets[0]
    if sigma1 not in X1._facet_set:
        raise NotAFacet(f"{sigma1} is not a facet of the first complex")
    if sigma2 not in X2._facet_set:
        raise NotAFacet(f"{sigma2} is not a facet of the second complex")

    if psi is None:
        g = GluingMap.canonical(sigma1, sigma2)
        flipped = False
        if orient:
            o1, o2 = coherent_orientation(X1), coherent_orientation(X2)
            if o1 is not None and o2 is not None and o1[sigma1] * g.parity != -o2[sigma2]:
                g = g.flipped()
                flipped = True
    else:
        g = GluingMap(sigma1, sigma2, psi)
        flipped = False

    rename = {v: v for v in X2.vertices}
    if set(X1.vertices) & set(X2.vertices):
        rename = _fresh_labels(X2, set(X1.vertices))
    inverse = {b: a for a, b in g.psi.items()}
    labels = {v: inverse.get(v, rename[v]) for v in X2.vertices}
    facets = [f for f in X1.facets if f != sigma1]
    facets += [tuple(labels[v] for v in f) for f in X2.facets if f != sigma2]
    return SumResult(SimplicialComplex(facets), g, labels, flipped)


def connected_sum(X1, X2, sigma1=None, sigma2=None, psi=None, orient: bool = True) -> SimplicialComplex:
    return connected_sum_details(X1, X2, sigma1, sigma2, psi, orient).complex


# ---------------------------------------------------------------------------
# quotients

@dataclass(frozen=True)
class IdentificationScheme:
    """Partition of vertex labels; each class collapses to its representative."""

    classes: tuple[tuple, ...]

    @classmethod
    def from_map(cls, mapping: Mapping) -> "IdentificationScheme":
        groups: dict = {}
        for v, rep in mapping.items():
            groups.setdefault(rep, []).append(v)
        classes = []
        for rep, members in groups.items():
            members = sorted(set(members) | ({rep} if rep in mapping else set()), key=label_key)
            classes.append((rep,) + tuple(m for m in members if m != rep))
        return cls(tuple(sorted(classes, key=lambda c: label_key(c[0]))))

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence]) -> "IdentificationScheme":
        out = []
        for c in classes:
            c = sorted(set(c), key=label_key)
            out.append(tuple(c))
        return cls(tuple(out))

    def mapping(self) -> dict:
        return {v: c[0] for c in self.classes for v in c}


def quotient(X: SimplicialComplex, s: IdentificationScheme) -> SimplicialComplex:
    """Image of ``X`` under the class map; raises if simpliciality breaks."""
    cmap = s.mapping()
    seen: dict = {}
    facets = []
    for f in X.facets:
        img = [cmap.get(v, v) for v in f]
        if len(set(img)) != len(img):
            raise FacetCollapse(f"facet {f} loses vertices under the identification", facet=f)
        key = canonical_face(img)
        if key in seen:
            raise FacetCollision(f"facets {seen[key]} and {f} have the same image", facets=(seen[key], f))
        seen[key] = f
        facets.append(key)
    return SimplicialComplex(facets)


# ---------------------------------------------------------------------------
# chains of 7-vertex spheres

@dataclass(frozen=True)
class ChainStep:
    copy: int
    knot: str
    removed_from_chain: tuple | None
    removed_from_copy: tuple | None
    avoids: str


def _copy(j: int):
    from .generators import solid_torus_facets

    lab = lambda x: f"{x}.{j}"  # noqa: E731
    carrier = [tuple(lab(x) for x in f) for f in solid_torus_facets(1)]
    other = [tuple(lab(x) for x in f) for f in solid_torus_facets(2)]
    return SimplicialComplex(carrier + other), {canonical_face(f) for f in carrier}


def s_chain(n: int, sign: str = "+"):
    """Connected sum of 7-vertex spheres, one Lutz twist per summand.

    ``sign`` is ``+`` (twist along a trefoil, self-linking +1), ``-`` (along
    an unknot, self-linking -1) or ``0`` for the single sum of one copy of
    each.  Every twist happens inside the T1 half of its copy; removed
    facets always come from T2 halves, so they avoid every knot.  Returns a
    :class:`~contact_tri.generators.NamedComplex` whose notes carry the
    ledger entry and the per-step record.
    """
    from .generators import NamedComplex
    from .ledger import (
        TREFOIL_FRONT,
        UNKNOT_FRONT,
        ContactClass,
        KnotClass,
        apply_lutz,
        certify,
    )

    sign = str(sign)
    if sign not in {"+", "-", "0"}:
        raise BadParameter(f"sign must be '+', '-' or '0', got {sign!r}")
    if not isinstance(n, int) or n < 0:
        raise BadParameter(f"n must be a non-negative integer, got {n!r}")
    if sign == "0" and n != 0:
        raise BadParameter("sign 0 is the n = 0 case")
    if n == 0:
        sign = "0"
    if sign == "0":
        knots = [UNKNOT_FRONT, TREFOIL_FRONT]
    else:
        knots = [TREFOIL_FRONT if sign == "+" else UNKNOT_FRONT] * n

    assumption = "new knot unlinked from earlier knots"
    ledger = certify(ContactClass.new("s3", 0), 7, "7-vertex 3-sphere S12")
    X, carriers = _copy(1)
    steps = [ChainStep(1, knots[0].name, None, None, "in place")]
    ledger = apply_lutz(ledger, KnotClass.from_diagram(knots[0], 0, "s3"), 0,
                        note="twist inside the first copy")
    for j, knot in enumerate(knots[1:], start=2):
        Y, new_carrier = _copy(j)
        alpha = next(f for f in X.facets if f not in carriers)
        beta = next(f for f in Y.facets if f not in new_carrier)
        res = connected_sum_details(X, Y, alpha, beta)
        X = res.complex
        carriers |= {canonical_face(res.x2_labels[v] for v in f) for f in new_carrier}
        steps.append(ChainStep(j, knot.name, alpha, beta, "T1 carriers of all copies"))
        ledger = apply_lutz(
            ledger, KnotClass.from_diagram(knot, 0, "s3"), 3, (assumption,),
            note=f"connected sum with copy {j}",
        )
    return NamedComplex(
        f"s_chain_{n}{'' if sign == '0' else sign}",
        X,
        provenance=f"connected sum of {len(knots)} twisted 7-vertex 3-spheres; "
        f"3|n| + 4 vertices for n != 0, 10 for n = 0",
        notes={"ledger": ledger, "steps": steps},
    )
