import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contact_tri.complex import (
    BallLevel,
    SimplicialComplex,
    canonical_face,
    certify_ball,
    certify_manifold,
    classify_surface,
    coherent_orientation,
    greedy_collapse,
    label_key,
    permutation_parity,
)
from contact_tri.errors import (
    DimensionUnsupported,
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimension,
    NotManifoldWithBoundary,
    NotPure,
    NotSurface,
)
from contact_tri.generators import s3_5, sigma8, solid_torus, torus7


def octahedron():
    return SimplicialComplex(
        [(a, b, c) for a in ("x+", "x-") for b in ("y+", "y-") for c in ("z+", "z-")]
    )


def test_natural_label_order():
    assert sorted(["v10", "v2", "v1"], key=label_key) == ["v1", "v2", "v10"]
    assert canonical_face(["b", "a10", "a9"]) == ("a9", "a10", "b")


def test_construction_is_canonical():
    X = SimplicialComplex([("c", "a", "b"), ("b", "c", "d"), ("a", "b")], pure=False)
    assert X.facets == (("a", "b", "c"), ("b", "c", "d"))
    assert X == SimplicialComplex([("d", "c", "b"), ("a", "b", "c")])
    assert ("a", "c") in X and ("a", "d") not in X


def test_construction_errors():
    with pytest.raises(EmptyInput):
        SimplicialComplex.from_facets([])
    with pytest.raises(DuplicateVertexInFacet):
        SimplicialComplex([("a", "a", "b")])
    with pytest.raises(MixedDimension):
        SimplicialComplex([("a", "b", "c"), ("c", "d")])
    with pytest.raises(NotPure):
        SimplicialComplex([("a", "b", "c"), ("c", "d")], pure=False).boundary()


def test_f_vector_and_euler():
    assert octahedron().f_vector() == (6, 12, 8)
    assert octahedron().euler_characteristic() == 2
    assert s3_5().complex.euler_characteristic() == 0


def test_links_and_boundary():
    X = sigma8().complex
    L = X.link("u1")
    assert L.f_vector() == (6, 12, 8)
    assert X.boundary().is_empty
    T = solid_torus(1).complex
    assert T.boundary() == torus7().complex


def test_link_of_edge():
    X = s3_5().complex
    L = X.face_link(("1", "2"))
    assert L.f_vector() == (3, 3)


def test_surface_classification():
    c = classify_surface(octahedron())
    assert c.is_sphere and c.orientable and c.genus == 0
    t = classify_surface(torus7().complex)
    assert t.is_closed_surface and t.genus == 1
    disk = SimplicialComplex([("a", "b", "c"), ("a", "c", "d")])
    assert classify_surface(disk).is_disk


def test_non_surface_names_the_edge():
    X = SimplicialComplex([("a", "b", "c"), ("a", "b", "d"), ("a", "b", "e")])
    with pytest.raises(NotSurface) as err:
        classify_surface(X)
    assert err.value.cell == ("a", "b")


def test_manifold_certificate_closed():
    cert = certify_manifold(sigma8().complex)
    assert cert.is_closed_manifold and cert.orientable
    assert not cert.bad_links


def test_manifold_certificate_detects_pinch():
    # two tetrahedra sharing only a vertex: the vertex link is disconnected
    X = SimplicialComplex([("a", "b", "c", "d"), ("a", "e", "f", "g")])
    cert = certify_manifold(X)
    assert not cert.links_ok
    assert "a" in cert.bad_links


def test_dimension_guard():
    X = SimplicialComplex.simplex_boundary([str(i) for i in range(6)])
    with pytest.raises(DimensionUnsupported):
        certify_manifold(X)


def test_orientation_of_mobius_strip_fails():
    mobius = SimplicialComplex([(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1), (5, 1, 2)])
    assert not classify_surface(mobius).orientable
    assert coherent_orientation(mobius) is None
    assert coherent_orientation(octahedron()) is not None


def test_collapse_and_ball_levels():
    simplex = SimplicialComplex([("a", "b", "c", "d")])
    assert greedy_collapse(simplex).to_point
    assert certify_ball(simplex) is BallLevel.COLLAPSIBLE
    assert BallLevel.FAIL < BallLevel.HOMOLOGY_BALL < BallLevel.COLLAPSIBLE
    T = solid_torus(1).complex
    assert certify_ball(T) is BallLevel.FAIL
    with pytest.raises(NotManifoldWithBoundary):
        certify_ball(sigma8().complex)


def test_collapse_is_deterministic():
    T = solid_torus(2).complex
    assert greedy_collapse(T) == greedy_collapse(T)


@given(st.permutations(list(range(6))))
def test_parity_matches_inversion_count(p):
    inv = sum(1 for i, j in itertools.combinations(range(6), 2) if p[i] > p[j])
    assert permutation_parity(p) == (-1) ** inv


@given(st.lists(st.lists(st.integers(0, 7), min_size=3, max_size=3, unique=True), min_size=1, max_size=12))
def test_face_closure_invariants(facets):
    X = SimplicialComplex(facets)
    f = X.f_vector()
    # every face lies in the closure and faces of faces are faces
    for k in range(1, len(f)):
        for face in X.faces(k):
            for sub in itertools.combinations(face, k):
                assert sub in X
    assert X.euler_characteristic() == sum((-1) ** k * n for k, n in enumerate(f))


@given(st.permutations(["a", "b", "c", "d", "e", "f"]))
def test_relabel_preserves_f_vector(perm):
    X = octahedron()
    m = dict(zip(X.vertices, perm))
    assert X.relabel(m).f_vector() == X.f_vector()
