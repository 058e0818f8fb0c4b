import pytest

from contact_tri import generators as g
from contact_tri.algebra import homology
from contact_tri.complex import BallLevel, SimplicialComplex, certify_ball, certify_manifold, classify_surface
from contact_tri.errors import BadIndex
from contact_tri.geometry.realization import Model


def test_generators_are_pure_functions():
    for name in g.names():
        if name in ("cube77", "t3_40", "t3_family"):
            continue
        assert g.generate(name).complex == g.generate(name).complex


def test_unknown_names():
    with pytest.raises(BadIndex):
        g.generate("klein_bottle")
    with pytest.raises(BadIndex):
        g.solid_torus(4)
    with pytest.raises(BadIndex):
        g.s_ij(2, 1)


def test_small_f_vectors():
    assert g.s3_5().complex.f_vector() == (5, 10, 10, 5)
    assert g.sigma8().complex.f_vector() == (8, 24, 32, 16)
    assert g.torus7().complex.f_vector() == (7, 21, 14)
    f = g.s21_10().complex.f_vector()
    assert (f[0], f[3]) == (10, 30)


def test_sigma8_sits_on_the_sphere():
    R = g.sigma8().realization
    assert R.model is Model.SPHERE3
    assert R.point("u1").tolist() == [1.0, 0.0, 0.0, 0.0]
    assert R.point("z2").tolist() == [0.0, 0.0, 0.0, -1.0]


def test_solid_tori_share_the_torus():
    tau = g.torus7().complex
    for i in (1, 2, 3):
        T = g.solid_torus(i).complex
        assert T.boundary() == tau
        assert certify_manifold(T).is_manifold_with_boundary
    T1, T2, T3 = (set(g.solid_torus(i).complex.faces(2)) for i in (1, 2, 3))
    assert T1 & T2 == T1 & T3 == T2 & T3 == set(tau.facets)


def test_seven_vertex_spheres():
    for i, j in ((1, 2), (1, 3), (2, 3)):
        X = g.s_ij(i, j).complex
        assert X.f_vector() == (7, 21, 28, 14)
        assert certify_manifold(X).is_closed_manifold
        assert str(homology(X)) == "(Z, 0, 0, Z)"


def test_s2xs1_pieces():
    X = g.s21_10().complex
    T4, T5 = g.t4().complex, g.t5().complex
    assert set(T4.facets) | set(T5.facets) == set(X.facets)
    assert not set(T4.facets) & set(T5.facets)
    tau1 = g.torus10().complex
    assert T4.boundary() == tau1 == T5.boundary()
    assert classify_surface(tau1).genus == 1


def test_walkup_balls():
    balls = g.walkup_balls()
    for name in ("b12", "b34"):
        B = balls[name].complex
        assert certify_ball(B) >= BallLevel.HOMOLOGY_BALL
        assert classify_surface(B.boundary()).is_sphere
    tri = {k: set(balls[k].complex.faces(2)) for k in balls}
    assert tri["b1"] & tri["b2"] == {("v2", "v4", "v6"), ("v4", "v5", "v6")}
    assert tri["b3"] & tri["b4"] == {("v0", "v1", "v8"), ("v0", "v8", "v9")}
    # the shared part of the two halves is two disjoint disks
    shared = SimplicialComplex(sorted(tri["b12"] & tri["b34"]))
    assert set(shared.facets) == {
        ("v5", "v6", "v8"), ("v6", "v7", "v8"), ("v0", "v1", "v2"), ("v0", "v2", "v4"), ("v2", "v3", "v4")
    }
    cert = classify_surface(shared)
    assert not cert.connected and cert.euler_characteristic == 2 and cert.boundary_components == 2
    assert set(balls["b12"].complex.facets) | set(balls["b34"].complex.facets) == set(g.t4().complex.facets)


def test_s21_10_symmetries_are_maps_of_labels():
    sym = g.s21_10_symmetries()
    assert sym["alpha"]["v9"] == "v1"
    assert sym["beta"]["v3"] == "v7"
    assert sym["gamma"]["v7"] == "v2"
