import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from contact_tri import generators as g
from contact_tri.cubes import cube77_assembly, t3_40
from contact_tri.errors import BadParameter, DegenerateSlice, MissingCoordinates, NotOnSphere
from contact_tri.geometry.contact import (
    contact_form_beta,
    example_edge_arc,
    example_edge_arc_derivative,
    example_face_derivative,
    face_point_and_tangents,
    face_tangency_margin,
    legendrian_deviation,
    legendrian_edges,
    lemma_profile,
    lutz_profile_check,
    permutation_matrix,
    preserves_contact_planes,
    radial_arc,
    standard_profile,
    constant_profile,
)
from contact_tri.geometry.disks import (
    DiskSpec,
    PLSolidTorusModel,
    delta_hat,
    disk_containment_report,
    meridian_fit,
    meridian_fit_exact,
)
from contact_tri.geometry.off import off_export, parse_off
from contact_tri.geometry.realization import (
    Model,
    Realization,
    facet_diameters,
    sampled_simplex_diameter,
)
from contact_tri.symmetry import automorphism_group


def alpha_wedge_dalpha(p, u, v, w):
    """(a ^ da)(u, v, w) for a = x2 dx1 - x1 dx2 + y2 dy1 - y1 dy2 in R^4,
    written out directly from the coordinate formula."""
    x1, y1, x2, y2 = p

    def a(z):
        return x2 * z[0] + y2 * z[1] - x1 * z[2] - y1 * z[3]

    def da(z1, z2):
        # da = 2 (dx2 ^ dx1 + dy2 ^ dy1)
        return 2 * ((z1[2] * z2[0] - z1[0] * z2[2]) + (z1[3] * z2[1] - z1[1] * z2[3]))

    return a(u) * da(v, w) + a(v) * da(w, u) + a(w) * da(u, v)


unit4 = st.lists(st.floats(-1, 1), min_size=4, max_size=4).filter(lambda x: sum(t * t for t in x) > 0.1)


@given(unit4)
def test_contact_form_is_nondegenerate_on_the_sphere(x):
    p = np.array(x) / np.linalg.norm(x)
    beta = contact_form_beta(p)
    # tangent frame of S^3 at p via the quaternionic structure
    x1, y1, x2, y2 = p
    frame = [
        np.array([-y1, x1, -y2, x2]),
        np.array([-x2, y2, x1, -y1]),
        np.array([-y2, -x2, y1, x1]),
    ]
    for f in frame:
        assert abs(f @ p) < 1e-12
    assert abs(alpha_wedge_dalpha(p, *frame)) > 1e-6
    # the form never vanishes on the tangent space
    assert max(abs(beta @ f) for f in frame) > 0.5


def test_contact_form_rejects_off_sphere_points():
    with pytest.raises(NotOnSphere):
        contact_form_beta([1, 1, 0, 0])


def test_example_arc_is_legendrian():
    assert legendrian_deviation(example_edge_arc, 1000, example_edge_arc_derivative) < 1e-9
    assert legendrian_deviation(example_edge_arc, 1000) < 1e-9
    t = np.linspace(0.1, 0.9, 9)
    fd = (example_edge_arc(t + 1e-6) - example_edge_arc(t - 1e-6)) / 2e-6
    assert np.allclose(fd, example_edge_arc_derivative(t), atol=1e-8)


def test_non_legendrian_arc_is_detected():
    arc = radial_arc([1, 0, 0, 0], [0, 0, 1, 0])
    assert legendrian_deviation(arc, 200) > 0.5


def test_sigma8_radial_edges():
    nc = g.sigma8()
    dev = legendrian_edges(nc.complex, nc.realization, 500)
    legendrian = sorted(e for e, d in dev.items() if d < 1e-9)
    assert len(dev) == 24 and len(legendrian) == 16
    # the non-Legendrian ones join u_i to w_i or v_i to z_i
    rest = sorted(set(dev) - set(legendrian))
    assert all(a[0] + b[0] in ("uw", "vz") for a, b in rest)


def test_face_margins_sigma8():
    nc = g.sigma8()
    X, R = nc.complex, nc.realization
    margins = [face_tangency_margin([R.point(v) for v in f], 40) for f in X.faces(2)]
    assert len(margins) == 32
    assert all(m.ok for m in margins)


def test_face_derivative_closed_form():
    P = np.eye(4)[:3]
    T = np.array([[0.2, 0.3], [0.5, 0.1], [0.25, 0.25]])
    _, d1, _ = face_point_and_tangents(P, T)
    for (t1, t2), d in zip(T, d1):
        assert np.allclose(example_face_derivative(t1, t2, 1 - t1 - t2), d, atol=1e-12)


def test_contact_preserving_symmetries_of_sigma8():
    nc = g.sigma8()
    G = automorphism_group(nc.complex)
    signs = [preserves_contact_planes(permutation_matrix(p, nc.realization)) for p in G.elements()]
    assert len(signs) == 384
    assert sum(1 for s in signs if s) == 64
    swap = {"u1": "z1", "z1": "u1", "u2": "z2", "z2": "u2"}
    full = {v: swap.get(v, v) for v in nc.complex.vertices}
    assert preserves_contact_planes(permutation_matrix(full, nc.realization)) == 0


def test_lemma_profile_is_contact():
    rep = lutz_profile_check(lemma_profile(0.5), samples=10_000)
    assert rep.min_abs_det > 0 and rep.det_sign != 0
    assert all(rep.conditions.values())
    assert rep.ok


def test_standard_profile_and_failure_mode():
    assert lutz_profile_check(standard_profile(), samples=2000).ok
    bad = lutz_profile_check(constant_profile(1.0, 0.0), samples=100)
    assert not bad.ok and bad.min_abs_det == 0


def test_lemma_profile_rejects_bad_radius():
    with pytest.raises(ValueError):
        lemma_profile(1.5)


def test_three_function_condition():
    rep = lutz_profile_check(lemma_profile(0.5), samples=500, h3=lambda r, phi: 0 * r)
    assert rep.cc_min == pytest.approx(rep.min_abs_det)


# ---------------------------------------------------------------------------
# disks


@pytest.mark.parametrize("t", np.linspace(0.01, 0.99, 37))
def test_meridian_fit_matches_closed_form(t):
    m = PLSolidTorusModel()
    assert meridian_fit(m, t, tol=1e-10) == pytest.approx(meridian_fit_exact(m, t), abs=1e-8)


def test_meridian_fit_on_a_wall():
    m = PLSolidTorusModel()
    assert meridian_fit(m, 1 / 7) == 0.0
    with pytest.raises(DegenerateSlice):
        meridian_fit(m, 1 / 7, strict=True)


def test_delta_hat_below_one_and_refines():
    coarse = delta_hat(samples=1000, tol=1e-6)
    fine = delta_hat(samples=1000, tol=1e-9)
    assert fine.delta_hat < 0.99
    assert fine.delta_hat >= coarse.delta_hat - 1e-12


def test_pl_model_vertices_lie_on_the_meridian_loops():
    m = PLSolidTorusModel()
    for i in range(7):
        for k, phi in zip((i, i + 1, i + 2), m.breakpoints(i)):
            assert float(m.boundary_height(i, phi)) == pytest.approx(k / 7)


def test_disk_containment_threshold():
    nc = t3_40()
    rep = disk_containment_report(nc.complex, nc.realization, DiskSpec("core", 0.3, 0.5))
    assert rep.status == "PASS" and rep.margin > 0
    assert rep.max_diameter == pytest.approx(math.sqrt(2) / 3, abs=1e-12)
    tight = disk_containment_report(nc.complex, nc.realization, DiskSpec("core", 0.2, 0.5))
    assert tight.status == "FAIL" and tight.upper_status == "PASS"
    with pytest.raises(BadParameter):
        DiskSpec("core", 0.5, 0.2)


def test_vertex_pairs_realize_the_diameter():
    assembly = cube77_assembly()[0]
    X, R = assembly.complex(), assembly.realization()
    for f, d in facet_diameters(X, R)[:30]:
        pts = np.array([R.point(v) for v in f])
        assert sampled_simplex_diameter(pts, 500) <= d + 1e-12


def test_flat_torus_distance_wraps():
    R = Realization(Model.FLAT_TORUS3, {"a": (0.05, 0, 0), "b": (0.95, 0, 0)})
    assert R.distance("a", "b") == pytest.approx(0.1)


# ---------------------------------------------------------------------------
# OFF


def test_off_round_trip_sphere():
    nc = g.sigma8()
    text = off_export(nc.complex, nc.realization)
    pts, faces = parse_off(text)
    assert text.startswith("4OFF")
    assert len(pts) == 8 and len(faces) == 32
    verts = nc.complex.vertices
    for v, p in zip(verts, pts):
        assert p == tuple(nc.realization.coords[v])
    assert {tuple(verts[i] for i in f) for f in faces} == set(nc.complex.faces(2))


def test_off_flat_torus_exports_cube():
    nc = t3_40()
    pts, faces = parse_off(off_export(nc.complex, nc.realization))
    assert len(pts) == 77 and len(faces) == 458
    assert all(0 <= x <= 1 for p in pts for x in p)


def test_off_solid_torus_and_missing_coordinates():
    nc = g.solid_torus(1)
    pts, faces = parse_off(off_export(nc.complex, nc.realization))
    assert len(pts) == 7 and len(faces) == len(nc.complex.faces(2))
    with pytest.raises(MissingCoordinates):
        off_export(g.s21_10().complex, None)
