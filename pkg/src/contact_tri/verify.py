"""Check suites behind ``contact-tri verify``.

Each suite builds its target, measures a handful of quantities and compares
them with expected values.  Suites are deterministic; the surgery suite
draws its random pairs from a fixed seed.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable

PASS, FAIL, UNKNOWN = "PASS", "FAIL", "UNKNOWN"


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    measured: Any
    expected: Any
    tol: float | None = None
    provenance: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "measured": _jsonable(self.measured),
            "expected": _jsonable(self.expected),
            "tol": self.tol,
            "provenance": self.provenance,
        }


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class VerificationReport:
    target: str
    checks: list[Check] = field(default_factory=list)

    @property
    def exit_status(self) -> int:
        return 1 if any(c.status == FAIL for c in self.checks) else 0

    @property
    def ok(self) -> bool:
        return self.exit_status == 0

    def to_json(self) -> dict:
        return {"target": self.target, "exit_status": self.exit_status,
                "checks": [c.to_json() for c in self.checks]}

    def table(self) -> str:
        rows = [(c.status, c.id, _short(c.measured), _short(c.expected),
                 "" if c.tol is None else f"{c.tol:g}", c.provenance) for c in self.checks]
        head = ("status", "check", "measured", "expected", "tol", "source")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(5)]
        lines = [f"== {self.target} =="]
        for r in [head] + rows:
            lines.append("  ".join(r[i].ljust(widths[i]) for i in range(5)) + "  " + r[5])
        return "\n".join(lines)


def _short(x, width: int = 40) -> str:
    s = x if isinstance(x, str) else json.dumps(_jsonable(x))
    return s if len(s) <= width else s[: width - 3] + "..."


class _Suite:
    def __init__(self, target: str):
        self.report = VerificationReport(target)

    def eq(self, id: str, measured, expected, provenance: str):
        status = PASS if measured == expected else FAIL
        self.report.checks.append(Check(id, status, measured, expected, None, provenance))

    def close(self, id: str, measured: float, expected: float, tol: float, provenance: str):
        status = PASS if abs(measured - expected) <= tol else FAIL
        self.report.checks.append(Check(id, status, measured, expected, tol, provenance))

    def true(self, id: str, ok: bool, measured, expected, provenance: str, tol=None):
        self.report.checks.append(Check(id, PASS if ok else FAIL, measured, expected, tol, provenance))

    def unknown(self, id: str, measured, expected, provenance: str):
        self.report.checks.append(Check(id, UNKNOWN, measured, expected, None, provenance))


# ---------------------------------------------------------------------------
# helpers shared by suites

def _closed_checks(s: _Suite, X, homology_golden: str, label: str):
    from .algebra import homology
    from .complex import certify_manifold

    cert = certify_manifold(X)
    s.true(f"{label}.links", cert.links_ok and cert.pseudomanifold and cert.closed,
           {"links_ok": cert.links_ok, "pseudomanifold": cert.pseudomanifold, "closed": cert.closed},
           "all links spheres", "closed manifold criterion")
    s.true(f"{label}.orientable", cert.orientable, cert.orientable, True, "closed manifold criterion")
    s.eq(f"{label}.homology", str(homology(X)), homology_golden, "integer homology golden")


def _sphere_suite(name: str, f_golden: tuple, aut: int | None = None) -> Callable[..., VerificationReport]:
    def run(**_):
        from . import generators as g
        from .algebra import sphere_certificate

        s = _Suite(name)
        X = g.generate(name).complex
        s.eq("f_vector", X.f_vector(), f_golden, "reference f-vector")
        _closed_checks(s, X, "(Z, 0, 0, Z)", "sphere")
        cert = sphere_certificate(X)
        s.true("sphere.pi1", cert.pi1_trivialized, cert.label, "pi1 trivialized", "best-effort S3 recognition")
        if aut is not None:
            from .symmetry import automorphism_group

            s.eq("aut.order", automorphism_group(X).order, aut, "reference group order")
        return s.report

    return run


# ---------------------------------------------------------------------------
# suites

def suite_sigma8(samples: int = 60, **_) -> VerificationReport:
    from . import generators as g
    from .geometry.contact import face_tangency_margin, legendrian_edges
    from .symmetry import automorphism_group, orbits

    s = _Suite("sigma8")
    nc = g.sigma8()
    X, R = nc.complex, nc.realization
    s.eq("f_vector", X.f_vector(), (8, 24, 32, 16), "reference f-vector")
    _closed_checks(s, X, "(Z, 0, 0, Z)", "sphere")
    G = automorphism_group(X)
    s.eq("aut.order", G.order, 384, "reference group order")
    s.eq("aut.order_enumerated", G.enumerated, G.order, "stabilizer chain vs exhaustive search")
    s.eq("aut.edge_orbits", len(orbits(G, X.faces(1))), 1, "transitive on edges")
    s.eq("aut.triangle_orbits", len(orbits(G, X.faces(2))), 1, "transitive on triangles")
    margins = [face_tangency_margin([R.point(v) for v in t], samples) for t in X.faces(2)]
    worst = min(m.plane_margin for m in margins)
    s.true("contact.face_margin", all(m.ok for m in margins), worst, "> 0 on all 32 triangles",
           "no triangle tangent to the contact planes")
    dev = legendrian_edges(X, R)
    leg = sum(1 for d in dev.values() if d < 1e-9)
    s.unknown("contact.radial_legendrian_edges", f"{leg}/{len(dev)}", "24/24",
              "great-circle arcs only; remaining edges need a perturbation")
    return s.report


def suite_torus7(**_) -> VerificationReport:
    from . import generators as g
    from .complex import classify_surface

    s = _Suite("torus7")
    X = g.torus7().complex
    s.eq("f_vector", X.f_vector(), (7, 21, 14), "reference f-vector")
    c = classify_surface(X)
    s.true("surface", c.is_closed_surface and c.orientable and c.genus == 1,
           {"closed": c.is_closed_surface, "orientable": c.orientable, "genus": c.genus},
           "closed orientable genus 1", "surface classification")
    return s.report


def suite_solid_tori(**_) -> VerificationReport:
    from . import generators as g
    from .algebra import h1_class, homology

    s = _Suite("solid_tori")
    tau = g.torus7().complex
    for i in (1, 2, 3):
        T = g.solid_torus(i).complex
        s.eq(f"T{i}.f_vector", T.f_vector(), (7, 21, 21, 7), "seven tetrahedra on seven vertices")
        s.true(f"T{i}.boundary", T.boundary() == tau, T.boundary().f_vector(), "7-vertex torus",
               "boundary is the common torus")
        s.eq(f"T{i}.homology", str(homology(T)), "(Z, Z, 0, 0)", "integer homology golden")
        s.eq(f"T{i}.meridian_class", h1_class(T, g.meridian_loop(i)), (0,), "meridian bounds a disk")
    return s.report


def suite_s_ij(**_) -> VerificationReport:
    from . import generators as g
    from .algebra import homology, sphere_certificate

    s = _Suite("s_ij")
    for i, j in ((1, 2), (1, 3), (2, 3)):
        X = g.s_ij(i, j).complex
        s.eq(f"S{i}{j}.f_vector", X.f_vector(), (7, 21, 28, 14), "reference f-vector")
        _closed_checks(s, X, "(Z, 0, 0, Z)", f"S{i}{j}")
        cert = sphere_certificate(X)
        s.true(f"S{i}{j}.pi1", cert.pi1_trivialized, cert.label, "pi1 trivialized", "best-effort S3 recognition")
    return s.report


def suite_s21_10(**_) -> VerificationReport:
    from . import generators as g
    from .complex import BallLevel, certify_ball, classify_surface
    from .symmetry import apply_to_face, automorphism_group, verify_automorphisms

    s = _Suite("s21_10")
    X = g.s21_10().complex
    f = X.f_vector()
    s.eq("f0_f3", (f[0], f[3]), (10, 30), "reference counts")
    _closed_checks(s, X, "(Z, Z, Z, Z)", "s2xs1")
    sym = g.s21_10_symmetries()
    s.eq("alpha_beta_gamma", verify_automorphisms(X, sym.values()), [True, True, True], "listed generators alpha, beta, gamma")
    s.eq("aut.order", automorphism_group(X).order, 20, "generated by the three maps")
    T4, T5 = g.t4().complex, g.t5().complex
    img = {apply_to_face(sym["gamma"], t) for t in T4.facets}
    s.true("gamma(T4)=T5", img == set(T5.facets), len(img & set(T5.facets)), 15, "rotation by five swaps the halves")
    tau1 = g.torus10().complex
    for name, T in (("T4", T4), ("T5", T5)):
        s.true(f"{name}.boundary", T.boundary() == tau1, T.boundary().f_vector(), "10-vertex torus",
               "boundary is the common torus")
    s.true("torus10.surface", classify_surface(tau1).genus == 1, classify_surface(tau1).genus, 1,
           "surface classification")
    balls = g.walkup_balls()
    for name in ("b12", "b34"):
        B = balls[name].complex
        level = certify_ball(B)
        s.true(f"{name}.ball", level >= BallLevel.HOMOLOGY_BALL, level.name, ">= HOMOLOGY_BALL",
               "3-ball with 2-sphere boundary")
    return s.report


def suite_cube77(tol: float = 1e-12, **_) -> VerificationReport:
    from . import cubes
    from .geometry.realization import edge_lengths, max_diameter

    s = _Suite("cube77")
    assembly, info, rep = cubes.cube77_assembly()
    X, R = assembly.complex(), assembly.realization()
    s.eq("f_vector", X.f_vector(), (77, 332, 458, 202), "reference f-vector")
    s.eq("gluing.interior", len(rep.mismatched_interior), 0, "matching subdivisions on shared squares")
    s.eq("gluing.periodic", len(rep.mismatched_periodic), 0, "opposite faces are translates")
    s.eq("gluing.layout_kept", info["layout_types_kept"], True, "block layout as drawn")
    allowed = (1 / 3, math.sqrt(2) / 3, 1 / (2 * math.sqrt(3)))
    worst = max(min(abs(ell - a) for a in allowed) for ell in edge_lengths(X, R))
    s.true("edge_lengths", worst <= tol, worst, "in {1/3, sqrt2/3, 1/(2 sqrt3)}", "block geometry", tol)
    s.close("max_diameter", max_diameter(X, R), math.sqrt(2) / 3, tol, "longest edge sqrt2/3")
    return s.report


def suite_t3_40(tol: float = 1e-12, **_) -> VerificationReport:
    from . import cubes
    from .geometry.realization import max_diameter

    s = _Suite("t3_40")
    nc = cubes.t3_40()
    s.eq("f_vector", nc.complex.f_vector(), (40, 242, 404, 202), "reference counts")
    _closed_checks(s, nc.complex, "(Z, Z^3, Z^3, Z)", "t3")
    s.close("max_diameter", max_diameter(nc.complex, nc.realization), math.sqrt(2) / 3, tol,
            "inherited from the cube")
    return s.report


def suite_t3_family(n: int = 2, tol: float = 1e-12, **_) -> VerificationReport:
    from . import cubes
    from .geometry.realization import max_diameter

    s = _Suite(f"t3_family(n={n})")
    nc = cubes.t3_family(n)
    m = 2 * n
    s.eq("f_vector", nc.complex.f_vector(), (m ** 3, 6 * m ** 3, 10 * m ** 3, 5 * m ** 3),
         "8n^3 vertices, 5 tetrahedra per small cube")
    _closed_checks(s, nc.complex, "(Z, Z^3, Z^3, Z)", "t3")
    s.close("max_diameter", max_diameter(nc.complex, nc.realization), 1 / (math.sqrt(2) * n), tol,
            "face diagonal of a cube of side 1/(2n)")
    return s.report


def suite_s_chain(n_max: int = 10, **_) -> VerificationReport:
    from .algebra import homology
    from .complex import certify_manifold
    from .ledger import s3_vertex_bound
    from .surgery import s_chain

    s = _Suite("s_chain")
    cases = [(0, "0")] + [(n, sg) for n in range(1, n_max + 1) for sg in "+-"]
    for n, sg in cases:
        nc = s_chain(n, sg)
        X = nc.complex
        label = f"n={n}{'' if sg == '0' else sg}"
        expected = 10 if n == 0 else 3 * n + 4
        s.eq(f"{label}.f0", X.f_vector()[0], expected, "3|n| + 4 vertices, 10 for n = 0")
        cert = certify_manifold(X)
        s.true(f"{label}.closed", cert.is_closed_manifold, cert.is_closed_manifold, True,
               "closed manifold criterion")
        s.eq(f"{label}.homology", str(homology(X)), "(Z, 0, 0, Z)", "integer homology golden")
        led = nc.notes["ledger"]
        d3 = {"0": 0, "+": n, "-": -n}[sg]
        s.eq(f"{label}.ledger", (led.d3, led.f0_bound), (d3, s3_vertex_bound(d3)), "vertex bound formula")
    return s.report


SUM_CORPUS = ("s3_5", "sigma8", "s_12", "s_13", "s_23", "s21_10")


def suite_surgery(pairs: int = 20, seed: int = 0, **_) -> VerificationReport:
    from . import generators as g
    from .complex import certify_manifold
    from .surgery import connected_sum

    s = _Suite("surgery")
    rng = random.Random(seed)
    cache = {name: g.generate(name).complex for name in SUM_CORPUS}
    for k in range(pairs):
        a, b = rng.choice(SUM_CORPUS), rng.choice(SUM_CORPUS)
        X, Y = cache[a], cache[b]
        s1, s2 = rng.choice(X.facets), rng.choice(Y.facets)
        Z = connected_sum(X, Y, s1, s2)
        s.eq(f"pair{k:02d}.{a}#{b}.f0", Z.f_vector()[0], X.f_vector()[0] + Y.f_vector()[0] - 4,
             "f0(X) + f0(Y) - 4")
        s.true(f"pair{k:02d}.{a}#{b}.closed", certify_manifold(Z).is_closed_manifold, True, True,
               "closed manifold criterion")
    return s.report


def suite_contact(samples: int = 1000, tol: float = 1e-9, profile_samples: int = 10000,
                  **_) -> VerificationReport:
    from .geometry.contact import (
        example_edge_arc,
        example_edge_arc_derivative,
        legendrian_deviation,
        lemma_profile,
        lutz_profile_check,
    )

    s = _Suite("contact")
    dev = legendrian_deviation(example_edge_arc, samples)
    s.true("edge_arc.deviation", dev < tol, dev, f"< {tol:g}", "arc tangent to the contact planes", tol)
    dev2 = legendrian_deviation(example_edge_arc, samples, derivative=example_edge_arc_derivative)
    s.true("edge_arc.deviation_exact", dev2 < tol, dev2, f"< {tol:g}", "analytic derivative", tol)
    rep = lutz_profile_check(lemma_profile(0.5), samples=profile_samples)
    s.true("lemma_profile.det", rep.ok and rep.min_abs_det > 0, rep.min_abs_det, "> 0 on (1e-3, 1]",
           "nonvanishing determinant")
    return s.report


def suite_disk(samples: int = 1000, tol: float = 1e-9, **_) -> VerificationReport:
    from .geometry.disks import delta_hat

    s = _Suite("disk")
    coarse = delta_hat(samples=samples, tol=1e-6)
    fine = delta_hat(samples=samples, tol=tol)
    s.true("delta_hat", fine.delta_hat < 0.99, fine.delta_hat, "< 0.99", "meridional disks stay small")
    s.true("delta_hat.monotone", fine.delta_hat >= coarse.delta_hat,
           [coarse.delta_hat, fine.delta_hat], "non-decreasing", "tolerance refinement")
    return s.report


def suite_ledger(**_) -> VerificationReport:
    from .ledger import (
        TREFOIL_FRONT,
        UNKNOT_FRONT,
        general_vertex_bound,
        s3_vertex_bound,
        t3_ledger,
        writhe,
    )

    s = _Suite("ledger")
    s.eq("writhe.unknot", writhe(UNKNOT_FRONT), -1, "front diagram")
    s.eq("writhe.trefoil", writhe(TREFOIL_FRONT), 1, "front diagram")
    for n in (1, 2, 3):
        c, _ = t3_ledger(n, 0.45)
        s.eq(f"t3_ledger(n={n}).d2", c.d2, (0, 0, -n), "-n times the dual of the core")
    s.eq("s3_vertex_bound", [s3_vertex_bound(n) for n in range(-5, 6)],
         [3 * abs(n) + 4 if n else 10 for n in range(-5, 6)], "3|n| + 4, 10 for n = 0")
    s.eq("general_vertex_bound(40)", [general_vertex_bound(40, n) for n in range(-5, 6)],
         [40 + 3 * abs(n) if n else 46 for n in range(-5, 6)], "f0 + 3|n|, f0 + 6 for n = 0")
    return s.report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "s3_5": _sphere_suite("s3_5", (5, 10, 10, 5), aut=120),
    "sigma8": suite_sigma8,
    "torus7": suite_torus7,
    "solid_tori": suite_solid_tori,
    "s_ij": suite_s_ij,
    "s21_10": suite_s21_10,
    "cube77": suite_cube77,
    "t3_40": suite_t3_40,
    "t3_family": suite_t3_family,
    "s_chain": suite_s_chain,
    "surgery": suite_surgery,
    "contact": suite_contact,
    "disk": suite_disk,
    "ledger": suite_ledger,
}


def run_suite(target: str, **opts) -> VerificationReport:
    from .errors import BadIndex

    if target not in SUITES:
        raise BadIndex(f"no verification suite {target!r}; known: {', '.join(SUITES)}")
    return SUITES[target](**opts)


def run_all(**opts) -> list[VerificationReport]:
    reports = [SUITES[name](**opts) for name in SUITES if name != "t3_family"]
    reports += [suite_t3_family(n=n, **{k: v for k, v in opts.items() if k != "n"}) for n in (2, 3, 4)]
    return reports
