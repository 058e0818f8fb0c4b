"""Numerical checks for the standard contact form on the unit 3-sphere and for
radial Lutz-twist profiles.

Points of R^4 use the coordinate order (x1, y1, x2, y2).  The 1-form
``x2 dx1 - x1 dx2 + y2 dy1 - y1 dy2`` is represented by its coefficient
vector ``(x2, y2, -x1, -y1)`` in that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import NotOnSphere

DIFF_STEP = 1e-6
SPHERE_TOL = 1e-9

# beta_p(v) = p @ BETA_MATRIX @ v
BETA_MATRIX = np.array(
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=float
)


def contact_form_beta(p, tol: float = SPHERE_TOL) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,) or abs(np.linalg.norm(p) - 1.0) > tol:
        raise NotOnSphere(f"{p.tolist()} is not a unit vector in R^4")
    x1, y1, x2, y2 = p
    return np.array([x2, y2, -x1, -y1])


def _beta_rows(P: np.ndarray) -> np.ndarray:
    """Coefficient vectors for a stack of points, without the sphere check."""
    return np.stack([P[:, 2], P[:, 3], -P[:, 0], -P[:, 1]], axis=1)


def radial_arc(a, b) -> Callable[[np.ndarray], np.ndarray]:
    """Radial projection of the segment from ``a`` (t = 0) to ``b`` (t = 1)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    def c(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))[:, None]
        q = (1 - t) * a + t * b
        return q / np.linalg.norm(q, axis=1, keepdims=True)

    return c


def example_edge_arc(t):
    """The arc ``(2t^2 - 2t + 1)^(-1/2) (t, 1-t, 0, 0)`` from e2 to e1."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    n = 1 / np.sqrt(2 * t * t - 2 * t + 1)
    return np.stack([n * t, n * (1 - t), 0 * t, 0 * t], axis=1)


def example_edge_arc_derivative(t):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    n = (2 * t * t - 2 * t + 1) ** -1.5
    return np.stack([n * (1 - t), -n * t, 0 * t, 0 * t], axis=1)


def central_difference(curve, t: np.ndarray, h: float = DIFF_STEP) -> np.ndarray:
    return (curve(t + h) - curve(t - h)) / (2 * h)


def legendrian_deviation(
    arc: Callable,
    samples: int = 1000,
    derivative: Callable | None = None,
    h: float = DIFF_STEP,
    interval: tuple[float, float] = (0.0, 1.0),
) -> float:
    """Largest ``|beta(c(t))(c'(t))|`` over a uniform grid including endpoints.

    ``arc`` maps an array of parameters to an (n, 4) array of unit vectors.
    Without an analytic ``derivative`` central differences with step ``h``
    are used.
    """
    t = np.linspace(interval[0], interval[1], samples)
    P = arc(t)
    norms = np.linalg.norm(P, axis=1)
    if np.any(np.abs(norms - 1) > SPHERE_TOL):
        raise NotOnSphere("arc leaves the unit sphere")
    D = derivative(t) if derivative is not None else central_difference(arc, t, h)
    return float(np.max(np.abs(np.einsum("ij,ij->i", _beta_rows(P), D))))


def legendrian_edges(X, R, samples: int = 1000) -> dict[tuple, float]:
    """Deviation of the radial arc of every edge of a complex realized on the sphere."""
    return {
        (a, b): legendrian_deviation(radial_arc(R.point(a), R.point(b)), samples)
        for a, b in X.faces(1)
    }


def transformed_arc(arc: Callable, A: np.ndarray) -> Callable:
    return lambda t: arc(t) @ A.T


def preserves_contact_planes(A: np.ndarray, tol: float = 1e-12) -> int:
    """+1 or -1 when the linear map ``A`` maps the contact planes to themselves
    (``A^T M A = +-M``), else 0."""
    lhs = A.T @ BETA_MATRIX @ A
    for s in (1, -1):
        if np.allclose(lhs, s * BETA_MATRIX, atol=tol):
            return s
    return 0


def permutation_matrix(perm: dict, realization) -> np.ndarray:
    """Linear map of R^4 induced by a vertex permutation of a complex whose
    vertices are +-e_i (the octahedral sphere)."""
    A = np.zeros((4, 4))
    for v, w in perm.items():
        p, q = realization.point(v), realization.point(w)
        i = int(np.argmax(np.abs(p)))
        if p[i] > 0:
            A[:, i] = q
    return A


# ---------------------------------------------------------------------------
# faces

@dataclass(frozen=True)
class FaceMargin:
    """Distance of tangent planes of a spherical triangle from the contact planes.

    ``plane_margin`` is the minimum over samples of the norm of ``beta``
    restricted to the unit vectors of the tangent plane; it is positive
    exactly when no sample is a tangency.  ``t1_margin`` is the minimum of
    ``|beta(dp/dt1)|`` for the barycentric derivative along ``t1`` with
    ``t3 = 1 - t1 - t2``.
    """

    plane_margin: float
    t1_margin: float
    samples: int

    @property
    def ok(self) -> bool:
        return self.plane_margin > 0


def face_point_and_tangents(P: np.ndarray, T: np.ndarray):
    """Point and barycentric partials of the radially projected triangle.

    ``P`` holds the three corners as rows; ``T`` is an (n, 2) array of
    ``(t1, t2)`` with ``t3 = 1 - t1 - t2``.
    """
    t1, t2 = T[:, 0:1], T[:, 1:2]
    t3 = 1 - t1 - t2
    q = t1 * P[0] + t2 * P[1] + t3 * P[2]
    n = np.linalg.norm(q, axis=1, keepdims=True)
    p = q / n
    out = []
    for dq in (P[0] - P[2], P[1] - P[2]):
        dq = np.broadcast_to(dq, q.shape)
        out.append((dq - p * np.einsum("ij,ij->i", p, dq)[:, None]) / n)
    return p, out[0], out[1]


def interior_grid(samples: int) -> np.ndarray:
    """Barycentric (t1, t2) with all three coordinates at least 1/samples."""
    pts = [
        (i / samples, j / samples)
        for i in range(1, samples)
        for j in range(1, samples - i)
    ]
    return np.array(pts, dtype=float)


def face_tangency_margin(corners, samples: int = 60) -> FaceMargin:
    P = np.asarray(corners, dtype=float)
    T = interior_grid(samples)
    p, d1, d2 = face_point_and_tangents(P, T)
    B = _beta_rows(p)
    # orthonormal basis of the tangent plane
    e1 = d1 / np.linalg.norm(d1, axis=1, keepdims=True)
    d2o = d2 - e1 * np.einsum("ij,ij->i", d2, e1)[:, None]
    e2 = d2o / np.linalg.norm(d2o, axis=1, keepdims=True)
    b1 = np.einsum("ij,ij->i", B, e1)
    b2 = np.einsum("ij,ij->i", B, e2)
    plane = np.sqrt(b1 * b1 + b2 * b2)
    t1 = np.abs(np.einsum("ij,ij->i", B, d1))
    return FaceMargin(float(plane.min()), float(t1.min()), len(T))


def example_face_derivative(t1, t2, t3):
    """Closed form of ``dp/dt1`` for the face spanned by e1, e2, e3 with
    ``t3 = 1 - t1 - t2``."""
    n3 = (t1 * t1 + t2 * t2 + t3 * t3) ** 1.5
    return np.array(
        [t2 * t2 + t3 * t3 + t1 * t3, -t2 * (t1 - t3), -(t1 * t1 + t2 * t2 + t1 * t3), 0.0]
    ) / n3


# ---------------------------------------------------------------------------
# Lutz profiles

def smoothstep(x):
    """C^1 ramp from 0 (x <= 0) to 1 (x >= 1)."""
    x = np.clip(x, 0.0, 1.0)
    return x * x * (3 - 2 * x)


def smoothstep_derivative(x):
    inside = (x > 0) & (x < 1)
    return np.where(inside, 6 * x * (1 - x), 0.0)


@dataclass(frozen=True)
class BoundaryCondition:
    """Expected values of (h1, h2) on an interval of radii."""

    name: str
    interval: tuple[float, float]
    h1: Callable
    h2: Callable


@dataclass(frozen=True)
class LutzProfile:
    name: str
    R: float
    h1: Callable
    h2: Callable
    dh1: Callable | None = None
    dh2: Callable | None = None
    conditions: tuple[BoundaryCondition, ...] = ()

    def values(self, r):
        r = np.asarray(r, dtype=float)
        return self.h1(r), self.h2(r)

    def derivatives(self, r, h: float = DIFF_STEP):
        r = np.asarray(r, dtype=float)
        d1 = self.dh1(r) if self.dh1 else (self.h1(r + h) - self.h1(r - h)) / (2 * h)
        d2 = self.dh2(r) if self.dh2 else (self.h2(r + h) - self.h2(r - h)) / (2 * h)
        return d1, d2


def lemma_profile(R: float = 0.5) -> LutzProfile:
    """``h1 = -cos(pi r / R)``, ``h2 = r^2 sin(pi r / R)`` on [0, R], extended so
    that ``h1 = 1`` and ``h2 = -r^2`` on the outer half of [R, 1].

    On [R, 1] ``h1`` stays 1 and ``h2`` blends the tangent line
    ``-pi R (r - R)`` into ``-r^2``; since ``r^2 > pi R (r - R)`` for all r
    the blend is strictly decreasing, so the profile stays contact.
    """
    if not 0 < R < 1:
        raise ValueError("R must lie in (0, 1)")
    k = math.pi / R
    mid = R + (1 - R) / 2

    def w(r):
        return smoothstep((r - R) / (mid - R))

    def dw(r):
        return smoothstep_derivative((r - R) / (mid - R)) / (mid - R)

    def h1(r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= R, -np.cos(k * np.minimum(r, R)), 1.0)

    def h2(r):
        r = np.asarray(r, dtype=float)
        inner = r * r * np.sin(k * np.minimum(r, R))
        line = -math.pi * R * (r - R)
        outer = (1 - w(r)) * line - w(r) * r * r
        return np.where(r <= R, inner, outer)

    def dh1(r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= R, k * np.sin(k * np.minimum(r, R)), 0.0)

    def dh2(r):
        r = np.asarray(r, dtype=float)
        s = k * np.minimum(r, R)
        inner = 2 * r * np.sin(s) + r * r * k * np.cos(s)
        line = -math.pi * R * (r - R)
        outer = -((1 - w(r)) * math.pi * R + w(r) * 2 * r + dw(r) * (r * r + line))
        return np.where(r <= R, inner, outer)

    return LutzProfile(
        f"lemma profile R={R:g}",
        R,
        h1,
        h2,
        dh1,
        dh2,
        (
            BoundaryCondition("value at 0", (0.0, 0.0), lambda r: -1.0 + 0 * r, lambda r: 0 * r),
            BoundaryCondition("near 1", (mid, 1.0), lambda r: 1.0 + 0 * r, lambda r: -r * r),
        ),
    )


def standard_profile(inner: float = 0.25, outer: float = 0.75) -> LutzProfile:
    """Full Lutz twist: ``(h1, h2) = (-1, -r^2)`` near 0 and ``(1, r^2)`` near 1.

    Written in polar form with radius ``sqrt(1 + r^4)`` and an angle that
    rises by pi across ``[inner, outer]``; the determinant is the squared
    radius times the angle's derivative, hence positive for r > 0.
    """

    def w(r):
        return smoothstep((np.asarray(r, dtype=float) - inner) / (outer - inner))

    def theta(r):
        r = np.asarray(r, dtype=float)
        return -math.pi + np.arctan(r * r) + math.pi * w(r)

    def rho(r):
        r = np.asarray(r, dtype=float)
        return np.sqrt(1 + r ** 4)

    return LutzProfile(
        "standard twist profile",
        inner,
        lambda r: rho(r) * np.cos(theta(r)),
        lambda r: rho(r) * np.sin(theta(r)),
        conditions=(
            BoundaryCondition("near 0", (0.0, inner), lambda r: -1.0 + 0 * r, lambda r: -r * r),
            BoundaryCondition("near 1", (outer, 1.0), lambda r: 1.0 + 0 * r, lambda r: r * r),
        ),
    )


def constant_profile(a: float = 1.0, b: float = 0.0) -> LutzProfile:
    return LutzProfile("constant", 0.5, lambda r: a + 0 * np.asarray(r, float),
                       lambda r: b + 0 * np.asarray(r, float))


@dataclass
class ProfileReport:
    name: str
    min_abs_det: float
    det_sign: int  # +1 / -1 when the sign never changes, 0 otherwise
    conditions: dict
    grid: tuple[float, float, int]
    cc_min: float | None = None

    @property
    def ok(self) -> bool:
        base = self.min_abs_det > 0 and self.det_sign != 0 and all(self.conditions.values())
        return base and (self.cc_min is None or self.cc_min > 0)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "min_abs_det": self.min_abs_det,
            "det_sign": self.det_sign,
            "conditions": self.conditions,
            "grid": list(self.grid),
            "cc_min": self.cc_min,
            "ok": self.ok,
        }


def lutz_profile_check(
    p: LutzProfile,
    samples: int = 10_000,
    eps: float = 1e-3,
    tol: float = 1e-9,
    h3: Callable | None = None,
    phi_samples: int = 64,
) -> ProfileReport:
    """Contact condition of a radial profile on a grid of (eps, 1].

    ``h3``, a function of ``(r, phi)``, switches on the three-function
    condition ``(h1 h2_r - h2 h1_r) - (h1 h3_phi - h3 h1_phi) != 0`` with
    ``h1, h2`` independent of ``phi``.
    """
    r = np.linspace(eps, 1.0, samples + 1)[1:]
    h1, h2 = p.values(r)
    d1, d2 = p.derivatives(r)
    det = h1 * d2 - h2 * d1
    abs_det = np.abs(det)
    if np.all(det > 0):
        sign = 1
    elif np.all(det < 0):
        sign = -1
    else:
        sign = 0
    conds = {}
    for c in p.conditions:
        a, b = c.interval
        rr = np.linspace(a, b, 101) if b > a else np.array([a])
        v1, v2 = p.values(rr)
        conds[c.name] = bool(
            np.allclose(v1, c.h1(rr), atol=tol, rtol=0) and np.allclose(v2, c.h2(rr), atol=tol, rtol=0)
        )
    cc_min = None
    if h3 is not None:
        phi = np.linspace(0, 2 * np.pi, phi_samples, endpoint=False)
        RR, PP = np.meshgrid(r, phi, indexing="ij")
        H1 = np.broadcast_to(h1[:, None], RR.shape)
        dH3 = (h3(RR, PP + DIFF_STEP) - h3(RR, PP - DIFF_STEP)) / (2 * DIFF_STEP)
        # h1 does not depend on phi, so the h3 * d(h1)/d(phi) term vanishes
        cc = det[:, None] - H1 * dH3
        cc_min = float(np.abs(cc).min())
    return ProfileReport(p.name, float(abs_det.min()), sign, conds, (eps, 1.0, samples), cc_min)
