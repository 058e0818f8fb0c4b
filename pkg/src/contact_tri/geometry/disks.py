"""Disk-containment checks.

Two questions are answered here.  First, whether every tetrahedron of a
realized complex is too small to contain a flat disk of a given radius
(diameter comparison).  Second, for the 7-vertex solid torus, how large a
meridional disk around the core fits inside a single cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import BadParameter, DegenerateSlice
from .realization import facet_diameters


@dataclass(frozen=True)
class DiskSpec:
    """Flat disks centered on a core curve with radius in ``(r_lo, r_hi)``."""

    center: str
    r_lo: float
    r_hi: float
    k: int = 1

    def __post_init__(self):
        if not 0 < self.r_lo < self.r_hi:
            raise BadParameter(f"need 0 < r_lo < r_hi, got ({self.r_lo}, {self.r_hi})")

    @property
    def threshold(self) -> float:
        return 2 * self.r_lo

    def to_json(self) -> dict:
        return {"center": self.center, "r_lo": self.r_lo, "r_hi": self.r_hi, "k": self.k}


@dataclass(frozen=True)
class ContainmentReport:
    """Facet diameters against the diameter ``2 r_lo`` of the smallest disk.

    PASS means every facet diameter is strictly below the threshold, which
    is sufficient for no facet to contain such a disk.
    """

    disk: DiskSpec
    max_diameter: float
    threshold: float
    facets: int
    failing: int
    worst_facet: tuple
    failing_upper: int = 0

    @property
    def margin(self) -> float:
        return self.threshold - self.max_diameter

    @property
    def upper_status(self) -> str:
        """Same comparison against ``2 r_hi``, the diameter of the largest
        disk in the range; passing it alone does not exclude smaller disks."""
        return "PASS" if self.failing_upper == 0 else "FAIL"

    @property
    def status(self) -> str:
        return "PASS" if self.failing == 0 else "FAIL"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "disk": self.disk.to_json(),
            "max_diameter": self.max_diameter,
            "threshold": self.threshold,
            "margin": self.margin,
            "facets": self.facets,
            "failing_facets": self.failing,
            "worst_facet": list(self.worst_facet),
            "upper_threshold": 2 * self.disk.r_hi,
            "upper_status": self.upper_status,
        }


def disk_containment_report(X, R, d: DiskSpec) -> ContainmentReport:
    diams = facet_diameters(X, R)
    worst, dmax = max(diams, key=lambda fd: fd[1])
    failing = sum(1 for _, dm in diams if not dm < d.threshold)
    failing_upper = sum(1 for _, dm in diams if not dm < 2 * d.r_hi)
    return ContainmentReport(d, dmax, d.threshold, len(diams), failing, tuple(worst), failing_upper)


# ---------------------------------------------------------------------------
# meridional disks in the 7-vertex solid torus

@dataclass(frozen=True)
class PLSolidTorusModel:
    """Piecewise-linear surrogate for the smooth 7-cell solid torus.

    Points are ``(rho, phi, t)`` with ``rho <= 1`` the disk radius, ``phi``
    the disk angle and ``t`` in R/Z along the core.  Vertex ``u_k`` sits at
    ``(1, 4 pi k / 7, k / 7)``.  The boundary of the i-th meridional disk is
    the loop ``u_i u_i+1 u_i+2 u_i``: two arcs of slope 1/(4 pi) followed by
    one arc of slope -1/(3 pi), as a graph ``t = h_i(phi)``.  The disk itself
    is the ruled surface ``t = c_i + rho (h_i(phi) - c_i)`` with apex height
    ``c_i = (i + 1) / 7`` on the core.  Cell ``B_i`` lies between disks
    ``i`` and ``i + 1``.
    """

    cells: int = 7

    def center(self, i: int) -> float:
        return (i + 1) / self.cells

    @staticmethod
    def _h0(phi: np.ndarray) -> np.ndarray:
        phi = np.mod(phi, 2 * math.pi)
        knee = 8 * math.pi / 7
        return np.where(phi <= knee, phi / (4 * math.pi), 2 / 7 - (phi - knee) / (3 * math.pi))

    def boundary_height(self, i: int, phi) -> np.ndarray:
        """Lifted height of the i-th meridian loop (i may exceed 6)."""
        phi = np.asarray(phi, dtype=float)
        return self._h0(phi - 4 * math.pi * i / 7) + i / 7

    def breakpoints(self, i: int) -> np.ndarray:
        base = np.array([0.0, 4 * math.pi / 7, 8 * math.pi / 7])
        return np.mod(base + 4 * math.pi * i / 7, 2 * math.pi)

    def disk_height(self, i: int, rho, phi) -> np.ndarray:
        c = self.center(i)
        return c + np.asarray(rho) * (self.boundary_height(i, phi) - c)

    def vertex(self, k: int) -> tuple[float, float, float]:
        return (1.0, (4 * math.pi * k / 7) % (2 * math.pi), k / 7)

    def cell_of(self, t: float) -> tuple[int, float]:
        """Cell index whose core segment contains ``t``, and ``t`` lifted so
        that ``c_i <= t < c_{i+1}``."""
        c0 = self.center(0)
        lifted = c0 + ((t - c0) % 1.0)
        i = min(int((lifted - c0) * self.cells), self.cells - 1)
        return i, lifted

    def contains_disk(self, i: int, t: float, r: float, phis: np.ndarray) -> bool:
        lower = self.disk_height(i, r, phis)
        upper = self.disk_height(i + 1, r, phis)
        # heights are linear in rho, so rho = 0 and rho = r bound the disk
        return bool(
            self.center(i) <= t <= self.center(i + 1)
            and np.all(lower <= t)
            and np.all(t <= upper)
        )

    def describe(self) -> str:
        return (
            "piecewise-linear surrogate: meridional disks are ruled cones over "
            "the boundary loops, apex heights (i+1)/7 on the core"
        )


def _phi_grid(model: PLSolidTorusModel, i: int, samples: int) -> np.ndarray:
    grid = np.linspace(0, 2 * math.pi, samples, endpoint=False)
    return np.concatenate([grid, model.breakpoints(i), model.breakpoints(i + 1)])


def meridian_fit(
    model: PLSolidTorusModel,
    t: float,
    tol: float = 1e-9,
    circle_samples: int = 2048,
    strict: bool = False,
) -> float:
    """Lower bound, within ``tol``, on the largest radius of a flat meridional
    disk at core parameter ``t`` that stays in one cell.

    On a cell wall the slice degenerates and 0 is returned, or
    :class:`DegenerateSlice` is raised when ``strict``.
    """
    i, lifted = model.cell_of(t)
    phis = _phi_grid(model, i, circle_samples)
    if not model.contains_disk(i, lifted, 0.0, phis) or lifted in (model.center(i), model.center(i + 1)):
        if strict:
            raise DegenerateSlice(f"t = {t} lies on a meridional disk")
        return 0.0
    if model.contains_disk(i, lifted, 1.0, phis):
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if model.contains_disk(i, lifted, mid, phis):
            lo = mid
        else:
            hi = mid
    return lo


def meridian_fit_exact(model: PLSolidTorusModel, t: float) -> float:
    """Closed form of the fit for the ruled model: the apex-to-rim slopes are
    +-1/7 in every cell, so ``f(t) = 7 min(t - c_i, c_{i+1} - t)``."""
    i, lifted = model.cell_of(t)
    phis = np.concatenate([model.breakpoints(i), model.breakpoints(i + 1)])
    up = float(np.max(model.boundary_height(i, phis) - model.center(i)))
    down = float(np.min(model.boundary_height(i + 1, phis) - model.center(i + 1)))
    a = (lifted - model.center(i)) / up
    b = (model.center(i + 1) - lifted) / -down
    return float(min(1.0, a, b))


@dataclass(frozen=True)
class DeltaReport:
    delta_hat: float
    argmax_t: float
    samples: int
    tol: float
    model: str

    def to_json(self) -> dict:
        return {
            "delta_hat": self.delta_hat,
            "argmax_t": self.argmax_t,
            "samples": self.samples,
            "tol": self.tol,
            "model": self.model,
        }


def delta_hat(
    model: PLSolidTorusModel | None = None,
    samples: int = 1000,
    tol: float = 1e-9,
    circle_samples: int = 2048,
) -> DeltaReport:
    """Maximum of :func:`meridian_fit` over ``t = j / samples``."""
    model = model or PLSolidTorusModel()
    best, arg = -1.0, 0.0
    for j in range(samples):
        t = j / samples
        f = meridian_fit(model, t, tol, circle_samples)
        if f > best:
            best, arg = f, t
    return DeltaReport(best, arg, samples, tol, model.describe())
