"""Vertex coordinates in a model space together with the model's metric."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ..complex import SimplicialComplex, label_key
from ..errors import MissingCoordinates, NotOnSphere

SPHERE_TOL = 1e-12


class Model(enum.Enum):
    EUCLIDEAN = "EUCLIDEAN"
    SPHERE3 = "SPHERE3"  # unit sphere in R^4, chordal metric
    SOLID_TORUS = "SOLID_TORUS"  # (x, y) in the unit disk, t in R/Z
    FLAT_TORUS3 = "FLAT_TORUS3"  # R^3 / Z^3, coordinates in [0, 1)


@dataclass(frozen=True)
class Realization:
    """Coordinates for every vertex of a complex in one model space.

    For FLAT_TORUS3 the realization may carry ``cover``: the Euclidean
    realization of the pre-quotient cube complex, together with
    ``cover_complex`` and the projection ``cover_map`` from cover labels to
    quotient labels.  Geometry on facets is measured on the cover.
    """

    model: Model
    coords: Mapping
    cover: "Realization | None" = None
    cover_complex: SimplicialComplex | None = None
    cover_map: Mapping | None = None
    note: str = ""

    def __post_init__(self):
        frozen = {v: tuple(float(x) for x in p) for v, p in self.coords.items()}
        object.__setattr__(self, "coords", frozen)
        if self.model is Model.SPHERE3:
            for v, p in frozen.items():
                if len(p) != 4 or abs(math.fsum(x * x for x in p) - 1.0) > SPHERE_TOL:
                    raise NotOnSphere(f"{v!r} is not a unit vector in R^4")

    @property
    def ambient_dim(self) -> int:
        return len(next(iter(self.coords.values()))) if self.coords else 0

    def point(self, v) -> np.ndarray:
        try:
            return np.asarray(self.coords[v], dtype=float)
        except KeyError:
            raise MissingCoordinates(f"no coordinates for {v!r}") from None

    def covers(self, X: SimplicialComplex) -> bool:
        return all(v in self.coords for v in X.vertices)

    def require(self, X: SimplicialComplex) -> None:
        missing = [v for v in X.vertices if v not in self.coords]
        if missing:
            raise MissingCoordinates(f"no coordinates for {missing[:5]!r}")

    def distance(self, a, b) -> float:
        p, q = self.point(a), self.point(b)
        return model_distance(self.model, p, q)


def model_distance(model: Model, p: np.ndarray, q: np.ndarray) -> float:
    if model in (Model.EUCLIDEAN, Model.SPHERE3):
        return float(np.linalg.norm(p - q))
    if model is Model.SOLID_TORUS:
        dt = abs(p[2] - q[2]) % 1.0
        dt = min(dt, 1.0 - dt)
        return float(math.sqrt((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 + dt * dt))
    d = p - q
    d = d - np.round(d)
    return float(np.linalg.norm(d))


def _facets_for_geometry(X: SimplicialComplex, R: Realization):
    if R.model is Model.FLAT_TORUS3 and R.cover is not None:
        return R.cover_complex, R.cover
    return X, R


def edge_lengths(X: SimplicialComplex, R: Realization) -> list[float]:
    """Length of every edge in canonical edge order."""
    Y, S = _facets_for_geometry(X, R)
    S.require(Y)
    if Y is not X:
        seen = {}
        for a, b in Y.faces(1):
            key = tuple(sorted((R.cover_map[a], R.cover_map[b]), key=label_key))
            seen.setdefault(key, S.distance(a, b))
        return [seen[e] for e in X.faces(1)]
    return [S.distance(a, b) for a, b in Y.faces(1)]


def simplex_diameter(facet, R: Realization) -> float:
    """Largest pairwise vertex distance; for a straight simplex this is its diameter."""
    return max((R.distance(a, b) for a, b in itertools.combinations(facet, 2)), default=0.0)


def facet_diameters(X: SimplicialComplex, R: Realization) -> list[tuple[tuple, float]]:
    """(facet, diameter) pairs, measured on the cover for flat-torus quotients."""
    Y, S = _facets_for_geometry(X, R)
    S.require(Y)
    return [(f, simplex_diameter(f, S)) for f in Y.facets]


def max_diameter(X: SimplicialComplex, R: Realization) -> float:
    return max(d for _, d in facet_diameters(X, R))


def sampled_simplex_diameter(points: np.ndarray, samples: int = 2000, seed: int = 0) -> float:
    """Diameter of a point set's convex hull estimated from random convex combinations.

    Used only to check that vertex pairs realize the diameter.
    """
    rng = np.random.default_rng(seed)
    w = rng.dirichlet(np.ones(len(points)), size=samples)
    cloud = np.vstack([points, w @ points])
    diff = cloud[:, None, :] - cloud[None, :, :]
    return float(np.sqrt((diff ** 2).sum(-1)).max())
