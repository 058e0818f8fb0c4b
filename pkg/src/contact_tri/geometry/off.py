"""OFF export of the 2-skeleton of a realized complex."""

from __future__ import annotations

import math

from ..complex import SimplicialComplex
from ..errors import MissingCoordinates
from .realization import Model, Realization


def _fmt(x: float) -> str:
    return repr(round(float(x), 15) + 0.0)


def _solid_torus_point(p, major: float = 2.0) -> tuple[float, float, float]:
    x, y, t = p
    a = 2 * math.pi * t
    rad = major + x
    return (rad * math.cos(a), rad * math.sin(a), y)


def off_export(X: SimplicialComplex, R: Realization | None) -> str:
    """OFF text with one vertex per line and the triangles of the complex.

    SPHERE3 realizations are written as ``4OFF`` with four coordinates.
    FLAT_TORUS3 realizations export the pre-quotient cube.  SOLID_TORUS
    coordinates are embedded as a torus of revolution with major radius 2.
    """
    if R is None:
        raise MissingCoordinates("complex has no realization")
    comments = []
    if R.model is Model.FLAT_TORUS3:
        if R.cover is None:
            raise MissingCoordinates("flat-torus realization without a cube cover")
        comments.append("# pre-quotient cube; opposite faces are identified")
        X, R = R.cover_complex, R.cover
    R.require(X)
    verts = X.vertices
    index = {v: i for i, v in enumerate(verts)}
    tris = X.faces(2) if X.dimension >= 2 else ()
    header = "4OFF" if R.model is Model.SPHERE3 else "OFF"
    if R.model is Model.SPHERE3:
        comments.append("# points of the unit 3-sphere in R^4, order (x1, y1, x2, y2)")
    if R.model is Model.SOLID_TORUS:
        comments.append("# solid torus drawn as a torus of revolution, major radius 2")
    lines = [header] + comments
    lines.append(f"{len(verts)} {len(tris)} 0")
    for v in verts:
        p = R.coords[v]
        if R.model is Model.SOLID_TORUS:
            p = _solid_torus_point(p)
        lines.append(" ".join(_fmt(x) for x in p))
    for t in tris:
        lines.append("3 " + " ".join(str(index[v]) for v in t))
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[tuple[int, ...]]]:
    """Minimal reader for files written by :func:`off_export`."""
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = rows[0].strip()
    dim = 4 if header == "4OFF" else 3
    nv, nf, _ = (int(x) for x in rows[1].split())
    pts = [tuple(float(x) for x in rows[2 + i].split()[:dim]) for i in range(nv)]
    faces = []
    for i in range(nf):
        parts = [int(x) for x in rows[2 + nv + i].split()]
        faces.append(tuple(parts[1 : 1 + parts[0]]))
    return pts, faces
