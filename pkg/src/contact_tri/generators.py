"""Named complexes: small spheres, solid tori, S2 x S1 pieces.

Every constructor is a pure function returning a :class:`NamedComplex`;
calling it twice yields identical facet lists.  Cube-based complexes live in
:mod:`contact_tri.cubes`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .complex import SimplicialComplex
from .errors import BadIndex
from .geometry.realization import Model, Realization


@dataclass(frozen=True)
class NamedComplex:
    name: str
    complex: SimplicialComplex
    realization: Realization | None = None
    provenance: str = ""
    notes: dict = field(default_factory=dict)

    def __repr__(self) -> str:
        return f"NamedComplex({self.name!r}, f={self.complex.f_vector()})"


def u(i: int) -> str:
    return f"u{i % 7}"


def v(i: int) -> str:
    return f"v{i % 10}"


# ---------------------------------------------------------------------------
# spheres

def s3_5() -> NamedComplex:
    """Boundary of the 4-simplex on labels 1..5."""
    X = SimplicialComplex.simplex_boundary([str(i) for i in range(1, 6)])
    return NamedComplex("s3_5", X, provenance="boundary of the 4-simplex, 5-vertex 3-sphere")


SIGMA8_AXES = {"u": 0, "v": 1, "w": 2, "z": 3}


def sigma8() -> NamedComplex:
    """Octahedral 3-sphere: the join of four 0-spheres.

    Coordinates are ordered (x1, y1, x2, y2); ``u, v, w, z`` sit on the
    ``x1, y1, x2, y2`` axes, index 1 positive and index 2 negative.
    """
    facets = [
        (f"u{i}", f"v{j}", f"w{k}", f"z{l}")
        for i in (1, 2) for j in (1, 2) for k in (1, 2) for l in (1, 2)
    ]
    coords = {}
    for name, axis in SIGMA8_AXES.items():
        for idx, sign in ((1, 1.0), (2, -1.0)):
            p = [0.0] * 4
            p[axis] = sign
            coords[f"{name}{idx}"] = tuple(p)
    return NamedComplex(
        "sigma8",
        SimplicialComplex(facets),
        Realization(Model.SPHERE3, coords),
        provenance="octahedral 8-vertex 3-sphere with vertices at +-e1..+-e4",
    )


# ---------------------------------------------------------------------------
# 7-vertex torus, solid tori and their unions

def torus7_facets() -> list[tuple[str, ...]]:
    out = []
    for i in range(7):
        out.append((u(i), u(i + 1), u(i + 3)))
        out.append((u(i), u(i + 2), u(i + 3)))
    return out


def _torus_angles(k: int) -> tuple[float, float]:
    """Angles of u_k on the torus |z1| = |z2| = 1."""
    return 4 * math.pi * k / 7, 2 * math.pi * k / 7


def solid_torus_realization() -> Realization:
    """u_k on the boundary of D^2 x S^1: disk angle 4 pi k / 7, core parameter k / 7."""
    coords = {}
    for k in range(7):
        a, _ = _torus_angles(k)
        coords[u(k)] = (math.cos(a), math.sin(a), k / 7)
    return Realization(Model.SOLID_TORUS, coords)


def clifford_realization() -> Realization:
    """u_k on the Clifford torus in the unit 3-sphere, coordinates (x1, y1, x2, y2)."""
    s = 1 / math.sqrt(2)
    coords = {}
    for k in range(7):
        a, b = _torus_angles(k)
        coords[u(k)] = (s * math.cos(a), s * math.sin(a), s * math.cos(b), s * math.sin(b))
    return Realization(Model.SPHERE3, coords)


def torus7() -> NamedComplex:
    return NamedComplex(
        "torus7",
        SimplicialComplex(torus7_facets()),
        solid_torus_realization(),
        provenance="7-vertex torus: triangles u_i u_i+1 u_i+3 and u_i u_i+2 u_i+3",
    )


_SOLID_TORUS_PATTERNS = {1: (0, 1, 2, 3), 2: (0, 2, 3, 5), 3: (0, 1, 4, 5)}


def solid_torus_facets(i: int) -> list[tuple[str, ...]]:
    if i not in _SOLID_TORUS_PATTERNS:
        raise BadIndex(f"solid torus index must be 1, 2 or 3, got {i!r}")
    pat = _SOLID_TORUS_PATTERNS[i]
    return [tuple(u(k + s) for s in pat) for k in range(7)]


def solid_torus(i: int) -> NamedComplex:
    """T_i: 7 tetrahedra on u_0..u_6 with boundary the 7-vertex torus."""
    pat = "".join(f"u_k+{s}" if s else "u_k" for s in _SOLID_TORUS_PATTERNS.get(i, ()))
    return NamedComplex(
        f"solid_torus_{i}",
        SimplicialComplex(solid_torus_facets(i)),
        solid_torus_realization(),
        provenance=f"7-vertex solid torus T{i} = {{{pat}}}",
    )


def meridian_loop(i: int) -> list[str]:
    """The loop u0 -> u_a -> u_b -> u0 bounding a disk in solid torus ``i``."""
    if i not in _SOLID_TORUS_PATTERNS:
        raise BadIndex(f"solid torus index must be 1, 2 or 3, got {i!r}")
    a, b = {1: (1, 6), 2: (2, 5), 3: (3, 4)}[i]
    return [u(0), u(a), u(b), u(0)]


def core_loop() -> list[str]:
    return [u(k) for k in range(8)]


def s_ij(i: int, j: int) -> NamedComplex:
    """Union of two solid tori along their common boundary: a 7-vertex 3-sphere."""
    if not (i in _SOLID_TORUS_PATTERNS and j in _SOLID_TORUS_PATTERNS and i < j):
        raise BadIndex(f"need 1 <= i < j <= 3, got ({i!r}, {j!r})")
    X = SimplicialComplex(solid_torus_facets(i) + solid_torus_facets(j))
    return NamedComplex(
        f"s_{i}{j}",
        X,
        clifford_realization(),
        provenance=f"7-vertex 3-sphere S{i}{j} = T{i} u T{j}, common boundary the 7-vertex torus",
    )


# ---------------------------------------------------------------------------
# S2 x S1 on ten vertices

def s21_10_facets() -> list[tuple[str, ...]]:
    out = []
    for i in range(10):
        out.append((v(i), v(i + 1), v(i + 2), v(i + 4)))
        out.append((v(i), v(i + 1), v(i + 3), v(i + 4)))
        out.append((v(i), v(i + 2), v(i + 3), v(i + 4)))
    return out


def s21_10() -> NamedComplex:
    return NamedComplex(
        "s21_10",
        SimplicialComplex(s21_10_facets()),
        provenance="10-vertex S2 x S1: boundary of the cyclic 4-complex on Z_10",
    )


def s21_10_symmetries() -> dict[str, dict[str, str]]:
    """Rotation by two, reflection and rotation by five on the labels v0..v9."""
    return {
        "alpha": {v(i): v(i + 2) for i in range(10)},
        "beta": {v(i): v(-i) for i in range(10)},
        "gamma": {v(i): v(i + 5) for i in range(10)},
    }


def _t4_facets() -> list[tuple[str, ...]]:
    out = []
    for i in range(5):
        a = 2 * i
        out.append((v(a), v(a + 1), v(a + 2), v(a + 4)))
        out.append((v(a + 1), v(a + 2), v(a + 4), v(a + 5)))
        out.append((v(a), v(a + 2), v(a + 3), v(a + 4)))
    return out


def _t5_facets() -> list[tuple[str, ...]]:
    # image of T4 under v_i -> v_{i+5}
    out = []
    for i in range(5):
        a = 2 * i
        out.append((v(a + 1), v(a + 2), v(a + 3), v(a + 5)))
        out.append((v(a), v(a + 1), v(a + 3), v(a + 4)))
        out.append((v(a + 1), v(a + 3), v(a + 4), v(a + 5)))
    return out


def t4() -> NamedComplex:
    return NamedComplex("t4", SimplicialComplex(_t4_facets()),
                        provenance="15-tetrahedron solid torus T4 inside the 10-vertex S2 x S1")


def t5() -> NamedComplex:
    return NamedComplex("t5", SimplicialComplex(_t5_facets()),
                        provenance="15-tetrahedron solid torus T5, image of T4 under v_i -> v_i+5")


# Triangles of the 10-vertex torus read off its planar picture, as index triples.
_TORUS10 = (
    (0, 4, 1), (4, 1, 5), (4, 8, 5), (8, 5, 9), (8, 2, 9), (2, 9, 3), (2, 6, 3),
    (6, 3, 7), (6, 0, 7), (0, 7, 1), (1, 5, 2), (5, 2, 6), (5, 9, 6), (9, 6, 0),
    (9, 3, 0), (3, 0, 4), (3, 7, 4), (7, 4, 8), (7, 1, 8), (1, 8, 2),
)


def torus10() -> NamedComplex:
    return NamedComplex(
        "torus10",
        SimplicialComplex([tuple(v(i) for i in t) for t in _TORUS10]),
        provenance="10-vertex torus, common boundary of T4 and T5",
    )


_WALKUP_BALLS = {
    "b1": ((0, 1, 2, 4), (1, 2, 4, 5), (2, 4, 5, 6)),
    # v4v5v6v8 completes T4; without it B1 and B2 meet in a single triangle
    "b2": ((2, 3, 4, 6), (3, 4, 6, 7), (4, 6, 7, 8), (4, 5, 6, 8)),
    "b3": ((5, 6, 8, 9), (6, 8, 9, 0), (6, 7, 8, 0), (7, 8, 0, 1)),
    "b4": ((8, 0, 1, 2), (8, 9, 0, 2), (9, 0, 2, 3), (0, 2, 3, 4)),
}


def walkup_balls() -> dict[str, NamedComplex]:
    """The four small balls B1..B4 covering T4 and the unions B12, B34."""
    out = {}
    for name, facets in _WALKUP_BALLS.items():
        X = SimplicialComplex([tuple(v(i) for i in f) for f in facets])
        out[name] = NamedComplex(name, X, provenance=f"3-ball {name.upper()} in T4")
    for name, (a, b) in {"b12": ("b1", "b2"), "b34": ("b3", "b4")}.items():
        X = out[a].complex.union(out[b].complex)
        out[name] = NamedComplex(name, X, provenance=f"3-ball {name.upper()} = {a.upper()} u {b.upper()}")
    return out


# ---------------------------------------------------------------------------
# registry

def _registry() -> dict[str, Callable[..., NamedComplex]]:
    from . import cubes

    reg: dict[str, Callable[..., NamedComplex]] = {
        "s3_5": s3_5,
        "sigma8": sigma8,
        "torus7": torus7,
        "s21_10": s21_10,
        "t4": t4,
        "t5": t5,
        "torus10": torus10,
        "cube77": cubes.cube77,
        "t3_40": cubes.t3_40,
        "t3_family": cubes.t3_family,
    }
    for i in (1, 2, 3):
        reg[f"solid_torus_{i}"] = lambda i=i: solid_torus(i)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        reg[f"s_{i}{j}"] = lambda i=i, j=j: s_ij(i, j)
    for name in _WALKUP_BALLS.keys() | {"b12", "b34"}:
        reg[name] = lambda name=name: walkup_balls()[name]
    return reg


def names() -> list[str]:
    return sorted(_registry())


def generate(name: str, **params) -> NamedComplex:
    """Look up a generator by name; ``t3_family`` takes ``n``."""
    reg = _registry()
    if name not in reg:
        raise BadIndex(f"unknown complex {name!r}; known: {', '.join(sorted(reg))}")
    return reg[name](**params)
