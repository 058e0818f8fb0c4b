"""Cube blocks and the cube/3-torus triangulations assembled from them.

Cube corners are labelled ``a0 .. a7`` by the binary convention: the bits of
the index are the (x, y, z) coordinates, so ``a1 = (1,0,0)``,
``a2 = (0,1,0)``, ``a4 = (0,0,1)`` and ``a7 = (1,1,1)``.  Blocks with an
interior vertex use the label ``b`` for the cube center.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .complex import SimplicialComplex, canonical_face, label_key
from .errors import BadParameter, InconsistentGluing, InvalidDiagonalPair
from .generators import NamedComplex
from .geometry.realization import Model, Realization

A0 = ((0, 1, 2, 4), (1, 2, 3, 7), (1, 4, 5, 7), (2, 4, 6, 7), (1, 2, 4, 7))
A1 = ((0, 1, 3, 5), (0, 2, 3, 6), (3, 5, 6, 7), (0, 4, 5, 6), (0, 3, 5, 6))
E_CONE = (
    (0, 1, 3), (0, 2, 3), (0, 1, 4), (0, 2, 4), (1, 3, 5), (1, 4, 5),
    (2, 3, 6), (2, 4, 6), (3, 5, 7), (3, 6, 7), (4, 5, 7), (4, 6, 7),
)
B_CORNERS = {"B0": (0, 7), "B1": (1, 6), "B2": (2, 5)}

# The six square faces as (axis, side) -> corner indices.
SQUARES = {
    (axis, side): tuple(i for i in range(8) if (i >> axis) & 1 == side)
    for axis in range(3)
    for side in (0, 1)
}


def neighbors(i: int) -> tuple[int, int, int]:
    return (i ^ 1, i ^ 2, i ^ 4)


def corner_tetrahedron(i: int) -> tuple[int, ...]:
    return tuple(sorted((i,) + neighbors(i)))


def face_diagonal_pairs() -> list[tuple[int, int]]:
    """All pairs of corners that are diagonally opposite on a square face."""
    return [(i, j) for i in range(8) for j in range(i + 1, 8) if bin(i ^ j).count("1") == 2]


def _cone_boundary(corners: tuple[int, ...], free_diagonal: tuple[int, int] | None):
    """Boundary triangles of the cube after cutting off the given corners."""
    tris = [tuple(sorted(neighbors(c))) for c in corners]
    for square in SQUARES.values():
        cut = [c for c in corners if c in square]
        if len(cut) == 1:
            tris.append(tuple(x for x in square if x != cut[0]))
        elif not cut:
            if free_diagonal is None or not set(free_diagonal) <= set(square):
                raise InvalidDiagonalPair(
                    f"square {square} needs a diagonal; got {free_diagonal!r}"
                )
            p, q = free_diagonal
            others = [x for x in square if x not in free_diagonal]
            tris.extend(tuple(sorted((p, q, o))) for o in others)
    return tris


@dataclass(frozen=True)
class CubeBlock:
    """Triangulation of one cube with corner ``offset`` and side ``scale``.

    ``facets`` use local labels ``a0..a7`` and ``b``.
    """

    block_type: str
    offset: tuple[float, float, float]
    scale: float
    facets: tuple[tuple[str, ...], ...]
    free_diagonal: tuple[int, int] | None = None

    @property
    def has_center(self) -> bool:
        return any("b" in f for f in self.facets)

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.facets)

    def coordinates(self) -> dict[str, tuple[float, float, float]]:
        ox, oy, oz = self.offset
        s = self.scale
        out = {
            f"a{i}": (ox + s * (i & 1), oy + s * ((i >> 1) & 1), oz + s * ((i >> 2) & 1))
            for i in range(8)
        }
        if self.has_center:
            out["b"] = (ox + s / 2, oy + s / 2, oz + s / 2)
        return out

    def realization(self) -> Realization:
        return Realization(Model.EUCLIDEAN, self.coordinates())

    def square_diagonal(self, axis: int, side: int) -> frozenset:
        """The diagonal (pair of local corner indices) splitting one square face."""
        square = set(SQUARES[(axis, side)])
        for f in self.facets:
            idx = {int(x[1:]) for x in f if x != "b"}
            tri = idx & square
            if len(tri) == 3:
                return frozenset(_diag(tri))
        raise InconsistentGluing(f"{self.block_type}: square {(axis, side)} not triangulated")


def _diag(tri: set) -> set:
    # the diagonal is the pair in the triangle that are not square-adjacent
    for p, q in itertools.combinations(sorted(tri), 2):
        if bin(p ^ q).count("1") == 2:
            return {p, q}
    raise AssertionError("triangle on a square always contains a diagonal")


def _labels(facets) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple("b" if x == "b" else f"a{x}" for x in f) for f in facets)


def cube_block(
    block_type: str,
    offset=(0.0, 0.0, 0.0),
    scale: float = 1 / 3,
    free_diagonal: tuple[int, int] | None = None,
) -> CubeBlock:
    """Build a block of type A0, A1, B0, B1, B2, C<ij> or E.

    A ``C<ij>`` block cuts off corners ``ai`` and ``aj``, which must be
    diagonally opposite on a square face.  The square face containing neither
    corner is split along ``free_diagonal``, by default the diagonal whose
    smaller endpoint is smallest.
    """
    if scale <= 0:
        raise BadParameter("scale must be positive")
    offset = tuple(float(x) for x in offset)
    t = block_type.upper()
    if t == "A0":
        facets = A0
    elif t == "A1":
        facets = A1
    elif t == "E":
        facets = tuple(("b",) + tri for tri in E_CONE)
    elif t in B_CORNERS:
        corners = B_CORNERS[t]
        facets = tuple(corner_tetrahedron(c) for c in corners) + tuple(
            ("b",) + tri for tri in _cone_boundary(corners, None)
        )
    elif t.startswith("C") and len(t) == 3 and t[1:].isdigit():
        i, j = int(t[1]), int(t[2])
        if not (0 <= i < 8 and 0 <= j < 8) or (min(i, j), max(i, j)) not in face_diagonal_pairs():
            raise InvalidDiagonalPair(f"a{i} and a{j} are not opposite corners of a square face")
        free_square = next(
            sq for sq in SQUARES.values() if i not in sq and j not in sq
        )
        options = [(p, q) for p, q in itertools.combinations(free_square, 2) if bin(p ^ q).count("1") == 2]
        if free_diagonal is None:
            free_diagonal = options[0]
        free_diagonal = tuple(sorted(free_diagonal))
        if free_diagonal not in options:
            raise InvalidDiagonalPair(f"{free_diagonal} is not a diagonal of square {free_square}")
        corners = (i, j)
        facets = tuple(corner_tetrahedron(c) for c in corners) + tuple(
            ("b",) + tri for tri in _cone_boundary(corners, free_diagonal)
        )
        return CubeBlock(f"C{i}{j}", offset, float(scale), _labels(facets), free_diagonal)
    else:
        raise InvalidDiagonalPair(f"unknown block type {block_type!r}")
    return CubeBlock(t, offset, float(scale), _labels(facets))


def c_free_diagonals(block_type: str) -> list[tuple[int, int]]:
    i, j = int(block_type[1]), int(block_type[2])
    square = next(sq for sq in SQUARES.values() if i not in sq and j not in sq)
    return [(p, q) for p, q in itertools.combinations(square, 2) if bin(p ^ q).count("1") == 2]


# ---------------------------------------------------------------------------
# assembly on a grid of cubes

def grid_label(x: int, y: int, z: int) -> str:
    return f"p{x}_{y}_{z}"


def center_label(i: int, j: int, k: int) -> str:
    return f"c{i}_{j}_{k}"


@dataclass
class GluingReport:
    mismatched_interior: list = field(default_factory=list)
    mismatched_periodic: list = field(default_factory=list)
    interior_squares: int = 0
    periodic_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatched_interior and not self.mismatched_periodic


@dataclass(frozen=True)
class CubeAssembly:
    """Blocks indexed by cube position (i, j, k) in an N x N x N grid."""

    N: int
    blocks: dict

    def global_facets(self, pos) -> list[tuple[str, ...]]:
        i, j, k = pos
        block = self.blocks[pos]

        def lab(x):
            if x == "b":
                return center_label(i, j, k)
            m = int(x[1:])
            return grid_label(i + (m & 1), j + ((m >> 1) & 1), k + ((m >> 2) & 1))

        return [tuple(lab(x) for x in f) for f in block.facets]

    def complex(self) -> SimplicialComplex:
        facets = []
        for pos in sorted(self.blocks):
            facets.extend(self.global_facets(pos))
        return SimplicialComplex(facets)

    def realization(self) -> Realization:
        coords = {}
        side = 1 / self.N
        for x, y, z in itertools.product(range(self.N + 1), repeat=3):
            coords[grid_label(x, y, z)] = (x * side, y * side, z * side)
        for (i, j, k), block in self.blocks.items():
            if block.has_center:
                coords[center_label(i, j, k)] = ((i + 0.5) * side, (j + 0.5) * side, (k + 0.5) * side)
        return Realization(Model.EUCLIDEAN, coords)

    def square_triangles(self, pos, axis: int, side: int) -> frozenset:
        """Global triangles of block ``pos`` lying in one of its square faces."""
        i, j, k = pos
        corner = [i, j, k]
        corner[axis] += side
        square = set()
        for a, b in itertools.product((0, 1), repeat=2):
            p = list(corner)
            others = [d for d in range(3) if d != axis]
            p[others[0]] += a
            p[others[1]] += b
            square.add(grid_label(*p))
        tris = set()
        for f in self.global_facets(pos):
            on = tuple(x for x in f if x in square)
            if len(on) == 3:
                tris.add(canonical_face(on))
        return frozenset(tris)

    def validate(self) -> GluingReport:
        rep = GluingReport()
        N = self.N
        for pos in sorted(self.blocks):
            for axis in range(3):
                if pos[axis] + 1 < N:
                    nb = list(pos)
                    nb[axis] += 1
                    nb = tuple(nb)
                    rep.interior_squares += 1
                    if self.square_triangles(pos, axis, 1) != self.square_triangles(nb, axis, 0):
                        rep.mismatched_interior.append((pos, nb, axis))
                if pos[axis] == 0:
                    far = list(pos)
                    far[axis] = N - 1
                    far = tuple(far)
                    rep.periodic_pairs += 1
                    near_tris = self.square_triangles(pos, axis, 0)
                    shifted = frozenset(
                        canonical_face(_shift_label(x, axis, N) for x in t) for t in near_tris
                    )
                    if shifted != self.square_triangles(far, axis, 1):
                        rep.mismatched_periodic.append((pos, far, axis))
        return rep


def _shift_label(label: str, axis: int, amount: int) -> str:
    coords = [int(x) for x in label[1:].split("_")]
    coords[axis] += amount
    return grid_label(*coords)


def wrap_scheme(X: SimplicialComplex, N: int) -> dict:
    """Class map sending grid labels to their residues mod N; centers are fixed."""
    out = {}
    for lab in X.vertices:
        if lab.startswith("p"):
            x, y, z = (int(c) % N for c in lab[1:].split("_"))
            out[lab] = grid_label(x, y, z)
        else:
            out[lab] = lab
    return out


# ---------------------------------------------------------------------------
# the 77-vertex cube

# Block types by layer z, then row y, then column x.
CUBE77_LAYOUT = (
    (("A0", "B2", "A1"), ("B1", "A0", "C27"), ("A1", "C17", "A0")),
    (("C56", "A1", "B0"), ("A1", "E", "A0"), ("B0", "A0", "C12")),
    (("A1", "C06", "A0"), ("C05", "A1", "B1"), ("A0", "B2", "A1")),
)


def _layout_blocks(layout, choices: dict) -> dict:
    blocks = {}
    for k, layer in enumerate(layout):
        for j, row in enumerate(layer):
            for i, t in enumerate(row):
                pos = (i, j, k)
                t, diag = choices.get(pos, (t, None))
                blocks[pos] = cube_block(t, (i / 3, j / 3, k / 3), 1 / 3, free_diagonal=diag)
    return blocks


def _search_c_choices(layout) -> tuple[dict, int]:
    """Resolve the free diagonals of C blocks, widening to all C subtypes if needed.

    Returns the choice per C position and the number of assignments tried.
    """
    c_cells = [
        (i, j, k)
        for k, layer in enumerate(layout)
        for j, row in enumerate(layer)
        for i, t in enumerate(row)
        if t.startswith("C")
    ]

    def options(pos, widen):
        t = layout[pos[2]][pos[1]][pos[0]]
        types = [t] if not widen else [t] + [
            f"C{p}{q}" for p, q in face_diagonal_pairs() if f"C{p}{q}" != t
        ]
        return [(ty, d) for ty in types for d in c_free_diagonals(ty)]

    tried = 0
    for widen in (False, True):
        opts = [options(pos, widen) for pos in c_cells]
        # Each C block only touches its neighbours, so cells are solved one at
        # a time against squares with already-fixed neighbours, backtracking on
        # failure.
        base = _layout_blocks(layout, {})
        assembly = CubeAssembly(3, dict(base))
        chosen: dict = {}

        def local_ok(pos):
            blocks = assembly.blocks
            for axis in range(3):
                for side in (0, 1):
                    nb = list(pos)
                    nb[axis] += 1 if side else -1
                    nb = tuple(nb)
                    if nb in blocks:
                        if nb in dict.fromkeys(c_cells) and nb not in chosen:
                            continue
                        if assembly.square_triangles(pos, axis, side) != assembly.square_triangles(
                            nb, axis, 1 - side
                        ):
                            return False
            return True

        def solve(idx):
            nonlocal tried
            if idx == len(c_cells):
                return assembly.validate().ok
            pos = c_cells[idx]
            for ty, d in opts[idx]:
                tried += 1
                assembly.blocks[pos] = cube_block(ty, tuple(c / 3 for c in pos), 1 / 3, free_diagonal=d)
                chosen[pos] = (ty, d)
                if local_ok(pos) and solve(idx + 1):
                    return True
                del chosen[pos]
            assembly.blocks[pos] = base[pos]
            return False

        if solve(0):
            return dict(chosen), tried
    rep = CubeAssembly(3, _layout_blocks(layout, {})).validate()
    first = (rep.mismatched_interior or rep.mismatched_periodic or [None])[0]
    raise InconsistentGluing(f"no consistent C-block assignment; first mismatch {first}", square=first)


def cube77_assembly() -> tuple[CubeAssembly, dict, GluingReport]:
    choices, tried = _search_c_choices(CUBE77_LAYOUT)
    assembly = CubeAssembly(3, _layout_blocks(CUBE77_LAYOUT, choices))
    report = assembly.validate()
    info = {
        "c_blocks": {
            f"{pos}": {"type": ty, "free_diagonal": [f"a{d[0]}", f"a{d[1]}"]}
            for pos, (ty, d) in sorted(choices.items())
        },
        "assignments_tried": tried,
        "layout_types_kept": all(
            ty == CUBE77_LAYOUT[pos[2]][pos[1]][pos[0]] for pos, (ty, _) in choices.items()
        ),
    }
    return assembly, info, report


def cube77() -> NamedComplex:
    """77-vertex triangulation of the unit cube from 27 blocks of side 1/3."""
    assembly, info, report = cube77_assembly()
    if not report.ok:
        raise InconsistentGluing("cube77 gluing failed", square=(report.mismatched_interior + report.mismatched_periodic)[0])
    ctypes = ", ".join(f"{v['type']}@{k}:{'-'.join(v['free_diagonal'])}" for k, v in info["c_blocks"].items())
    return NamedComplex(
        "cube77",
        assembly.complex(),
        assembly.realization(),
        provenance=f"77-vertex cube from 27 blocks (14 A, 6 B, 6 C, 1 E); C free diagonals: {ctypes}",
        notes={"gluing": info, "interior_squares": report.interior_squares,
               "periodic_pairs": report.periodic_pairs},
    )


def _torus_quotient(name: str, cube: NamedComplex, N: int, provenance: str) -> NamedComplex:
    from .surgery import IdentificationScheme, quotient

    X = cube.complex
    cmap = wrap_scheme(X, N)
    Y = quotient(X, IdentificationScheme.from_map(cmap))
    cover = cube.realization
    coords = {}
    for lab, rep in cmap.items():
        if rep not in coords:
            coords[rep] = tuple(c % 1.0 for c in cover.coords[lab])
    R = Realization(
        Model.FLAT_TORUS3,
        coords,
        cover=cover,
        cover_complex=X,
        cover_map=cmap,
        note="geometry measured on the pre-quotient cube",
    )
    return NamedComplex(name, Y, R, provenance=provenance, notes=dict(cube.notes))


def t3_40() -> NamedComplex:
    return _torus_quotient(
        "t3_40", cube77(), 3,
        "40-vertex 3-torus: cube77 with opposite faces identified by translation",
    )


def t3_cube(n: int) -> NamedComplex:
    """The (2n)^3 grid of A0/A1 blocks before identification."""
    if not isinstance(n, int) or n < 1:
        raise BadParameter(f"n must be a positive integer, got {n!r}")
    N = 2 * n
    blocks = {}
    for pos in itertools.product(range(N), repeat=3):
        t = "A0" if sum(pos) % 2 == 0 else "A1"
        blocks[pos] = cube_block(t, tuple(c / N for c in pos), 1 / N)
    assembly = CubeAssembly(N, blocks)
    report = assembly.validate()
    if not report.ok:
        raise InconsistentGluing("checkerboard gluing failed", square=(report.mismatched_interior + report.mismatched_periodic)[0])
    return NamedComplex(
        f"t3_cube_{n}",
        assembly.complex(),
        assembly.realization(),
        provenance=f"unit cube split into {N}^3 cubes with alternating A0/A1 blocks",
        notes={"interior_squares": report.interior_squares, "periodic_pairs": report.periodic_pairs},
    )


def t3_family(n: int = 2) -> NamedComplex:
    """3-torus with 8n^3 vertices and 40n^3 tetrahedra (n >= 2)."""
    if not isinstance(n, int) or n < 2:
        raise BadParameter(f"t3_family needs an integer n >= 2, got {n!r}")
    return _torus_quotient(
        f"t3_family_{n}", t3_cube(n), 2 * n,
        f"3-torus with 8n^3 = {8 * n ** 3} vertices and 40n^3 = {40 * n ** 3} tetrahedra",
    )
