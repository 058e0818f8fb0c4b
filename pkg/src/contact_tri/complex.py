"""Finite abstract simplicial complexes and combinatorial manifold certificates.

A complex is stored as the set of its facets (inclusion-maximal faces).  Every
face is a tuple of vertex labels sorted in the canonical label order, so all
enumerations below are deterministic and byte-stable.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import re
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Mapping

from .errors import (
    DimensionUnsupported,
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimension,
    NotManifoldWithBoundary,
    NotPure,
    NotSurface,
    UnknownVertex,
)

Label = Hashable
Face = tuple

_CHUNK = re.compile(r"(\d+)")


@lru_cache(maxsize=None)
def label_key(label: Label) -> tuple:
    """Sort key giving the canonical total order on vertex labels.

    Strings sort naturally (``u2 < u10``); integers sort numerically and
    before strings with the same leading digits.  Ties between labels of
    different types are broken by ``repr``.
    """
    if isinstance(label, bool) or not isinstance(label, (int, str)):
        return (((1, repr(label)),), repr(label))
    if isinstance(label, int):
        return (((0, label),), repr(label))
    chunks = tuple(
        (0, int(part)) if part.isdigit() else (1, part)
        for part in _CHUNK.split(label)
        if part
    )
    return (chunks, repr(label))


def face_key(face: Iterable[Label]) -> tuple:
    return tuple(label_key(v) for v in face)


def canonical_face(vertices: Iterable[Label]) -> Face:
    """Return ``vertices`` as a canonically sorted tuple.

    Raises :class:`DuplicateVertexInFacet` when a label repeats.
    """
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise DuplicateVertexInFacet(f"repeated vertex in {verts!r}")
    return tuple(sorted(verts, key=label_key))


def _maximalize(faces: Iterable[Face]) -> list[Face]:
    unique = sorted(set(faces), key=lambda f: (-len(f), face_key(f)))
    kept: list[Face] = []
    kept_sets: list[frozenset] = []
    for f in unique:
        s = frozenset(f)
        if any(s < k for k in kept_sets if len(k) > len(s)):
            continue
        kept.append(f)
        kept_sets.append(s)
    return kept


def subfaces(face: Face) -> list[Face]:
    """Codimension-one faces of ``face`` (empty for a vertex)."""
    if len(face) <= 1:
        return []
    return [face[:i] + face[i + 1 :] for i in range(len(face))]


class SimplicialComplex:
    """Immutable simplicial complex identified with its set of facets.

    Parameters
    ----------
    facets:
        Iterable of vertex collections.
    pure:
        When true (the default) all facets must have the same size.  The
        permissive mode is meant for intermediate results such as
        intersections; it discards facets contained in other facets.
    vertices:
        Optional extra vertex labels.  Isolated labels not covered by a
        facet become 0-dimensional facets.
    """

    def __init__(self, facets: Iterable[Iterable[Label]] = (), *, pure: bool = True):
        faces = [canonical_face(f) for f in facets]
        faces = [f for f in faces if f]
        if pure:
            sizes = {len(f) for f in faces}
            if len(sizes) > 1:
                raise MixedDimension(f"facet sizes {sorted(sizes)} in pure mode")
            kept = sorted(set(faces), key=face_key)
        else:
            kept = sorted(_maximalize(faces), key=face_key)
        self._facets: tuple[Face, ...] = tuple(kept)

    # construction ---------------------------------------------------------
    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Label]], *, pure: bool = True) -> "SimplicialComplex":
        facets = list(facets)
        if not facets or all(len(tuple(f)) == 0 for f in facets):
            raise EmptyInput("a complex needs at least one non-empty facet")
        return cls(facets, pure=pure)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def simplex_boundary(cls, labels: Iterable[Label]) -> "SimplicialComplex":
        labels = canonical_face(labels)
        return cls(subfaces(labels))

    # basic data -----------------------------------------------------------
    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @cached_property
    def vertices(self) -> tuple[Label, ...]:
        return tuple(sorted({v for f in self._facets for v in f}, key=label_key))

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    @cached_property
    def _facet_set(self) -> frozenset:
        return frozenset(self._facets)

    def is_empty(self) -> bool:
        return not self._facets

    def __len__(self) -> int:
        return len(self._facets)

    def __iter__(self):
        return iter(self._facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facet_set == other._facet_set

    def __hash__(self) -> int:
        return hash(self._facet_set)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dimension}, f={self.f_vector()})"

    def __contains__(self, face) -> bool:
        """Whether ``face`` belongs to the downward closure."""
        s = frozenset(face)
        if not s:
            return True
        return any(s <= frozenset(f) for f in self._facets_of(next(iter(s))))

    # faces ----------------------------------------------------------------
    @cached_property
    def _faces_by_dim(self) -> dict[int, tuple[Face, ...]]:
        buckets: dict[int, set] = defaultdict(set)
        for f in self._facets:
            for k in range(1, len(f) + 1):
                buckets[k - 1].update(itertools.combinations(f, k))
        return {d: tuple(sorted(fs, key=face_key)) for d, fs in buckets.items()}

    def faces(self, k: int) -> tuple[Face, ...]:
        """All ``k``-dimensional faces in canonical order."""
        return self._faces_by_dim.get(k, ())

    def all_faces(self) -> list[Face]:
        return [f for d in range(self.dimension + 1) for f in self.faces(d)]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    @cached_property
    def _vertex_facets(self) -> dict[Label, tuple[Face, ...]]:
        index: dict[Label, list] = defaultdict(list)
        for f in self._facets:
            for v in f:
                index[v].append(f)
        return {v: tuple(fs) for v, fs in index.items()}

    def _facets_of(self, v: Label) -> tuple[Face, ...]:
        return self._vertex_facets.get(v, ())

    def vertex_degree(self, v: Label) -> int:
        """Number of facets containing ``v``."""
        return len(self._facets_of(v))

    @cached_property
    def ridge_incidence(self) -> dict[Face, tuple[Face, ...]]:
        """Map each codimension-one face of a facet to the facets containing it."""
        inc: dict[Face, list] = defaultdict(list)
        for f in self._facets:
            for r in subfaces(f):
                inc[r].append(f)
        return {r: tuple(fs) for r, fs in sorted(inc.items(), key=lambda kv: face_key(kv[0]))}

    @cached_property
    def graph(self) -> dict[Label, tuple[Label, ...]]:
        """Adjacency lists of the 1-skeleton in canonical order."""
        adj: dict[Label, set] = {v: set() for v in self.vertices}
        for a, b in self.faces(1):
            adj[a].add(b)
            adj[b].add(a)
        return {v: tuple(sorted(n, key=label_key)) for v, n in adj.items()}

    def components(self) -> list[tuple[Label, ...]]:
        seen: set = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            queue = deque([v])
            seen.add(v)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.graph[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp, key=label_key)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # derived complexes ----------------------------------------------------
    def link(self, v: Label) -> "SimplicialComplex":
        if v not in self._vertex_facets:
            raise UnknownVertex(f"{v!r} is not a vertex")
        return SimplicialComplex(
            (tuple(u for u in f if u != v) for f in self._facets_of(v)), pure=False
        )

    def star(self, v: Label) -> "SimplicialComplex":
        if v not in self._vertex_facets:
            raise UnknownVertex(f"{v!r} is not a vertex")
        return SimplicialComplex(self._facets_of(v), pure=self.is_pure)

    def face_link(self, face: Iterable[Label]) -> "SimplicialComplex":
        s = frozenset(face)
        return SimplicialComplex(
            (tuple(u for u in f if u not in s) for f in self._facets if s <= set(f)),
            pure=False,
        )

    def boundary(self) -> "SimplicialComplex":
        """Codimension-one faces lying in exactly one facet."""
        if not self.is_pure:
            raise NotPure("boundary of a non-pure complex is undefined here")
        return SimplicialComplex(r for r, fs in self.ridge_incidence.items() if len(fs) == 1)

    def skeleton(self, k: int) -> "SimplicialComplex":
        if k >= self.dimension:
            return self
        return SimplicialComplex(self.faces(k))

    def remove_facets(self, facets: Iterable[Iterable[Label]]) -> "SimplicialComplex":
        drop = {canonical_face(f) for f in facets}
        return SimplicialComplex((f for f in self._facets if f not in drop), pure=self.is_pure)

    def relabel(self, mapping: Mapping[Label, Label] | callable) -> "SimplicialComplex":
        """Apply a vertex map.  Non-injective maps may collapse facets."""
        fn = mapping if callable(mapping) else mapping.__getitem__
        return SimplicialComplex(
            (tuple(fn(v) for v in f) for f in self._facets), pure=self.is_pure
        )

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        facets = self._facets + other._facets
        pure = self.is_pure and other.is_pure and (self.dimension == other.dimension or not facets)
        return SimplicialComplex(facets, pure=False) if not pure else SimplicialComplex(facets)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        shared = set(self.vertices) & set(other.vertices)
        if not shared:
            return SimplicialComplex.empty()
        faces = set()
        for v in shared:
            for f in self._facets_of(v):
                fs = set(f)
                for g in other._facets_of(v):
                    faces.add(tuple(u for u in g if u in fs))
        return SimplicialComplex(faces, pure=False)


# Module-level spellings of the core operations.

def from_facets(facets: Iterable[Iterable[Label]], *, pure: bool = True) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets, pure=pure)


def f_vector(X: SimplicialComplex) -> tuple[int, ...]:
    return X.f_vector()


def euler_characteristic(X: SimplicialComplex) -> int:
    return X.euler_characteristic()


def link(X: SimplicialComplex, v: Label) -> SimplicialComplex:
    return X.link(v)


def boundary_subcomplex(X: SimplicialComplex) -> SimplicialComplex:
    return X.boundary()


def subcomplex_union(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    return X.union(Y)


def subcomplex_intersection(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    return X.intersection(Y)


# ---------------------------------------------------------------------------
# orientation

def coherent_orientation(X: SimplicialComplex) -> dict[Face, int] | None:
    """Signs making adjacent facets induce opposite ridge orientations.

    Each connected component (through ridges) starts with its canonically
    smallest facet positive.  Returns ``None`` when no coherent choice exists
    or a ridge lies in more than two facets.
    """
    if not X.is_pure:
        return None
    inc = X.ridge_incidence
    if any(len(fs) > 2 for fs in inc.values()):
        return None
    sign: dict[Face, int] = {}
    for start in X.facets:
        if start in sign:
            continue
        sign[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for i in range(len(f)):
                r = f[:i] + f[i + 1 :]
                induced = sign[f] * (-1) ** i
                for g in inc[r]:
                    if g == f:
                        continue
                    j = next(k for k in range(len(g)) if g[k] not in r)
                    want = -induced * (-1) ** j
                    if g in sign:
                        if sign[g] != want:
                            return None
                    else:
                        sign[g] = want
                        queue.append(g)
    return sign


def permutation_parity(seq: Iterable, key=label_key) -> int:
    """+1 or -1: parity of the permutation sorting ``seq`` canonically."""
    items = list(seq)
    order = sorted(range(len(items)), key=lambda i: key(items[i]))
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# surfaces

@dataclass(frozen=True)
class SurfaceCertificate:
    is_closed_surface: bool
    orientable: bool
    euler_characteristic: int
    genus: int | None
    connected: bool
    boundary_components: int

    @property
    def is_sphere(self) -> bool:
        return self.is_closed_surface and self.connected and self.euler_characteristic == 2

    @property
    def is_disk(self) -> bool:
        return self.connected and self.boundary_components == 1 and self.euler_characteristic == 1


def _graph_components(vertices, edges) -> int:
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, count = set(), 0
    for v in vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def _one_dim_kind(L: SimplicialComplex) -> str | None:
    """'cycle', 'path' or None for a 1-dimensional complex."""
    if L.dimension != 1 or not L.is_pure or not L.is_connected():
        return None
    degrees = [len(L.graph[v]) for v in L.vertices]
    if any(d > 2 for d in degrees):
        return None
    ends = sum(1 for d in degrees if d == 1)
    if ends == 0:
        return "cycle"
    if ends == 2:
        return "path"
    return None


def classify_surface(X: SimplicialComplex) -> SurfaceCertificate:
    """Certify a pure 2-complex as a (possibly bounded) surface.

    Raises :class:`NotSurface` naming the first edge in more than two
    triangles or the first vertex whose link is neither a cycle nor a path.
    """
    if not X.is_pure:
        raise NotPure("surface classification needs a pure complex")
    if X.dimension != 2:
        raise NotSurface(f"expected a 2-complex, got dimension {X.dimension}")
    inc = X.ridge_incidence
    for edge, tris in inc.items():
        if len(tris) > 2:
            raise NotSurface(f"edge {edge} lies in {len(tris)} triangles", cell=edge)
    for v in X.vertices:
        if _one_dim_kind(X.link(v)) is None:
            raise NotSurface(f"link of {v!r} is not a cycle or a path", cell=(v,))
    bdry_edges = [e for e, tris in inc.items() if len(tris) == 1]
    bdry_vertices = {v for e in bdry_edges for v in e}
    b = _graph_components(bdry_vertices, bdry_edges)
    chi = X.euler_characteristic()
    orientable = coherent_orientation(X) is not None
    connected = X.is_connected()
    genus = None
    if connected:
        genus = (2 - chi - b) // 2 if orientable else 2 - chi - b
    return SurfaceCertificate(
        is_closed_surface=not bdry_edges,
        orientable=orientable,
        euler_characteristic=chi,
        genus=genus,
        connected=connected,
        boundary_components=b,
    )


# ---------------------------------------------------------------------------
# manifolds

@dataclass(frozen=True)
class ManifoldCertificate:
    dimension: int
    pure: bool
    pseudomanifold: bool
    closed: bool
    links_ok: bool
    orientable: bool
    connected: bool
    interior_vertices: tuple = ()
    boundary_vertices: tuple = ()
    bad_links: tuple = ()

    @property
    def is_closed_manifold(self) -> bool:
        return self.pure and self.pseudomanifold and self.closed and self.links_ok

    @property
    def is_manifold_with_boundary(self) -> bool:
        return self.pure and self.pseudomanifold and self.links_ok and not self.closed


def _link_kind(L: SimplicialComplex, d: int) -> str | None:
    """'sphere' or 'ball' for a vertex link of a d-dimensional complex."""
    if d == 0:
        return "sphere" if L.is_empty() else None
    if d == 1:
        n = len(L.vertices)
        if L.dimension != 0:
            return None
        return {2: "sphere", 1: "ball"}.get(n)
    if d == 2:
        return {"cycle": "sphere", "path": "ball"}.get(_one_dim_kind(L))
    try:
        s = classify_surface(L)
    except (NotSurface, NotPure):
        return None
    if s.is_sphere:
        return "sphere"
    if s.is_disk:
        return "ball"
    return None


def certify_manifold(X: SimplicialComplex) -> ManifoldCertificate:
    """Combinatorial manifold checks for pure complexes of dimension <= 3."""
    d = X.dimension
    if d > 3:
        raise DimensionUnsupported(f"dimension {d} > 3")
    if not X.is_pure or X.is_empty():
        return ManifoldCertificate(d, X.is_pure, False, False, False, False, X.is_connected())
    counts = [len(fs) for fs in X.ridge_incidence.values()]
    pseudo = all(c <= 2 for c in counts)
    closed = pseudo and all(c == 2 for c in counts)
    interior, bdry, bad = [], [], []
    for v in X.vertices:
        kind = _link_kind(X.link(v), d)
        if kind == "sphere":
            interior.append(v)
        elif kind == "ball":
            bdry.append(v)
        else:
            bad.append(v)
    links_ok = not bad and (not closed or not bdry)
    orientable = pseudo and coherent_orientation(X) is not None
    return ManifoldCertificate(
        dimension=d,
        pure=True,
        pseudomanifold=pseudo,
        closed=closed,
        links_ok=links_ok,
        orientable=orientable,
        connected=X.is_connected(),
        interior_vertices=tuple(interior),
        boundary_vertices=tuple(bdry),
        bad_links=tuple(bad),
    )


# ---------------------------------------------------------------------------
# balls and collapses

class BallLevel(enum.IntEnum):
    FAIL = 0
    HOMOLOGY_BALL = 1
    COLLAPSIBLE = 2


@dataclass(frozen=True)
class CollapseResult:
    steps: tuple[tuple[Face, Face], ...]
    remaining: tuple[Face, ...]

    @property
    def to_point(self) -> bool:
        return len(self.remaining) == 1 and len(self.remaining[0]) == 1


def greedy_collapse(X: SimplicialComplex) -> CollapseResult:
    """Elementary collapses, always taking the smallest free face first."""
    faces = set(X.all_faces())
    cofaces: dict[Face, set] = {f: set() for f in faces}
    for f in faces:
        for g in subfaces(f):
            cofaces[g].add(f)

    def is_free(f):
        cs = cofaces[f]
        return len(cs) == 1 and not cofaces[next(iter(cs))]

    heap = [(face_key(f), f) for f in faces if is_free(f)]
    heapq.heapify(heap)

    def touch(g):
        if g not in faces:
            return
        if is_free(g):
            heapq.heappush(heap, (face_key(g), g))
        if not cofaces[g]:
            for h in subfaces(g):
                if h in faces and is_free(h):
                    heapq.heappush(heap, (face_key(h), h))

    steps = []
    while heap:
        _, f = heapq.heappop(heap)
        if f not in faces or not is_free(f):
            continue
        (t,) = cofaces[f]
        faces.discard(f)
        faces.discard(t)
        steps.append((f, t))
        for g in subfaces(t):
            cofaces[g].discard(t)
        for g in subfaces(f):
            cofaces[g].discard(f)
        for g in subfaces(t) + subfaces(f):
            touch(g)
    remaining = tuple(sorted(faces, key=lambda f: (len(f), face_key(f))))
    return CollapseResult(tuple(steps), remaining)


def certify_ball(X: SimplicialComplex) -> BallLevel:
    """Strongest available ball certificate for a manifold with boundary.

    COLLAPSIBLE when the greedy collapse reaches a point, otherwise
    HOMOLOGY_BALL when reduced homology vanishes and the boundary is a
    sphere, otherwise FAIL.  A FAIL does not prove the complex is not a ball.
    """
    from .algebra import homology

    cert = certify_manifold(X)
    if not cert.is_manifold_with_boundary:
        raise NotManifoldWithBoundary("complex is not a manifold with non-empty boundary")
    if greedy_collapse(X).to_point:
        return BallLevel.COLLAPSIBLE
    if not homology(X).is_acyclic():
        return BallLevel.FAIL
    ok = _link_kind(X.boundary(), X.dimension) == "sphere"
    return BallLevel.HOMOLOGY_BALL if ok else BallLevel.FAIL
