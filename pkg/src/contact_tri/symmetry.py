"""Automorphisms and isomorphisms of small complexes by backtracking search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complex import SimplicialComplex, canonical_face, face_key, label_key
from .errors import TooLarge

DEFAULT_MAX_VERTICES = 16


def _invariants(X: SimplicialComplex) -> dict:
    """Vertex invariants used for pruning: facet degree, graph degree and the
    f-vector of the link."""
    return {
        v: (X.vertex_degree(v), len(X.graph[v]), X.link(v).f_vector())
        for v in X.vertices
    }


def _search_order(X: SimplicialComplex) -> list:
    """Vertices ordered so each one has as many earlier neighbours as possible."""
    order: list = []
    placed: set = set()
    remaining = list(X.vertices)
    while remaining:
        def score(v):
            return (sum(1 for w in X.graph[v] if w in placed), X.vertex_degree(v))

        top = max(score(v) for v in remaining)
        # ties resolve to the canonically smallest vertex
        best = min((v for v in remaining if score(v) == top), key=label_key)
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _isomorphisms(X: SimplicialComplex, Y: SimplicialComplex, first_only: bool):
    """Yield facet-preserving vertex bijections X -> Y in a deterministic order."""
    if X.f_vector() != Y.f_vector():
        return
    ix, iy = _invariants(X), _invariants(Y)
    if sorted(ix.values()) != sorted(iy.values()):
        return
    order = _search_order(X)
    yfacets = Y._facet_set
    yedges = set(Y.faces(1))
    # facets of X that become fully assigned at each depth
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list] = [[] for _ in order]
    for f in X.facets:
        closing[max(pos[v] for v in f)].append(f)
    candidates = {v: [w for w in Y.vertices if iy[w] == ix[v]] for v in X.vertices}
    xgraph = {v: set(X.graph[v]) for v in X.vertices}

    m: dict = {}
    used: set = set()

    def edge_ok(a, b):
        return tuple(sorted((a, b), key=label_key)) in yedges

    def rec(depth):
        if depth == len(order):
            yield dict(m)
            return
        v = order[depth]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u in order[:depth]:
                if (u in xgraph[v]) != edge_ok(m[u], w):
                    ok = False
                    break
            if not ok:
                continue
            m[v] = w
            if all(canonical_face(m[x] for x in f) in yfacets for f in closing[depth]):
                used.add(w)
                yield from rec(depth + 1)
                used.discard(w)
            del m[v]

    yield from rec(0)


def _guard(X: SimplicialComplex, limit: int | None):
    if limit is not None and len(X.vertices) > limit:
        raise TooLarge(f"{len(X.vertices)} vertices exceeds the search limit {limit}")


# ---------------------------------------------------------------------------
# permutations

Perm = tuple  # images of points 0..n-1


def _compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _schreier_sims_order(gens: list[Perm], n: int) -> int:
    """Group order by recursive orbit-stabilizer with Schreier generators."""
    ident = tuple(range(n))
    gens = [g for g in dict.fromkeys(gens) if g != ident]
    if not gens:
        return 1
    point = next(i for i in range(n) if any(g[i] != i for g in gens))
    transversal = {point: ident}
    queue = [point]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = g[x]
            if y not in transversal:
                transversal[y] = _compose(transversal[x], g)
                queue.append(y)
    stab = set()
    for x, t in transversal.items():
        for g in gens:
            s = _compose(_compose(t, g), _inverse(transversal[g[x]]))
            if s != ident:
                stab.add(s)
    return len(transversal) * _schreier_sims_order(sorted(stab), n)


def _closure(gens: list[Perm], n: int) -> set:
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = _compose(e, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return elems


@dataclass(frozen=True)
class PermutationGroup:
    """Group of vertex permutations given by generators.

    ``order`` comes from a stabilizer chain over the generators;
    ``enumerated`` is the number of automorphisms found by exhaustive
    search when that count is available.
    """

    points: tuple
    generators: tuple[dict, ...]
    order: int
    enumerated: int | None = None

    def _index(self):
        return {v: i for i, v in enumerate(self.points)}

    def as_tuples(self) -> list[Perm]:
        idx = self._index()
        return [tuple(idx[g.get(v, v)] for v in self.points) for g in self.generators]

    def elements(self) -> list[dict]:
        elems = _closure(self.as_tuples(), len(self.points))
        out = [{v: self.points[p[i]] for i, v in enumerate(self.points)} for p in elems]
        return sorted(out, key=lambda g: [label_key(g[v]) for v in self.points])

    def cycle_strings(self) -> list[str]:
        return [cycle_notation(g, self.points) for g in self.generators]


def cycle_notation(perm: Mapping, points: Sequence | None = None) -> str:
    points = list(points) if points is not None else sorted(perm, key=label_key)
    seen, parts = set(), []
    for v in points:
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        w = perm.get(v, v)
        while w != v:
            cyc.append(w)
            seen.add(w)
            w = perm.get(w, w)
        if len(cyc) > 1:
            parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) or "()"


def all_automorphisms(X: SimplicialComplex, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> list[dict]:
    _guard(X, max_vertices)
    return list(_isomorphisms(X, X, first_only=False))


def group_from_generators(points: Sequence, generators: Iterable[Mapping]) -> PermutationGroup:
    points = tuple(points)
    gens = tuple(dict(g) for g in generators)
    idx = {v: i for i, v in enumerate(points)}
    tuples = [tuple(idx[g.get(v, v)] for v in points) for g in gens]
    return PermutationGroup(points, gens, _schreier_sims_order(tuples, len(points)))


def automorphism_group(X: SimplicialComplex, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PermutationGroup:
    """Full automorphism group by exhaustive backtracking.

    Generators are chosen greedily from the enumeration: an automorphism is
    kept when it is not already generated by the earlier ones.
    """
    autos = all_automorphisms(X, max_vertices)
    points = X.vertices
    idx = {v: i for i, v in enumerate(points)}
    n = len(points)
    tuples = [tuple(idx[a[v]] for v in points) for a in autos]
    tuples.sort()
    gens: list[Perm] = []
    span = {tuple(range(n))}
    for t in tuples:
        if t not in span:
            gens.append(t)
            span = _closure(gens, n)
            if len(span) == len(tuples):
                break
    order = _schreier_sims_order(gens, n)
    gdicts = tuple({v: points[t[i]] for i, v in enumerate(points) if t[i] != i} for t in gens)
    return PermutationGroup(points, gdicts, order, len(autos))


def apply_to_face(perm: Mapping, face) -> tuple:
    return canonical_face(perm.get(v, v) for v in face)


def orbits(G: PermutationGroup, cells: Iterable) -> list[tuple]:
    """Orbit partition of ``cells`` (faces) under the group generators."""
    cells = [canonical_face(c) for c in cells]
    parent = {c: c for c in cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for g in G.generators:
        for c in cells:
            img = apply_to_face(g, c)
            if img in parent:
                a, b = find(c), find(img)
                if a != b:
                    parent[max(a, b, key=face_key)] = min(a, b, key=face_key)
    groups: dict = {}
    for c in cells:
        groups.setdefault(find(c), []).append(c)
    return sorted(
        (tuple(sorted(g, key=face_key)) for g in groups.values()), key=lambda o: face_key(o[0])
    )


def verify_automorphisms(X: SimplicialComplex, perms: Iterable[Mapping]) -> list[bool]:
    out = []
    verts = set(X.vertices)
    for p in perms:
        images = [p.get(v, v) for v in X.vertices]
        if set(images) != verts:
            out.append(False)
            continue
        out.append({apply_to_face(p, f) for f in X.facets} == X._facet_set)
    return out


def find_isomorphism(
    X: SimplicialComplex, Y: SimplicialComplex, max_vertices: int | None = DEFAULT_MAX_VERTICES
) -> dict | None:
    """A facet-preserving bijection from X onto Y, or ``None``."""
    if len(X.vertices) != len(Y.vertices) or X.f_vector() != Y.f_vector():
        return None
    _guard(X, max_vertices)
    return next(_isomorphisms(X, Y, first_only=True), None)
