"""Integer homology, Smith normal form and edge-path group presentations.

Boundary matrices follow the convention ``rows = (k-1)-faces``,
``columns = k-faces`` with the canonical face orders of
:class:`~contact_tri.complex.SimplicialComplex`; the entry for deleting the
i-th vertex of a face is ``(-1)**i``.  All arithmetic uses Python integers.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import SimplicialComplex, label_key
from .errors import Disconnected, NotAClosedPath, TorsionUnsupported, UnknownVertex

Matrix = list  # list of rows of Python ints


# ---------------------------------------------------------------------------
# boundary matrices

@dataclass(frozen=True)
class BoundaryMatrices:
    """Signed incidences ``∂_k`` stored column-sparse.

    ``columns[k][j]`` maps row indices of (k-1)-faces to coefficients for the
    j-th k-face.
    """

    faces: dict
    columns: dict

    def shape(self, k: int) -> tuple[int, int]:
        return (len(self.faces.get(k - 1, ())), len(self.faces.get(k, ())))

    def dense(self, k: int) -> Matrix:
        m, n = self.shape(k)
        out = [[0] * n for _ in range(m)]
        for j, col in enumerate(self.columns.get(k, ())):
            for i, v in col.items():
                out[i][j] = v
        return out

    def entries(self, k: int) -> dict:
        return {
            (i, j): v for j, col in enumerate(self.columns.get(k, ())) for i, v in col.items()
        }

    @property
    def top(self) -> int:
        return max(self.faces, default=-1)

    def composes_to_zero(self) -> bool:
        for k in range(2, self.top + 1):
            low = self.columns[k - 1]
            for col in self.columns[k]:
                acc: dict = {}
                for i, v in col.items():
                    for r, w in low[i].items():
                        acc[r] = acc.get(r, 0) + v * w
                if any(acc.values()):
                    return False
        return True


def boundary_matrices(X: SimplicialComplex) -> BoundaryMatrices:
    faces = {k: X.faces(k) for k in range(X.dimension + 1)} if not X.is_empty() else {}
    columns = {}
    for k in range(1, X.dimension + 1):
        index = {f: i for i, f in enumerate(faces[k - 1])}
        cols = []
        for f in faces[k]:
            cols.append({index[f[:i] + f[i + 1 :]]: (-1) ** i for i in range(len(f))})
        columns[k] = cols
    return BoundaryMatrices(faces, columns)


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass
class SNFResult:
    """``U @ M @ V == D`` with ``D`` diagonal; ``Vinv`` is the inverse of ``V``."""

    diagonal: list
    rank: int
    U: Matrix | None = None
    V: Matrix | None = None
    Vinv: Matrix | None = None


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf_decompose(M, transforms: bool = True) -> SNFResult:
    """Dense Smith normal form with optional unimodular transforms."""
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None
    Vi = _identity(n) if transforms else None

    def row_add(dst, src, q):  # row_dst += q * row_src
        if q == 0:
            return
        rs, rd = A[src], A[dst]
        for j in range(n):
            if rs[j]:
                rd[j] += q * rs[j]
        if transforms:
            us, ud = U[src], U[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += q * us[j]

    def col_add(dst, src, q):  # col_dst += q * col_src
        if q == 0:
            return
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        if transforms:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]
            vd, vs = Vi[dst], Vi[src]
            for j in range(n):
                if vd[j]:
                    vs[j] -= q * vd[j]

    def row_swap(a, b):
        if a != b:
            A[a], A[b] = A[b], A[a]
            if transforms:
                U[a], U[b] = U[b], U[a]

    def col_swap(a, b):
        if a == b:
            return
        for row in A:
            row[a], row[b] = row[b], row[a]
        if transforms:
            for row in V:
                row[a], row[b] = row[b], row[a]
            Vi[a], Vi[b] = Vi[b], Vi[a]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, t)
                for j in range(t, n):
                    if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                        best = (abs(A[t][j]), t, j)
                row_swap(t, best[1])
                col_swap(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if transforms:
                U[t] = [-x for x in U[t]]
        diag.append(A[t][t])
        t += 1
    return SNFResult(diag, len(diag), U, V, Vi)


def smith_normal_form(M) -> tuple[tuple[int, ...], int]:
    """Invariant factors (a divisibility chain) and rank of an integer matrix."""
    res = snf_decompose(M, transforms=False)
    return tuple(res.diagonal), res.rank


def _sparse_rank_torsion(entries: dict, shape: tuple[int, int]) -> tuple[int, list[int]]:
    """Rank and invariant factors > 1 via unit-pivot elimination.

    Pivoting on a unit entry splits off a factor 1 and leaves the Schur
    complement, which is again integral.  Whatever survives without unit
    entries goes to the dense routine.
    """
    rows: dict = {}
    cols: dict = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, {})[i] = v
    rank = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            col = cols.get(c)
            if not col:
                cols.pop(c, None)
                continue
            units = [r for r, v in col.items() if v in (1, -1)]
            if not units:
                continue
            r = min(units, key=lambda x: (len(rows[x]), x))
            p = col[r]
            prow = rows[r]
            for r2, a in list(col.items()):
                if r2 == r:
                    continue
                q = a * p  # p is its own inverse
                target = rows[r2]
                for c2, b in prow.items():
                    nv = target.get(c2, 0) - q * b
                    if nv:
                        target[c2] = nv
                        cols.setdefault(c2, {})[r2] = nv
                    else:
                        target.pop(c2, None)
                        cols[c2].pop(r2, None)
                if not target:
                    del rows[r2]
            for c2 in prow:
                if c2 != c:
                    cols[c2].pop(r, None)
            del rows[r]
            del cols[c]
            rank += 1
            progress = True
    live_rows = sorted(r for r in rows if rows[r])
    live_cols = sorted(c for c in cols if cols[c])
    torsion: list[int] = []
    if live_rows and live_cols:
        ci = {c: k for k, c in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for a, r in enumerate(live_rows):
            for c, v in rows[r].items():
                dense[a][ci[c]] = v
        factors, rk = smith_normal_form(dense)
        rank += rk
        torsion = [f for f in factors if f > 1]
    return rank, torsion


# ---------------------------------------------------------------------------
# homology

@dataclass(frozen=True)
class HomologyProfile:
    """Integral homology ranks and torsion coefficients in dimensions 0..d."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.betti) - 1

    @property
    def reduced_betti(self) -> tuple[int, ...]:
        if not self.betti:
            return ()
        return (max(self.betti[0] - 1, 0),) + self.betti[1:]

    def is_acyclic(self) -> bool:
        return not any(self.reduced_betti) and not any(self.torsion)

    def is_homology_sphere(self) -> bool:
        d = self.dimension
        expected = (1,) + (0,) * (d - 1) + (1,) if d > 0 else (2,)
        return self.betti == expected and not any(self.torsion)

    def matches(self, betti: Sequence[int]) -> bool:
        """Torsion-free profile with the given Betti numbers."""
        return self.betti == tuple(betti) and not any(self.torsion)

    def group_strings(self) -> list[str]:
        out = []
        for b, t in zip(self.betti, self.torsion):
            parts = []
            if b:
                parts.append("Z" if b == 1 else f"Z^{b}")
            parts.extend(f"Z_{q}" for q in t)
            out.append(" + ".join(parts) if parts else "0")
        return out

    def __str__(self) -> str:
        return "(" + ", ".join(self.group_strings()) + ")"

    def to_json(self) -> dict:
        return {
            str(k): {"betti": b, "torsion": list(t)}
            for k, (b, t) in enumerate(zip(self.betti, self.torsion))
        }

    @classmethod
    def from_json(cls, data: dict) -> "HomologyProfile":
        keys = sorted(data, key=int)
        return cls(
            tuple(data[k]["betti"] for k in keys),
            tuple(tuple(data[k]["torsion"]) for k in keys),
        )


def homology(X: SimplicialComplex) -> HomologyProfile:
    if X.is_empty():
        return HomologyProfile((), ())
    bm = boundary_matrices(X)
    d = X.dimension
    ranks = {0: 0, d + 1: 0}
    tors = {d + 1: []}
    for k in range(1, d + 1):
        ranks[k], tors[k] = _sparse_rank_torsion(bm.entries(k), bm.shape(k))
    betti = tuple(len(bm.faces[k]) - ranks[k] - ranks[k + 1] for k in range(d + 1))
    torsion = tuple(tuple(tors[k + 1]) for k in range(d + 1))
    return HomologyProfile(betti, torsion)


# ---------------------------------------------------------------------------
# classes of 1-cycles

def _matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[] for _ in A]
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a and b) for col in cols] for row in A]


def _check_loop(X: SimplicialComplex, loop: Sequence) -> list[tuple]:
    path = list(loop)
    if len(path) < 2 or path[0] != path[-1]:
        raise NotAClosedPath("an edge loop must start and end at the same vertex")
    edges = set(X.faces(1))
    steps = []
    for a, b in zip(path, path[1:]):
        e = tuple(sorted((a, b), key=label_key))
        if a == b or e not in edges:
            raise NotAClosedPath(f"{a!r}-{b!r} is not an edge")
        steps.append((a, b))
    return steps


@dataclass(frozen=True)
class H1Basis:
    """Change of basis data fixing the coordinates returned by :func:`h1_class`."""

    edges: tuple
    rank_d1: int
    vinv: Matrix
    rank_rel: int
    u_rel: Matrix

    @property
    def rank(self) -> int:
        return len(self.u_rel) - self.rank_rel

    def coordinates(self, chain: Sequence[int]) -> tuple[int, ...]:
        y = [sum(a * c for a, c in zip(row, chain) if a and c) for row in self.vinv]
        if any(y[: self.rank_d1]):
            raise NotAClosedPath("chain is not a cycle")
        z = y[self.rank_d1 :]
        w = [sum(a * c for a, c in zip(row, z) if a and c) for row in self.u_rel]
        return tuple(w[self.rank_rel :])


def h1_basis(X: SimplicialComplex) -> H1Basis:
    """Deterministic integral basis of H_1 from two Smith decompositions.

    ``∂_1`` is decomposed as ``U ∂_1 V = D``; the trailing columns of ``V``
    span the cycles.  Boundaries are rewritten in those cycle coordinates and
    decomposed again; the trailing rows of the second row transform give the
    coordinate functionals of H_1.
    """
    bm = boundary_matrices(X)
    edges = bm.faces.get(1, ())
    n1 = len(edges)
    if n1 == 0:
        return H1Basis((), 0, [], 0, [])
    s1 = snf_decompose(bm.dense(1))
    r1 = s1.rank
    d2 = bm.dense(2) if X.dimension >= 2 else [[] for _ in range(n1)]
    rel = _matmul(s1.Vinv, d2)[r1:] if d2 and d2[0] else [[] for _ in range(n1 - r1)]
    if rel and rel[0]:
        s2 = snf_decompose(rel)
        if any(f > 1 for f in s2.diagonal):
            raise TorsionUnsupported("H_1 has torsion")
        return H1Basis(tuple(edges), r1, s1.Vinv, s2.rank, s2.U)
    return H1Basis(tuple(edges), r1, s1.Vinv, 0, _identity(n1 - r1))


def edge_chain(X: SimplicialComplex, loop: Sequence) -> list[int]:
    steps = _check_loop(X, loop)
    index = {e: i for i, e in enumerate(X.faces(1))}
    chain = [0] * len(index)
    for a, b in steps:
        if label_key(a) < label_key(b):
            chain[index[(a, b)]] += 1
        else:
            chain[index[(b, a)]] -= 1
    return chain


def h1_class(X: SimplicialComplex, loop: Sequence, basis: H1Basis | None = None) -> tuple[int, ...]:
    """Coordinates of the class of a closed edge path in ``H_1(X; Z)``.

    ``loop`` lists vertices and must repeat its first vertex at the end.
    """
    chain = edge_chain(X, loop)
    basis = basis or h1_basis(X)
    return basis.coordinates(chain)


# ---------------------------------------------------------------------------
# fundamental group

class SimplifyStatus(enum.Enum):
    UNSIMPLIFIED = "UNSIMPLIFIED"
    TRIVIALIZED = "TRIVIALIZED"
    UNKNOWN = "UNKNOWN"


Word = tuple  # signed 1-based generator indices


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    basepoint: object = None
    status: SimplifyStatus = SimplifyStatus.UNSIMPLIFIED
    moves: int = 0

    @property
    def trivialized(self) -> bool:
        return self.status is SimplifyStatus.TRIVIALIZED

    def word_string(self, w: Word) -> str:
        if not w:
            return "1"
        return " ".join(
            self.generators[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w
        )

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(self.word_string(w) for w in self.relators)
        return f"< {gens} | {rels} >"

    def validate(self) -> bool:
        n = len(self.generators)
        return all(0 < abs(x) <= n for w in self.relators for x in w)


def _free_reduce(word: Iterable[int]) -> tuple:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_reduce(word: tuple) -> tuple:
    w = _free_reduce(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _invert(word: tuple) -> tuple:
    return tuple(-x for x in reversed(word))


def _canonical_cyclic(word: tuple) -> tuple:
    if not word:
        return word
    candidates = []
    for w in (word, _invert(word)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates, key=lambda w: (len(w), [(abs(x), x < 0) for x in w]))


def fundamental_group(X: SimplicialComplex, basepoint=None) -> GroupPresentation:
    """Edge-path presentation from a breadth-first spanning tree.

    Generators are the edges outside the tree, named ``a-b`` with ``a`` before
    ``b`` canonically; each triangle contributes one relator.
    """
    if X.is_empty():
        raise Disconnected("empty complex")
    if not X.is_connected():
        raise Disconnected("fundamental group needs a connected complex")
    if basepoint is None:
        basepoint = X.vertices[0]
    if basepoint not in X.graph:
        raise UnknownVertex(f"{basepoint!r} is not a vertex")
    tree = set()
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for w in X.graph[v]:
            if w not in seen:
                seen.add(w)
                tree.add(tuple(sorted((v, w), key=label_key)))
                queue.append(w)
    gens = [e for e in X.faces(1) if e not in tree]
    gid = {e: i + 1 for i, e in enumerate(gens)}

    def letter(a, b):
        if label_key(a) < label_key(b):
            return gid.get((a, b))
        g = gid.get((b, a))
        return -g if g else None

    relators = []
    for a, b, c in X.faces(2):
        w = _cyclic_reduce(x for x in (letter(a, b), letter(b, c), letter(c, a)) if x)
        if w:
            relators.append(w)
    return GroupPresentation(
        tuple(f"{a}-{b}" for a, b in gens), tuple(relators), basepoint
    )


def tietze_simplify(P: GroupPresentation, budget: int = 10_000, max_length: int = 10_000) -> GroupPresentation:
    """Bounded greedy Tietze moves.

    Each move eliminates a generator, either because a relator is a single
    letter or because it occurs exactly once in some relator (the shortest
    such relator is used).  The result is TRIVIALIZED when no generators
    remain and UNKNOWN otherwise; UNKNOWN says nothing about the group.
    """
    alive = set(range(1, len(P.generators) + 1))
    rels: list[tuple] = [_cyclic_reduce(w) for w in P.relators]
    moves = 0

    def tidy(words):
        seen, out = set(), []
        for w in words:
            w = _cyclic_reduce(w)
            if not w:
                continue
            key = _canonical_cyclic(w)
            if key not in seen:
                seen.add(key)
                out.append(w)
        out.sort(key=lambda w: (len(w), _canonical_cyclic(w)))
        return out

    rels = tidy(rels)
    while alive and moves < budget:
        choice = None
        for idx, w in enumerate(rels):
            counts: dict = {}
            for x in w:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = sorted(g for g, c in counts.items() if c == 1)
            if once:
                choice = (idx, once[0])
                break
        if choice is None:
            break
        idx, g = choice
        w = rels.pop(idx)
        pos = next(i for i, x in enumerate(w) if abs(x) == g)
        rotated = w[pos:] + w[:pos]
        rest = rotated[1:]
        # g^e * rest = 1, so g = rest^-1 when e = +1 and g = rest when e = -1
        image = _invert(rest) if rotated[0] > 0 else rest
        image_inv = _invert(image)
        new_rels = []
        for r in rels:
            out = []
            for x in r:
                if x == g:
                    out.extend(image)
                elif x == -g:
                    out.extend(image_inv)
                else:
                    out.append(x)
            new_rels.append(tuple(out))
        rels = tidy(new_rels)
        alive.discard(g)
        moves += 1
        if sum(len(r) for r in rels) > max_length:
            break
    order = sorted(alive)
    renum = {g: i + 1 for i, g in enumerate(order)}
    relators = tuple(
        tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in w) for w in rels
    )
    status = SimplifyStatus.TRIVIALIZED if not order else SimplifyStatus.UNKNOWN
    return GroupPresentation(
        tuple(P.generators[g - 1] for g in order),
        relators,
        P.basepoint,
        status,
        P.moves + moves,
    )


def abelianization(P: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion coefficients of the abelianized group."""
    n = len(P.generators)
    if not P.relators:
        return n, ()
    M = [[0] * n for _ in P.relators]
    for i, w in enumerate(P.relators):
        for x in w:
            M[i][abs(x) - 1] += 1 if x > 0 else -1
    factors, rank = smith_normal_form(M)
    return n - rank, tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class SphereCertificate:
    """Evidence that a closed 3-manifold complex is the 3-sphere.

    ``homology_sphere`` is exact; ``pi1_trivialized`` is best effort under the
    stated budget.  Neither amounts to full recognition.
    """

    homology_sphere: bool
    pi1_trivialized: bool
    budget: int
    moves: int

    @property
    def label(self) -> str:
        if not self.homology_sphere:
            return "not a homology sphere"
        if self.pi1_trivialized:
            return f"homology S3 + pi1 trivialized (budget {self.budget})"
        return f"homology S3, pi1 UNKNOWN (budget {self.budget})"


def sphere_certificate(X: SimplicialComplex, budget: int = 10_000) -> SphereCertificate:
    hs = homology(X).is_homology_sphere()
    P = tietze_simplify(fundamental_group(X), budget)
    return SphereCertificate(hs, P.trivialized, budget, P.moves)
