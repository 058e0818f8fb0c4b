import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contact_tri import generators as g
from contact_tri.algebra import (
    GroupPresentation,
    HomologyProfile,
    SimplifyStatus,
    abelianization,
    boundary_matrices,
    fundamental_group,
    h1_basis,
    h1_class,
    homology,
    smith_normal_form,
    snf_decompose,
    sphere_certificate,
    tietze_simplify,
)
from contact_tri.complex import SimplicialComplex
from contact_tri.errors import Disconnected, NotAClosedPath, TorsionUnsupported


# ---------------------------------------------------------------------------
# independent oracles

def rank_mod(M, p=None):
    """Rank over Q (p is None) or over GF(p) by plain Gaussian elimination."""
    A = [[Fraction(x) if p is None else x % p for x in row] for row in M]
    rank, cols = 0, len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = 1 / A[rank][c] if p is None else pow(A[rank][c], -1, p)
        for r in range(len(A)):
            if r != rank and A[r][c]:
                q = A[r][c] * inv
                A[r] = [(a - q * b) if p is None else (a - q * b) % p for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def det(M):
    M = [[Fraction(x) for x in row] for row in M]
    n, d = len(M), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            q = M[r][c] / M[c][c]
            M[r] = [a - q * b for a, b in zip(M[r], M[c])]
    return int(d)


def determinantal_divisors(M):
    """d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}."""
    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g_ = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g_ = gcd(g_, det([[M[r][c] for c in cols] for r in rows]))
        if g_ == 0:
            break
        out.append(g_)
    return out


def betti_over(X, p=None):
    B = boundary_matrices(X)
    ranks = {k: (rank_mod(B.dense(k), p) if min(B.shape(k)) else 0) for k in range(1, B.top + 1)}
    f = X.f_vector()
    return tuple(f[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(len(f)))


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


# ---------------------------------------------------------------------------
# Smith normal form

@given(matrices)
def test_snf_transforms(M):
    res = snf_decompose(M)
    D = matmul(matmul(res.U, M), res.V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (res.diagonal[i] if i == j and i < res.rank else 0)
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1
    n = len(M[0])
    assert matmul(res.V, res.Vinv) == [[int(i == j) for j in range(n)] for i in range(n)]


@given(matrices)
def test_snf_matches_determinantal_divisors(M):
    factors, rank = smith_normal_form(M)
    dk = determinantal_divisors(M)
    assert rank == len(dk) == rank_mod(M)
    expected = [dk[k] // (dk[k - 1] if k else 1) for k in range(len(dk))]
    assert list(factors) == expected
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


def test_snf_known_example():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ((2, 6, 12), 3)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)


# ---------------------------------------------------------------------------
# homology

def test_boundary_composes_to_zero():
    for name in ("sigma8", "s21_10", "solid_torus_2", "torus10"):
        assert boundary_matrices(g.generate(name).complex).composes_to_zero()


GOLDENS = {
    "s3_5": "(Z, 0, 0, Z)",
    "sigma8": "(Z, 0, 0, Z)",
    "torus7": "(Z, Z^2, Z)",
    "s21_10": "(Z, Z, Z, Z)",
    "solid_torus_1": "(Z, Z, 0, 0)",
    "t4": "(Z, Z, 0, 0)",
    "torus10": "(Z, Z^2, Z)",
}


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_homology_goldens(name):
    assert str(homology(g.generate(name).complex)) == GOLDENS[name]


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_betti_matches_rational_and_mod_p_oracles(name):
    X = g.generate(name).complex
    H = homology(X)
    assert H.betti == betti_over(X)
    # torsion-free complexes have the same Betti numbers over every field
    assert not any(H.torsion)
    assert betti_over(X, 2) == H.betti and betti_over(X, 3) == H.betti


def test_projective_plane_torsion():
    rp2 = SimplicialComplex([
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (2, 4, 6), (3, 5, 6),
    ])
    H = homology(rp2)
    assert str(H) == "(Z, Z_2, 0)"
    # over GF(2) the torsion shows up as extra Betti numbers
    assert betti_over(rp2, 2) == (1, 1, 1)
    assert betti_over(rp2, 3) == (1, 0, 0)
    with pytest.raises(TorsionUnsupported):
        h1_basis(rp2)


def test_profile_json_round_trip():
    H = homology(g.s21_10().complex)
    assert HomologyProfile.from_json(H.to_json()) == H
    assert not H.is_homology_sphere()
    assert homology(g.sigma8().complex).is_homology_sphere()


# ---------------------------------------------------------------------------
# H1 classes

def test_meridians_bound_and_cores_generate():
    for i in (1, 2, 3):
        T = g.solid_torus(i).complex
        assert h1_class(T, g.meridian_loop(i)) == (0,)
        assert abs(h1_class(T, g.core_loop())[0]) >= 1


def test_h1_class_is_additive_on_the_torus():
    X = g.torus7().complex
    B = h1_basis(X)
    loop = [g.u(k) for k in range(8)]
    twice = loop + loop[1:]
    c1 = h1_class(X, loop, B)
    c2 = h1_class(X, twice, B)
    assert c2 == tuple(2 * x for x in c1)
    assert any(c1)


def test_open_path_rejected():
    X = g.torus7().complex
    with pytest.raises(NotAClosedPath):
        h1_class(X, ["u0", "u1", "u2"])


# ---------------------------------------------------------------------------
# fundamental group

def test_pi1_of_spheres_trivializes():
    for name in ("s3_5", "sigma8", "s_12", "s_23"):
        cert = sphere_certificate(g.generate(name).complex)
        assert cert.homology_sphere and cert.pi1_trivialized


def test_pi1_of_torus_survives_with_abelian_rank_two():
    P = tietze_simplify(fundamental_group(g.torus7().complex))
    assert P.status is SimplifyStatus.UNKNOWN
    assert abelianization(P) == (2, ())
    assert P.validate()


def test_presentation_abelianizes_like_h1():
    for name in ("s21_10", "solid_torus_3", "torus10"):
        X = g.generate(name).complex
        P = fundamental_group(X)
        assert abelianization(P)[0] == homology(X).betti[1]


def test_disconnected_rejected():
    X = SimplicialComplex([("a", "b", "c"), ("d", "e", "f")])
    with pytest.raises(Disconnected):
        fundamental_group(X)


def test_trivial_presentation_string():
    P = GroupPresentation((), (), "a", SimplifyStatus.TRIVIALIZED, 0)
    assert P.trivialized
