import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contact_tri import generators as g
from contact_tri.complex import SimplicialComplex, canonical_face
from contact_tri.errors import TooLarge
from contact_tri.symmetry import (
    all_automorphisms,
    automorphism_group,
    cycle_notation,
    find_isomorphism,
    group_from_generators,
    orbits,
    verify_automorphisms,
)


def brute_force_order(X):
    """Count facet-preserving vertex permutations by trying all of them."""
    verts = X.vertices
    facets = X._facet_set
    count = 0
    for perm in itertools.permutations(verts):
        m = dict(zip(verts, perm))
        if all(canonical_face(m[v] for v in f) in facets for f in X.facets):
            count += 1
    return count


@pytest.mark.parametrize("name,order", [("s3_5", 120), ("torus7", 42), ("s_12", None)])
def test_order_matches_brute_force(name, order):
    X = g.generate(name).complex
    G = automorphism_group(X)
    assert G.order == G.enumerated == brute_force_order(X)
    if order is not None:
        assert G.order == order


def test_sigma8_group():
    X = g.sigma8().complex
    G = automorphism_group(X)
    assert G.order == 384 == G.enumerated
    assert len(orbits(G, X.faces(1))) == 1
    assert len(orbits(G, X.faces(2))) == 1
    assert len(G.elements()) == 384


def test_s21_10_group_is_generated_by_three_maps():
    X = g.s21_10().complex
    sym = g.s21_10_symmetries()
    assert verify_automorphisms(X, sym.values()) == [True, True, True]
    assert group_from_generators(X.vertices, sym.values()).order == automorphism_group(X).order == 20


def test_gamma_swaps_the_solid_tori():
    iso = find_isomorphism(g.t4().complex, g.t5().complex)
    assert iso is not None
    T5 = g.t5().complex._facet_set
    assert all(canonical_face(iso[v] for v in f) in T5 for f in g.t4().complex.facets)


def test_non_isomorphic():
    assert find_isomorphism(g.sigma8().complex, g.s_ij(1, 2).complex) is None
    assert find_isomorphism(g.solid_torus(1).complex, g.torus7().complex) is None


def test_non_automorphism_rejected():
    X = g.s21_10().complex
    assert verify_automorphisms(X, [{"v0": "v1", "v1": "v0"}]) == [False]
    assert verify_automorphisms(X, [{"v0": "v1"}]) == [False]


def test_size_guard():
    from contact_tri.cubes import t3_40

    X = t3_40().complex
    with pytest.raises(TooLarge):
        automorphism_group(X)


def test_cycle_notation():
    assert cycle_notation({"a": "b", "b": "a", "c": "c"}) == "(a b)"
    assert cycle_notation({}) == "()"


@given(st.permutations([g.v(i) for i in range(10)]))
def test_conjugated_complex_is_isomorphic(perm):
    X = g.s21_10().complex
    m = dict(zip(X.vertices, perm))
    Y = X.relabel(m)
    iso = find_isomorphism(X, Y)
    assert iso is not None
    assert {canonical_face(iso[v] for v in f) for f in X.facets} == Y._facet_set


def test_enumeration_closed_under_composition():
    X = g.torus7().complex
    autos = all_automorphisms(X)
    keys = {tuple(a[v] for v in X.vertices) for a in autos}
    for a, b in itertools.islice(itertools.product(autos, autos), 200):
        c = {v: b[a[v]] for v in X.vertices}
        assert tuple(c[v] for v in X.vertices) in keys
