from __future__ import annotations

from itertools import product

import pytest

from conftest import THREE_DIM
from smallcover.charfn import find_charfn, is_orientable_3d, make_charfn
from smallcover.dim3 import (
    classify_curvature,
    is_cube,
    orientable_small_cover_summary,
    random_vertex_cuts,
    recognize_vck_simplex,
    rz_count_recurrence,
    rz_face_preimage_components,
    rz_profile,
    rz_vertex_cut_decomposition,
    shrink_triangle,
    triangular_facets,
    vertex_cut,
)
from smallcover.errors import NotATriangle, NotOrientable, WrongDimension
from smallcover.polytope import all_faces, f_vector, is_flag, is_isomorphic, restrict


def test_cutting_the_simplex_gives_the_prism(docs):
    simplex = docs["simplex3"].polytope
    for v in simplex.vertices:
        cut = vertex_cut(simplex, v)
        assert is_isomorphic(cut, docs["prism"].polytope)
        assert cut.m == simplex.m + 1
        assert len(cut.vertices) == len(simplex.vertices) + 2
        assert cut.facets[-1] == "C1"


def test_cut_names_avoid_collisions(docs):
    vc2 = docs["vc2"].polytope
    assert vertex_cut(vc2, vc2.vertices[0]).facets[-1] == "C2"
    assert vertex_cut(vc2, vc2.vertices[0], "new").facets[-1] == "new"


def test_shrinking(docs):
    prism = docs["prism"].polytope
    assert is_isomorphic(shrink_triangle(prism, prism.index["T0"]), docs["simplex3"].polytope)
    simplex = docs["simplex3"].polytope
    assert all(shrink_triangle(simplex, F) is None for F in range(4))
    with pytest.raises(NotATriangle):
        shrink_triangle(prism, prism.index["Q1"])
    with pytest.raises(WrongDimension):
        shrink_triangle(docs["triangle"].polytope, 0)


def test_shrink_then_cut_round_trip(docs, rng):
    for name in THREE_DIM:
        P = docs[name].polytope
        for v in P.vertices:
            cut = vertex_cut(P, v)
            assert is_isomorphic(shrink_triangle(cut, cut.m - 1), P)
    for _ in range(10):
        P = random_vertex_cuts(docs["cube"].polytope, rng.randint(1, 4), rng)
        assert is_isomorphic(shrink_triangle(vertex_cut(P, P.vertices[0]), P.m), P)


def test_recognition(docs, rng):
    assert recognize_vck_simplex(docs["simplex3"].polytope) == 0
    assert recognize_vck_simplex(docs["prism"].polytope) == 1
    assert recognize_vck_simplex(docs["vc2"].polytope) == 2
    assert recognize_vck_simplex(docs["vc3"].polytope) == 3
    assert recognize_vck_simplex(docs["cube"].polytope) is None
    assert recognize_vck_simplex(docs["pentagonal-prism"].polytope) is None
    for k in range(7):
        P = random_vertex_cuts(docs["simplex3"].polytope, k, rng)
        assert recognize_vck_simplex(P) == k
    # a cut cube has a triangle but is not a cut simplex
    P = random_vertex_cuts(docs["cube"].polytope, 2, rng)
    assert triangular_facets(P) and recognize_vck_simplex(P) is None


def test_cube_recognition(docs):
    assert is_cube(docs["cube"].polytope)
    assert not is_cube(docs["prism"].polytope)
    assert not is_cube(docs["pentagonal-prism"].polytope)
    # vc2 has the cube's f-vector but two triangles
    assert f_vector(docs["vc2"].polytope) == f_vector(docs["cube"].polytope)
    assert not is_cube(docs["vc2"].polytope)
    with pytest.raises(WrongDimension):
        is_cube(docs["square"].polytope)


def test_cut_simplices_are_never_flag(docs, rng):
    for k in range(6):
        assert not is_flag(random_vertex_cuts(docs["simplex3"].polytope, k, rng))


def test_curvature_table(docs):
    c = classify_curvature(docs["simplex3"].polytope)
    assert (c.positive_scalar, c.nonneg_scalar, c.nonneg_ricci_sectional,
            c.positive_ricci_sectional, c.flat) == (True, True, True, True, False)
    c = classify_curvature(docs["prism"].polytope)
    assert c.positive_scalar and c.nonneg_ricci_sectional and not c.positive_ricci_sectional
    assert not c.flat
    c = classify_curvature(docs["vc2"].polytope)
    assert c.positive_scalar and not c.nonneg_ricci_sectional
    c = classify_curvature(docs["cube"].polytope)
    assert c.flat and c.nonneg_scalar and c.nonneg_ricci_sectional and not c.positive_scalar
    c = classify_curvature(docs["pentagonal-prism"].polytope)
    assert not any(vars(c).values())


def test_curvature_coherence(docs, rng):
    for start in ("simplex3", "cube"):
        for _ in range(10):
            c = classify_curvature(random_vertex_cuts(docs[start].polytope, rng.randint(0, 3), rng))
            assert not c.positive_scalar or c.nonneg_scalar
            if c.nonneg_scalar:
                assert c.flat != c.positive_scalar
            assert not c.positive_ricci_sectional or c.nonneg_ricci_sectional


def test_rz_profiles(docs):
    assert rz_profile(docs["cube"].polytope).kind == "torus"
    assert rz_profile(docs["simplex3"].polytope).kind == "sphere"
    assert rz_profile(docs["pentagonal-prism"].polytope).kind == "other"
    counts = [rz_profile(docs[n].polytope).count for n in ("prism", "vc2", "vc3")]
    assert counts == [1, 5, 17]
    assert rz_profile(docs["prism"].polytope).describe() == "connected sum of 1 copy of S2xS1"


def test_rz_closed_form_matches_recurrence():
    for k in range(1, 11):
        assert rz_count_recurrence(k) == (k - 1) * 2 ** k + 1
    assert [rz_vertex_cut_decomposition(m) for m in (4, 5, 6)] == [(2, 1), (2, 3), (2, 7)]
    with pytest.raises(ValueError):
        rz_vertex_cut_decomposition(3)


def brute_components(P, f):
    """Components of the preimage of ``f`` in the real moment-angle manifold.

    Sheets are indexed by ``(Z_2)^m``. Two sheets share the part over ``f``
    when they differ by generators of facets containing ``f``; the part over
    ``f`` is connected inside a sheet class across the facets transverse to
    ``f`` as well. Count classes by union-find.
    """
    parent = list(range(1 << P.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = list(f.facet_set) + [F for F in range(P.m)
                                if F not in f.facet_set and (f.facet_set | {F}) in P.face_sets]
    for x in range(1 << P.m):
        for F in gens:
            a, b = find(x), find(x ^ (1 << F))
            if a != b:
                parent[a] = b
    return len({find(x) for x in range(1 << P.m)})


@pytest.mark.parametrize("name", THREE_DIM)
def test_rz_face_components(docs, name):
    P = docs[name].polytope
    for f in all_faces(P):
        if f.dim == 0:
            continue
        Q, _ = restrict(P, f)
        assert rz_face_preimage_components(P, f) == brute_components(P, f)
        assert rz_face_preimage_components(P, f) == 2 ** (P.m + f.dim - P.dim - Q.m)


def test_rz_face_examples(docs):
    cube, simplex, prism = (docs[n].polytope for n in ("cube", "simplex3", "prism"))
    assert rz_face_preimage_components(cube, cube.face(["x+"])) == 2
    assert rz_face_preimage_components(simplex, simplex.face(["F1"])) == 1
    assert rz_face_preimage_components(prism, prism.face(["T0", "Q1"])) == 2


def test_orientable_summaries(docs):
    assert orientable_small_cover_summary(docs["cube"].charfn) == "orientable real Bott manifold"
    assert orientable_small_cover_summary(docs["simplex3"].charfn).startswith(
        "connected sum of 1 copy of RP3")
    prism = docs["prism"].polytope
    # an orientable coloring of the prism: every value has odd weight
    lam = make_charfn(prism, ["100", "010", "111", "001", "001"])
    assert is_orientable_3d(lam)
    assert orientable_small_cover_summary(lam).startswith("connected sum of 2 copies of RP3")
    with pytest.raises(NotOrientable):
        orientable_small_cover_summary(docs["prism"].charfn)
    with pytest.raises(WrongDimension):
        orientable_small_cover_summary(docs["square"].charfn)


def test_every_cut_simplex_has_an_orientable_coloring(docs, rng):
    for k in range(4):
        P = random_vertex_cuts(docs["simplex3"].polytope, k, rng)
        odd = [x for x in range(1, 8) if bin(x).count("1") % 2]
        found = None
        for vals in product(odd, repeat=P.m):
            try:
                found = make_charfn(P, list(vals))
                break
            except ValueError:
                continue
        assert found is not None and is_orientable_3d(found)
        assert find_charfn(P) is not None
