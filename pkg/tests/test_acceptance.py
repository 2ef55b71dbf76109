"""Acceptance suite: one test per criterion, numbered 1 to 12.

A pass/fail line per criterion is printed at the end of the run (see the
terminal summary hook in ``conftest.py``).
"""

from __future__ import annotations

import random
import time

import pytest

from smallcover.charfn import induced_charfn, make_charfn
from smallcover.coxeter import coxeter_group, frame, phi
from smallcover.dim3 import (
    classify_curvature,
    random_vertex_cuts,
    rz_count_recurrence,
    rz_face_preimage_components,
    rz_profile,
)
from smallcover.document import FIXTURES, load_fixture
from smallcover.pi1 import (
    abelianization_rank_z2,
    all_faces_injective,
    cell_census,
    euler_from_h_vector,
    facet_injectivity_via_belts,
    injective_facet_exists_3d,
    is_pi1_injective,
    kernel_generators,
    presentation,
    psi,
    push_inclusion,
    reduced_presentation,
    search_kernel_witness,
)
from smallcover.polytope import all_faces, is_flag, transverse_facets

THREE_DIM = ("simplex3", "cube", "prism", "vc2", "vc3", "pentagonal-prism")

pytestmark = pytest.mark.acceptance


@pytest.fixture(scope="module")
def fx():
    return {name: load_fixture(name) for name in FIXTURES}


def random_polytopes(fx, count, seed):
    rng = random.Random(seed)
    starts = [fx["simplex3"].polytope, fx["cube"].polytope]
    return [random_vertex_cuts(starts[i % 2], rng.randint(0, 5), rng) for i in range(count)]


def test_criterion_01_injectivity_matches_belts(fx):
    start = time.perf_counter()
    for name in THREE_DIM:
        P = fx[name].polytope
        for F in range(P.m):
            assert is_pi1_injective(P, P.face([P.facets[F]])) == facet_injectivity_via_belts(P, F)
    P = fx["prism"].polytope
    assert is_pi1_injective(P, P.face(["T0"]))
    for q in ("Q1", "Q2", "Q3"):
        assert not is_pi1_injective(P, P.face(["T0", q]))
    assert time.perf_counter() - start < 1.0


def test_criterion_02_witness_soundness(fx):
    start = time.perf_counter()
    for name in FIXTURES:
        lam = fx[name].charfn
        P = lam.polytope
        for f in all_faces(P):
            v = P.vertices_of(f)[0]
            words = kernel_generators(lam, f, v)
            if is_pi1_injective(P, f):
                assert words == []
                assert search_kernel_witness(lam, f, v, max_length=6) is None
                continue
            assert words
            ind = induced_charfn(lam, f, v)
            for x in words:
                assert not psi(x, ind.charfn, ind.local_anchor).is_identity
                assert psi(push_inclusion(x, ind), lam, v).is_identity
    assert time.perf_counter() - start < 10.0


def test_criterion_03_psi_soundness(fx):
    start = time.perf_counter()
    rng = random.Random(3)
    for name in FIXTURES:
        lam = fx[name].charfn
        P = lam.polytope
        W = coxeter_group(P)
        for v in P.vertices:
            pres = presentation(lam, v)
            assert all(pres.psi(r).is_identity for r in pres.relators)
        v = P.vertices[0]
        gens = presentation(lam, v).generators
        for _ in range(1000):
            w = tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, 8)))
            assert phi(psi(w, lam, v).word, lam) == 0
        fr = frame(lam, v)
        labels = range(1 << lam.n)
        for j in range(P.m):
            if j in v:
                continue
            lj = lam.values[j]
            for g in labels:
                x = fr.xi(j, g)
                assert W.equal(fr.gamma(g) + (j,), x + fr.gamma(g ^ lj))          # (ii)
                assert W.is_identity(x + fr.xi(j, g ^ lj))                         # (iii)
                for i in range(P.m):
                    if i == j or not P.adjacent(i, j):
                        continue
                    li = lam.values[i]
                    if i in v:
                        assert W.equal(x, fr.xi(j, g ^ li))                        # (v)
                    else:
                        assert W.equal(x + fr.xi(i, g ^ lj), fr.xi(i, g) + fr.xi(j, g ^ li))  # (iv)
    assert time.perf_counter() - start < 10.0


def test_criterion_04_small_groups(fx):
    lam = fx["interval"].charfn
    pres = presentation(lam, lam.polytope.vertices[0])
    assert abelianization_rank_z2(pres) == 1
    red = reduced_presentation(pres)
    # one generator and no relator: the integers
    assert len(red.generators) == 1 and red.relators == ()
    lam = fx["triangle"].charfn
    v = lam.polytope.vertices[0]
    red = reduced_presentation(presentation(lam, v))
    assert len(red.generators) == 1
    b = red.generators[0]
    assert red.relators == (((b, 1), (b, 1)),)
    assert not psi(((b, 1),), lam, v).is_identity
    assert psi(((b, 1), (b, 1)), lam, v).is_identity


def test_criterion_05_first_betti_number(fx):
    for name in FIXTURES:
        lam = fx[name].charfn
        P = lam.polytope
        assert abelianization_rank_z2(presentation(lam, P.vertices[0])) == P.m - P.dim


def test_criterion_06_cell_census(fx):
    for name in FIXTURES:
        lam = fx[name].charfn
        P = lam.polytope
        for v in P.vertices:
            chi = cell_census(lam, v).euler
            if P.dim == 3:
                assert chi == 0
            if P.dim == 2:
                assert chi == euler_from_h_vector(P)


def test_criterion_07_asphericity_equivalence(fx):
    polys = [fx[name].polytope for name in FIXTURES] + random_polytopes(fx, 50, 7)
    for P in polys:
        assert all_faces_injective(P) == is_flag(P)


def test_criterion_08_injective_facet_exists(fx):
    polys = [fx[name].polytope for name in THREE_DIM] + random_polytopes(fx, 100, 8)
    for P in polys:
        F = injective_facet_exists_3d(P)
        assert is_pi1_injective(P, P.face([P.facets[F]]))


def test_criterion_09_real_moment_angle_numbers(fx):
    counts = [rz_profile(fx[name].polytope).count for name in ("prism", "vc2", "vc3")]
    assert counts == [1, 5, 17]
    for k in range(1, 11):
        assert rz_count_recurrence(k) == (k - 1) * 2 ** k + 1
    rng = random.Random(9)
    sampled = 0
    for P in random_polytopes(fx, 20, 9):
        f = rng.choice([f for f in all_faces(P) if f.dim > 0])
        l = len(transverse_facets(P, f))
        assert rz_face_preimage_components(P, f) == 2 ** (P.m + f.dim - P.dim - l)
        sampled += 1
    assert sampled == 20


def test_criterion_10_curvature_classification(fx):
    c = classify_curvature(fx["simplex3"].polytope)
    assert c.positive_scalar and c.positive_ricci_sectional
    c = classify_curvature(fx["prism"].polytope)
    assert c.positive_scalar and c.nonneg_ricci_sectional and not c.flat
    c = classify_curvature(fx["cube"].polytope)
    assert c.flat and c.nonneg_scalar and not c.positive_scalar
    c = classify_curvature(fx["pentagonal-prism"].polytope)
    assert not c.nonneg_scalar and not c.positive_scalar


def test_criterion_11_coxeter_engine(fx):
    rng = random.Random(11)
    for name in FIXTURES:
        P = fx[name].polytope
        W = coxeter_group(P)
        for _ in range(10_000):
            w = [rng.randrange(P.m) for _ in range(rng.randint(0, 12))]
            assert W.reduce_randomized(w, rng) == W.reduce(w)
        for a in range(P.m):
            for b in range(P.m):
                if a != b:
                    assert W.is_identity((a, b, a, b)) == P.adjacent(a, b)


SECOND_COLORINGS = {
    "prism": ["100", "010", "111", "001", "001"],
    "cube": ["100", "110", "010", "010", "001", "001"],
}


@pytest.mark.parametrize("name", sorted(SECOND_COLORINGS))
def test_criterion_12_coloring_independence(fx, name):
    first = fx[name].charfn
    P = first.polytope
    second = make_charfn(P, SECOND_COLORINGS[name])
    assert second.values != first.values
    for f in all_faces(P):
        v = P.vertices_of(f)[0]
        verdicts = [search_kernel_witness(lam, f, v, max_length=4) is None
                    and not kernel_generators(lam, f, v) for lam in (first, second)]
        assert verdicts[0] == verdicts[1] == is_pi1_injective(P, f)
