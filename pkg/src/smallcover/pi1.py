"""Fundamental groups of small covers and of their facial submanifolds.

Generators ``beta_{F,g}`` are indexed by a facet ``F`` missing the anchor
vertex ``v`` and a label ``g`` in ``(Z_2)^n``. Words in them are tuples of
``(BetaGen, ±1)`` letters. The map ``psi`` sends ``beta_{j,g}`` to
``xi_{j,g}`` in the right-angled Coxeter group; it is injective with image
``ker(phi)``, so it decides the word problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from . import gf2
from .charfn import CharFn, InducedCharFn, induced_charfn
from .coxeter import NormalForm, coxeter_group, frame
from .errors import (
    InternalInvariantViolation,
    UnknownGenerator,
    VertexNotInFace,
    WrongDimension,
)
from .polytope import (
    Face,
    SimplePolytope,
    all_faces,
    face_of,
    h_vector,
    three_belts,
    transverse_facets,
)

__all__ = [
    "BetaGen",
    "Presentation",
    "CellCensus",
    "presentation",
    "face_presentation",
    "reduced_presentation",
    "psi",
    "is_identity_in_pi1",
    "is_pi1_injective",
    "facet_injectivity_via_belts",
    "kernel_generators",
    "push_inclusion",
    "all_faces_injective",
    "injective_facet_exists_3d",
    "abelianization_rank_z2",
    "cell_census",
    "search_kernel_witness",
    "word_inverse",
]


class BetaGen(NamedTuple):
    facet: int
    label: int


Letter = tuple  # (BetaGen, +1 | -1)
BWord = tuple   # tuple[Letter, ...]


def word_inverse(w: Sequence[Letter]) -> BWord:
    return tuple((b, -e) for b, e in reversed(w))


def free_reduce(w: Iterable[Letter]) -> BWord:
    out: list[Letter] = []
    for b, e in w:
        if out and out[-1][0] == b and out[-1][1] == -e:
            out.pop()
        else:
            out.append((b, e))
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Finite presentation of ``pi_1`` of a small cover, based at ``anchor``.

    ``relator_kinds[i]`` tags relator ``i`` as ``"involution"``
    (``beta_{j,g} beta_{j,g+lambda_j}``), ``"square"`` (one per 2-cell
    ``D_{F_j ∩ F_j'}``) or ``"anchor"`` (``beta_{j,g} = beta_{j,g+lambda_i}``
    for ``F_i`` through the anchor). Tietze-reduced presentations use
    ``"reduced"``.
    """

    charfn: CharFn
    anchor: frozenset
    generators: tuple[BetaGen, ...]
    relators: tuple[BWord, ...]
    relator_kinds: tuple[str, ...]
    kind: str = "ambient"
    face: Optional[Face] = None
    generator_names: tuple[str, ...] = field(default=())

    @property
    def polytope(self) -> SimplePolytope:
        return self.charfn.polytope

    def name_of(self, b: BetaGen) -> str:
        if self.generator_names:
            return self.generator_names[self.generators.index(b)]
        P = self.polytope
        return f"b[{P.facets[b.facet]},{gf2.to_bits(b.label, self.charfn.n)}]"

    def format_word(self, w: Sequence[Letter]) -> str:
        if not w:
            return "1"
        return " ".join(self.name_of(b) + ("" if e == 1 else "^-1") for b, e in w)

    def psi(self, w: Sequence[Letter]) -> NormalForm:
        return psi(w, self.charfn, self.anchor)


def _check_anchor(lam: CharFn, v) -> frozenset:
    return lam.polytope.vertex(v)


def presentation(lam: CharFn, v) -> Presentation:
    """Simplified cellular presentation of ``pi_1(M, v)``."""
    P = lam.polytope
    v = _check_anchor(lam, v)
    n = lam.n
    labels = range(1 << n)
    off = [F for F in range(P.m) if F not in v]
    gens = tuple(BetaGen(F, g) for F in off for g in labels)
    rels: list[BWord] = []
    kinds: list[str] = []
    for j in off:
        lj = lam.values[j]
        for g in labels:
            if g < g ^ lj:
                rels.append(((BetaGen(j, g), 1), (BetaGen(j, g ^ lj), 1)))
                kinds.append("involution")
    for j, jj in combinations(off, 2):
        if not P.adjacent(j, jj):
            continue
        lj, ljj = lam.values[j], lam.values[jj]
        for g in labels:
            rels.append((
                (BetaGen(j, g), 1),
                (BetaGen(jj, g ^ lj), 1),
                (BetaGen(j, g ^ ljj), -1),
                (BetaGen(jj, g), -1),
            ))
            kinds.append("square")
    for j in off:
        for i in sorted(v):
            if not P.adjacent(i, j):
                continue
            li = lam.values[i]
            for g in labels:
                if g < g ^ li:
                    rels.append(((BetaGen(j, g), 1), (BetaGen(j, g ^ li), -1)))
                    kinds.append("anchor")
    return Presentation(lam, v, gens, tuple(rels), tuple(kinds))


def face_presentation(lam: CharFn, f: Face, v) -> Presentation:
    """Presentation of ``pi_1(M_f, v)`` built on the face polytope.

    Generator facets are face-facet indices; labels are in the coordinates of
    the induced characteristic function (see :func:`induced_charfn`).
    """
    ind = induced_charfn(lam, f, v)
    if ind.charfn.polytope.dim == 0:
        return Presentation(ind.charfn, ind.local_anchor, (), (), (), "face", f)
    pres = presentation(ind.charfn, ind.local_anchor)
    return Presentation(pres.charfn, pres.anchor, pres.generators, pres.relators,
                        pres.relator_kinds, "face", f)


def reduced_presentation(pres: Presentation) -> Presentation:
    """Tietze pass: merge generators identified by anchor relations and the
    involution pairing, then rewrite, free-reduce and deduplicate relators."""
    parent: dict[BetaGen, tuple[BetaGen, int]] = {b: (b, 1) for b in pres.generators}

    def find(b: BetaGen) -> tuple[BetaGen, int]:
        root, sign = b, 1
        while parent[root][0] != root:
            nxt, s = parent[root]
            sign *= s
            root = nxt
        return root, sign

    def union(a: BetaGen, b: BetaGen, sign: int) -> None:
        # record a = b^sign
        ra, sa = find(a)
        rb, sb = find(b)
        if ra == rb:
            return
        if ra < rb:
            parent[rb] = (ra, sa * sign * sb)
        else:
            parent[ra] = (rb, sa * sign * sb)

    for rel, kind in zip(pres.relators, pres.relator_kinds):
        if kind == "involution":
            (a, _), (b, _) = rel
            union(a, b, -1)
        elif kind == "anchor":
            (a, _), (b, _) = rel
            union(a, b, 1)

    def rewrite(w: Sequence[Letter]) -> BWord:
        return free_reduce((find(b)[0], e * find(b)[1]) for b, e in w)

    def canonical(w: BWord) -> BWord:
        # cyclic reduction, then the rotation of the word or its inverse with
        # the fewest inverted letters, ties broken lexicographically
        w = list(w)
        while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
            w = w[1:-1]
        if not w:
            return ()
        cands = []
        for u in (tuple(w), word_inverse(w)):
            for i in range(len(u)):
                cands.append(u[i:] + u[:i])
        return min(cands, key=lambda u: (sum(e == -1 for _, e in u), u))

    gens = tuple(sorted({find(b)[0] for b in pres.generators}))
    seen = set()
    rels = []
    for rel in pres.relators:
        c = canonical(rewrite(rel))
        if c and c not in seen:
            seen.add(c)
            rels.append(c)
    return Presentation(pres.charfn, pres.anchor, gens, tuple(rels),
                        ("reduced",) * len(rels), pres.kind, pres.face)


def _check_word(w: Sequence[Letter], lam: CharFn, v: frozenset) -> None:
    for b, e in w:
        if not isinstance(b, tuple) or len(b) != 2:
            raise UnknownGenerator(f"not a generator: {b!r}")
        F, g = b
        if not 0 <= F < lam.polytope.m or F in v:
            raise UnknownGenerator(f"no generator for facet {F} at anchor {sorted(v)}")
        if not 0 <= g < 1 << lam.n:
            raise UnknownGenerator(f"label {g} out of range")
        if e not in (1, -1):
            raise UnknownGenerator(f"exponent {e} must be ±1")


def psi_word(w: Sequence[Letter], lam: CharFn, v) -> tuple[int, ...]:
    """Unreduced Coxeter word ``prod xi_{j,g}^{±1}``."""
    v = _check_anchor(lam, v)
    _check_word(w, lam, v)
    fr = frame(lam, v)
    out: list[int] = []
    for (F, g), e in w:
        x = fr.xi(F, g)
        out.extend(x if e == 1 else reversed(x))
    return tuple(out)


def psi(w: Sequence[Letter], lam: CharFn, v) -> NormalForm:
    return coxeter_group(lam.polytope).reduce(psi_word(w, lam, v))


def is_identity_in_pi1(w: Sequence[Letter], lam: CharFn, v) -> bool:
    return coxeter_group(lam.polytope).is_identity(psi_word(w, lam, v))


def is_pi1_injective(P: SimplePolytope, f: Face) -> bool:
    """Transverse facets that meet must also meet inside ``f``."""
    return not _violating_pairs(P, f)


def _violating_pairs(P: SimplePolytope, f: Face) -> list[tuple[int, int]]:
    T = sorted(transverse_facets(P, f))
    return [(a, b) for a, b in combinations(T, 2)
            if P.adjacent(a, b) and face_of(P, f.facet_set | {a, b}) is None]


def facet_injectivity_via_belts(P: SimplePolytope, F: int) -> bool:
    return not any(F in belt for belt in three_belts(P))


def kernel_generators(lam: CharFn, f: Face, v) -> list[BWord]:
    """Words normally generating ``ker(pi_1(M_f) -> pi_1(M))``.

    For each pair of transverse facets ``F_j, F_j'`` meeting in ``P`` but not
    in ``f`` this emits
    ``beta_{j,0} beta_{j',a} beta_{j,a+b} beta_{j',b}`` with
    ``a = lambda_f(f∩F_j)`` and ``b = lambda_f(f∩F_j')``, whose image under
    ``psi_f`` is ``(s_j s_j')^2``. A facet through ``v`` has trivial
    generators, so its letters are dropped.
    """
    P = lam.polytope
    v = _check_anchor(lam, v)
    if not f.facet_set <= v:
        raise VertexNotInFace(f"vertex {P.label(v)} is not in face {P.label(f.facet_set)}")
    pairs = _violating_pairs(P, f)
    if not pairs:
        return []
    ind = induced_charfn(lam, f, v)
    vals = ind.charfn.values
    out = []
    for a, b in pairs:
        j, jj = ind.local(a), ind.local(b)
        la, lb = vals[j], vals[jj]
        word = [
            (BetaGen(j, 0), 1),
            (BetaGen(jj, la), 1),
            (BetaGen(j, la ^ lb), 1),
            (BetaGen(jj, lb), 1),
        ]
        out.append(tuple((g, e) for g, e in word if ind.facet_map[g.facet] not in v))
    return out


def push_inclusion(w: Sequence[Letter], ind: InducedCharFn) -> BWord:
    """Image of a face word under the inclusion: ``beta^f_{j,g} -> beta_{j, iota(g)}``."""
    _check_word(w, ind.charfn, ind.local_anchor)
    return tuple((BetaGen(ind.facet_map[F], ind.iota(g)), e) for (F, g), e in w)


def all_faces_injective(P: SimplePolytope) -> bool:
    return all(is_pi1_injective(P, f) for f in all_faces(P))


def injective_facet_exists_3d(P: SimplePolytope) -> int:
    """A facet lying in no 3-belt; one always exists for a simple 3-polytope."""
    if P.dim != 3:
        raise WrongDimension(f"expected a 3-polytope, got dimension {P.dim}")
    in_belt = {F for belt in three_belts(P) for F in belt}
    for F in range(P.m):
        if F not in in_belt:
            return F
    raise InternalInvariantViolation(f"every facet of {P.name} lies in a 3-belt")


def abelianization_rank_z2(pres: Presentation) -> int:
    """Dimension of ``H_1(-; Z_2)``: generators minus the GF(2) rank of relators."""
    pos = {b: i for i, b in enumerate(pres.generators)}
    rows = []
    for rel in pres.relators:
        r = 0
        for b, _ in rel:
            r ^= 1 << pos[b]
        rows.append(r)
    return len(pres.generators) - gf2.rank(rows)


@dataclass(frozen=True)
class CellCensus:
    counts: tuple[int, ...]   # counts[d] = number of open d-cells
    euler: int


def cell_census(lam: CharFn, v) -> CellCensus:
    """Cells of the decomposition with the single 0-cell ``v``.

    A face ``f`` missing ``v`` contributes ``2^dim(f)`` cells of dimension
    ``n - dim(f)``; faces through ``v`` collapse into the 0-cell.
    """
    P = lam.polytope
    v = _check_anchor(lam, v)
    counts = [0] * (P.dim + 1)
    counts[0] = 1
    for f in all_faces(P):
        if not f.facet_set <= v:
            counts[P.dim - f.dim] += 1 << f.dim
    euler = sum((-1) ** d * c for d, c in enumerate(counts))
    return CellCensus(tuple(counts), euler)


def euler_from_h_vector(P: SimplePolytope) -> int:
    return sum((-1) ** i * h for i, h in enumerate(h_vector(P)))


def search_kernel_witness(lam: CharFn, f: Face, v, max_length: int = 6) -> Optional[BWord]:
    """Shortest-first search for a face word ``x`` of length ``<= max_length``
    with ``psi_f(x) != 1`` and ``psi(push(x)) == 1``.

    Every such word splits as ``a · c`` with ``|a| <= ceil(L/2)`` and
    ``|c| <= floor(L/2)``, and it is a witness exactly when ``a`` and
    ``c^-1`` are distinct in ``pi_1(M_f)`` but have equal images in ``W_P``.
    So it suffices to enumerate the balls of those radii, deduplicated by the
    ``psi_f`` normal form, and look for collisions of ambient images. Returns
    ``None`` if no witness exists up to that length.
    """
    P = lam.polytope
    v = _check_anchor(lam, v)
    if not f.facet_set <= v:
        raise VertexNotInFace(f"vertex {P.label(v)} is not in face {P.label(f.facet_set)}")
    ind = induced_charfn(lam, f, v)
    if ind.charfn.polytope.dim == 0:
        return None
    fpres = face_presentation(lam, f, v)
    Wf = coxeter_group(ind.charfn.polytope)
    W = coxeter_group(P)
    ffr = frame(ind.charfn, ind.local_anchor)
    afr = frame(lam, v)

    letters = []
    for b in fpres.generators:
        for e in (1, -1):
            xf = ffr.xi(b.facet, b.label)
            xa = afr.xi(ind.facet_map[b.facet], ind.iota(b.label))
            if e == -1:
                xf, xa = xf[::-1], xa[::-1]
            letters.append(((b, e), xf, xa))

    # ball: face normal form -> (word, reduced face word, reduced ambient word)
    ball = {NormalForm(()): ((), (), ())}
    layer = dict(ball)
    radius = (max_length + 1) // 2
    for _ in range(radius):
        nxt = {}
        for word, rf, ra in layer.values():
            for letter, xf, xa in letters:
                nf = Wf.reduced_word(rf + xf)
                key = Wf.foata(nf)
                if key in ball or key in nxt:
                    continue
                nxt[key] = (word + (letter,), nf, W.reduced_word(ra + xa))
        ball.update(nxt)
        layer = nxt

    # ambient image -> list of (face key, word); elements sorted by length
    by_image: dict = {}
    for key, (word, _, ra) in sorted(ball.items(), key=lambda kv: len(kv[1][0])):
        by_image.setdefault(W.foata(ra), []).append((key, word))
    best: Optional[BWord] = None
    for items in by_image.values():
        for (k1, w1), (k2, w2) in combinations(items, 2):
            if k1 != k2 and len(w1) + len(w2) <= max_length:
                cand = w1 + word_inverse(w2)
                if best is None or len(cand) < len(best):
                    best = cand
    return best
