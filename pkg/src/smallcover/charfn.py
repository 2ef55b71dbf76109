"""Characteristic functions over GF(2) and the data they induce on faces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from . import gf2
from .errors import (
    DegenerateCharFn,
    VertexNotInFace,
    WrongDimension,
    WrongLength,
    ZeroValue,
)
from .polytope import Face, SimplePolytope, restrict

__all__ = [
    "CharFn",
    "Subgroup",
    "InducedCharFn",
    "is_nondegenerate",
    "make_charfn",
    "subgroup_G",
    "induced_charfn",
    "find_charfn",
    "is_orientable_3d",
    "orientation_functionals",
    "betti1_z2",
]

Value = Union[int, str]


@dataclass(frozen=True)
class CharFn:
    polytope: SimplePolytope
    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.polytope.dim

    def __call__(self, facet: int) -> int:
        return self.values[facet]

    def bits(self, facet: int) -> str:
        return gf2.to_bits(self.values[facet], self.n)

    def at(self, vertex) -> list[int]:
        """Values on the facets at ``vertex``, in facet-index order."""
        return [self.values[F] for F in sorted(self.polytope.vertex(vertex))]


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``(Z_2)^n`` held as its reduced echelon basis."""

    basis: tuple[int, ...]
    n: int

    @classmethod
    def spanned_by(cls, vectors: Iterable[int], n: int) -> "Subgroup":
        return cls(gf2.rref(vectors), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v: int) -> bool:
        return gf2.in_span(v, self.basis)

    def elements(self) -> list[int]:
        return gf2.span(self.basis)


def _coerce(values: Sequence[Value], n: int) -> tuple[int, ...]:
    out = []
    for x in values:
        if isinstance(x, str):
            if len(x) != n:
                raise WrongLength(f"bit string {x!r} has length {len(x)}, expected {n}")
            try:
                v = gf2.from_bits(x)
            except ValueError as exc:
                raise WrongLength(str(exc)) from None
        else:
            v = int(x)
            if not 0 <= v < 1 << n:
                raise WrongLength(f"value {v} does not fit in {n} bits")
        if v == 0:
            raise ZeroValue("characteristic function takes the value 0")
        out.append(v)
    return tuple(out)


def is_nondegenerate(P: SimplePolytope, values: Sequence[Value]) -> bool:
    """Whether the values at every vertex form a basis of ``(Z_2)^n``.

    Raises :class:`WrongLength` or :class:`ZeroValue` on malformed input.
    """
    if len(values) != P.m:
        raise WrongLength(f"{len(values)} values for {P.m} facets")
    vals = _coerce(values, P.dim)
    return all(gf2.rank(vals[F] for F in v) == P.dim for v in P.vertices)


def make_charfn(P: SimplePolytope, values: Sequence[Value]) -> CharFn:
    if not is_nondegenerate(P, values):
        bad = next(v for v in P.vertices
                   if gf2.rank(_coerce([values[F] for F in v], P.dim)) != P.dim)
        raise DegenerateCharFn(f"values at vertex {P.label(bad)} are not a basis")
    return CharFn(P, _coerce(values, P.dim))


def subgroup_G(lam: CharFn, f: Face) -> Subgroup:
    """Span of the values on the facets containing ``f`` (trivial for P)."""
    return Subgroup.spanned_by((lam.values[F] for F in f.facet_set), lam.n)


@dataclass(frozen=True)
class InducedCharFn:
    """Characteristic function of a face, anchored at a vertex of that face.

    The facets of ``charfn.polytope`` are ``f ∩ F`` for ``F`` in
    ``facet_map``. Its values live in ``(Z_2)^dim(f)`` with ``e_i`` assigned
    to the ``i``-th facet through the anchor transverse to ``f`` (ambient
    index order). ``embedding[i]`` is the ambient value of that facet, so
    ``iota`` identifies ``(Z_2)^dim(f)`` with their span.
    """

    ambient: CharFn
    face: Face
    anchor: frozenset            # ambient vertex
    charfn: CharFn               # on the face polytope
    facet_map: tuple[int, ...]   # face facet -> ambient facet
    embedding: tuple[int, ...]   # image of e_i under iota
    discrepancy: dict            # ambient facet F -> iota(lambda_f(f∩F)) - lambda(F)

    @property
    def local_anchor(self) -> frozenset:
        inv = {F: q for q, F in enumerate(self.facet_map)}
        return frozenset(inv[F] for F in self.anchor - self.face.facet_set)

    def iota(self, g: int) -> int:
        out = 0
        for i, e in enumerate(self.embedding):
            if (g >> i) & 1:
                out ^= e
        return out

    def local(self, F: int) -> int:
        """Face-facet index of ``f ∩ F``."""
        return self.facet_map.index(F)


def induced_charfn(lam: CharFn, f: Face, v) -> InducedCharFn:
    P = lam.polytope
    v = P.vertex(v)
    if not f.facet_set <= v:
        raise VertexNotInFace(f"vertex {P.label(v)} is not in face {P.label(f.facet_set)}")
    Q, facet_map = restrict(P, f)
    at_v = sorted(v)
    basis = [lam.values[F] for F in at_v]
    transverse_at_v = [F for F in at_v if F not in f.facet_set]
    pos = {F: i for i, F in enumerate(at_v)}
    embedding = tuple(lam.values[F] for F in transverse_at_v)
    values = []
    discrepancy = {}
    for F in facet_map:
        c = gf2.coordinates(lam.values[F], basis)
        # keep only the coordinates along transverse facets at v
        local = 0
        for i, T in enumerate(transverse_at_v):
            if (c >> pos[T]) & 1:
                local |= 1 << i
        values.append(local)
        image = 0
        for i, e in enumerate(embedding):
            if (local >> i) & 1:
                image ^= e
        discrepancy[F] = image ^ lam.values[F]
    charfn = make_charfn(Q, values) if Q.dim > 0 else CharFn(Q, ())
    return InducedCharFn(lam, f, v, charfn, facet_map, embedding, discrepancy)


def find_charfn(P: SimplePolytope) -> Optional[CharFn]:
    """Backtracking search in facet order, trying vectors in increasing order."""
    n = P.dim
    at = [[v for v in P.vertices if F in v] for F in range(P.m)]
    vals: list[int] = [0] * P.m

    def ok(F: int) -> bool:
        for v in at[F]:
            assigned = [vals[G] for G in v if G <= F]
            if gf2.rank(assigned) != len(assigned):
                return False
        return True

    def search(F: int) -> bool:
        if F == P.m:
            return True
        for x in range(1, 1 << n):
            vals[F] = x
            if ok(F) and search(F + 1):
                return True
        vals[F] = 0
        return False

    if not search(0):
        return None
    return make_charfn(P, vals)


def orientation_functionals(lam: CharFn) -> list[int]:
    """Nonzero functionals ``eps`` with ``eps(lambda(F)) == 1`` for every facet."""
    return [eps for eps in range(1, 1 << lam.n)
            if all(gf2.parity(eps & x) for x in lam.values)]


def is_orientable_3d(lam: CharFn) -> bool:
    if lam.n != 3:
        raise WrongDimension(f"orientability test is for dimension 3, got {lam.n}")
    return bool(orientation_functionals(lam))


def betti1_z2(P: SimplePolytope) -> int:
    return P.m - P.dim
