"""Combinatorial simple polytopes.

A simple ``n``-polytope is stored as its facet names plus, for every vertex,
the set of (indices of) the ``n`` facets containing it. Every face is the
intersection of the facets containing it, so a face is identified with that
facet set. In a simple polytope a set ``S`` of facets has nonempty
intersection exactly when ``S`` is contained in the facet set of some vertex:
every nonempty face contains a vertex, and a vertex lies on exactly the
facets listed for it. This subset-of-a-vertex test is used everywhere below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import (
    DisconnectedRidgeGraph,
    DuplicateVertex,
    InvalidVertex,
    NonSimpleVertex,
    NotAFace,
    UnknownFacet,
    UnusedFacet,
)

__all__ = [
    "SimplePolytope",
    "Face",
    "SimplicialComplex",
    "validate",
    "face_of",
    "faces",
    "transverse_facets",
    "three_belts",
    "is_flag",
    "is_flag_direct",
    "link",
    "dual_complex",
    "f_vector",
    "h_vector",
    "restrict",
    "is_isomorphic",
]

FacetSet = frozenset  # frozenset[int]


@dataclass(frozen=True)
class Face:
    facet_set: frozenset
    dim: int

    @property
    def codim(self) -> int:
        return len(self.facet_set)

    def contains_vertex(self, vertex: frozenset) -> bool:
        return self.facet_set <= vertex


@dataclass(frozen=True)
class SimplePolytope:
    """Immutable simple polytope; build instances through :func:`validate`."""

    name: str
    dim: int
    facets: tuple[str, ...]
    vertices: tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.facets)

    @cached_property
    def face_sets(self) -> frozenset:
        """Facet sets of all nonempty faces, including ``frozenset()`` for P."""
        out = set()
        for v in self.vertices:
            items = sorted(v)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return frozenset(out)

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """``adjacency[i]`` is the bitmask of facets meeting facet ``i``."""
        masks = [0] * self.m
        for v in self.vertices:
            for a in v:
                for b in v:
                    if a != b:
                        masks[a] |= 1 << b
        return tuple(masks)

    @cached_property
    def index(self) -> dict:
        return {name: i for i, name in enumerate(self.facets)}

    def adjacent(self, a: int, b: int) -> bool:
        return a != b and bool((self.adjacency[a] >> b) & 1)

    def is_face(self, facet_set: Iterable[int]) -> bool:
        return frozenset(facet_set) in self.face_sets

    def facet_ids(self, names: Iterable[str]) -> frozenset:
        try:
            return frozenset(self.index[x] for x in names)
        except KeyError as exc:
            raise UnknownFacet(f"no facet named {exc.args[0]!r} in {self.name}") from None

    def face(self, names: Iterable[str]) -> Face:
        """Face spanned by the named facets; raises :class:`NotAFace`."""
        ids = self.facet_ids(names)
        f = face_of(self, ids)
        if f is None:
            raise NotAFace(f"facets {sorted(names)} have empty intersection")
        return f

    def vertex(self, v) -> frozenset:
        """Normalize a vertex given as an index, a facet-index set or a Face."""
        if isinstance(v, Face):
            v = v.facet_set
        if isinstance(v, int):
            if not 0 <= v < len(self.vertices):
                raise InvalidVertex(f"vertex index {v} out of range")
            return self.vertices[v]
        v = frozenset(v)
        if v not in self.vertex_set:
            raise InvalidVertex(f"{sorted(v)} is not a vertex of {self.name}")
        return v

    def vertices_of(self, f: Face) -> list[frozenset]:
        return [v for v in self.vertices if f.facet_set <= v]

    def names(self, facet_set: Iterable[int]) -> list[str]:
        return [self.facets[i] for i in sorted(facet_set)]

    def label(self, facet_set: Iterable[int]) -> str:
        return "{" + ",".join(self.names(facet_set)) + "}"


def validate(name: str, dim: int, facets: Sequence[str],
             vertices: Iterable[Iterable]) -> SimplePolytope:
    """Check incidence data and return a :class:`SimplePolytope`.

    ``vertices`` lists, per vertex, the facets containing it, either by name
    or by index.
    """
    facets = tuple(str(x) for x in facets)
    if len(set(facets)) != len(facets):
        raise UnknownFacet(f"duplicate facet names in {name}")
    if dim < 0:
        raise NonSimpleVertex(f"negative dimension {dim}")
    index = {x: i for i, x in enumerate(facets)}
    vsets = []
    for raw in vertices:
        ids = []
        for x in raw:
            if isinstance(x, str):
                if x not in index:
                    raise UnknownFacet(f"vertex refers to unknown facet {x!r}")
                ids.append(index[x])
            else:
                if not 0 <= int(x) < len(facets):
                    raise UnknownFacet(f"vertex refers to facet index {x}")
                ids.append(int(x))
        vs = frozenset(ids)
        if len(ids) != dim or len(vs) != dim:
            raise NonSimpleVertex(
                f"vertex {sorted(facets[i] for i in vs)} lies on {len(ids)} facets, expected {dim}")
        vsets.append(vs)
    if not vsets:
        raise NonSimpleVertex(f"{name} has no vertices")
    if len(set(vsets)) != len(vsets):
        raise DuplicateVertex(f"two vertices of {name} have identical facet sets")
    used = frozenset().union(*vsets)
    unused = [facets[i] for i in range(len(facets)) if i not in used]
    if unused:
        raise UnusedFacet(f"facets {unused} contain no vertex")
    if dim == 0 and len(vsets) != 1:
        raise DuplicateVertex("a 0-dimensional polytope has exactly one vertex")
    P = SimplePolytope(name, dim, facets, tuple(vsets))
    if dim >= 2 and not _ridge_graph_connected(P):
        raise DisconnectedRidgeGraph(f"ridge graph of {name} is disconnected")
    if dim == 1 and len(facets) != 2:
        raise DisconnectedRidgeGraph(f"a 1-dimensional polytope has exactly two facets")
    return P


def _ridge_graph_connected(P: SimplePolytope) -> bool:
    if P.m == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in range(P.m):
            if (frontier >> i) & 1:
                nxt |= P.adjacency[i]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << P.m) - 1


def face_of(P: SimplePolytope, S: Iterable[int]) -> Optional[Face]:
    S = frozenset(S)
    if S in P.face_sets:
        return Face(S, P.dim - len(S))
    return None


def faces(P: SimplePolytope, k: int) -> list[Face]:
    """All faces of codimension ``k``, sorted by facet indices."""
    return [Face(S, P.dim - k)
            for S in sorted((S for S in P.face_sets if len(S) == k), key=sorted)]


def all_faces(P: SimplePolytope, proper: bool = True) -> list[Face]:
    """Faces by increasing codimension; ``proper`` drops P itself."""
    out = []
    for k in range(1 if proper else 0, P.dim + 1):
        out.extend(faces(P, k))
    return out


def transverse_facets(P: SimplePolytope, f: Face) -> frozenset:
    """Facets meeting ``f`` in a codimension-one face of ``f``."""
    return frozenset(F for F in range(P.m)
                     if F not in f.facet_set and (f.facet_set | {F}) in P.face_sets)


def three_belts(P: SimplePolytope) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in combinations(range(P.m), 3):
        if P.adjacent(a, b) and P.adjacent(a, c) and P.adjacent(b, c) \
                and frozenset((a, b, c)) not in P.face_sets:
            out.append((a, b, c))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset
    simplices: frozenset  # nonempty simplices, as frozensets of vertices

    def edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(s)) for s in self.simplices if len(s) == 2)

    def empty_triangles(self) -> list[tuple[int, int, int]]:
        """Vertex triples pairwise joined by edges but spanning no 2-simplex."""
        es = {frozenset(e) for e in self.edges()}
        out = []
        for a, b, c in combinations(sorted(self.vertices), 3):
            if {frozenset((a, b)), frozenset((a, c)), frozenset((b, c))} <= es \
                    and frozenset((a, b, c)) not in self.simplices:
                out.append((a, b, c))
        return out


def link(P: SimplePolytope, f: Face) -> SimplicialComplex:
    """Link of the simplex dual to ``f`` in the boundary of the dual polytope."""
    S = f.facet_set
    simplices = frozenset(T - S for T in P.face_sets if S < T)
    verts = frozenset(x for s in simplices for x in s)
    return SimplicialComplex(verts, simplices)


def dual_complex(P: SimplePolytope) -> SimplicialComplex:
    return link(P, Face(frozenset(), P.dim))


def is_flag(P: SimplePolytope) -> bool:
    """Flagness via links: no link of any face (P included) has an empty triangle."""
    for S in P.face_sets:
        if link(P, Face(S, P.dim - len(S))).empty_triangles():
            return False
    return True


def is_flag_direct(P: SimplePolytope) -> bool:
    """Exponential check of the definition: pairwise meeting facets share a face."""
    for k in range(3, P.m + 1):
        for fam in combinations(range(P.m), k):
            if all(P.adjacent(a, b) for a, b in combinations(fam, 2)) \
                    and frozenset(fam) not in P.face_sets:
                return False
    return True


def f_vector(P: SimplePolytope) -> tuple[int, ...]:
    """``f[i]`` is the number of ``i``-dimensional faces; ``f[n] == 1``."""
    counts = [0] * (P.dim + 1)
    for S in P.face_sets:
        counts[P.dim - len(S)] += 1
    return tuple(counts)


def h_vector(P: SimplePolytope) -> tuple[int, ...]:
    # sum_i h_i t^(n-i) = sum_i f_i (t-1)^i
    n = P.dim
    f = f_vector(P)
    coeff = [0] * (n + 1)  # coeff[d] multiplies t^d
    for i, fi in enumerate(f):
        for d in range(i + 1):
            coeff[d] += fi * comb(i, d) * (-1) ** (i - d)
    return tuple(coeff[n - i] for i in range(n + 1))


def restrict(P: SimplePolytope, f: Face) -> tuple[SimplePolytope, tuple[int, ...]]:
    """The face ``f`` as a simple polytope in its own right.

    Returns ``(Q, facet_map)`` where facet ``q`` of ``Q`` is ``f ∩ F`` with
    ``F = facet_map[q]``; ``facet_map`` is increasing.
    """
    S = f.facet_set
    facet_map = tuple(sorted(transverse_facets(P, f)))
    local = {F: q for q, F in enumerate(facet_map)}
    verts = [[local[F] for F in sorted(v - S)] for v in P.vertices if S <= v]
    name = f"{P.name}{P.label(S)}"
    Q = validate(name, f.dim, [P.facets[F] for F in facet_map], verts)
    return Q, facet_map


def is_isomorphic(P: SimplePolytope, Q: SimplePolytope) -> bool:
    """Combinatorial equivalence by backtracking over facet bijections."""
    if (P.dim, P.m, len(P.vertices)) != (Q.dim, Q.m, len(Q.vertices)):
        return False
    if f_vector(P) != f_vector(Q):
        return False
    degP = [bin(a).count("1") for a in P.adjacency]
    degQ = [bin(a).count("1") for a in Q.adjacency]
    if sorted(degP) != sorted(degQ):
        return False
    target = Q.vertex_set
    order = sorted(range(P.m), key=lambda i: -degP[i])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(i: int) -> bool:
        for j, mj in mapping.items():
            if P.adjacent(i, j) != Q.adjacent(mapping[i], mj):
                return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return frozenset(frozenset(mapping[x] for x in v) for v in P.vertices) == target
        i = order[pos]
        for c in range(Q.m):
            if c in used or degQ[c] != degP[i]:
                continue
            mapping[i] = c
            used.add(c)
            if consistent(i) and search(pos + 1):
                return True
            used.discard(c)
            del mapping[i]
        return False

    return search(0)
