"""Three-dimensional operations: vertex cuts, triangle shrinking, recognition
of cubes and iterated vertex cuts of the simplex, and the curvature
classification built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .charfn import CharFn, is_orientable_3d
from .errors import (
    InvalidVertex,
    NotATriangle,
    NotOrientable,
    PolytopeError,
    WrongDimension,
)
from .polytope import (
    Face,
    SimplePolytope,
    faces,
    transverse_facets,
    validate,
)

__all__ = [
    "CurvatureClass",
    "RZProfile",
    "CURVATURE_TABLE",
    "vertex_cut",
    "shrink_triangle",
    "triangular_facets",
    "recognize_vck_simplex",
    "is_cube",
    "classify_curvature",
    "rz_profile",
    "rz_count_recurrence",
    "rz_vertex_cut_decomposition",
    "rz_face_preimage_components",
    "orientable_small_cover_summary",
    "random_vertex_cuts",
]


def _require_dim3(P: SimplePolytope) -> None:
    if P.dim != 3:
        raise WrongDimension(f"{P.name} has dimension {P.dim}, expected 3")


def _fresh_name(P: SimplePolytope, prefix: str = "C") -> str:
    k = 1
    while f"{prefix}{k}" in P.index:
        k += 1
    return f"{prefix}{k}"


def vertex_cut(P: SimplePolytope, v, name: Optional[str] = None) -> SimplePolytope:
    """Truncate the vertex ``v``; the new simplex facet is appended last."""
    if P.dim < 2:
        raise InvalidVertex(f"vertex cuts need dimension >= 2, got {P.dim}")
    v = P.vertex(v)
    new = P.m
    name = name or _fresh_name(P)
    if name in P.index:
        raise PolytopeError(f"facet name {name!r} already used")
    verts = [sorted(u) for u in P.vertices if u != v]
    verts += [sorted((v - {F}) | {new}) for F in sorted(v)]
    return validate(P.name + "-cut", P.dim, P.facets + (name,), verts)


def triangular_facets(P: SimplePolytope) -> list[int]:
    return [F for F in range(P.m) if sum(1 for v in P.vertices if F in v) == 3]


def shrink_triangle(P: SimplePolytope, F: int) -> Optional[SimplePolytope]:
    """Collapse the triangular facet ``F`` to a vertex; ``None`` if the result
    is not a simple polytope (always the case for the simplex)."""
    _require_dim3(P)
    corners = [v for v in P.vertices if F in v]
    if len(corners) != 3:
        raise NotATriangle(f"facet {P.facets[F]} has {len(corners)} vertices")
    if P.m <= 4:
        return None
    merged = frozenset().union(*corners) - {F}
    keep = [G for G in range(P.m) if G != F]
    renum = {G: i for i, G in enumerate(keep)}
    verts = [[renum[G] for G in sorted(u)] for u in P.vertices if F not in u]
    verts.append([renum[G] for G in sorted(merged)])
    try:
        return validate(P.name, 3, [P.facets[G] for G in keep], verts)
    except PolytopeError:
        return None


def recognize_vck_simplex(P: SimplePolytope) -> Optional[int]:
    """``k`` such that ``P`` is ``k`` vertex cuts away from the simplex, else ``None``.

    Backtracks over the order in which triangles are shrunk; greedy
    shrinking is not assumed to be confluent.
    """
    _require_dim3(P)
    failed: set = set()

    def key(Q: SimplePolytope) -> frozenset:
        return frozenset(frozenset(Q.facets[i] for i in u) for u in Q.vertices)

    def search(Q: SimplePolytope) -> bool:
        if Q.m == 4:
            return True
        k = key(Q)
        if k in failed:
            return False
        for F in triangular_facets(Q):
            R = shrink_triangle(Q, F)
            if R is not None and search(R):
                return True
        failed.add(k)
        return False

    return P.m - 4 if search(P) else None


def is_cube(P: SimplePolytope) -> bool:
    """6 facets, 8 vertices, 12 edges and an octahedral facet adjacency graph."""
    _require_dim3(P)
    if P.m != 6 or len(P.vertices) != 8 or len(faces(P, 2)) != 12:
        return False
    # octahedron graph: every facet misses exactly one other, pairwise
    full = (1 << 6) - 1
    for F in range(6):
        missing = full & ~P.adjacency[F] & ~(1 << F)
        if bin(missing).count("1") != 1:
            return False
        G = missing.bit_length() - 1
        if (full & ~P.adjacency[G] & ~(1 << G)) != 1 << F:
            return False
    return True


@dataclass(frozen=True)
class CurvatureClass:
    positive_scalar: bool
    nonneg_scalar: bool
    nonneg_ricci_sectional: bool
    positive_ricci_sectional: bool
    flat: bool


# Each curvature condition and the polytope families carrying it:
# "simplex" is the 3-simplex, "prism" the triangular prism (one vertex cut),
# "cube" the 3-cube and "vck" any iterated vertex cut of the simplex (k >= 0).
CURVATURE_TABLE: dict[str, frozenset] = {
    "positive_ricci_sectional": frozenset({"simplex"}),
    "positive_scalar": frozenset({"vck"}),
    "nonneg_ricci_sectional": frozenset({"cube", "simplex", "prism"}),
    "nonneg_scalar": frozenset({"cube", "vck"}),
    "flat": frozenset({"cube"}),
}


def _families(P: SimplePolytope) -> tuple[set, Optional[int]]:
    fams = set()
    k = recognize_vck_simplex(P)
    if k is not None:
        fams.add("vck")
        if k == 0:
            fams.add("simplex")
        if k == 1:
            fams.add("prism")
    if is_cube(P):
        fams.add("cube")
    return fams, k


def classify_curvature(P: SimplePolytope) -> CurvatureClass:
    _require_dim3(P)
    fams, _ = _families(P)
    flags = {cond: bool(fams & carriers) for cond, carriers in CURVATURE_TABLE.items()}
    return CurvatureClass(**flags)


@dataclass(frozen=True)
class RZProfile:
    kind: str                 # "torus" | "sphere" | "connected_sum_s2xs1" | "other"
    count: Optional[int] = None
    k: Optional[int] = None   # number of vertex cuts, when recognized

    def describe(self) -> str:
        if self.kind == "connected_sum_s2xs1":
            noun = "copy" if self.count == 1 else "copies"
            return f"connected sum of {self.count} {noun} of S2xS1"
        return {"torus": "3-torus", "sphere": "3-sphere"}.get(self.kind, "other")


def rz_count_recurrence(k: int) -> int:
    """Copies of ``S^2 x S^1`` in ``RZ`` of ``vc^k(simplex)``, by repeated
    single cuts: each cut doubles the summands and adds ``2^(m-3) - 1`` tubes."""
    total = 0
    m = 4
    for _ in range(k):
        copies, tubes = rz_vertex_cut_decomposition(m)
        total = copies * total + tubes
        m += 1
    return total


def rz_profile(P: SimplePolytope) -> RZProfile:
    _require_dim3(P)
    if is_cube(P):
        return RZProfile("torus")
    k = recognize_vck_simplex(P)
    if k is None:
        return RZProfile("other")
    if k == 0:
        return RZProfile("sphere", k=0)
    return RZProfile("connected_sum_s2xs1", (k - 1) * 2 ** k + 1, k)


def rz_vertex_cut_decomposition(m: int) -> tuple[int, int]:
    """``(copies of RZ_P, tubes S^2 x S^1)`` making up ``RZ`` of one vertex cut."""
    if m < 4:
        raise ValueError(f"a simple 3-polytope has at least 4 facets, got {m}")
    return 2, 2 ** (m - 3) - 1


def rz_face_preimage_components(P: SimplePolytope, f: Face) -> int:
    """Number of copies of ``RZ_f`` over the face ``f`` in ``RZ_P``."""
    if not f.facet_set:
        raise PolytopeError("expected a proper face")
    l = len(transverse_facets(P, f))
    return 2 ** (P.m + f.dim - P.dim - l)


def orientable_small_cover_summary(lam: CharFn) -> str:
    """Topological type of an orientable small cover over a 3-polytope."""
    P = lam.polytope
    _require_dim3(P)
    if not is_orientable_3d(lam):
        raise NotOrientable(f"small cover over {P.name} is not orientable")
    if is_cube(P):
        return "orientable real Bott manifold"
    k = recognize_vck_simplex(P)
    if k is not None:
        copies = k + 1
        noun = "copy" if copies == 1 else "copies"
        return f"connected sum of {copies} {noun} of RP3 (vertex cuts: {k})"
    return "not nonnegatively curved (outside the classified families)"


def random_vertex_cuts(P: SimplePolytope, k: int, rng: random.Random) -> SimplePolytope:
    for _ in range(k):
        P = vertex_cut(P, rng.choice(P.vertices))
    return P
