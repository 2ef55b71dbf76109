"""``smallcover`` command line tool.

Exit codes: 0 success, 1 domain error (invalid polytope, coloring, face...),
2 unreadable or malformed document.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import gf2
from .charfn import CharFn, betti1_z2, find_charfn, induced_charfn, is_orientable_3d
from .dim3 import (
    classify_curvature,
    orientable_small_cover_summary,
    recognize_vck_simplex,
    rz_profile,
    vertex_cut,
)
from .document import PolytopeDocument, format_document, read_document
from .errors import MissingCharFn, ParseError, SmallCoverError, WrongDimension
from .pi1 import (
    Presentation,
    face_presentation,
    is_pi1_injective,
    kernel_generators,
    presentation,
    psi,
    push_inclusion,
    reduced_presentation,
)
from .polytope import Face, SimplePolytope, all_faces, f_vector, h_vector, is_flag, three_belts

__all__ = ["main", "build_parser"]


def _split(spec: str) -> list[str]:
    return [x.strip() for x in spec.split(",") if x.strip()]


def _face(P: SimplePolytope, spec: str) -> Face:
    return P.face(_split(spec))


def _vertex(P: SimplePolytope, spec: Optional[str], within: Optional[Face] = None) -> frozenset:
    if spec is not None:
        return P.vertex(P.facet_ids(_split(spec)))
    if within is not None:
        return P.vertices_of(within)[0]
    return P.vertices[0]


def _charfn(doc: PolytopeDocument) -> CharFn:
    if doc.charfn is None:
        raise MissingCharFn(f"{doc.polytope.name} has no charfn field")
    return doc.charfn


def _fmt(seq: Sequence[int]) -> str:
    return "(" + ", ".join(map(str, seq)) + ")"


def cmd_check(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    P = doc.polytope
    belts = three_belts(P)
    print(f"name: {P.name}")
    print(f"m: {P.m}")
    print(f"n: {P.dim}")
    print(f"f-vector: {_fmt(f_vector(P))}")
    print(f"h-vector: {_fmt(h_vector(P))}")
    print(f"b1: {betti1_z2(P)}")
    print(f"flag: {'yes' if is_flag(P) else 'no'}")
    print(f"belts: {len(belts)}")
    for belt in belts:
        print(f"  {P.label(belt)}")
    if doc.charfn is not None:
        print("charfn: valid")
        if P.dim == 3:
            print(f"orientable: {'yes' if is_orientable_3d(doc.charfn) else 'no'}")
    else:
        print("charfn: absent")
    return 0


def _witness_transcript(lam: CharFn, f: Face, v: frozenset) -> list[str]:
    P = lam.polytope
    words = kernel_generators(lam, f, v)
    if not words:
        return ["  no witnesses (injective)"]
    ind = induced_charfn(lam, f, v)
    Q = ind.charfn.polytope
    lines = []
    for x in words:
        local = psi(x, ind.charfn, ind.local_anchor)
        pushed = push_inclusion(x, ind)
        ambient = psi(pushed, lam, v)
        lines.append(f"  witness: {presentation_word(ind.charfn, x)}")
        lines.append(f"    psi_f: {_coxeter(Q, local.word)}  ({'identity' if local.is_identity else 'nontrivial'})")
        lines.append(f"    pushed: {presentation_word(lam, pushed)}")
        lines.append(f"    psi: {_coxeter(P, ambient.word)}  ({'identity' if ambient.is_identity else 'nontrivial'})")
    return lines


def _coxeter(P: SimplePolytope, word: Sequence[int]) -> str:
    return " ".join(f"s[{P.facets[F]}]" for F in word) or "1"


def presentation_word(lam: CharFn, w) -> str:
    if not w:
        return "1"
    return " ".join(f"b[{lam.polytope.facets[F]},{gf2.to_bits(g, lam.n)}]"
                    + ("" if e == 1 else "^-1") for (F, g), e in w)


def cmd_injective(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    P = doc.polytope
    targets = all_faces(P) if args.all else [_face(P, args.face)]
    lam = _charfn(doc) if args.witness else None
    for f in targets:
        ok = is_pi1_injective(P, f)
        print(f"{P.label(f.facet_set)} dim {f.dim}: {'injective' if ok else 'not injective'}")
        if lam is not None:
            v = _vertex(P, args.vertex, f)
            for line in _witness_transcript(lam, f, v):
                print(line)
    return 0


def _gap_names(P: SimplePolytope) -> list[str]:
    def clean(name: str) -> str:
        return re.sub(r"[^A-Za-z0-9]", "_", name.replace("+", "p").replace("-", "m"))
    names = [clean(F) for F in P.facets]
    if len(set(names)) != len(names):
        names = [str(i + 1) for i in range(P.m)]
    return names


def format_presentation(pres: Presentation, style: str = "plain") -> str:
    P, n = pres.polytope, pres.charfn.n
    if style == "plain":
        header = f"# pi_1 of the small cover over {P.name}, base vertex {P.label(pres.anchor)}"
        lines = [header, f"generators ({len(pres.generators)}):"]
        lines += [f"  {pres.name_of(b)}" for b in pres.generators]
        lines.append(f"relators ({len(pres.relators)}):")
        lines += [f"  [{kind}] {pres.format_word(r)}"
                  for r, kind in zip(pres.relators, pres.relator_kinds)]
        return "\n".join(lines) + "\n"
    short = _gap_names(P)
    gname = {b: f"b{short[b.facet]}_{gf2.to_bits(b.label, n)}" for b in pres.generators}
    index = {b: i + 1 for i, b in enumerate(pres.generators)}

    def word(w) -> str:
        if not w:
            return "One(F)"
        return "*".join(f"b[{index[b]}]" + ("" if e == 1 else "^-1") for b, e in w)

    names = ", ".join(f'"{gname[b]}"' for b in pres.generators)
    rels = ",\n  ".join(word(r) for r in pres.relators)
    return (
        f"F := FreeGroup({names});;\n"
        "b := GeneratorsOfGroup(F);;\n"
        f"rels := [\n  {rels}\n];;\n"
        "G := F / rels;;\n"
    )


def cmd_presentation(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    lam = _charfn(doc)
    P = lam.polytope
    if args.face:
        f = _face(P, args.face)
        pres = face_presentation(lam, f, _vertex(P, args.vertex, f))
    else:
        pres = presentation(lam, _vertex(P, args.vertex))
    if args.reduced:
        pres = reduced_presentation(pres)
    sys.stdout.write(format_presentation(pres, args.format))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    P = doc.polytope
    if P.dim != 3:
        raise WrongDimension(f"{P.name} has dimension {P.dim}, expected 3")
    cls = classify_curvature(P)
    for flag, value in vars(cls).items():
        print(f"{flag}: {'yes' if value else 'no'}")
    k = recognize_vck_simplex(P)
    print(f"vertex cuts from simplex: {'none' if k is None else k}")
    print(f"RZ: {rz_profile(P).describe()}")
    if doc.charfn is not None and is_orientable_3d(doc.charfn):
        print(f"small cover: {orientable_small_cover_summary(doc.charfn)}")
    return 0


def cmd_cut(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    P = doc.polytope
    Q = vertex_cut(P, _vertex(P, args.vertex))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_document(Q))
    print(f"wrote {args.out}: m {P.m} -> {Q.m}, vertices {len(P.vertices)} -> {len(Q.vertices)}")
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    doc = read_document(args.file)
    P = doc.polytope
    lam = find_charfn(P)
    if lam is None:
        print(f"no characteristic function exists on {P.name}", file=sys.stderr)
        return 1
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_document(P, lam))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smallcover",
        description="Fundamental groups, injectivity and curvature data of small covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a document and print invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("injective", help="decide pi_1-injectivity of faces")
    p.add_argument("file")
    p.add_argument("face", nargs="?", help="comma-separated facet names")
    p.add_argument("--all", action="store_true", help="sweep every proper face")
    p.add_argument("--witness", action="store_true", help="print kernel words and their check")
    p.add_argument("--vertex", help="base vertex as comma-separated facet names")
    p.set_defaults(func=cmd_injective)

    p = sub.add_parser("presentation", help="print a presentation of pi_1")
    p.add_argument("file")
    p.add_argument("--vertex", help="base vertex as comma-separated facet names")
    p.add_argument("--face", help="present pi_1 of the facial submanifold instead")
    p.add_argument("--format", choices=("plain", "gap"), default="plain")
    p.add_argument("--reduced", action="store_true", help="apply the Tietze pass")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("classify", help="curvature classification of a 3-polytope")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cut", help="truncate a vertex and write the result")
    p.add_argument("file")
    p.add_argument("vertex", help="comma-separated facet names")
    p.add_argument("out")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("color", help="find a characteristic function and write it")
    p.add_argument("file")
    p.add_argument("out")
    p.set_defaults(func=cmd_color)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "injective" and args.all == (args.face is not None):
        parser.error("injective: give exactly one of FACE or --all")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SmallCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
