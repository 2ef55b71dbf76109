"""JSON polytope documents and the shipped fixtures.

A document has ``name``, ``dim``, ``facets`` (names), ``vertices`` (lists of
facet names) and an optional ``charfn`` mapping facet names to bit strings
of length ``dim`` (character ``i`` is coordinate ``i``). Parsing keeps the
facet order of the file; writing emits the canonical form, in which facets,
vertex lists and ``charfn`` keys are sorted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .charfn import CharFn, make_charfn
from .errors import ParseError, UnknownFacet, WrongLength
from .polytope import SimplePolytope, validate

__all__ = [
    "PolytopeDocument",
    "parse_document",
    "read_document",
    "write_document",
    "format_document",
    "load_fixture",
    "FIXTURES",
]

FIXTURES = (
    "simplex3",
    "cube",
    "prism",
    "vc2",
    "vc3",
    "pentagonal-prism",
    "square",
    "triangle",
    "interval",
)


@dataclass(frozen=True)
class PolytopeDocument:
    polytope: SimplePolytope
    charfn: Optional[CharFn] = None


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def parse_document(text: str) -> PolytopeDocument:
    """Parse and validate; syntax problems raise :class:`ParseError`,
    combinatorial ones the matching polytope or charfn error."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    _expect(isinstance(data, dict), "document must be a JSON object")
    for key in ("name", "dim", "facets", "vertices"):
        _expect(key in data, f"missing field {key!r}")
    unknown = set(data) - {"name", "dim", "facets", "vertices", "charfn"}
    _expect(not unknown, f"unknown fields: {sorted(unknown)}")
    name, dim, facets, vertices = data["name"], data["dim"], data["facets"], data["vertices"]
    _expect(isinstance(name, str), "name must be a string")
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0,
            "dim must be a nonnegative integer")
    _expect(isinstance(facets, list) and all(isinstance(F, str) for F in facets),
            "facets must be a list of strings")
    _expect(isinstance(vertices, list)
            and all(isinstance(v, list) and all(isinstance(F, str) for F in v)
                    for v in vertices),
            "vertices must be a list of lists of facet names")
    _expect(len(set(facets)) == len(facets), "facet names must be distinct")
    P = validate(name, dim, facets, vertices)
    raw = data.get("charfn")
    if raw is None:
        return PolytopeDocument(P)
    _expect(isinstance(raw, dict) and all(isinstance(x, str) for x in raw.values()),
            "charfn must map facet names to bit strings")
    for F in raw:
        if F not in P.index:
            raise UnknownFacet(f"charfn names unknown facet {F!r}")
    missing = [F for F in P.facets if F not in raw]
    if missing:
        raise WrongLength(f"charfn has no value for {', '.join(missing)}")
    return PolytopeDocument(P, make_charfn(P, [raw[F] for F in P.facets]))


def read_document(path: Union[str, Path]) -> PolytopeDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def format_document(P: SimplePolytope, lam: Optional[CharFn] = None) -> str:
    """Canonical text: one vertex per line, everything sorted."""
    q = json.dumps
    facets = sorted(P.facets)
    verts = sorted(sorted(P.facets[F] for F in v) for v in P.vertices)
    lines = [
        "{",
        f'  "name": {q(P.name)},',
        f'  "dim": {P.dim},',
        f'  "facets": [{", ".join(q(F) for F in facets)}],',
        '  "vertices": [',
    ]
    for i, v in enumerate(verts):
        sep = "," if i < len(verts) - 1 else ""
        lines.append(f'    [{", ".join(q(F) for F in v)}]{sep}')
    if lam is None:
        lines.append("  ]")
    else:
        lines.append("  ],")
        lines.append('  "charfn": {')
        for i, F in enumerate(facets):
            sep = "," if i < len(facets) - 1 else ""
            lines.append(f'    {q(F)}: {q(lam.bits(P.index[F]))}{sep}')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_document(path: Union[str, Path], P: SimplePolytope,
                   lam: Optional[CharFn] = None) -> None:
    Path(path).write_text(format_document(P, lam), encoding="utf-8")


def load_fixture(name: str) -> PolytopeDocument:
    if name not in FIXTURES:
        raise KeyError(f"no fixture named {name!r}; choose from {', '.join(FIXTURES)}")
    text = resources.files("smallcover.fixtures").joinpath(f"{name}.json").read_text("utf-8")
    return parse_document(text)
