"""Small covers over simple polytopes: fundamental groups, the word problem,
pi_1-injectivity of facial submanifolds and the 3-dimensional curvature
classification."""

from .charfn import CharFn, find_charfn, induced_charfn, make_charfn
from .coxeter import CoxeterGroup, NormalForm, coxeter_group
from .document import PolytopeDocument, load_fixture, parse_document, read_document
from .errors import SmallCoverError
from .pi1 import (
    BetaGen,
    Presentation,
    face_presentation,
    is_pi1_injective,
    kernel_generators,
    presentation,
    psi,
    reduced_presentation,
)
from .polytope import Face, SimplePolytope, validate

__version__ = "0.1.0"

__all__ = [
    "BetaGen",
    "CharFn",
    "CoxeterGroup",
    "Face",
    "NormalForm",
    "PolytopeDocument",
    "Presentation",
    "SimplePolytope",
    "SmallCoverError",
    "coxeter_group",
    "face_presentation",
    "find_charfn",
    "induced_charfn",
    "is_pi1_injective",
    "kernel_generators",
    "load_fixture",
    "make_charfn",
    "parse_document",
    "presentation",
    "psi",
    "read_document",
    "reduced_presentation",
    "validate",
]
