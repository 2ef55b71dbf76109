"""Exception hierarchy.

Every error carries a ``code`` naming the violated invariant, which the CLI
prints verbatim.
"""

from __future__ import annotations


class SmallCoverError(Exception):
    code = "SmallCoverError"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)

    def __str__(self) -> str:
        msg = super().__str__()
        return msg if msg.startswith(self.code) else f"{self.code}: {msg}"


class ParseError(SmallCoverError):
    code = "ParseError"


class PolytopeError(SmallCoverError, ValueError):
    code = "PolytopeError"


class NonSimpleVertex(PolytopeError):
    code = "NonSimpleVertex"


class DisconnectedRidgeGraph(PolytopeError):
    code = "DisconnectedRidgeGraph"


class DuplicateVertex(PolytopeError):
    code = "DuplicateVertex"


class UnusedFacet(PolytopeError):
    code = "UnusedFacet"


class UnknownFacet(PolytopeError):
    code = "UnknownFacet"


class NotAFace(PolytopeError):
    code = "NotAFace"


class InvalidVertex(PolytopeError):
    code = "InvalidVertex"


class VertexNotInFace(PolytopeError):
    code = "VertexNotInFace"


class WrongDimension(PolytopeError):
    code = "WrongDimension"


class NotATriangle(PolytopeError):
    code = "NotATriangle"


class CharFnError(SmallCoverError, ValueError):
    code = "CharFnError"


class WrongLength(CharFnError):
    code = "WrongLength"


class ZeroValue(CharFnError):
    code = "ZeroValue"


class DegenerateCharFn(CharFnError):
    code = "DegenerateCharFn"


class MissingCharFn(CharFnError):
    code = "MissingCharFn"


class NotOrientable(CharFnError):
    code = "NotOrientable"


class ContextMismatch(SmallCoverError, ValueError):
    code = "ContextMismatch"


class UnknownGenerator(SmallCoverError, ValueError):
    code = "UnknownGenerator"


class InternalInvariantViolation(SmallCoverError, RuntimeError):
    code = "InternalInvariantViolation"
