"""GF(2) linear algebra on int bitsets.

A vector of length ``n`` is an ``int`` in ``[0, 2**n)``; coordinate ``i``
(0-based) is bit ``i``, so ``e_1 == 1``, ``e_2 == 2``, ``e_3 == 4``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "unit",
    "parity",
    "rank",
    "rref",
    "in_span",
    "span",
    "coordinates",
    "to_bits",
    "from_bits",
]


def unit(i: int) -> int:
    return 1 << i


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the span, sorted by decreasing pivot.

    The pivot of a row is its highest set bit; every pivot bit is cleared in
    all other rows, so the result is a canonical basis of the subspace.
    """
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            v = min(v, v ^ r)
        if v:
            # clear the new pivot from the existing rows
            top = v.bit_length() - 1
            rows = [r ^ v if (r >> top) & 1 else r for r in rows]
            rows.append(v)
    rows.sort(reverse=True)
    return tuple(rows)


def rank(vectors: Iterable[int]) -> int:
    return len(rref(vectors))


def in_span(v: int, basis: Sequence[int]) -> bool:
    """Membership test; ``basis`` must be an :func:`rref` output."""
    for r in basis:
        v = min(v, v ^ r)
    return v == 0


def span(vectors: Iterable[int]) -> list[int]:
    """All elements of the span, in increasing order."""
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return sorted(out)


def coordinates(v: int, basis: Sequence[int]) -> int:
    """Coefficient mask ``c`` with ``v == xor(basis[i] for i in bits of c)``.

    ``basis`` is any list of independent vectors. Raises ``ValueError`` if
    ``v`` is not in their span.
    """
    # augmented rows keyed by leading bit: pivot -> (vector, coefficient mask)
    pivots: dict[int, tuple[int, int]] = {}

    def eliminate(x: int, c: int) -> tuple[int, int]:
        for top in sorted(pivots, reverse=True):
            if (x >> top) & 1:
                rv, rc = pivots[top]
                x, c = x ^ rv, c ^ rc
        return x, c

    for i, b in enumerate(basis):
        b, c = eliminate(b, 1 << i)
        if b == 0:
            raise ValueError("basis vectors are dependent")
        pivots[b.bit_length() - 1] = (b, c)
    v, coeff = eliminate(v, 0)
    if v:
        raise ValueError("vector not in span")
    return coeff


def to_bits(v: int, n: int) -> str:
    """``e_1 + e_3`` with ``n == 3`` -> ``"101"`` (coordinate 1 first)."""
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


def from_bits(s: str) -> int:
    if any(c not in "01" for c in s):
        raise ValueError(f"not a bit string: {s!r}")
    return sum(1 << i for i, c in enumerate(s) if c == "1")
