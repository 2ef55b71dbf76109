"""Right-angled Coxeter group of a simple polytope.

``W_P`` has one involution ``s_F`` per facet, and ``s_F``, ``s_F'`` commute
exactly when the facets are adjacent. Words are tuples of facet indices.

Equality is decided by reduction: a pair of equal letters separated only by
letters commuting with them cancels, and a word with no such pair is reduced
(Tits). Reduced words of one element differ only by commutations, so the
Cartier-Foata layering of a reduced word, with each layer sorted, is a
canonical form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import gf2
from .charfn import CharFn
from .errors import ContextMismatch, UnknownFacet
from .polytope import SimplePolytope

__all__ = [
    "NormalForm",
    "CoxeterGroup",
    "coxeter_group",
    "reduce",
    "equal",
    "is_identity",
    "phi",
    "gamma",
    "xi",
    "squares_to_identity",
    "Frame",
    "frame",
]

Word = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class NormalForm:
    layers: tuple[tuple[int, ...], ...]

    @property
    def word(self) -> Word:
        return tuple(x for layer in self.layers for x in layer)

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def is_identity(self) -> bool:
        return not self.layers


class CoxeterGroup:
    """``W_P`` for a fixed polytope; all word arithmetic goes through here."""

    def __init__(self, P: SimplePolytope):
        self.polytope = P
        self.m = P.m
        # commuting set of each letter, the letter itself excluded
        self._commute = P.adjacency

    def commute(self, a: int, b: int) -> bool:
        return bool((self._commute[a] >> b) & 1)

    def check(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for x in w:
            if not 0 <= x < self.m:
                raise UnknownFacet(f"letter {x} is not a facet of {self.polytope.name}")
        return w

    def reduced_word(self, word: Iterable[int]) -> Word:
        """A reduced word for ``word``: cancel each new letter as far left as it can reach."""
        out: list[int] = []
        for a in word:
            mask = self._commute[a]
            i = len(out) - 1
            while i >= 0:
                b = out[i]
                if b == a:
                    del out[i]
                    break
                if not (mask >> b) & 1:
                    i = -1
                    break
                i -= 1
            if i < 0:
                out.append(a)
        return tuple(out)

    def foata(self, reduced: Sequence[int]) -> NormalForm:
        """Cartier-Foata layers of an already reduced word."""
        depth: list[int] = []
        for k, a in enumerate(reduced):
            mask = self._commute[a]
            d = 0
            for j in range(k):
                b = reduced[j]
                if (b == a or not (mask >> b) & 1) and depth[j] >= d:
                    d = depth[j] + 1
            depth.append(d)
        if not depth:
            return NormalForm(())
        layers: list[list[int]] = [[] for _ in range(max(depth) + 1)]
        for a, d in zip(reduced, depth):
            layers[d].append(a)
        return NormalForm(tuple(tuple(sorted(layer)) for layer in layers))

    def reduce(self, word: Iterable[int]) -> NormalForm:
        return self.foata(self.reduced_word(self.check(word)))

    def cancellable_pairs(self, word: Sequence[int]) -> list[tuple[int, int]]:
        """Positions ``i < j`` of equal letters with only commuting letters between."""
        out = []
        for i, a in enumerate(word):
            mask = self._commute[a]
            for j in range(i + 1, len(word)):
                b = word[j]
                if b == a:
                    out.append((i, j))
                    break
                if not (mask >> b) & 1:
                    break
        return out

    def reduce_randomized(self, word: Iterable[int], rng: random.Random) -> NormalForm:
        """Reduction deleting a uniformly chosen cancellable pair at each step."""
        w = list(self.check(word))
        while True:
            pairs = self.cancellable_pairs(w)
            if not pairs:
                return self.foata(w)
            i, j = rng.choice(pairs)
            del w[j]
            del w[i]

    def equal(self, w1: Iterable[int], w2: Iterable[int]) -> bool:
        return self.reduce(w1) == self.reduce(w2)

    def is_identity(self, w: Iterable[int]) -> bool:
        return not self.reduced_word(self.check(w))

    def inverse(self, w: Sequence[int]) -> Word:
        return tuple(reversed(w))

    def squares_to_identity(self, w: Sequence[int]) -> bool:
        w = tuple(w)
        return self.is_identity(w + w)


@lru_cache(maxsize=None)
def coxeter_group(P: SimplePolytope) -> CoxeterGroup:
    return CoxeterGroup(P)


def reduce(P: SimplePolytope, word: Iterable[int]) -> NormalForm:
    return coxeter_group(P).reduce(word)


def equal(P: SimplePolytope, w1: Iterable[int], w2: Iterable[int]) -> bool:
    return coxeter_group(P).equal(w1, w2)


def is_identity(P: SimplePolytope, w: Iterable[int]) -> bool:
    return coxeter_group(P).is_identity(w)


def squares_to_identity(P: SimplePolytope, w: Sequence[int]) -> bool:
    return coxeter_group(P).squares_to_identity(w)


def phi(word: Iterable[int], lam: CharFn, P: Optional[SimplePolytope] = None) -> int:
    """Image in ``(Z_2)^n``: sum of the values of the letters."""
    if P is not None and P != lam.polytope:
        raise ContextMismatch("word and characteristic function live on different polytopes")
    out = 0
    for x in coxeter_group(lam.polytope).check(word):
        out ^= lam.values[x]
    return out


class Frame:
    """The basis ``lambda(F)``, ``F`` through a vertex ``v``, and the words built on it."""

    def __init__(self, lam: CharFn, v: frozenset):
        P = lam.polytope
        self.vertex = P.vertex(v)
        self.charfn = lam
        self.facets = tuple(sorted(self.vertex))
        self.basis = [lam.values[F] for F in self.facets]
        self._gamma: dict[int, Word] = {}

    def gamma(self, g: int) -> Word:
        w = self._gamma.get(g)
        if w is None:
            c = gf2.coordinates(g, self.basis)
            w = tuple(F for i, F in enumerate(self.facets) if (c >> i) & 1)
            self._gamma[g] = w
        return w

    def xi(self, j: int, g: int) -> Word:
        return self.gamma(g) + (j,) + self.gamma(g ^ self.charfn.values[j])


@lru_cache(maxsize=256)
def frame(lam: CharFn, v: frozenset) -> Frame:
    return Frame(lam, frozenset(v))


def gamma(g: int, v, lam: CharFn) -> Word:
    """Product of the ``s_F`` (``F`` through ``v``) whose basis coordinates occur in ``g``."""
    if not 0 <= g < 1 << lam.n:
        raise ValueError(f"label {g} does not fit in {lam.n} bits")
    return frame(lam, lam.polytope.vertex(v)).gamma(g)


def xi(j: int, g: int, v, lam: CharFn) -> Word:
    """``gamma_g · s_j · gamma_{g + lambda(F_j)}``."""
    if not 0 <= j < lam.polytope.m:
        raise UnknownFacet(f"facet index {j} out of range")
    if not 0 <= g < 1 << lam.n:
        raise ValueError(f"label {g} does not fit in {lam.n} bits")
    return frame(lam, lam.polytope.vertex(v)).xi(j, g)
