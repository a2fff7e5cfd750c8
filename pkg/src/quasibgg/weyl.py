"""Weyl groups: ShortLex reduced words, Bruhat order and the dot action.

An element ``w`` is identified by ``w(rho)``, which is injective on W
because rho is regular.  Left descents of ``w`` are the indices where
``w(rho)`` has a negative coordinate, so the lexicographically least
reduced word is read off by repeatedly stripping the smallest left descent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .root_data import RootDatum, Weight

DEFAULT_MAX_ORDER = 51840


class GroupTooLarge(RuntimeError):
    pass


def max_group_order() -> int:
    return int(os.environ.get("QBGG_MAX_WEYL_ORDER", DEFAULT_MAX_ORDER))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with its canonical (ShortLex) reduced word.

    Words use 1-based simple-reflection indices and are read left to
    right as a product, so ``(1, 2)`` is ``s_1 s_2``.
    """

    word: tuple[int, ...]
    rho_image: Weight = field(repr=False)
    datum: RootDatum = field(repr=False, compare=False, hash=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def action_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix on fundamental coordinates; column j is ``w(omega_j)``."""
        n = self.datum.rank
        cols = [self.act(tuple(int(i == j) for i in range(n))) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def act(self, lam: Sequence[int]) -> Weight:
        """Linear action ``w(lam)``."""
        lam = tuple(lam)
        for i in reversed(self.word):
            lam = self.datum.reflect(i - 1, lam)
        return lam

    def dot(self, lam: Sequence[int]) -> Weight:
        return dot_action(self.datum, self, lam)

    def left_descents(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self.rho_image) if x < 0]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return element_from_rho_image(self.datum, self.act(other.rho_image))

    def inverse(self) -> "WeylElement":
        return from_word(self.datum, reversed(self.word))

    def is_identity(self) -> bool:
        return not self.word

    def __lt__(self, other: "WeylElement") -> bool:
        # ShortLex order, used for deterministic sorting only
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __str__(self) -> str:
        return "e" if not self.word else "s" + "s".join(map(str, self.word))


def _shortlex_word(datum: RootDatum, v: Weight) -> tuple[int, ...]:
    word = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        word.append(i + 1)
        v = datum.reflect(i, v)
    if v != datum.rho:
        raise ValueError("vector is not in the W-orbit of rho")
    return tuple(word)


def element_from_rho_image(datum: RootDatum, v: Sequence[int]) -> WeylElement:
    v = tuple(v)
    return WeylElement(_shortlex_word(datum, v), v, datum)


def from_word(datum: RootDatum, word: Iterable[int]) -> WeylElement:
    """Element for an arbitrary (not necessarily reduced) word."""
    v = datum.rho
    for i in reversed(tuple(word)):
        if not 1 <= i <= datum.rank:
            raise ValueError(f"simple reflection index {i} outside 1..{datum.rank}")
        v = datum.reflect(i - 1, v)
    return element_from_rho_image(datum, v)


def identity(datum: RootDatum) -> WeylElement:
    return WeylElement((), datum.rho, datum)


class WeylGroup(Sequence[WeylElement]):
    """All elements of W in ShortLex order, with lookup by ``w(rho)``."""

    def __init__(self, datum: RootDatum, elements: list[WeylElement]):
        self.datum = datum
        self._elements = elements
        self._index = {w.rho_image: k for k, w in enumerate(elements)}

    def __len__(self) -> int:
        return len(self._elements)

    def __getitem__(self, k):
        return self._elements[k]

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self._elements)

    def __contains__(self, w) -> bool:
        return isinstance(w, WeylElement) and w.rho_image in self._index

    def index(self, w: WeylElement) -> int:  # type: ignore[override]
        return self._index[w.rho_image]

    def lookup(self, rho_image: Weight) -> WeylElement:
        return self._elements[self._index[rho_image]]

    @property
    def longest(self) -> WeylElement:
        return self._elements[-1]

    def by_length(self) -> dict[int, list[WeylElement]]:
        out: dict[int, list[WeylElement]] = {}
        for w in self._elements:
            out.setdefault(w.length, []).append(w)
        return out

    def length_generating_function(self) -> list[int]:
        counts = [0] * (self.longest.length + 1)
        for w in self._elements:
            counts[w.length] += 1
        return counts

    @cached_property
    def reflections(self) -> list[WeylElement]:
        """The reflections ``s_beta``, one per positive root."""
        d = self.datum
        out = []
        for beta, pair in zip(d.positive_roots, _coroot_rows(d)):
            k = sum(p * x for p, x in zip(pair, d.rho))
            out.append(self.lookup(tuple(x - k * b for x, b in zip(d.rho, beta))))
        return out


def _coroot_rows(datum: RootDatum) -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in cv) for cv in datum.positive_coroot_coords]


def generate_group(datum: RootDatum, max_order: int | None = None) -> WeylGroup:
    """Enumerate W breadth-first by length.

    The word of a new element ``u`` is its smallest left descent ``i``
    followed by the (already known) word of ``s_i u``.
    """
    if max_order is None:
        max_order = max_group_order()
    e = identity(datum)
    words: dict[Weight, tuple[int, ...]] = {datum.rho: ()}
    level = [datum.rho]
    elements = [e]
    while level:
        nxt: dict[Weight, None] = {}
        for v in level:
            for i, x in enumerate(v):
                if x > 0:
                    u = datum.reflect(i, v)
                    if u not in words and u not in nxt:
                        nxt[u] = None
        new = []
        for u in nxt:
            i = next(k for k, x in enumerate(u) if x < 0)
            words[u] = (i + 1,) + words[datum.reflect(i, u)]
            new.append(WeylElement(words[u], u, datum))
        if len(words) > max_order:
            raise GroupTooLarge(f"|W| exceeds configured bound {max_order}")
        new.sort(key=lambda w: w.word)
        elements.extend(new)
        level = list(nxt)
    return WeylGroup(datum, elements)


def dot_action(datum: RootDatum, w: WeylElement, lam: Sequence[int]) -> Weight:
    """``w . lam = w(lam + rho) - rho``."""
    shifted = tuple(x + r for x, r in zip(lam, datum.rho))
    return tuple(x - r for x, r in zip(w.act(shifted), datum.rho))


def bruhat_leq(w1: WeylElement, w2: WeylElement) -> bool:
    """Subword criterion, evaluated greedily along the word of ``w2``.

    Scanning ``w2 = s_{a_1} ... s_{a_k}`` from the left, strip ``s_{a_j}``
    from the current element whenever it is a left descent; ``w1 <= w2``
    exactly when this ends at the identity.
    """
    datum = w1.datum
    v = w1.rho_image
    if len(w1.word) > len(w2.word):
        return False
    for a in w2.word:
        if v[a - 1] < 0:
            v = datum.reflect(a - 1, v)
    return v == datum.rho


def reflect_by_root(datum: RootDatum, k: int, v: Sequence[int]) -> Weight:
    """Apply the reflection in the k-th positive root to a weight."""
    beta = datum.positive_roots[k]
    pair = datum.positive_coroot_coords[k]
    c = sum(p * x for p, x in zip(pair, v))
    c = int(c)
    return tuple(x - c * b for x, b in zip(v, beta))


def length_of(datum: RootDatum, v: Sequence[int]) -> int:
    """Length of the element with ``w(rho) = v``."""
    return sum(1 for p in datum.coroot_pairings(v) if p < 0)


def covers(w: WeylElement) -> list[WeylElement]:
    """Upper Bruhat covers ``t w`` with ``t`` a reflection, in ShortLex order."""
    datum = w.datum
    target = w.length + 1
    out = {}
    for k in range(datum.num_positive_roots):
        u = reflect_by_root(datum, k, w.rho_image)
        if length_of(datum, u) == target:
            out[u] = element_from_rho_image(datum, u)
    return sorted(out.values())


def reduced_subword_products(w: WeylElement) -> set[Weight]:
    """``u(rho)`` for every subword product of the reduced word of ``w``.

    Brute force over all ``2^l(w)`` subwords; this is the interval
    ``[e, w]`` in Bruhat order.
    """
    datum = w.datum
    out = {datum.rho}
    for i in reversed(w.word):
        out |= {datum.reflect(i - 1, v) for v in out}
    return out
