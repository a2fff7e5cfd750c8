"""Finite-type Cartan and root data.

Weights are integer tuples in the fundamental-weight basis of X.  The
Cartan matrix follows ``A[i][j] = <alpha_i^vee, alpha_j>``, so the simple
root ``alpha_j`` is the j-th column of ``A`` in fundamental coordinates and
``<alpha_i^vee, lam>`` is simply ``lam[i]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

Weight = tuple[int, ...]

MAX_RANK = 8

_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


class RootDataError(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        A = self.cartan_matrix
        n = self.rank
        if len(A) != n or any(len(row) != n for row in A):
            raise RootDataError("Cartan matrix must be rank x rank")
        for i in range(n):
            if A[i][i] != 2:
                raise RootDataError("Cartan matrix diagonal must be 2")
            for j in range(n):
                if i != j and A[i][j] > 0:
                    raise RootDataError("off-diagonal Cartan entries must be <= 0")
                if self.symmetrizer[i] * A[i][j] != self.symmetrizer[j] * A[j][i]:
                    raise RootDataError("symmetrizer does not symmetrize the Cartan matrix")
        for k in range(1, n + 1):
            if _det([row[:k] for row in A[:k]]) <= 0:
                raise RootDataError("Cartan matrix is not of finite type")


def _det(rows: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def _chain(n: int) -> list[list[int]]:
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
        if i + 1 < n:
            A[i][i + 1] = A[i + 1][i] = -1
    return A


def cartan_matrix(series: str, n: int) -> list[list[int]]:
    """Bourbaki-numbered Cartan matrix of a finite type."""
    if series == "A" and n >= 1:
        return _chain(n)
    if series == "B" and n >= 2:
        A = _chain(n)
        A[n - 1][n - 2] = -2
        return A
    if series == "C" and n >= 2:
        A = _chain(n)
        A[n - 2][n - 1] = -2
        return A
    if series == "D" and n >= 4:
        A = _chain(n - 1) + [[0] * n]
        for row in A[:-1]:
            row.append(0)
        A[n - 1][n - 1] = 2
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
        return A
    if series == "E" and n in (6, 7, 8):
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            A[i][j] = A[j][i] = -1
        return A
    if series == "F" and n == 4:
        A = _chain(4)
        A[2][1] = -2
        return A
    if series == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise RootDataError(f"unknown Cartan type {series}{n}")


def symmetrizer(A: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integers ``d_i`` with ``d_i A[i][j]`` symmetric."""
    n = len(A)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * A[i][j] / A[j][i]
                    stack.append(j)
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def parse_label(label: str) -> tuple[str, int]:
    m = _LABEL_RE.match(label.strip().upper())
    if not m:
        raise RootDataError(f"unknown Cartan type label {label!r}")
    series, n = m.group(1), int(m.group(2))
    if n < 1 or n > MAX_RANK:
        raise RootDataError(f"rank {n} outside 1..{MAX_RANK}")
    return series, n


def cartan_datum(label: str) -> CartanDatum:
    series, n = parse_label(label)
    A = cartan_matrix(series, n)
    return CartanDatum(
        label=f"{series}{n}",
        rank=n,
        cartan_matrix=tuple(tuple(r) for r in A),
        symmetrizer=symmetrizer(A),
    )


@dataclass(frozen=True)
class RootDatum:
    """Simply connected root datum of a finite Cartan type.

    ``positive_roots`` are ordered by height and then by descending
    simple-root coordinates, which puts ``alpha_1`` before ``alpha_2``.
    """

    cartan: CartanDatum
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    # simple-root coordinates of each positive root, same order
    positive_root_coords: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def label(self) -> str:
        return self.cartan.label

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def _inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan.cartan_matrix)

    def to_root_coords(self, lam: Iterable[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``lam`` in the simple-root basis (over Q)."""
        lam = tuple(lam)
        inv = self._inverse_cartan
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank)) for i in range(self.rank))

    def from_root_coords(self, c: Sequence[int]) -> Weight:
        A = self.cartan.cartan_matrix
        return tuple(sum(A[i][j] * c[j] for j in range(self.rank)) for i in range(self.rank))

    def rational_height(self, lam: Iterable[int], J: Iterable[int] = ()) -> Fraction:
        skip = {j - 1 for j in J}
        return sum((c for i, c in enumerate(self.to_root_coords(lam)) if i not in skip), Fraction(0))

    @cached_property
    def height_functional(self) -> tuple[tuple[int, ...], int]:
        """Integer row vector ``h`` and denominator ``D`` with ``hgt = h.lam / D``."""
        inv = self._inverse_cartan
        col = [sum(inv[i][j] for i in range(self.rank)) for j in range(self.rank)]
        D = lcm(*(x.denominator for x in col))
        return tuple(int(x * D) for x in col), D

    def in_root_lattice(self, lam: Iterable[int]) -> bool:
        return all(c.denominator == 1 for c in self.to_root_coords(lam))

    def is_dominant(self, lam: Iterable[int]) -> bool:
        return all(x >= 0 for x in lam)

    def is_positive_root(self, lam: Weight) -> bool:
        return lam in self._positive_root_set

    @cached_property
    def _positive_root_set(self) -> frozenset[Weight]:
        return frozenset(self.positive_roots)

    @cached_property
    def bilinear_form(self) -> tuple[tuple[int, ...], ...]:
        """``(alpha_i, alpha_j) = d_i A[i][j]`` on simple roots."""
        A, d = self.cartan.cartan_matrix, self.cartan.symmetrizer
        return tuple(tuple(d[i] * A[i][j] for j in range(self.rank)) for i in range(self.rank))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """Invariant form on X, normalised by ``(alpha_i, alpha_i) = 2 d_i``."""
        # (lam, alpha_j) = d_j lam_j
        c = self.to_root_coords(mu)
        d = self.cartan.symmetrizer
        return sum((c[j] * d[j] * lam[j] for j in range(self.rank)), Fraction(0))

    @cached_property
    def positive_coroot_coords(self) -> tuple[tuple[Fraction, ...], ...]:
        """Simple-coroot coordinates of the coroot of each positive root."""
        B = self.bilinear_form
        d = self.cartan.symmetrizer
        out = []
        for c in self.positive_root_coords:
            norm = sum(c[i] * B[i][j] * c[j] for i in range(self.rank) for j in range(self.rank))
            out.append(tuple(Fraction(2 * c[i] * d[i], norm) for i in range(self.rank)))
        return tuple(out)

    def coroot_pairings(self, lam: Sequence[int]) -> list[int]:
        """``<lam, beta^vee>`` for every positive root ``beta``."""
        out = []
        for cv in self.positive_coroot_coords:
            v = sum(cv[i] * lam[i] for i in range(self.rank))
            out.append(int(v) if v.denominator == 1 else v)
        return out

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        """Simple reflection ``s_i`` (0-based index) on fundamental coordinates."""
        k = lam[i]
        if not k:
            return tuple(lam)
        a = self.simple_roots[i]
        return tuple(x - k * y for x, y in zip(lam, a))


def _inverse(A: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(A)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def _positive_roots(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                k = sum(A[i][j] * beta[j] for j in range(n))
                if k >= 0:
                    continue
                gamma = tuple(b - k * int(i == j) for j, b in enumerate(beta))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))


@lru_cache(maxsize=None)
def build_root_datum(label: str) -> RootDatum:
    """Root datum for a type label such as ``"A2"`` or ``"G2"``."""
    cd = cartan_datum(label)
    A = cd.cartan_matrix
    n = cd.rank
    coords = _positive_roots(A)

    def to_fund(c):
        return tuple(sum(A[i][j] * c[j] for j in range(n)) for i in range(n))

    return RootDatum(
        cartan=cd,
        simple_roots=tuple(tuple(A[i][j] for i in range(n)) for j in range(n)),
        positive_roots=tuple(to_fund(c) for c in coords),
        rho=(1,) * n,
        positive_root_coords=tuple(coords),
    )


def _check_index(datum: RootDatum, i: int) -> None:
    if not 1 <= i <= datum.rank:
        raise RootDataError(f"index {i} outside 1..{datum.rank}")


def pairing(datum: RootDatum, coroot_index: int, weight: Sequence[int]) -> int:
    """``<alpha_i^vee, weight>`` for 1-based ``coroot_index``."""
    _check_index(datum, coroot_index)
    return weight[coroot_index - 1]


def height(datum: RootDatum, weight: Sequence[int], J: Iterable[int] = ()) -> int:
    """``hgt_J``: sum of simple-root coordinates outside ``J`` (1-based)."""
    J = tuple(J)
    for j in J:
        _check_index(datum, j)
    if not datum.in_root_lattice(weight):
        raise RootDataError(f"weight {tuple(weight)} is not in the root lattice")
    return int(datum.rational_height(weight, J))


def positive_roots_in(datum: RootDatum, J: Iterable[int]) -> list[Weight]:
    """Positive roots supported on the simple roots indexed by ``J``."""
    inside = {j - 1 for j in J}
    return [
        root
        for root, c in zip(datum.positive_roots, datum.positive_root_coords)
        if all(x == 0 or i in inside for i, x in enumerate(c))
    ]


def parabolic_nilradical_dim(datum: RootDatum, J: Iterable[int]) -> int:
    J = tuple(J)
    for j in J:
        _check_index(datum, j)
    return datum.num_positive_roots - len(positive_roots_in(datum, J))


COXETER_NUMBER = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n,
                  "D": lambda n: 2 * n - 2, "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
                  "F": lambda n: 12, "G": lambda n: 6}


def coxeter_number(label: str) -> int:
    series, n = parse_label(label)
    return COXETER_NUMBER[series](n)


ALL_LABELS = tuple(
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)
