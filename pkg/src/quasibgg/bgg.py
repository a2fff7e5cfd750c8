"""Signed combinatorial shape of the quasi-BGG complex.

Only characters and signed incidence data are tracked.  Layer ``-k`` holds
the quasi-Vermas ``M^w(w.mu)`` with ``l(w) = k``; the differential runs from
layer ``-k`` to ``-k+1`` along Bruhat covers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .charring import CharError, RationalChar, rc_sum
from .reps_chars import quasi_verma_char
from .root_data import RootDatum, Weight
from .serialize import rational_to_json
from .weyl import WeylElement, covers, generate_group

SIGN_CONVENTION = (
    "greedy: elements processed in ShortLex order; the first lower cover in each "
    "parity component of an element gets +1, the rest are forced by square anticommutation"
)


class SignError(RuntimeError):
    pass


@dataclass(frozen=True)
class Edge:
    source: WeylElement  # longer element
    target: WeylElement
    sign: int


@dataclass
class BGGComplexShape:
    datum: RootDatum
    highest_weight: Weight
    layers: dict[int, list[tuple[WeylElement, RationalChar]]]
    edges: list[Edge]
    cell_labels: bool = False
    metadata: dict = field(default_factory=dict)

    def degree_of(self, w: WeylElement) -> int:
        return w.length if self.cell_labels else -w.length

    def label(self, w: WeylElement) -> str:
        return f"S_{w}" if self.cell_labels else f"M^{w}({w}.mu)"

    def layer_sizes(self) -> list[int]:
        return [len(self.layers[d]) for d in sorted(self.layers, key=abs)]

    def elements(self) -> list[WeylElement]:
        return [w for d in sorted(self.layers, key=abs) for w, _ in self.layers[d]]

    def sign_map(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
        return {(e.source.rho_image, e.target.rho_image): e.sign for e in self.edges}

    def incidence_matrix(self, k: int) -> list[list[int]]:
        """Matrix of the differential from the length-``k`` layer to the
        length-``k-1`` layer; rows index the target."""
        src = [w for w, _ in self._by_length(k)]
        dst = [w for w, _ in self._by_length(k - 1)]
        col = {w.rho_image: j for j, w in enumerate(src)}
        row = {w.rho_image: i for i, w in enumerate(dst)}
        M = [[0] * len(src) for _ in dst]
        for e in self.edges:
            if e.source.rho_image in col and e.target.rho_image in row:
                M[row[e.target.rho_image]][col[e.source.rho_image]] = e.sign
        return M

    def _by_length(self, k: int):
        return self.layers.get(k if self.cell_labels else -k, [])

    def to_json(self) -> dict:
        layers = []
        chars = {}
        for d in sorted(self.layers, key=abs):
            cells = []
            for w, ch in self.layers[d]:
                ref = self.label(w)
                chars[ref] = rational_to_json(ch)
                cells.append({"word": list(w.word), "char_ref": ref})
            layers.append({"degree": d, "cells": cells})
        return {
            "type": self.datum.label,
            "highest_weight": list(self.highest_weight),
            "layers": layers,
            "edges": [{"from": list(e.source.word), "to": list(e.target.word), "sign": e.sign}
                      for e in self.edges],
            "characters": chars,
            "metadata": dict(self.metadata),
        }


def _lower_covers(W) -> dict[Weight, list[WeylElement]]:
    low: dict[Weight, list[WeylElement]] = {w.rho_image: [] for w in W}
    for w in W:
        for u in covers(w):
            low[u.rho_image].append(w)
    return low


def assign_signs(W) -> list[Edge]:
    """Signs on Bruhat covers making every length-2 interval anticommute."""
    low = _lower_covers(W)
    sign: dict[tuple[Weight, Weight], int] = {}
    edges = []
    for z in W:  # ShortLex order, so all shorter elements are already done
        ys = low[z.rho_image]
        if not ys:
            continue
        idx = {y.rho_image: k for k, y in enumerate(ys)}
        # constraint graph: s(z,a) s(z,b) = -s(a,w) s(b,w) for each w below a and b
        below: dict[Weight, list[int]] = {}
        for k, y in enumerate(ys):
            for w in low[y.rho_image]:
                below.setdefault(w.rho_image, []).append(k)
        adj: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(ys))}
        for w, mids in below.items():
            if len(mids) != 2:
                raise SignError(f"interval below {z} has {len(mids)} middle elements")
            a, b = mids
            rel = -sign[(ys[a].rho_image, w)] * sign[(ys[b].rho_image, w)]
            adj[a].append((b, rel))
            adj[b].append((a, rel))
        val: dict[int, int] = {}
        for start in range(len(ys)):
            if start in val:
                continue
            val[start] = 1
            queue = deque([start])
            while queue:
                a = queue.popleft()
                for b, rel in adj[a]:
                    want = val[a] * rel
                    if b not in val:
                        val[b] = want
                        queue.append(b)
                    elif val[b] != want:
                        raise SignError(f"inconsistent square constraints at {z}")
        for y in ys:
            s = val[idx[y.rho_image]]
            sign[(z.rho_image, y.rho_image)] = s
            edges.append(Edge(z, y, s))
    return edges


def _require_dominant(datum: RootDatum, mu: Sequence[int]) -> Weight:
    mu = tuple(mu)
    if len(mu) != datum.rank:
        raise CharError(f"weight {mu} has wrong rank for {datum.label}")
    if not datum.is_dominant(mu):
        raise CharError(f"weight {mu} is not dominant")
    return mu


def build_bgg_complex(datum: RootDatum, mu: Sequence[int]) -> BGGComplexShape:
    mu = _require_dominant(datum, mu)
    W = generate_group(datum)
    layers: dict[int, list] = {}
    for w in W:
        layers.setdefault(-w.length, []).append((w, quasi_verma_char(datum, w, mu)))
    meta = {"sign_convention": SIGN_CONVENTION, "edge_direction": "from longer to shorter"}
    return BGGComplexShape(datum, mu, layers, assign_signs(W), False, meta)


def cousin_shape(datum: RootDatum, mu: Sequence[int]) -> BGGComplexShape:
    """Same shape, indexed by Schubert cells ``S_w`` in degree ``l(w)``."""
    cx = build_bgg_complex(datum, mu)
    layers = {-d: v for d, v in cx.layers.items()}
    meta = dict(cx.metadata, indexing="Schubert cells S_w, degree l(w)")
    return BGGComplexShape(datum, cx.highest_weight, layers, cx.edges, True, meta)


def euler_character(cx: BGGComplexShape) -> RationalChar:
    chars, signs = [], []
    for d in sorted(cx.layers, key=abs):
        for w, ch in cx.layers[d]:
            chars.append(ch)
            signs.append((-1) ** w.length)
    return rc_sum(chars, signs)


def _matmul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    if not A or not B:
        return []
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def d_squared(cx: BGGComplexShape) -> dict[int, list[list[int]]]:
    """``d_{k-1} d_k`` for every ``k >= 2``."""
    top = max(abs(d) for d in cx.layers)
    return {k: _matmul(cx.incidence_matrix(k - 1), cx.incidence_matrix(k)) for k in range(2, top + 1)}


def square_violations(cx: BGGComplexShape) -> list[dict]:
    """Length-2 intervals whose two paths do not carry opposite signs."""
    sign = cx.sign_map()
    down: dict[Weight, list[WeylElement]] = {}
    for e in cx.edges:
        down.setdefault(e.source.rho_image, []).append(e.target)
    bad = []
    for z in cx.elements():
        paths: dict[WeylElement, list[int]] = {}
        for y in down.get(z.rho_image, []):
            for w in down.get(y.rho_image, []):
                paths.setdefault(w, []).append(
                    sign[(z.rho_image, y.rho_image)] * sign[(y.rho_image, w.rho_image)])
        for w, prods in paths.items():
            if len(prods) != 2 or sum(prods) != 0:
                bad.append({"top": list(z.word), "bottom": list(w.word), "products": prods})
    return bad
