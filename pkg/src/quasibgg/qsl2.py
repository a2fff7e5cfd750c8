"""Divided powers of U_A(sl2) acting on the Verma module M_A(mu).

The basis is ``F^(n) p_mu`` (weight ``mu - 2n``); coefficients live in
Z[v, 1/v].  K acts diagonally by ``v^(mu - 2n)`` and is never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .charring import LaurentInt, cyclotomic_reduce, qbinom, quantum_factorial, quantum_integer
from .report import Case
from .serialize import laurent_to_json


@dataclass(frozen=True)
class Sl2VermaVector:
    mu: int
    entries: Mapping[int, LaurentInt] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for n, c in self.entries.items():
            if n < 0:
                raise ValueError("basis index must be >= 0")
            if isinstance(c, int):
                c = LaurentInt.const(c)
            if c:
                clean[n] = c
        object.__setattr__(self, "entries", clean)

    @classmethod
    def basis(cls, mu: int, n: int, coef: LaurentInt | int = 1) -> "Sl2VermaVector":
        return cls(mu, {n: coef if isinstance(coef, LaurentInt) else LaurentInt.const(coef)})

    def coefficient(self, n: int) -> LaurentInt:
        return self.entries.get(n, LaurentInt())

    def weights(self) -> set[int]:
        return {self.mu - 2 * n for n in self.entries}

    def __add__(self, other: "Sl2VermaVector") -> "Sl2VermaVector":
        _same_module(self, other)
        out = dict(self.entries)
        for n, c in other.entries.items():
            out[n] = out.get(n, LaurentInt()) + c
        return Sl2VermaVector(self.mu, out)

    def scale(self, c: LaurentInt) -> "Sl2VermaVector":
        return Sl2VermaVector(self.mu, {n: x * c for n, x in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sl2VermaVector):
            return NotImplemented
        return self.mu == other.mu and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.mu, frozenset(self.entries.items())))

    def __bool__(self) -> bool:
        return bool(self.entries)


def _same_module(a: Sl2VermaVector, b: Sl2VermaVector) -> None:
    if a.mu != b.mu:
        raise ValueError("vectors live in different Verma modules")


def act_F_divided(a: int, x: Sl2VermaVector) -> Sl2VermaVector:
    """``F^(a) F^(n) p = [a+n choose a] F^(a+n) p``."""
    if a < 0:
        raise ValueError("divided power exponent must be >= 0")
    return Sl2VermaVector(x.mu, {n + a: c * qbinom(n + a, a) for n, c in x.entries.items()})


def act_E_divided(a: int, x: Sl2VermaVector) -> Sl2VermaVector:
    """``E^(a) F^(b) p_mu = [mu - b + a choose a] F^(b-a) p_mu`` (zero if a > b)."""
    if a < 0:
        raise ValueError("divided power exponent must be >= 0")
    out = {}
    for b, c in x.entries.items():
        if a <= b:
            out[b - a] = out.get(b - a, LaurentInt()) + c * qbinom(x.mu - b + a, a)
    return Sl2VermaVector(x.mu, out)


def act_E_iterated(a: int, x: Sl2VermaVector) -> Sl2VermaVector:
    """Oracle for ``E^(a)``: ``a`` single steps of E, then exact division by [a]!.

    A single step uses only ``EF - FE = (K - K^-1)/(v - v^-1)``: commuting E
    through ``F^b`` gives ``E F^b p = (sum_{j<b} [mu - 2j]) F^(b-1) p``,
    rewritten in the divided-power basis.
    """
    cur = dict(x.entries)
    for _ in range(a):
        nxt: dict[int, LaurentInt] = {}
        for b, c in cur.items():
            if b == 0:
                continue
            plain = LaurentInt()
            for j in range(b):
                plain = plain + quantum_integer(x.mu - 2 * j)
            # F^(b) = F^b/[b]!, so E F^(b) p = plain/[b] * F^(b-1) p
            coef = (c * plain).exact_div(quantum_integer(b))
            nxt[b - 1] = nxt.get(b - 1, LaurentInt()) + coef
        cur = nxt
    fact = quantum_factorial(a)
    return Sl2VermaVector(x.mu, {n: c.exact_div(fact) for n, c in cur.items() if c})


def specialize_module(ell: int, x: Sl2VermaVector) -> Sl2VermaVector:
    """Reduce every coefficient into Z[v, 1/v]/(Phi_ell)."""
    if ell < 3 or ell % 2 == 0:
        raise ValueError(f"ell must be odd and >= 3, got {ell}")
    return Sl2VermaVector(x.mu, {n: cyclotomic_reduce(c, ell) for n, c in x.entries.items()})


def cogeneration_product(mu: int, m: int) -> LaurentInt:
    """The displayed scalar ``prod_s (K v^{-mu-s} - K^{-1} v^{mu+s})/(v^s - v^{-s})``
    with K acting on ``p_mu`` by ``v^mu``."""
    out = LaurentInt.const(1)
    for s in range(1, m - mu):
        k = LaurentInt.monomial(mu)
        kinv = LaurentInt.monomial(-mu)
        num = k * LaurentInt.monomial(-mu - s) - kinv * LaurentInt.monomial(mu + s)
        out = out * num.exact_div(LaurentInt({s: 1, -s: -1}))
    return out


def _unit_in_quotient(c: LaurentInt, ell: int) -> bool:
    reduced = cyclotomic_reduce(c, ell)
    return any(cyclotomic_reduce(LaurentInt.monomial(k, sign), ell) == reduced
               for k in range(ell) for sign in (1, -1))


def verify_cogeneration(mu: int, m_max: int, ell: int | None = None) -> list[Case]:
    """``E^(m-mu-1) F^(m) p_mu`` is a unit multiple of ``F^(mu+1) p_mu``."""
    if mu < 0 or m_max <= mu:
        raise ValueError("need mu >= 0 and m_max > mu")
    cases = []
    for m in range(mu + 1, m_max + 1):
        n = m - mu - 1
        res = act_E_divided(n, Sl2VermaVector.basis(mu, m))
        coef = res.coefficient(mu + 1)
        only = set(res.entries) <= {mu + 1}
        sign = (-1) ** n
        ok = only and coef.is_unit() and coef == sign
        ok = ok and cogeneration_product(mu, m) == coef
        params = {"mu": mu, "m": m}
        witness = {"coefficient": laurent_to_json(coef), "sign": sign}
        if ell is not None:
            params["ell"] = ell
            red = specialize_module(ell, res)
            ok = ok and set(red.entries) == {mu + 1} and _unit_in_quotient(coef, ell)
            witness["reduced"] = laurent_to_json(red.coefficient(mu + 1))
        cases.append(Case("qsl2.cogeneration", params, ok, witness))
    return cases


def verify_kernel_closure(mu: int, n_max: int, a_max: int, ell: int | None = None) -> list[Case]:
    """K = span{F^(n) p_mu : n > mu} is stable under every E^(a)."""
    if mu < 0:
        raise ValueError("mu must be >= 0")
    bad = []
    for n in range(mu + 1, n_max + 1):
        for a in range(0, a_max + 1):
            res = act_E_divided(a, Sl2VermaVector.basis(mu, n))
            if ell is not None:
                res = specialize_module(ell, res)
            low = [j for j in res.entries if j <= mu]
            if low:
                bad.append({"a": a, "n": n, "indices": low})
    params = {"mu": mu, "n_max": n_max, "a_max": a_max}
    if ell is not None:
        params["ell"] = ell
    return [Case("qsl2.kernel_closure", params, not bad, {"offending": bad} if bad else None)]
