"""Characters of quasi-Verma, Weyl and sl2 simple modules.

All four quasi-Verma variants (induced or coinduced, generic or at a root
of unity) share one character, so a single function serves them.  Weyl
characters carry the alternating sign ``(-1)^l(w)`` in the W-sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .charring import (
    CharError,
    DenomFactor,
    FormalChar,
    RationalChar,
    exact_quotient,
    rc_equal,
    rc_residual,
)
from .report import Case
from .root_data import RootDatum, Weight, build_root_datum
from .weyl import WeylElement, dot_action, generate_group


@dataclass(frozen=True)
class ModuleCharSpec:
    kind: str  # "quasi_verma" | "weyl" | "simple_sl2"
    highest_weight: Weight
    w: WeylElement | None = None
    ell: int | None = None

    def __post_init__(self):
        if self.kind not in ("quasi_verma", "weyl", "simple_sl2"):
            raise CharError(f"unknown module kind {self.kind!r}")
        if self.kind == "weyl" and any(x < 0 for x in self.highest_weight):
            raise CharError("Weyl modules need a dominant highest weight")
        if self.kind == "simple_sl2" and len(self.highest_weight) != 1:
            raise CharError("simple_sl2 characters live on the rank-1 lattice")


def weyl_denominator(datum: RootDatum, scale: int = 1) -> list[DenomFactor]:
    """Factors ``1 - e^{-scale*alpha}`` over the positive roots."""
    return [DenomFactor(tuple(-scale * x for x in a)) for a in datum.positive_roots]


def quasi_verma_char(datum: RootDatum, w: WeylElement, lam: Sequence[int]) -> RationalChar:
    return RationalChar(FormalChar.monomial(dot_action(datum, w, lam)), weyl_denominator(datum))


def verma_char(datum: RootDatum, lam: Sequence[int]) -> RationalChar:
    return RationalChar(FormalChar.monomial(tuple(lam)), weyl_denominator(datum))


@dataclass(frozen=True)
class WeylCharacter:
    rational: RationalChar
    polynomial: FormalChar

    @property
    def dimension(self) -> int:
        return self.polynomial.dimension()


def _require_dominant(lam: Sequence[int]) -> None:
    if any(x < 0 for x in lam):
        raise CharError(f"weight {tuple(lam)} is not dominant")


def alternating_sum(datum: RootDatum, lam: Sequence[int]) -> FormalChar:
    """``sum_w (-1)^l(w) e^{w.lam}``."""
    W = generate_group(datum)
    return FormalChar.from_items((dot_action(datum, w, lam), 0, (-1) ** w.length) for w in W)


def weyl_char(datum: RootDatum, lam: Sequence[int]) -> WeylCharacter:
    """Weyl character as a fraction and as the Laurent polynomial it equals."""
    _require_dominant(lam)
    rational = RationalChar(alternating_sum(datum, lam), weyl_denominator(datum))
    return WeylCharacter(rational, exact_quotient(rational, datum))


def weyl_dimension(datum: RootDatum, lam: Sequence[int]) -> int:
    """``prod_{alpha>0} <lam+rho, alpha^vee> / <rho, alpha^vee>``."""
    _require_dominant(lam)
    shifted = tuple(x + r for x, r in zip(lam, datum.rho))
    out = Fraction(1)
    for a, b in zip(datum.coroot_pairings(shifted), datum.coroot_pairings(datum.rho)):
        out *= Fraction(a, b)
    assert out.denominator == 1
    return int(out)


def _dominant_conjugate(datum: RootDatum, mu: Weight) -> Weight:
    while True:
        i = next((k for k, x in enumerate(mu) if x < 0), None)
        if i is None:
            return mu
        mu = datum.reflect(i, mu)


def freudenthal_char(datum: RootDatum, lam: Sequence[int]) -> FormalChar:
    """Character of L(lam) from Freudenthal's multiplicity recursion.

    Independent of the W-sum: multiplicities are built top-down from
    ``m(mu) (|lam+rho|^2 - |mu+rho|^2) = 2 sum_{a>0} sum_{k>=1} m(mu+ka)(mu+ka, a)``.
    """
    _require_dominant(lam)
    lam = tuple(lam)
    rho = datum.rho

    def norm(x):
        return datum.inner(x, x)

    top = norm(tuple(a + b for a, b in zip(lam, rho)))
    mult: dict[Weight, int] = {lam: 1}
    level = [lam]
    while level:
        nxt: dict[Weight, None] = {}
        for mu in level:
            for a in datum.simple_roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu in mult or nu in nxt:
                    continue
                dom = _dominant_conjugate(datum, nu)
                diff = tuple(x - y for x, y in zip(lam, dom))
                c = datum.to_root_coords(diff)
                if all(x.denominator == 1 and x >= 0 for x in c):
                    nxt[nu] = None
        for nu in nxt:
            total = Fraction(0)
            for a in datum.positive_roots:
                k = 1
                while True:
                    up = tuple(x + k * y for x, y in zip(nu, a))
                    m = mult.get(up)
                    if m is None:
                        break
                    total += m * datum.inner(up, a)
                    k += 1
            gap = top - norm(tuple(x + r for x, r in zip(nu, rho)))
            val = 2 * total / gap
            assert val.denominator == 1 and val >= 0
            mult[nu] = int(val)
        level = [nu for nu in nxt if mult[nu]]
    return FormalChar.from_items((mu, 0, m) for mu, m in mult.items() if m)


# ------------------------------------------------------------ sl2 at ell

A1 = build_root_datum("A1")


def _check_ell(ell: int) -> None:
    if ell < 3 or ell % 2 == 0:
        raise CharError(f"ell must be odd and >= 3, got {ell}")


def _string(top: int) -> FormalChar:
    return FormalChar.from_items(((top - 2 * j,), 0, 1) for j in range(top + 1))


def classical_simple_sl2(m: int) -> RationalChar:
    """Simple U(sl2)-module L(m); antidominant Vermas for ``m <= -1``."""
    if m >= 0:
        return RationalChar(_string(m))
    return RationalChar(FormalChar.monomial((m,)), [DenomFactor((-2,))])


def steinberg_split(ell: int, k: int) -> tuple[int, int]:
    """``k = k0 + ell*m`` with ``0 <= k0 < ell``."""
    k0 = k % ell
    return k0, (k - k0) // ell


def simple_sl2_char(ell: int, k: int) -> RationalChar:
    """ch L(k) over U_ell(sl2) as ch L(k0) times the Frobenius twist of L(m)."""
    _check_ell(ell)
    k0, m = steinberg_split(ell, k)
    return classical_simple_sl2(m).scale_weights(ell) * _string(k0)


def sl2_quasi_verma(w_is_s: bool, mu: int) -> RationalChar:
    W = generate_group(A1)
    return quasi_verma_char(A1, W[1] if w_is_s else W[0], (mu,))


def sl2_weyl(mu: int) -> RationalChar:
    return weyl_char(A1, (mu,)).rational


def _case(identity_id: str, params: dict, lhs: RationalChar, rhs: RationalChar) -> Case:
    ok = rc_equal(lhs, rhs, A1)
    witness = None
    if not ok:
        from .serialize import rational_to_json

        witness = {"residual": rational_to_json(rc_residual(lhs, rhs))}
    return Case(identity_id, params, ok, witness)


def sl2_filtration_cases(ell: int, k: int) -> list[Case]:
    """The four filtration identities for quasi-Vermas at weight ``k*ell``.

    ``k = 0`` gives the identities for ``M^e(0)`` and ``M^s(s.0)``.
    """
    L = lambda x: simple_sl2_char(ell, x)  # noqa: E731
    p = {"ell": ell, "k": k}
    if k == 0:
        return [
            _case("sl2.filtration.i", p, sl2_quasi_verma(False, 0), L(0) + L(-2) + L(-2 * ell)),
            _case("sl2.filtration.iii", p, sl2_quasi_verma(True, 0), L(-2) + L(-2 * ell)),
        ]
    kl = k * ell
    return [
        _case("sl2.filtration.ii", p, sl2_quasi_verma(False, kl),
              L(kl) + L(kl - 2) + L(-kl - 2) + L(-(k + 2) * ell)),
        _case("sl2.filtration.iv", p, sl2_quasi_verma(True, kl), L(-kl - 2) + L(-(k + 2) * ell)),
        _case("sl2.weyl_composition", p, sl2_weyl(kl), L(kl) + L(kl - 2)),
    ]


def sl2_exact_sequence_case(ell: int, mu: int) -> Case:
    """``ch M^e(mu) = ch M^s(s.mu) + ch W(mu)``."""
    return _case("sl2.exact_sequence", {"ell": ell, "mu": mu},
                 sl2_quasi_verma(False, mu), sl2_quasi_verma(True, mu) + sl2_weyl(mu))


def verify_sl2_filtration_identities(ell: int, k_max: int) -> list[Case]:
    _check_ell(ell)
    if k_max < 1:
        raise CharError("k_max must be >= 1")
    cases: list[Case] = []
    for k in range(0, k_max + 1):
        cases.extend(sl2_filtration_cases(ell, k))
    for mu in range(0, k_max * ell + 1):
        cases.append(sl2_exact_sequence_case(ell, mu))
    return cases
