"""Formal character ring Z[X][t, 1/t] and its rational fractions.

``FormalChar`` stores monomials ``e^wt t^d`` under flat integer keys
``(*wt, d)``.  ``RationalChar`` is a numerator over a multiset of factors
``(1 - e^mu t^d)``; every ``mu`` must have strictly negative height so the
geometric expansion in decreasing weights converges monomial-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from . import _kernels as K
from .root_data import RootDatum, Weight


class CharError(ValueError):
    pass


class FormalChar:
    """Finitely supported Z-combination of ``e^wt t^d``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def from_items(cls, items: Iterable[tuple[Sequence[int], int, int]]) -> "FormalChar":
        """Build from ``(weight, t_degree, coef)`` triples, summing repeats."""
        acc: dict[tuple[int, ...], int] = {}
        for wt, t, c in items:
            k = tuple(wt) + (t,)
            acc[k] = acc.get(k, 0) + c
        return cls(acc)

    @classmethod
    def monomial(cls, wt: Sequence[int], t: int = 0, coef: int = 1) -> "FormalChar":
        return cls({tuple(wt) + (t,): coef})

    @classmethod
    def one(cls, rank: int) -> "FormalChar":
        return cls.monomial((0,) * rank)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return self._terms

    def items(self) -> Iterator[tuple[Weight, int, int]]:
        """``(weight, t_degree, coef)`` in sorted key order."""
        for k in sorted(self._terms):
            yield k[:-1], k[-1], self._terms[k]

    def coefficient(self, wt: Sequence[int], t: int = 0) -> int:
        return self._terms.get(tuple(wt) + (t,), 0)

    def t_polynomial(self, wt: Sequence[int]) -> dict[int, int]:
        """The coefficient of ``e^wt`` as ``{t_degree: coef}``."""
        wt = tuple(wt)
        n = len(wt)
        return {k[-1]: c for k, c in self._terms.items() if k[:n] == wt}

    def weights(self) -> set[Weight]:
        return {k[:-1] for k in self._terms}

    def dimension(self) -> int:
        """Sum of coefficients (``e^alpha -> 1``, ``t -> 1``)."""
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalChar):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "FormalChar") -> "FormalChar":
        return FormalChar(K.add_scaled(dict(self._terms), other._terms, 1))

    def __sub__(self, other: "FormalChar") -> "FormalChar":
        return FormalChar(K.add_scaled(dict(self._terms), other._terms, -1))

    def __neg__(self) -> "FormalChar":
        return FormalChar({k: -c for k, c in self._terms.items()})

    def __mul__(self, other) -> "FormalChar":
        if isinstance(other, int):
            return FormalChar({k: c * other for k, c in self._terms.items()})
        return FormalChar(K.mul(self._terms, other._terms))

    __rmul__ = __mul__

    def shift(self, wt: Sequence[int], t: int = 0) -> "FormalChar":
        """Multiply by the monomial ``e^wt t^d``."""
        s = tuple(wt) + (t,)
        return FormalChar({tuple(a + b for a, b in zip(k, s)): c for k, c in self._terms.items()})

    def map_weights(self, f) -> "FormalChar":
        return FormalChar.from_items((f(wt), t, c) for wt, t, c in self.items())

    def scale_weights(self, factor: int) -> "FormalChar":
        """Frobenius-type rescaling ``e^wt -> e^{factor * wt}``."""
        return self.map_weights(lambda wt: tuple(factor * x for x in wt))

    def at_t(self, t_value: int = 1) -> "FormalChar":
        """Specialise the grading variable; all t-degrees collapse to 0."""
        return FormalChar.from_items((wt, 0, c * t_value**t) for wt, t, c in self.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalChar(0)"
        parts = []
        for wt, t, c in self.items():
            mono = f"e^{list(wt)}" + (f" t^{t}" if t else "")
            parts.append(f"{c}*{mono}")
        return "FormalChar(" + " + ".join(parts) + ")"


@dataclass(frozen=True, order=True)
class DenomFactor:
    """The factor ``(1 - e^shift_weight t^t_degree)^multiplicity``."""

    shift_weight: Weight
    t_degree: int = 0
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise CharError("denominator multiplicity must be positive")
        object.__setattr__(self, "shift_weight", tuple(self.shift_weight))

    @property
    def base(self) -> tuple[Weight, int]:
        return self.shift_weight, self.t_degree

    def polynomial(self) -> FormalChar:
        one = FormalChar.one(len(self.shift_weight))
        lin = one - FormalChar.monomial(self.shift_weight, self.t_degree)
        out = one
        for _ in range(self.multiplicity):
            out = out * lin
        return out


def _canonical_denominator(factors: Iterable[DenomFactor]) -> tuple[DenomFactor, ...]:
    acc: dict[tuple[Weight, int], int] = {}
    for f in factors:
        acc[f.base] = acc.get(f.base, 0) + f.multiplicity
    return tuple(DenomFactor(w, t, m) for (w, t), m in sorted(acc.items()))


class RationalChar:
    """``numerator / prod(1 - e^mu t^d)``; equality is by cross-multiplication."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: FormalChar, denominator: Iterable[DenomFactor] = ()):
        self.numerator = numerator
        self.denominator = _canonical_denominator(denominator)
        for f in self.denominator:
            if not any(f.shift_weight):
                raise CharError("denominator factor with zero weight has height 0")

    @classmethod
    def polynomial(cls, c: FormalChar) -> "RationalChar":
        return cls(c, ())

    def _den_map(self) -> dict[tuple[Weight, int], int]:
        return {f.base: f.multiplicity for f in self.denominator}

    def validate(self, datum: RootDatum) -> None:
        for f in self.denominator:
            if datum.rational_height(f.shift_weight) >= 0:
                raise CharError(f"denominator weight {f.shift_weight} has nonnegative height")

    def __add__(self, other: "RationalChar") -> "RationalChar":
        return _combine(self, other, 1)

    def __sub__(self, other: "RationalChar") -> "RationalChar":
        return _combine(self, other, -1)

    def __neg__(self) -> "RationalChar":
        return RationalChar(-self.numerator, self.denominator)

    def __mul__(self, other) -> "RationalChar":
        if isinstance(other, int):
            return RationalChar(self.numerator * other, self.denominator)
        if isinstance(other, FormalChar):
            return RationalChar(self.numerator * other, self.denominator)
        return RationalChar(self.numerator * other.numerator, self.denominator + other.denominator)

    __rmul__ = __mul__

    def shift(self, wt: Sequence[int], t: int = 0) -> "RationalChar":
        return RationalChar(self.numerator.shift(wt, t), self.denominator)

    def scale_weights(self, factor: int) -> "RationalChar":
        return RationalChar(
            self.numerator.scale_weights(factor),
            [DenomFactor(tuple(factor * x for x in f.shift_weight), f.t_degree, f.multiplicity)
             for f in self.denominator],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalChar):
            return NotImplemented
        return rc_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        den = " ".join(
            f"(1-e^{list(f.shift_weight)}" + (f"t^{f.t_degree}" if f.t_degree else "") + ")"
            + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
            for f in self.denominator
        )
        return f"RationalChar({self.numerator!r} / [{den}])"


def _product(factors: Mapping[tuple[Weight, int], int], rank: int) -> FormalChar:
    out = FormalChar.one(rank)
    for (w, t), m in sorted(factors.items()):
        if m > 0:
            out = out * DenomFactor(w, t, m).polynomial()
    return out


def _rank_of(*chars: RationalChar) -> int:
    for c in chars:
        for k in c.numerator.terms:
            return len(k) - 1
        for f in c.denominator:
            return len(f.shift_weight)
    return 0


def _lift(a: RationalChar, union: Mapping[tuple[Weight, int], int], rank: int) -> FormalChar:
    """Numerator of ``a`` rewritten over the denominator ``union``."""
    mine = a._den_map()
    extra = {k: m - mine.get(k, 0) for k, m in union.items()}
    return a.numerator * _product(extra, rank) if any(extra.values()) else a.numerator


def _union(*chars: RationalChar) -> dict[tuple[Weight, int], int]:
    out: dict[tuple[Weight, int], int] = {}
    for c in chars:
        for f in c.denominator:
            out[f.base] = max(out.get(f.base, 0), f.multiplicity)
    return out


def _combine(a: RationalChar, b: RationalChar, sign: int) -> RationalChar:
    if a.denominator == b.denominator:
        num = a.numerator + b.numerator if sign > 0 else a.numerator - b.numerator
        return RationalChar(num, a.denominator)
    rank = _rank_of(a, b)
    union = _union(a, b)
    na, nb = _lift(a, union, rank), _lift(b, union, rank)
    num = na + nb if sign > 0 else na - nb
    return RationalChar(num, [DenomFactor(w, t, m) for (w, t), m in union.items()])


def rc_sum(chars: Iterable[RationalChar], signs: Iterable[int] | None = None) -> RationalChar:
    """Signed sum over the union of all denominators."""
    chars = list(chars)
    signs = [1] * len(chars) if signs is None else list(signs)
    if not chars:
        raise CharError("empty sum has no rank")
    rank = _rank_of(*chars)
    union = _union(*chars)
    acc: dict[tuple[int, ...], int] = {}
    for c, s in zip(chars, signs):
        K.add_scaled(acc, _lift(c, union, rank).terms, s)
    return RationalChar(FormalChar(acc), [DenomFactor(w, t, m) for (w, t), m in union.items()])


def rc_equal(a: RationalChar, b: RationalChar, datum: RootDatum | None = None) -> bool:
    """Exact equality of rational characters.

    Both numerators are lifted to the union of the two denominators and
    compared as Laurent polynomials.  With ``datum`` the negative-height
    invariant of every factor is checked first.
    """
    if datum is not None:
        a.validate(datum)
        b.validate(datum)
    if a.denominator == b.denominator:
        return a.numerator == b.numerator
    rank = _rank_of(a, b)
    union = _union(a, b)
    return _lift(a, union, rank) == _lift(b, union, rank)


def rc_residual(a: RationalChar, b: RationalChar) -> RationalChar:
    """``a - b`` over the union denominator (zero numerator iff equal)."""
    return a - b


# ---------------------------------------------------------------- expansion

def _graded_keys(c: FormalChar, datum: RootDatum, top: Weight) -> dict[tuple[int, ...], int]:
    """Prefix each key with the height drop ``hgt(top - wt)``."""
    h, D = datum.height_functional
    ht = sum(a * b for a, b in zip(h, top))
    out = {}
    for k, coef in c.terms.items():
        num = ht - sum(a * b for a, b in zip(h, k))
        if num % D:
            raise CharError("numerator weights do not lie in one root-lattice coset")
        out[(num // D,) + k] = coef
    return out


def _shift_key(f: DenomFactor, datum: RootDatum) -> tuple[int, ...]:
    h, D = datum.height_functional
    num = -sum(a * b for a, b in zip(h, f.shift_weight))
    if num <= 0:
        raise CharError(f"denominator weight {f.shift_weight} has nonnegative height")
    if num % D:
        raise CharError(f"denominator weight {f.shift_weight} is not in the root lattice")
    return (num // D,) + tuple(f.shift_weight) + (f.t_degree,)


def top_weight(c: FormalChar, datum: RootDatum) -> Weight:
    if not c:
        raise CharError("zero character has no top weight")
    h, _ = datum.height_functional
    return max(c.weights(), key=lambda w: (sum(a * b for a, b in zip(h, w)), w))


def expand_truncated(c: RationalChar, datum: RootDatum, max_height: int,
                     top: Weight | None = None) -> FormalChar:
    """Geometric-series expansion keeping monomials within ``max_height``
    of the top numerator weight."""
    if max_height < 0:
        raise CharError("max_height must be nonnegative")
    shifts = [(_shift_key(f, datum), f.multiplicity) for f in c.denominator]
    if not c.numerator:
        return FormalChar()
    if top is None:
        top = top_weight(c.numerator, datum)
    work = _graded_keys(c.numerator, datum, top)
    for shift, m in shifts:
        for _ in range(m):
            work = K.geom_mul(work, shift, max_height)
    return FormalChar({k[1:]: v for k, v in work.items() if k[0] <= max_height})


def truncate(c: FormalChar, datum: RootDatum, top: Weight, max_height: int) -> FormalChar:
    graded = _graded_keys(c, datum, top)
    return FormalChar({k[1:]: v for k, v in graded.items() if k[0] <= max_height})


def exact_quotient(c: RationalChar, datum: RootDatum) -> FormalChar:
    """The Laurent polynomial equal to ``c``; raises if ``c`` is not one.

    Expands far enough that any polynomial quotient is fully captured,
    then verifies by multiplying back.
    """
    if not c.denominator:
        return c.numerator
    if not c.numerator:
        return FormalChar()
    top = top_weight(c.numerator, datum)
    graded = _graded_keys(c.numerator, datum, top)
    # lowest-height part of q*D is (lowest of q)*(lowest of D), never zero
    span = max(k[0] for k in graded)
    for f in c.denominator:
        span -= _shift_key(f, datum)[0] * f.multiplicity
    if span < 0:
        raise CharError("rational character is not a Laurent polynomial")
    q = expand_truncated(c, datum, span, top=top)
    if not rc_equal(RationalChar(q), c):
        raise CharError("rational character is not a Laurent polynomial")
    return q


# ---------------------------------------------------------------- Laurent

class LaurentInt:
    """Element of Z[v, 1/v] as ``{exponent: coef}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "LaurentInt":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentInt":
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def _coerce(self, other) -> "LaurentInt":
        return LaurentInt.const(other) if isinstance(other, int) else other

    def __add__(self, other) -> "LaurentInt":
        return LaurentInt(K.add_scaled(dict(self._c), self._coerce(other)._c, 1))

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentInt":
        return LaurentInt(K.add_scaled(dict(self._c), self._coerce(other)._c, -1))

    def __rsub__(self, other) -> "LaurentInt":
        return self._coerce(other) - self

    def __neg__(self) -> "LaurentInt":
        return LaurentInt({e: -c for e, c in self._c.items()})

    def __mul__(self, other) -> "LaurentInt":
        if isinstance(other, int):
            return LaurentInt({e: c * other for e, c in self._c.items()})
        return LaurentInt(K.lmul(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if n < 0:
            raise ValueError("negative powers only exist for monomials")
        out = LaurentInt.const(1)
        for _ in range(n):
            out = out * self
        return out

    def divmod_poly(self, other: "LaurentInt") -> tuple["LaurentInt", "LaurentInt"] | None:
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentInt(), LaurentInt()
        lo_a, lo_b = min(self._c), min(other._c)
        a = _dense(self._c, lo_a)
        b = _dense(other._c, lo_b)
        res = K.poly_divmod(a, b)
        if res is None:
            return None
        q, r = res
        shift = lo_a - lo_b
        return (LaurentInt({i + shift: c for i, c in enumerate(q)}),
                LaurentInt({i + lo_a: c for i, c in enumerate(r)}))

    def exact_div(self, other: "LaurentInt") -> "LaurentInt":
        """Quotient in Z[v, 1/v]; raises when ``other`` does not divide ``self``."""
        res = self.divmod_poly(other)
        if res is None or res[1]:
            raise CharError(f"{other} does not divide {self} in Z[v, 1/v]")
        return res[0]

    def evaluate(self, v) -> object:
        return sum(c * v**e for e, c in self._c.items())

    def bar(self) -> "LaurentInt":
        """The involution ``v -> 1/v``."""
        return LaurentInt({-e: c for e, c in self._c.items()})

    def is_unit(self) -> bool:
        """Units of Z[v, 1/v] are exactly ``+-v^k``."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def degree_range(self) -> tuple[int, int]:
        return min(self._c), max(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            parts.append(f"{c}" if e == 0 else f"{c}*v^{e}")
        return " + ".join(parts)


def _dense(c: Mapping[int, int], lo: int) -> list[int]:
    hi = max(c)
    return [c.get(e, 0) for e in range(lo, hi + 1)]


def quantum_integer(n: int) -> LaurentInt:
    """``[n] = (v^n - v^-n)/(v - v^-1)``, with ``[-n] = -[n]``."""
    if n == 0:
        return LaurentInt()
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentInt({n - 1 - 2 * j: sign for j in range(n)})


def quantum_factorial(n: int) -> LaurentInt:
    out = LaurentInt.const(1)
    for s in range(1, n + 1):
        out = out * quantum_integer(s)
    return out


@lru_cache(maxsize=4096)
def qbinom(m: int, n: int) -> LaurentInt:
    """Gaussian binomial ``prod_{s=1}^{n} [m-s+1]/[s]`` for any integer ``m``."""
    if n < 0:
        raise CharError("lower entry of a Gaussian binomial must be >= 0")
    num = LaurentInt.const(1)
    for s in range(1, n + 1):
        num = num * quantum_integer(m - s + 1)
    return num.exact_div(quantum_factorial(n))


def laurent_qbinom(m: int, n: int) -> LaurentInt:
    if not 0 <= n <= m:
        raise CharError(f"need 0 <= n <= m, got m={m}, n={n}")
    return qbinom(m, n)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise CharError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            res = K.poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert res is not None and not any(res[1])
            poly = res[0]
    return tuple(poly)


def cyclotomic_reduce(x: LaurentInt, ell: int) -> LaurentInt:
    """Canonical representative of ``x`` in Z[v, 1/v]/(Phi_ell).

    ``v^ell = 1`` in the quotient, so exponents fold mod ``ell`` before the
    monic division by Phi_ell; the result has degree below phi(ell).
    """
    if ell < 1:
        raise CharError("ell must be positive")
    folded: dict[int, int] = {}
    for e, c in x.coeffs.items():
        r = e % ell
        folded[r] = folded.get(r, 0) + c
    if not any(folded.values()):
        return LaurentInt()
    dense = [folded.get(e, 0) for e in range(max(folded) + 1)]
    phi = list(cyclotomic_polynomial(ell))
    res = K.poly_divmod(dense, phi)
    assert res is not None  # Phi is monic
    rem = res[1]
    return LaurentInt({e: c for e, c in enumerate(rem) if c})
