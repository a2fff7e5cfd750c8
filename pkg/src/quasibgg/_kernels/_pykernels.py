"""Pure-Python sparse arithmetic kernels.

Multivariate terms are dicts mapping integer tuples (exponent vectors) to
Python ints.  Truncated routines treat slot 0 of every key as the grading
and keep only keys with ``key[0] <= max_deg``.  Laurent routines use dicts
mapping a single integer exponent to a coefficient.
"""

from collections import defaultdict
from operator import add

BACKEND = "python"


def mul(a, b):
    """Exact product of two sparse polynomials."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = tuple(map(add, ka, kb))
            c = out.get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def mul_trunc(a, b, max_deg):
    """Product keeping only keys whose grading slot is at most ``max_deg``."""
    bitems = sorted(b.items(), key=lambda kv: kv[0][0])
    out = {}
    for ka, ca in a.items():
        room = max_deg - ka[0]
        for kb, cb in bitems:
            if kb[0] > room:
                break
            k = tuple(map(add, ka, kb))
            c = out.get(k, 0) + ca * cb
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def geom_mul(terms, shift, max_deg):
    """Multiply by ``1/(1 - x^shift)`` expanded as a geometric series.

    ``shift[0]`` must be positive so that only finitely many monomials
    land at grading ``<= max_deg``.
    """
    step = shift[0]
    if step <= 0:
        raise ValueError("geometric shift must have positive grading")
    out = {k: c for k, c in terms.items() if k[0] <= max_deg}
    if not out:
        return out
    buckets = defaultdict(list)
    for k in out:
        buckets[k[0]].append(k)
    lo = min(buckets)
    for deg in range(lo, max_deg - step + 1):
        keys = buckets.get(deg)
        if not keys:
            continue
        for k in keys:
            c = out[k]
            if not c:
                continue
            nk = tuple(map(add, k, shift))
            if nk in out:
                out[nk] += c
            else:
                out[nk] = c
                buckets[nk[0]].append(nk)
    return {k: c for k, c in out.items() if c}


def add_scaled(acc, b, scale=1):
    """In-place ``acc += scale * b``; zero coefficients are removed."""
    for k, c in b.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def lmul(a, b):
    """Product of Laurent polynomials given as ``{exponent: coef}``."""
    out = {}
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            e = ea + eb
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def poly_divmod(num, den):
    """Long division of dense integer polynomials (lowest degree first).

    Returns ``(quotient, remainder)`` or ``None`` when some step needs a
    non-integral quotient coefficient.  ``den`` must have a nonzero top
    coefficient.
    """
    rem = list(num)
    dd = len(den) - 1
    lead = den[dd]
    if len(rem) <= dd:
        return [], rem
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            return None
        quo[i - dd] = q
        base = i - dd
        for j in range(dd + 1):
            if den[j]:
                rem[base + j] -= q * den[j]
    return quo, rem[:dd]
