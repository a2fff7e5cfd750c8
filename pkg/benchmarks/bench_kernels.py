"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from quasibgg import _kernels
from quasibgg._kernels import pykernels
from quasibgg.charring import DenomFactor, FormalChar, RationalChar, _graded_keys, _shift_key
from quasibgg.root_data import build_root_datum


def _workloads():
    B3 = build_root_datum("B3")
    # a Weyl-denominator product: the heaviest thing rc_equal does
    dens = [DenomFactor(tuple(-x for x in a)).polynomial().terms for a in B3.positive_roots]

    def product(k):
        out = FormalChar.one(3).terms
        for d in dens:
            out = k.mul(out, d)
        return out

    # truncated geometric expansion of a quasi-Verma-like character
    c = RationalChar(FormalChar.monomial((0, 0, 0)), [DenomFactor(tuple(-x for x in a)) for a in B3.positive_roots])
    seed = _graded_keys(c.numerator, B3, (0, 0, 0))
    shifts = [_shift_key(f, B3) for f in c.denominator]

    def expansion(k):
        work = seed
        for s in shifts:
            work = k.geom_mul(work, s, 14)
        return work

    big = [(-1) ** i * (i + 1) for i in range(400)]
    div = [1, 0, 1, 1]

    def division(k):
        return k.poly_divmod(big, div)

    a = {e: e % 7 - 3 for e in range(-60, 60)}

    def laurent(k):
        return k.lmul(a, a)

    return {"denominator product (B3)": product, "geometric expansion (B3, h=14)": expansion,
            "poly division (deg 400)": division, "Laurent multiply (120 terms)": laurent}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels.ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    backends = [("python", pykernels)] + ([("cython", _kernels.ckernels)] if _kernels.ckernels else [])
    print(f"{'workload':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in _workloads().items():
        results = [fn(k) for _, k in backends]
        assert all(r == results[0] for r in results[1:]), label
        times = [min(timeit.repeat(lambda k=k: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        row = f"{label:34s}" + "".join(f"{t * 1000:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
