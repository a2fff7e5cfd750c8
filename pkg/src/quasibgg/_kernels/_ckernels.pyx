# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse arithmetic kernels; same contracts as ``_pykernels``.

Exponent vectors are unboxed into C ``long`` buffers once per call.
Coefficients stay Python ints so arithmetic remains arbitrary precision.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef tuple _pack(long *buf, Py_ssize_t n):
    cdef tuple r = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = buf[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(r, i, v)
    return r


cdef long *_unbox(list keys, Py_ssize_t n) except NULL:
    cdef Py_ssize_t m = len(keys), i, j
    cdef long *buf = <long *> malloc((m * n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef tuple k
    for i in range(m):
        k = <tuple> keys[i]
        for j in range(n):
            buf[i * n + j] = k[j]
    return buf


def mul(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = {}
    if not a or not b:
        return out
    cdef list akeys = list(a.keys()), avals = list(a.values())
    cdef list bkeys = list(b.keys()), bvals = list(b.values())
    cdef Py_ssize_t n = len(<tuple> akeys[0])
    cdef Py_ssize_t na = len(akeys), nb = len(bkeys), i, j, s
    cdef long *abuf = _unbox(akeys, n)
    cdef long *bbuf
    cdef long *tmp
    try:
        bbuf = _unbox(bkeys, n)
    except MemoryError:
        free(abuf)
        raise
    tmp = <long *> malloc((n + 1) * sizeof(long))
    cdef object ca, c
    cdef tuple k
    try:
        for i in range(na):
            ca = avals[i]
            for j in range(nb):
                for s in range(n):
                    tmp[s] = abuf[i * n + s] + bbuf[j * n + s]
                k = _pack(tmp, n)
                c = out.get(k, 0) + ca * bvals[j]
                if c:
                    out[k] = c
                else:
                    out.pop(k, None)
    finally:
        free(abuf)
        free(bbuf)
        free(tmp)
    return out


def mul_trunc(dict a, dict b, long max_deg):
    cdef dict out = {}
    if not a or not b:
        return out
    cdef list bitems = sorted(b.items(), key=lambda kv: kv[0][0])
    cdef list bkeys = [kv[0] for kv in bitems]
    cdef list bvals = [kv[1] for kv in bitems]
    cdef list akeys = list(a.keys()), avals = list(a.values())
    cdef Py_ssize_t n = len(<tuple> akeys[0])
    cdef Py_ssize_t na = len(akeys), nb = len(bkeys), i, j, s
    cdef long *abuf = _unbox(akeys, n)
    cdef long *bbuf
    cdef long *tmp
    try:
        bbuf = _unbox(bkeys, n)
    except MemoryError:
        free(abuf)
        raise
    tmp = <long *> malloc((n + 1) * sizeof(long))
    cdef long room
    cdef object ca, c
    cdef tuple k
    try:
        for i in range(na):
            ca = avals[i]
            room = max_deg - abuf[i * n]
            for j in range(nb):
                if bbuf[j * n] > room:
                    break
                for s in range(n):
                    tmp[s] = abuf[i * n + s] + bbuf[j * n + s]
                k = _pack(tmp, n)
                c = out.get(k, 0) + ca * bvals[j]
                if c:
                    out[k] = c
                else:
                    out.pop(k, None)
    finally:
        free(abuf)
        free(bbuf)
        free(tmp)
    return out


def geom_mul(dict terms, tuple shift, long max_deg):
    cdef long step = shift[0]
    if step <= 0:
        raise ValueError("geometric shift must have positive grading")
    cdef dict out = {}
    cdef object key, c
    for key, c in terms.items():
        if (<tuple> key)[0] <= max_deg:
            out[key] = c
    if not out:
        return out
    cdef Py_ssize_t n = len(shift), s, idx
    cdef long lo = min([(<tuple> key)[0] for key in out])
    cdef Py_ssize_t nbuckets = max_deg - lo + 1
    cdef list buckets = [None] * nbuckets
    cdef list bucket
    for key in out:
        idx = <long> (<tuple> key)[0] - lo
        if buckets[idx] is None:
            buckets[idx] = []
        (<list> buckets[idx]).append(key)
    cdef long *sh = <long *> malloc(n * sizeof(long))
    cdef long *tmp = <long *> malloc(n * sizeof(long))
    cdef tuple k, nk
    cdef long deg
    cdef Py_ssize_t b
    try:
        for s in range(n):
            sh[s] = shift[s]
        for deg in range(lo, max_deg - step + 1):
            bucket = buckets[deg - lo]
            if bucket is None:
                continue
            for b in range(len(bucket)):
                k = <tuple> bucket[b]
                c = out[k]
                if not c:
                    continue
                for s in range(n):
                    tmp[s] = <long> k[s] + sh[s]
                nk = _pack(tmp, n)
                if nk in out:
                    out[nk] = out[nk] + c
                else:
                    out[nk] = c
                    idx = tmp[0] - lo
                    if buckets[idx] is None:
                        buckets[idx] = []
                    (<list> buckets[idx]).append(nk)
    finally:
        free(sh)
        free(tmp)
    return {key: c for key, c in out.items() if c}


def add_scaled(dict acc, dict b, scale=1):
    cdef object k, c, v
    for k, c in b.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def lmul(dict a, dict b):
    cdef dict out = {}
    cdef list bkeys = list(b.keys()), bvals = list(b.values())
    cdef Py_ssize_t nb = len(bkeys), j
    cdef long ea
    cdef object ca, c, e
    for e, ca in a.items():
        ea = e
        for j in range(nb):
            key = ea + <long> bkeys[j]
            c = out.get(key, 0) + ca * bvals[j]
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def poly_divmod(num, den):
    cdef list rem = list(num)
    cdef list dn = list(den)
    cdef Py_ssize_t dd = len(dn) - 1, i, j, base
    cdef object lead = dn[dd], c, q, r
    if len(rem) <= dd:
        return [], rem
    cdef list quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            return None
        base = i - dd
        quo[base] = q
        for j in range(dd + 1):
            if dn[j]:
                rem[base + j] = rem[base + j] - q * dn[j]
    return quo, rem[:dd]
