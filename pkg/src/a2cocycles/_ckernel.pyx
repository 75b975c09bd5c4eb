# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclotomic coefficient kernels.

Same API as ``_pykernel``.  Operands whose coordinates fit in 28 bits take a
machine-integer path (64-bit products, 128-bit reduction); anything larger
defers to the pure-Python implementation.
"""

from a2cocycles import _pykernel

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object, int*) except? -1

cdef enum:
    MAXD = 32
cdef long long LIM = 1LL << 28
cdef int128 OUTLIM = (<int128>1) << 62


cdef inline bint _load(object t, long long* buf, Py_ssize_t d) except -1:
    cdef Py_ssize_t i
    cdef int overflow = 0
    cdef long long v
    for i in range(d):
        v = PyLong_AsLongLongAndOverflow(t[i], &overflow)
        if overflow or v >= LIM or v <= -LIM:
            return False
        buf[i] = v
    return True


cdef inline unsigned long long _gcd(unsigned long long a, unsigned long long b) nogil:
    cdef unsigned long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef object _pack(int128* out, Py_ssize_t d, int128 den):
    cdef unsigned long long g
    cdef Py_ssize_t t
    cdef int128 v
    for t in range(d):
        v = out[t]
        if v >= OUTLIM or v <= -OUTLIM:
            return None
    if den >= OUTLIM:
        return None
    g = <unsigned long long>den
    for t in range(d):
        if g == 1:
            break
        v = out[t]
        if v < 0:
            v = -v
        g = _gcd(g, <unsigned long long>v)
    if g > 1:
        for t in range(d):
            out[t] = out[t] / <int128>g
        den = den / <int128>g
    return tuple([<long long>out[t] for t in range(d)]), <long long>den


def normalize(num, den):
    return _pykernel.normalize(num, den)


def add(tuple an, object ad, tuple bn, object bd):
    cdef Py_ssize_t d = len(an), t
    cdef long long a[MAXD]
    cdef long long b[MAXD]
    cdef int128 out[MAXD]
    cdef long long da[1]
    cdef long long db[1]
    if d > MAXD or not _load(an, a, d) or not _load(bn, b, d):
        return _pykernel.add(an, ad, bn, bd)
    if not _load((ad,), da, 1) or not _load((bd,), db, 1):
        return _pykernel.add(an, ad, bn, bd)
    if da[0] == db[0]:
        for t in range(d):
            out[t] = <int128>a[t] + b[t]
        res = _pack(out, d, da[0])
    else:
        for t in range(d):
            out[t] = <int128>a[t] * db[0] + <int128>b[t] * da[0]
        res = _pack(out, d, <int128>da[0] * db[0])
    if res is None:
        return _pykernel.add(an, ad, bn, bd)
    return res


def sub(tuple an, object ad, tuple bn, object bd):
    return add(an, ad, tuple([-x for x in bn]), bd)


def mul(tuple an, object ad, tuple bn, object bd, tuple red):
    cdef Py_ssize_t d = len(an), i, j, k, t
    cdef long long a[MAXD]
    cdef long long b[MAXD]
    cdef long long da[1]
    cdef long long db[1]
    cdef int128 raw[2 * MAXD]
    cdef int128 c
    cdef tuple row
    if d > MAXD or not _load(an, a, d) or not _load(bn, b, d):
        return _pykernel.mul(an, ad, bn, bd, red)
    if not _load((ad,), da, 1) or not _load((bd,), db, 1):
        return _pykernel.mul(an, ad, bn, bd, red)
    for k in range(2 * d - 1):
        raw[k] = 0
    for i in range(d):
        if a[i]:
            for j in range(d):
                raw[i + j] += <int128>a[i] * b[j]
    for k in range(d, 2 * d - 1):
        c = raw[k]
        if c:
            row = <tuple>red[k - d]
            for t in range(d):
                raw[t] += c * <long long>row[t]
    res = _pack(raw, d, <int128>da[0] * db[0])
    if res is None:
        return _pykernel.mul(an, ad, bn, bd, red)
    return res


def dot(pairs, Py_ssize_t d, tuple red):
    acc_n = (0,) * d
    acc_d = 1
    for (an, ad), (bn, bd) in pairs:
        pn, pd = mul(an, ad, bn, bd, red)
        acc_n, acc_d = add(acc_n, acc_d, pn, pd)
    return acc_n, acc_d
