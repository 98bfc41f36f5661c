# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot loops (hub evaluation and reduction to
the dominant chamber).

Arithmetic is 64-bit with magnitude guards: any input or intermediate value
outside the safe range raises OverflowError, which tells the dispatcher in
``kernel`` to redo the call with the arbitrary-precision pure-Python twin.
"""

from libc.stdint cimport int64_t

cdef enum:
    MAXN = 64

cdef int64_t CAP = (<int64_t>1) << 51
cdef int64_t ACAP = 8


cdef int _load(tuple xs, int64_t *out, Py_ssize_t n, int64_t cap) except -1:
    cdef Py_ssize_t i
    cdef int64_t val
    for i in range(n):
        val = xs[i]
        if val > cap or val < -cap:
            raise OverflowError("value outside compiled-kernel range")
        out[i] = val
    return 0


def hub(tuple a_flat, tuple lam, tuple b):
    cdef Py_ssize_t n = len(lam)
    cdef Py_ssize_t i, j
    cdef int64_t a[MAXN * MAXN]
    cdef int64_t lm[MAXN]
    cdef int64_t bb[MAXN]
    cdef int64_t acc
    if n > MAXN or len(b) != n or len(a_flat) != n * n:
        raise OverflowError("dimension outside compiled-kernel range")
    _load(a_flat, a, n * n, ACAP)
    _load(lam, lm, n, CAP)
    _load(b, bb, n, CAP)
    out = []
    for i in range(n):
        acc = 0
        for j in range(n):
            acc += a[i * n + j] * bb[j]
        out.append(lm[i] - acc)
    return tuple(out)


def dominant_reduce(tuple a_flat, tuple lam, tuple b, bint want_word=False):
    cdef Py_ssize_t n = len(lam)
    cdef Py_ssize_t i, j
    cdef int64_t a[MAXN * MAXN]
    cdef int64_t lm[MAXN]
    cdef int64_t bb[MAXN]
    cdef int64_t th[MAXN]
    cdef int64_t acc, t
    if n > MAXN or len(b) != n or len(a_flat) != n * n:
        raise OverflowError("dimension outside compiled-kernel range")
    _load(a_flat, a, n * n, ACAP)
    _load(lam, lm, n, CAP)
    _load(b, bb, n, CAP)
    for i in range(n):
        acc = 0
        for j in range(n):
            acc += a[i * n + j] * bb[j]
        th[i] = lm[i] - acc
    word = [] if want_word else None
    while True:
        i = -1
        for j in range(n):
            if th[j] < 0:
                i = j
                break
        if i < 0:
            break
        t = th[i]
        bb[i] += t
        if bb[i] > CAP or bb[i] < -CAP:
            raise OverflowError("content outside compiled-kernel range")
        for j in range(n):
            th[j] -= a[j * n + i] * t
        if want_word:
            word.append(i)
    res = []
    for i in range(n):
        res.append(bb[i])
    return tuple(res), (tuple(word) if want_word else None)
