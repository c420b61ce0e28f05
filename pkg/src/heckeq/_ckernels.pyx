# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Same contracts as ``heckeq._pykernels``.  Integer inputs run on checked
64-bit arithmetic; any overflow (or non-int input) reruns the call on Python
objects, so results are always exact.
"""

from libc.limits cimport LLONG_MIN
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int hq_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int hq_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int hq_mul_ovf(long long a, long long b, long long *r) nogil
    int hq_add_ovf(long long a, long long b, long long *r) nogil


cdef bint _load(list xs, Py_ssize_t n, long long *out):
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = xs[i]
        if type(v) is not int:
            return False
        try:
            out[i] = v
        except OverflowError:
            return False
    return True


cdef list _dump(long long *buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


def conv(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b), m, i, j, k, lo, hi
    cdef long long *A
    cdef long long *B
    cdef long long *C
    cdef long long acc, t
    cdef bint ok
    if la == 0 or lb == 0 or n <= 0:
        return []
    m = min(n, la + lb - 1)
    A = <long long *> malloc(la * sizeof(long long))
    B = <long long *> malloc(lb * sizeof(long long))
    C = <long long *> malloc(m * sizeof(long long))
    if A == NULL or B == NULL or C == NULL:
        free(A); free(B); free(C)
        raise MemoryError()
    try:
        ok = _load(a, la, A) and _load(b, lb, B)
        if ok:
            with nogil:
                for k in range(m):
                    acc = 0
                    lo = k - lb + 1
                    if lo < 0:
                        lo = 0
                    hi = k if k < la - 1 else la - 1
                    for i in range(lo, hi + 1):
                        if A[i] == 0:
                            continue
                        if hq_mul_ovf(A[i], B[k - i], &t) or hq_add_ovf(acc, t, &acc):
                            ok = False
                            break
                    if not ok:
                        break
                    C[k] = acc
            if ok:
                return _dump(C, m)
    finally:
        free(A); free(B); free(C)
    return _conv_obj(a, b, m)


cdef list _conv_obj(list a, list b, Py_ssize_t m):
    cdef list nza = [], nzb = [], out
    cdef Py_ssize_t i, j, li, lim
    cdef object ai, v
    for i in range(min(len(a), m)):
        v = a[i]
        if v:
            nza.append((i, v))
    for i in range(min(len(b), m)):
        v = b[i]
        if v:
            nzb.append((i, v))
    if len(nza) > len(nzb):
        nza, nzb = nzb, nza
    out = [0] * m
    for li, ai in nza:
        lim = m - li
        for j, v in nzb:
            if j >= lim:
                break
            out[li + j] = out[li + j] + ai * v
    return out


def inv_unit(list a, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), i, k, cnt = 0
    cdef long long *A
    cdef long long *Y
    cdef Py_ssize_t *idx
    cdef long long acc, t, a0
    cdef bint ok
    if a[0] != 1 and a[0] != -1:
        raise ValueError("leading coefficient must be +-1")
    if n <= 0:
        return []
    A = <long long *> malloc(la * sizeof(long long))
    Y = <long long *> malloc(n * sizeof(long long))
    idx = <Py_ssize_t *> malloc(la * sizeof(Py_ssize_t))
    if A == NULL or Y == NULL or idx == NULL:
        free(A); free(Y); free(idx)
        raise MemoryError()
    try:
        ok = _load(a, la, A)
        if ok:
            a0 = A[0]
            for i in range(1, min(la, n)):
                if A[i] != 0:
                    idx[cnt] = i
                    cnt += 1
            with nogil:
                Y[0] = a0
                for k in range(1, n):
                    acc = 0
                    for i in range(cnt):
                        if idx[i] > k:
                            break
                        if hq_mul_ovf(A[idx[i]], Y[k - idx[i]], &t) or hq_add_ovf(acc, t, &acc):
                            ok = False
                            break
                    if not ok:
                        break
                    if a0 == -1:
                        Y[k] = acc
                    elif acc == LLONG_MIN:
                        ok = False
                        break
                    else:
                        Y[k] = -acc
            if ok:
                return _dump(Y, n)
    finally:
        free(A); free(Y); free(idx)
    return _inv_obj(a, n)


cdef list _inv_obj(list a, Py_ssize_t n):
    cdef list nz = [], out
    cdef Py_ssize_t i, k
    cdef object a0 = a[0], acc, v
    for i in range(1, min(len(a), n)):
        v = a[i]
        if v:
            nz.append((i, v))
    out = [0] * n
    out[0] = a0
    for k in range(1, n):
        acc = 0
        for i, v in nz:
            if i > k:
                break
            acc = acc + v * out[k - i]
        out[k] = -a0 * acc
    return out


def geom_div(list x, object c, Py_ssize_t d, Py_ssize_t n):
    cdef Py_ssize_t lx = min(len(x), n), e
    cdef long long *Y
    cdef long long cc, t
    cdef bint ok = type(c) is int
    cdef list y
    if n <= 0:
        return []
    if ok:
        try:
            cc = c
        except OverflowError:
            ok = False
    if ok:
        Y = <long long *> malloc(n * sizeof(long long))
        if Y == NULL:
            raise MemoryError()
        try:
            ok = _load(x, lx, Y)
            if ok:
                with nogil:
                    for e in range(lx, n):
                        Y[e] = 0
                    for e in range(d, n):
                        if Y[e - d] == 0:
                            continue
                        if hq_mul_ovf(cc, Y[e - d], &t) or hq_add_ovf(Y[e], t, &Y[e]):
                            ok = False
                            break
                if ok:
                    return _dump(Y, n)
        finally:
            free(Y)
    y = list(x[:n])
    if len(y) < n:
        y.extend([0] * (n - len(y)))
    for e in range(d, n):
        v = y[e - d]
        if v:
            y[e] = y[e] + c * v
    return y


def shift_axpy(list y, list x, object c, Py_ssize_t d):
    cdef Py_ssize_t ly = len(y), start, stop, e
    cdef object v
    start = -d if d < 0 else 0
    stop = min(len(x), ly - d)
    for e in range(start, stop):
        v = x[e]
        if v:
            y[e + d] = y[e + d] + c * v
