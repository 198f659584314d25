# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels mirroring ``_fallback``; same signatures, same results."""

from libc.stdlib cimport malloc, free


def matmul_flat(tuple a, tuple b, Py_ssize_t n):
    cdef list out = [None] * (n * n)
    cdef Py_ssize_t i, j, k
    cdef object acc
    for i in range(n):
        for j in range(n):
            acc = a[i * n] * b[j]
            for k in range(1, n):
                acc = acc + a[i * n + k] * b[k * n + j]
            out[i * n + j] = acc
    return tuple(out)


def star_flat(tuple a, tuple b, Py_ssize_t n):
    cdef list out = [None] * (n * n)
    cdef Py_ssize_t i, j, k
    cdef object acc
    for i in range(n):
        for j in range(n):
            if i == j:
                out[i * n + i] = a[i * n + i] * b[i * n + i]
                continue
            acc = a[i * n] * b[j]
            for k in range(1, n):
                acc = acc + a[i * n + k] * b[k * n + j]
            out[i * n + j] = acc
    return tuple(out)


def star2_flat(tuple a, tuple b):
    return (a[0] * b[0], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[3] * b[3])


cdef inline void _star2(const long long *a, const long long *b, long long *out) nogil:
    out[0] = a[0] * b[0]
    out[1] = a[0] * b[1] + a[1] * b[3]
    out[2] = a[2] * b[0] + a[3] * b[2]
    out[3] = a[3] * b[3]


def assoc2_exhaustive(values):
    cdef list vals = [int(v) for v in values]
    cdef Py_ssize_t nv = len(vals), m = nv ** 4
    cdef Py_ssize_t i, j, k, t
    cdef long long *mats
    cdef long long *table
    cdef long long lhs[4]
    cdef long long rhs[4]
    cdef long long violations = 0
    cdef Py_ssize_t fi = -1, fj = -1, fk = -1
    for v in vals:
        # |entry| <= 2**15 keeps every triple product well inside int64
        if abs(v) > 32768:
            raise ValueError("assoc2_exhaustive needs |value| <= 2**15")
    mats = <long long *> malloc(m * 4 * sizeof(long long))
    table = <long long *> malloc(m * m * 4 * sizeof(long long))
    if mats == NULL or table == NULL:
        free(mats)
        free(table)
        raise MemoryError()
    try:
        for i in range(m):
            t = i
            for k in range(3, -1, -1):
                mats[i * 4 + k] = vals[t % nv]
                t //= nv
        with nogil:
            for i in range(m):
                for j in range(m):
                    _star2(&mats[i * 4], &mats[j * 4], &table[(i * m + j) * 4])
            for i in range(m):
                for j in range(m):
                    for k in range(m):
                        _star2(&table[(i * m + j) * 4], &mats[k * 4], lhs)
                        _star2(&mats[i * 4], &table[(j * m + k) * 4], rhs)
                        if (lhs[0] != rhs[0] or lhs[1] != rhs[1]
                                or lhs[2] != rhs[2] or lhs[3] != rhs[3]):
                            violations += 1
                            if fi < 0:
                                fi = i
                                fj = j
                                fk = k
        first = None
        if fi >= 0:
            first = []
            for i in (fi, fj, fk):
                first.append((mats[i * 4], mats[i * 4 + 1], mats[i * 4 + 2], mats[i * 4 + 3]))
            first = tuple(first)
        return violations, m * m * m, first
    finally:
        free(mats)
        free(table)
