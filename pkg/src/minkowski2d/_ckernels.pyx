# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in :mod:`minkowski2d._kernels_py`."""

from libc.math cimport atan2, cos, sin, fabs, pow, fmod, M_PI, INFINITY
import numpy as np

cdef double TWO_PI = 2.0 * M_PI
cdef double GOLDEN = 0.6180339887498949
cdef int COARSE_STEPS = 64
cdef int GOLDEN_ITERS = 64


cdef inline Py_ssize_t _locate(const double[::1] table, double ang) noexcept nogil:
    cdef double t0 = table[0]
    cdef double rel = ang - t0
    cdef Py_ssize_t lo = 0, hi = table.shape[0], mid
    rel = fmod(rel, TWO_PI)
    if rel < 0:
        rel += TWO_PI
    rel += t0
    # first index with table[idx] > rel, minus one
    while lo < hi:
        mid = (lo + hi) // 2
        if table[mid] <= rel:
            lo = mid + 1
        else:
            hi = mid
    lo -= 1
    if lo < 0:
        lo = 0
    return lo


cdef inline double _gauge_one(const double[::1] vertex_angles, const double[:, ::1] polar,
                              double x, double y) noexcept nogil:
    cdef Py_ssize_t m = polar.shape[0]
    cdef Py_ssize_t k = _locate(vertex_angles, atan2(y, x))
    cdef Py_ssize_t off, idx
    cdef double best = -INFINITY, val
    for off in range(-1, 2):
        idx = (k + off + m) % m
        val = polar[idx, 0] * x + polar[idx, 1] * y
        if val > best:
            best = val
    return best


cdef inline double _ipow(double x, double p) noexcept nogil:
    # small integer exponents by repeated multiplication
    cdef int k, e
    cdef double r
    if p == <int>p and p <= 16:
        e = <int>p
        r = 1.0
        for k in range(e):
            r *= x
        return r
    return pow(x, p)


cdef inline double _lp_pow(double p, double x, double y) noexcept nogil:
    return _ipow(fabs(x), p) + _ipow(fabs(y), p)


cdef inline double _lp_one(double p, double x, double y) noexcept nogil:
    cdef double ax = fabs(x), ay = fabs(y), big, small
    if ax > ay:
        big = ax
        small = ay
    else:
        big = ay
        small = ax
    if big == 0.0:
        return 0.0
    return big * pow(1.0 + _ipow(small / big, p), 1.0 / p)


cdef inline double _lp_dot(double p, double theta, double zx, double zy) noexcept nogil:
    cdef double c = cos(theta), s = sin(theta)
    return (c * zx + s * zy) / _lp_one(p, c, s)


def polygon_gauge(const double[::1] vertex_angles, const double[:, ::1] polar, pts):
    cdef const double[:, ::1] P = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t n = P.shape[0], i
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _gauge_one(vertex_angles, polar, P[i, 0], P[i, 1])
    return out


def polygon_support(const double[::1] normal_angles, const double[:, ::1] vertices, dirs):
    cdef const double[:, ::1] Z = np.ascontiguousarray(dirs, dtype=np.float64)
    cdef Py_ssize_t n = Z.shape[0], m = vertices.shape[0], i, k, off, idx, barg
    cdef double best, val, zx, zy
    out = np.empty(n)
    arg = np.empty(n, dtype=np.int64)
    cdef double[::1] o = out
    cdef long long[::1] a = arg
    with nogil:
        for i in range(n):
            zx = Z[i, 0]
            zy = Z[i, 1]
            k = _locate(normal_angles, atan2(zy, zx))
            best = -INFINITY
            barg = 0
            for off in range(3):
                idx = (k + off) % m
                val = vertices[idx, 0] * zx + vertices[idx, 1] * zy
                if val > best:
                    best = val
                    barg = idx
            o[i] = best
            a[i] = barg
    return out, arg


def lp_gauge(double p, pts):
    cdef const double[:, ::1] P = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t n = P.shape[0], i
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _lp_one(p, P[i, 0], P[i, 1])
    return out


def lp_support(double p, dirs):
    cdef const double[:, ::1] Z = np.ascontiguousarray(dirs, dtype=np.float64)
    cdef Py_ssize_t n = Z.shape[0], i
    cdef int j, kbest
    cdef double step = TWO_PI / COARSE_STEPS
    cdef double zx, zy, val, coarse, a, b, c, d, fc, fd
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            zx = Z[i, 0]
            zy = Z[i, 1]
            coarse = -INFINITY
            kbest = 0
            for j in range(COARSE_STEPS):
                val = _lp_dot(p, j * step, zx, zy)
                if val > coarse:
                    coarse = val
                    kbest = j
            a = kbest * step - step
            b = kbest * step + step
            c = b - GOLDEN * (b - a)
            d = a + GOLDEN * (b - a)
            fc = _lp_dot(p, c, zx, zy)
            fd = _lp_dot(p, d, zx, zy)
            for j in range(GOLDEN_ITERS):
                if fc > fd:
                    b = d
                    d = c
                    fd = fc
                    c = b - GOLDEN * (b - a)
                    fc = _lp_dot(p, c, zx, zy)
                else:
                    a = c
                    c = d
                    fc = fd
                    d = a + GOLDEN * (b - a)
                    fd = _lp_dot(p, d, zx, zy)
            val = fc if fc > fd else fd
            o[i] = val if val > coarse else coarse
    return out


def max_pair_lp(double p, pts):
    cdef const double[:, ::1] P = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t m = P.shape[0], i, j, bi = 0, bj = 0
    cdef double best = -1.0, val
    # |dx|^p + |dy|^p is monotone in the norm, so scan it and take one root at the end
    with nogil:
        for i in range(m - 1):
            for j in range(i + 1, m):
                val = _lp_pow(p, P[i, 0] - P[j, 0], P[i, 1] - P[j, 1])
                if val > best:
                    best = val
                    bi = i
                    bj = j
    if m < 2:
        return -1.0, 0, 0
    return _lp_one(p, P[bi, 0] - P[bj, 0], P[bi, 1] - P[bj, 1]), bi, bj


def max_pair_polygon(const double[::1] vertex_angles, const double[:, ::1] polar, pts):
    cdef const double[:, ::1] P = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t m = P.shape[0], i, j, bi = 0, bj = 0
    cdef double best = -1.0, val
    with nogil:
        for i in range(m - 1):
            for j in range(i + 1, m):
                val = _gauge_one(vertex_angles, polar, P[i, 0] - P[j, 0], P[i, 1] - P[j, 1])
                if val > best:
                    best = val
                    bi = i
                    bj = j
    return best, bi, bj
