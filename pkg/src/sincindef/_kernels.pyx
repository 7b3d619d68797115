# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: sine integral and sinc-weighted sums.

Mirrors ``sincindef._pykernels``. Summation order is fixed (ascending node
index) so results are bit-reproducible for a given build.
"""
import numpy as np

from libc.math cimport sin, cos, fabs, floor, copysign
from libc.stdlib cimport malloc, free

NAME = "cython"

cdef double PI = 3.141592653589793
cdef double HALF_PI = 1.5707963267948966
cdef double SERIES_LIMIT = 6.0


cdef inline double _si(double x) noexcept nogil:
    cdef double ax = fabs(x)
    cdef double total = 0.0, comp = 0.0, power, term, y, t, x2
    cdef double br, bi, cr, ci, dr, di, hr, hi, er, ei, tr, ti, den, a
    cdef double c_x, s_x
    cdef int k
    if ax <= SERIES_LIMIT:
        power = ax
        x2 = ax * ax
        for k in range(40):
            term = power / (2 * k + 1)
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
            if fabs(term) < 1e-18 * fabs(total):
                break
            power = power * (-x2 / ((2 * k + 2) * (2 * k + 3)))
        return copysign(total, x)
    # modified Lentz for the continued fraction of E1(i*ax)
    br = 1.0
    bi = ax
    cr = 1e300
    ci = 0.0
    den = br * br + bi * bi
    dr = br / den
    di = -bi / den
    hr = dr
    hi = di
    for k in range(1, 500):
        a = -(<double>k) * k
        br += 2.0
        # d = 1 / (a*d + b)
        tr = a * dr + br
        ti = a * di + bi
        den = tr * tr + ti * ti
        dr = tr / den
        di = -ti / den
        # c = b + a / c
        den = cr * cr + ci * ci
        cr = br + a * cr / den
        ci = bi - a * ci / den
        # delta = c * d
        er = cr * dr - ci * di
        ei = cr * di + ci * dr
        tr = hr * er - hi * ei
        hi = hr * ei + hi * er
        hr = tr
        if fabs(er - 1.0) + fabs(ei) < 1e-16:
            break
    c_x = cos(ax)
    s_x = sin(ax)
    # Im((hr + i hi) * (cos - i sin))
    return copysign(HALF_PI + (hi * c_x - hr * s_x), x)


def si(x):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            ov[i] = _si(xv[i])
    return out.reshape(np.shape(x))


cdef inline void _sinc_row(double u, long jmin, Py_ssize_t m, double* s) noexcept nogil:
    # sin(pi*(u - k)) = (-1)^(k0 - k) sin(pi*r) with r = u - k0: one sine per point
    cdef double k0 = floor(u + 0.5)
    cdef double r = u - k0
    cdef double s0 = sin(PI * r)
    cdef double sgn, d
    cdef Py_ssize_t k
    sgn = -1.0 if (<long>(k0 - jmin)) % 2 else 1.0
    for k in range(m):
        d = u - (jmin + k)
        if d == 0.0:
            s[k] = 1.0
        else:
            s[k] = sgn * s0 / (PI * d)
        sgn = -sgn


def sinc_matrix(u, long jmin, Py_ssize_t m):
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    out = np.empty((uv.shape[0], m), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t p
    with nogil:
        for p in range(uv.shape[0]):
            _sinc_row(uv[p], jmin, m, &ov[p, 0])
    return out


def sinc_dot(u, w, long jmin):
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t m = wv.shape[0], p, k
    out = np.empty(uv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef double acc
    cdef double* s = <double*> malloc(m * sizeof(double))
    if s == NULL:
        raise MemoryError()
    try:
        with nogil:
            for p in range(uv.shape[0]):
                _sinc_row(uv[p], jmin, m, s)
                acc = 0.0
                for k in range(m):
                    acc += wv[k] * s[k]
                ov[p] = acc
    finally:
        free(s)
    return out


def si_dot(u, w, long jmin):
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t m = wv.shape[0], p, k
    out = np.empty(uv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef double acc
    with nogil:
        for p in range(uv.shape[0]):
            acc = 0.0
            for k in range(m):
                acc += wv[k] * _si(PI * (uv[p] - (jmin + k)))
            ov[p] = acc
    return out


cdef inline void _omega_row(double* s, Py_ssize_t m, const double[::1] left, const double[::1] right,
                            double xl, double xr, bint corrected_left) noexcept nogil:
    # overwrite the boundary entries of the sinc row s with the eta-corrected weights
    cdef double acc
    cdef Py_ssize_t k
    cdef double s_first = s[0]
    if corrected_left:
        acc = 0.0
        for k in range(1, m):
            acc += left[k] * s[k]
        s[0] = (xl - acc) / left[0]
    acc = 0.0
    for k in range(m - 1):
        acc += right[k] * (s_first if k == 0 else s[k])
    s[m - 1] = (xr - acc) / right[m - 1]


def omega_matrix(u, left, right, xl, xr, long jmin, bint corrected_left):
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[::1] lv = np.ascontiguousarray(left, dtype=np.float64)
    cdef const double[::1] rv = np.ascontiguousarray(right, dtype=np.float64)
    cdef const double[::1] xlv = np.ascontiguousarray(xl, dtype=np.float64)
    cdef const double[::1] xrv = np.ascontiguousarray(xr, dtype=np.float64)
    cdef Py_ssize_t m = lv.shape[0], p
    out = np.empty((uv.shape[0], m), dtype=np.float64)
    cdef double[:, ::1] ov = out
    with nogil:
        for p in range(uv.shape[0]):
            _sinc_row(uv[p], jmin, m, &ov[p, 0])
            _omega_row(&ov[p, 0], m, lv, rv, xlv[p], xrv[p], corrected_left)
    return out


def omega_dot(u, coef, left, right, xl, xr, long jmin, bint corrected_left):
    cdef const double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[::1] cv = np.ascontiguousarray(coef, dtype=np.float64)
    cdef const double[::1] lv = np.ascontiguousarray(left, dtype=np.float64)
    cdef const double[::1] rv = np.ascontiguousarray(right, dtype=np.float64)
    cdef const double[::1] xlv = np.ascontiguousarray(xl, dtype=np.float64)
    cdef const double[::1] xrv = np.ascontiguousarray(xr, dtype=np.float64)
    cdef Py_ssize_t m = lv.shape[0], p, k
    out = np.empty(uv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef double acc
    cdef double* s = <double*> malloc(m * sizeof(double))
    if s == NULL:
        raise MemoryError()
    try:
        with nogil:
            for p in range(uv.shape[0]):
                _sinc_row(uv[p], jmin, m, s)
                _omega_row(s, m, lv, rv, xlv[p], xrv[p], corrected_left)
                acc = 0.0
                for k in range(m):
                    acc += cv[k] * s[k]
                ov[p] = acc
    finally:
        free(s)
    return out
