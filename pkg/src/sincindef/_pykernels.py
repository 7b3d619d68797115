"""Numpy implementation of the hot kernels.

Same signatures and semantics as the compiled ``_kernels`` module; used when
the extension is not built or when ``SINCINDEF_PURE`` is set.
"""
import numpy as np

NAME = "numpy"

_SERIES_LIMIT = 6.0
_HALF_PI = 0.5 * np.pi


def _si_series(x):
    # Maclaurin series, Kahan-compensated; |x| <= 6 keeps the largest term below 10.
    total = np.zeros_like(x)
    comp = np.zeros_like(x)
    power = x.copy()
    x2 = x * x
    for k in range(40):
        term = power / (2 * k + 1)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        power = power * (-x2 / ((2 * k + 2) * (2 * k + 3)))
    return total


def _si_contfrac(x):
    # E1(ix) by modified Lentz; Si = pi/2 + Im(e^{-ix} * cf), x > 0.
    b = 1.0 + 1j * x
    c = np.full(x.shape, 1e300, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    active = np.ones(x.shape, dtype=bool)
    i = 1
    while active.any() and i < 500:
        a = -float(i * i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h = np.where(active, h * delta, h)
        active &= np.abs(delta - 1.0) >= 1e-16
        i += 1
    h = h * (np.cos(x) - 1j * np.sin(x))
    return _HALF_PI + h.imag


def si(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    ax = np.abs(x)
    out = np.empty_like(x)
    small = ax <= _SERIES_LIMIT
    if small.any():
        out[small] = _si_series(ax[small])
    if (~small).any():
        out[~small] = _si_contfrac(ax[~small])
    return np.copysign(out, x)


def _offsets(u, jmin, m):
    return np.asarray(u, dtype=np.float64)[:, None] - (jmin + np.arange(m, dtype=np.float64))[None, :]


def sinc_matrix(u, jmin, m):
    return np.sinc(_offsets(u, jmin, m))


def sinc_dot(u, w, jmin):
    w = np.asarray(w, dtype=np.float64)
    return sinc_matrix(u, jmin, w.shape[0]) @ w


def si_dot(u, w, jmin):
    w = np.asarray(w, dtype=np.float64)
    d = _offsets(u, jmin, w.shape[0])
    return si(np.pi * d) @ w


def omega_matrix(u, left, right, xl, xr, jmin, corrected_left):
    left = np.asarray(left, dtype=np.float64)
    right = np.asarray(right, dtype=np.float64)
    s = sinc_matrix(u, jmin, left.shape[0])
    w = s.copy()
    if corrected_left:
        w[:, 0] = (xl - s[:, 1:] @ left[1:]) / left[0]
    w[:, -1] = (xr - s[:, :-1] @ right[:-1]) / right[-1]
    return w


def omega_dot(u, coef, left, right, xl, xr, jmin, corrected_left):
    return omega_matrix(u, left, right, xl, xr, jmin, corrected_left) @ np.asarray(coef, dtype=np.float64)
