"""Basis-function formulas (SE1/DE1) and double-sum formulas (SE2/DE2).

Both approximate the indefinite integral over [-1, x] from samples
F_j = f(T(jh)) T'(jh):

* SE1/DE1:  sum_j F_j J(j, h)(T^{-1}(x))
* SE2/DE2:  sum_i c_i sinc(T^{-1}(x)/h - i) + I* eta(x), where
  I* = h sum_j F_j and c = h I (F - I* T'/2) with I the Toeplitz matrix
  1/2 + sigma_{i-j}. The coefficient vector c is computed once per sample.
"""
import numpy as np

from . import kernels
from .errors import ContractError, DomainError
from .matrix_form import build_iminus
from .nodes import SampledIntegrand, sample

__all__ = [
    "SampledIntegrand",
    "sample",
    "indef_basis",
    "trapezoid_total",
    "doublesum_coefficients",
    "indef_doublesum",
]


def _points(s, x):
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if not np.all(np.abs(arr) < 1.0):
        raise DomainError("evaluation points must lie strictly inside (-1, 1)")
    return arr, np.atleast_1d(s.transform.inverse(arr)) / s.grid.h


def _ret(x, out):
    return float(out[0]) if np.ndim(x) == 0 else out


def indef_basis(s, x):
    """Formula SE1/DE1 at x (scalar or array)."""
    _, u = _points(s, x)
    h = s.grid.h
    total = float(np.sum(s.values))
    out = h * (0.5 * total + kernels.si_dot(u, s.values, -s.grid.M) / np.pi)
    return _ret(x, out)


def _require_symmetric(s):
    if s.grid.M != s.grid.N:
        raise ContractError(f"formula needs a symmetric grid, got M={s.grid.M}, N={s.grid.N}")


def trapezoid_total(s):
    """I* = h * sum_j F_j, the trapezoidal value of the integral over (-1, 1)."""
    _require_symmetric(s)
    if "total" not in s._cache:
        s._cache["total"] = s.grid.h * float(np.sum(s.values))
    return s._cache["total"]


def doublesum_coefficients(s):
    """Inner sums c_i = h sum_j (F_j - I* T'(jh) / 2) delta_ij, memoized on `s`."""
    _require_symmetric(s)
    if "doublesum" not in s._cache:
        total = trapezoid_total(s)
        shifted = s.values - 0.5 * total * s.nodes.deriv
        coef = s.grid.h * (build_iminus(s.grid).entries @ shifted)
        coef.setflags(write=False)
        s._cache["doublesum"] = coef
    return s._cache["doublesum"]


def indef_doublesum(s, x):
    """Formula SE2/DE2 at x (scalar or array)."""
    coef = doublesum_coefficients(s)
    arr, u = _points(s, x)
    out = kernels.sinc_dot(u, coef, -s.grid.M) + trapezoid_total(s) * 0.5 * (1.0 + arr)
    return _ret(x, out)
