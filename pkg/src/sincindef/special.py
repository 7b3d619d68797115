"""Sinc kernel, sine integral and the indefinite-integration basis J(j, h).

Si is evaluated by its Maclaurin series (Kahan-compensated) for |x| <= 6 and
by the continued fraction of E1(ix) beyond, which keeps the absolute error at
the 1e-15 level on the whole real line. The kernels live in
:mod:`sincindef.kernels`; this module adds argument checking and scalar
handling.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import kernels
from .errors import DomainError

SIGMA_MAX_INDEX = 10**6


def _check_finite(x, name):
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{name} requires finite input")


def _scalar_or_array(x, out):
    return float(out) if np.ndim(x) == 0 else out


def sinc(x):
    """Normalized sinc, sin(pi x)/(pi x), with sinc(0) = 1."""
    arr = np.asarray(x, dtype=np.float64)
    _check_finite(arr, "sinc")
    return _scalar_or_array(x, np.sinc(arr))


def sine_integral(x):
    """Si(x) = integral of sin(t)/t over [0, x]; accepts scalars or arrays."""
    arr = np.asarray(x, dtype=np.float64)
    _check_finite(arr, "sine_integral")
    out = kernels.si(arr.ravel()).reshape(arr.shape)
    return _scalar_or_array(x, out)


def sigma(k):
    """sigma_k = integral of sinc over [0, k] = Si(pi k) / pi."""
    karr = np.asarray(k)
    if not np.issubdtype(karr.dtype, np.integer):
        if not np.all(np.equal(np.mod(karr, 1), 0)):
            raise DomainError("sigma is defined for integer k only")
        karr = karr.astype(np.int64)
    if np.any(np.abs(karr) > SIGMA_MAX_INDEX):
        raise DomainError(f"|k| must not exceed {SIGMA_MAX_INDEX}")
    out = kernels.si(np.pi * karr.ravel().astype(np.float64)).reshape(karr.shape) / np.pi
    return _scalar_or_array(k, out)


def sigma_table(kmax):
    """Return sigma_k for k = -kmax..kmax as an array of length 2*kmax + 1.

    Only the non-negative half is computed; the other half is its exact
    negation, so sigma_{-k} == -sigma_k bit for bit.
    """
    if kmax < 0:
        raise DomainError("kmax must be non-negative")
    pos = sigma(np.arange(kmax + 1, dtype=np.int64))
    return np.concatenate([-pos[:0:-1], pos])


@dataclass(frozen=True)
class SincBasisParams:
    j: int
    h: float

    def __post_init__(self):
        if not (self.h > 0 and math.isfinite(self.h)):
            raise DomainError(f"mesh size h must be positive and finite, got {self.h}")


def j_basis(params, t):
    """J(j, h)(t) = (h/pi) * (pi/2 + Si(pi (t - j h) / h)).

    The result is not clipped to [0, h]; the Gibbs overshoot of Si is part of
    the basis function.
    """
    arr = np.asarray(t, dtype=np.float64)
    _check_finite(arr, "j_basis")
    h = params.h
    shifted = arr - params.j * h
    si_vals = sine_integral(np.pi * shifted / h)
    out = h * (0.5 + np.asarray(si_vals) / np.pi)
    return _scalar_or_array(t, out)
