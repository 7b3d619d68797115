"""Backend selection for the hot kernels.

The compiled Cython module is used when importable; otherwise (or when the
environment variable ``SINCINDEF_PURE`` is set to a non-empty value) the numpy
implementation is used. Both expose the same functions:

``si(x)``
    Sine integral, elementwise.
``sinc_matrix(u, jmin, m)``
    ``S[p, k] = sinc(u[p] - (jmin + k))``.
``sinc_dot(u, w, jmin)``
    ``S @ w`` without forming ``S``.
``si_dot(u, w, jmin)``
    ``sum_k w[k] * Si(pi * (u[p] - (jmin + k)))``.
``omega_matrix(u, left, right, xl, xr, jmin, corrected_left)``
    Sinc rows with the eta-corrected boundary entries.
``omega_dot(...)``
    ``omega_matrix(...) @ coef`` without forming the matrix.
"""
import os

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"numpy": _pykernels}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name=None):
    """Return the kernel module called `name`, or the default one."""
    if name is None:
        return _active
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}; available: {available_backends()}") from None


def set_backend(name):
    """Switch the process-wide default backend; returns the previous name."""
    global _active
    previous = _active.NAME
    _active = get_backend(name)
    return previous


if os.environ.get("SINCINDEF_PURE") or _compiled is None:
    _active = _pykernels
else:
    _active = _compiled


def backend_name():
    return _active.NAME


def si(x):
    return _active.si(x)


def sinc_matrix(u, jmin, m):
    return _active.sinc_matrix(u, jmin, m)


def sinc_dot(u, w, jmin):
    return _active.sinc_dot(u, w, jmin)


def si_dot(u, w, jmin):
    return _active.si_dot(u, w, jmin)


def omega_matrix(u, left, right, xl, xr, jmin, corrected_left):
    return _active.omega_matrix(u, left, right, xl, xr, jmin, corrected_left)


def omega_dot(u, coef, left, right, xl, xr, jmin, corrected_left):
    return _active.omega_dot(u, coef, left, right, xl, xr, jmin, corrected_left)
