import math

import mpmath
import numpy as np
import pytest

from sincindef import kernels


def _quad_pair(a, b):
    f = lambda t: mpmath.sin(t) / t if t != 0 else mpmath.mpf(1)
    ts = mpmath.quad(f, [a, b], method="tanh-sinh")
    gl = mpmath.quad(f, [a, b], method="gauss-legendre")
    return ts, gl


def si_oracle(xs):
    """Si by adaptive quadrature of sin(t)/t, accumulated over sorted |x|.

    Each panel is integrated by tanh-sinh and Gauss-Legendre at 30 digits; the
    two must agree to 1e-15 or the oracle refuses to answer.
    """
    xs = np.asarray(xs, dtype=float)
    with mpmath.workdps(30):
        ax = sorted(set(abs(float(x)) for x in xs))
        breaks = sorted(set(ax) | {k * math.pi for k in range(int(max(ax, default=0) / math.pi) + 1)})
        acc = mpmath.mpf(0)
        table = {0.0: 0.0}
        prev = mpmath.mpf(0)
        for b in breaks:
            if b == 0:
                continue
            ts, gl = _quad_pair(prev, mpmath.mpf(b))
            assert abs(ts - gl) < 1e-15, f"oracle panel [{prev}, {b}] did not converge"
            acc += ts
            prev = mpmath.mpf(b)
            table[b] = float(acc)
    return np.array([math.copysign(table[abs(float(x))], x) for x in xs])


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def brute_sinc(x):
    return 1.0 if x == 0 else math.sin(math.pi * x) / (math.pi * x)
