"""Mesh size and truncation selection for the SE and DE formulas.

SE:  h = sqrt(pi d / (mu n)),  M = n, N = ceil((alpha/beta) n)   (mu = alpha)
DE:  h = log(2 d n / mu) / n,  M = n, N = n - floor(log(beta/alpha) / h)
with the roles of (alpha, M) and (beta, N) swapped when mu = beta.
"""
from dataclasses import dataclass
import math
import numbers

from .errors import ParameterError
from .transform import Family


@dataclass(frozen=True)
class AnalyticityParams:
    """Endpoint exponents alpha, beta, strip half-width d, and optional bound constant K."""

    alpha: float
    beta: float
    d: float
    K: float | None = None

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ParameterError(f"{name} must lie in (0, 1], got {v}")
        if not (self.d > 0 and math.isfinite(self.d)):
            raise ParameterError(f"d must be positive and finite, got {self.d}")
        if self.K is not None and not self.K > 0:
            raise ParameterError(f"K must be positive, got {self.K}")

    @property
    def mu(self):
        return min(self.alpha, self.beta)

    def swapped(self):
        return AnalyticityParams(self.beta, self.alpha, self.d, self.K)

    def check_family(self, family):
        family = Family.parse(family)
        limit = math.pi if family is Family.SE else math.pi / 2
        if not self.d < limit:
            raise ParameterError(f"{family.value} requires 0 < d < {limit:.6g}, got d = {self.d}")


@dataclass(frozen=True)
class GridParams:
    n: int
    h: float
    M: int
    N: int

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise ParameterError(f"truncation indices must be >= 1, got M={self.M}, N={self.N}")
        if max(self.M, self.N) != self.n:
            raise ParameterError(f"max(M, N) must equal n={self.n}, got M={self.M}, N={self.N}")
        if not (self.h > 0 and math.isfinite(self.h)):
            raise ParameterError(f"mesh size must be positive and finite, got {self.h}")

    @property
    def m(self):
        return self.M + self.N + 1

    @property
    def symmetric(self):
        return self.M == self.N

    def indices(self):
        """Logical node indices -M..N in storage order."""
        return range(-self.M, self.N + 1)


def _check_n(n):
    if not isinstance(n, numbers.Integral) or isinstance(n, bool) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")


def select_h(family, ap, n):
    _check_n(n)
    family = Family.parse(family)
    if family is Family.SE:
        return math.sqrt(math.pi * ap.d / (ap.mu * n))
    arg = 2.0 * ap.d * n / ap.mu
    if not arg > 1.0:
        raise ParameterError(f"DE mesh size needs 2 d n / mu > 1, got {arg:.6g}")
    return math.log(arg) / n


def select_MN(family, ap, n, h):
    """Return (M, N); the alpha branch is taken on ties alpha == beta."""
    _check_n(n)
    if not h > 0:
        raise ParameterError(f"mesh size must be positive, got {h}")
    family = Family.parse(family)
    alpha_branch = ap.alpha <= ap.beta
    small, large = (ap.alpha, ap.beta) if alpha_branch else (ap.beta, ap.alpha)
    if family is Family.SE:
        other = math.ceil(small / large * n)
    else:
        other = n - math.floor(math.log(large / small) / h)
    if other < 1:
        raise ParameterError(
            f"n = {n} is too small for alpha/beta = {ap.alpha}/{ap.beta}: truncation index would be {other}"
        )
    return (n, other) if alpha_branch else (other, n)


def make_grid(family, ap, n, symmetric=False):
    """Mesh size and truncation for `family`; `symmetric` forces M = N = n."""
    ap.check_family(family)
    h = select_h(family, ap, n)
    if symmetric:
        M, N = n, n
    else:
        M, N = select_MN(family, ap, n, h)
    return GridParams(n=n, h=h, M=M, N=N)
