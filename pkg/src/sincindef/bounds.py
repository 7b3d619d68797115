"""Closed-form error-bound expressions and convergence-rate curves."""
from dataclasses import dataclass
import math

from .errors import DomainError
from .params import AnalyticityParams
from .transform import Family


@dataclass(frozen=True)
class BoundInputs:
    family: Family
    ap: AnalyticityParams
    n: int
    lam: float | None = None


def discretization_bound(h, d, lam):
    """4 h exp(-pi d/h) / (pi d (1 - exp(-2 pi d/h))) * lam.

    Bounds the sup-norm error of Sinc indefinite integration over the whole
    real line (untruncated sum) for integrands analytic on |Im z| < d.
    """
    if not (h > 0 and d > 0 and lam >= 0):
        raise DomainError(f"need h > 0, d > 0, lambda >= 0; got h={h}, d={d}, lambda={lam}")
    q = math.pi * d / h
    return 4.0 * h * math.exp(-q) / (math.pi * d * -math.expm1(-2.0 * q)) * lam


def lambda_bound_de(ap):
    """Upper bound on the strip-boundary integral of f(phi(u)) phi'(u).

    2^(alpha+beta+1) K / (mu cos^(alpha+beta)((pi/2) sin d) cos d); needs K
    and 0 < d < pi/2.
    """
    if ap.K is None:
        raise DomainError("lambda_bound_de needs the bound constant K")
    if not 0.0 < ap.d < 0.5 * math.pi:
        raise DomainError(f"lambda_bound_de needs 0 < d < pi/2, got d = {ap.d}")
    s = ap.alpha + ap.beta
    return 2.0 ** (s + 1.0) * ap.K / (ap.mu * math.cos(0.5 * math.pi * math.sin(ap.d)) ** s * math.cos(ap.d))


PREFACTORS = ("none", "sqrt_n", "log_over_n")


def rate_curve(family, ap, n, prefactor="none"):
    """Error rate without its unknown constant.

    SE: exp(-sqrt(pi d mu n)); DE: exp(-pi d n / log(2 d n / mu)).
    `prefactor` multiplies by sqrt(n) or log(2 d n / mu)/n,
    leading factors that some of the SE/DE error estimates carry.
    """
    family = Family.parse(family)
    if prefactor not in PREFACTORS:
        raise DomainError(f"prefactor must be one of {PREFACTORS}")
    if n < 1:
        raise DomainError("n must be positive")
    d, mu = ap.d, ap.mu
    if family is Family.SE:
        rate = math.exp(-math.sqrt(math.pi * d * mu * n))
    else:
        lg = math.log(2.0 * d * n / mu)
        if lg <= 0:
            raise DomainError("DE rate needs 2 d n / mu > 1")
        rate = math.exp(-math.pi * d * n / lg)
    if prefactor == "sqrt_n":
        rate *= math.sqrt(n)
    elif prefactor == "log_over_n":
        rate *= math.log(2.0 * d * n / mu) / n
    return rate
