"""Matrix-vector indefinite integration (SE3/DE3) and repeated integration.

With nodes x_j = T(jh), j = -M..N, the integration operator is

    A = h * I * D,   I[i, j] = 1/2 + sigma_{i-j},   D = diag(T'(jh)),

and the indefinite integral of order k is approximated by omega(x) . A^k f,
where omega(x) is the sinc basis whose two boundary members are corrected
with eta(x) = (1 + x)/2. Logical index j is stored at position j + M.
"""
from dataclasses import dataclass
import enum

import numpy as np

from . import kernels
from .errors import ContractError, DomainError
from .nodes import node_data, sample
from .special import sigma_table


class LeftBoundary(enum.Enum):
    CORRECTED = "corrected"
    PLAIN_SINC = "plain_sinc"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).replace("-", "_").lower())
        except ValueError:
            raise DomainError(f"unknown left boundary variant {value!r}") from None


@dataclass(frozen=True, eq=False)
class IndefMatrix:
    """Toeplitz matrix with entries 1/2 + sigma_{i-j}."""

    m: int
    entries: np.ndarray

    def entry(self, i, j):
        """Entry by storage index (0..m-1)."""
        return self.entries[i, j]


def build_iminus(grid_or_m):
    m = grid_or_m if isinstance(grid_or_m, (int, np.integer)) else grid_or_m.m
    if m < 1:
        raise ContractError(f"matrix order must be >= 1, got {m}")
    sig = sigma_table(m - 1)
    diff = np.arange(m)[:, None] - np.arange(m)[None, :]
    upper = 0.5 + sig[np.abs(diff) + (m - 1)]
    # 1 - a is exact for a in [1/2, 2], so mirrored entries sum to exactly 1
    entries = np.where(diff >= 0, upper, 1.0 - upper)
    entries.setflags(write=False)
    return IndefMatrix(m=m, entries=entries)


@dataclass(frozen=True, eq=False)
class NodeVector:
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1:
            raise ContractError("node vector must be one-dimensional")
        if not np.all(np.isfinite(v)):
            raise ContractError("node vector entries must be finite")
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.shape[0]


def node_vector(f, transform, grid, *, gaps=False):
    """f evaluated at the transformed nodes, ordered j = -M..N."""
    return NodeVector(sample(f, transform, grid, gaps=gaps).f_values)


def _toeplitz_fft_matvec(entries, v):
    m = v.shape[0]
    col = entries[:, 0]
    row = entries[0, :]
    circ = np.concatenate([col, [0.0], row[:0:-1]])
    padded = np.concatenate([v, np.zeros(m)])
    return np.fft.irfft(np.fft.rfft(circ) * np.fft.rfft(padded), n=2 * m)[:m]


@dataclass(frozen=True, eq=False)
class IntegrationOperator:
    """A = h * I * diag(T'(jh)); the dense product is never formed."""

    grid: object
    transform: object
    iminus: IndefMatrix
    diag: np.ndarray
    fft: bool = False

    @property
    def m(self):
        return self.grid.m

    def integrate(self, weighted):
        """h * I @ weighted, for a vector already multiplied by the diagonal."""
        if self.fft:
            return self.grid.h * _toeplitz_fft_matvec(self.iminus.entries, weighted)
        return self.grid.h * (self.iminus.entries @ weighted)

    def matvec(self, v):
        return self.integrate(self.diag * v)

    def dense(self):
        return self.grid.h * self.iminus.entries * self.diag[None, :]


def build_operator(transform, grid, fft=False):
    """Assemble the operator; `fft` selects the circulant-embedding product."""
    diag = node_data(transform, grid).deriv
    return IntegrationOperator(grid=grid, transform=transform, iminus=build_iminus(grid), diag=diag, fft=fft)


def _check_order(order):
    if int(order) != order or order < 1:
        raise ContractError(f"order must be a positive integer, got {order}")


def apply(op, v, order=1):
    """A^order v by repeated products."""
    _check_order(order)
    vals = v.values if isinstance(v, NodeVector) else np.asarray(v, dtype=np.float64)
    if vals.shape != (op.m,):
        raise ContractError(f"node vector has length {vals.shape[0]}, operator has order {op.m}")
    for _ in range(order):
        vals = op.matvec(vals)
    return NodeVector(vals)


def _prepare_points(transform, grid, x):
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if not np.all(np.abs(arr) < 1.0):
        raise DomainError("evaluation points must lie strictly inside (-1, 1)")
    u = transform.inverse(arr) / grid.h
    return arr, np.atleast_1d(u)


def _eta_tables(transform, grid, arr):
    nd = node_data(transform, grid)
    return 0.5 * nd.one_minus_x, 0.5 * nd.one_plus_x, 0.5 * (1.0 - arr), 0.5 * (1.0 + arr)


def omega_weights(transform, grid, x, left_boundary=LeftBoundary.CORRECTED):
    """Basis values omega_i(x), i = -M..N; shape (m,) for scalar x, else (len(x), m)."""
    corrected = LeftBoundary.parse(left_boundary) is LeftBoundary.CORRECTED
    arr, u = _prepare_points(transform, grid, x)
    left, right, xl, xr = _eta_tables(transform, grid, arr)
    w = kernels.omega_matrix(u, left, right, xl, xr, -grid.M, corrected)
    return w[0] if np.ndim(x) == 0 else w


def omega_weights_at(transform, grid, u, left_boundary=LeftBoundary.CORRECTED):
    """Basis values at x = T(u), taking the transformed variable u directly.

    Near the endpoints a double x cannot pin down u to full precision, so
    checks that must hit a node exactly (cardinality) go through here.
    """
    corrected = LeftBoundary.parse(left_boundary) is LeftBoundary.CORRECTED
    arr = np.atleast_1d(np.asarray(u, dtype=np.float64))
    _, plus, minus = transform.gaps(arr)
    nd = node_data(transform, grid)
    w = kernels.omega_matrix(
        arr / grid.h, 0.5 * nd.one_minus_x, 0.5 * nd.one_plus_x, 0.5 * minus, 0.5 * plus, -grid.M, corrected
    )
    return w[0] if np.ndim(u) == 0 else w


def matrix_coefficients(s, order=1, op=None):
    """A^order f for a sampled integrand, memoized on `s`.

    The first product uses the sampled F_j = f(x_j) T'(jh) directly, so nodes
    where f itself overflows but T' has underflowed stay finite.
    """
    _check_order(order)
    key = ("matrix", order, None if op is None else op.fft)
    if key not in s._cache:
        if op is None:
            op = build_operator(s.transform, s.grid)
        vals = op.integrate(s.values)
        for _ in range(order - 1):
            vals = op.matvec(vals)
        vals.setflags(write=False)
        s._cache[key] = vals
    return s._cache[key]


def evaluate_matrix(s, x, order=1, left_boundary=LeftBoundary.CORRECTED, op=None):
    """omega(x) . A^order f with the coefficient vector cached on `s`."""
    corrected = LeftBoundary.parse(left_boundary) is LeftBoundary.CORRECTED
    coef = matrix_coefficients(s, order, op)
    grid = s.grid
    arr, u = _prepare_points(s.transform, grid, x)
    left, right, xl, xr = _eta_tables(s.transform, grid, arr)
    out = kernels.omega_dot(u, coef, left, right, xl, xr, -grid.M, corrected)
    return float(out[0]) if np.ndim(x) == 0 else out


def indef_matrix(f, transform, grid, x, order=1, left_boundary=LeftBoundary.CORRECTED, *, gaps=False):
    """Formula SE3/DE3 (order 1) or its repeated-integration extension."""
    s = sample(f, transform, grid, gaps=gaps)
    return evaluate_matrix(s, x, order=order, left_boundary=left_boundary)
