"""Node tables shared by all formulas: x_j = T(jh), T'(jh), and integrand samples."""
from dataclasses import dataclass, field
import functools

import numpy as np

from .errors import SamplingError
from .transform import get_transform


@dataclass(frozen=True, eq=False)
class NodeData:
    """Transformed nodes for j = -M..N (storage index j + M)."""

    j: np.ndarray
    x: np.ndarray
    one_plus_x: np.ndarray
    one_minus_x: np.ndarray
    deriv: np.ndarray

    @property
    def live(self):
        """Nodes whose weight and endpoint gaps are still representable."""
        return (self.deriv > 0.0) & (self.one_plus_x > 0.0) & (self.one_minus_x > 0.0)


@functools.lru_cache(maxsize=256)
def _node_data(family, grid):
    t = get_transform(family)
    j = np.arange(-grid.M, grid.N + 1)
    u = j * grid.h
    x, plus, minus = t.gaps(u)
    nd = NodeData(j=j, x=x, one_plus_x=plus, one_minus_x=minus, deriv=np.asarray(t.derivative(u)))
    for arr in (nd.j, nd.x, nd.one_plus_x, nd.one_minus_x, nd.deriv):
        arr.setflags(write=False)
    return nd


def node_data(transform, grid):
    return _node_data(transform.family, grid)


@dataclass(frozen=True, eq=False)
class SampledIntegrand:
    """F_j = f(T(jh)) T'(jh) on a grid, plus the raw samples f(T(jh)).

    Derived quantities (trapezoidal total, cached coefficient vectors) are
    memoized in ``_cache``; the sampled data itself is read-only.
    """

    grid: object
    transform: object
    values: np.ndarray
    f_values: np.ndarray
    nodes: NodeData = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return self.values.shape[0]


def _evaluate(f, args):
    try:
        out = np.asarray(f(*args), dtype=np.float64)
    except TypeError:
        out = np.array([f(*map(float, a)) for a in zip(*args)], dtype=np.float64)
    return np.broadcast_to(out, args[0].shape).astype(np.float64)


def sample(f, transform, grid, *, gaps=False):
    """Tabulate the integrand at the transformed nodes of `grid`.

    `f` is called with a numpy array of nodes (scalar-only callables are
    retried point by point). With ``gaps=True`` it is called as
    ``f(x, 1 + x, 1 - x)`` where both gaps are accurate to full relative
    precision, which endpoint-singular integrands need. Nodes whose
    derivative or endpoint gap underflowed to zero contribute nothing and are
    not evaluated.
    """
    nd = node_data(transform, grid)
    live = nd.live
    f_values = np.zeros(nd.x.shape[0])
    if live.any():
        args = (nd.x[live], nd.one_plus_x[live], nd.one_minus_x[live]) if gaps else (nd.x[live],)
        f_values[live] = _evaluate(f, args)
    values = f_values * nd.deriv
    bad = ~np.isfinite(values)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        hint = "" if gaps else "; endpoint-singular integrands should be sampled with gaps=True"
        raise SamplingError(
            f"integrand sample is not finite at node j={nd.j[k]} (x={nd.x[k]!r}){hint}", index=int(nd.j[k])
        )
    values.setflags(write=False)
    f_values.setflags(write=False)
    return SampledIntegrand(grid=grid, transform=transform, values=values, f_values=f_values, nodes=nd)
