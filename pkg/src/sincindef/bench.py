"""Benchmark problems, the max-error protocol, and the timing harness.

Errors are measured at the P strictly interior, equispaced points
x_k = (2k - (P + 1)) / (P + 1), k = 1..P (P = 1000 by default), which are
exactly symmetric about 0. Timings cover grid selection, sampling,
coefficient precomputation and evaluation at all points; problem
construction is excluded.
"""
from dataclasses import dataclass
import enum
import math
import statistics
import time
from typing import Callable

import numpy as np

from .errors import ContractError, DomainError
from .matrix_form import LeftBoundary, build_operator, evaluate_matrix, matrix_coefficients
from .nodes import sample
from .params import AnalyticityParams, make_grid
from .pointwise import doublesum_coefficients, indef_basis, indef_doublesum
from .transform import Family, get_transform

PI_MINUS = 3.14
ONE_MINUS = 0.99


class Formula(enum.Enum):
    SE1 = "SE1"
    SE2 = "SE2"
    SE3 = "SE3"
    DE1 = "DE1"
    DE2 = "DE2"
    DE3 = "DE3"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise DomainError(f"unknown formula {value!r}") from None

    @property
    def family(self):
        return Family(self.value[:2])

    @property
    def kind(self):
        """1: Si basis, 2: double sum, 3: matrix-vector."""
        return int(self.value[2])


ALL_FORMULAS = tuple(Formula)


@dataclass(frozen=True)
class Problem:
    """A test integrand on (-1, 1) with its antiderivative vanishing at -1.

    `integrand` and `exact` take ``(x, 1 + x, 1 - x)`` so that endpoint
    behaviour can be computed from accurate gaps.
    """

    id: int
    name: str
    integrand: Callable
    exact: Callable
    ap_se: AnalyticityParams
    ap_de: AnalyticityParams
    exact2: Callable | None = None

    def params(self, family):
        return self.ap_se if Family.parse(family) is Family.SE else self.ap_de

    def f(self, x):
        x = np.asarray(x, dtype=np.float64)
        return self.integrand(x, 1.0 + x, 1.0 - x)

    def antiderivative(self, x, order=1):
        x = np.asarray(x, dtype=np.float64)
        fn = self.exact if order == 1 else self.exact2 if order == 2 else None
        if fn is None:
            raise ContractError(f"problem {self.id} has no closed form for order {order}")
        return fn(x, 1.0 + x, 1.0 - x)


def _xlogx(t):
    t = np.asarray(t, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(t > 0, t * np.log(np.where(t > 0, t, 1.0)), 0.0)


def _artanh(p, q):
    return 0.5 * (np.log(p) - np.log(q))


_LOG2 = math.log(2.0)
_COSH_PI = math.cosh(math.pi)


def _p1_f(x, p, q):
    return 1.0 / (np.pi * np.sqrt(p * q))


def _p1_exact(x, p, q):
    # arcsin x + pi/2 == 2 arcsin(sqrt((1 + x)/2)), used near x = -1 to avoid cancellation
    near = 2.0 * np.arcsin(np.sqrt(0.5 * p)) / np.pi
    return np.where(x < -0.5, near, np.arcsin(np.clip(x, -1.0, 1.0)) / np.pi + 0.5)


def _p2_f(x, p, q):
    return (np.log(p) - np.log(q)) / (4.0 * _LOG2)


def _p2_exact(x, p, q):
    return (_xlogx(p) + _xlogx(q) - 2.0 * _LOG2) / (4.0 * _LOG2)


def _p3_f(x, p, q):
    return 2.0 / (np.pi * (1.0 + x * x))


def _p3_exact(x, p, q):
    # 1/2 + (2/pi) arctan x == (2/pi) atan2(1 + x, 1 - x)
    return 2.0 / np.pi * np.arctan2(p, q)


def _p3_exact2(x, p, q):
    return 0.5 * p + 2.0 / np.pi * (x * np.arctan(x) - 0.5 * np.log1p(x * x) - (0.25 * np.pi - 0.5 * _LOG2))


def _p4_f(x, p, q):
    a = 4.0 * _artanh(p, q)
    g = np.cos(a) + _COSH_PI
    return -2.0 * (x * g + np.sin(a)) / np.sqrt(g)


def _p4_exact(x, p, q):
    with np.errstate(divide="ignore"):
        a = 4.0 * _artanh(np.where(p > 0, p, 1.0), np.where(q > 0, q, 1.0))
    return p * q * np.sqrt(np.cos(a) + _COSH_PI)


_PROBLEMS = {
    1: Problem(
        1,
        "1/(pi sqrt(1-s^2))",
        _p1_f,
        _p1_exact,
        AnalyticityParams(0.5, 0.5, PI_MINUS, K=1.0 / math.pi),
        AnalyticityParams(0.5, 0.5, PI_MINUS / 2, K=1.0 / math.pi),
    ),
    2: Problem(
        2,
        "log((1+s)/(1-s))/(4 log 2)",
        _p2_f,
        _p2_exact,
        AnalyticityParams(ONE_MINUS, ONE_MINUS, PI_MINUS),
        AnalyticityParams(ONE_MINUS, ONE_MINUS, PI_MINUS / 2),
    ),
    3: Problem(
        3,
        "2/(pi (1+s^2))",
        _p3_f,
        _p3_exact,
        AnalyticityParams(1.0, 1.0, PI_MINUS / 2),
        AnalyticityParams(1.0, 1.0, PI_MINUS / 6),
        exact2=_p3_exact2,
    ),
    4: Problem(
        4,
        "d/ds[(1-s^2) sqrt(cos(4 artanh s) + cosh pi)]",
        _p4_f,
        _p4_exact,
        AnalyticityParams(1.0, 1.0, PI_MINUS / 2),
        AnalyticityParams(1.0, 1.0, PI_MINUS / 6),
    ),
}


def builtin_problem(problem_id):
    try:
        return _PROBLEMS[int(problem_id)]
    except (KeyError, ValueError):
        raise DomainError(f"unknown problem id {problem_id!r}; choose from {sorted(_PROBLEMS)}") from None


def evaluation_points(count=1000):
    if count < 1:
        raise DomainError("point count must be >= 1")
    k = np.arange(1, count + 1, dtype=np.float64)
    return (2.0 * k - (count + 1)) / (count + 1)


class Approximation:
    """One formula bound to one sampled integrand, ready for evaluation.

    Construction performs all per-grid precomputation (sigma values, matrix
    products); calls evaluate at any x in (-1, 1).
    """

    def __init__(self, formula, f, grid, *, gaps=False, order=1, left_boundary=LeftBoundary.CORRECTED, fft=False):
        self.formula = Formula.parse(formula)
        self.grid = grid
        self.order = order
        self.left_boundary = LeftBoundary.parse(left_boundary)
        if order != 1 and self.formula.kind != 3:
            raise ContractError("repeated integration (order > 1) needs a matrix-form formula")
        transform = get_transform(self.formula.family)
        self.sampled = sample(f, transform, grid, gaps=gaps)
        if self.formula.kind == 2:
            doublesum_coefficients(self.sampled)
        elif self.formula.kind == 3:
            self._op = build_operator(transform, grid, fft=fft)
            matrix_coefficients(self.sampled, order, self._op)

    def __call__(self, x):
        kind = self.formula.kind
        if kind == 1:
            return indef_basis(self.sampled, x)
        if kind == 2:
            return indef_doublesum(self.sampled, x)
        return evaluate_matrix(self.sampled, x, self.order, self.left_boundary, self._op)


def grid_for(formula, problem, n):
    formula = Formula.parse(formula)
    ap = problem.params(formula.family)
    return make_grid(formula.family, ap, n, symmetric=formula.kind == 2)


def approximate(formula, problem, n, x, *, order=1, left_boundary=LeftBoundary.CORRECTED):
    formula = Formula.parse(formula)
    approx = Approximation(
        formula, problem.integrand, grid_for(formula, problem, n), gaps=True, order=order, left_boundary=left_boundary
    )
    return approx(x)


def max_error(formula, problem, n, *, points=1000, order=1, left_boundary=LeftBoundary.CORRECTED):
    """Largest absolute error over the equispaced interior points."""
    x = evaluation_points(points)
    approx = approximate(formula, problem, n, x, order=order, left_boundary=left_boundary)
    return float(np.max(np.abs(approx - problem.antiderivative(x, order))))


@dataclass(frozen=True)
class ConvergenceRecord:
    formula_id: Formula
    problem_id: int
    n: int
    h: float
    M: int
    N: int
    max_error: float
    elapsed_seconds: float


MIN_BATCH_SECONDS = 0.01


def measure(formula, problem, n, *, points=1000, repeats=3, left_boundary=LeftBoundary.CORRECTED):
    """Max error plus the per-run wall time, median over `repeats` batches.

    Sub-millisecond runs are too short to time one at a time, so each batch
    repeats the full run until it lasts at least MIN_BATCH_SECONDS.
    """
    formula = Formula.parse(formula)
    x = evaluation_points(points)
    exact = problem.antiderivative(x)

    def run():
        grid = grid_for(formula, problem, n)
        return grid, Approximation(formula, problem.integrand, grid, gaps=True, left_boundary=left_boundary)(x)

    t0 = time.perf_counter()
    grid, approx = run()
    single = time.perf_counter() - t0
    number = max(1, math.ceil(MIN_BATCH_SECONDS / max(single, 1e-9)))
    times = []
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        for _ in range(number):
            run()
        times.append((time.perf_counter() - t0) / number)
    err = float(np.max(np.abs(approx - exact)))
    elapsed = max(statistics.median(times), 1e-9)
    return ConvergenceRecord(formula, problem.id, n, grid.h, grid.M, grid.N, err, elapsed)


def sweep(formula, problem, n_list, *, points=1000, repeats=3, left_boundary=LeftBoundary.CORRECTED):
    n_list = list(n_list)
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ContractError("n_list must be strictly increasing")
    return [
        measure(formula, problem, n, points=points, repeats=repeats, left_boundary=left_boundary) for n in n_list
    ]


def smallest_n(formula, problem, target, n_list, *, points=1000, repeats=3, left_boundary=LeftBoundary.CORRECTED):
    """First n in `n_list` whose max error is below `target`, timed; None if never reached."""
    for n in n_list:
        if max_error(formula, problem, n, points=points, left_boundary=left_boundary) < target:
            return measure(formula, problem, n, points=points, repeats=repeats, left_boundary=left_boundary)
    return None
