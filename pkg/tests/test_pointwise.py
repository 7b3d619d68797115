import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
import scipy.special

from sincindef import (
    DE,
    SE,
    AnalyticityParams,
    ContractError,
    DomainError,
    SamplingError,
    builtin_problem,
    indef_basis,
    indef_doublesum,
    make_grid,
    max_error,
    sample,
    trapezoid_total,
)
from sincindef.params import GridParams

from conftest import brute_sinc

P1, P3 = builtin_problem(1), builtin_problem(3)


def de_grid(problem, n):
    return make_grid("DE", problem.ap_de, n)


def sampled(problem, family, n):
    t = SE if family == "SE" else DE
    return sample(problem.integrand, t, make_grid(family, problem.params(family), n), gaps=True)


def si_literal(x):
    return float(scipy.special.sici(x)[0])


def basis_literal(s, x, reverse=False):
    h = s.grid.h
    u = float(s.transform.inverse(x))
    js = list(range(-s.grid.M, s.grid.N + 1))
    if reverse:
        js = js[::-1]
    total = 0.0
    for j in js:
        fj = s.values[j + s.grid.M]
        total += fj * h * (0.5 + si_literal(math.pi * (u - j * h) / h) / math.pi)
    return total


def doublesum_literal(s, x):
    """O(m^2) per point: the inner j-sum is recomputed for every i."""
    h, n = s.grid.h, s.grid.N
    u = float(s.transform.inverse(x))
    t = s.transform
    istar = h * sum(s.values)
    out = 0.0
    for i in range(-n, n + 1):
        inner = 0.0
        for j in range(-n, n + 1):
            delta = 0.5 + si_literal(math.pi * (i - j)) / math.pi
            inner += (s.f_values[j + n] - 0.5 * istar) * float(t.derivative(j * h)) * delta
        out += h * inner * brute_sinc((u - i * h) / h)
    return out + istar * 0.5 * (1.0 + x)


def test_sample_examples():
    g = make_grid("SE", AnalyticityParams(1, 1, 1.0), 3)
    s = sample(lambda x: np.zeros_like(x), SE, g)
    assert np.array_equal(s.values, np.zeros(g.m))
    # the centre node of any SE grid carries psi'(0) = 1/2
    one = sample(lambda x: 1.0, SE, GridParams(n=1, h=1.0, M=1, N=1))
    assert one.values[1] == 0.5


def test_sample_endpoint_singular_is_finite():
    s = sample(P1.integrand, DE, de_grid(P1, 4), gaps=True)
    assert np.all(np.isfinite(s.values))
    assert len(s) == 9


def test_sample_without_gaps_names_the_fix():
    # outer DE nodes round to x = 1 exactly, where the bare integrand is infinite
    with np.errstate(divide="ignore"):
        with pytest.raises(SamplingError, match="gaps=True"):
            sample(P1.f, DE, de_grid(P1, 4))


def test_sample_reports_node():
    g = make_grid("SE", AnalyticityParams(1, 1, 1.0), 4)
    with pytest.raises(SamplingError) as info:
        sample(lambda x: np.where(x > 0.5, np.nan, 1.0), SE, g)
    assert info.value.index > 0


def test_sample_scalar_callable():
    g = make_grid("DE", AnalyticityParams(1, 1, 1.0), 5)
    a = sample(math.cos, DE, g)
    b = sample(np.cos, DE, g)
    assert np.array_equal(a.values, b.values)


def test_indef_basis_examples():
    g = de_grid(P1, 10)
    zero = sample(lambda x: 0.0 * x, DE, g)
    assert indef_basis(zero, 0.3) == 0.0
    s = sampled(P1, "DE", 40)
    assert abs(indef_basis(s, 0.0) - 0.5) < 1e-10


@pytest.mark.parametrize("family, n", [("SE", 6), ("DE", 6), ("DE", 13)])
def test_indef_basis_reverse_order_oracle(family, n, backend):
    s = sampled(P3, family, n)
    rng = np.random.default_rng(n)
    for x in rng.uniform(-0.999, 0.999, 10):
        ref = basis_literal(s, x, reverse=True)
        assert indef_basis(s, x) == pytest.approx(ref, rel=1e-13, abs=1e-15)


def test_trapezoid_total():
    g = de_grid(P1, 40)
    assert trapezoid_total(sample(lambda x: 0.0 * x, DE, g)) == 0.0
    assert abs(trapezoid_total(sampled(P1, "DE", 40)) - 1.0) < 1e-12
    assert abs(trapezoid_total(sampled(P3, "DE", 40)) - 1.0) < 1e-12


def test_asymmetric_grid_rejected():
    g = make_grid("SE", AnalyticityParams(0.5, 1.0, 1.0), 10)
    assert g.M != g.N
    s = sample(np.cos, SE, g)
    with pytest.raises(ContractError):
        trapezoid_total(s)
    with pytest.raises(ContractError):
        indef_doublesum(s, 0.0)


def test_indef_doublesum_examples():
    g = de_grid(P3, 8)
    assert indef_doublesum(sample(lambda x: 0.0 * x, DE, g), 0.1) == 0.0
    assert abs(indef_doublesum(sampled(P3, "DE", 40), 0.0) - 0.5) < 1e-10


def test_doublesum_cardinal_collapse():
    s = sampled(P3, "DE", 8)
    h = s.grid.h
    from sincindef.pointwise import doublesum_coefficients

    coef = doublesum_coefficients(s)
    istar = trapezoid_total(s)
    for i in range(-8, 9):
        x = float(DE.forward(i * h))
        collapsed = coef[i + 8] + istar * 0.5 * (1.0 + x)
        assert indef_doublesum(s, x) == pytest.approx(collapsed, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("family", ["SE", "DE"])
@pytest.mark.parametrize("n", [4, 8])
def test_doublesum_naive_loop(family, n, backend):
    for problem in (P1, P3):
        s = sampled(problem, family, n)
        rng = np.random.default_rng(100 + n)
        xs = rng.uniform(-0.99, 0.99, 20)
        got = indef_doublesum(s, xs)
        ref = np.array([doublesum_literal(s, x) for x in xs])
        assert np.all(np.abs(got - ref) <= 1e-13 * np.abs(ref) + 1e-15)


@settings(max_examples=25, deadline=None)
@given(a=st.floats(-5, 5), b=st.floats(-5, 5), x=st.floats(-0.95, 0.95))
def test_linearity(a, b, x):
    g = make_grid("DE", AnalyticityParams(1, 1, 1.0), 12)
    f1, f2 = np.cos, lambda t: t**3
    s1, s2 = sample(f1, DE, g), sample(f2, DE, g)
    s12 = sample(lambda t: a * f1(t) + b * f2(t), DE, g)
    for fn in (indef_basis, indef_doublesum):
        lhs = fn(s12, x)
        rhs = a * fn(s1, x) + b * fn(s2, x)
        assert lhs == pytest.approx(rhs, abs=1e-13 * (1 + abs(a) + abs(b)))


@pytest.mark.parametrize("pid", [1, 2, 3, 4])
def test_boundary_limit(pid):
    problem = builtin_problem(pid)
    x = -1.0 + 1e-9
    exact = float(problem.antiderivative(x))
    for family in ("SE", "DE"):
        got = indef_doublesum(sampled(problem, family, 40), x)
        assert abs(got - exact) < 1e-6
        # problem 1 grows like sqrt(1 + x), so its true value here is 1.4e-5
        if abs(exact) < 1e-7:
            assert abs(got) < 1e-6


def test_domain_errors():
    s = sampled(P3, "DE", 4)
    with pytest.raises(DomainError):
        indef_basis(s, 1.0)
    with pytest.raises(DomainError):
        indef_doublesum(s, np.array([0.0, -1.0]))


# Once both errors sit at the rounding floor the comparison is meaningless.
FLOOR = 1e-14


@pytest.mark.parametrize("formula", ["SE1", "SE2", "DE1", "DE2"])
@pytest.mark.parametrize("pid", [1, 2, 3])
def test_monotone_trend(formula, pid):
    problem = builtin_problem(pid)
    errs = {n: max_error(formula, problem, n, points=200) for n in (10, 20, 40, 80)}
    for k in (10, 20, 40):
        assert errs[2 * k] < errs[k] or max(errs[2 * k], errs[k]) < FLOOR, errs
