import numpy as np
import pytest

from sincindef import kernels

BACKENDS = kernels.available_backends()
needs_two = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")


@pytest.fixture
def data():
    rng = np.random.default_rng(42)
    m, jmin = 17, -8
    u = np.concatenate([rng.uniform(-12, 12, 40), np.arange(jmin, jmin + m, dtype=float), [0.5, -7.999999]])
    eta_n = np.sort(rng.uniform(1e-6, 1 - 1e-6, m))
    xr = rng.uniform(0, 1, u.size)
    return dict(
        u=u, m=m, jmin=jmin, w=rng.normal(size=m),
        left=1 - eta_n, right=eta_n, xl=1 - xr, xr=xr,
    )


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_set_backend_roundtrip():
    prev = kernels.set_backend("numpy")
    try:
        assert kernels.backend_name() == "numpy"
    finally:
        kernels.set_backend(prev)
    assert kernels.backend_name() == prev


def test_sinc_dot_matches_matrix(data, backend):
    k = kernels.get_backend(backend)
    S = k.sinc_matrix(data["u"], data["jmin"], data["m"])
    assert S.shape == (data["u"].size, data["m"])
    assert np.max(np.abs(S @ data["w"] - k.sinc_dot(data["u"], data["w"], data["jmin"]))) < 1e-14


def test_omega_dot_matches_matrix(data, backend):
    k = kernels.get_backend(backend)
    d = data
    for corrected in (True, False):
        W = k.omega_matrix(d["u"], d["left"], d["right"], d["xl"], d["xr"], d["jmin"], corrected)
        v = k.omega_dot(d["u"], d["w"], d["left"], d["right"], d["xl"], d["xr"], d["jmin"], corrected)
        assert np.max(np.abs(W @ d["w"] - v)) < 1e-13


@needs_two
def test_backends_agree(data):
    a, b = (kernels.get_backend(n) for n in ("cython", "numpy"))
    d = data
    xs = np.linspace(-300, 300, 2001)
    assert np.max(np.abs(a.si(xs) - b.si(xs))) < 2e-15
    assert np.max(np.abs(a.sinc_matrix(d["u"], d["jmin"], d["m"]) - b.sinc_matrix(d["u"], d["jmin"], d["m"]))) < 1e-15
    assert abs(a.sinc_dot(d["u"], d["w"], d["jmin"]) - b.sinc_dot(d["u"], d["w"], d["jmin"])).max() < 1e-14
    assert abs(a.si_dot(d["u"], d["w"], d["jmin"]) - b.si_dot(d["u"], d["w"], d["jmin"])).max() < 1e-13
    for corrected in (True, False):
        args = (d["u"], d["left"], d["right"], d["xl"], d["xr"], d["jmin"], corrected)
        assert np.max(np.abs(a.omega_matrix(*args) - b.omega_matrix(*args))) < 1e-14
        dargs = (d["u"], d["w"], d["left"], d["right"], d["xl"], d["xr"], d["jmin"], corrected)
        assert np.max(np.abs(a.omega_dot(*dargs) - b.omega_dot(*dargs))) < 1e-13


def test_read_only_inputs(data, backend):
    k = kernels.get_backend(backend)
    u = data["u"].copy()
    u.setflags(write=False)
    w = data["w"].copy()
    w.setflags(write=False)
    assert np.all(np.isfinite(k.sinc_dot(u, w, data["jmin"])))


def test_backend_benchmark_smoke(capsys):
    import importlib.util
    import pathlib

    path = pathlib.Path(__file__).resolve().parents[1] / "benchmarks" / "bench_backends.py"
    spec = importlib.util.spec_from_file_location("bench_backends", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(["--quick", "--repeats", "1"])
    out = capsys.readouterr().out
    assert "si_dot" in out and "DE2 n=40" in out
