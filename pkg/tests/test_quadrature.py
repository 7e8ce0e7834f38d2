import math

import numpy as np
import pytest

from polyode.errors import QuadratureNoConvergence
from polyode.quadrature import ENV_TOL, QuadConfig, integrate


def _plain(f):
    return lambda x, dlo, dhi: (f(x), np.zeros_like(x))


def test_finite_interval_polynomial():
    res = integrate(_plain(lambda x: 3 * x**2), 0.0, 2.0)
    assert res.value[0] == pytest.approx(8.0, rel=1e-13)


def test_endpoint_singularity_uses_distances():
    # x^(-1/2) (1 - x)^(-3/4) on (0, 1) is B(1/2, 1/4)
    def g(x, dlo, dhi):
        return np.ones_like(x), -0.5 * np.log(dlo) - 0.75 * np.log(dhi)

    want = math.gamma(0.5) * math.gamma(0.25) / math.gamma(0.75)
    assert integrate(g, 0.0, 1.0).value[0] == pytest.approx(want, rel=1e-11)


def test_half_line_gamma():
    def g(x, dlo, dhi):
        return np.ones_like(x), 0.3 * np.log(dlo) - dlo

    assert integrate(g, 0.0, math.inf).value[0] == pytest.approx(math.gamma(1.3), rel=1e-12)


def test_left_half_line():
    def g(x, dlo, dhi):
        return np.ones_like(x), 2 * np.log(dhi) - 2 * dhi

    assert integrate(g, -math.inf, 1.0).value[0] == pytest.approx(2 / 8, rel=1e-12)


def test_real_line_gaussian_with_center_and_scale():
    def g(x, dlo, dhi):
        return x * x, -((x - 3) ** 2) / 0.02

    res = integrate(g, -math.inf, math.inf, center=3.0, scale=0.1)
    sigma2 = 0.01
    want = math.sqrt(math.pi * 0.02) * (9 + sigma2)
    assert res.value[0] == pytest.approx(want, rel=1e-12)


def test_vector_valued_integrand():
    def g(x, dlo, dhi):
        return np.array([np.ones_like(x), x, x * x]), -x * x

    v = integrate(g, -math.inf, math.inf).value
    assert v[0] == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert abs(v[1]) < 1e-14
    assert v[2] == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-13)


def test_no_convergence_raised():
    def g(x, dlo, dhi):
        return np.sin(1e4 * x), np.zeros_like(x)

    with pytest.raises(QuadratureNoConvergence):
        integrate(g, 0.0, 1.0, QuadConfig(points=8, max_depth=2, tol=1e-14))


def test_config_from_env(monkeypatch):
    monkeypatch.setenv(ENV_TOL, "1e-6")
    assert QuadConfig.from_env().tol == 1e-6
    assert QuadConfig.from_env(tol=1e-8).tol == 1e-8
    monkeypatch.delenv(ENV_TOL)
    assert QuadConfig.from_env() == QuadConfig(64, 30, 1e-10)
