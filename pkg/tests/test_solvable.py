import math
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import HERMITE
from polyode import sampling, solvable
from polyode.algebra import Polynomial, RationalFunction
from polyode.errors import DegenerateSpectrum, SingularPoint
from polyode.ode import CaseTag, EquationParams
from polyode.recurrence import generate

X = Polynomial([0, 1])


def test_q_equal_p1_reduces_to_base_equation():
    rng = random.Random(1)
    for _ in range(20):
        p = sampling.random_params(rng)
        n = rng.randint(0, 4)
        spec = solvable.build_class(p, p.p1, n)
        assert spec.phase_integrand.is_zero()
        assert spec.P == RationalFunction(p.p1, p.p2)
        assert spec.V == RationalFunction(Polynomial([spec.tau]), p.p2)
        assert solvable.exact_residual(spec).is_zero()
        assert solvable.verify_class(spec, sampling.generic_points(p, 5, rng)) <= 1e-10


def test_harmonic_oscillator_example():
    spec = solvable.build_class(HERMITE, Polynomial(), 1)
    assert spec.V == RationalFunction(X**2 - 3)
    assert spec.P.is_zero()
    xs = np.array([-1.0, 0.3, 2.0])
    y = spec.f_n.eval_array(xs) * solvable.exp_factor(spec)(xs)
    assert np.allclose(y, -2 * xs * np.exp(-xs * xs / 2), rtol=1e-14)
    assert solvable.verify_class(spec, xs) <= 1e-8


def test_cubic_q_case_v():
    p = EquationParams.of(0, 1, 0, -1, 1)
    spec = solvable.build_class(p, solvable.parse_q("0,0,0,1"), 2)
    assert spec.Q == X**3
    assert solvable.exact_residual(spec).is_zero()
    rng = random.Random(2)
    assert solvable.verify_class(spec, sampling.generic_points(p, 5, rng, lo=0.3, hi=2.0)) <= 1e-8


def test_f_n_is_base_family_member():
    p = EquationParams.of(0, 1, 0, -1, 1)
    spec = solvable.build_class(p, X * X, 3)
    assert spec.f_n == generate(p, 3)[3]
    assert spec.phase_integrand.den == p.p2.monic()


def test_coefficient_pieces_sum_to_potential():
    p = EquationParams.of(2, -1, 3, 1, 2)
    spec = solvable.build_class(p, Polynomial([1, -2, 0, 1]), 2)
    fns = spec.coefficient_functions()
    xs = np.array([-1.3, 0.2, 1.7])
    total = fns["tau_term"](xs) + fns["derivative_term"](xs) + fns["square_term"](xs)
    assert np.allclose(total, fns["V"](xs), rtol=1e-13)


@pytest.mark.parametrize("tag", list(CaseTag))
def test_quoted_potentials_match(tag):
    rng = random.Random(f"pot:{tag.value}")
    for _ in range(15):
        p = sampling.random_params(rng, tag)
        q = Polynomial([sampling.rational(rng) for _ in range(rng.randint(0, 5))])
        n = rng.randint(0, 4)
        assert solvable.quoted_matches(p, q, n)


def test_random_classes_verify():
    rng = random.Random(3)
    for _ in range(50):
        p = sampling.random_params(rng)
        q = Polynomial([sampling.rational(rng, -5, 5, 3) for _ in range(rng.randint(0, 5))])
        n = rng.randint(0, 4)
        try:
            spec = solvable.build_class(p, q, n)
        except DegenerateSpectrum:
            continue
        assert solvable.exact_residual(spec).is_zero()
        assert solvable.verify_class(spec, sampling.generic_points(p, 5, rng)) <= 1e-8


def test_pole_rejected():
    p = EquationParams.of(1, 0, -1, 3, 0)
    spec = solvable.build_class(p, X, 1)
    with pytest.raises(SingularPoint):
        solvable.verify_class(spec, [0.5, 1.0])


def test_callable_q():
    p = EquationParams.of(0, 0, 1, -2, 0)
    r = solvable.verify_callable(p, 2, math.sin, math.cos, [-1.1, 0.4, 1.3])
    assert r <= 1e-8


def test_base_point_skips_poles():
    p = EquationParams.of(1, -1, 0, 2, 1)  # p2 = x(x - 1)
    spec = solvable.build_class(p, Polynomial([Fraction(1, 2)]), 1)
    assert spec.base_point == 2
