import random
from fractions import Fraction

import pytest

from conftest import HERMITE, LEGENDRE
from polyode import sampling
from polyode.algebra import Polynomial
from polyode.errors import DegenerateSpectrum, InvalidParameters
from polyode.ode import (CaseTag, EquationParams, classify, eigenvalue, kernel, normalization_product, residual,
                         series_solve, solve)

X = Polynomial([0, 1])


def test_eigenvalue_examples():
    p = EquationParams.of(3, -1, 2, 5, 7)
    assert eigenvalue(p, 0) == 0
    assert eigenvalue(HERMITE, 3) == -6
    assert eigenvalue(LEGENDRE, 2) == -6


@pytest.mark.parametrize("values, tag", [
    ((0, 1, 0, -1, Fraction(3, 2)), CaseTag.V),
    ((1, 0, 0, 4, -2), CaseTag.VI),
    ((1, 1, 1, 1, 1), CaseTag.GENERAL),
    ((0, 2, 1, -1, 0), CaseTag.I),
    ((1, 2, 0, 1, 0), CaseTag.II),
    ((1, 0, 2, 1, 0), CaseTag.III),
    ((0, 0, 1, -2, 0), CaseTag.IV),
])
def test_classify(values, tag):
    assert classify(EquationParams.of(*values)) is tag


def test_invalid_parameters_rejected():
    with pytest.raises(InvalidParameters):
        EquationParams.of(0, 0, 0, 1, 1)
    with pytest.raises(InvalidParameters):
        EquationParams.of(0, 1, 1, 0, 1)


def test_classify_stable_under_perturbation():
    rng = random.Random(3)
    for tag in CaseTag:
        for _ in range(20):
            p = sampling.random_params(rng, tag)
            vals = list(p.as_tuple())
            for i in range(3):
                if vals[i] != 0:
                    bumped = list(vals)
                    bumped[i] += Fraction(rng.choice([-1, 1]), rng.randint(2, 9))
                    if bumped[i] == 0:
                        continue
                    assert classify(EquationParams.of(*bumped)) is tag


def test_series_solve_hermite():
    assert series_solve(HERMITE, 2) == 4 * X**2 - 2
    assert series_solve(HERMITE, 0) == Polynomial([1])


def test_series_solve_first_degree_is_p1_multiple():
    rng = random.Random(5)
    for _ in range(30):
        p = sampling.random_params(rng)
        y = series_solve(p, 1)
        if p.a10 != 0:
            assert y == p.p1
        else:
            assert y.monic() == p.p1.monic()


def test_residual_examples():
    p = EquationParams.of(2, -1, 3, Fraction(5, 2), -4)
    assert residual(p, p.a10, p.p1).is_zero()
    assert residual(p, 0, Polynomial([1])).is_zero()
    assert residual(HERMITE, -4, 4 * X**2 - 2).is_zero()
    assert not residual(HERMITE, -3, 4 * X**2 - 2).is_zero()


def test_series_solve_residual_and_degree_all_cases():
    rng = random.Random(17)
    for tag in CaseTag:
        for _ in range(200):
            p = sampling.random_params(rng, tag)
            n = rng.randint(0, 8)
            try:
                y = series_solve(p, n)
            except DegenerateSpectrum:
                continue
            assert residual(p, eigenvalue(p, n), y).is_zero()
            if normalization_product(p, n) != 0:
                assert y.degree == n
                assert y.leading == normalization_product(p, n)
            else:
                assert y.degree < n


def test_kernel_empty_off_spectrum():
    assert kernel(HERMITE, Fraction(-5), 4) == []
    assert len(kernel(HERMITE, Fraction(-4), 4)) == 1


def test_degenerate_spectrum_returns_basis():
    # a10 = -a20 gives tau_2 = tau_0 = 0; with p2 = x^2 and p1 = -x both 1 and x^2 solve it
    p = EquationParams.of(1, 0, 0, -1, 0)
    with pytest.raises(DegenerateSpectrum) as info:
        series_solve(p, 2)
    assert len(info.value.basis) == 2


def test_solve_methods_agree():
    rng = random.Random(23)
    for _ in range(60):
        p = sampling.random_params(rng)
        n = rng.randint(0, 6)
        try:
            ref = series_solve(p, n)
        except DegenerateSpectrum:
            continue
        rep = solve(p, n)
        assert rep.residual_ok
        if normalization_product(p, n) != 0:
            assert rep.polynomial == ref


def test_solve_falls_back_when_denominator_vanishes():
    p = EquationParams.of(1, 0, 0, -1, 1)
    rep = solve(p, 3)
    assert rep.method == "series_oracle"
    assert rep.polynomial == Polynomial([1, 3, 6, 6])
    assert rep.residual_ok
    assert rep.diagnostics
