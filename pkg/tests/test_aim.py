import random
from fractions import Fraction

import pytest

from conftest import HERMITE
from polyode import aim, sampling
from polyode.algebra import Polynomial, RationalFunction
from polyode.ode import CaseTag, EquationParams, eigenvalue

GENERAL = EquationParams.of(1, 1, 1, 1, 1)


def test_seeds_at_zero_iterations():
    p = EquationParams.of(2, -1, 3, Fraction(1, 2), 4)
    st = aim.aim_iterate(p, Fraction(5), 0)
    assert st.k == 0
    assert st.lambda_k == RationalFunction(-p.p1, p.p2)
    assert st.s_k == RationalFunction(Polynomial([5]), p.p2)


def test_one_step():
    p = EquationParams.of(2, -1, 3, Fraction(1, 2), 4)
    tau = Fraction(-7, 3)
    lam0, s0 = aim.seeds(p, tau)
    st = aim.aim_iterate(p, tau, 1)
    assert st.lambda_k == lam0.derivative() + s0 + lam0 * lam0
    assert st.s_k == s0.derivative() + s0 * lam0


def test_delta_one_at_first_eigenvalue():
    p = EquationParams.of(3, 2, -1, Fraction(5, 2), 1)
    st = aim.aim_iterate(p, p.a10, 1)
    lam0, s0 = aim.seeds(p, p.a10)
    assert (st.lambda_k * s0 - lam0 * st.s_k).is_zero()


def test_delta_zero_eigenvalue_any_n():
    rng = random.Random(6)
    for _ in range(5):
        p = sampling.random_params(rng)
        for n in range(5):
            assert aim.delta_vanishes(p, 0, n)


def test_delta_two():
    p = EquationParams.of(Fraction(3, 2), 1, -2, 5, Fraction(1, 3))
    assert aim.delta_vanishes(p, 2 * p.a20 + 2 * p.a10, 2)


def test_delta_nonzero_off_spectrum():
    rng = random.Random(7)
    for _ in range(10):
        p = sampling.random_params(rng)
        for n in range(5):
            eig = set(aim.eigenvalue_set(p, n))
            tau = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
            if tau in eig:
                continue
            assert not aim.delta_vanishes(p, tau, n)


def test_hermite_zero_set():
    assert aim.eigenvalue_set(HERMITE, 3) == [-6, -4, -2, 0]
    rep = aim.delta_factorization_report(HERMITE, 3)
    assert rep.ok
    assert rep.zeros == [-6, -4, -2, 0]


def test_zero_sets_small_cases():
    rep = aim.delta_factorization_report(HERMITE, 0)
    assert rep.zeros == [0] and rep.ok
    rep = aim.delta_factorization_report(GENERAL, 2)
    assert rep.zeros == [0, 1, 4] and rep.ok


def test_delta_polynomial_factorises():
    for p in (HERMITE, GENERAL, EquationParams.of(-1, 2, 0, -3, 1)):
        for n in range(5):
            d = aim.delta_polynomial(p, n)
            q, r = d.quotient_by_eigenvalues(p)
            assert r.is_zero()
            assert q.degree == 0
            for t in aim.eigenvalue_set(p, n):
                assert d(t) == 0


def test_invariance_after_eigenvalue():
    rng = random.Random(19)
    for _ in range(3):
        p = sampling.random_params(rng)
        for k in range(4):
            tau = eigenvalue(p, k)
            for n in range(k, 6):
                assert aim.delta_vanishes(p, tau, n)


def test_degree_growth_linear():
    p = EquationParams.of(2, 3, -1, 5, Fraction(1, 2))
    seq = aim.aim_sequence(p, Fraction(-3, 4), 6)
    for k, (lam, s) in enumerate(seq):
        assert lam.den.degree <= 2 * (k + 1)
        assert s.den.degree <= 2 * (k + 1)
        assert lam.num.degree <= 2 * k + 1
        assert s.num.degree <= 2 * k


def test_cap_enforced():
    with pytest.raises(ValueError):
        aim.delta_factorization_check(HERMITE, 7)
    assert aim.delta_factorization_check(HERMITE, 7, cap=7)


@pytest.mark.parametrize("tag", list(CaseTag))
def test_factorization_per_case(tag):
    rng = random.Random(f"aim:{tag.value}")
    for _ in range(2):
        p = sampling.random_params(rng, tag)
        for n in range(5):
            assert aim.delta_factorization_check(p, n, rng=rng)
