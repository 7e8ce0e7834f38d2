import random
from fractions import Fraction

import pytest

from conftest import HERMITE
from polyode import recurrence, sampling
from polyode.algebra import Polynomial
from polyode.errors import DegenerateDenominator, DegenerateSpectrum
from polyode.ode import CaseTag, EquationParams, eigenvalue, normalization_product, residual, series_solve
from tabulated import TABLES

X = Polynomial([0, 1])
NAMES = ("a20", "a21", "a22", "a10", "a11")


def _table_params(rng, zeros):
    while True:
        vals = {k: sampling.nonzero(rng) for k in NAMES}
        for z in zeros:
            vals[z] = Fraction(0)
        try:
            return EquationParams(**vals)
        except Exception:
            continue


def test_case_iv_coefficients():
    p = EquationParams.of(0, 0, Fraction(3, 2), Fraction(-5, 3), 2)
    for n in range(6):
        c = recurrence.general_coeffs(p, n)
        assert (c.A, c.B, c.C) == (p.a10, p.a11, (n + 1) * p.a10 * p.a22)


def test_case_v_coefficients():
    p = EquationParams.of(0, Fraction(7, 3), 0, -2, Fraction(1, 5))
    for n in range(6):
        c = recurrence.general_coeffs(p, n)
        assert c.A == p.a10
        assert c.B == 2 * (n + 1) * p.a21 + p.a11
        assert c.C == -p.a21 * (n + 1) * (p.a21 * n + p.a11)


def test_repeated_root_form_of_c():
    rng = random.Random(8)
    for _ in range(40):
        a10, a11 = sampling.nonzero(rng), sampling.rational(rng)
        p = EquationParams.of(1, 2, 1, a10, a11)
        for n in range(6):
            try:
                c = recurrence.general_coeffs(p, n)
            except DegenerateDenominator:
                continue
            assert c.C == recurrence.repeated_root_C(p, n)


def test_degenerate_denominator_detected():
    p = EquationParams.of(1, 0, 0, -4, 1)
    with pytest.raises(DegenerateDenominator) as info:
        recurrence.general_coeffs(p, 2)
    assert info.value.n == 2
    with pytest.raises(DegenerateDenominator):
        recurrence.generate(EquationParams.of(1, 0, 0, -1, 1), 3)


def test_general_y2_at_random_params():
    rng = random.Random(2)
    for _ in range(50):
        p = sampling.random_params(rng, CaseTag.GENERAL)
        a20, a21, a22, a10, a11 = p.as_tuple()
        want = ((a20 + a10) * (a10 + 2 * a20) * X**2 + 2 * (a21 + a11) * (a20 + a10) * X
                + a11 * (a21 + a11) + (a10 + 2 * a20) * a22)
        assert recurrence.generate(p, 2)[2] == want


def test_case_i_y2_example():
    p = EquationParams.of(0, 1, 0, Fraction(-3, 2), Fraction(2, 7))
    a10, a11 = p.a10, p.a11
    assert recurrence.generate(p, 2)[2] == a10**2 * X**2 + 2 * a10 * (1 + a11) * X + a11**2 + a11


def test_hermite_family():
    assert recurrence.generate(HERMITE, 3) == [Polynomial([1]), -2 * X, 4 * X**2 - 2, -8 * X**3 + 12 * X]


@pytest.mark.parametrize("case", list(TABLES))
def test_tabulated_exact(case):
    zeros, table = TABLES[case]
    rng = random.Random(f"table:{case}")
    done = 0
    while done < 50:
        p = _table_params(rng, zeros)
        want = [t if isinstance(t, Polynomial) else Polynomial([t]) for t in table(*p.as_tuple())]
        try:
            got = recurrence.generate(p, len(want) - 1)
        except DegenerateDenominator:
            continue
        assert got == want, p
        assert recurrence.case_recurrence(p, None, len(want) - 1) == want
        done += 1


def test_generate_matches_oracle():
    rng = random.Random(31)
    compared = 0
    for _ in range(500):
        p = sampling.random_params(rng)
        try:
            ys = recurrence.generate(p, 8)
        except DegenerateDenominator:
            continue
        for n, y in enumerate(ys):
            assert residual(p, eigenvalue(p, n), y).is_zero()
            if normalization_product(p, n) == 0:
                continue
            try:
                assert y == series_solve(p, n)
            except DegenerateSpectrum:
                continue
            compared += 1
    assert compared > 3000


@pytest.mark.parametrize("tag", list(CaseTag))
def test_case_recurrence_matches_general(tag):
    rng = random.Random(f"case:{tag.value}")
    for _ in range(200):
        p = sampling.random_params(rng, tag)
        try:
            ref = recurrence.generate(p, 6)
        except DegenerateDenominator:
            continue
        assert recurrence.case_recurrence(p, tag, 6) == ref


def test_case_i_collapsed_seed():
    p = EquationParams.of(0, 2, 3, -4, -6)  # a21 a11 = a22 a10
    ys = recurrence.case_recurrence(p, CaseTag.I, 4)
    assert ys[1] == -4 * X + Fraction(3 * -4, 2)
    assert ys == recurrence.generate(p, 4)


def test_case_ii_b_grouping_agrees_with_general():
    # the specialised B_n is grouped differently from the general one; both must coincide at a22 = 0
    rng = random.Random(41)
    for _ in range(200):
        p = sampling.random_params(rng, CaseTag.II)
        coeffs = recurrence._case_ii(p)[1]
        for n in range(6):
            try:
                g = recurrence.general_coeffs(p, n)
            except DegenerateDenominator:
                continue
            assert coeffs(n) == (g.A, g.B, g.C)


def test_case_recurrence_rejects_wrong_tag():
    with pytest.raises(ValueError):
        recurrence.case_recurrence(HERMITE, CaseTag.V, 3)
