import math
from fractions import Fraction

import pytest

from polyode import catalog
from polyode.algebra import Polynomial
from polyode.errors import MissingArg, ProportionalityFailure, UnknownName
from polyode.ode import CaseTag, EquationParams, classify, solve

X = Polynomial([0, 1])

ARGS = {
    "hypergeometric": {"a": Fraction(1, 2), "b": Fraction(3, 2), "c": Fraction(5, 4)},
    "gegenbauer": {"k": Fraction(1, 2)},
    "jacobi": {"alpha": Fraction(-5, 2), "beta": Fraction(1, 3)},
    "romanovski": {"alpha": Fraction(-7), "beta": Fraction(2)},
    "laguerre": {"alpha": Fraction(1, 2)},
    "confluent": {"b": Fraction(2), "c": Fraction(3, 2)},
    "bessel": {"alpha": Fraction(0), "beta": Fraction(2)},
}

CASES = {
    "hypergeometric": CaseTag.II, "legendre": CaseTag.III, "chebyshev1": CaseTag.III, "chebyshev2": CaseTag.III,
    "gegenbauer": CaseTag.III, "jacobi": CaseTag.III, "romanovski": CaseTag.III, "hermite": CaseTag.IV,
    "laguerre": CaseTag.V, "confluent": CaseTag.V, "bessel": CaseTag.VI,
}


def test_eleven_rows():
    assert set(catalog.NAMES) == set(CASES)


@pytest.mark.parametrize("name", sorted(CASES))
def test_row_classifies(name):
    e = catalog.lookup(name, ARGS.get(name, {}))
    assert e.case is CASES[name]
    assert classify(e.params) is e.case


def test_lookup_params():
    a = Fraction(2, 3)
    assert catalog.lookup("laguerre", {"alpha": a}).params == EquationParams.of(0, 1, 0, -1, a + 1)
    assert catalog.lookup("Hermite").params == EquationParams.of(0, 0, 1, -2, 0)
    assert catalog.lookup("legendre").params == EquationParams.of(-1, 0, 1, -2, 0)
    assert catalog.lookup("chebyshev1").params == EquationParams.of(-1, 0, 1, -1, 0)
    assert catalog.lookup("chebyshev2").params == EquationParams.of(-1, 0, 1, -3, 0)
    assert catalog.lookup("gegenbauer", {"k": a}).params == EquationParams.of(-1, 0, 1, -2 * (1 + a), 0)
    assert catalog.lookup("jacobi", {"alpha": 1, "beta": 2}).params == EquationParams.of(-1, 0, 1, 1, 2)
    assert catalog.lookup("romanovski", {"alpha": 1, "beta": 2}).params == EquationParams.of(1, 0, 1, 1, 2)
    assert catalog.lookup("bessel", {"alpha": 1, "beta": 2}).params == EquationParams.of(1, 0, 0, 3, 2)
    assert catalog.lookup("hypergeometric", {"a": 1, "b": 2, "c": 3}).params == EquationParams.of(-1, 1, 0, -4, 3)
    assert catalog.lookup("confluent", {"b": 2, "c": 3}).params == EquationParams.of(0, 1, 0, -2, 3)


def test_intervals():
    assert catalog.lookup("hermite").interval == (-math.inf, math.inf)
    assert catalog.lookup("bessel", {"alpha": 0, "beta": 2}).interval == (0.0, math.inf)
    assert catalog.lookup("legendre").interval == (-1.0, 1.0)
    assert catalog.lookup("laguerre", {"alpha": 0}).interval == (0.0, math.inf)


def test_lookup_errors():
    with pytest.raises(UnknownName):
        catalog.lookup("zernike")
    with pytest.raises(MissingArg):
        catalog.lookup("jacobi", {"alpha": 1})


def test_parse_args():
    assert catalog.parse_args("alpha=1/2, beta=3") == {"alpha": Fraction(1, 2), "beta": 3}
    assert catalog.parse_args(None) == {}
    with pytest.raises(ValueError):
        catalog.parse_args("alpha")


def test_textbook_families_small():
    assert catalog.legendre(2) == (3 * X**2 - 1) / 2
    assert catalog.chebyshev_t(3) == 4 * X**3 - 3 * X
    assert catalog.chebyshev_u(2) == 4 * X**2 - 1
    assert catalog.hermite(3) == 8 * X**3 - 12 * X
    assert catalog.laguerre(2, 0) == (X**2 - 4 * X + 2) / 2
    assert catalog.gegenbauer(2, 1) == catalog.chebyshev_u(2)
    assert catalog.bessel_polynomial(2, 2, 2) == 3 * X**2 + 3 * X + 1
    assert catalog.jacobi(1, 0, 0) == X


def test_chebyshev_example():
    y = solve(catalog.lookup("chebyshev1").params, 2).polynomial
    assert catalog.proportionality(y, 2 * X**2 - 1) != 0


def test_documented_ratios():
    rows = catalog.cross_validate("legendre", {}, 3)
    assert rows[2].solver == 12 * X**2 - 4
    assert rows[2].ratio == 8
    assert catalog.cross_validate("hermite", {}, 3)[3].ratio == -1
    lag = catalog.cross_validate("laguerre", {"alpha": 0}, 2)[2]
    assert lag.solver == X**2 - 4 * X + 2
    assert lag.ratio == 2  # against L_2 itself, i.e. 1 against 2! L_2


@pytest.mark.parametrize("name", sorted(CASES))
def test_cross_validate_to_six(name):
    rows = catalog.cross_validate(name, ARGS.get(name, {}), 6)
    for r in rows:
        if name == "romanovski":
            assert r.reference is None
        else:
            assert r.solver == r.reference * r.ratio


def test_jacobi_ratio_pattern():
    rows = catalog.cross_validate("jacobi", ARGS["jacobi"], 5)
    for r in rows:
        assert r.ratio == (-2) ** r.n * math.factorial(r.n)


def test_proportionality_failure_index():
    with pytest.raises(ProportionalityFailure) as info:
        catalog.proportionality(X**2 + 2 * X, X**2 + X, n=2)
    assert info.value.index == 2
