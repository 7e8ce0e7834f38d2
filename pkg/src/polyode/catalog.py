"""Named classical equations and textbook cross-checks.

Each row stores the equation in the form p2 y'' + p1 y' - tau y = 0, so
an equation quoted as ``... + n(n+1) y = 0`` appears here with
tau = -n(n+1). Textbook polynomials are generated from their own
recurrences or explicit sums, without touching the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import Polynomial, to_rational
from .errors import MissingArg, ProportionalityFailure, UnknownName
from .ode import CaseTag, EquationParams, classify, solve

INF = math.inf
X = Polynomial([0, 1])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: EquationParams
    case: CaseTag
    interval: tuple[float, float]
    args: dict


@dataclass(frozen=True)
class _Row:
    args: tuple[str, ...]
    build: Callable[..., tuple]
    case: CaseTag
    interval: tuple[float, float]


_ROWS: dict[str, _Row] = {
    "hypergeometric": _Row(("a", "b", "c"), lambda a, b, c: (-1, 1, 0, -(a + b + 1), c), CaseTag.II, (0.0, 1.0)),
    "legendre": _Row((), lambda: (-1, 0, 1, -2, 0), CaseTag.III, (-1.0, 1.0)),
    "chebyshev1": _Row((), lambda: (-1, 0, 1, -1, 0), CaseTag.III, (-1.0, 1.0)),
    "chebyshev2": _Row((), lambda: (-1, 0, 1, -3, 0), CaseTag.III, (-1.0, 1.0)),
    "gegenbauer": _Row(("k",), lambda k: (-1, 0, 1, -2 * (1 + k), 0), CaseTag.III, (-1.0, 1.0)),
    "jacobi": _Row(("alpha", "beta"), lambda al, be: (-1, 0, 1, al, be), CaseTag.III, (-1.0, 1.0)),
    "romanovski": _Row(("alpha", "beta"), lambda al, be: (1, 0, 1, al, be), CaseTag.III, (-INF, INF)),
    "hermite": _Row((), lambda: (0, 0, 1, -2, 0), CaseTag.IV, (-INF, INF)),
    "laguerre": _Row(("alpha",), lambda al: (0, 1, 0, -1, al + 1), CaseTag.V, (0.0, INF)),
    "confluent": _Row(("b", "c"), lambda b, c: (0, 1, 0, -b, c), CaseTag.V, (0.0, INF)),
    "bessel": _Row(("alpha", "beta"), lambda al, be: (1, 0, 0, al + 2, be), CaseTag.VI, (0.0, INF)),
}

NAMES = tuple(_ROWS)


def parse_args(text: str | None) -> dict[str, Fraction]:
    """'alpha=1/2,beta=3' -> {'alpha': 1/2, 'beta': 3}."""
    out: dict[str, Fraction] = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"expected name=value, got {part!r}")
        out[key.strip().lower()] = to_rational(value.strip())
    return out


def lookup(name: str, args: Mapping | None = None) -> CatalogEntry:
    key = name.strip().lower()
    if key not in _ROWS:
        raise UnknownName(f"unknown equation {name!r}; choose from {', '.join(NAMES)}")
    row = _ROWS[key]
    args = {k.lower(): to_rational(v) for k, v in (args or {}).items()}
    missing = [a for a in row.args if a not in args]
    if missing:
        raise MissingArg(f"{key} needs {', '.join(missing)}")
    vals = [args[a] for a in row.args]
    params = EquationParams.of(*row.build(*vals))
    return CatalogEntry(key, params, row.case, row.interval, {a: args[a] for a in row.args})


# -- textbook families ------------------------------------------------------

def _three_term(p0: Polynomial, p1: Polynomial, step: Callable[[int, Polynomial, Polynomial], Polynomial], n: int) -> Polynomial:
    if n == 0:
        return p0
    prev, cur = p0, p1
    for k in range(1, n):
        prev, cur = cur, step(k, cur, prev)
    return cur


def legendre(n: int) -> Polynomial:
    return _three_term(Polynomial([1]), X, lambda k, c, p: (X * c * (2 * k + 1) - p * k) / (k + 1), n)


def chebyshev_t(n: int) -> Polynomial:
    return _three_term(Polynomial([1]), X, lambda k, c, p: X * c * 2 - p, n)


def chebyshev_u(n: int) -> Polynomial:
    return _three_term(Polynomial([1]), X * 2, lambda k, c, p: X * c * 2 - p, n)


def hermite(n: int) -> Polynomial:
    """Physicists' H_n."""
    return _three_term(Polynomial([1]), X * 2, lambda k, c, p: X * c * 2 - p * (2 * k), n)


def laguerre(n: int, alpha) -> Polynomial:
    a = to_rational(alpha)
    return _three_term(Polynomial([1]), Polynomial([1 + a, -1]),
                       lambda k, c, p: (Polynomial([2 * k + 1 + a, -1]) * c - p * (k + a)) / (k + 1), n)


def gegenbauer(n: int, lam) -> Polynomial:
    lam = to_rational(lam)
    return _three_term(Polynomial([1]), X * (2 * lam),
                       lambda k, c, p: (X * c * (2 * (k + lam)) - p * (k + 2 * lam - 1)) / (k + 1), n)


def _rising(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def bessel_polynomial(n: int, a, b) -> Polynomial:
    """Generalised Bessel y_n(x; a, b) = sum C(n,k) (n+a-1)_k (x/b)^k."""
    a, b = to_rational(a), to_rational(b)
    return Polynomial([math.comb(n, k) * _rising(n + a - 1, k) / b**k for k in range(n + 1)])


def jacobi(n: int, a, b) -> Polynomial:
    """P_n^(a,b) from the binomial double sum."""
    a, b = to_rational(a), to_rational(b)
    half_minus = Polynomial([Fraction(-1, 2), Fraction(1, 2)])  # (x - 1)/2
    half_plus = Polynomial([Fraction(1, 2), Fraction(1, 2)])  # (x + 1)/2
    total = Polynomial()
    for s in range(n + 1):
        c1 = _rising(a + s + 1, n - s) / math.factorial(n - s)
        c2 = _rising(b + n - s + 1, s) / math.factorial(s)
        total = total + half_minus**s * half_plus ** (n - s) * (c1 * c2)
    return total


def hypergeometric_2f1_poly(n: int, a, b, c) -> Polynomial:
    """2F1(-n, n + a + b; c; x) as a polynomial, by direct summation."""
    a, b, c = (to_rational(v) for v in (a, b, c))
    coeffs = []
    term = Fraction(1)
    for k in range(n + 1):
        coeffs.append(term)
        term = term * (-n + k) * (n + a + b + k) / ((c + k) * (k + 1))
    return Polynomial(coeffs)


def _compose_scale(p: Polynomial, s: Fraction) -> Polynomial:
    return Polynomial([c * s**k for k, c in enumerate(p.coeffs)])


def textbook(name: str, args: Mapping, n: int) -> Polynomial | None:
    """Textbook polynomial for the row, or None when no standard family is attached."""
    key = name.strip().lower()
    g = {k: to_rational(v) for k, v in args.items()}
    if key == "legendre":
        return legendre(n)
    if key == "chebyshev1":
        return chebyshev_t(n)
    if key == "chebyshev2":
        return chebyshev_u(n)
    if key == "hermite":
        return hermite(n)
    if key == "laguerre":
        return laguerre(n, g["alpha"])
    if key == "gegenbauer":
        return gegenbauer(n, g["k"] + Fraction(1, 2))
    if key == "bessel":
        return bessel_polynomial(n, g["alpha"] + 2, g["beta"])
    if key == "confluent":
        return _compose_scale(laguerre(n, g["c"] - 1), g["b"])
    if key == "hypergeometric":
        return hypergeometric_2f1_poly(n, g["a"], g["b"], g["c"])
    if key == "jacobi":
        # table form (1 - x^2) y'' + (alpha x + beta) y' against the standard one
        ja = (-g["alpha"] - 2 - g["beta"]) / 2
        jb = (-g["alpha"] - 2 + g["beta"]) / 2
        return jacobi(n, ja, jb)
    return None


def proportionality(a: Polynomial, b: Polynomial, n: int = 0) -> Fraction:
    """The rational r with a = r b, or ProportionalityFailure at the first offending index."""
    size = max(len(a), len(b))
    ratio: Fraction | None = None
    for k in range(size):
        ak, bk = a[k], b[k]
        if bk == 0:
            if ak != 0:
                raise ProportionalityFailure(n, k)
            continue
        r = ak / bk
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise ProportionalityFailure(n, k)
    if ratio is None or ratio == 0:
        raise ProportionalityFailure(n, 0)
    return ratio


@dataclass(frozen=True)
class CrossCheckRow:
    n: int
    solver: Polynomial
    reference: Polynomial | None
    ratio: Fraction | None


def cross_validate(name: str, args: Mapping | None, n_max: int) -> list[CrossCheckRow]:
    entry = lookup(name, args)
    assert classify(entry.params) == entry.case
    rows = []
    for n in range(n_max + 1):
        y = solve(entry.params, n).polynomial
        ref = textbook(entry.name, entry.args, n)
        ratio = proportionality(y, ref, n) if ref is not None else None
        rows.append(CrossCheckRow(n, y, ref, ratio))
    return rows
