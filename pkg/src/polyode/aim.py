"""Asymptotic iteration for y'' = lambda_0 y' + s_0 y.

For the equation p2 y'' + p1 y' - tau y = 0 the seeds are lambda_0 = -p1/p2
and s_0 = tau/p2. Iterating

    lambda_k = lambda_{k-1}' + s_{k-1} + lambda_0 lambda_{k-1}
    s_k      = s_{k-1}' + s_0 lambda_{k-1}

the quantity delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n vanishes
identically in x exactly when tau is one of the first n + 1 eigenvalues.
Everything here is exact; tau is a concrete rational and each candidate
value reruns the iteration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, RationalFunction, to_rational
from .ode import EquationParams, eigenvalue

DEFAULT_CAP = 6


@dataclass(frozen=True)
class AimState:
    k: int
    lambda_k: RationalFunction
    s_k: RationalFunction
    lambda_prev: RationalFunction
    s_prev: RationalFunction


def seeds(params: EquationParams, tau) -> tuple[RationalFunction, RationalFunction]:
    tau = to_rational(tau)
    return RationalFunction(-params.p1, params.p2), RationalFunction(Polynomial([tau]), params.p2)


def aim_sequence(params: EquationParams, tau, n: int) -> list[tuple[RationalFunction, RationalFunction]]:
    """[(lambda_0, s_0), ..., (lambda_n, s_n)]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam0, s0 = seeds(params, tau)
    out = [(lam0, s0)]
    for _ in range(n):
        lam, s = out[-1]
        out.append((lam.derivative() + s + lam0 * lam, s.derivative() + s0 * lam))
    return out


def aim_iterate(params: EquationParams, tau, n: int) -> AimState:
    seq = aim_sequence(params, tau, n)
    lam, s = seq[n]
    if n == 0:
        prev_lam, prev_s = RationalFunction(Polynomial([1])), RationalFunction(Polynomial())
    else:
        prev_lam, prev_s = seq[n - 1]
    return AimState(n, lam, s, prev_lam, prev_s)


def aim_delta(params: EquationParams, tau, n: int) -> RationalFunction:
    """delta_n as an exact rational function of x (lambda_{-1} = 1, s_{-1} = 0)."""
    st = aim_iterate(params, tau, n)
    return st.lambda_k * st.s_prev - st.lambda_prev * st.s_k


def delta_vanishes(params: EquationParams, tau, n: int) -> bool:
    return aim_delta(params, tau, n).is_zero()


def eigenvalue_set(params: EquationParams, n: int) -> list[Fraction]:
    return sorted({eigenvalue(params, k) for k in range(n + 1)})


@dataclass(frozen=True)
class DeltaPolynomial:
    """delta_n at a fixed abscissa x0, as a polynomial in tau."""

    n: int
    x0: Fraction
    coeffs: Polynomial

    def __call__(self, tau) -> Fraction:
        return self.coeffs(to_rational(tau))

    def quotient_by_eigenvalues(self, params: EquationParams) -> tuple[Polynomial, Polynomial]:
        """Divide by prod (tau - tau_k) over the distinct eigenvalues; returns (quotient, remainder)."""
        prod = Polynomial([1])
        for t in eigenvalue_set(params, self.n):
            prod = prod * Polynomial([-t, 1])
        return divmod(self.coeffs, prod)


def _lagrange(xs: list[Fraction], ys: list[Fraction]) -> Polynomial:
    total = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


def _regular_point(params: EquationParams) -> Fraction:
    x0 = Fraction(1, 3)
    while params.p2(x0) == 0:
        x0 += 1
    return x0


def delta_polynomial(params: EquationParams, n: int, x0=None) -> DeltaPolynomial:
    """Interpolate tau -> delta_n(x0; tau); lambda_k and s_k have tau-degree at most k + 1."""
    x0 = _regular_point(params) if x0 is None else to_rational(x0)
    if params.p2(x0) == 0:
        raise ValueError("x0 is a pole of the seeds")
    count = 2 * n + 3
    taus = [Fraction(j) for j in range(count)]
    vals = [aim_delta(params, t, n)(x0) for t in taus]
    return DeltaPolynomial(n, x0, _lagrange(taus, vals))


@dataclass(frozen=True)
class FactorizationReport:
    n: int
    zeros: list[Fraction]
    vanishes_at_eigenvalues: bool
    nonzero_outside: bool
    outside_samples: list[Fraction]

    @property
    def ok(self) -> bool:
        return self.vanishes_at_eigenvalues and self.nonzero_outside


def delta_factorization_report(params: EquationParams, n: int, cap: int = DEFAULT_CAP,
                               rng: random.Random | None = None, samples: int = 10) -> FactorizationReport:
    if n > cap:
        raise ValueError(f"n = {n} exceeds the iteration cap {cap}")
    rng = rng or random.Random(0)
    eig = eigenvalue_set(params, n)
    at_eig = all(delta_vanishes(params, t, n) for t in eig)
    outside: list[Fraction] = []
    eig_set = set(eig)
    while len(outside) < samples:
        t = Fraction(rng.randint(-60, 60), rng.randint(1, 7))
        if t not in eig_set and t not in outside:
            outside.append(t)
    nonzero = all(not delta_vanishes(params, t, n) for t in outside)
    return FactorizationReport(n, eig, at_eig, nonzero, outside)


def delta_factorization_check(params: EquationParams, n: int, cap: int = DEFAULT_CAP,
                              rng: random.Random | None = None) -> bool:
    return delta_factorization_report(params, n, cap, rng).ok
