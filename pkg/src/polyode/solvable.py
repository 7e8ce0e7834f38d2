"""Equations solved by y_n = f_n(x) exp(1/2 int phi), phi = (p1 - Q)/p2.

If f_n solves p2 f'' + p1 f' - tau_n f = 0 then y_n solves

    y'' + (Q/p2) y' - V y = 0,
    V = tau_n/p2 + (phi/2)' + (p1^2 - Q^2)/(4 p2^2)

for any differentiable Q. Polynomial Q keeps every coefficient in the exact
rational-function layer, so the residual can be checked symbolically as
well as in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad as scipy_quad

from .algebra import Polynomial, RationalFunction, to_rational
from .errors import SingularPoint
from .integrals import rational_antiderivative
from .ode import CaseTag, EquationParams, classify, eigenvalue, solve


@dataclass(frozen=True)
class SolvableClassSpec:
    params: EquationParams
    Q: Polynomial
    n: int
    f_n: Polynomial
    phase_integrand: RationalFunction  # (p1 - Q) / (2 p2)
    P: RationalFunction
    V: RationalFunction
    base_point: Fraction

    @property
    def tau(self) -> Fraction:
        return eigenvalue(self.params, self.n)

    def coefficient_functions(self) -> dict[str, Callable]:
        """Float callables for Q/p2, the full potential and its three pieces."""
        p2 = RationalFunction(self.params.p2)
        tau_term = RationalFunction(Polynomial([self.tau])) / p2
        deriv_term = self.phase_integrand.derivative()
        square_term = RationalFunction(self.params.p1 * self.params.p1 - self.Q * self.Q) / (p2 * p2 * 4)
        return {name: _float_fn(rf) for name, rf in
                (("P", self.P), ("V", self.V), ("tau_term", tau_term), ("derivative_term", deriv_term),
                 ("square_term", square_term))}


def _float_fn(rf: RationalFunction) -> Callable:
    return lambda x: rf.num.eval_array(np.asarray(x, float)) / rf.den.eval_array(np.asarray(x, float))


def _base_point(p2: Polynomial) -> Fraction:
    b = Fraction(0)
    while p2(b) == 0:
        b += 1
    return b


def potential(params: EquationParams, Q: Polynomial, n: int) -> RationalFunction:
    p2 = RationalFunction(params.p2)
    phi = RationalFunction(params.p1 - Q) / p2
    return (RationalFunction(Polynomial([eigenvalue(params, n)])) / p2 + phi.derivative() / 2
            + RationalFunction(params.p1 * params.p1 - Q * Q) / (p2 * p2 * 4))


def build_class(params: EquationParams, Q, n: int) -> SolvableClassSpec:
    Q = Q if isinstance(Q, Polynomial) else Polynomial(Q)
    f_n = solve(params, n).polynomial
    p2 = RationalFunction(params.p2)
    return SolvableClassSpec(
        params=params,
        Q=Q,
        n=n,
        f_n=f_n,
        phase_integrand=RationalFunction(params.p1 - Q) / (p2 * 2),
        P=RationalFunction(Q) / p2,
        V=potential(params, Q, n),
        base_point=_base_point(params.p2),
    )


def exact_residual(spec: SolvableClassSpec) -> RationalFunction:
    """(y'' + P y' - V y) / exp-factor, as an exact rational function."""
    f = RationalFunction(spec.f_n)
    half_phi = spec.phase_integrand
    df, d2f = f.derivative(), f.derivative().derivative()
    return (d2f + df * half_phi * 2 + f * (half_phi.derivative() + half_phi * half_phi)
            + spec.P * (df + f * half_phi) - spec.V * f)


def exp_factor(spec: SolvableClassSpec) -> Callable:
    F = rational_antiderivative(spec.phase_integrand)
    shift = float(F(float(spec.base_point)))
    return lambda x: np.exp(F(x) - shift)


def _check_points(spec: SolvableClassSpec, points) -> np.ndarray:
    x = np.asarray(points, dtype=float)
    p2 = spec.params.p2.eval_array(x)
    scale = max(1.0, float(np.max(np.abs(x)))) ** max(spec.params.p2.degree, 0)
    if np.any(np.abs(p2) <= 1e-12 * scale):
        raise SingularPoint("a test point sits on a zero of p2")
    return x


def verify_class(spec: SolvableClassSpec, points: Sequence[float]) -> float:
    """max |y'' + P y' - V y| / max(1, |y|) over the points, from analytic derivatives."""
    x = _check_points(spec, points)
    v = exp_factor(spec)(x)
    hp = _float_fn(spec.phase_integrand)(x)
    dhp = _float_fn(spec.phase_integrand.derivative())(x)
    P = _float_fn(spec.P)(x)
    V = _float_fn(spec.V)(x)
    pv = np.polynomial.polynomial.polyval
    c = spec.f_n.float_coeffs()
    dc = spec.f_n.derivative().float_coeffs()
    d2c = spec.f_n.derivative().derivative().float_coeffs()
    f = pv(x, c) if len(c) else np.zeros_like(x)
    df = pv(x, dc) if len(dc) else np.zeros_like(x)
    d2f = pv(x, d2c) if len(d2c) else np.zeros_like(x)
    y = f * v
    dy = (df + f * hp) * v
    d2y = (d2f + 2 * df * hp + f * (dhp + hp * hp)) * v
    res = d2y + P * dy - V * y
    return float(np.max(np.abs(res) / np.maximum(1.0, np.abs(y))))


def verify_callable(params: EquationParams, n: int, Q: Callable, dQ: Callable, points: Sequence[float]) -> float:
    """Residual check for a non-polynomial Q given with its derivative.

    The exp-factor is integrated numerically from the base point; it only
    scales the residual, which is assembled from the same analytic pieces as
    :func:`verify_class`.
    """
    f_n = solve(params, n).polynomial
    tau = float(eigenvalue(params, n))
    p2, dp2 = params.p2, params.p2.derivative()
    a10, a11 = float(params.a10), float(params.a11)
    base = float(_base_point(p2))
    out = 0.0
    for x in points:
        x = float(x)
        p2x, dp2x = float(p2(x)), float(dp2(x))
        if abs(p2x) < 1e-12:
            raise SingularPoint(f"p2 vanishes at {x}")
        p1x, qx, dqx = a10 * x + a11, float(Q(x)), float(dQ(x))
        hp = (p1x - qx) / (2 * p2x)
        dhp = ((a10 - dqx) * p2x - (p1x - qx) * dp2x) / (2 * p2x * p2x)
        P = qx / p2x
        V = tau / p2x + dhp + (p1x * p1x - qx * qx) / (4 * p2x * p2x)
        g, _ = scipy_quad(lambda t: (a10 * t + a11 - float(Q(t))) / (2 * float(p2(t))), base, x)
        v = math.exp(g)
        f, df, d2f = float(f_n(x)), float(f_n.derivative()(x)), float(f_n.derivative().derivative()(x))
        res = (d2f + 2 * df * hp + f * (dhp + hp * hp) + P * (df + f * hp) - V * f) * v
        out = max(out, abs(res) / max(1.0, abs(f * v)))
    return out


# -- quoted specialisations ------------------------------------------------

def quoted_potential(params: EquationParams, Q: Polynomial, n: int) -> RationalFunction:
    """The bracketed potential in its per-case quoted form, assembled literally."""
    a20, a21, a22, a10, a11 = params.as_tuple()
    tag = classify(params)
    p1 = params.p1
    sq = RationalFunction(p1 * p1 - Q * Q)

    def rf(p) -> RationalFunction:
        return RationalFunction(p if isinstance(p, Polynomial) else Polynomial([p]))

    if tag is CaseTag.IV:
        return rf((2 * n + 1) * a10) / (2 * a22) - rf(Q.derivative()) / (2 * a22) + sq / (4 * a22 * a22)
    if tag is CaseTag.I:
        den, lead = Polynomial([a22, a21]), n * a10
    elif tag is CaseTag.II:
        den, lead = Polynomial([0, 1]) * Polynomial([a21, a20]), n * (n - 1) * a20 + n * a10
    elif tag is CaseTag.III:
        den, lead = Polynomial([a22, 0, a20]), n * (n - 1) * a20 + n * a10
    elif tag is CaseTag.V:
        den, lead = Polynomial([0, a21]), n * a10
    elif tag is CaseTag.VI:
        den, lead = Polynomial([0, 0, a20]), n * (n - 1) * a20 + n * a10
    else:
        p2 = RationalFunction(params.p2)
        return rf(n * (n - 1) * a20 + n * a10) / p2 + (RationalFunction(p1 - Q) / p2).derivative() / 2 + sq / (p2 * p2 * 4)
    d = RationalFunction(den)
    return rf(lead) / d + (RationalFunction(p1 - Q) / (d * 2)).derivative() + sq / (d * d * 4)


def quoted_matches(params: EquationParams, Q: Polynomial, n: int) -> bool:
    return quoted_potential(params, Q, n) == potential(params, Q, n)


def parse_q(text: str) -> Polynomial:
    """Constant-first coefficient list such as "0,0,1"."""
    parts = [t.strip() for t in text.split(",") if t.strip()]
    return Polynomial([to_rational(t) for t in parts])
