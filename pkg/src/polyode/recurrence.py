"""Three-term recurrences y_{n+2} = (A_n x + B_n) y_{n+1} + C_n y_n.

:func:`generate` uses the general coefficients, which stay valid in every
case because they are rational in the parameters. :func:`case_recurrence`
runs the specialised relation for each case separately so the two paths can
be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import Polynomial
from .errors import DegenerateDenominator
from .ode import CaseTag, EquationParams, classify


@dataclass(frozen=True)
class RecurrenceCoeffs:
    n: int
    A: Fraction
    B: Fraction
    C: Fraction


def _denominators(p: EquationParams, n: int) -> tuple[Fraction, Fraction]:
    d1 = n * p.a20 + p.a10
    d2 = 2 * n * p.a20 + p.a10
    if d1 == 0:
        raise DegenerateDenominator(n, "n*a20 + a10")
    if d2 == 0:
        raise DegenerateDenominator(n, "2n*a20 + a10")
    return d1, d2


def general_coeffs(params: EquationParams, n: int) -> RecurrenceCoeffs:
    a20, a21, a22, a10, a11 = params.as_tuple()
    d1, d2 = _denominators(params, n)
    u = (2 * n + 1) * a20 + a10
    v = 2 * (n + 1) * a20 + a10
    A = u * v / d1
    B = u * (2 * n * (n + 1) * a20 * a21 + 2 * (n + 1) * a10 * a21 - 2 * a11 * a20 + a10 * a11) / (d1 * d2)
    quad = (
        (4 * a22 * a20 * a20 - a20 * a21 * a21) * n * n
        + (4 * a20 * a10 * a22 - a10 * a21 * a21) * n
        + a10 * a10 * a22
        - a11 * a10 * a21
        + a20 * a11 * a11
    )
    C = (n + 1) * v * quad / (d1 * d2)
    return RecurrenceCoeffs(n, A, B, C)


def repeated_root_C(params: EquationParams, n: int) -> Fraction:
    """C_n in the factored form valid when a21^2 = 4 a20 a22 (a20 != 0)."""
    a20, a21, _, a10, a11 = params.as_tuple()
    d1, d2 = _denominators(params, n)
    return (n + 1) * (2 * (n + 1) * a20 + a10) * (a10 * a21 - 2 * a11 * a20) ** 2 / (4 * a20 * d1 * d2)


def _run(y1: Polynomial, n_max: int, coeffs: Callable[[int], tuple[Fraction, Fraction, Fraction]]) -> list[Polynomial]:
    ys = [Polynomial([1])]
    if n_max >= 1:
        ys.append(y1)
    for n in range(n_max - 1):
        A, B, C = coeffs(n)
        ys.append(Polynomial([B, A]) * ys[n + 1] + C * ys[n])
    return ys


def generate(params: EquationParams, n_max: int) -> list[Polynomial]:
    """[y_0, ..., y_{n_max}] from the general recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")

    def coeffs(n):
        c = general_coeffs(params, n)
        return c.A, c.B, c.C

    return _run(params.p1, n_max, coeffs)


# -- specialised relations --------------------------------------------------

def _case_i(p: EquationParams):
    a21, a22, a10, a11 = p.a21, p.a22, p.a10, p.a11
    if a21 * a11 - a22 * a10 == 0:
        s = a22 * a10 / a21
        return Polynomial([s, a10]), lambda n: (a10, 2 * (n + 1) * a21 + s, -n * (n + 1) * a21 * a21)
    return p.p1, lambda n: (a10, 2 * (n + 1) * a21 + a11, -(n + 1) * (a21 * a21 * n + a11 * a21 - a10 * a22))


def _case_ii(p: EquationParams):
    a20, a21, a10, a11 = p.a20, p.a21, p.a10, p.a11

    if a10 * a21 - a20 * a11 != 0:
        def coeffs(n):
            d1, d2 = _denominators(p, n)
            u = (2 * n + 1) * a20 + a10
            v = 2 * (n + 1) * a20 + a10
            A = u * v / d1
            B = u * (2 * a20 * a21 * n * n + 2 * a21 * (a20 + a10) * n + 2 * a10 * a21 - 2 * a11 * a20 + a10 * a11) / (d1 * d2)
            C = -(n + 1) * v * (a20 * a21 * a21 * n * n + a10 * a21 * a21 * n + a21 * a11 * a10 - a20 * a11 * a11) / (d1 * d2)
            return A, B, C
    else:
        def coeffs(n):
            d1, d2 = _denominators(p, n)
            u = (2 * n + 1) * a20 + a10
            v = 2 * (n + 1) * a20 + a10
            A = u * v / d1
            B = a21 * u * (2 * a20 * a20 * n * n + 2 * a20 * (a20 + a10) * n + a10 * a10) / (a20 * d1 * d2)
            C = -a21 * a21 * n * (n + 1) * v / d2
            return A, B, C

    return p.p1, coeffs


def _case_iii(p: EquationParams):
    a20, a22, a10, a11 = p.a20, p.a22, p.a10, p.a11

    def coeffs(n):
        d1, d2 = _denominators(p, n)
        u = (2 * n + 1) * a20 + a10
        v = 2 * (n + 1) * a20 + a10
        A = u * v / d1
        B = a11 * u * (a10 - 2 * a20) / (d1 * d2)
        C = (n + 1) * v * (4 * a22 * a20 * a20 * n * n + 4 * a20 * a10 * a22 * n + a10 * a10 * a22 + a20 * a11 * a11) / (d1 * d2)
        return A, B, C

    return p.p1, coeffs


def _case_iv(p: EquationParams):
    return p.p1, lambda n: (p.a10, p.a11, (n + 1) * p.a10 * p.a22)


def _case_v(p: EquationParams):
    a21, a10, a11 = p.a21, p.a10, p.a11
    return p.p1, lambda n: (a10, 2 * (n + 1) * a21 + a11, -a21 * (n + 1) * (a21 * n + a11))


def _case_vi(p: EquationParams):
    a20, a10, a11 = p.a20, p.a10, p.a11

    def coeffs(n):
        d1, d2 = _denominators(p, n)
        u = (2 * n + 1) * a20 + a10
        v = 2 * (n + 1) * a20 + a10
        return u * v / d1, a11 * u * (a10 - 2 * a20) / (d1 * d2), a20 * a11 * a11 * (n + 1) * v / (d1 * d2)

    return p.p1, coeffs


def _general(p: EquationParams):
    def coeffs(n):
        c = general_coeffs(p, n)
        return c.A, c.B, c.C

    return p.p1, coeffs


_CASES = {
    CaseTag.GENERAL: _general,
    CaseTag.I: _case_i,
    CaseTag.II: _case_ii,
    CaseTag.III: _case_iii,
    CaseTag.IV: _case_iv,
    CaseTag.V: _case_v,
    CaseTag.VI: _case_vi,
}


def case_recurrence(params: EquationParams, tag: CaseTag | None = None, n_max: int = 4) -> list[Polynomial]:
    """[y_0, ..., y_{n_max}] from the relation specialised to ``tag``."""
    actual = classify(params)
    if tag is None:
        tag = actual
    if tag != actual:
        raise ValueError(f"parameters classify as {actual.value}, not {tag.value}")
    y1, coeffs = _CASES[tag](params)
    return _run(y1, n_max, coeffs)
