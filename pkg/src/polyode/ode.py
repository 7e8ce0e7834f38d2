"""The equation model.

The family studied here is

    (a20 x^2 + a21 x + a22) y'' + (a10 x + a11) y' - tau y = 0,

with concrete rational coefficients. This module holds the parameter tuple,
the eigenvalue condition, case classification, the exact residual, and the
brute-force power-series solver used as the independent oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Polynomial, to_rational
from .errors import (
    DegenerateDenominator,
    DegenerateSpectrum,
    InvalidParameters,
    NoPolynomialSolution,
)


class CaseTag(str, enum.Enum):
    GENERAL = "General"
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    @classmethod
    def parse(cls, text: str) -> "CaseTag":
        key = text.strip()
        for tag in cls:
            if tag.value.lower() == key.lower():
                return tag
        raise ValueError(f"unknown case tag {text!r}")


@dataclass(frozen=True)
class EquationParams:
    """Coefficients ``(a20, a21, a22, a10, a11)`` as exact rationals."""

    a20: Fraction
    a21: Fraction
    a22: Fraction
    a10: Fraction
    a11: Fraction

    def __post_init__(self):
        for name in ("a20", "a21", "a22", "a10", "a11"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.a20 == 0 and self.a21 == 0 and self.a22 == 0:
            raise InvalidParameters("a20 = a21 = a22 = 0: the equation is not second order")
        if self.a20 == 0 and self.a10 == 0:
            raise InvalidParameters("a20 = a10 = 0: no polynomial solutions of every degree")

    @classmethod
    def of(cls, *values) -> "EquationParams":
        if len(values) == 1:
            values = tuple(values[0])
        return cls(*values)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        return (self.a20, self.a21, self.a22, self.a10, self.a11)

    @property
    def p2(self) -> Polynomial:
        return Polynomial([self.a22, self.a21, self.a20])

    @property
    def p1(self) -> Polynomial:
        return Polynomial([self.a11, self.a10])

    @property
    def discriminant(self) -> Fraction:
        return self.a21 * self.a21 - 4 * self.a20 * self.a22

    def to_strings(self) -> dict[str, str]:
        from .algebra import format_rational

        return {k: format_rational(v) for k, v in zip(("a20", "a21", "a22", "a10", "a11"), self.as_tuple())}

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


def eigenvalue(params: EquationParams, n: int) -> Fraction:
    """tau_n = n(n-1) a20 + n a10."""
    if n < 0:
        raise ValueError("degree index must be nonnegative")
    return n * (n - 1) * params.a20 + n * params.a10


def classify(params: EquationParams) -> CaseTag:
    z20, z21, z22 = params.a20 == 0, params.a21 == 0, params.a22 == 0
    if z20 and z21:
        return CaseTag.IV
    if z20 and z22:
        return CaseTag.V
    if z21 and z22:
        return CaseTag.VI
    if z20:
        return CaseTag.I
    if z22:
        return CaseTag.II
    if z21:
        return CaseTag.III
    return CaseTag.GENERAL


def residual(params: EquationParams, tau, y: Polynomial) -> Polynomial:
    """p2 y'' + p1 y' - tau y, exactly."""
    d1 = y.derivative()
    return params.p2 * d1.derivative() + params.p1 * d1 - to_rational(tau) * y


def normalization_product(params: EquationParams, n: int) -> Fraction:
    """Canonical leading coefficient: prod_{k=n-1}^{2n-2} (a10 + k a20)."""
    out = Fraction(1)
    for k in range(n - 1, 2 * n - 1):
        out *= params.a10 + k * params.a20
    return out


def operator_matrix(params: EquationParams, tau, n: int) -> list[list[Fraction]]:
    """Matrix of y -> p2 y'' + p1 y' - tau y on the basis 1, x, ..., x^n.

    Column k holds the image of x^k; it is upper triangular with diagonal
    k(k-1) a20 + k a10 - tau.
    """
    tau = to_rational(tau)
    a20, a21, a22, a10, a11 = params.as_tuple()
    size = n + 1
    m = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        m[k][k] = k * (k - 1) * a20 + k * a10 - tau
        if k >= 1:
            m[k - 1][k] = k * (k - 1) * a21 + k * a11
        if k >= 2:
            m[k - 2][k] = k * (k - 1) * a22
    return m


def nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact kernel basis via reduced row echelon form, first-nonzero pivoting."""
    rows = [list(r) for r in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def kernel(params: EquationParams, tau, n: int) -> list[Polynomial]:
    """All polynomial solutions of degree <= n at the given tau (a basis)."""
    return [Polynomial(v) for v in nullspace(operator_matrix(params, tau, n))]


def series_solve(params: EquationParams, n: int) -> Polynomial:
    """Polynomial solution at tau_n from the coefficient system alone.

    The result is scaled so its leading coefficient equals
    :func:`normalization_product` when that is nonzero, and is monic
    otherwise. A repeated eigenvalue with a multi-dimensional kernel raises
    :class:`DegenerateSpectrum` carrying the whole basis.
    """
    basis = kernel(params, eigenvalue(params, n), n)
    if not basis:
        raise NoPolynomialSolution(f"empty kernel at n={n} for {params}")
    if len(basis) > 1:
        raise DegenerateSpectrum(n, [b.monic() for b in basis])
    (y,) = basis
    prod = normalization_product(params, n)
    if prod != 0:
        return y.scale_to_leading(prod)
    return y.monic()


@dataclass(frozen=True)
class SolveReport:
    n: int
    tau: Fraction
    polynomial: Polynomial
    method: str
    residual_ok: bool
    diagnostics: tuple[str, ...] = field(default=())


METHODS = ("recurrence", "closed_form", "series_oracle")


def solve(params: EquationParams, n: int, method: str = "recurrence", fallback: bool = True) -> SolveReport:
    """Degree-n polynomial solution by the requested method.

    ``recurrence`` falls back to the series oracle when a recurrence
    denominator vanishes (unless ``fallback`` is false, in which case the
    :class:`DegenerateDenominator` propagates). ``closed_form`` expands the
    hypergeometric representation exactly.
    """
    from . import hyper, recurrence

    tau = eigenvalue(params, n)
    notes: list[str] = []
    if method == "recurrence":
        try:
            y = recurrence.generate(params, n)[n]
        except DegenerateDenominator as exc:
            if not fallback:
                raise
            notes.append(f"{exc}; series oracle used instead")
            y = series_solve(params, n)
            method = "series_oracle"
    elif method == "closed_form":
        y = hyper.expand_form(hyper.closed_form(params, n))
    elif method == "series_oracle":
        y = series_solve(params, n)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if normalization_product(params, n) == 0:
        notes.append("normalization product vanishes; the solution has degree below n")
        if y.is_zero():
            notes.append("recurrence collapsed to zero; series oracle used instead")
            y = series_solve(params, n)
            method = "series_oracle"
    ok = residual(params, tau, y).is_zero()
    return SolveReport(n, tau, y, method, ok, tuple(notes))
