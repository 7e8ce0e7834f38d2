"""Terminating hypergeometric sums and closed-form solutions.

A :class:`HypergeometricForm` represents

    prefactor * u**factor_power * pFq(upper; lower; scale * u**power),
    u = slope * x + intercept,

which covers every representation used here (for most branches
``factor_power = 0`` and ``scale = power = 1``, so the argument is affine in
x). Components are stored exactly, either as rationals or as elements of
Q(sqrt(d)) when a square root is irrational. That allows both an exact
expansion back to coefficients and a complex-float evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, QuadraticSurd, to_complex
from .errors import ImaginaryResidue, NonTerminating, UnsupportedBranch, ZeroLowerParameter
from .ode import CaseTag, EquationParams, classify

IMAG_TOL = 1e-9


def pochhammer(lam, k: int):
    """Rising factorial (lam)_k."""
    if k < 0:
        raise ValueError("Pochhammer order must be nonnegative")
    out = Fraction(1) if not isinstance(lam, (float, complex)) else type(lam)(1)
    for j in range(k):
        out = out * (lam + j)
    return out


def _is_zero(v) -> bool:
    return v == 0


def _nonpositive_integer(v) -> int | None:
    """Return m >= 0 when v == -m exactly, else None."""
    if isinstance(v, QuadraticSurd):
        if not v.is_rational():
            return None
        v = v.a
    if isinstance(v, complex):
        if v.imag != 0:
            return None
        v = v.real
    if isinstance(v, float):
        return int(-v) if v <= 0 and v == int(v) else None
    v = Fraction(v)
    if v <= 0 and v.denominator == 1:
        return int(-v)
    return None


def series_terms(upper: Sequence, lower: Sequence) -> list:
    """Coefficients t_k = prod (a)_k / (prod (b)_k k!) up to termination."""
    stops = [m for m in (_nonpositive_integer(a) for a in upper) if m is not None]
    if not stops:
        raise NonTerminating("no upper parameter is a nonpositive integer")
    last = min(stops)
    exact = not any(isinstance(v, (float, complex)) for v in (*upper, *lower))
    t = Fraction(1) if exact else 1.0
    terms = [t]
    for k in range(last):
        num = 1
        for a in upper:
            num = num * (a + k)
        den = k + 1
        for b in lower:
            bk = b + k
            if _is_zero(bk):
                raise ZeroLowerParameter(f"lower parameter {b} vanishes at term {k + 1}")
            den = den * bk
        t = t * num / den
        terms.append(t)
    return terms


def terminating_pfq(upper: Sequence, lower: Sequence, z):
    """Finite sum of pFq(upper; lower; z), left to right."""
    total = 0
    zk = 1
    for t in series_terms(upper, lower):
        total = total + t * zk
        zk = zk * z
    return total


def chu_vandermonde(n: int, b, c):
    """Closed value of 2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
    return pochhammer(c - b, n) / pochhammer(c, n)


def saalschutz(n: int, a, b, c):
    """Closed value of the balanced 3F2(-n, a, b; c, 1+a+b-c-n; 1)."""
    return pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n))


@dataclass(frozen=True)
class HypergeometricForm:
    kind: str
    branch: str
    prefactor: object
    upper: tuple
    lower: tuple
    slope: object
    intercept: object
    scale: object = Fraction(1)
    power: int = 1
    factor_power: int = 0

    @property
    def argument_affine(self) -> tuple[complex, complex]:
        return to_complex(self.slope), to_complex(self.intercept)

    @property
    def prefactor_complex(self) -> complex:
        return to_complex(self.prefactor)

    @property
    def upper_complex(self) -> list[complex]:
        return [to_complex(a) for a in self.upper]

    @property
    def lower_complex(self) -> list[complex]:
        return [to_complex(b) for b in self.lower]

    def describe(self) -> dict:
        def c(v):
            v = to_complex(v)
            return [v.real, v.imag]

        return {
            "kind": self.kind,
            "branch": self.branch,
            "prefactor": c(self.prefactor),
            "upper": [c(a) for a in self.upper],
            "lower": [c(b) for b in self.lower],
            "slope": c(self.slope),
            "intercept": c(self.intercept),
            "scale": c(self.scale),
            "power": self.power,
            "factor_power": self.factor_power,
        }


def _real_terms(form: HypergeometricForm) -> list:
    terms = series_terms(form.upper, form.lower)
    for k, t in enumerate(terms):
        if t != 0 and form.factor_power + form.power * k < 0:
            raise ValueError("form has a negative power of the linear factor")
    return terms


def closed_form_eval(form: HypergeometricForm, x: float, exact: bool = True) -> float:
    """Evaluate the form at real x and return the real part.

    By default the terminating sum is accumulated exactly (in Q or Q(sqrt d))
    at the binary value of x and rounded once, which sidesteps the
    cancellation in alternating sums with large arguments. ``exact=False``
    sums in complex floating point. Either way a relative imaginary residue
    above 1e-9 raises :class:`ImaginaryResidue`.
    """
    if exact:
        value = to_complex(_exact_value(form, Fraction(x)))
    else:
        value = _float_value(form, complex(x))
    if abs(value.imag) > IMAG_TOL * max(1.0, abs(value.real)):
        raise ImaginaryResidue(f"imaginary part {value.imag:.3e} against real part {value.real:.3e}")
    return value.real


def _exact_value(form: HypergeometricForm, x: Fraction):
    terms = _real_terms(form)
    u = form.slope * x + form.intercept
    total = Fraction(0)
    scale_k = Fraction(1)
    for k, t in enumerate(terms):
        if t != 0:
            total = total + t * scale_k * u ** (form.factor_power + form.power * k)
        scale_k = scale_k * form.scale
    return form.prefactor * total


def _float_value(form: HypergeometricForm, x: complex) -> complex:
    terms = series_terms(form.upper_complex, form.lower_complex)
    slope, intercept = form.argument_affine
    u = slope * x + intercept
    scale = to_complex(form.scale)
    total = 0j
    for k, t in enumerate(terms):
        if t == 0:
            continue
        e = form.factor_power + form.power * k
        if e < 0:
            raise ValueError("form has a negative power of the linear factor")
        total += t * scale**k * u**e
    return form.prefactor_complex * total


def _binomial_powers(slope, intercept, e: int) -> list:
    """Coefficients of (slope x + intercept)**e in ascending order."""
    return [math.comb(e, j) * slope**j * intercept ** (e - j) for j in range(e + 1)]


def expand_form(form: HypergeometricForm) -> Polynomial:
    """Exact coefficients of the form; fails if an irrational part survives."""
    terms = _real_terms(form)
    acc: dict[int, object] = {}
    scale_k = Fraction(1)
    for k, t in enumerate(terms):
        if t != 0:
            e = form.factor_power + form.power * k
            for j, c in enumerate(_binomial_powers(form.slope, form.intercept, e)):
                acc[j] = acc.get(j, 0) + t * scale_k * c
        scale_k = scale_k * form.scale
    coeffs = []
    for j in range(max(acc, default=-1) + 1):
        v = acc.get(j, 0) * form.prefactor
        if isinstance(v, QuadraticSurd):
            if not v.is_rational():
                raise ArithmeticError("closed form expansion left an irrational coefficient")
            v = v.a
        coeffs.append(v)
    return Polynomial(coeffs)


# -- branch constructors ------------------------------------------------------

def _degenerate_lower(mu, n: int) -> bool:
    m = _nonpositive_integer(mu)
    return m is not None and m < n


def _nf(n: int) -> Fraction:
    return Fraction(math.factorial(n))


def _ratio_form(branch, sign_n, scale_base, mu, n, a, slope, intercept) -> HypergeometricForm:
    pref = sign_n * scale_base**n * pochhammer(mu, n)
    return HypergeometricForm("2F1", branch, pref, (-n, n - 1 + a), (mu,), slope, intercept)


def _collapsed_2f1(branch, lead, n, a, slope, intercept) -> HypergeometricForm:
    """lead * (n-1+a) * z * 2F1(1-n, n+a; 2; z) with z affine; n >= 1."""
    return HypergeometricForm("2F1", branch, lead * (n - 1 + a), (1 - n, n + a), (Fraction(2),), slope, intercept,
                              factor_power=1)


def _one(branch: str) -> HypergeometricForm:
    return HypergeometricForm("1F1", branch, Fraction(1), (0,), (Fraction(1),), Fraction(0), Fraction(0))


def _general(p: EquationParams, n: int) -> HypergeometricForm:
    a20, a21, a22, a10, a11 = p.as_tuple()
    a = a10 / a20
    disc = p.discriminant
    if disc == 0:
        k = 2 * a20 * a11 - a10 * a21
        if k == 0:
            raise UnsupportedBranch("repeated root with 2*a20*a11 = a10*a21 is not covered")
        return HypergeometricForm("2F0", "repeated_root", (k / (2 * a20)) ** n, (-n, n - 1 + a), (),
                                  -2 * a20 * a20 / k, -a20 * a21 / k)
    root = QuadraticSurd.sqrt(disc)
    first = -1 if (disc > 0 and a21 > 0) else 1  # keep a21 + D small in floating point
    for sign in (first, -first):
        D = sign * root
        mu = (2 * a20 * a11 - a10 * a21 - a10 * D) / (-2 * a20 * D)
        if not _degenerate_lower(mu, n):
            return _ratio_form("general", (-1) ** n, D, mu, n, a, a20 / D, (a21 + D) / (2 * D))
    raise UnsupportedBranch("lower parameter is a nonpositive integer on both square-root branches")


def _case_i(p: EquationParams, n: int) -> HypergeometricForm:
    a21, a22, a10, a11 = p.a21, p.a22, p.a10, p.a11
    slope, intercept = -a10 / a21, -a22 * a10 / (a21 * a21)
    mu = (a21 * a11 - a22 * a10) / (a21 * a21)
    if mu == 0:
        if n == 0:
            return _one("case_I_collapsed")
        return HypergeometricForm("1F1", "case_I_collapsed", -(a21**n) * _nf(n), (1 - n,), (Fraction(2),),
                                  slope, intercept, factor_power=1)
    if _degenerate_lower(mu, n):
        raise UnsupportedBranch("Case I lower parameter is a negative integer above -n")
    return HypergeometricForm("1F1", "case_I", a21**n * pochhammer(mu, n), (-n,), (mu,), slope, intercept)


def _case_ii(p: EquationParams, n: int) -> HypergeometricForm:
    a20, a21, a10, a11 = p.a20, p.a21, p.a10, p.a11
    a = a10 / a20
    slope, intercept = a20 / a21, Fraction(1)
    mu = (a10 * a21 - a20 * a11) / (a20 * a21)
    if mu == 0:
        if n == 0:
            return _one("case_II_collapsed")
        return _collapsed_2f1("case_II_collapsed", (-1) ** (n + 1) * _nf(n) * a21**n, n, a, slope, intercept)
    if _degenerate_lower(mu, n):
        raise UnsupportedBranch("Case II lower parameter is a negative integer above -n")
    return _ratio_form("case_II", (-1) ** n, a21, mu, n, a, slope, intercept)


def _case_iii(p: EquationParams, n: int) -> HypergeometricForm:
    a20, a22, a10, a11 = p.a20, p.a22, p.a10, p.a11
    a = a10 / a20
    r = QuadraticSurd.sqrt(-a22 / a20)
    if a11 == a10 * r:
        if n == 0:
            return _one("case_III_collapsed")
        lead = -_nf(n) * (-2 * a20 * r) ** n
        return _collapsed_2f1("case_III_collapsed", lead, n, a, 1 / (2 * r), Fraction(1, 2))
    s = abs(a20) * r
    for sign in (1, -1):
        ss = sign * s
        mu = (a20 * a11 - a10 * ss) / (-2 * a20 * ss)
        if not _degenerate_lower(mu, n):
            return _ratio_form("case_III", 1, -2 * ss, mu, n, a, a20 / (2 * ss), Fraction(1, 2))
    raise UnsupportedBranch("Case III lower parameter is a nonpositive integer on both branches")


def _case_iv(p: EquationParams, n: int) -> HypergeometricForm:
    a22, a10, a11 = p.a22, p.a10, p.a11
    return HypergeometricForm("2F0", "case_IV", Fraction(1), (Fraction(-n, 2), Fraction(1 - n, 2)), (),
                              a10, a11, scale=2 * a22 * a10, power=-2, factor_power=n)


def _case_v(p: EquationParams, n: int) -> HypergeometricForm:
    a21, a10, a11 = p.a21, p.a10, p.a11
    mu = a11 / a21
    if mu == 0:
        return _case_i(p, n)
    if _degenerate_lower(mu, n):
        raise UnsupportedBranch("Case V lower parameter is a negative integer above -n")
    return HypergeometricForm("1F1", "case_V", a21**n * pochhammer(mu, n), (-n,), (mu,), -a10 / a21, Fraction(0))


def _case_vi(p: EquationParams, n: int) -> HypergeometricForm:
    a20, a10, a11 = p.a20, p.a10, p.a11
    if a11 == 0:
        raise UnsupportedBranch("Case VI with a11 = 0 is not covered")
    return HypergeometricForm("2F0", "case_VI", a11**n, (-n, n - 1 + a10 / a20), (), -a20 / a11, Fraction(0))


_BRANCHES = {
    CaseTag.GENERAL: _general,
    CaseTag.I: _case_i,
    CaseTag.II: _case_ii,
    CaseTag.III: _case_iii,
    CaseTag.IV: _case_iv,
    CaseTag.V: _case_v,
    CaseTag.VI: _case_vi,
}


def closed_form(params: EquationParams, n: int) -> HypergeometricForm:
    """Hypergeometric representation of y_n for the parameters' case and branch."""
    if n < 0:
        raise ValueError("degree index must be nonnegative")
    return _BRANCHES[classify(params)](params, n)
