"""Seeded random parameter sets for each case, closed-form branch and weight branch."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import InvalidParameters
from .ode import CaseTag, EquationParams, classify

CLOSED_FORM_BRANCHES = (
    "general",
    "repeated_root",
    "case_I",
    "case_I_collapsed",
    "case_II",
    "case_II_collapsed",
    "case_III",
    "case_III_collapsed",
    "case_IV",
    "case_V",
    "case_VI",
)

NORM_BRANCHES = (
    "case_I_right",
    "case_I_left",
    "case_II",
    "case_III_plus",
    "case_III_minus",
    "case_III_real_line",
    "case_IV",
    "case_V",
    "case_VI",
)


def rational(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def nonzero(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 4) -> Fraction:
    while True:
        v = rational(rng, lo, hi, den)
        if v:
            return v


def positive(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 8) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator at most ``den``."""
    d = rng.randint(1, den)
    a, b = math.ceil(lo * d), math.floor(hi * d)
    if a > b:
        return Fraction(lo + hi) / 2
    return Fraction(rng.randint(a, b), d)


def random_params(rng: random.Random, case: CaseTag | None = None) -> EquationParams:
    """Random valid parameters classifying as ``case`` (any case when None)."""
    if case is None:
        case = rng.choice(list(CaseTag))
    while True:
        a20, a21, a22, a10, a11 = nonzero(rng), nonzero(rng), nonzero(rng), nonzero(rng), rational(rng)
        if case is CaseTag.I:
            a20 = Fraction(0)
        elif case is CaseTag.II:
            a22 = Fraction(0)
        elif case is CaseTag.III:
            a21 = Fraction(0)
        elif case is CaseTag.IV:
            a20 = a21 = Fraction(0)
        elif case is CaseTag.V:
            a20 = a22 = Fraction(0)
        elif case is CaseTag.VI:
            a21 = a22 = Fraction(0)
        try:
            p = EquationParams(a20, a21, a22, a10, a11)
        except InvalidParameters:
            continue
        if classify(p) is case:
            return p


def branch_params(rng: random.Random, branch: str) -> EquationParams:
    """Parameters whose closed form uses the named branch (n-independent cases)."""
    while True:
        a20, a21, a22, a10, a11 = nonzero(rng), nonzero(rng), nonzero(rng), nonzero(rng), rational(rng)
        if branch == "general":
            if a21 * a21 == 4 * a20 * a22:
                continue
        elif branch == "repeated_root":
            a22 = a21 * a21 / (4 * a20)
            if 2 * a20 * a11 == a10 * a21:
                continue
        elif branch == "case_I":
            a20 = Fraction(0)
            if a21 * a11 == a22 * a10:
                continue
        elif branch == "case_I_collapsed":
            a20 = Fraction(0)
            a11 = a22 * a10 / a21
        elif branch == "case_II":
            a22 = Fraction(0)
            if a10 * a21 == a20 * a11:
                continue
        elif branch == "case_II_collapsed":
            a22 = Fraction(0)
            a11 = a10 * a21 / a20
        elif branch == "case_III":
            a21 = Fraction(0)
        elif branch == "case_III_collapsed":
            a21 = Fraction(0)
            r = nonzero(rng, 1, 9, 3)
            a22 = -a20 * r * r
            a11 = a10 * r
        elif branch == "case_IV":
            a20 = a21 = Fraction(0)
        elif branch == "case_V":
            a20 = a22 = Fraction(0)
            if a11 == 0:
                continue
        elif branch == "case_VI":
            a21 = a22 = Fraction(0)
            if a11 == 0:
                continue
        else:
            raise ValueError(f"unknown branch {branch!r}")
        try:
            return EquationParams(a20, a21, a22, a10, a11)
        except InvalidParameters:
            continue


def weight_params(rng: random.Random, branch: str, n_max: int = 4) -> EquationParams:
    """Constraint-satisfying parameters for the named norm branch, valid up to degree n_max."""
    F = Fraction
    if branch in ("case_I_right", "case_I_left"):
        a21 = positive(rng, F(1, 2), F(2))
        a22 = positive(rng, F(1, 4), F(3)) * rng.choice((-1, 1))
        if branch == "case_I_left":
            a21, a22 = -a21, positive(rng, F(1, 4), F(3))
        a10 = -positive(rng, F(1, 2), F(3))
        mu = positive(rng, F(1, 4), F(3))
        a11 = (mu * a21 * a21 + a22 * a10) / a21
        return EquationParams(F(0), a21, a22, a10, a11)
    if branch == "case_II":
        a20 = -positive(rng, F(1, 2), F(2))
        a21 = positive(rng, F(1, 2), F(2))
        e1 = positive(rng, F(1, 4), F(3))  # a11/a21
        e2 = positive(rng, F(1, 4), F(3))  # a10/a20 - a11/a21
        return EquationParams(a20, a21, F(0), (e1 + e2) * a20, e1 * a21)
    if branch in ("case_III_plus", "case_III_minus"):
        sgn = 1 if branch == "case_III_plus" else -1
        a20 = sgn * positive(rng, F(1, 2), F(2))
        r = positive(rng, F(1, 2), F(2), 4)
        a22 = -a20 * r * r
        # exponents alpha, beta > 0 with alpha + beta = a10/a20
        al = positive(rng, F(1, 4), F(3))
        be = positive(rng, F(1, 4), F(3))
        a10 = (al + be) * a20
        a11 = (al - be) * a20 * r
        return EquationParams(a20, F(0), a22, a10, a11)
    if branch == "case_III_real_line":
        a20 = positive(rng, F(1, 2), F(2))
        a22 = positive(rng, F(1, 2), F(2))
        a = -positive(rng, F(2 * n_max) + F(1, 2), F(2 * n_max + 4))
        return EquationParams(a20, F(0), a22, a * a20, positive(rng, F(-3), F(3)))
    if branch == "case_IV":
        return EquationParams(F(0), F(0), positive(rng, F(1, 4), F(2)), -positive(rng, F(1, 4), F(2)),
                              positive(rng, F(-2), F(2)))
    if branch == "case_V":
        a21 = positive(rng, F(1, 2), F(2))
        return EquationParams(F(0), a21, F(0), -positive(rng, F(1, 2), F(2)), a21 * positive(rng, F(1, 4), F(3)))
    if branch == "case_VI":
        a20 = positive(rng, F(1, 2), F(2))
        a = -positive(rng, F(2 * n_max) + F(1, 2), F(2 * n_max + 4))
        return EquationParams(a20, F(0), F(0), a * a20, a20 * positive(rng, F(1, 2), F(3)))
    raise ValueError(f"unknown weight branch {branch!r}")


def generic_points(params: EquationParams, count: int, rng: random.Random, lo: float = -2.0, hi: float = 2.0,
                   clearance: float = 0.25) -> list[float]:
    """Points in [lo, hi] at least ``clearance`` away from real zeros of p2."""
    p2 = params.p2
    roots: list[float] = []
    if p2.degree == 1:
        roots = [float(-p2[0] / p2[1])]
    elif p2.degree == 2:
        disc = float(params.discriminant)
        if disc >= 0:
            a, b = float(p2[2]), float(p2[1])
            roots = [(-b - math.sqrt(disc)) / (2 * a), (-b + math.sqrt(disc)) / (2 * a)]
    out: list[float] = []
    while len(out) < count:
        x = rng.uniform(lo, hi)
        if all(abs(x - r) >= clearance for r in roots):
            out.append(x)
    return out


def interior_points(support: tuple[float, float], count: int, rng: random.Random) -> list[float]:
    """Points strictly inside a (possibly unbounded) interval."""
    lo, hi = support
    out = []
    for _ in range(count):
        if math.isfinite(lo) and math.isfinite(hi):
            t = rng.uniform(0.02, 0.98)
            out.append(lo + t * (hi - lo))
        elif math.isfinite(lo):
            out.append(lo + rng.uniform(0.05, 6.0))
        elif math.isfinite(hi):
            out.append(hi - rng.uniform(0.05, 6.0))
        else:
            out.append(rng.uniform(-4.0, 4.0))
    return out
