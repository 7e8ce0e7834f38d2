"""Real antiderivatives of rational functions whose denominator has degree <= 2.

Returned callables work on floats and numpy arrays. Logarithms use absolute
values, so each antiderivative is valid on any interval free of real poles.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .algebra import Polynomial, RationalFunction


def _poly_integral(p: Polynomial) -> Polynomial:
    return Polynomial([0] + [c / (k + 1) for k, c in enumerate(p.coeffs)])


def rational_antiderivative(f: RationalFunction) -> Callable:
    """F with F' = f, for den(f) of degree at most 2."""
    num, den = f.num, f.den
    dd = den.degree
    if dd > 2:
        raise ValueError("denominator degree above 2 is not supported")
    quot, rem = divmod(num, den)
    poly_part = _poly_integral(quot)
    poly_coeffs = poly_part.float_coeffs()

    def poly_eval(x):
        acc = np.zeros_like(np.asarray(x, dtype=float))
        for c in poly_coeffs[::-1]:
            acc = acc * x + c
        return acc

    if dd == 0 or rem.is_zero():
        return lambda x: poly_eval(x)

    if dd == 1:
        # rem is a constant c; den = x - r (monic)
        c = float(rem[0])
        r = -float(den[0])
        return lambda x: poly_eval(x) + c * np.log(np.abs(np.asarray(x, dtype=float) - r))

    # den = x^2 + b x + q (monic); rem = alpha x + beta
    b, q = float(den[1]), float(den[0])
    alpha, beta = float(rem[1]), float(rem[0])
    disc = den[1] * den[1] - 4 * den[0]  # exact sign
    log_coef = alpha / 2.0
    rest = beta - alpha * b / 2.0  # coefficient of 1/den after removing den'/den

    if disc < 0:
        w = math.sqrt(float(-disc))

        def tail(x):
            return 2.0 * rest / w * np.arctan((2.0 * x + b) / w)
    elif disc > 0:
        w = math.sqrt(float(disc))

        def tail(x):
            return rest / w * np.log(np.abs((2.0 * x + b - w) / (2.0 * x + b + w)))
    else:
        def tail(x):
            return -2.0 * rest / (2.0 * x + b)

    def F(x):
        x = np.asarray(x, dtype=float)
        return poly_eval(x) + log_coef * np.log(np.abs(x * x + b * x + q)) + tail(x)

    return F
