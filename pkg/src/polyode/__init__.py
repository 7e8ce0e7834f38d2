"""Polynomial solutions of (a20 x^2 + a21 x + a22) y'' + (a10 x + a11) y' - tau y = 0."""

from .algebra import Polynomial, QuadraticSurd, RationalFunction
from .errors import PolyodeError
from .ode import CaseTag, EquationParams, classify, eigenvalue, solve
from .recurrence import case_recurrence, generate

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "EquationParams",
    "Polynomial",
    "PolyodeError",
    "QuadraticSurd",
    "RationalFunction",
    "case_recurrence",
    "classify",
    "eigenvalue",
    "generate",
    "solve",
]
