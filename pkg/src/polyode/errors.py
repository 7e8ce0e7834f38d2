"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PolyodeError(Exception):
    """Base class for library errors."""


class InvalidParameters(PolyodeError, ValueError):
    """The coefficient tuple does not define an admissible equation."""


class DegenerateDenominator(PolyodeError):
    """A recurrence denominator vanishes at index ``n``."""

    def __init__(self, n: int, factor: str):
        self.n = n
        self.factor = factor
        super().__init__(f"recurrence denominator {factor} vanishes at n={n}")


class DegenerateSpectrum(PolyodeError):
    """The eigenvalue is repeated and the polynomial kernel has dimension > 1."""

    def __init__(self, n: int, basis):
        self.n = n
        self.basis = list(basis)
        super().__init__(f"kernel of dimension {len(self.basis)} at n={n}; basis returned, none chosen")


class NoPolynomialSolution(PolyodeError):
    """Empty kernel where a solution must exist; indicates an internal inconsistency."""


class ZeroLowerParameter(PolyodeError, ZeroDivisionError):
    """A lower hypergeometric parameter hits zero before the series terminates."""


class NonTerminating(PolyodeError, ValueError):
    """No upper parameter is a nonpositive integer."""


class UnsupportedBranch(PolyodeError):
    """No available closed formula covers this parameter configuration."""


class ImaginaryResidue(PolyodeError, ArithmeticError):
    """A closed form evaluated at real x kept a non-negligible imaginary part."""


class ConstraintViolated(PolyodeError):
    """A weight validity inequality fails."""

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("constraint(s) violated: " + "; ".join(self.failed))


class NonIntegrable(PolyodeError):
    """The requested inner product diverges for these parameters."""


class QuadratureNoConvergence(PolyodeError, ArithmeticError):
    """Adaptive quadrature hit its refinement limit before meeting tolerance."""


class SingularPoint(PolyodeError, ZeroDivisionError):
    """An evaluation point coincides with a pole."""


class ProportionalityFailure(PolyodeError):
    """Two coefficient vectors are not proportional."""

    def __init__(self, n: int, index: int):
        self.n = n
        self.index = index
        super().__init__(f"degree {n}: coefficient {index} breaks proportionality")


class UnknownName(PolyodeError, KeyError):
    """Catalog lookup with an unrecognized row name."""


class MissingArg(PolyodeError, KeyError):
    """Catalog lookup without a required parameter."""
