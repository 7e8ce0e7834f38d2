"""Exact coefficient algebra: rationals, dense polynomials, rational functions.

Rationals are :class:`fractions.Fraction`. Polynomials store coefficients in
ascending order (``coeffs[k]`` multiplies ``x**k``) and are immutable; the
zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

import numpy as np

Scalar = Union[int, Fraction]


def to_rational(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Strings use ``Fraction`` syntax (``"-3/2"``, ``"5"``, ``"0.25"``). Floats
    are read through their shortest decimal representation, so ``0.1``
    becomes ``1/10`` rather than its binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r} is not rational")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as a rational") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(q: Fraction) -> str:
    """Canonical ``num/den`` text; integers keep an explicit ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class Polynomial:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_c", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self._c))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return Polynomial(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._c)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                if b:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = to_rational(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial(a / c for a in self._c)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero polynomial")
        rem = list(self._c)
        dd, lead = other.degree, other.leading
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other._c):
                    rem[k + j] -= q * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._c) if k)

    def monic(self) -> "Polynomial":
        return self / self.leading if self._c else self

    def scale_to_leading(self, value) -> "Polynomial":
        """Rescale so the leading coefficient equals ``value``."""
        return self * (to_rational(value) / self.leading)

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, np.ndarray):
            return self.eval_array(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            acc = Fraction(0)
            for c in reversed(self._c):
                acc = acc * x + c
            return acc
        if isinstance(x, complex):
            acc = 0j
            for c in reversed(self._c):
                acc = acc * x + complex(c)
            return acc
        if isinstance(x, (float, np.floating)):
            acc = 0.0
            for c in reversed(self._c):
                acc = acc * x + float(c)
            return acc
        # generic ring element (e.g. QuadraticSurd): Horner with exact coefficients
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self._c], dtype=float)

    def eval_array(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        acc = np.zeros_like(x, dtype=np.result_type(x.dtype, float))
        for c in reversed(self._c):
            acc = acc * x + float(c)
        return acc

    # -- presentation -----------------------------------------------------
    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self._c]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if k == 1 else f"x^{k}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._c)}])"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


X = Polynomial.x()
ONE = Polynomial([1])
ZERO = Polynomial()


class RationalFunction:
    """Reduced quotient ``num/den`` of polynomials with a monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = num if isinstance(num, Polynomial) else Polynomial([num])
        if den is None:
            den = ONE
        elif not isinstance(den, Polynomial):
            den = Polynomial([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not _reduced and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.leading
        if lead != 1:
            num, den = num / lead, den / lead
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree == 0

    @staticmethod
    def _lift(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, _reduced=True)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction(Polynomial([other]), _reduced=True)
        return None

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self._num, self._den))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return RationalFunction(self._num + o._num, self._den)
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._den, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def derivative(self) -> "RationalFunction":
        n, d = self._num, self._den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        return self._num(x) / self._den(x)

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"


class QuadraticSurd:
    """Element ``a + b*sqrt(d)`` of the field Q(sqrt(d)) for a non-square rational d.

    Negative ``d`` is allowed, in which case ``sqrt(d)`` is the principal
    imaginary root. Mixing elements with different radicands is an error.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = to_rational(a)
        self.b = to_rational(b)
        self.d = to_rational(d)

    @classmethod
    def sqrt(cls, d) -> "Fraction | QuadraticSurd":
        """Principal square root of ``d``; exact rational when possible."""
        d = to_rational(d)
        r = rational_sqrt(d)
        if r is not None:
            return r
        return cls(0, 1, d)

    def _coerce(self, other) -> "QuadraticSurd | None":
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise ValueError("surds over different radicands cannot be combined")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticSurd(other, 0, self.d)
        return None

    @staticmethod
    def _simplify(a, b, d) -> "Fraction | QuadraticSurd":
        return Fraction(a) if b == 0 else QuadraticSurd(a, b, d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._simplify(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._simplify(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._simplify(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero surd")
        return self * o.conjugate() * QuadraticSurd(1 / nrm, 0, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (QuadraticSurd(1, 0, self.d) / self) ** (-k)
        result = QuadraticSurd(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d) or (
                self.b == 0 and other.b == 0 and self.a == other.a
            )
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return self.b == 0

    def __complex__(self) -> complex:
        a, b, d = self.a, self.b, self.d
        if d < 0:
            return complex(float(a), float(b) * math.sqrt(float(-d)))
        root = math.sqrt(float(d))
        if a == 0 or b == 0 or (a > 0) == (b > 0):
            return complex(float(a) + float(b) * root)
        # a and b*sqrt(d) nearly cancel: use (a^2 - b^2 d) / (a - b sqrt d)
        return complex(float(self.norm()) / (float(a) - float(b) * root))

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.a}, {self.b}, {self.d})"


def to_complex(v) -> complex:
    """Complex-float view of an exact scalar (Fraction, int or QuadraticSurd)."""
    if isinstance(v, QuadraticSurd):
        return complex(v)
    if isinstance(v, complex):
        return v
    return complex(float(v))


def poly_from_roots(roots: Sequence[Scalar]) -> Polynomial:
    out = ONE
    for r in roots:
        out = out * Polynomial([-to_rational(r), 1])
    return out
