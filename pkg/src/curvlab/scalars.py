"""Scalar backends shared by every module.

Two backends coexist: exact rationals (`fractions.Fraction`) for identity
checking and constraint solving, and binary64 floats for numeric probing.
Values carry their own backend; the metric signs and the canonical complex
structure are plain integers, so they combine with either backend without
conversion.  Complex scalars are `ExactComplex` (a pair of Fractions) in the
exact backend and the builtin `complex` in the float backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Relative tolerance for float-backend equality of scalars.
FLOAT_REL_TOL = 1e-9


def rational(x) -> Fraction:
    """Coerce ints, numerals like '3' or '-5/7', or Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExactComplex:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "ExactComplex":
        return ExactComplex(rational(re), rational(im))

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def _coerce(self, other):
        if isinstance(other, ExactComplex):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactComplex(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero ExactComplex")
        return ExactComplex((self.re * o.re + self.im * o.im) / d,
                            (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({format_rational(self.re)}{'+' if self.im >= 0 else '-'}{format_rational(abs(self.im))}i)"


def is_exact(x) -> bool:
    """True for scalars of the exact backend (incl. plain ints)."""
    return isinstance(x, (int, Fraction, ExactComplex)) and not isinstance(x, bool)


def to_float(x):
    """Map any scalar to the float backend."""
    if isinstance(x, ExactComplex):
        return complex(float(x.re), float(x.im))
    if isinstance(x, complex):
        return x
    return float(x)


def scalar_close(a, b, rel: float = FLOAT_REL_TOL) -> bool:
    """Backend-aware equality: exact `==` or relative float comparison."""
    if is_exact(a) and is_exact(b):
        return a == b
    fa, fb = to_float(a), to_float(b)
    return abs(fa - fb) <= rel * max(1.0, abs(fa), abs(fb))


def rand_rational(rng, denominator: int = 64, span: int = 1) -> Fraction:
    """Uniform rational on the grid k/denominator inside [-span, span]."""
    return Fraction(rng.randint(-span * denominator, span * denominator), denominator)


def tiny_rational(rng) -> Fraction:
    # small numerators and denominators keep Cayley transforms cheap
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3)))
