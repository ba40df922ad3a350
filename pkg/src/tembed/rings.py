"""Exact scalar rings: rationals, Gaussian rationals and dual rationals.

Every recurrence in this package runs over one of these rings (or over
``complex`` in float mode).  Rationals are backed by ``gmpy2.mpq`` when
available and by ``fractions.Fraction`` otherwise; both store values in
lowest terms with a positive denominator and print as ``"p/q"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rational(numerator, denominator=1):
        if isinstance(numerator, float):
            numerator = Fraction(numerator)
        return _mpq(numerator, denominator)

    _RATIONAL_TYPES = (type(_mpq(0)), Fraction, int)
    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    def rational(numerator, denominator=1):
        return Fraction(numerator, denominator)

    _RATIONAL_TYPES = (Fraction, int)
    RATIONAL_BACKEND = "fractions"

#: Additive and multiplicative units of the rational backend.
ZERO = rational(0)
ONE = rational(1)


def is_rational(value) -> bool:
    return isinstance(value, _RATIONAL_TYPES)


def rational_from_str(text: str):
    """Parse ``"p/q"`` or ``"p"`` (also accepts a decimal like ``"0.7"``)."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return rational(int(num), int(den))
    if "." in text or "e" in text or "E" in text:
        frac = Fraction(text)
        return rational(frac.numerator, frac.denominator)
    return rational(int(text))


def rational_to_str(value) -> str:
    """Format in the canonical ``"p/q"`` form (``"p"`` when q = 1)."""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: object
    im: object

    @staticmethod
    def of(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if is_rational(value):
            return GaussianRational(rational(value), ZERO)
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if is_rational(other):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if is_rational(other):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if is_rational(other):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            norm = other.re * other.re + other.im * other.im
            if norm == 0:
                raise ZeroDivisionError("division by zero")
            return self * other.conjugate() / norm
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return GaussianRational.of(other) / self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if is_rational(other):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def modulus_squared(self):
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"({rational_to_str(self.re)}) + ({rational_to_str(self.im)})i"


#: The imaginary unit.
I = GaussianRational(ZERO, ONE)
GR_ZERO = GaussianRational(ZERO, ZERO)


def gaussian(re, im=0) -> GaussianRational:
    return GaussianRational(rational(re), rational(im))


def to_float_complex(z) -> complex:
    """Nearest-double rounding of each component."""
    if isinstance(z, GaussianRational):
        return complex(float(z.re), float(z.im))
    if isinstance(z, complex):
        return z
    return complex(float(z), 0.0)


@dataclass(frozen=True)
class DualRational:
    """Truncated first-order number ``value + infinitesimal * delta``."""

    value: object
    infinitesimal: object

    def __add__(self, other):
        if isinstance(other, DualRational):
            return DualRational(
                self.value + other.value, self.infinitesimal + other.infinitesimal
            )
        if is_rational(other):
            return DualRational(self.value + other, self.infinitesimal)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, DualRational):
            return DualRational(
                self.value - other.value, self.infinitesimal - other.infinitesimal
            )
        if is_rational(other):
            return DualRational(self.value - other, self.infinitesimal)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return DualRational(-self.value, -self.infinitesimal)

    def __mul__(self, other):
        if isinstance(other, DualRational):
            return DualRational(
                self.value * other.value,
                self.value * other.infinitesimal + self.infinitesimal * other.value,
            )
        if is_rational(other):
            return DualRational(self.value * other, self.infinitesimal * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            other = DualRational(rational(other), ZERO)
        if isinstance(other, DualRational):
            if other.value == 0:
                raise ZeroDivisionError("dual division requires a nonzero value part")
            value = self.value / other.value
            infinitesimal = (
                self.infinitesimal * other.value - self.value * other.infinitesimal
            ) / (other.value * other.value)
            return DualRational(value, infinitesimal)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return DualRational(rational(other), ZERO) / self
        return NotImplemented

    def __repr__(self):
        return f"{rational_to_str(self.value)} + {rational_to_str(self.infinitesimal)}d"


def dual_lift(value, tagged: bool) -> DualRational:
    """Lift ``v`` to ``v + v*delta`` when tagged, ``v + 0*delta`` otherwise.

    Tagging exactly one initial site makes the propagated infinitesimal of a
    recurrence value ``T`` equal to ``t * dT/dt`` for that site's variable.
    """
    value = rational(value)
    return DualRational(value, value if tagged else ZERO)


def dual_log_derivative(T: DualRational):
    """Return ``T.infinitesimal / T.value`` (= ``t d/dt log T`` after lifting)."""
    if T.value == 0:
        raise ZeroDivisionError("log derivative of a zero value")
    return T.infinitesimal / T.value
