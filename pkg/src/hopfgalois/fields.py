"""Exact scalar arithmetic over Q and over prime fields GF(p).

Every computation in this package runs over one of two kinds of field:

* ``Rational()`` -- the rationals, with elements stored as
  :class:`fractions.Fraction` (always in lowest terms);
* ``PrimeField(p)`` -- the integers mod a prime p, with elements stored as
  plain ints in the canonical range 0..p-1.

A field object carries the arithmetic; matrix and subspace code never
touches float. Field objects compare by value, so two independently
constructed ``PrimeField(3)`` instances are interchangeable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when operands live over different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rational:
    """The field of rational numbers."""

    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a / b

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational scalar: {text!r}") from exc

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p), elements canonically 0..p-1."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")

    characteristic = property(lambda self: self.p)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return value.numerator % self.p
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def elements(self):
        return range(self.p)

    def parse(self, text: str) -> int:
        try:
            return int(text, 10) % self.p
        except ValueError as exc:
            raise ValueError(
                f"not a GF({self.p}) scalar (integers only): {text!r}"
            ) from exc

    def fmt(self, a) -> str:
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"


def parse_field(text: str):
    """Parse a field tag: ``Q`` or ``GF(p)``."""
    text = text.strip()
    if text == "Q":
        return Rational()
    if text.startswith("GF(") and text.endswith(")"):
        inner = text[3:-1]
        try:
            p = int(inner, 10)
        except ValueError as exc:
            raise ValueError(f"bad field tag: {text!r}") from exc
        return PrimeField(p)
    raise ValueError(f"bad field tag: {text!r} (expected Q or GF(p))")


def field_tag(field) -> str:
    return repr(field)
