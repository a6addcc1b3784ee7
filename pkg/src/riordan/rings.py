"""Exact coefficient rings: the rationals, Z/nZ and prime fields GF(p).

A :class:`Ring` knows how to do arithmetic on *raw* values: least non-negative
``int`` residues for Z/nZ and GF(p); for the rationals an ``int`` when the value
is integral and a reduced ``Fraction`` otherwise (the two compare and hash
equal, so canonical equality is unaffected).  Series and
matrices store raw values for speed; :class:`Element` is the user-facing
scalar that carries its ring along.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import InvalidRing, NotAUnit, RingMismatch

RATIONALS = "Q"
MODULAR = "Zmod"
PRIME_FIELD = "GF"


def _norm_q(x):
    if type(x) is int:
        return x
    return x.numerator if x.denominator == 1 else x


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Ring:
    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus != 0:
                raise InvalidRing("the rationals take no modulus")
        elif self.kind == MODULAR:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise InvalidRing(f"Zmod needs n >= 2, got {self.modulus!r}")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.modulus, int) or not _is_prime(self.modulus):
                raise InvalidRing(f"GF needs a prime, got {self.modulus!r}")
        else:
            raise InvalidRing(f"unknown ring kind {self.kind!r}")

    # -- descriptors -----------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind != RATIONALS

    @property
    def is_integral_domain(self) -> bool:
        return self.kind != MODULAR or _is_prime(self.modulus)

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __len__(self):
        if not self.is_finite:
            raise TypeError("the rationals are infinite")
        return self.modulus

    def __str__(self):
        if self.kind == RATIONALS:
            return "Q"
        return f"{self.kind}:{self.modulus}"

    def __repr__(self):
        return f"Ring({str(self)!r})"

    # -- raw arithmetic --------------------------------------------------

    def reduce(self, value) -> Union[int, Fraction]:
        """Bring an int (or Fraction) into canonical raw form."""
        if self.kind == RATIONALS:
            return _norm_q(Fraction(value))
        if isinstance(value, Fraction):
            num = value.numerator % self.modulus
            den = value.denominator % self.modulus
            if math.gcd(den, self.modulus) != 1:
                raise NotAUnit(f"denominator of {value} is not a unit in {self}")
            return num * pow(den, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 if self.kind == RATIONALS else 1 % self.modulus

    def add(self, a, b):
        if self.kind == RATIONALS:
            return _norm_q(a + b)
        return (a + b) % self.modulus

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return _norm_q(a - b)
        return (a - b) % self.modulus

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        return -a % self.modulus

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return _norm_q(a * b)
        return a * b % self.modulus

    def is_unit_raw(self, a) -> bool:
        if self.kind == MODULAR:
            return math.gcd(a, self.modulus) == 1
        return a != 0

    def inv(self, a):
        if not self.is_unit_raw(a):
            raise NotAUnit(f"{self.format(a)} is not a unit in {self}")
        if self.kind == RATIONALS:
            return _norm_q(Fraction(1) / a)
        return pow(a, -1, self.modulus)

    def format(self, a) -> str:
        return str(a)

    # -- enumeration -----------------------------------------------------

    def elements(self) -> Iterator[int]:
        if not self.is_finite:
            raise TypeError("cannot enumerate the rationals")
        return iter(range(self.modulus))

    def units(self) -> list:
        return [a for a in self.elements() if self.is_unit_raw(a)]

    def __call__(self, value) -> "Element":
        return Element(self, self.reduce(value))


def Rationals() -> Ring:
    return Ring(RATIONALS)


def Modular(n: int) -> Ring:
    return Ring(MODULAR, n)


def PrimeField(p: int) -> Ring:
    return Ring(PRIME_FIELD, p)


def parse_ring(text: str) -> Ring:
    """Parse the canonical ring string: ``Q``, ``Zmod:<n>`` or ``GF:<p>``."""
    text = text.strip()
    if text == "Q":
        return Rationals()
    kind, sep, param = text.partition(":")
    if not sep or kind not in (MODULAR, PRIME_FIELD):
        raise InvalidRing(f"cannot parse ring {text!r}; expected Q, Zmod:<n> or GF:<p>")
    try:
        n = int(param)
    except ValueError:
        raise InvalidRing(f"ring parameter must be an integer, got {param!r}") from None
    return Ring(kind, n)


@dataclass(frozen=True)
class Element:
    ring: Ring
    value: Union[int, Fraction]

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return Element(self.ring, self.ring.reduce(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** -k
        result = self.ring.one
        for _ in range(k):
            result = self.ring.mul(result, self.value)
        return Element(self.ring, result)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inverse(other)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ring.reduce(other)
            except NotAUnit:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"Element({self.ring}, {self.value})"


def from_integer(ring: Ring, k: int) -> Element:
    return Element(ring, ring.reduce(k))


def is_unit(a: Element) -> bool:
    return a.ring.is_unit_raw(a.value)


def inverse(a: Element) -> Element:
    return Element(a.ring, a.ring.inv(a.value))
