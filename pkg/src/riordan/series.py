"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` keeps the coefficients of ``t^0 .. t^(N-1)``; everything
beyond ``N`` is unknown, so equality and every identity checked with these
objects holds "to precision N" only.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DenominatorNotUnit,
    IndexBeyondPrecision,
    InnerSeriesHasConstantTerm,
    NotAUnit,
    NotInvertible,
    PrecisionMismatch,
    RingMismatch,
)
from .rings import Element, Ring, parse_ring

DEFAULT_PRECISION = 16
MAX_PRECISION = 64


class Valuation(enum.Enum):
    AT_LEAST_PRECISION = "at-least-precision"

    def __repr__(self):
        return "AT_LEAST_PRECISION"


AT_LEAST_PRECISION = Valuation.AT_LEAST_PRECISION

Scalar = Union[Element, int, Fraction]


def _raw_scalar(ring: Ring, c) -> Union[int, Fraction]:
    if isinstance(c, Element):
        if c.ring != ring:
            raise RingMismatch(f"{c.ring} vs {ring}")
        return c.value
    return ring.reduce(c)


def _mul_raw(ring: Ring, a: Sequence, b: Sequence, n: int) -> list:
    """Cauchy product of two raw coefficient lists, truncated to ``n`` terms."""
    nz_a = [(i, x) for i, x in enumerate(a[:n]) if x]
    nz_b = [(j, y) for j, y in enumerate(b[:n]) if y]
    out = [0] * n
    for i, x in nz_a:
        lim = n - i
        for j, y in nz_b:
            if j >= lim:
                break
            out[i + j] += x * y
    if ring.is_finite:
        m = ring.modulus
        return [c % m for c in out]
    return [c if type(c) is int else (c.numerator if c.denominator == 1 else c) for c in out]


class Series:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable, precision: int | None = None):
        values = [_raw_scalar(ring, c) for c in coeffs]
        if precision is None:
            precision = len(values)
        if precision < 1:
            raise ValueError("precision must be positive")
        values = values[:precision] + [ring.zero] * (precision - len(values))
        self.ring = ring
        self.coeffs = tuple(values)

    @classmethod
    def _raw(cls, ring: Ring, coeffs) -> "Series":
        s = cls.__new__(cls)
        s.ring = ring
        s.coeffs = tuple(coeffs)
        return s

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring, precision: int = DEFAULT_PRECISION) -> "Series":
        return cls._raw(ring, [ring.zero] * precision)

    @classmethod
    def constant(cls, ring: Ring, c: Scalar, precision: int = DEFAULT_PRECISION) -> "Series":
        return cls(ring, [c], precision)

    @classmethod
    def one(cls, ring: Ring, precision: int = DEFAULT_PRECISION) -> "Series":
        return cls.constant(ring, 1, precision)

    @classmethod
    def t(cls, ring: Ring, precision: int = DEFAULT_PRECISION) -> "Series":
        return cls(ring, [0, 1], precision)

    # -- basic protocol --------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coeff_at(self, n: int) -> Element:
        if not 0 <= n < self.precision:
            raise IndexBeyondPrecision(f"[t^{n}] requested at precision {self.precision}")
        return Element(self.ring, self.coeffs[n])

    __getitem__ = coeff_at

    def valuation(self) -> Union[int, Valuation]:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return AT_LEAST_PRECISION

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def _check(self, other: "Series"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.precision != other.precision:
            raise PrecisionMismatch(f"{self.precision} vs {other.precision}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        r = self.ring
        return Series._raw(r, [r.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        r = self.ring
        return Series._raw(r, [r.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        r = self.ring
        return Series._raw(r, [r.neg(a) for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check(other)
            return Series._raw(self.ring, _mul_raw(self.ring, self.coeffs, other.coeffs, self.precision))
        if isinstance(other, (Element, int, Fraction)):
            c = _raw_scalar(self.ring, other)
            r = self.ring
            return Series._raw(r, [r.mul(c, a) for a in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Element, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.reciprocal() ** -k
        result = Series.one(self.ring, self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; needs a unit constant term."""
        r = self.ring
        c = self.coeffs
        if not r.is_unit_raw(c[0]):
            raise NotAUnit(f"constant term {r.format(c[0])} is not a unit in {r}")
        inv0 = r.inv(c[0])
        out = [inv0]
        for n in range(1, self.precision):
            acc = r.zero
            for i in range(1, n + 1):
                if c[i]:
                    acc = r.add(acc, r.mul(c[i], out[n - i]))
            out.append(r.neg(r.mul(acc, inv0)))
        return Series._raw(r, out)

    def __truediv__(self, other):
        if isinstance(other, Series):
            self._check(other)
            return self * other.reciprocal()
        if isinstance(other, (Element, int, Fraction)):
            c = _raw_scalar(self.ring, other)
            return self * Element(self.ring, self.ring.inv(c))
        return NotImplemented

    def __call__(self, inner: "Series") -> "Series":
        return compose(self, inner)

    # -- presentation ----------------------------------------------------

    def to_text(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            text = self.ring.format(c)
            if i == 0:
                terms.append(text)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if text == "1":
                terms.append(mono)
            elif text == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{text}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(t^{self.precision})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Series({self.ring}, {self.to_text()})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "precision": self.precision,
            "coeffs": [self.ring.format(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Series":
        ring = parse_ring(data["ring"])
        return cls(ring, [Fraction(c) for c in data["coeffs"]], data["precision"])


def coeff_at(s: Series, n: int) -> Element:
    return s.coeff_at(n)


def valuation(s: Series):
    return s.valuation()


def compose(g: Series, f: Series) -> Series:
    """Substitute ``f`` into ``g`` (Horner's scheme); ``f`` must have f(0) = 0."""
    g._check(f)
    if f.coeffs[0]:
        raise InnerSeriesHasConstantTerm("inner series must have zero constant term")
    ring, n = g.ring, g.precision
    fc = f.coeffs
    acc = [g.coeffs[-1]] + [ring.zero] * (n - 1)
    for k in range(n - 2, -1, -1):
        acc = _mul_raw(ring, acc, fc, n)
        acc[0] = ring.add(acc[0], g.coeffs[k])
    return Series._raw(ring, acc)


def comp_inverse(f: Series) -> Series:
    """Compositional inverse by solving the triangular system coefficient by coefficient.

    With F[k][j] = [t^k] f^j, the inverse h satisfies sum_j h_j F[k][j] = [k == 1];
    the system is triangular with diagonal f_1^k, so only f_1 has to be a unit.
    """
    ring, n = f.ring, f.precision
    c = f.coeffs
    if c[0] or n < 2 or not ring.is_unit_raw(c[1]):
        raise NotInvertible("need f(0) = 0 and a unit coefficient of t")
    powers = [None, list(c)]
    for _ in range(2, n):
        powers.append(_mul_raw(ring, powers[-1], c, n))
    inv1 = ring.inv(c[1])
    h = [ring.zero, inv1]
    diag_inv = inv1
    for k in range(2, n):
        diag_inv = ring.mul(diag_inv, inv1)
        acc = ring.zero
        for j in range(1, k):
            if h[j] and powers[j][k]:
                acc = ring.add(acc, ring.mul(h[j], powers[j][k]))
        h.append(ring.neg(ring.mul(acc, diag_inv)))
    return Series._raw(ring, h[:n])


def compositional_power(f: Series, m: int) -> Series:
    """The m-fold iterate f(f(...f(t)...)); m = 0 gives t."""
    result = Series.t(f.ring, f.precision)
    for _ in range(m):
        result = compose(f, result)
    return result


def rational_series(ring: Ring, precision: int, num: Sequence[Scalar], den: Sequence[Scalar]) -> Series:
    """Expansion of num(t)/den(t), given polynomial coefficient lists."""
    d = Series(ring, den[:precision], precision)
    if not ring.is_unit_raw(d.coeffs[0]):
        raise DenominatorNotUnit(f"den(0) = {ring.format(d.coeffs[0])} is not a unit in {ring}")
    return Series(ring, num[:precision], precision) * d.reciprocal()
