"""Riordan arrays (g, f), the group law, and the named families built from them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import (
    InvalidParams,
    NotAUnit,
    NotNormalized,
    NotRiordan,
    PrecisionTooSmall,
    SizeBeyondPrecision,
)
from .matrices import LowerTriMatrix
from .rings import MODULAR, Element, Ring, from_integer
from .series import (
    DEFAULT_PRECISION,
    Series,
    comp_inverse,
    compose,
    compositional_power,
    rational_series,
)


class RiordanArray:
    """A proper Riordan array: g(0) and [t]f are units, f(0) = 0."""

    __slots__ = ("g", "f")

    def __init__(self, g: Series, f: Series, *, check: bool = True):
        if check:
            g._check(f)
            ring = g.ring
            if not ring.is_unit_raw(g.coeffs[0]):
                raise NotRiordan("g(0) must be a unit")
            if f.coeffs[0] or f.precision < 2 or not ring.is_unit_raw(f.coeffs[1]):
                raise NotRiordan("f must have order 1 with a unit coefficient of t")
        self.g = g
        self.f = f

    @property
    def ring(self) -> Ring:
        return self.g.ring

    @property
    def precision(self) -> int:
        return self.g.precision

    def __eq__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    def __hash__(self):
        return hash((self.g, self.f))

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, k: int) -> "RiordanArray":
        base = self if k >= 0 else inverse(self)
        result = identity(self.ring, self.precision)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "RiordanArray":
        return inverse(self)

    def is_identity(self) -> bool:
        return self == identity(self.ring, self.precision)

    def identity_like(self) -> "RiordanArray":
        return identity(self.ring, self.precision)

    def to_matrix(self, size: int) -> LowerTriMatrix:
        return to_matrix(self, size)

    def to_text(self, size: int | None = None) -> str:
        text = f"g = {self.g.to_text()}\nf = {self.f.to_text()}"
        if size:
            text += "\n" + to_matrix(self, size).to_text()
        return text

    def __repr__(self):
        return f"RiordanArray(g={self.g.to_text()}, f={self.f.to_text()})"

    def to_json(self) -> dict:
        return {"g": self.g.to_json(), "f": self.f.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RiordanArray":
        return cls(Series.from_json(data["g"]), Series.from_json(data["f"]))


def identity(ring: Ring, precision: int = DEFAULT_PRECISION) -> RiordanArray:
    return RiordanArray(Series.one(ring, precision), Series.t(ring, precision), check=False)


def multiply(x: RiordanArray, y: RiordanArray) -> RiordanArray:
    """(g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1))."""
    x.g._check(y.g)
    return RiordanArray(x.g * compose(y.g, x.f), compose(y.f, x.f), check=False)


def inverse(x: RiordanArray) -> RiordanArray:
    fbar = comp_inverse(x.f)
    return RiordanArray(compose(x.g, fbar).reciprocal(), fbar, check=False)


def to_matrix(x: RiordanArray, size: int) -> LowerTriMatrix:
    """Leading size x size block of the matrix with entries [t^n] g f^k."""
    if size > x.precision:
        raise SizeBeyondPrecision(f"size {size} exceeds precision {x.precision}")
    ring = x.ring
    rows = [[ring.zero] * size for _ in range(size)]
    col = x.g
    for k in range(size):
        for n in range(k, size):
            rows[n][k] = col.coeffs[n]
        col = col * x.f
    return LowerTriMatrix._raw(ring, rows)


def is_involution(x: RiordanArray, strict: bool = False) -> bool:
    """x^2 = I to precision; ``strict`` additionally rules out x = I."""
    if strict and x.is_identity():
        return False
    return (x * x).is_identity()


def lagrange_minus_t(ring: Ring, precision: int = DEFAULT_PRECISION) -> RiordanArray:
    return RiordanArray(Series.one(ring, precision), -Series.t(ring, precision), check=False)


def is_pseudo_involution(x: RiordanArray, side: str = "right") -> bool:
    """x (1, -t) is an involution (``side="left"`` tests (1, -t) x instead)."""
    s = lagrange_minus_t(x.ring, x.precision)
    if side == "right":
        return is_involution(x * s)
    if side == "left":
        return is_involution(s * x)
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


@dataclass(frozen=True)
class OrderResult:
    """Finite(k) when ``order`` is set, otherwise ExceedsCutoff(cutoff)."""

    order: Optional[int]
    cutoff: int

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def __str__(self):
        if self.order is not None:
            return f"order {self.order}"
        return f"exceeds cutoff {self.cutoff}"

    def to_json(self) -> dict:
        return {"finite": self.is_finite, "order": self.order, "cutoff": self.cutoff}


def Finite(k: int, cutoff: int) -> OrderResult:
    return OrderResult(k, cutoff)


def ExceedsCutoff(cutoff: int) -> OrderResult:
    return OrderResult(None, cutoff)


def element_order(x, cutoff: int) -> OrderResult:
    """Least k <= cutoff with x^k = identity, by repeated multiplication.

    Works for anything with ``*``, ``is_identity`` and ``identity_like``
    (Riordan arrays and matrices alike).
    """
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    power = x
    for k in range(1, cutoff + 1):
        if power.is_identity():
            return OrderResult(k, cutoff)
        if k < cutoff:
            power = power * x
    return OrderResult(None, cutoff)


def _as_element(ring: Ring, c) -> Element:
    if isinstance(c, Element):
        return c
    return from_integer(ring, c)


def pascal_generalized(ring: Ring, precision: int, b) -> RiordanArray:
    """P_b = (1/(1 - bt), -t/(1 - bt))."""
    b = _as_element(ring, b)
    den = [1, -b]
    return RiordanArray(
        rational_series(ring, precision, [1], den),
        rational_series(ring, precision, [0, -1], den),
    )


def pascal(ring: Ring, precision: int = DEFAULT_PRECISION) -> RiordanArray:
    """The classical Pascal matrix (1/(1-t), t/(1-t))."""
    return RiordanArray(
        rational_series(ring, precision, [1], [1, -1]),
        rational_series(ring, precision, [0, 1], [1, -1]),
    )


def _binomial_power_series(ring: Ring, precision: int, c: Element, s: int) -> Series:
    """1 / (1 + c t)^s."""
    return (Series(ring, [1, c], precision) ** s).reciprocal()


@dataclass(frozen=True)
class DihedralParams:
    n: int
    a: int
    b: int
    s: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParams("n must be at least 3")
        if self.s < 1:
            raise InvalidParams("s must be at least 1")
        if (self.a * self.a - 1) % self.n:
            raise InvalidParams(f"a = {self.a} does not satisfy a^2 = 1 in Z_{self.n}")

    @property
    def ring(self) -> Ring:
        return Ring(MODULAR, self.n)


def _dihedral_array(params: DihedralParams, shift: int, precision: int) -> RiordanArray:
    """(a/(1 + c t)^s, (n-1) t/(1 + c t)) with c = b + shift."""
    ring = params.ring
    c = from_integer(ring, params.b + shift)
    g = _binomial_power_series(ring, precision, c, params.s) * from_integer(ring, params.a)
    f = rational_series(ring, precision, [0, params.n - 1], [1, c])
    return RiordanArray(g, f)


def dihedral_generators(params: DihedralParams, precision: int = DEFAULT_PRECISION):
    """The two involutions r1, r2 over Z_n that generate a copy of D_n."""
    return (_dihedral_array(params, 1, precision), _dihedral_array(params, 0, precision))


def dihedral_rotation_closed_form(params: DihedralParams, k: int, precision: int = DEFAULT_PRECISION) -> RiordanArray:
    """Closed form of (r1 r2)^k = (1/(1 + kt)^s, t/(1 + kt))."""
    ring = params.ring
    c = from_integer(ring, k)
    return RiordanArray(
        _binomial_power_series(ring, precision, c, params.s),
        rational_series(ring, precision, [0, 1], [1, c]),
    )


def dihedral_reflection_closed_form(params: DihedralParams, k: int, precision: int = DEFAULT_PRECISION) -> RiordanArray:
    """Closed form of r2 (r1 r2)^k: the generator formula with b replaced by b - k."""
    return _dihedral_array(params, -k, precision)


def power_formula_check(params: DihedralParams, k: int, precision: int = DEFAULT_PRECISION) -> bool:
    r1, r2 = dihedral_generators(params, precision)
    iterated = r2 * (r1 * r2) ** k
    return iterated == dihedral_reflection_closed_form(params, k, precision)


@dataclass(frozen=True)
class JenningsReport:
    """Leading deviation of f1(f2(t)) from t and its growth under iteration.

    ``q`` is None when no deviation is visible at the working precision.
    """

    m: int
    q: Optional[int]
    c_q: Optional[Element]
    observed_m_cq: Optional[Element]

    @property
    def has_deviation(self) -> bool:
        return self.q is not None

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "c_q": None if self.c_q is None else str(self.c_q),
            "observed_m_cq": None if self.observed_m_cq is None else str(self.observed_m_cq),
        }


def jennings_power(f1: Series, f2: Series, m: int, require_deviation: bool = False) -> JenningsReport:
    if m < 1:
        raise ValueError("m must be positive")
    f1._check(f2)
    ring = f1.ring
    minus_one = ring.neg(ring.one)
    for name, f in (("f1", f1), ("f2", f2)):
        if f.valuation() != 1 or f.coeffs[1] != minus_one:
            raise NotNormalized(f"{name} must be -t + (higher terms)")
    h = compose(f1, f2)
    q = next((i for i in range(2, h.precision) if h.coeffs[i]), None)
    if q is None:
        if require_deviation:
            raise PrecisionTooSmall(f"f1(f2(t)) agrees with t to precision {h.precision}")
        return JenningsReport(m, None, None, None)
    iterate = compositional_power(h, m)
    return JenningsReport(m, q, h.coeff_at(q), iterate.coeff_at(q))


def _require_unit(e: Element, name: str):
    if not e.ring.is_unit_raw(e.value):
        raise NotAUnit(f"{name} = {e} is not a unit in {e.ring}")


def delta_embed(ring: Ring, precision: int, b, a) -> RiordanArray:
    """Image (1, a t/(1 + b t)) of the matrix [[1, 0], [b, a]]."""
    b, a = _as_element(ring, b), _as_element(ring, a)
    _require_unit(a, "a")
    return RiordanArray(Series.one(ring, precision), rational_series(ring, precision, [0, a], [1, b]))


def diagonal_embed(ring: Ring, precision: int, a, b) -> RiordanArray:
    """(a, b t): the diagonal matrix diag(a, ab, ab^2, ...)."""
    a, b = _as_element(ring, a), _as_element(ring, b)
    _require_unit(a, "a")
    _require_unit(b, "b")
    return RiordanArray(Series.constant(ring, a, precision), Series(ring, [0, b], precision))


def commutes(x: RiordanArray, y: RiordanArray) -> bool:
    return x * y == y * x


class Membership(enum.Enum):
    IDENTITY = "Identity"
    APPELL = "Appell"
    LAGRANGE = "Lagrange"
    NEITHER = "Neither"


def subgroup_membership(x: RiordanArray) -> Membership:
    appell = x.f == Series.t(x.ring, x.precision)
    lagrange = x.g == Series.one(x.ring, x.precision)
    if appell and lagrange:
        return Membership.IDENTITY
    if appell:
        return Membership.APPELL
    if lagrange:
        return Membership.LAGRANGE
    return Membership.NEITHER


