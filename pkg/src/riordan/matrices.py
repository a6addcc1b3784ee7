"""Square matrices over an exact ring.

``Matrix`` is a general square matrix (conjugators and the permutation-derived
representation live here); ``LowerTriMatrix`` is an element of the truncated
Riordan group R_n: lower triangular with unit diagonal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotAUnit, NotLowerTriangular, RingMismatch, SizeMismatch
from .rings import MODULAR, Element, Ring, parse_ring


class Matrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Iterable[Sequence]):
        rows = [[c.value if isinstance(c, Element) else ring.reduce(c) for c in row] for row in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SizeMismatch("matrix must be square and non-empty")
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self._validate()

    def _validate(self):
        pass

    @classmethod
    def _raw(cls, ring: Ring, rows) -> "Matrix":
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls._raw(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, ring: Ring, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Element:
        return Element(self.ring, self.rows[i][j])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def key(self) -> tuple:
        """Canonical, ring-aware hash key (row-major canonical strings)."""
        fmt = self.ring.format
        return (str(self.ring),) + tuple(fmt(c) for row in self.rows for c in row)

    def sort_key(self) -> tuple:
        return tuple(c for row in self.rows for c in row)

    def _check(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.n != other.n:
            raise SizeMismatch(f"{self.n} vs {other.n}")

    def _result_type(self, other):
        if isinstance(self, LowerTriMatrix) and isinstance(other, LowerTriMatrix):
            return LowerTriMatrix
        return Matrix

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        ring, n = self.ring, self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = sum(a * b for a, b in zip(row, col) if a and b)
                out_row.append(ring.reduce(acc))
            out.append(out_row)
        return self._result_type(other)._raw(ring, out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        if isinstance(other, (Element, int, Fraction)):
            c = other.value if isinstance(other, Element) else self.ring.reduce(other)
            rows = [[self.ring.mul(c, a) for a in row] for row in self.rows]
            # stays in R_n only for a unit scalar
            if isinstance(self, LowerTriMatrix) and self.ring.is_unit_raw(c):
                return LowerTriMatrix._raw(self.ring, rows)
            return Matrix._raw(self.ring, rows)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Element, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** -k
        result = type(self).identity(self.ring, self.n)
        for _ in range(k):
            result = result @ self
        return result

    def is_identity(self) -> bool:
        one, zero = self.ring.one, self.ring.zero
        return all(c == (one if i == j else zero) for i, row in enumerate(self.rows) for j, c in enumerate(row))

    def identity_like(self) -> "Matrix":
        return type(self).identity(self.ring, self.n)

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def determinant(self) -> Element:
        return Element(self.ring, _det(self.ring, [list(r) for r in self.rows]))

    def is_invertible(self) -> bool:
        return self.ring.is_unit_raw(_det(self.ring, [list(r) for r in self.rows]))

    def inverse(self) -> "Matrix":
        """Adjugate over det^-1; valid over any commutative ring."""
        ring, n = self.ring, self.n
        det = _det(ring, [list(r) for r in self.rows])
        if not ring.is_unit_raw(det):
            raise NotAUnit("matrix determinant is not a unit")
        dinv = ring.inv(det)
        if n == 1:
            return Matrix._raw(ring, [[dinv]])
        adj = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [row[:j] + row[j + 1:] for k, row in enumerate(self.rows) if k != i]
                cof = _det(ring, [list(r) for r in minor])
                if (i + j) % 2:
                    cof = ring.neg(cof)
                adj[j][i] = ring.mul(cof, dinv)
        return Matrix._raw(ring, adj)

    def to_text(self) -> str:
        cells = [[self.ring.format(c) for c in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.ring}, {[list(map(self.ring.format, r)) for r in self.rows]})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "n": self.n,
            "rows": [[self.ring.format(c) for c in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Matrix":
        ring = parse_ring(data["ring"])
        return cls(ring, [[Fraction(c) for c in row] for row in data["rows"]])


class LowerTriMatrix(Matrix):
    """Element of R_n(K): lower triangular with every diagonal entry a unit."""

    __slots__ = ()

    def _validate(self):
        if not self.is_lower_triangular():
            raise NotLowerTriangular("entries above the diagonal must vanish")
        for i in range(self.n):
            if not self.ring.is_unit_raw(self.rows[i][i]):
                raise NotAUnit(f"diagonal entry {i} is not a unit")

    def key(self) -> tuple:
        fmt = self.ring.format
        return (str(self.ring),) + tuple(fmt(self.rows[i][j]) for i in range(self.n) for j in range(i + 1))

    def inverse(self) -> "LowerTriMatrix":
        """Forward substitution, column by column."""
        ring, n = self.ring, self.n
        a = self.rows
        inv = [[ring.zero] * n for _ in range(n)]
        diag_inv = [ring.inv(a[i][i]) for i in range(n)]
        for j in range(n):
            inv[j][j] = diag_inv[j]
            for i in range(j + 1, n):
                acc = ring.zero
                for k in range(j, i):
                    if a[i][k] and inv[k][j]:
                        acc = ring.add(acc, ring.mul(a[i][k], inv[k][j]))
                inv[i][j] = ring.neg(ring.mul(acc, diag_inv[i]))
        return LowerTriMatrix._raw(ring, inv)


def _det(ring: Ring, rows: list) -> object:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return ring.sub(ring.mul(rows[0][0], rows[1][1]), ring.mul(rows[0][1], rows[1][0]))
    if ring.kind != MODULAR:
        return _det_elimination(ring, rows)
    # Laplace expansion along the first row: no division needed over Z/nZ
    total = ring.zero
    for j, c in enumerate(rows[0]):
        if not c:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = ring.mul(c, _det(ring, minor))
        total = ring.sub(total, term) if j % 2 else ring.add(total, term)
    return total


def _det_elimination(ring: Ring, rows: list) -> object:
    rows = [list(r) for r in rows]
    n = len(rows)
    det = ring.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return ring.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = ring.neg(det)
        p = rows[col][col]
        det = ring.mul(det, p)
        pinv = ring.inv(p)
        for r in range(col + 1, n):
            factor = ring.mul(rows[r][col], pinv)
            if factor:
                rows[r] = [ring.sub(x, ring.mul(factor, y)) for x, y in zip(rows[r], rows[col])]
    return det


def mat_multiply(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_inverse(a: Matrix) -> Matrix:
    return a.inverse()


def mat_power(a: Matrix, k: int) -> Matrix:
    return a ** k
