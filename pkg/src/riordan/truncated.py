"""Truncations R_n(K) of the Riordan group, finite enumeration and conjugacy search.

Everything here works on explicit matrices over a finite ring; searches are
exhaustive and guarded by an element budget so that accidentally infinite
inputs (anything over Q) fail with :class:`BudgetExceeded` instead of hanging.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence

from .errors import BudgetExceeded, InvalidParams, RingMismatch, SizeMismatch
from .group import DihedralParams, RiordanArray, dihedral_generators, element_order, to_matrix
from .matrices import LowerTriMatrix, Matrix
from .presentations import evaluate_word
from .rings import Modular, Ring

DEFAULT_BUDGET = 10**6


def truncate(x: RiordanArray, n: int) -> LowerTriMatrix:
    """pi_n: the leading n x n block."""
    return to_matrix(x, n)


def truncation_is_homomorphism_check(x: RiordanArray, y: RiordanArray, n: int) -> bool:
    return truncate(x * y, n) == truncate(x, n) @ truncate(y, n)


@dataclass
class GroupInventory:
    elements: List[Matrix]
    order_profile: Dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_elements(cls, elements) -> "GroupInventory":
        elements = sorted(elements, key=lambda m: m.sort_key())
        size = len(elements)
        profile = Counter(element_order(m, size).order for m in elements)
        return cls(elements, dict(sorted(profile.items())))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_abelian(self) -> bool:
        return all(a @ b == b @ a for a, b in itertools.combinations(self.elements, 2))

    def is_closed(self) -> bool:
        members = set(self.elements)
        return all(a @ b in members for a in self.elements for b in self.elements) and all(
            a.inverse() in members for a in self.elements
        )

    def to_json(self) -> dict:
        first = self.elements[0]
        return {
            "ring": str(first.ring),
            "n": first.n,
            "size": len(self.elements),
            "order_profile": {str(k): v for k, v in self.order_profile.items()},
            "elements": [m.to_json()["rows"] for m in self.elements],
        }


def _check_shared(mats: Sequence[Matrix]):
    ring, n = mats[0].ring, mats[0].n
    for m in mats[1:]:
        if m.ring != ring:
            raise RingMismatch(f"{m.ring} vs {ring}")
        if m.n != n:
            raise SizeMismatch(f"{m.n} vs {n}")


def enumerate_Rn(n: int, ring: Ring, budget: int = DEFAULT_BUDGET) -> GroupInventory:
    """Every lower triangular n x n matrix over ``ring`` with unit diagonal."""
    if not ring.is_finite:
        raise BudgetExceeded(f"R_{n}({ring}) is infinite")
    units = ring.units()
    below = n * (n - 1) // 2
    count = len(units) ** n * ring.modulus**below
    if count > budget:
        raise BudgetExceeded(f"R_{n}({ring}) has {count} elements, budget is {budget}")
    elements = []
    for diag in itertools.product(units, repeat=n):
        for lower in itertools.product(ring.elements(), repeat=below):
            rows = [[ring.zero] * n for _ in range(n)]
            it = iter(lower)
            for i in range(n):
                for j in range(i):
                    rows[i][j] = next(it)
                rows[i][i] = diag[i]
            elements.append(LowerTriMatrix._raw(ring, rows))
    return GroupInventory.from_elements(elements)


def subgroup_closure(generators: Sequence[Matrix], budget: int = DEFAULT_BUDGET) -> GroupInventory:
    """Breadth-first closure under right multiplication by the generators."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    _check_shared(generators)
    start = generators[0].identity_like()
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                p = m @ g
                k = p.key()
                if k not in seen:
                    seen[k] = p
                    nxt.append(p)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"closure exceeded {budget} elements")
        frontier = nxt
    return GroupInventory.from_elements(seen.values())


@dataclass(frozen=True)
class ConjugationWitness:
    T: Matrix

    def validates(self, gen_a: Sequence[Matrix], gen_b: Sequence[Matrix]) -> bool:
        return self.T.is_invertible() and all(self.T @ a == b @ self.T for a, b in zip(gen_a, gen_b))

    def inverse(self) -> "ConjugationWitness":
        return ConjugationWitness(self.T.inverse())


def iter_conjugators(gen_a: Sequence[Matrix], gen_b: Sequence[Matrix], budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """Every invertible T (not necessarily triangular) with T A_i = B_i T for all i."""
    gen_a, gen_b = list(gen_a), list(gen_b)
    if len(gen_a) != len(gen_b) or not gen_a:
        raise ValueError("generator lists must be non-empty and of equal length")
    _check_shared(gen_a + gen_b)
    ring, n = gen_a[0].ring, gen_a[0].n
    if not ring.is_finite:
        raise BudgetExceeded(f"GL({n}, {ring}) is infinite")
    if ring.modulus ** (n * n) > budget:
        raise BudgetExceeded(f"searching {ring.modulus}^{n * n} matrices exceeds budget {budget}")
    for entries in itertools.product(range(ring.modulus), repeat=n * n):
        T = Matrix._raw(ring, [entries[i * n:(i + 1) * n] for i in range(n)])
        if all(T @ a == b @ T for a, b in zip(gen_a, gen_b)) and T.is_invertible():
            yield T


def find_conjugator(gen_a: Sequence[Matrix], gen_b: Sequence[Matrix], budget: int = DEFAULT_BUDGET) -> Optional[ConjugationWitness]:
    for T in iter_conjugators(gen_a, gen_b, budget):
        return ConjugationWitness(T)
    return None


# -- degree-2 representations of S_3 over Z_3 ------------------------------

Z3 = Modular(3)

S3_WORDS = {
    "e": (),
    "s1": (1,),
    "s2": (2,),
    "s1s2": (1, 2),
    "s2s1": (2, 1),
    "s1s2s1": (1, 2, 1),
}

# Order used when printing the comparison table.
S3_TABLE_ORDER = ("s1", "s2", "s1s2", "s2s1", "s1s2s1", "e")

S3_CYCLES = {
    "s1": "(1,2)(3)",
    "s2": "(1,3)(2)",
    "s1s2": "(1,3,2)",
    "s2s1": "(1,2,3)",
    "s1s2s1": "(1)(2,3)",
    "e": "(1)(2)(3)",
}


def permutation_matrix(ring: Ring, images: Sequence[int]) -> Matrix:
    """Column convention: e_j -> e_images[j] (0-based)."""
    n = len(images)
    return Matrix(ring, [[1 if images[j] == i else 0 for j in range(n)] for i in range(n)])


def s3_permutation_generators(ring: Ring = Z3):
    """The 3x3 permutation matrices of the transpositions (1 2) and (1 3)."""
    return permutation_matrix(ring, [1, 0, 2]), permutation_matrix(ring, [2, 1, 0])


def restrict_to_sum_zero(p: Matrix) -> Matrix:
    """Action of a 3x3 permutation matrix on {x1 + x2 + x3 = 0}, basis (e1 - e2, e1 - e3).

    In characteristic 3 this plane contains (1, 1, 1), which is the invariant
    line of the permutation representation.
    """
    ring = p.ring
    u, v = (1, -1, 0), (1, 0, -1)
    out = []
    for vec in (u, v):
        img = [ring.reduce(sum(p.rows[i][j] * vec[j] for j in range(3))) for i in range(3)]
        # img = a*u + b*v  =>  img_2 = -a, img_3 = -b
        out.append((ring.neg(img[1]), ring.neg(img[2])))
    return Matrix._raw(ring, [[out[0][0], out[1][0]], [out[0][1], out[1][1]]])


def degree2_permutation_generators(ring: Ring = Z3):
    """B(s1), B(s2): the reduced degree-2 representation."""
    return tuple(restrict_to_sum_zero(p) for p in s3_permutation_generators(ring))


def s3_table(images) -> Dict[str, Matrix]:
    """Images of all six elements under the representation with s1, s2 -> images."""
    return {name: evaluate_word(word, images) for name, word in S3_WORDS.items()}


def dihedral_degree2_generators(a: int, b: int, s: int) -> tuple:
    """Truncated images of s1, s2 under the representation built from the
    dihedral generators over Z_3: s1 -> r2 and s2 -> r1."""
    r1, r2 = dihedral_generators(DihedralParams(3, a, b, s), precision=2)
    return truncate(r2, 2), truncate(r1, 2)


def generator_formula_check(a: int, b: int, s: int) -> bool:
    """Truncated generators agree with a*[[1,0],[2(1+b)s, 2]] and a*[[1,0],[2bs, 2]]."""
    if a % 3 not in (1, 2) or s % 3 not in (1, 2):
        raise InvalidParams("need a, s in {1, 2}")
    r1, r2 = dihedral_generators(DihedralParams(3, a, b, s), precision=2)
    expect_r1 = LowerTriMatrix(Z3, [[1, 0], [2 * (1 + b) * s, 2]]) * a
    expect_r2 = LowerTriMatrix(Z3, [[1, 0], [2 * b * s, 2]]) * a
    return truncate(r1, 2) == expect_r1 and truncate(r2, 2) == expect_r2


def _m(rows) -> LowerTriMatrix:
    return LowerTriMatrix(Z3, rows)


R2Z3_NAMES = {
    "z1": _m([[2, 0], [1, 2]]),
    "z2": _m([[2, 0], [2, 2]]),
    "y1": _m([[1, 0], [1, 1]]),
    "y2": _m([[1, 0], [2, 1]]),
    "I1": _m([[1, 0], [0, 2]]),
    "I2": _m([[1, 0], [1, 2]]),
    "I3": _m([[1, 0], [2, 2]]),
    "2I1": _m([[2, 0], [0, 1]]),
    "2I2": _m([[2, 0], [2, 1]]),
    "2I3": _m([[2, 0], [1, 1]]),
    "E": _m([[1, 0], [0, 1]]),
    "2E": _m([[2, 0], [0, 2]]),
}


def name_of(m: Matrix) -> str:
    for name, ref in R2Z3_NAMES.items():
        if ref == m:
            return name
    raise KeyError(f"{m!r} is not an element of R_2(Z_3)")


@dataclass
class EquivalenceClass:
    pairs: List[tuple]
    image: GroupInventory

    @property
    def image_names(self) -> List[str]:
        return sorted(name_of(m) for m in self.image)

    def to_json(self) -> dict:
        return {
            "image": self.image_names,
            "generator_pairs": [[name_of(x), name_of(y)] for x, y in self.pairs],
        }


def faithful_s3_pairs(inventory: GroupInventory) -> List[tuple]:
    """Ordered (x, y) with x^2 = y^2 = (xy)^3 = 1 generating a group of order 6."""
    pairs = []
    for x in inventory:
        if not (x @ x).is_identity():
            continue
        for y in inventory:
            if not (y @ y).is_identity():
                continue
            if not ((x @ y) ** 3).is_identity():
                continue
            if len(subgroup_closure([x, y])) == 6:
                pairs.append((x, y))
    return pairs


def classify_faithful_S3_in_R2Z3() -> List[EquivalenceClass]:
    """Partition the faithful S_3 representations in R_2(Z_3) up to GL(2, Z_3) conjugacy."""
    pairs = faithful_s3_pairs(enumerate_Rn(2, Z3))
    classes: List[EquivalenceClass] = []
    for pair in pairs:
        for cls in classes:
            if find_conjugator(cls.pairs[0], pair) is not None:
                cls.pairs.append(pair)
                break
        else:
            classes.append(EquivalenceClass([pair], subgroup_closure(pair)))
    return classes
