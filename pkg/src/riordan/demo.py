"""Deterministic walk-through of the worked examples: S_3 over Z_3 and friends."""

from __future__ import annotations

from typing import List, Tuple

from .group import DihedralParams, dihedral_generators, jennings_power
from .matrices import LowerTriMatrix, Matrix
from .rings import Modular, Rationals
from .series import Series, compositional_power, rational_series
from .truncated import (
    S3_CYCLES,
    S3_TABLE_ORDER,
    Z3,
    classify_faithful_S3_in_R2Z3,
    degree2_permutation_generators,
    dihedral_degree2_generators,
    enumerate_Rn,
    find_conjugator,
    iter_conjugators,
    s3_table,
    truncate,
)

Section = Tuple[str, str]

# The r'_1, r'_2 pair printed for the a = 2 representation.
PRIMED_GENERATORS = (
    LowerTriMatrix(Z3, [[2, 0], [2, 1]]),
    LowerTriMatrix(Z3, [[2, 0], [0, 1]]),
)
KNOWN_CONJUGATOR = Matrix(Z3, [[0, 1], [1, 1]])


def _inline(m: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(m.ring.format(c) for c in row) + "]" for row in m.rows) + "]"


def s3_riordan_matrices(size: int = 5) -> List[Tuple[str, str, LowerTriMatrix]]:
    """(S_3 element, Riordan word, truncated matrix) for n = 3, a = b = s = 1."""
    r1, r2 = dihedral_generators(DihedralParams(3, 1, 1, 1))
    words = [
        ("s1", "r2", r2),
        ("s2", "r1", r1),
        ("s2s1", "r1r2", r1 * r2),
        ("s1s2", "r2r1", r2 * r1),
        ("s2s1s2", "r2r1r2", r2 * r1 * r2),
        ("e", "I", r1 * r1),
    ]
    return [(g, w, truncate(x, size)) for g, w, x in words]


def _section_s3_matrices() -> Section:
    lines = ["r1 = (1/(1+2t), 2t/(1+2t)), r2 = (1/(1+t), 2t/(1+t)) over Zmod:3", ""]
    for g, w, m in s3_riordan_matrices():
        lines.append(f"{g} <-> {w}:")
        lines.append(m.to_text())
        lines.append("")
    return "S_3 by 5x5 truncated Riordan matrices over Z_3 (n=3, a=b=s=1)", "\n".join(lines).rstrip()


def _section_table() -> Section:
    b_table = s3_table(degree2_permutation_generators())
    rho_table = s3_table(dihedral_degree2_generators(1, 1, 1))
    lines = [f"{'g':<8}{'cycles':<12}{'B(g)':<20}rho_2(g) for (a,b,s)=(1,1,1)"]
    for name in S3_TABLE_ORDER:
        lines.append(f"{name:<8}{S3_CYCLES[name]:<12}{_inline(b_table[name]):<20}{_inline(rho_table[name])}")
    return "Degree-2 representations of S_3 over Z_3", "\n".join(lines)


def _section_classification() -> Section:
    inv = enumerate_Rn(2, Z3)
    profile = ", ".join(f"{k}:{v}" for k, v in inv.order_profile.items())
    lines = [f"|R_2(Z_3)| = {len(inv)}, order profile {{{profile}}}"]
    classes = classify_faithful_S3_in_R2Z3()
    total = sum(len(c.pairs) for c in classes)
    lines.append(f"faithful generating pairs: {total}, equivalence classes: {len(classes)}")
    for idx, cls in enumerate(classes, 1):
        lines.append(f"  class {idx}: image {{{', '.join(cls.image_names)}}} ({len(cls.pairs)} ordered pairs)")
    witness = find_conjugator(dihedral_degree2_generators(1, 1, 1), degree2_permutation_generators())
    lines.append("conjugator rho_(1,1,1) -> B: " + ("none" if witness is None else _inline(witness.T)))
    return "Faithful S_3 representations in R_2(Z_3)", "\n".join(lines)


def _section_witness() -> Section:
    b = degree2_permutation_generators()
    lines = [
        f"r'_1 = {_inline(PRIMED_GENERATORS[0])}, r'_2 = {_inline(PRIMED_GENERATORS[1])}",
        f"B(s1) = {_inline(b[0])}, B(s2) = {_inline(b[1])}",
    ]
    found = [_inline(T) for T in iter_conjugators(PRIMED_GENERATORS, b)]
    lines.append("all conjugators T with T r'_i = B(s_i) T: " + ", ".join(found))
    ok = all(KNOWN_CONJUGATOR @ r == bb @ KNOWN_CONJUGATOR for r, bb in zip(PRIMED_GENERATORS, b))
    lines.append(f"T = {_inline(KNOWN_CONJUGATOR)} validates: {'yes' if ok else 'no'}")
    return "Equivalence of rho_(2,0,1) with the permutation representation", "\n".join(lines)


def _section_jennings() -> Section:
    lines = ["f1 = -t, f2 = -t/(1+t), f1(f2(t)) = t/(1+t)"]
    for ring in (Rationals(), Modular(3)):
        f1 = Series(ring, [0, -1], 16)
        f2 = rational_series(ring, 16, [0, -1], [1, 1])
        coeffs = []
        for m in range(1, 7):
            rep = jennings_power(f1, f2, m)
            coeffs.append(f"m={m}: {rep.observed_m_cq}")
        lines.append(f"{ring}: q=2, c_q={jennings_power(f1, f2, 1).c_q}; [t^2] of m-th power: " + ", ".join(coeffs))
    h = rational_series(Modular(3), 16, [0, 1], [1, 1])
    third = compositional_power(h, 3)
    lines.append(f"Zmod:3: third compositional power of t/(1+t) = {third.to_text()}")
    return "Jennings deviation: characteristic 0 versus characteristic 3", "\n".join(lines)


def demo_sections() -> List[Section]:
    return [
        _section_s3_matrices(),
        _section_table(),
        _section_classification(),
        _section_witness(),
        _section_jennings(),
    ]


def demo_paper() -> str:
    parts = []
    for title, body in demo_sections():
        parts.append(f"== {title} ==\n{body}\n")
    return "\n".join(parts)
