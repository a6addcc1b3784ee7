"""Coxeter presentations: builtin families, a small text format, relation checks.

Text format, one statement per ``;``::

    generators 2;
    m 1 2 = 3;

Generators are 1-indexed.  Off-diagonal entries that are not given default
to 2 (commuting generators); a free product has to be written ``= inf``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .errors import (
    InvalidParameter,
    PresentationSyntaxError,
    PresentationValidationError,
    RingMismatch,
    UnsupportedPresentation,
)
from .group import element_order
from .matrices import Matrix

INF = math.inf
UNBOUNDED = "unbounded"

GroupWord = Tuple[int, ...]


@dataclass(frozen=True)
class CoxeterPresentation:
    k: int
    m: Tuple[Tuple[Union[int, float], ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise PresentationValidationError("need at least one generator")
        if len(self.m) != self.k or any(len(row) != self.k for row in self.m):
            raise PresentationValidationError(f"m must be {self.k}x{self.k}")
        for i in range(self.k):
            if self.m[i][i] != 1:
                raise PresentationValidationError(f"m({i + 1},{i + 1}) must be 1 (diagonal)")
            for j in range(i + 1, self.k):
                if self.m[i][j] != self.m[j][i]:
                    raise PresentationValidationError(f"m is not symmetric at ({i + 1},{j + 1})")
                if self.m[i][j] != INF and (not isinstance(self.m[i][j], int) or self.m[i][j] < 2):
                    raise PresentationValidationError(f"m({i + 1},{j + 1}) must be an integer >= 2 or inf")

    @classmethod
    def from_pairs(cls, k: int, pairs: dict) -> "CoxeterPresentation":
        """Build from {(i, j): m_ij} with 1-indexed i < j; missing pairs default to 2."""
        m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
        for (i, j), v in pairs.items():
            m[i - 1][j - 1] = m[j - 1][i - 1] = v
        return cls(k, tuple(tuple(r) for r in m))

    def entry(self, i: int, j: int):
        return self.m[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"k": self.k, "m": [[_fmt(v) for v in row] for row in self.m]}


def _fmt(v) -> str:
    return "inf" if v == INF else str(v)


def builtin(name: str, n: int | None = None) -> CoxeterPresentation:
    """Builtin families: ``S<n>``, ``D<n>``, ``K4``, ``Dinfty``.

    ``builtin("S", 4)`` and ``builtin("S4")`` are the same thing.
    """
    if n is None:
        match = re.fullmatch(r"([SD])(\d+)", name)
        if match:
            name, n = match.group(1), int(match.group(2))
    if name == "K4":
        return CoxeterPresentation.from_pairs(2, {(1, 2): 2})
    if name in ("Dinfty", "Dinf"):
        return CoxeterPresentation.from_pairs(2, {(1, 2): INF})
    if name == "S":
        if n is None or n < 2:
            raise InvalidParameter("S_n needs n >= 2")
        k = n - 1
        return CoxeterPresentation.from_pairs(k, {(i, i + 1): 3 for i in range(1, k)})
    if name == "D":
        if n is None or n < 2:
            raise InvalidParameter("D_n needs n >= 2")
        return CoxeterPresentation.from_pairs(2, {(1, 2): n})
    raise InvalidParameter(f"unknown builtin presentation {name!r}")


_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<word>[A-Za-z]+)|(?P<num>\d+)|(?P<sym>[=;])|(?P<bad>.)")


def _tokens(text: str):
    line, line_start = 1, 0
    for mt in _TOKEN.finditer(text):
        col = mt.start() - line_start + 1
        if mt.lastgroup == "bad":
            raise PresentationSyntaxError(f"unexpected character {mt.group()!r}", line, col)
        if mt.lastgroup:
            yield mt.group(), line, col
        newlines = mt.group().count("\n")
        if newlines:
            line += newlines
            line_start = mt.start() + mt.group().rfind("\n") + 1
    yield None, line, len(text) - line_start + 1


def parse_presentation(text: str) -> CoxeterPresentation:
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos]

    def take(expected=None, what=None):
        nonlocal pos
        tok, line, col = toks[pos]
        if tok is None:
            raise PresentationSyntaxError(f"unexpected end of input, expected {what or expected}", line, col)
        if expected is not None and tok != expected:
            raise PresentationSyntaxError(f"expected {expected!r}, got {tok!r}", line, col)
        pos += 1
        return tok, line, col

    def take_int(what):
        tok, line, col = take(what=what)
        if not tok.isdigit():
            raise PresentationSyntaxError(f"expected {what}, got {tok!r}", line, col)
        return int(tok), line, col

    take("generators")
    k, kline, kcol = take_int("generator count")
    take(";")
    if k < 1:
        raise PresentationValidationError(f"line {kline}: generator count must be positive")
    pairs = {}
    while peek()[0] is not None:
        take("m")
        i, iline, icol = take_int("generator index")
        j, _, _ = take_int("generator index")
        take("=")
        tok, vline, vcol = take(what="an integer or inf")
        if tok == "inf":
            value = INF
        elif tok.isdigit():
            value = int(tok)
        else:
            raise PresentationSyntaxError(f"expected an integer or inf, got {tok!r}", vline, vcol)
        take(";")
        if not (1 <= i <= k and 1 <= j <= k):
            raise PresentationValidationError(f"line {iline}: generator index out of range 1..{k}")
        if i == j:
            if value != 1:
                raise PresentationValidationError(f"line {iline}: m({i},{i}) must be 1 (diagonal)")
            continue
        if value != INF and value < 2:
            raise PresentationValidationError(f"line {iline}: m({i},{j}) must be >= 2 or inf")
        key = (min(i, j), max(i, j))
        if key in pairs and pairs[key] != value:
            raise PresentationValidationError(
                f"line {iline}: m({i},{j}) = {_fmt(value)} conflicts with {_fmt(pairs[key])}; m must be symmetric"
            )
        pairs[key] = value
    return CoxeterPresentation.from_pairs(k, pairs)


def render(p: CoxeterPresentation) -> str:
    """Canonical text: every off-diagonal pair i < j written explicitly."""
    lines = [f"generators {p.k};"]
    for i in range(1, p.k + 1):
        for j in range(i + 1, p.k + 1):
            lines.append(f"m {i} {j} = {_fmt(p.entry(i, j))};")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RelationVerdict:
    i: int
    j: int
    m: Union[int, float]
    holds: Union[bool, str]

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "m": _fmt(self.m), "holds": self.holds}


@dataclass(frozen=True)
class RelationReport:
    relations: Tuple[RelationVerdict, ...]

    @property
    def overall(self) -> bool:
        # unbounded verdicts are neither proof nor refutation
        return all(v.holds is True for v in self.relations if v.holds != UNBOUNDED)

    def to_json(self) -> dict:
        return {"overall": self.overall, "relations": [v.to_json() for v in self.relations]}

    def to_text(self) -> str:
        lines = []
        for v in self.relations:
            lhs = f"(r{v.i})^2" if v.i == v.j else f"(r{v.i} r{v.j})^{_fmt(v.m)}"
            status = {True: "holds", False: "FAILS", UNBOUNDED: "unbounded (no finite order up to cutoff)"}[v.holds]
            lines.append(f"{lhs} = 1: {status}")
        lines.append(f"overall: {'verified' if self.overall else 'FAILED'}")
        return "\n".join(lines)


def _check_images(p: CoxeterPresentation, images: Sequence):
    if len(images) != p.k:
        raise InvalidParameter(f"presentation has {p.k} generators, got {len(images)} images")
    first = images[0]
    for x in images[1:]:
        if isinstance(x, Matrix) != isinstance(first, Matrix):
            raise TypeError("images must all be Riordan arrays or all matrices")
        if x.ring != first.ring:
            raise RingMismatch(f"{x.ring} vs {first.ring}")


def verify_assignment(p: CoxeterPresentation, images: Sequence, cutoff: int = 64) -> RelationReport:
    """Check (r_i r_j)^m_ij = 1 for every pair; infinite entries are probed up to ``cutoff``."""
    _check_images(p, images)
    verdicts = []
    for i in range(1, p.k + 1):
        for j in range(i, p.k + 1):
            m = p.entry(i, j)
            x = images[i - 1] * images[j - 1]
            if i == j:
                holds = x.is_identity()
            elif m == INF:
                holds = UNBOUNDED if not element_order(x, cutoff).is_finite else False
            else:
                holds = (x ** m).is_identity()
            verdicts.append(RelationVerdict(i, j, m, holds))
    return RelationReport(tuple(verdicts))


def dihedral_words(n: int) -> List[GroupWord]:
    """The 2n normal forms (r1 r2)^k and r2 (r1 r2)^k, k = 0 .. n-1."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameter("dihedral words need a finite n >= 2")
    rotations = [(1, 2) * k for k in range(n)]
    return rotations + [(2,) + w for w in rotations]


def format_word(word: GroupWord) -> str:
    return "".join(f"r{i}" for i in word) or "e"


def evaluate_word(word: Sequence[int], images: Sequence):
    """Product of images[i-1] along a 1-indexed word (identity for the empty word)."""
    result = images[0].identity_like()
    for i in word:
        result = result * images[i - 1]
    return result


def is_faithful(p: CoxeterPresentation, images: Sequence, cutoff: int = 64) -> bool:
    """Faithfulness for dihedral presentations: relations hold and the 2n normal forms differ."""
    if p.k != 2 or p.entry(1, 2) == INF:
        raise UnsupportedPresentation("faithfulness is only decided for finite dihedral presentations")
    if not verify_assignment(p, images, cutoff).overall:
        return False
    values = [evaluate_word(w, images) for w in dihedral_words(p.entry(1, 2))]
    return len(set(values)) == len(values)
