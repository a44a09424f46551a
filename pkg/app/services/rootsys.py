"""Exact root-system and weight arithmetic for B_n, C_n and D_n.

Node 1 is the special node: the short root e_1 in B, the long root 2e_1 in C
and the fork root e_1+e_2 in D. Every other simple root is e_i - e_{i-1}.
Bourbaki node i corresponds to node n+1-i here.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

from ..core.errors import InvalidRankError, ParseError, RankMismatchError
from ..schemas.common import LieKind, SignProfile


logger = logging.getLogger(__name__)

EpsVector = tuple[Fraction, ...]

MIN_RANK = {LieKind.B: 2, LieKind.C: 2, LieKind.D: 4}


@dataclass(frozen=True)
class RootSystem:
    kind: LieKind
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.rank}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Weight:
    """A weight written in the simple-root basis."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[int | Fraction | str]) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "Weight") -> None:
        if other.rank != self.rank:
            raise RankMismatchError(f"weights of rank {self.rank} and {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coeffs))

    def scale(self, factor: int | Fraction) -> "Weight":
        return Weight(tuple(a * factor for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def as_strings(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    def __str__(self) -> str:
        return format_weight(self)


def _check_rank(kind: LieKind, n: int) -> None:
    if n < MIN_RANK[kind]:
        raise InvalidRankError(f"{kind.value}{n}: rank must be at least {MIN_RANK[kind]}")


def simple_roots_epsilon(kind: LieKind, n: int) -> tuple[EpsVector, ...]:
    roots: list[EpsVector] = []
    for i in range(1, n + 1):
        vec = [Fraction(0)] * n
        if i == 1:
            if kind is LieKind.B:
                vec[0] = Fraction(1)
            elif kind is LieKind.C:
                vec[0] = Fraction(2)
            else:
                vec[0] = vec[1] = Fraction(1)
        else:
            vec[i - 1] = Fraction(1)
            vec[i - 2] = Fraction(-1)
        roots.append(tuple(vec))
    return tuple(roots)


def _dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def cartan_matrix(kind: LieKind, n: int) -> tuple[tuple[int, ...], ...]:
    """Entry (i, j) is <alpha_i, coroot alpha_j> in our labeling."""
    _check_rank(kind, n)
    roots = simple_roots_epsilon(kind, n)
    rows = []
    for a in roots:
        row = []
        for b in roots:
            value = 2 * _dot(a, b) / _dot(b, b)
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def root_system(kind: LieKind | str, n: int) -> RootSystem:
    kind = LieKind(kind)
    return RootSystem(kind=kind, rank=n, cartan=cartan_matrix(kind, n))


_TYPE_RANK = re.compile(r"^\s*([BCDbcd])\s*(\d+)\s*$")


def parse_type_rank(text: str) -> RootSystem:
    match = _TYPE_RANK.match(text or "")
    if not match:
        raise ParseError(f"expected a type and rank like 'B5', got {text!r}")
    return root_system(LieKind(match.group(1).upper()), int(match.group(2)))


def bourbaki_node(rs: RootSystem, i: int) -> int:
    check_node(rs, i)
    return rs.rank + 1 - i


def relabeling_table(rs: RootSystem) -> dict[int, int]:
    return {i: bourbaki_node(rs, i) for i in range(1, rs.rank + 1)}


def check_node(rs: RootSystem, r: int) -> None:
    if not 1 <= r <= rs.rank:
        raise InvalidRankError(f"node {r} out of range for {rs.label}")


@lru_cache(maxsize=None)
def _cartan_inverse(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix(rs.cartan).inv()
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rs.rank))
        for i in range(rs.rank)
    )


def pairing(rs: RootSystem, chi: Weight, j: int) -> Fraction:
    """<chi, coroot alpha_j>."""
    return sum((chi.coeffs[i] * rs.cartan[i][j - 1] for i in range(rs.rank)), Fraction(0))


def fundamental_weight(rs: RootSystem, r: int) -> Weight:
    check_node(rs, r)
    return Weight(_cartan_inverse(rs)[r - 1])


def weight_to_fundamental(rs: RootSystem, chi: Weight) -> tuple[Fraction, ...]:
    return tuple(pairing(rs, chi, j) for j in range(1, rs.rank + 1))


def weight_from_fundamental(rs: RootSystem, coords: Sequence[int | Fraction]) -> Weight:
    inverse = _cartan_inverse(rs)
    total = [Fraction(0)] * rs.rank
    for r, c in enumerate(coords):
        for i in range(rs.rank):
            total[i] += Fraction(c) * inverse[r][i]
    return Weight(tuple(total))


def root_basis_to_epsilon(rs: RootSystem, chi: Weight) -> EpsVector:
    if chi.rank != rs.rank:
        raise RankMismatchError(f"weight of rank {chi.rank} for {rs.label}")
    out = [Fraction(0)] * rs.rank
    for c, root in zip(chi.coeffs, simple_roots_epsilon(rs.kind, rs.rank)):
        if c:
            for p, x in enumerate(root):
                out[p] += c * x
    return tuple(out)


def epsilon_to_root_basis(rs: RootSystem, y: Sequence[Fraction | int]) -> Weight:
    n = rs.rank
    if len(y) != n:
        raise RankMismatchError(f"vector of length {len(y)} for {rs.label}")
    y = [Fraction(v) for v in y]
    tails = [Fraction(0)] * (n + 2)
    for p in range(n, 0, -1):
        tails[p] = tails[p + 1] + y[p - 1]
    coeffs = [tails[j] for j in range(1, n + 1)]
    if rs.kind is LieKind.C:
        coeffs[0] = tails[1] / 2
    elif rs.kind is LieKind.D:
        coeffs[0] = (y[0] + y[1] + tails[3]) / 2
        coeffs[1] = (-y[0] + y[1] + tails[3]) / 2
    return Weight(tuple(coeffs))


def fundamental_weight_epsilon(rs: RootSystem, r: int) -> EpsVector:
    return root_basis_to_epsilon(rs, fundamental_weight(rs, r))


def coroot_pairing_epsilon(rs: RootSystem, y: Sequence[Fraction], i: int) -> Fraction:
    root = simple_roots_epsilon(rs.kind, rs.rank)[i - 1]
    return 2 * _dot(y, root) / _dot(root, root)


def sign_profile(chi: Weight) -> SignProfile:
    positive = any(c > 0 for c in chi.coeffs)
    negative = any(c < 0 for c in chi.coeffs)
    if positive and negative:
        return SignProfile.mixed
    if positive:
        return SignProfile.all_nonneg
    if negative:
        return SignProfile.all_nonpos
    return SignProfile.zero


def is_nonneg(chi: Weight) -> bool:
    return sign_profile(chi) in (SignProfile.all_nonneg, SignProfile.zero)


def is_nonpos(chi: Weight) -> bool:
    return sign_profile(chi) in (SignProfile.all_nonpos, SignProfile.zero)


def parse_weight(text: str, rs: RootSystem | None = None) -> Weight:
    parts = [p.strip() for p in (text or "").split(",")]
    try:
        weight = Weight(tuple(Fraction(p) for p in parts if p))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight {text!r}: {exc}") from exc
    if not weight.coeffs:
        raise ParseError("empty weight")
    if rs is not None and weight.rank != rs.rank:
        raise RankMismatchError(f"weight {text!r} has {weight.rank} entries, {rs.label} needs {rs.rank}")
    return weight


def format_weight(chi: Weight) -> str:
    return ",".join(chi.as_strings())


def denominator_lcm(weights: Iterable[Weight]) -> int:
    lcm = 1
    for w in weights:
        for c in w.coeffs:
            lcm = sympy.ilcm(lcm, c.denominator)
    return int(lcm)
