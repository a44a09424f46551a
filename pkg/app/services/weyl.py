"""Signed-permutation model of W(B_n) = W(C_n) and W(D_n).

Generators: s_1 = (1,-1) for B/C, s_1 = (1,-2)(-1,2) for D, s_i = (i-1,i)
otherwise. Composition is (a*b)(k) = a(b(k)), so from_word([3, 2, 1]) is
s_3 s_2 s_1 read as a product of functions.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from ..core.errors import (
    InvalidElementError,
    NotARootError,
    ParseError,
    RankMismatchError,
)
from ..schemas.common import LieKind
from .rootsys import (
    EpsVector,
    RootSystem,
    Weight,
    epsilon_to_root_basis,
    root_basis_to_epsilon,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.window)
        if sorted(abs(v) for v in self.window) != list(range(1, n + 1)):
            raise InvalidElementError(f"{self.window} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def extended(self) -> tuple[int, ...]:
        """Values at positions -n..-1, 1..n."""
        n = self.n
        return tuple(self(i) for i in [*range(-n, 0), *range(1, n + 1)])

    def __str__(self) -> str:
        return format_window(self)


def identity(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(1, n + 1)))


def generator(rs: RootSystem, i: int) -> SignedPerm:
    n = rs.rank
    if not 1 <= i <= n:
        raise InvalidElementError(f"generator s_{i} out of range for {rs.label}")
    window = list(range(1, n + 1))
    if i == 1:
        if rs.kind is LieKind.D:
            window[0], window[1] = -2, -1
        else:
            window[0] = -1
    else:
        window[i - 2], window[i - 1] = i, i - 1
    return SignedPerm(tuple(window))


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    if a.n != b.n:
        raise RankMismatchError(f"cannot compose ranks {a.n} and {b.n}")
    return SignedPerm(tuple(a(v) for v in b.window))


def inverse(a: SignedPerm) -> SignedPerm:
    window = [0] * a.n
    for i, v in enumerate(a.window, start=1):
        window[abs(v) - 1] = i if v > 0 else -i
    return SignedPerm(tuple(window))


def from_word(rs: RootSystem, word: Sequence[int]) -> SignedPerm:
    result = identity(rs.rank)
    for i in word:
        result = compose(result, generator(rs, i))
    return result


def inv_count(sigma: SignedPerm) -> int:
    ext = sigma.extended()
    return sum(1 for a in range(len(ext)) for b in range(a + 1, len(ext)) if ext[a] > ext[b])


def neg_count(sigma: SignedPerm) -> int:
    return sum(1 for v in sigma.window if v < 0)


def check_element(rs: RootSystem, sigma: SignedPerm) -> None:
    if sigma.n != rs.rank:
        raise RankMismatchError(f"window of length {sigma.n} for {rs.label}")
    if rs.kind is LieKind.D and neg_count(sigma) % 2:
        raise InvalidElementError(f"{sigma} has an odd number of sign changes, not in W({rs.label})")


@lru_cache(maxsize=None)
def length(rs: RootSystem, sigma: SignedPerm) -> int:
    check_element(rs, sigma)
    inv, neg = inv_count(sigma), neg_count(sigma)
    if rs.kind is LieKind.D:
        return (inv - neg) // 2
    return (inv + neg) // 2


def act_on_epsilon(sigma: SignedPerm, x: Sequence[Fraction]) -> EpsVector:
    out = [Fraction(0)] * sigma.n
    for i, v in enumerate(sigma.window):
        out[abs(v) - 1] = x[i] if v > 0 else -x[i]
    return tuple(out)


def apply_to_weight(rs: RootSystem, sigma: SignedPerm, chi: Weight) -> Weight:
    check_element(rs, sigma)
    return epsilon_to_root_basis(rs, act_on_epsilon(sigma, root_basis_to_epsilon(rs, chi)))


def root_is_positive(y: Sequence[Fraction]) -> bool:
    """A root is positive iff its last nonzero epsilon coordinate is positive."""
    for c in reversed(y):
        if c:
            return c > 0
    return False


def image_of_simple_root_is_positive(rs: RootSystem, sigma: SignedPerm, j: int) -> bool:
    if j == 1:
        if rs.kind is LieKind.D:
            return sigma(1) + sigma(2) > 0
        return sigma(1) > 0
    return sigma(j - 1) < sigma(j)


def right_descents(rs: RootSystem, sigma: SignedPerm) -> list[int]:
    return [j for j in range(1, rs.rank + 1) if not image_of_simple_root_is_positive(rs, sigma, j)]


def left_descents(rs: RootSystem, sigma: SignedPerm) -> list[int]:
    return right_descents(rs, inverse(sigma))


def descents(rs: RootSystem, sigma: SignedPerm) -> tuple[list[int], list[int]]:
    """(left, right) descent sets."""
    return left_descents(rs, sigma), right_descents(rs, sigma)


def reduced_word(rs: RootSystem, sigma: SignedPerm) -> list[int]:
    """A reduced word, found by peeling right descents."""
    check_element(rs, sigma)
    word: list[int] = []
    current = sigma
    while True:
        peel = right_descents(rs, current)
        if not peel:
            break
        j = peel[0]
        word.append(j)
        current = compose(current, generator(rs, j))
    word.reverse()
    return word


@lru_cache(maxsize=None)
def positive_roots_epsilon(rs: RootSystem) -> tuple[EpsVector, ...]:
    n = rs.rank
    roots: list[EpsVector] = []

    def unit(*pairs: tuple[int, int]) -> EpsVector:
        vec = [Fraction(0)] * n
        for p, c in pairs:
            vec[p - 1] += c
        return tuple(vec)

    for q in range(1, n + 1):
        if rs.kind is LieKind.B:
            roots.append(unit((q, 1)))
        elif rs.kind is LieKind.C:
            roots.append(unit((q, 2)))
        for p in range(1, q):
            roots.append(unit((q, 1), (p, -1)))
            roots.append(unit((q, 1), (p, 1)))
    return tuple(roots)


@lru_cache(maxsize=None)
def positive_roots(rs: RootSystem) -> tuple[Weight, ...]:
    return tuple(epsilon_to_root_basis(rs, y) for y in positive_roots_epsilon(rs))


def reflection(rs: RootSystem, beta: Weight) -> SignedPerm:
    """s_beta for a root beta (either sign), as a signed permutation."""
    y = root_basis_to_epsilon(rs, beta)
    if not root_is_positive(y):
        y = tuple(-c for c in y)
    if y not in positive_roots_epsilon(rs):
        raise NotARootError(f"{beta} is not a root of {rs.label}")
    support = [p for p in range(1, rs.rank + 1) if y[p - 1]]
    window = list(range(1, rs.rank + 1))
    if len(support) == 1:
        (p,) = support
        window[p - 1] = -p
    else:
        p, q = support
        if y[p - 1] < 0:
            window[p - 1], window[q - 1] = q, p
        else:
            window[p - 1], window[q - 1] = -q, -p
    return SignedPerm(tuple(window))


_WORD_TOKEN = re.compile(r"s?(\d+)")


def parse_window(text: str, rs: RootSystem | None = None) -> SignedPerm:
    parts = [p.strip() for p in (text or "").replace("(", "").replace(")", "").split(",")]
    try:
        values = tuple(int(p) for p in parts if p)
    except ValueError as exc:
        raise ParseError(f"bad window {text!r}") from exc
    if not values:
        raise ParseError("empty window")
    sigma = SignedPerm(values)
    if rs is not None:
        check_element(rs, sigma)
    return sigma


def parse_word(text: str) -> list[int]:
    tokens = [t for t in re.split(r"[\s,]+", (text or "").strip()) if t]
    word = []
    for token in tokens:
        match = _WORD_TOKEN.fullmatch(token)
        if not match:
            raise ParseError(f"bad word letter {token!r}")
        word.append(int(match.group(1)))
    return word


def format_window(sigma: SignedPerm) -> str:
    return ",".join(str(v) for v in sigma.window)


def format_windows(elements: Iterable[SignedPerm]) -> list[list[int]]:
    return [list(e.window) for e in elements]
