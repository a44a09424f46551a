"""Bruhat order, covers and the parabolic quotient W^{I_r}."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..core.errors import InvalidElementError, RankMismatchError
from ..schemas.common import LieKind
from .rootsys import (
    EpsVector,
    RootSystem,
    Weight,
    check_node,
    coroot_pairing_epsilon,
    epsilon_to_root_basis,
    fundamental_weight_epsilon,
    root_basis_to_epsilon,
)
from .weyl import (
    SignedPerm,
    act_on_epsilon,
    check_element,
    compose,
    from_word,
    generator,
    image_of_simple_root_is_positive,
    length,
    neg_count,
    positive_roots,
    reflection,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetContext:
    rs: RootSystem
    r: int

    def __post_init__(self) -> None:
        check_node(self.rs, self.r)

    @property
    def n(self) -> int:
        return self.rs.rank

    def __str__(self) -> str:
        return f"{self.rs.label}/r={self.r}"


@lru_cache(maxsize=None)
def _rank_table(sigma: SignedPerm) -> dict[tuple[int, int], int]:
    """sigma[i, j] = #{a in [-n, n] minus 0 : a <= i and sigma(a) >= j}."""
    n = sigma.n
    positions = [*range(-n, 0), *range(1, n + 1)]
    thresholds = [*range(-n, 0), *range(1, n + 2)]
    table: dict[tuple[int, int], int] = {}
    for j in thresholds:
        running = 0
        table[(-n - 1, j)] = 0
        for i in positions:
            if sigma(i) >= j:
                running += 1
            table[(i, j)] = running
    return table


def rank_count(sigma: SignedPerm, i: int, j: int) -> int:
    n = sigma.n
    i = min(i, n)
    if i < -n:
        return 0
    if i == 0:
        i = -1
    if j > n:
        return 0
    if j < -n:
        j = -n
    if j == 0:
        j = 1
    return _rank_table(sigma)[(i, j)]


def _same_rank(sigma: SignedPerm, tau: SignedPerm) -> None:
    if sigma.n != tau.n:
        raise RankMismatchError(f"cannot compare ranks {sigma.n} and {tau.n}")


def leq_B(sigma: SignedPerm, tau: SignedPerm) -> bool:
    _same_rank(sigma, tau)
    low, high = _rank_table(sigma), _rank_table(tau)
    return all(count <= high[key] for key, count in low.items())


def _empty_rectangle(sigma: SignedPerm, a: int, b: int) -> bool:
    return all(abs(sigma(p)) > b for p in range(1, a + 1))


def d_rectangle_condition(sigma: SignedPerm, tau: SignedPerm) -> bool:
    """Parity condition on rectangles [-a, a] x [-b, b] empty for both elements."""
    _same_rank(sigma, tau)
    n = sigma.n
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if not (_empty_rectangle(sigma, a, b) and _empty_rectangle(tau, a, b)):
                continue
            if rank_count(sigma, -a - 1, b + 1) != rank_count(tau, -a - 1, b + 1):
                continue
            if (rank_count(sigma, -1, b + 1) - rank_count(tau, -1, b + 1)) % 2:
                return False
    return True


def leq_D(sigma: SignedPerm, tau: SignedPerm) -> bool:
    for element in (sigma, tau):
        if neg_count(element) % 2:
            raise InvalidElementError(f"{element} is not in a type D Weyl group")
    return leq_B(sigma, tau) and d_rectangle_condition(sigma, tau)


@lru_cache(maxsize=200_000)
def leq(rs: RootSystem, sigma: SignedPerm, tau: SignedPerm) -> bool:
    if rs.kind is LieKind.D:
        return leq_D(sigma, tau)
    return leq_B(sigma, tau)


def is_min_rep(ctx: CosetContext, sigma: SignedPerm) -> bool:
    check_element(ctx.rs, sigma)
    return all(
        image_of_simple_root_is_positive(ctx.rs, sigma, j)
        for j in range(1, ctx.n + 1)
        if j != ctx.r
    )


def coset_min(ctx: CosetContext, sigma: SignedPerm) -> SignedPerm:
    """The minimal representative of sigma W_{I_r}."""
    check_element(ctx.rs, sigma)
    current = sigma
    while True:
        bad = [
            j
            for j in range(1, ctx.n + 1)
            if j != ctx.r and not image_of_simple_root_is_positive(ctx.rs, current, j)
        ]
        if not bad:
            return current
        current = compose(current, generator(ctx.rs, bad[0]))


def orbit_point(ctx: CosetContext, sigma: SignedPerm) -> EpsVector:
    return act_on_epsilon(sigma, fundamental_weight_epsilon(ctx.rs, ctx.r))


def weight_of(ctx: CosetContext, sigma: SignedPerm) -> Weight:
    """sigma(omega_r) in the simple-root basis."""
    check_element(ctx.rs, sigma)
    return epsilon_to_root_basis(ctx.rs, orbit_point(ctx, sigma))


def min_rep_from_orbit_point(ctx: CosetContext, y: Sequence[Fraction | int]) -> SignedPerm:
    """The unique u in W^{I_r} with u(omega_r) = y (epsilon coordinates)."""
    rs = ctx.rs
    current = tuple(Fraction(c) for c in y)
    word: list[int] = []
    while True:
        step = next(
            (i for i in range(1, rs.rank + 1) if coroot_pairing_epsilon(rs, current, i) < 0),
            None,
        )
        if step is None:
            break
        current = act_on_epsilon(generator(rs, step), current)
        word.append(step)
    if current != fundamental_weight_epsilon(rs, ctx.r):
        raise InvalidElementError(f"{tuple(str(c) for c in y)} is not in the orbit of omega_{ctx.r}")
    return from_word(rs, word)


def min_rep_from_weight(ctx: CosetContext, chi: Weight) -> SignedPerm:
    return min_rep_from_orbit_point(ctx, root_basis_to_epsilon(ctx.rs, chi))


@lru_cache(maxsize=None)
def min_reps(ctx: CosetContext) -> tuple[SignedPerm, ...]:
    """All of W^{I_r}, sorted by (length, window)."""
    rs = ctx.rs
    start = fundamental_weight_epsilon(rs, ctx.r)
    seen = {start}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        for i in range(1, rs.rank + 1):
            image = act_on_epsilon(generator(rs, i), y)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    reps = [min_rep_from_orbit_point(ctx, y) for y in seen]
    return tuple(sorted(reps, key=lambda u: (length(rs, u), u.window)))


def covers(rs: RootSystem, sigma: SignedPerm) -> list[SignedPerm]:
    """Upper covers of sigma in W."""
    base = length(rs, sigma)
    found = set()
    for beta in positive_roots(rs):
        tau = compose(reflection(rs, beta), sigma)
        if length(rs, tau) == base + 1 and leq(rs, sigma, tau):
            found.add(tau)
    return sorted(found)


def min_rep_covers(ctx: CosetContext, sigma: SignedPerm) -> list[SignedPerm]:
    """Upper covers of sigma inside W^{I_r}."""
    return [tau for tau in covers(ctx.rs, sigma) if is_min_rep(ctx, tau)]


def interval_min_reps(ctx: CosetContext, v: SignedPerm, w: SignedPerm) -> list[SignedPerm]:
    rs = ctx.rs
    if not leq(rs, v, w):
        return []
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if u == w:
            continue
        for tau in min_rep_covers(ctx, u):
            if tau not in seen and leq(rs, tau, w):
                seen.add(tau)
                queue.append(tau)
    logger.debug("bruhat.interval.built: %s [%s, %s] size=%s", ctx, v, w, len(seen))
    return sorted(seen, key=lambda u: (length(rs, u), u.window))
