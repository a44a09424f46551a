"""Brute-force oracles used to check the closed forms at small rank.

Nothing here relies on the classification: the group is enumerated by BFS,
Bruhat order is decided by the subword property of a reduced word, and
semistability by a bounded search over weight-sum multichains.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from ..core.errors import BudgetExceededError
from .bruhat import CosetContext, is_min_rep, weight_of
from .rootsys import RootSystem, Weight, denominator_lcm, is_nonneg, is_nonpos
from .weyl import SignedPerm, compose, generator, identity, positive_roots, reduced_word, reflection


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class OracleResult:
    found: bool
    certificate: tuple[SignedPerm, ...] | None
    bounded: bool  # no chain up to k_max; says nothing about longer chains


def enumerate_weyl(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> dict[SignedPerm, int]:
    """Every element of W with its BFS distance from the identity."""
    return dict(_enumerate(rs, budget))


@lru_cache(maxsize=8)
def _enumerate(rs: RootSystem, budget: int) -> tuple[tuple[SignedPerm, int], ...]:
    start = identity(rs.rank)
    lengths = {start: 0}
    queue = deque([start])
    gens = [generator(rs, i) for i in range(1, rs.rank + 1)]
    while queue:
        sigma = queue.popleft()
        for s in gens:
            tau = compose(sigma, s)
            if tau in lengths:
                continue
            if len(lengths) >= budget:
                raise BudgetExceededError(f"W({rs.label}) has more than {budget} elements")
            lengths[tau] = lengths[sigma] + 1
            queue.append(tau)
    logger.debug("oracle.weyl.enumerated: %s size=%s", rs.label, len(lengths))
    return tuple(lengths.items())


@lru_cache(maxsize=4096)
def _subword_products(rs: RootSystem, tau: SignedPerm) -> frozenset[SignedPerm]:
    products = {identity(rs.rank)}
    for letter in reduced_word(rs, tau):
        s = generator(rs, letter)
        products |= {compose(x, s) for x in products}
    return frozenset(products)


def brute_bruhat(rs: RootSystem, sigma: SignedPerm, tau: SignedPerm) -> bool:
    return sigma in _subword_products(rs, tau)


def brute_min_reps(ctx: CosetContext, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    group = enumerate_weyl(ctx.rs, budget)
    return sorted((u for u in group if is_min_rep(ctx, u)), key=lambda u: (group[u], u.window))


def _extremes(
    ctx: CosetContext,
    keep: Callable[[Weight], bool],
    below: Callable[[SignedPerm, SignedPerm], bool],
    budget: int,
) -> list[SignedPerm]:
    candidates = [u for u in brute_min_reps(ctx, budget) if keep(weight_of(ctx, u))]
    return sorted(
        u for u in candidates
        if not any(other != u and below(u, other) for other in candidates)
    )


def brute_extremal_v(ctx: CosetContext, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    """Bruhat-maximal minimal representatives with v(omega_r) >= 0."""
    return _extremes(ctx, is_nonneg, lambda u, o: brute_bruhat(ctx.rs, u, o), budget)


def brute_extremal_w(ctx: CosetContext, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    """Bruhat-minimal minimal representatives with w(omega_r) <= 0."""
    return _extremes(ctx, is_nonpos, lambda u, o: brute_bruhat(ctx.rs, o, u), budget)


def brute_covers(rs: RootSystem, sigma: SignedPerm, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    """Upper covers of sigma in W: reflections t with BFS length of t sigma one more."""
    group = enumerate_weyl(rs, budget)
    base = group[sigma]
    found = set()
    for beta in positive_roots(rs):
        tau = compose(reflection(rs, beta), sigma)
        if group[tau] == base + 1:
            found.add(tau)
    return sorted(found)


def brute_min_rep_covers(ctx: CosetContext, sigma: SignedPerm, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    return [tau for tau in brute_covers(ctx.rs, sigma, budget) if is_min_rep(ctx, tau)]


def brute_interval(ctx: CosetContext, v: SignedPerm, w: SignedPerm, budget: int = DEFAULT_BUDGET) -> list[SignedPerm]:
    return [
        u for u in brute_min_reps(ctx, budget)
        if brute_bruhat(ctx.rs, v, u) and brute_bruhat(ctx.rs, u, w)
    ]


def search_zero_sum_chain(
    elements: Sequence[SignedPerm],
    weights: Sequence[Weight],
    below: Callable[[SignedPerm, SignedPerm], bool],
    k_max: int,
) -> tuple[SignedPerm, ...] | None:
    """Shortest multichain u_1 <= ... <= u_k (k <= k_max) with zero weight sum.

    `elements` must be sorted by length. Weights are scaled to integers and
    partial sums outside the box that k_max - k further steps can cancel are
    dropped.
    """
    if not elements:
        return None
    scale = denominator_lcm(weights)
    vectors = [tuple(int(c * scale) for c in chi.coeffs) for chi in weights]
    bound = max((abs(c) for vec in vectors for c in vec), default=0)
    order = range(len(elements))
    successors = {
        a: [b for b in order if b >= a and (b == a or below(elements[a], elements[b]))]
        for a in order
    }

    layer: dict[tuple[int, tuple[int, ...]], tuple | None] = {(a, vectors[a]): None for a in order}
    history = [layer]
    for k in range(1, k_max + 1):
        for (a, total), _ in layer.items():
            if not any(total):
                return _unwind(history, (a, total), elements)
        if k == k_max:
            break
        room = (k_max - k) * bound
        next_layer: dict[tuple[int, tuple[int, ...]], tuple | None] = {}
        for state in layer:
            a, total = state
            for b in successors[a]:
                combined = tuple(x + y for x, y in zip(total, vectors[b]))
                if any(abs(c) > room for c in combined):
                    continue
                next_layer.setdefault((b, combined), state)
        layer = next_layer
        history.append(layer)
    return None


def _unwind(history, state, elements) -> tuple[SignedPerm, ...]:
    chain = []
    for layer in reversed(history):
        chain.append(elements[state[0]])
        state = layer[state]
        if state is None:
            break
    return tuple(reversed(chain))


def brute_semistable(
    ctx: CosetContext,
    v: SignedPerm,
    w: SignedPerm,
    k_max: int,
    budget: int = DEFAULT_BUDGET,
) -> OracleResult:
    if k_max < 1:
        raise ValueError("k_max must be positive")
    interval = brute_interval(ctx, v, w, budget)
    weights = [weight_of(ctx, u) for u in interval]
    chain = search_zero_sum_chain(interval, weights, lambda a, b: brute_bruhat(ctx.rs, a, b), k_max)
    logger.debug("oracle.semistable.searched: %s interval=%s found=%s", ctx, len(interval), chain is not None)
    if chain is None:
        return OracleResult(False, None, True)
    return OracleResult(True, chain, False)
