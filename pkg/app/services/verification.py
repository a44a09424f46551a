"""Sweep every closed form against the brute-force oracles.

The group-level checks run once. Everything else runs per (type, n, r)
context, and the contexts are spread over a process pool when more than one
worker is asked for. Results are merged in context order, so a report does
not depend on the number of workers.
"""

from __future__ import annotations

import logging
import multiprocessing
import random
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, Iterator

from ..core.errors import RichardsonError
from ..schemas.common import CheckResult, LieKind, VerifyReport
from . import oracle
from .bruhat import CosetContext, leq, min_reps
from .classify import maximal_v, minimal_w, predicted_covers
from .criteria import (
    counterexamples,
    extremal_richardson_nonempty,
    make_pair,
    semistable_nonempty,
)
from .rootsys import MIN_RANK, RootSystem, root_system
from .weyl import SignedPerm, length


logger = logging.getLogger(__name__)

# Exhaustive order checks are quadratic in |W|; these groups stay under a few seconds.
ORDER_GROUPS = ((LieKind.B, 3), (LieKind.C, 3), (LieKind.D, 4))
RANDOM_PAIR_MAX_N = 4

CONTEXT_CHECKS = ("extremal_completeness", "covers", "richardson_nonemptiness", "semistability")

ContextKey = tuple[LieKind, int, int]


def context_keys(max_n: int) -> list[ContextKey]:
    return [
        (kind, n, r)
        for kind in LieKind
        for n in range(MIN_RANK[kind], max_n + 1)
        for r in range(1, n + 1)
    ]


def contexts(max_n: int) -> Iterator[CosetContext]:
    for kind, n, r in context_keys(max_n):
        yield CosetContext(root_system(kind, n), r)


class _Tally:
    def __init__(self, name: str) -> None:
        self.result = CheckResult(name=name)

    def record(self, ok: bool, witness: Callable[[], str]) -> None:
        if ok:
            self.result.passed += 1
            return
        self.result.failed += 1
        if self.result.witness is None:
            self.result.witness = witness()


def _run(name: str, body: Callable[[_Tally], None]) -> CheckResult:
    tally = _Tally(name)
    try:
        body(tally)
    except RichardsonError as exc:
        logger.exception("verify.step.error: %s %s", name, exc)
        tally.record(False, lambda: str(exc))
    return tally.result


def _merge(name: str, parts: Iterable[CheckResult]) -> CheckResult:
    merged = CheckResult(name=name)
    for part in parts:
        merged.passed += part.passed
        merged.failed += part.failed
        if merged.witness is None:
            merged.witness = part.witness
    return merged


def _order_groups(max_n: int) -> list[RootSystem]:
    return [root_system(kind, n) for kind, n in ORDER_GROUPS if n <= max(max_n, MIN_RANK[kind])]


def check_lengths(tally: _Tally, groups: Iterable[RootSystem], budget: int) -> None:
    for rs in groups:
        for sigma, dist in oracle.enumerate_weyl(rs, budget).items():
            tally.record(length(rs, sigma) == dist, lambda: f"{rs} {sigma}: length {length(rs, sigma)} != {dist}")


def check_order(tally: _Tally, groups: Iterable[RootSystem], budget: int) -> None:
    for rs in groups:
        elements = sorted(oracle.enumerate_weyl(rs, budget))
        for a in elements:
            for b in elements:
                ok = leq(rs, a, b) == oracle.brute_bruhat(rs, a, b)
                tally.record(ok, lambda: f"{rs} {a} <= {b}")


def check_extremal(tally: _Tally, ctx: CosetContext, budget: int) -> None:
    closed_v = sorted(e.element for e in maximal_v(ctx.rs, ctx.r))
    closed_w = sorted(e.element for e in minimal_w(ctx.rs, ctx.r))
    brute_v = oracle.brute_extremal_v(ctx, budget)
    brute_w = oracle.brute_extremal_w(ctx, budget)
    tally.record(closed_v == brute_v, lambda: f"{ctx} v: {closed_v} != {brute_v}")
    tally.record(closed_w == brute_w, lambda: f"{ctx} w: {closed_w} != {brute_w}")


def check_covers(tally: _Tally, ctx: CosetContext, budget: int) -> None:
    for entry in maximal_v(ctx.rs, ctx.r):
        predicted = predicted_covers(ctx.rs, ctx.r, entry)
        brute = oracle.brute_min_rep_covers(ctx, entry.element, budget)
        tally.record(predicted == brute, lambda: f"{ctx} {entry.label}: {predicted} != {brute}")


def check_nonemptiness(tally: _Tally, ctx: CosetContext) -> None:
    for a in maximal_v(ctx.rs, ctx.r):
        for b in minimal_w(ctx.rs, ctx.r):
            table = extremal_richardson_nonempty(ctx, a.label, b.label)
            actual = leq(ctx.rs, a.element, b.element)
            tally.record(table == actual, lambda: f"{ctx} ({a.label}, {b.label}): table {table}, order {actual}")


def _agree(tally: _Tally, ctx: CosetContext, v: SignedPerm, w: SignedPerm, k_max: int, budget: int) -> None:
    verdict = semistable_nonempty(make_pair(ctx.rs, ctx.r, v, w))
    brute = oracle.brute_semistable(ctx, v, w, k_max, budget)
    tally.record(
        verdict.semistable == brute.found,
        lambda: f"{ctx} ({v}, {w}): closed form {verdict.semistable}, oracle {brute.found}",
    )


def check_semistability(
    tally: _Tally, ctx: CosetContext, k_max: int, samples: int, rng: random.Random, budget: int
) -> None:
    rs = ctx.rs
    for a in maximal_v(rs, ctx.r):
        for b in minimal_w(rs, ctx.r):
            if leq(rs, a.element, b.element):
                _agree(tally, ctx, a.element, b.element, k_max, budget)
    if ctx.n > RANDOM_PAIR_MAX_N:
        return
    reps = min_reps(ctx)
    comparable = [(v, w) for v in reps for w in reps if leq(rs, v, w)]
    for v, w in rng.sample(comparable, min(samples, len(comparable))):
        _agree(tally, ctx, v, w, k_max, budget)


def check_counterexamples(tally: _Tally, k_max: int, budget: int) -> None:
    for verdict in counterexamples():
        pair = verdict.pair
        brute = oracle.brute_semistable(pair.ctx, pair.v, pair.w, k_max, budget)
        ok = verdict.richardson_nonempty and not verdict.semistable and not brute.found
        tally.record(ok, lambda: f"{pair.ctx} ({pair.v}, {pair.w})")


def check_context(key: ContextKey, k_max: int, samples: int, seed: int, budget: int) -> list[CheckResult]:
    """The per-context checks for one (type, n, r), in CONTEXT_CHECKS order."""
    kind, n, r = key
    ctx = CosetContext(root_system(kind, n), r)
    # str seeds hash the same in every process
    rng = random.Random(f"{seed}/{kind.value}{n}/{r}")
    bodies: dict[str, Callable[[_Tally], None]] = {
        "extremal_completeness": lambda t: check_extremal(t, ctx, budget),
        "covers": lambda t: check_covers(t, ctx, budget),
        "richardson_nonemptiness": lambda t: check_nonemptiness(t, ctx),
        "semistability": lambda t: check_semistability(t, ctx, k_max, samples, rng, budget),
    }
    results = [_run(name, bodies[name]) for name in CONTEXT_CHECKS]
    logger.debug("verify.context.done: %s", ctx)
    return results


def _sweep(
    keys: list[ContextKey], k_max: int, samples: int, seed: int, budget: int, workers: int
) -> list[list[CheckResult]]:
    work = partial(check_context, k_max=k_max, samples=samples, seed=seed, budget=budget)
    if workers == 1 or len(keys) < 2:
        return [work(key) for key in keys]
    spawn = multiprocessing.get_context("spawn")
    with ProcessPoolExecutor(max_workers=workers or None, mp_context=spawn) as pool:
        return list(pool.map(work, keys))


def run_verification(
    max_n: int,
    k_max: int,
    samples: int,
    seed: int,
    budget: int = oracle.DEFAULT_BUDGET,
    workers: int = 1,
) -> VerifyReport:
    """Run every check; workers=0 uses one process per CPU."""
    if workers < 0:
        raise ValueError("workers must be >= 0")
    groups = _order_groups(max_n)
    keys = context_keys(max_n)
    logger.info("verify.start: max_n=%s contexts=%s workers=%s", max_n, len(keys), workers)

    report = VerifyReport()
    report.checks.append(_run("lengths_vs_bfs", lambda t: check_lengths(t, groups, budget)))
    report.checks.append(_run("leq_vs_subword", lambda t: check_order(t, groups, budget)))
    per_context = _sweep(keys, k_max, samples, seed, budget, workers)
    for index, name in enumerate(CONTEXT_CHECKS):
        report.checks.append(_merge(name, (results[index] for results in per_context)))
    report.checks.append(_run("counterexamples", lambda t: check_counterexamples(t, k_max, budget)))
    for result in report.checks:
        logger.info("verify.check: %s passed=%s failed=%s", result.name, result.passed, result.failed)
    return report
