"""Nonemptiness and torus-semistability of Richardson varieties in G/P_r."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..core.errors import (
    ConstructionError,
    NotComparableError,
    NotMinimalRepresentativeError,
    RankMismatchError,
)
from ..schemas.common import Family, LieKind, PairRecord, Reason, VerdictRecord
from .bruhat import CosetContext, coset_min, is_min_rep, leq, weight_of
from .classify import (
    ExtremalEntry,
    ExtremalLabel,
    entry_for,
    matched_partner,
    maximal_v,
    minimal_w,
)
from .rootsys import RootSystem, Weight, is_nonneg, is_nonpos, root_system
from .weyl import SignedPerm, check_element, compose, from_word, parse_word


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RichardsonPair:
    ctx: CosetContext
    v: SignedPerm
    w: SignedPerm

    def __post_init__(self) -> None:
        for name, element in (("v", self.v), ("w", self.w)):
            check_element(self.ctx.rs, element)
            if not is_min_rep(self.ctx, element):
                raise NotMinimalRepresentativeError(
                    f"{name}={element} is not a minimal representative for {self.ctx}",
                    suggestion=coset_min(self.ctx, element),
                )

    @property
    def comparable(self) -> bool:
        return leq(self.ctx.rs, self.v, self.w)

    def to_record(self) -> PairRecord:
        return PairRecord(
            type=self.ctx.rs.kind,
            n=self.ctx.n,
            r=self.ctx.r,
            v=list(self.v.window),
            w=list(self.w.window),
        )


@dataclass(frozen=True)
class ChainCertificate:
    chain: tuple[SignedPerm, ...]
    weights: tuple[Weight, ...]

    @property
    def total(self) -> Weight:
        total = self.weights[0]
        for chi in self.weights[1:]:
            total = total + chi
        return total


@dataclass(frozen=True)
class PairVerdict:
    pair: RichardsonPair
    richardson_nonempty: bool
    semistable: bool
    reason: Optional[Reason] = None
    certificate: Optional[ChainCertificate] = None
    matched: Optional[ExtremalLabel] = None
    derived_rule: bool = False

    def to_record(self) -> VerdictRecord:
        cert = self.certificate
        return VerdictRecord(
            pair=self.pair.to_record(),
            richardson_nonempty=self.richardson_nonempty,
            semistable="yes" if self.semistable else "no",
            reason=self.reason,
            certificate=[list(u.window) for u in cert.chain] if cert else None,
            certificate_weights=[chi.as_strings() for chi in cert.weights] if cert else [],
            derived_rule=self.derived_rule,
        )


def make_pair(rs: RootSystem, r: int, v: SignedPerm, w: SignedPerm) -> RichardsonPair:
    return RichardsonPair(CosetContext(rs, r), v, w)


def necessary_condition(pair: RichardsonPair) -> bool:
    ctx = pair.ctx
    return is_nonneg(weight_of(ctx, pair.v)) and is_nonpos(weight_of(ctx, pair.w))


def _close(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return len(a) == len(b) and all(abs(x - y) <= 1 for x, y in zip(a, b))


_PREFIXED = (Family.one_prefixed, Family.two_prefixed)
_SUFFIXED = (Family.suffix_one, Family.suffix_two)


def extremal_richardson_nonempty(
    ctx: CosetContext, vlabel: ExtremalLabel, wlabel: ExtremalLabel
) -> bool:
    """Whether the Richardson variety of an extremal (v, w) pair is nonempty."""
    pf, qf = vlabel.family, wlabel.family
    i, j = vlabel.entries, wlabel.entries
    if pf in (Family.rank_one, Family.rank_two, Family.rank_n) or qf in (
        Family.rank_one,
        Family.rank_two,
        Family.rank_n,
    ):
        if pf != qf:
            raise RankMismatchError(f"labels {vlabel} and {wlabel} belong to different contexts")
        return True
    if pf is Family.plain and qf is Family.plain:
        return _close(i, j)

    if ctx.rs.kind is not LieKind.D:
        raise RankMismatchError(f"{vlabel} / {wlabel} do not occur in {ctx}")
    for group, anchor in ((_PREFIXED, 3), (_SUFFIXED, 4)):
        if pf is Family.plain and qf in group:
            return bool(i) and i[0] == anchor and _close(i[1:], j)
        if qf is Family.plain and pf in group:
            return bool(j) and j[0] == anchor and _close(i, j[1:])
    if pf in _PREFIXED and qf in _PREFIXED:
        return pf == qf and _close(i, j)
    if pf in _SUFFIXED and qf in _SUFFIXED:
        return pf != qf and _close(i, j)
    raise RankMismatchError(f"labels {vlabel} and {wlabel} belong to different contexts")


def matched_pairs(ctx: CosetContext) -> list[tuple[ExtremalEntry, ExtremalEntry]]:
    """Extremal (v*, w*) pairs whose semistable locus is nonempty, by label."""
    vs, ws = maximal_v(ctx.rs, ctx.r), minimal_w(ctx.rs, ctx.r)
    return [(v, entry_for(ws, matched_partner(ctx, v.label))) for v in vs]


def validate_certificate(
    ctx: CosetContext, chain: tuple[SignedPerm, ...], low: SignedPerm, high: SignedPerm
) -> ChainCertificate:
    rs = ctx.rs
    if not chain:
        raise ConstructionError("empty certificate")
    for u in chain:
        if not is_min_rep(ctx, u):
            raise ConstructionError(f"certificate element {u} is not a minimal representative")
    if not leq(rs, low, chain[0]) or not leq(rs, chain[-1], high):
        raise ConstructionError(f"certificate leaves [{low}, {high}]")
    for a, b in zip(chain, chain[1:]):
        if not leq(rs, a, b):
            raise ConstructionError(f"certificate is not a chain at {a} -> {b}")
    cert = ChainCertificate(chain, tuple(weight_of(ctx, u) for u in chain))
    if not cert.total.is_zero():
        raise ConstructionError(f"certificate weights sum to {cert.total}")
    return cert


def _spin_flip_chain(ctx: CosetContext, v: SignedPerm, w: SignedPerm) -> tuple[SignedPerm, ...]:
    # D_n, n odd, r in {1, 2}: s1 s2 negates e1 and e2, and the four weights sum to zero
    flip = from_word(ctx.rs, [1, 2])
    return (v, coset_min(ctx, compose(flip, v)), coset_min(ctx, compose(flip, w)), w)


def build_certificate(ctx: CosetContext, v_star: ExtremalEntry, w_star: ExtremalEntry) -> ChainCertificate:
    """Zero-weight chain from v* to w* for a matched extremal pair."""
    rs = ctx.rs
    v, w = v_star.element, w_star.element
    if (v_star.weight + w_star.weight).is_zero():
        chain: tuple[SignedPerm, ...] = (v, w)
    elif v_star.label.family in _SUFFIXED:
        lead = 1 if v_star.label.family is Family.suffix_one else 2
        chain = (
            v,
            compose(from_word(rs, [lead]), v),
            compose(from_word(rs, [*v_star.label.entries, 3, lead]), v),
            w,
        )
        chain = tuple(coset_min(ctx, u) for u in chain)
    elif rs.kind is LieKind.D and ctx.n % 2 == 1 and ctx.r in (1, 2):
        chain = _spin_flip_chain(ctx, v, w)
    else:
        raise ConstructionError(f"no closed-form certificate for {v_star.label} in {ctx}")
    return validate_certificate(ctx, chain, v, w)


def semistable_nonempty(pair: RichardsonPair) -> PairVerdict:
    ctx, rs = pair.ctx, pair.ctx.rs
    v, w = pair.v, pair.w
    if not pair.comparable:
        raise NotComparableError(f"{v} is not below {w} in {ctx}")

    vs, ws = maximal_v(rs, ctx.r), minimal_w(rs, ctx.r)
    extremal = any(e.element == v for e in vs) and any(e.element == w for e in ws)
    derived = rs.kind is not LieKind.D and not extremal

    dominating = [
        (a, b)
        for a, b in matched_pairs(ctx)
        if leq(rs, v, a.element) and leq(rs, b.element, w)
    ]
    if dominating:
        a, b = min(dominating, key=lambda ab: ab[0].label.sort_key)
        certificate = build_certificate(ctx, a, b)
        logger.debug("criteria.semistable.yes: %s matched=%s", ctx, a.label)
        return PairVerdict(pair, True, True, None, certificate, a.label, derived)

    reachable_v = any(leq(rs, v, e.element) and leq(rs, e.element, w) for e in vs)
    reachable_w = any(leq(rs, v, e.element) and leq(rs, e.element, w) for e in ws)
    reason = Reason.no_zero_sum_chain if reachable_v and reachable_w else Reason.necessary_fails
    return PairVerdict(pair, True, False, reason, None, None, derived)


def check_pair(rs: RootSystem, r: int, v: SignedPerm, w: SignedPerm) -> VerdictRecord:
    pair = make_pair(rs, r, v, w)
    if not pair.comparable:
        return PairVerdict(pair, False, False, Reason.empty_richardson).to_record()
    return semistable_nonempty(pair).to_record()


def counterexamples() -> list[PairVerdict]:
    """Pairs with nonempty Richardson variety but empty semistable locus."""
    out = []
    for kind in (LieKind.B, LieKind.C):
        rs = root_system(kind, 4)
        out.append(semistable_nonempty(make_pair(rs, 3, SignedPerm((1, 2, -3, 4)), SignedPerm((1, 4, -3, 2)))))
    d4 = root_system(LieKind.D, 4)
    v = from_word(d4, parse_word("s4 s1 s2 s3"))
    w = from_word(d4, parse_word("s4 s3 s1 s2 s3"))
    out.append(semistable_nonempty(make_pair(d4, 3, v, w)))
    return out
