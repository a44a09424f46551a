"""Closed-form extremal elements of W^{I_r}.

maximal_v lists the Bruhat-maximal v with v(omega_r) >= 0, minimal_w the
Bruhat-minimal w with w(omega_r) <= 0. Each family is described by its orbit
point y = v(omega_r) in epsilon coordinates; the window is assembled from y
block by block (zero coordinates ascending, then the signed support
ascending). That window must equal the printed block window of the family
and carry the family's closed-form weight.

Index tuples i = (i_1, ..., i_m) have gaps >= 2, and
S(i) = sum_k (e_{i_k} - e_{i_k - 1}) is the epsilon form of sum_k alpha_{i_k}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..core.errors import ConstructionError
from ..schemas.common import ClassificationRow, ExtremalEntryRecord, Family, LieKind, Side
from .bruhat import CosetContext, coset_min, is_min_rep, orbit_point, weight_of
from .rootsys import (
    EpsVector,
    RootSystem,
    Weight,
    is_nonneg,
    is_nonpos,
)
from .weyl import (
    SignedPerm,
    compose,
    from_word,
    reflection,
)


logger = logging.getLogger(__name__)

FAMILY_ORDER = list(Family)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IndexTuple:
    entries: tuple[int, ...]
    lo: int
    hi: int

    def __post_init__(self) -> None:
        values = self.entries
        if any(not self.lo <= v <= self.hi for v in values):
            raise ValueError(f"{values} leaves [{self.lo}, {self.hi}]")
        if any(b - a < 2 for a, b in zip(values, values[1:])):
            raise ValueError(f"{values} has a gap smaller than 2")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class ExtremalLabel:
    family: Family
    entries: tuple[int, ...] = ()

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return FAMILY_ORDER.index(self.family), self.entries

    def __str__(self) -> str:
        if not self.entries:
            return self.family.value
        return f"{self.family.value}({','.join(str(i) for i in self.entries)})"


@dataclass(frozen=True)
class ExtremalEntry:
    label: ExtremalLabel
    element: SignedPerm
    weight: Weight
    side: Side
    word: tuple[int, ...] | None = field(default=None, compare=False)

    def to_record(self, ctx: CosetContext) -> ExtremalEntryRecord:
        return ExtremalEntryRecord(
            type=ctx.rs.kind,
            n=ctx.n,
            r=ctx.r,
            family=self.label.family,
            entries=list(self.label.entries),
            window=list(self.element.window),
            weight_root_basis=self.weight.as_strings(),
        )


def enumerate_index_tuples(m: int, s: int, t: int) -> list[IndexTuple]:
    """J_{m,[s,t]} in lexicographic order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out: list[IndexTuple] = []

    def extend(prefix: list[int], start: int) -> None:
        if len(prefix) == m:
            out.append(IndexTuple(tuple(prefix), s, t))
            return
        for value in range(start, t + 1):
            extend(prefix + [value], value + 2)

    extend([], s)
    return out


# ---------------------------------------------------------------------------
# Orbit points and windows
# ---------------------------------------------------------------------------


def _vector(n: int, terms: dict[int, int]) -> list[Fraction]:
    vec = [Fraction(0)] * n
    for p, c in terms.items():
        vec[p - 1] += c
    return vec


def _tuple_part(n: int, entries: Sequence[int], sign: int = 1) -> list[Fraction]:
    vec = [Fraction(0)] * n
    for i in entries:
        vec[i - 1] += sign
        vec[i - 2] -= sign
    return vec


def _add(*vectors: Sequence[Fraction]) -> EpsVector:
    return tuple(sum(parts, Fraction(0)) for parts in zip(*vectors))


def _signed_support(y: Sequence[Fraction]) -> list[int]:
    return sorted(p if c > 0 else -p for p, c in enumerate(y, start=1) if c)


def window_from_orbit_point(ctx: CosetContext, y: Sequence[Fraction]) -> SignedPerm:
    """Assemble the minimal representative carrying omega_r to y."""
    kind, n, r = ctx.rs.kind, ctx.n, ctx.r
    if kind is LieKind.D and r == 2:
        return _rank_two_window(y)
    zeros = [p for p, c in enumerate(y, start=1) if c == 0]
    window = zeros + _signed_support(y)
    if len(window) != n or len(zeros) != (0 if r == 1 else r - 1):
        raise ConstructionError(f"{[str(c) for c in y]} is not an orbit point of omega_{r}")
    if kind is LieKind.D and zeros and sum(1 for v in window if v < 0) % 2:
        window[0] = -window[0]
    return SignedPerm(tuple(window))


def _rank_two_window(y: Sequence[Fraction]) -> SignedPerm:
    # omega_2 = (-1/2, 1/2, ..., 1/2): the first slot carries the negative half.
    for p, c in enumerate(y, start=1):
        first = -p if c > 0 else p
        rest = [v for v in _signed_support(y) if abs(v) != p]
        negatives = sum(1 for v in (first, *rest) if v < 0)
        if first + rest[0] > 0 and negatives % 2 == 0:
            return SignedPerm((first, *rest))
    raise ConstructionError(f"no rank-two window for {[str(c) for c in y]}")


def _literal_window(n: int, negated: set[int], first: int | None = None) -> SignedPerm:
    """(first, then the rest ascending with the values in `negated` made negative)."""
    rest = sorted(-a if a in negated else a for a in range(1, n + 1) if a != first)
    if first is None:
        return SignedPerm(tuple(rest))
    return SignedPerm((first, *rest))


def _led_by_min(free: Sequence[int], negate: bool, tail: Sequence[int]) -> SignedPerm:
    t, *rest = free
    return SignedPerm((-t if negate else t, *rest, *tail))


def printed_window(ctx: CosetContext, label: ExtremalLabel, side: Side) -> SignedPerm:
    """The block window of an interior or r = n label, written out directly.

    v reads (free ascending, -i', middle, i) and w reads (free ascending, -i,
    middle, i'), with -i' listed as -i'_m, ..., -i'_1. In type D the first
    free slot is negated when the parity of m calls for it.
    """
    n, kind, family = ctx.n, ctx.rs.kind, label.family
    on_v = side is Side.v
    if family is Family.rank_n:
        if kind is LieKind.D:
            return SignedPerm((1, *range(3, n + 1), 2) if on_v else (-1, *range(3, n + 1), -2))
        return SignedPerm((*range(2, n + 1), 1 if on_v else -1))
    if family in (Family.rank_one, Family.rank_two):
        raise ConstructionError(f"{label} has no block window")

    entries = label.entries
    shifted = tuple(i - 1 for i in entries)
    used = {*entries, *shifted}
    low, high = (shifted, entries) if on_v else (entries, shifted)

    def free(lo: int) -> list[int]:
        return sorted(set(range(lo, n + 1)) - used)

    def core(*middle: int) -> tuple[int, ...]:
        return (*(-a for a in reversed(low)), *middle, *high)

    m, odd = _parity_half(ctx)
    m_odd = m % 2 == 1
    if kind in (LieKind.B, LieKind.C):
        if not odd:
            return SignedPerm((*free(1), *core()))
        return SignedPerm((*free(2), *core(1 if on_v else -1)))

    if not odd:
        if family is Family.plain:
            return SignedPerm((-1 if m_odd else 1, *free(2), *core()))
        middle, negate = {
            (Family.one_prefixed, Side.v): ((1, 2), not m_odd),
            (Family.one_prefixed, Side.w): ((-2, -1), not m_odd),
            (Family.two_prefixed, Side.v): ((-1, 2), m_odd),
            (Family.two_prefixed, Side.w): ((-2, 1), m_odd),
        }[family, side]
        return _led_by_min(free(3), negate, core(*middle))

    if family is Family.plain:
        if on_v:
            return SignedPerm((-1 if m_odd else 1, *free(3), *core(2)))
        return SignedPerm((1 if m_odd else -1, *free(3), *core(-2)))
    # the lead is the smallest free value of [4, n]; it is 4 unless i_1 = 5
    middle, negate = {
        (Family.suffix_one, Side.v): ((1, 2, 3), not m_odd),
        (Family.suffix_one, Side.w): ((-3, -2, -1), m_odd),
        (Family.suffix_two, Side.v): ((-1, 2, 3), m_odd),
        (Family.suffix_two, Side.w): ((-3, -2, 1), not m_odd),
    }[family, side]
    return _led_by_min(free(4), negate, core(*middle))


# ---------------------------------------------------------------------------
# Family tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Blueprint:
    label: ExtremalLabel
    y: EpsVector
    weight: Weight  # closed form, root basis
    word: tuple[int, ...] | None = None  # w = from_word(word) * v_partner


def _simple_sum(n: int, terms: dict[int, Fraction | int]) -> Weight:
    coeffs = [Fraction(0)] * n
    for i, c in terms.items():
        coeffs[i - 1] += Fraction(c)
    return Weight(tuple(coeffs))


def _with_tuple(n: int, base: dict[int, Fraction | int], entries: Sequence[int]) -> Weight:
    terms = dict(base)
    for i in entries:
        terms[i] = terms.get(i, 0) + 1
    return _simple_sum(n, terms)


def _parity_half(ctx: CosetContext) -> tuple[int, bool]:
    k = ctx.n + 1 - ctx.r
    return k // 2, k % 2 == 1


def _interior_blueprints(ctx: CosetContext) -> list[_Blueprint]:
    kind, n = ctx.rs.kind, ctx.n
    m, odd = _parity_half(ctx)
    plans: list[_Blueprint] = []
    if kind in (LieKind.B, LieKind.C):
        if not odd:
            for t in enumerate_index_tuples(m, 2, n):
                y = _add(_tuple_part(n, t.entries))
                plans.append(_Blueprint(ExtremalLabel(Family.plain, t.entries), y, _with_tuple(n, {}, t.entries), t.entries))
        else:
            first = Fraction(1) if kind is LieKind.B else HALF
            for t in enumerate_index_tuples(m, 3, n):
                y = _add(_vector(n, {1: 1}), _tuple_part(n, t.entries))
                weight = _with_tuple(n, {1: first}, t.entries)
                plans.append(_Blueprint(ExtremalLabel(Family.plain, t.entries), y, weight, (1, *t.entries)))
        return plans

    if not odd:
        for t in enumerate_index_tuples(m, 3, n):
            y = _add(_tuple_part(n, t.entries))
            plans.append(_Blueprint(ExtremalLabel(Family.plain, t.entries), y, _with_tuple(n, {}, t.entries), t.entries))
        for t in enumerate_index_tuples(m - 1, 4, n):
            tail = _tuple_part(n, t.entries)
            plans.append(_Blueprint(
                ExtremalLabel(Family.one_prefixed, t.entries),
                _add(_vector(n, {1: 1, 2: 1}), tail),
                _with_tuple(n, {1: 1}, t.entries),
                (1, *t.entries),
            ))
            plans.append(_Blueprint(
                ExtremalLabel(Family.two_prefixed, t.entries),
                _add(_vector(n, {1: -1, 2: 1}), tail),
                _with_tuple(n, {2: 1}, t.entries),
                (2, *t.entries),
            ))
        return plans

    for t in enumerate_index_tuples(m, 4, n):
        plans.append(_Blueprint(
            ExtremalLabel(Family.plain, t.entries),
            _add(_vector(n, {2: 1}), _tuple_part(n, t.entries)),
            _with_tuple(n, {1: HALF, 2: HALF}, t.entries),
            (1, 2, *t.entries),
        ))
    for t in enumerate_index_tuples(m - 1, 5, n):
        tail = _tuple_part(n, t.entries)
        # w_{i,1} = s1 s3 s2 s_i v_{i,2} and w_{i,2} = s2 s3 s1 s_i v_{i,1}
        plans.append(_Blueprint(
            ExtremalLabel(Family.suffix_one, t.entries),
            _add(_vector(n, {1: 1, 2: 1, 3: 1}), tail),
            _with_tuple(n, {1: Fraction(3, 2), 2: HALF, 3: 1}, t.entries),
            (1, 3, 2, *t.entries),
        ))
        plans.append(_Blueprint(
            ExtremalLabel(Family.suffix_two, t.entries),
            _add(_vector(n, {1: -1, 2: 1, 3: 1}), tail),
            _with_tuple(n, {1: HALF, 2: Fraction(3, 2), 3: 1}, t.entries),
            (2, 3, 1, *t.entries),
        ))
    return plans


def _rank_n_blueprint(ctx: CosetContext) -> _Blueprint:
    n = ctx.n
    if ctx.rs.kind is LieKind.D:
        return _Blueprint(ExtremalLabel(Family.rank_n), _add(_vector(n, {2: 1})), _simple_sum(n, {1: HALF, 2: HALF}), (1, 2))
    first = Fraction(1) if ctx.rs.kind is LieKind.B else HALF
    return _Blueprint(ExtremalLabel(Family.rank_n), _add(_vector(n, {1: 1})), _simple_sum(n, {1: first}), (1,))


def _odds(lo: int, hi: int) -> set[int]:
    return {a for a in range(lo, hi + 1) if a % 2}


def _evens(lo: int, hi: int) -> set[int]:
    return {a for a in range(lo, hi + 1) if a % 2 == 0}


def _small_rank_windows(ctx: CosetContext) -> tuple[SignedPerm, SignedPerm]:
    """The printed windows of the extremal pair for r = 1 (all types) and r = 2 (type D)."""
    n, kind, r = ctx.n, ctx.rs.kind, ctx.r
    if kind in (LieKind.B, LieKind.C):
        if n % 2 == 0:
            return _literal_window(n, _odds(1, n)), _literal_window(n, _evens(1, n))
        return _literal_window(n, _evens(1, n)), _literal_window(n, _odds(1, n))
    residue = n % 4
    if r == 1:
        v_neg = {
            0: _odds(1, n - 1),
            2: _odds(3, n - 1),
            1: _evens(4, n - 1) | {1},
            3: _evens(4, n - 1),
        }[residue]
        w_neg = {
            0: _evens(2, n),
            2: _evens(2, n) | {1},
            1: _odds(1, n) | {2},
            3: _odds(3, n) | {2},
        }[residue]
        return _literal_window(n, v_neg), _literal_window(n, w_neg)
    v_neg = {
        0: _odds(3, n - 3),
        2: _odds(1, n - 3),
        1: _evens(4, n - 3),
        3: _evens(4, n - 3) | {1},
    }[residue]
    w_neg = {
        0: _evens(2, n - 2) | {1},
        2: _evens(2, n - 2),
        1: _odds(3, n - 2) | {2},
        3: _odds(3, n - 2) | {1, 2},
    }[residue]
    return _literal_window(n, v_neg, first=n - 1), _literal_window(n, w_neg, first=n)


def four_omega_weight(ctx: CosetContext) -> Weight:
    """The printed value of v(4 omega_r) for D_n, r in {1, 2}."""
    n, r = ctx.n, ctx.r
    residue = n % 4
    terms: dict[int, Fraction | int] = {}
    if n % 2 == 0:
        lead = 2 if (r == 1) == (residue == 0) else 1
        terms[lead] = 2
        for i in range(2, n // 2 + 1):
            terms[2 * i] = terms.get(2 * i, 0) + 2
    else:
        heavy = 2 if (r == 1) == (residue == 1) else 1
        terms = {1: 1, 2: 1, 3: 2}
        terms[heavy] = 3
        for i in range(2, (n - 1) // 2 + 1):
            terms[2 * i + 1] = terms.get(2 * i + 1, 0) + 2
    return _simple_sum(n, terms)


def _cover_ks(ctx: CosetContext) -> list[int]:
    n, kind, r = ctx.n, ctx.rs.kind, ctx.r
    if kind in (LieKind.B, LieKind.C):
        return sorted(_evens(2, n)) if n % 2 == 0 else sorted(_odds(1, n))
    residue = n % 4
    if n % 2 == 0:
        lead = 2 if (r == 1) == (residue == 0) else 1
        return [lead, *range(4, n + 1, 2)]
    lead = 2 if (r == 1) == (residue == 1) else 1
    return [lead, *range(5, n + 1, 2)]


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def _validate(ctx: CosetContext, label: ExtremalLabel, element: SignedPerm, weight: Weight) -> None:
    if not is_min_rep(ctx, element):
        raise ConstructionError(f"{ctx} {label}: {element} is not a minimal representative")
    actual = weight_of(ctx, element)
    if actual != weight:
        raise ConstructionError(f"{ctx} {label}: {element} has weight {actual}, expected {weight}")


def _check_printed(ctx: CosetContext, label: ExtremalLabel, side: Side, element: SignedPerm) -> None:
    printed = printed_window(ctx, label, side)
    if printed != element:
        raise ConstructionError(f"{ctx} {label}: printed {side.value} window {printed} != orbit-point window {element}")


@lru_cache(maxsize=None)
def _build(rs: RootSystem, r: int) -> tuple[tuple[ExtremalEntry, ...], tuple[ExtremalEntry, ...]]:
    ctx = CosetContext(rs, r)
    n, kind = ctx.n, rs.kind
    v_entries: list[ExtremalEntry] = []
    w_entries: list[ExtremalEntry] = []

    small_rank = r == 1 or (kind is LieKind.D and r == 2)
    if small_rank:
        family = Family.rank_one if r == 1 else Family.rank_two
        label = ExtremalLabel(family)
        v, w = _small_rank_windows(ctx)
        v_weight, w_weight = weight_of(ctx, v), weight_of(ctx, w)
        for element, weight, check in ((v, v_weight, is_nonneg), (w, w_weight, is_nonpos)):
            if not is_min_rep(ctx, element) or not check(weight):
                raise ConstructionError(f"{ctx}: printed window {element} fails its sign condition")
            if window_from_orbit_point(ctx, orbit_point(ctx, element)) != element:
                raise ConstructionError(f"{ctx}: printed window {element} disagrees with its orbit point")
        if kind is LieKind.D and v_weight.scale(4) != four_omega_weight(ctx):
            raise ConstructionError(f"{ctx}: 4*v(omega_r) = {v_weight.scale(4)}, printed {four_omega_weight(ctx)}")
        v_entries.append(ExtremalEntry(label, v, v_weight, Side.v))
        w_entries.append(ExtremalEntry(label, w, w_weight, Side.w))
    else:
        plans = [_rank_n_blueprint(ctx)] if r == n else _interior_blueprints(ctx)
        for plan in plans:
            v = window_from_orbit_point(ctx, plan.y)
            _check_printed(ctx, plan.label, Side.v, v)
            _validate(ctx, plan.label, v, plan.weight)
            v_entries.append(ExtremalEntry(plan.label, v, plan.weight, Side.v))
        by_label = {e.label: e for e in v_entries}
        for plan in plans:
            w = window_from_orbit_point(ctx, tuple(-c for c in plan.y))
            _check_printed(ctx, plan.label, Side.w, w)
            _validate(ctx, plan.label, w, -plan.weight)
            if plan.word is not None:
                partner = by_label[matched_partner(ctx, plan.label)]
                if compose(from_word(rs, plan.word), partner.element) != w:
                    raise ConstructionError(f"{ctx} {plan.label}: reflection word {plan.word} does not reach {w}")
            w_entries.append(ExtremalEntry(plan.label, w, -plan.weight, Side.w, plan.word))

    v_entries.sort(key=lambda e: e.label.sort_key)
    w_entries.sort(key=lambda e: e.label.sort_key)
    logger.debug("classify.built: %s v=%s w=%s", ctx, len(v_entries), len(w_entries))
    return tuple(v_entries), tuple(w_entries)


def maximal_v(rs: RootSystem, r: int) -> list[ExtremalEntry]:
    return list(_build(rs, r)[0])


def minimal_w(rs: RootSystem, r: int) -> list[ExtremalEntry]:
    return list(_build(rs, r)[1])


def matched_partner(ctx: CosetContext, label: ExtremalLabel) -> ExtremalLabel:
    """The label on the other side of the matched (semistable) pair."""
    if label.family is Family.suffix_one:
        return ExtremalLabel(Family.suffix_two, label.entries)
    if label.family is Family.suffix_two:
        return ExtremalLabel(Family.suffix_one, label.entries)
    return label


def entry_for(entries: Sequence[ExtremalEntry], label: ExtremalLabel) -> ExtremalEntry:
    for entry in entries:
        if entry.label == label:
            return entry
    raise KeyError(str(label))


def label_of(rs: RootSystem, r: int, element: SignedPerm) -> tuple[Side, ExtremalLabel] | None:
    """(side, label) if element is one of the extremal windows."""
    v_entries, w_entries = _build(rs, r)
    for entry in (*v_entries, *w_entries):
        if entry.element == element:
            return entry.side, entry.label
    return None


def _root(n: int, indices: Sequence[int]) -> Weight:
    return _simple_sum(n, {i: 1 for i in indices})


def predicted_cover_roots(rs: RootSystem, r: int, entry: ExtremalEntry) -> list[Weight]:
    ctx = CosetContext(rs, r)
    if entry.side is not Side.v or entry not in maximal_v(rs, r):
        raise ConstructionError(f"{entry.element} is not an extremal v for {ctx}")
    n, kind, family = ctx.n, rs.kind, entry.label.family
    if family in (Family.rank_one, Family.rank_two):
        return [_root(n, [k]) for k in _cover_ks(ctx)]
    if family is Family.rank_n:
        return [_root(n, [1]), _root(n, [2])] if kind is LieKind.D else [_root(n, [1])]

    entries = entry.label.entries
    roots: list[Weight] = []
    if kind in (LieKind.B, LieKind.C):
        odd = _parity_half(ctx)[1]
        lead: list[list[int]] = [[1]] if odd else []
        left_floor = 4 if odd else 3
        extra: list[list[int]] = []
    elif family is Family.plain:
        odd = _parity_half(ctx)[1]
        if odd:
            lead, left_floor, extra = [[1], [2]], 5, []
        else:
            lead, left_floor = [], 3
            extra = [[1, 3]] if entries and entries[0] == 3 else []
    else:
        anchor = 1 if family in (Family.one_prefixed, Family.suffix_one) else 2
        short_tail = family in (Family.one_prefixed, Family.two_prefixed)
        left_floor = 5 if short_tail else 6
        lead = [[anchor]]
        reach = [anchor, 3] if short_tail else [anchor, 3, 4]
        extra = [reach] if not entries or entries[0] >= left_floor else []

    roots.extend(_root(n, idx) for idx in lead)
    m = len(entries)
    for k, i in enumerate(entries):
        roots.append(_root(n, [i]))
        if (k < m - 1 and entries[k + 1] - i >= 3) or (k == m - 1 and i < n):
            roots.append(_root(n, [i, i + 1]))
        if (k > 0 and i - entries[k - 1] >= 3) or (k == 0 and i >= left_floor):
            roots.append(_root(n, [i - 1, i]))
    roots.extend(_root(n, idx) for idx in extra)
    return roots


def predicted_covers(rs: RootSystem, r: int, entry: ExtremalEntry) -> list[SignedPerm]:
    """Covers of an extremal v inside W^{I_r}, from the closed-form root list."""
    ctx = CosetContext(rs, r)
    found = {
        coset_min(ctx, compose(reflection(rs, beta), entry.element))
        for beta in predicted_cover_roots(rs, r, entry)
    }
    return sorted(found)


def classification_rows(rs: RootSystem, r: int) -> list[ClassificationRow]:
    """One row per matched extremal pair, in label order."""
    ctx = CosetContext(rs, r)
    w_entries = minimal_w(rs, r)
    rows = []
    for v in maximal_v(rs, r):
        w = entry_for(w_entries, matched_partner(ctx, v.label))
        rows.append(ClassificationRow(
            label=str(v.label),
            v_window=list(v.element.window),
            v_weight=v.weight.as_strings(),
            w_weight=w.weight.as_strings(),
            w_window=list(w.element.window),
        ))
    return rows
