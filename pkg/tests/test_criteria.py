import random

import pytest

from app.core.errors import NotComparableError, NotMinimalRepresentativeError
from app.schemas.common import Family, Reason
from app.services.bruhat import CosetContext, coset_min, leq, min_reps, weight_of
from app.services.classify import ExtremalLabel, entry_for, maximal_v, minimal_w
from app.services.criteria import (
    build_certificate,
    check_pair,
    counterexamples,
    extremal_richardson_nonempty,
    make_pair,
    necessary_condition,
    semistable_nonempty,
)
from app.services.oracle import brute_semistable
from app.services.rootsys import root_system
from app.services.verification import contexts
from app.services.weyl import SignedPerm, compose, from_word, identity


def _mk_pair(kind: str, n: int, r: int, v, w):
    return make_pair(root_system(kind, n), r, SignedPerm(tuple(v)), SignedPerm(tuple(w)))


def _mk_label(family: Family, *entries: int) -> ExtremalLabel:
    return ExtremalLabel(family, tuple(entries))


def test_counterexamples_have_nonempty_richardson_but_no_semistable_points():
    verdicts = counterexamples()
    assert len(verdicts) == 3
    for verdict in verdicts:
        assert verdict.richardson_nonempty
        assert not verdict.semistable
        assert verdict.reason is Reason.no_zero_sum_chain
        assert necessary_condition(verdict.pair)


def test_counterexamples_survive_the_oracle():
    for verdict in counterexamples():
        pair = verdict.pair
        result = brute_semistable(pair.ctx, pair.v, pair.w, k_max=6)
        assert not result.found and result.bounded


def test_necessary_condition_fails_at_identity():
    pair = _mk_pair("B", 4, 2, identity(4).window, identity(4).window)
    assert not necessary_condition(pair)


def test_b5_matched_pair_has_two_chain():
    verdict = semistable_nonempty(_mk_pair("B", 5, 4, (1, 4, 5, -2, 3), (1, 4, 5, -3, 2)))
    assert verdict.semistable
    assert verdict.certificate.chain == (SignedPerm((1, 4, 5, -2, 3)), SignedPerm((1, 4, 5, -3, 2)))
    assert verdict.certificate.total.is_zero()
    assert not verdict.derived_rule


def test_d5_cross_pair_has_four_chain():
    verdict = semistable_nonempty(_mk_pair("D", 5, 3, (-4, 5, -1, 2, 3), (-4, 5, -3, -2, -1)))
    assert verdict.semistable
    chain = verdict.certificate.chain
    assert len(chain) == 4
    assert chain[0] == SignedPerm((-4, 5, -1, 2, 3))
    assert chain[-1] == SignedPerm((-4, 5, -3, -2, -1))
    assert verdict.certificate.total.is_zero()
    assert verdict.matched == _mk_label(Family.suffix_two)


def test_equal_endpoints_cannot_cancel():
    record = check_pair(root_system("B", 5), 4, SignedPerm((3, 4, 5, -1, 2)), SignedPerm((3, 4, 5, -1, 2)))
    assert record.semistable == "no"
    assert record.reason is Reason.necessary_fails


def test_incomparable_pair():
    rs = root_system("B", 5)
    v, w = SignedPerm((3, 4, 5, -1, 2)), SignedPerm((1, 2, 5, -4, 3))
    record = check_pair(rs, 4, v, w)
    assert not record.richardson_nonempty
    assert record.reason is Reason.empty_richardson
    with pytest.raises(NotComparableError):
        semistable_nonempty(make_pair(rs, 4, v, w))


def test_non_minimal_input_suggests_coset_minimum():
    with pytest.raises(NotMinimalRepresentativeError) as info:
        _mk_pair("B", 5, 4, (4, 3, 5, -1, 2), (3, 4, 5, -2, 1))
    assert info.value.suggestion == SignedPerm((3, 4, 5, -1, 2))


def test_table_examples():
    b5 = CosetContext(root_system("B", 5), 4)
    assert extremal_richardson_nonempty(b5, _mk_label(Family.plain, 2), _mk_label(Family.plain, 3))
    assert not extremal_richardson_nonempty(b5, _mk_label(Family.plain, 2), _mk_label(Family.plain, 4))
    d5 = CosetContext(root_system("D", 5), 3)
    assert extremal_richardson_nonempty(d5, _mk_label(Family.suffix_one), _mk_label(Family.suffix_two))
    assert not extremal_richardson_nonempty(d5, _mk_label(Family.suffix_one), _mk_label(Family.suffix_one))


def test_table_agrees_with_bruhat_order():
    for ctx in contexts(6):
        for a in maximal_v(ctx.rs, ctx.r):
            for b in minimal_w(ctx.rs, ctx.r):
                expected = leq(ctx.rs, a.element, b.element)
                assert extremal_richardson_nonempty(ctx, a.label, b.label) == expected, (
                    str(ctx),
                    str(a.label),
                    str(b.label),
                )


def test_yes_verdicts_imply_the_necessary_condition():
    for ctx in contexts(4):
        reps = min_reps(ctx)
        for v in reps:
            for w in reps:
                if not leq(ctx.rs, v, w):
                    continue
                verdict = semistable_nonempty(make_pair(ctx.rs, ctx.r, v, w))
                if verdict.semistable:
                    assert necessary_condition(verdict.pair)
                    cert = verdict.certificate
                    assert leq(ctx.rs, v, cert.chain[0]) and leq(ctx.rs, cert.chain[-1], w)
                    assert sum((weight_of(ctx, u) for u in cert.chain[1:]), weight_of(ctx, cert.chain[0])).is_zero()


def test_monotone_under_widening():
    rs = root_system("C", 4)
    ctx = CosetContext(rs, 3)
    v_star = entry_for(maximal_v(rs, 3), _mk_label(Family.plain, 3))
    w_star = entry_for(minimal_w(rs, 3), _mk_label(Family.plain, 3))
    reps = min_reps(ctx)
    for v in reps:
        if not leq(rs, v, v_star.element):
            continue
        for w in reps:
            if leq(rs, w_star.element, w):
                assert semistable_nonempty(make_pair(rs, 3, v, w)).semistable


def test_all_extremal_pairs_match_the_oracle():
    for ctx in contexts(4):
        for a in maximal_v(ctx.rs, ctx.r):
            for b in minimal_w(ctx.rs, ctx.r):
                if not leq(ctx.rs, a.element, b.element):
                    continue
                verdict = semistable_nonempty(make_pair(ctx.rs, ctx.r, a.element, b.element))
                brute = brute_semistable(ctx, a.element, b.element, k_max=6)
                assert verdict.semistable == brute.found, (str(ctx), str(a.label), str(b.label))


def test_random_pairs_match_the_oracle():
    rng = random.Random(20240611)
    for ctx in contexts(4):
        reps = min_reps(ctx)
        comparable = [(v, w) for v in reps for w in reps if leq(ctx.rs, v, w)]
        for v, w in rng.sample(comparable, min(25, len(comparable))):
            verdict = semistable_nonempty(make_pair(ctx.rs, ctx.r, v, w))
            brute = brute_semistable(ctx, v, w, k_max=6)
            assert verdict.semistable == brute.found, (str(ctx), str(v), str(w))


@pytest.mark.parametrize("n", [5, 7, 9])
@pytest.mark.parametrize("r", [1, 2])
def test_odd_d_small_rank_certificate_is_closed_form(n, r):
    rs = root_system("D", n)
    ctx = CosetContext(rs, r)
    v_star, w_star = maximal_v(rs, r)[0], minimal_w(rs, r)[0]
    cert = build_certificate(ctx, v_star, w_star)
    flip = from_word(rs, [1, 2])
    assert cert.chain == (
        v_star.element,
        coset_min(ctx, compose(flip, v_star.element)),
        coset_min(ctx, compose(flip, w_star.element)),
        w_star.element,
    )
    assert cert.total.is_zero()


def test_d5_rank_one_verdict_matches_the_oracle():
    rs = root_system("D", 5)
    v, w = SignedPerm((-4, -1, 2, 3, 5)), SignedPerm((-5, -3, -2, -1, 4))
    verdict = semistable_nonempty(make_pair(rs, 1, v, w))
    assert verdict.semistable
    assert len(verdict.certificate.chain) == 4
    assert brute_semistable(CosetContext(rs, 1), v, w, k_max=6).found
