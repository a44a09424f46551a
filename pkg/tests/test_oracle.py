import pytest

from app.core.errors import BudgetExceededError
from app.services.bruhat import CosetContext, weight_of
from app.services.oracle import (
    brute_bruhat,
    brute_covers,
    brute_extremal_v,
    brute_extremal_w,
    brute_min_rep_covers,
    brute_semistable,
    enumerate_weyl,
    search_zero_sum_chain,
)
from app.services.rootsys import Weight, root_system
from app.services.weyl import SignedPerm, generator, identity


def _mk_ctx(kind: str, n: int, r: int) -> CosetContext:
    return CosetContext(root_system(kind, n), r)


def test_group_sizes():
    assert len(enumerate_weyl(root_system("B", 2))) == 8
    assert len(enumerate_weyl(root_system("C", 3))) == 48
    assert len(enumerate_weyl(root_system("D", 4))) == 192


def test_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_weyl(root_system("B", 3), budget=10)


def test_subword_order_trivia():
    rs = root_system("C", 3)
    for tau in enumerate_weyl(rs):
        assert brute_bruhat(rs, tau, tau)
        assert brute_bruhat(rs, identity(3), tau)


def test_identity_covers_in_quotient():
    for r in range(1, 5):
        ctx = _mk_ctx("D", 4, r)
        assert brute_min_rep_covers(ctx, identity(4)) == [generator(ctx.rs, r)]


def test_brute_extremal_b5_r4():
    ctx = _mk_ctx("B", 5, 4)
    assert brute_extremal_v(ctx) == sorted(
        SignedPerm(w) for w in [(3, 4, 5, -1, 2), (1, 4, 5, -2, 3), (1, 2, 5, -3, 4), (1, 2, 3, -4, 5)]
    )


def test_brute_extremal_rank_n_is_a_singleton():
    ctx = _mk_ctx("C", 3, 3)
    assert brute_extremal_v(ctx) == [SignedPerm((2, 3, 1))]
    assert brute_extremal_w(ctx) == [SignedPerm((2, 3, -1))]


def test_brute_semistable_two_chain():
    ctx = _mk_ctx("B", 4, 3)
    v, w = SignedPerm((1, 2, -3, 4)), SignedPerm((1, 2, -4, 3))
    result = brute_semistable(ctx, v, w, k_max=6)
    assert result.found and not result.bounded
    assert len(result.certificate) == 2


def test_brute_semistable_counterexample_is_bounded_no():
    ctx = _mk_ctx("B", 4, 3)
    result = brute_semistable(ctx, SignedPerm((1, 2, -3, 4)), SignedPerm((1, 4, -3, 2)), k_max=6)
    assert not result.found
    assert result.bounded
    assert result.certificate is None


def test_zero_sum_search_allows_repeats():
    a, b = SignedPerm((1, 2)), SignedPerm((2, 1))
    weights = [Weight.of([1, 0]), Weight.of(["-1/2", 0])]
    chain = search_zero_sum_chain([a, b], weights, lambda x, y: x == a and y == b, k_max=3)
    assert chain == (a, b, b)
    assert search_zero_sum_chain([a, b], weights, lambda x, y: x == a and y == b, k_max=2) is None


def test_oracle_weights_are_exact():
    ctx = _mk_ctx("B", 4, 3)
    assert weight_of(ctx, SignedPerm((1, 2, -3, 4))) == Weight.of([0, 0, 0, 1])


def test_identity_covers_in_w_are_the_generators():
    rs = root_system("B", 3)
    assert brute_covers(rs, identity(3)) == sorted(generator(rs, i) for i in range(1, 4))


def test_longest_element_has_no_covers():
    rs = root_system("D", 4)
    group = enumerate_weyl(rs)
    top = max(group, key=group.__getitem__)
    assert brute_covers(rs, top) == []
