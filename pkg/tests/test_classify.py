import pytest

from app.core.errors import InvalidRankError
from app.schemas.common import Family, Side
from app.services.bruhat import CosetContext, is_min_rep
from app.services.classify import (
    ExtremalLabel,
    classification_rows,
    entry_for,
    enumerate_index_tuples,
    four_omega_weight,
    label_of,
    maximal_v,
    minimal_w,
    predicted_covers,
    printed_window,
    window_from_orbit_point,
)
from app.services.oracle import brute_extremal_v, brute_extremal_w, brute_min_rep_covers
from app.services.rootsys import MIN_RANK, Weight, is_nonneg, is_nonpos, root_system
from app.services.verification import contexts
from app.services.weyl import SignedPerm


def _mk_windows(entries) -> list[tuple[int, ...]]:
    return [e.element.window for e in entries]


def test_index_tuples():
    assert [t.entries for t in enumerate_index_tuples(1, 2, 5)] == [(2,), (3,), (4,), (5,)]
    assert [t.entries for t in enumerate_index_tuples(2, 2, 5)] == [(2, 4), (2, 5), (3, 5)]
    assert [t.entries for t in enumerate_index_tuples(0, 4, 5)] == [()]
    assert enumerate_index_tuples(3, 2, 5) == []


def test_b5_r4_table():
    rs = root_system("B", 5)
    assert _mk_windows(maximal_v(rs, 4)) == [
        (3, 4, 5, -1, 2),
        (1, 4, 5, -2, 3),
        (1, 2, 5, -3, 4),
        (1, 2, 3, -4, 5),
    ]
    assert _mk_windows(minimal_w(rs, 4)) == [
        (3, 4, 5, -2, 1),
        (1, 4, 5, -3, 2),
        (1, 2, 5, -4, 3),
        (1, 2, 3, -5, 4),
    ]
    weights = [e.weight for e in maximal_v(rs, 4)]
    assert weights[0] == Weight.of([0, 1, 0, 0, 0])
    assert weights[3] == Weight.of([0, 0, 0, 0, 1])
    assert all(w.weight == -v.weight for v, w in zip(maximal_v(rs, 4), minimal_w(rs, 4)))


def test_d5_r3_table():
    rs = root_system("D", 5)
    v = maximal_v(rs, 3)
    assert [str(e.label) for e in v] == ["plain(4)", "plain(5)", "suffix_one", "suffix_two"]
    assert _mk_windows(v) == [
        (-1, 5, -3, 2, 4),
        (-1, 3, -4, 2, 5),
        (4, 5, 1, 2, 3),
        (-4, 5, -1, 2, 3),
    ]
    assert v[0].weight == Weight.of(["1/2", "1/2", 0, 1, 0])
    assert v[2].weight == Weight.of(["3/2", "1/2", 1, 0, 0])
    assert v[3].weight == Weight.of(["1/2", "3/2", 1, 0, 0])
    assert _mk_windows(minimal_w(rs, 3)) == [
        (1, 5, -4, -2, 3),
        (1, 3, -5, -2, 4),
        (-4, 5, -3, -2, -1),
        (4, 5, -3, -2, 1),
    ]


def test_d5_r3_rows_pair_the_suffix_families_crosswise():
    rows = classification_rows(root_system("D", 5), 3)
    row = next(r for r in rows if r.label == "suffix_one")
    assert row.v_window == [4, 5, 1, 2, 3]
    assert row.w_window == [4, 5, -3, -2, 1]
    assert row.w_weight == ["-1/2", "-3/2", "-1", "0", "0"]


def test_rank_one_and_rank_n_windows():
    assert _mk_windows(maximal_v(root_system("B", 4), 1)) == [(-3, -1, 2, 4)]
    assert _mk_windows(maximal_v(root_system("C", 4), 4)) == [(2, 3, 4, 1)]
    assert _mk_windows(minimal_w(root_system("C", 4), 4)) == [(2, 3, 4, -1)]
    assert _mk_windows(maximal_v(root_system("D", 4), 4)) == [(1, 3, 4, 2)]
    assert _mk_windows(maximal_v(root_system("D", 4), 2)) == [(3, 1, 2, 4)]


def test_four_omega_weights_have_quarter_denominators():
    rs = root_system("D", 5)
    ctx = CosetContext(rs, 1)
    assert four_omega_weight(ctx) == Weight.of([1, 3, 2, 0, 2])
    assert maximal_v(rs, 1)[0].weight.scale(4) == four_omega_weight(ctx)


def test_every_entry_is_a_signed_min_rep():
    for ctx in contexts(6):
        for e in maximal_v(ctx.rs, ctx.r):
            assert is_min_rep(ctx, e.element) and is_nonneg(e.weight)
        for e in minimal_w(ctx.rs, ctx.r):
            assert is_min_rep(ctx, e.element) and is_nonpos(e.weight)


def test_label_of():
    rs = root_system("B", 5)
    assert label_of(rs, 4, SignedPerm((1, 4, 5, -2, 3))) == ("v", ExtremalLabel(Family.plain, (3,)))
    assert label_of(rs, 4, SignedPerm((1, 2, 3, -5, 4))) == ("w", ExtremalLabel(Family.plain, (5,)))
    assert label_of(rs, 4, SignedPerm((1, 2, 3, 4, 5))) is None


def test_window_from_orbit_point_parity_fix():
    ctx = CosetContext(root_system("D", 5), 3)
    y = (0, 1, -1, 1, 0)
    assert window_from_orbit_point(ctx, y) == SignedPerm((-1, 5, -3, 2, 4))


def test_invalid_node():
    with pytest.raises(InvalidRankError):
        maximal_v(root_system("B", 3), 4)


@pytest.mark.parametrize("kind", ["B", "C", "D"])
def test_classification_matches_brute_force(kind):
    for n in range(MIN_RANK[kind], 5):
        rs = root_system(kind, n)
        for r in range(1, n + 1):
            ctx = CosetContext(rs, r)
            assert sorted(e.element for e in maximal_v(rs, r)) == brute_extremal_v(ctx), (kind, n, r)
            assert sorted(e.element for e in minimal_w(rs, r)) == brute_extremal_w(ctx), (kind, n, r)


def test_predicted_covers_match_brute_force():
    for ctx in contexts(5):
        for entry in maximal_v(ctx.rs, ctx.r):
            assert predicted_covers(ctx.rs, ctx.r, entry) == brute_min_rep_covers(ctx, entry.element), (
                str(ctx),
                str(entry.label),
            )


def test_b5_r4_covers_include_two_root_reflection():
    rs = root_system("B", 5)
    entry = maximal_v(rs, 4)[0]
    covers = predicted_covers(rs, 4, entry)
    assert len(covers) == 2


def test_label_of_reports_side_enum():
    rs = root_system("D", 5)
    side, label = label_of(rs, 3, SignedPerm((4, 5, -3, -2, 1)))
    assert side is Side.w
    assert label == ExtremalLabel(Family.suffix_two)
    assert all(e.side is Side.v for e in maximal_v(rs, 3))


def test_printed_windows_agree_with_orbit_points():
    block_families = {Family.rank_one, Family.rank_two}
    for ctx in contexts(7):
        for e in (*maximal_v(ctx.rs, ctx.r), *minimal_w(ctx.rs, ctx.r)):
            if e.label.family in block_families:
                continue
            assert printed_window(ctx, e.label, e.side) == e.element, (str(ctx), str(e.label), e.side)


def test_printed_windows_b5_and_d5():
    ctx = CosetContext(root_system("B", 5), 4)
    assert printed_window(ctx, ExtremalLabel(Family.plain, (2,)), Side.v) == SignedPerm((3, 4, 5, -1, 2))
    assert printed_window(ctx, ExtremalLabel(Family.plain, (2,)), Side.w) == SignedPerm((3, 4, 5, -2, 1))
    ctx = CosetContext(root_system("D", 5), 3)
    assert printed_window(ctx, ExtremalLabel(Family.plain, (4,)), Side.v) == SignedPerm((-1, 5, -3, 2, 4))
    assert printed_window(ctx, ExtremalLabel(Family.suffix_two), Side.v) == SignedPerm((-4, 5, -1, 2, 3))
    assert printed_window(ctx, ExtremalLabel(Family.suffix_one), Side.w) == SignedPerm((-4, 5, -3, -2, -1))


def test_printed_prefixed_window_negates_smallest_free_value():
    rs = root_system("D", 6)
    ctx = CosetContext(rs, 3)
    label = ExtremalLabel(Family.one_prefixed, (5,))
    assert printed_window(ctx, label, Side.v) == SignedPerm((-3, 6, -4, 1, 2, 5))
    assert entry_for(maximal_v(rs, 3), label).element == SignedPerm((-3, 6, -4, 1, 2, 5))


def test_printed_suffix_window_when_first_index_is_five():
    rs = root_system("D", 7)
    ctx = CosetContext(rs, 3)
    label = ExtremalLabel(Family.suffix_one, (5,))
    assert printed_window(ctx, label, Side.v) == SignedPerm((-6, 7, -4, 1, 2, 3, 5))
    assert entry_for(maximal_v(rs, 3), label).element == SignedPerm((-6, 7, -4, 1, 2, 3, 5))
    other = ExtremalLabel(Family.suffix_two, (5,))
    assert printed_window(ctx, other, Side.w) == SignedPerm((-6, 7, -5, -3, -2, 1, 4))


def test_printed_rank_n_windows():
    ctx = CosetContext(root_system("D", 5), 5)
    rank_n = ExtremalLabel(Family.rank_n)
    assert printed_window(ctx, rank_n, Side.v) == SignedPerm((1, 3, 4, 5, 2))
    assert printed_window(ctx, rank_n, Side.w) == SignedPerm((-1, 3, 4, 5, -2))
    ctx = CosetContext(root_system("C", 4), 4)
    assert printed_window(ctx, rank_n, Side.w) == SignedPerm((2, 3, 4, -1))


@pytest.mark.parametrize("kind", ["B", "C", "D"])
def test_classification_matches_brute_force_at_rank_five(kind):
    rs = root_system(kind, 5)
    for r in range(1, 6):
        ctx = CosetContext(rs, r)
        assert sorted(e.element for e in maximal_v(rs, r)) == brute_extremal_v(ctx), (kind, r)
        assert sorted(e.element for e in minimal_w(rs, r)) == brute_extremal_w(ctx), (kind, r)
