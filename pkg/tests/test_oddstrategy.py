"""Odd-k pipeline: wish triangles, gluing, dragons, and the full strategies."""

import pytest

from online_ramsey.engine import (
    GameConfig,
    GoalKind,
    OutcomeKind,
    ceil_log2,
    run_game,
    run_lemma,
)
from online_ramsey.evenstrategy import LineForest
from online_ramsey.graph import Color, Edge, HostGraph, WitnessKind, allocate_free_vertices, color_edge
from online_ramsey.oddstrategy import (
    DragonTail,
    WishHarvest,
    WishPattern,
    dragon_close,
    longer_path,
    matching_to_tail,
    odd_cycle,
    odd_path,
    path_to_cycle,
    red_glue,
    tail_to_cycle,
    wish_close_cycle,
    wish_glue,
    wish_glue_forest,
)
from online_ramsey.oracle import worst_case_rounds
from online_ramsey.shorten import Ring

from helpers import (
    assert_red_ck,
    is_blue_cycle,
    is_blue_path,
    lay_almost,
    lay_dragon,
    lay_path,
    lay_tail,
    lay_wish,
    odd_cfg,
    painter_suite,
)


def _glue_board(g, k):
    h = (k - 1) // 2
    left = lay_path(g, h, Color.BLUE)
    right = lay_path(g, h, Color.BLUE)
    (pivot,) = allocate_free_vertices(g, 1)
    color_edge(g, Edge(pivot, left[-1]), Color.RED)
    color_edge(g, Edge(pivot, right[-1]), Color.RED)
    return left, right, pivot


@pytest.mark.parametrize("k", [3, 5])
def test_red_glue_exhaustive_within_k_minus_2(k):
    cell = {}

    def setup():
        g = HostGraph()
        cell["args"] = _glue_board(g, k)
        return g, None

    worst = worst_case_rounds(
        lambda: red_glue(k, *cell["args"]), odd_cfg(k), cap=k - 2, setup=setup
    )
    assert worst <= k - 2


@pytest.mark.parametrize("k", [3, 5])
def test_red_glue_joins_windows_keeping_endpoints(k):
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        left, right, pivot = _glue_board(g, k)
        res, rounds, g = run_lemma(red_glue(k, left, right, pivot), p, g)
        assert rounds <= k - 2, name
        if isinstance(res, tuple):
            lo = 2 if k == 3 else (k - 1) // 2
            assert is_blue_path(g, res), name
            assert res[0] == left[0] and res[-1] == right[0], name
            assert lo <= len(res) <= (k + 1) // 2 + 1, name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize("k", [3, 5])
@pytest.mark.parametrize("pattern", list(WishPattern))
def test_wish_glue_exhaustive_within_k_plus_4(k, pattern):
    cell = {}

    def setup():
        g = HostGraph()
        h = (k - 1) // 2
        wish = lay_wish(g, pattern)
        cell["args"] = (lay_path(g, h, Color.BLUE), lay_path(g, h, Color.BLUE), wish)
        return g, None

    worst = worst_case_rounds(
        lambda: wish_glue(k, *cell["args"]), odd_cfg(k), cap=k + 4, setup=setup
    )
    assert worst <= k + 4


@pytest.mark.parametrize("k", [3, 5])
@pytest.mark.parametrize("pattern", list(WishPattern))
def test_wish_glue_result_stays_short(k, pattern):
    h = (k - 1) // 2
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        wish = lay_wish(g, pattern)
        left = lay_path(g, h, Color.BLUE)
        right = lay_path(g, h, Color.BLUE)
        res, rounds, g = run_lemma(wish_glue(k, left, right, wish), p, g)
        assert rounds <= k + 4, name
        if isinstance(res, tuple):
            assert is_blue_path(g, res) and len(res) <= k + 2, name
            assert res[0] == left[0] and res[-1] == right[0], name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize(
    "k,sizes,pattern,floor",
    [
        (5, (10, 10), WishPattern.RED_BLUE_BLUE, 18),
        (3, (2, 2), WishPattern.ALL_RED, 3),
        (3, (6, 4), WishPattern.RED_BLUE_BLUE, 9),
    ],
)
def test_wish_glue_forest_keeps_most_of_the_order(k, sizes, pattern, floor):
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        wish = lay_wish(g, pattern)
        comps = tuple(lay_path(g, s, Color.BLUE) for s in sizes)
        res, rounds, g = run_lemma(wish_glue_forest(k, LineForest(comps), wish), p, g)
        assert rounds <= k + 4, name
        if isinstance(res, tuple):
            assert is_blue_path(g, res) and len(res) >= floor, name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize("k,m", [(3, 6), (3, 11), (5, 8)])
@pytest.mark.parametrize("pattern", list(WishPattern))
def test_wish_close_cycle_lands_in_the_band(k, m, pattern):
    h = (k - 1) // 2
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        wish = lay_wish(g, pattern)
        path = lay_path(g, m, Color.BLUE)
        res, rounds, g = run_lemma(wish_close_cycle(k, path, wish), p, g)
        assert rounds <= k + 4, name
        if isinstance(res, Ring):
            size = len(res.vertices)
            assert is_blue_cycle(g, res.vertices), name
            assert m - h <= size <= m + 3, name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize("k,t,red_at", [(3, 10, None), (3, 10, 0), (3, 10, 4), (5, 11, 2)])
def test_path_to_cycle_keeps_half_the_path(k, t, red_at):
    cell = {}

    def setup():
        g = HostGraph()
        cell["path"] = lay_almost(g, t, red_at)
        return g, None

    worst = worst_case_rounds(
        lambda: path_to_cycle(k, cell["path"]), odd_cfg(k), cap=k + 1, setup=setup
    )
    assert worst <= k + 1
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        path = lay_almost(g, t, red_at)
        res, rounds, g = run_lemma(path_to_cycle(k, path), p, g)
        assert rounds <= k + 1, name
        if isinstance(res, Ring):
            assert is_blue_cycle(g, res.vertices), name
            assert 2 * len(res.vertices) >= t - k + 1, name
        else:
            assert_red_ck(g, res, k)


def _matching_board(g, m):
    matching = []
    for _ in range(m):
        u, v = allocate_free_vertices(g, 2)
        color_edge(g, Edge(u, v), Color.RED)
        matching.append((u, v))
    starts = allocate_free_vertices(g, 2)
    return tuple(matching), tuple(starts)


@pytest.mark.parametrize("k,m,goal", [(3, 4, 2), (3, 4, 1), (5, 5, 2)])
def test_matching_to_tail_exhaustive_within_2m(k, m, goal):
    cell = {}

    def setup():
        g = HostGraph()
        cell["args"] = _matching_board(g, m)
        return g, None

    worst = worst_case_rounds(
        lambda: matching_to_tail(k, *cell["args"], wish_goal=goal),
        odd_cfg(k),
        cap=2 * m,
        setup=setup,
    )
    assert worst <= 2 * m


@pytest.mark.parametrize("k,m,goal", [(3, 4, 2), (3, 9, 2), (5, 9, 1)])
def test_matching_to_tail_harvest_or_long_tail(k, m, goal):
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        matching, starts = _matching_board(g, m)
        res, rounds, g = run_lemma(
            matching_to_tail(k, matching, starts, wish_goal=goal), p, g
        )
        assert rounds <= 2 * m, name
        if isinstance(res, WishHarvest):
            assert len(res.wishes) == goal, name
            for wsh in res.wishes:
                wsh.check(g)
                assert not set(wsh.vertices()) & set(res.path), name
            if res.path:
                assert is_blue_path(g, res.path), name
        elif isinstance(res, DragonTail):
            res.verify_colors(g)
            assert res.length >= m - 2, name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize("k,m", [(3, 6), (3, 9), (5, 12), (3, 25)])
def test_tail_to_cycle_rooted_band(k, m):
    cap = ceil_log2(m) + 8
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        tail = lay_tail(g, m)
        res, rounds, g = run_lemma(tail_to_cycle(k, tail), p, g)
        assert rounds <= cap, name
        if isinstance(res, Ring):
            vs = res.vertices
            u0, u1 = tail.blue[0], tail.blue[1]
            rooted = any(
                {vs[i], vs[(i + 1) % len(vs)]} == {u0, u1} for i in range(len(vs))
            )
            assert is_blue_cycle(g, vs) and rooted, name
            assert m - k < len(vs) <= m + 4, name
        else:
            assert_red_ck(g, res, k)


def test_tail_to_cycle_exhaustive_small():
    k, m = 3, 6
    cap = ceil_log2(m) + 8
    cell = {}

    def setup():
        g = HostGraph()
        cell["tail"] = lay_tail(g, m)
        return g, None

    worst = worst_case_rounds(
        lambda: tail_to_cycle(k, cell["tail"]), odd_cfg(k), cap=cap, setup=setup
    )
    assert worst <= cap


@pytest.mark.parametrize(
    "k,cyc_len,tail_edges,bypass",
    [(3, 5, 4, False), (3, 5, 4, True), (5, 5, 6, True), (3, 8, 12, False)],
)
def test_dragon_close_size_window(k, cyc_len, tail_edges, bypass):
    cap = ceil_log2(tail_edges) + 8
    slack = 1 if bypass else 2
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        d = lay_dragon(g, cyc_len, tail_edges, bypass)
        res, rounds, g = run_lemma(dragon_close(k, d), p, g)
        assert rounds <= cap, name
        if isinstance(res, Ring):
            size = len(res.vertices)
            lo = cyc_len + (tail_edges - k + 1) - slack
            hi = cyc_len + (tail_edges + 4) - slack
            assert is_blue_cycle(g, res.vertices), name
            assert lo <= size <= hi, name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize(
    "k,t,red_at,s,pattern",
    [
        (3, 1, None, 10, WishPattern.RED_BLUE_BLUE),
        (3, 7, 3, 4, WishPattern.RED_BLUE_BLUE),
        (3, 12, 0, 6, WishPattern.ALL_RED),
        (5, 9, 4, 3, WishPattern.RED_BLUE_BLUE),
    ],
)
def test_longer_path_adds_exactly_s_vertices(k, t, red_at, s, pattern):
    cap = 2 * s + 12 * k
    for name, p in painter_suite(odd_cfg(k), seeds=10):
        g = HostGraph()
        wish = lay_wish(g, pattern)
        path = lay_almost(g, t, red_at)
        res, rounds, g = run_lemma(longer_path(k, path, wish, s), p, g)
        assert rounds <= cap, name
        if isinstance(res, tuple):
            assert len(res) == t + s and is_blue_path(g, res), name
        else:
            assert_red_ck(g, res, k)


@pytest.mark.parametrize("k,n", [(3, 24), (3, 36), (5, 40)])
def test_odd_cycle_wins_within_the_theorem_bound(k, n):
    cfg = GameConfig.for_goal(k, n, GoalKind.ODD_CYCLE)
    for name, p in painter_suite(cfg, seeds=10):
        tr = run_game(odd_cycle(k, n), p, cfg)
        assert tr.outcome.kind is OutcomeKind.WON, name
        w = tr.outcome.witness
        assert w.length == (k if w.kind is WitnessKind.RED_CYCLE else n), name


@pytest.mark.parametrize("k,n", [(3, 2), (3, 9), (5, 12)])
def test_odd_path_wins_within_the_theorem_bound(k, n):
    cfg = GameConfig.for_goal(k, n, GoalKind.ODD_PATH)
    for name, p in painter_suite(cfg, seeds=10):
        tr = run_game(odd_path(k, n), p, cfg)
        assert tr.outcome.kind is OutcomeKind.WON, name
        w = tr.outcome.witness
        assert w.length == (k if w.kind is WitnessKind.RED_CYCLE else n), name


def test_odd_path_single_vertex_needs_no_rounds():
    cfg = GameConfig.for_goal(3, 1, GoalKind.ODD_PATH)
    for name, p in painter_suite(cfg, seeds=3):
        tr = run_game(odd_path(3, 1), p, cfg)
        assert tr.outcome.kind is OutcomeKind.WON, name
        assert tr.outcome.rounds_used == 0 and tr.rounds == (), name
        assert tr.outcome.witness.kind is WitnessKind.BLUE_PATH, name
        assert tr.outcome.witness.length == 1, name
