"""Path forging: the red/blue path disjunction and the extend-or-build loop."""

import pytest

from online_ramsey.engine import run_lemma
from online_ramsey.graph import Color, HostGraph
from online_ramsey.oracle import Unbounded, worst_case_rounds
from online_ramsey.pathforge import (
    ExtendResult,
    PathPair,
    extend_blue_or_red,
    extend_budget,
    force_path_pair,
    force_path_pair_budget,
)

from helpers import even_cfg, is_blue_path, lay_path, painter_suite


def _red_path_ok(g, path):
    from online_ramsey.graph import Edge

    return len(set(path)) == len(path) and all(
        g.color_of(Edge(a, b)) is Color.RED for a, b in zip(path, path[1:])
    )


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_force_path_pair_exhaustive_budget(k):
    worst = worst_case_rounds(force_path_pair(k), even_cfg(), cap=2 * k - 1)
    assert not isinstance(worst, Unbounded)
    assert worst <= force_path_pair_budget(k)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_force_path_pair_yields_disjoint_split_of_k_edges(k):
    for name, p in painter_suite(even_cfg(), seeds=12):
        res, rounds, g = run_lemma(force_path_pair(k), p)
        assert rounds <= 2 * k - 1, name
        assert isinstance(res, PathPair)
        assert res.red_length + res.blue_length == k, name
        assert not set(res.red) & set(res.blue), name
        assert _red_path_ok(g, res.red) and is_blue_path(g, res.blue), name


@pytest.mark.parametrize("m,k", [(1, 2), (2, 3), (3, 4), (4, 3)])
def test_extend_blue_or_red_meets_its_disjunction(m, k):
    budget = extend_budget(m, k, 0)
    for name, p in painter_suite(even_cfg(), seeds=12):
        res, rounds, g = run_lemma(extend_blue_or_red(m, k), p)
        assert rounds <= budget, name
        assert isinstance(res, ExtendResult)
        if res.kind == "blue":
            assert len(res.pair.blue) == k + 1, name
            assert is_blue_path(g, res.pair.blue), name
        else:
            assert res.kind == "red"
            assert len(res.pair.red) == m + 1, name
            assert _red_path_ok(g, res.pair.red), name
            assert res.pair.blue_length == res.j, name
        assert not set(res.pair.red) & set(res.pair.blue), name


def test_extend_blue_or_red_grows_a_seeded_path():
    for name, p in painter_suite(even_cfg(), seeds=10):
        g = HostGraph()
        seed = lay_path(g, 3, Color.BLUE)
        budget = extend_budget(2, 5, len(seed) - 1)
        res, rounds, g = run_lemma(extend_blue_or_red(2, 5, start=seed), p, g)
        assert rounds <= budget, name
        if res.kind == "blue":
            assert res.pair.blue[: len(seed)] == seed, name
            assert len(res.pair.blue) == 6, name


def test_extend_blue_or_red_rejects_a_start_at_or_past_the_target():
    g = HostGraph()
    seed = lay_path(g, 4, Color.BLUE)
    with pytest.raises(ValueError):
        extend_blue_or_red(2, 3, start=seed)


def test_spec_pinned_line_allblue_two_rounds():
    """m=1, k=2, one seeded edge, all-blue: done within 2 rounds."""
    from online_ramsey.painters import ConstantPainter

    g = HostGraph()
    seed = lay_path(g, 2, Color.BLUE)
    res, rounds, g = run_lemma(
        extend_blue_or_red(1, 2, start=seed), ConstantPainter(Color.BLUE), g
    )
    assert res.kind == "blue" and rounds <= 2
