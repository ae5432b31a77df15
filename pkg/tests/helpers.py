"""Board builders and predicates shared across the test modules."""

import re

from online_ramsey.engine import GameConfig, GoalKind, OutcomeKind, Transcript, replay, run_game
from online_ramsey.evenstrategy import even_cycle
from online_ramsey.graph import (
    Color,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    allocate_free_vertices,
    color_edge,
    detect_cycle,
    verify_witness,
)
from online_ramsey.oddstrategy import (
    AlmostBluePath,
    Dragon,
    DragonTail,
    WishPattern,
    WishTriangle,
    odd_cycle,
    odd_path,
)
from online_ramsey.oracle import TargetSpec, contains_target
from online_ramsey.painters import ConstantPainter, GreedyAvoider, RandomPainter


def painter_suite(cfg: GameConfig, seeds: int = 20):
    """The adversaries every lemma faces: constants, greedy, seeded random."""
    yield "allred", ConstantPainter(Color.RED)
    yield "allblue", ConstantPainter(Color.BLUE)
    yield "greedy", GreedyAvoider(cfg)
    for s in range(seeds):
        yield f"rand{s}", RandomPainter(s)


def even_cfg(k: int = 4, n: int = 12) -> GameConfig:
    return GameConfig.for_goal(k, n, GoalKind.EVEN_CYCLE)


def odd_cfg(k: int = 3) -> GameConfig:
    return GameConfig.for_goal(k, 8 * k, GoalKind.ODD_CYCLE)


def lay_path(g: HostGraph, length: int, color: Color) -> tuple[int, ...]:
    vs = allocate_free_vertices(g, length)
    for a, b in zip(vs, vs[1:]):
        color_edge(g, Edge(a, b), color)
    return tuple(vs)


def lay_cycle(g: HostGraph, length: int) -> tuple[int, ...]:
    vs = lay_path(g, length, Color.BLUE)
    color_edge(g, Edge(vs[-1], vs[0]), Color.BLUE)
    return vs


def lay_wish(g: HostGraph, pattern: WishPattern) -> WishTriangle:
    a, r1, r2 = allocate_free_vertices(g, 3)
    color_edge(g, Edge(r1, r2), Color.RED)
    c = Color.RED if pattern is WishPattern.ALL_RED else Color.BLUE
    color_edge(g, Edge(a, r1), c)
    color_edge(g, Edge(a, r2), c)
    return WishTriangle(a, (r1, r2), pattern)


def lay_almost(g: HostGraph, t: int, red_at=None) -> AlmostBluePath:
    vs = allocate_free_vertices(g, t)
    for i, (a, b) in enumerate(zip(vs, vs[1:])):
        color_edge(g, Edge(a, b), Color.RED if i == red_at else Color.BLUE)
    return AlmostBluePath(tuple(vs), red_at)


def lay_tail(g: HostGraph, m: int) -> DragonTail:
    blue = lay_path(g, m + 1, Color.BLUE)
    rungs = allocate_free_vertices(g, m)
    red = [blue[0]]
    for i in range(m):
        color_edge(g, Edge(blue[i], rungs[i]), Color.RED)
        color_edge(g, Edge(rungs[i], blue[i + 1]), Color.RED)
        red.extend((rungs[i], blue[i + 1]))
    return DragonTail(blue, tuple(red))


def lay_dragon(g: HostGraph, cyc_len: int, tail_edges: int, bypass: bool = False) -> Dragon:
    cyc = lay_cycle(g, cyc_len)
    if not bypass:
        blue = (cyc[0], cyc[1]) + tuple(allocate_free_vertices(g, tail_edges - 1))
    else:
        blue = (cyc[0],) + tuple(allocate_free_vertices(g, tail_edges))
    rungs = allocate_free_vertices(g, tail_edges)
    red = [blue[0]]
    for i in range(tail_edges):
        if g.color_of(Edge(blue[i], blue[i + 1])) is None:
            color_edge(g, Edge(blue[i], blue[i + 1]), Color.BLUE)
        color_edge(g, Edge(blue[i], rungs[i]), Color.RED)
        color_edge(g, Edge(rungs[i], blue[i + 1]), Color.RED)
        red.extend((rungs[i], blue[i + 1]))
    tail = DragonTail(blue, tuple(red))
    if not bypass:
        return Dragon(cyc, tail)
    edge = Edge(blue[1], cyc[-1])
    color_edge(g, edge, Color.BLUE)
    return Dragon(cyc, tail, bypass=edge)


def is_blue_path(g: HostGraph, path) -> bool:
    return len(set(path)) == len(path) and all(
        g.color_of(Edge(a, b)) is Color.BLUE for a, b in zip(path, path[1:])
    )


def is_blue_cycle(g: HostGraph, vertices) -> bool:
    vs = tuple(vertices)
    return len(set(vs)) == len(vs) and all(
        g.color_of(Edge(vs[i], vs[(i + 1) % len(vs)])) is Color.BLUE
        for i in range(len(vs))
    )


def assert_red_ck(g: HostGraph, res, k: int) -> None:
    assert isinstance(res, Witness) and res.kind is WitnessKind.RED_CYCLE, res
    assert res.length == k and verify_witness(g, res), res


def drive(builder, painter, g: HostGraph, prev=None) -> list[tuple[str, Color]]:
    """Run a builder to completion by hand, recording (annotation, color) rounds."""
    builder.start(g, prev)
    rounds = []
    while not builder.done:
        e = builder.next_edge(g)
        tag = builder.annotation
        reply = painter.color(e, g)
        color_edge(g, e, reply)
        builder.observe(e, reply)
        rounds.append((tag, reply))
    return rounds


_SCORE = re.compile(r"s=(\d+)(?::jump(\d+))?$")
_FOLD = re.compile(r"small:fold(\d)$")


def assert_icicle_scores(rounds, m: int) -> None:
    """Each paid round raises the forest score by exactly 1 plus marked jumps."""
    scores = []
    for tag, _ in rounds:
        match = _SCORE.search(tag)
        assert match is not None, tag
        scores.append((int(match.group(1)), int(match.group(2) or 0)))
    if scores:
        assert scores[0][0] == 2 * m
    for (before, _), (after, jump) in zip(scores, scores[1:]):
        assert after - before == 1 + jump, scores


def assert_potential_descent(rounds, k: int, n: int, h: int) -> None:
    """p - n + k - q drops every round, except at most two level fold episodes."""
    assert len(rounds) <= h + k + 4
    p, q = n + h, 0
    level_episodes = 0
    i = 0
    while i < len(rounds):
        tag, color = rounds[i]
        f_before = p - n + k - q
        if tag.endswith("small:step"):
            if color is Color.RED:
                q += 1
            else:
                p -= 1
            assert (p - n + k - q) - f_before == -1
            i += 1
            continue
        match = _FOLD.search(tag)
        assert match, tag
        fold = int(match.group(1))
        if i + 1 == len(rounds):
            break  # a red reply ended the game inside the episode
        assert rounds[i + 1][0] == tag
        p -= 2 if fold == 0 else 6
        q = k - 2 - fold
        delta = (p - n + k - q) - f_before
        if delta == 0:
            level_episodes += 1
        else:
            assert delta == -2
        i += 2
    assert level_episodes <= 2


def random_small_game(seed: int) -> Transcript:
    """A finished game on one of three desk-size configs, keyed by seed."""
    pick = seed % 3
    if pick == 0:
        cfg = GameConfig.for_goal(4, 12, GoalKind.EVEN_CYCLE)
        builder = even_cycle(4, 12)
    elif pick == 1:
        cfg = GameConfig.for_goal(3, 24, GoalKind.ODD_CYCLE)
        builder = odd_cycle(3, 24)
    else:
        cfg = GameConfig.for_goal(3, 9, GoalKind.ODD_PATH)
        builder = odd_path(3, 9)
    return run_game(builder, RandomPainter(seed), cfg)


def check_witness_against_detectors(tr: Transcript) -> None:
    """Cross-check the claimed witness with two independent detectors."""
    assert tr.outcome.kind is OutcomeKind.WON
    g = replay(tr)
    w = tr.outcome.witness
    assert verify_witness(g, w)
    triples = [(e.u, e.v, 0 if c is Color.RED else 1) for e, c in g.edges()]
    if w.kind is WitnessKind.RED_CYCLE:
        assert detect_cycle(g, Color.RED, w.length)
        assert contains_target(triples, 0, TargetSpec("cycle", w.length))
    elif w.kind is WitnessKind.BLUE_CYCLE:
        assert detect_cycle(g, Color.BLUE, w.length)
        assert contains_target(triples, 1, TargetSpec("cycle", w.length))
    elif w.length >= 2:  # a 1-vertex path needs no edges, nothing to detect
        assert contains_target(triples, 1, TargetSpec("path", w.length))
