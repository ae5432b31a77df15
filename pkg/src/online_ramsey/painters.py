"""The adversaries: deterministic, random, greedy, replayed, human, minimax.

Builder strategies are verified against this suite. Every painter is a pure
function of (edge, visible graph, its own seed or script), so reruns with the
same inputs give byte-identical games.
"""

from __future__ import annotations

import json
import queue
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

from .engine import GameConfig, GoalKind, PainterResigns, PainterStrategy
from .graph import Color, Edge, HostGraph, WitnessKind


class UnsupportedSpec(Exception):
    """A painter spec that cannot be built for the given config."""


class ReplayExhausted(PainterResigns):
    """A replay painter ran out of scripted colors.

    Subclasses PainterResigns so a game driven past the end of its script
    ends as a resignation instead of crashing the harness.
    """


class PainterKind(Enum):
    ALL_RED = "allred"
    ALL_BLUE = "allblue"
    RANDOM = "random"
    GREEDY_AVOIDER = "greedy"
    REPLAY = "replay"
    HUMAN = "human"
    MINIMAX = "minimax"


@dataclass(frozen=True)
class PainterSpec:
    kind: PainterKind
    seed: Optional[int] = None
    colors: Optional[tuple[Color, ...]] = None
    mailbox: Optional["Mailbox"] = None
    cap: Optional[int] = None

    def label(self) -> str:
        if self.kind is PainterKind.RANDOM:
            return f"random:{self.seed}"
        if self.kind is PainterKind.MINIMAX:
            return f"minimax:{self.cap}"
        return self.kind.value


def parse_painter_spec(text: str) -> PainterSpec:
    """Parse the CLI grammar: allred | allblue | random:SEED | greedy | replay:FILE | minimax:CAP."""
    head, _, arg = text.partition(":")
    if head in ("allred", "allblue", "greedy"):
        if arg:
            raise UnsupportedSpec(f"painter {head!r} takes no argument")
        kinds = {
            "allred": PainterKind.ALL_RED,
            "allblue": PainterKind.ALL_BLUE,
            "greedy": PainterKind.GREEDY_AVOIDER,
        }
        return PainterSpec(kinds[head])
    if head == "random":
        if not arg:
            raise UnsupportedSpec("random painter needs a seed, e.g. random:42")
        return PainterSpec(PainterKind.RANDOM, seed=int(arg))
    if head == "replay":
        if not arg:
            raise UnsupportedSpec("replay painter needs a file, e.g. replay:colors.json")
        return PainterSpec(PainterKind.REPLAY, colors=load_replay_colors(arg))
    if head == "minimax":
        if not arg:
            raise UnsupportedSpec("minimax painter needs a cap, e.g. minimax:10")
        return PainterSpec(PainterKind.MINIMAX, cap=int(arg))
    raise UnsupportedSpec(f"unknown painter spec {text!r}")


def load_replay_colors(path: str) -> tuple[Color, ...]:
    """Read a color script: either a JSON list of colors or a transcript file."""
    doc = json.loads(Path(path).read_text())
    if isinstance(doc, dict):
        rounds = doc.get("rounds", [])
        return tuple(Color(r["color"]) for r in rounds)
    return tuple(Color(c) for c in doc)


class ConstantPainter:
    def __init__(self, color: Color) -> None:
        self._color = color

    def color(self, e: Edge, g: HostGraph) -> Color:
        return self._color


class RandomPainter:
    """Uniform color per round, reproducible under the seed."""

    def __init__(self, seed: int) -> None:
        self._rng = random.Random(seed)

    def color(self, e: Edge, g: HostGraph) -> Color:
        return Color.RED if self._rng.random() < 0.5 else Color.BLUE


class ReplayPainter:
    def __init__(self, colors: tuple[Color, ...]) -> None:
        self._colors = list(colors)
        self._at = 0

    def color(self, e: Edge, g: HostGraph) -> Color:
        if self._at >= len(self._colors):
            raise ReplayExhausted(f"script ended after {self._at} colors")
        c = self._colors[self._at]
        self._at += 1
        return c


class Mailbox:
    """Hand-off point between the session service and a human painter."""

    def __init__(self) -> None:
        self._q: queue.Queue = queue.Queue()
        self._closed = False

    def put_color(self, c: Color) -> None:
        self._q.put(c)

    def close(self) -> None:
        self._closed = True
        self._q.put(None)

    def take_color(self, timeout: Optional[float]) -> Color:
        if self._closed:
            raise PainterResigns()
        try:
            item = self._q.get(timeout=timeout)
        except queue.Empty:
            raise PainterResigns() from None
        if item is None:
            raise PainterResigns()
        return item


class HumanPainter:
    """Adapts a mailbox to the painter contract; blocks awaiting the next color."""

    def __init__(self, mailbox: Mailbox, timeout: Optional[float] = None) -> None:
        self._mailbox = mailbox
        self._timeout = timeout

    def color(self, e: Edge, g: HostGraph) -> Color:
        return self._mailbox.take_color(self._timeout)


# -- greedy avoidance ----------------------------------------------------


def _mono_adj(g: HostGraph, color: Color) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for e, c in g.edges():
        if c is color:
            adj.setdefault(e.u, []).append(e.v)
            adj.setdefault(e.v, []).append(e.u)
    return adj


def closes_cycle_exact(g: HostGraph, e: Edge, color: Color, length: int) -> bool:
    """Would coloring e create a cycle of exactly this length in the color class?

    Equivalent: an existing simple monochromatic path of length-1 edges joins
    e's endpoints.
    """
    adj = _mono_adj(g, color)
    want = length - 1

    def dfs(cur: int, steps: int, seen: set[int]) -> bool:
        if steps == want:
            return cur == e.v
        for nxt in adj.get(cur, ()):
            if nxt == e.v and steps + 1 != want:
                # may pass through e.v only as the final vertex
                continue
            if nxt in seen:
                continue
            seen.add(nxt)
            if dfs(nxt, steps + 1, seen):
                return True
            seen.remove(nxt)
        return False

    return dfs(e.u, 0, {e.u})


def closes_cycle_at_least(g: HostGraph, e: Edge, color: Color, length: int) -> bool:
    """Would coloring e create a cycle of at least this length in the color class?"""
    adj = _mono_adj(g, color)
    want = length - 1

    def dfs(cur: int, steps: int, seen: set[int]) -> bool:
        if steps >= want and cur == e.v:
            return True
        for nxt in adj.get(cur, ()):
            if nxt in seen:
                continue
            if nxt == e.v and steps + 1 < want:
                continue
            seen.add(nxt)
            if dfs(nxt, steps + 1, seen):
                return True
            seen.remove(nxt)
        return False

    return dfs(e.u, 0, {e.u})


def makes_path_at_least(g: HostGraph, e: Edge, color: Color, n_vertices: int) -> bool:
    """Would coloring e create a monochromatic path on >= n_vertices through e?

    Exhaustive: every simple path leaving e.u is tried as the left arm
    (including every prefix), and for each the right arm is grown from e.v
    avoiding it.
    """
    adj = _mono_adj(g, color)

    def grow_right(cur: int, seen: set[int], need: int) -> bool:
        if need <= 0:
            return True
        for nxt in adj.get(cur, ()):
            if nxt in seen:
                continue
            seen.add(nxt)
            if grow_right(nxt, seen, need - 1):
                seen.remove(nxt)
                return True
            seen.remove(nxt)
        return False

    def grow_left(cur: int, seen: set[int]) -> bool:
        # seen holds the left arm plus e.v; right side needs the rest
        if grow_right(e.v, set(seen), n_vertices - len(seen)):
            return True
        for nxt in adj.get(cur, ()):
            if nxt in seen:
                continue
            seen.add(nxt)
            if grow_left(nxt, seen):
                seen.remove(nxt)
                return True
            seen.remove(nxt)
        return False

    return grow_left(e.u, {e.u, e.v})


class GreedyAvoider:
    """One-move lookahead: refuse to complete the red cycle or the blue target.

    Ties (both colors safe, or both forced) go red.
    """

    def __init__(self, cfg: GameConfig) -> None:
        self._cfg = cfg

    def _red_completes(self, e: Edge, g: HostGraph) -> bool:
        return closes_cycle_exact(g, e, Color.RED, self._cfg.red_target())

    def _blue_completes(self, e: Edge, g: HostGraph) -> bool:
        kind, length = self._cfg.blue_target()
        if kind is WitnessKind.BLUE_PATH:
            return makes_path_at_least(g, e, Color.BLUE, length)
        if self._cfg.goal is GoalKind.CUSTOM:
            return closes_cycle_exact(g, e, Color.BLUE, length)
        return closes_cycle_at_least(g, e, Color.BLUE, length)

    def color(self, e: Edge, g: HostGraph) -> Color:
        red_bad = self._red_completes(e, g)
        if not red_bad:
            return Color.RED
        if not self._blue_completes(e, g):
            return Color.BLUE
        return Color.RED


class MinimaxPainter:
    """Plays the color maximizing rounds-to-loss against an optimal Builder.

    Only viable for tiny targets; building one for a desk-scale config raises
    UnsupportedSpec.
    """

    def __init__(self, cfg: GameConfig, cap: int) -> None:
        red = cfg.red_target()
        blue_kind, blue_len = cfg.blue_target()
        if red > 6 or blue_len > 6 or cap > 12:
            raise UnsupportedSpec("minimax painter only supports targets on <= 6 vertices and cap <= 12")
        from .oracle import TargetSpec, position_value

        self._red = TargetSpec("cycle", red)
        self._blue = TargetSpec("cycle" if blue_kind is WitnessKind.BLUE_CYCLE else "path", blue_len)
        self._cap = cap
        self._position_value = position_value

    def color(self, e: Edge, g: HostGraph) -> Color:
        scores: dict[Color, int] = {}
        for c in (Color.RED, Color.BLUE):
            scores[c] = self._position_value(g, e, c, self._red, self._blue, self._cap)
        # higher value = more rounds Builder still needs; infinity encoded cap+1
        if scores[Color.RED] >= scores[Color.BLUE]:
            return Color.RED
        return Color.BLUE


def make_painter(spec: PainterSpec, cfg: GameConfig) -> PainterStrategy:
    if spec.kind is PainterKind.ALL_RED:
        return ConstantPainter(Color.RED)
    if spec.kind is PainterKind.ALL_BLUE:
        return ConstantPainter(Color.BLUE)
    if spec.kind is PainterKind.RANDOM:
        if spec.seed is None:
            raise UnsupportedSpec("random painter needs a seed")
        return RandomPainter(spec.seed)
    if spec.kind is PainterKind.GREEDY_AVOIDER:
        return GreedyAvoider(cfg)
    if spec.kind is PainterKind.REPLAY:
        if spec.colors is None:
            raise UnsupportedSpec("replay painter needs a color script")
        return ReplayPainter(spec.colors)
    if spec.kind is PainterKind.HUMAN:
        if spec.mailbox is None:
            raise UnsupportedSpec("human painter needs a mailbox")
        return HumanPainter(spec.mailbox)
    if spec.kind is PainterKind.MINIMAX:
        return MinimaxPainter(cfg, spec.cap if spec.cap is not None else 12)
    raise UnsupportedSpec(f"unhandled painter kind {spec.kind}")


def minimax_painter_value(builder, cfg: GameConfig, round_cap: int) -> int:
    """Max rounds over every Painter reply string until the fixed Builder wins.

    Infinity (some reply string survives the cap) is encoded as round_cap + 1.
    """
    from .oracle import Unbounded, worst_case_rounds

    result = worst_case_rounds(builder, cfg, round_cap)
    if isinstance(result, Unbounded):
        return round_cap + 1
    return result
