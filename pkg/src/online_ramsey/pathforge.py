"""Forcing a red path and a blue path side by side.

The workhorse is a link-unit loop over two vertex-disjoint paths, each backed
by a reserved lone vertex while empty. One round probes the tip-tip "link"
edge; the banked link color then decides which path the next tip-fresh probe
grows. Every two rounds the combined length rises by at least one, and a
lucky reply steals the other path's tip for a +2, so t extra edges cost at
most 2t rounds and often less.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .engine import GeneratorBuilder, StrategyGen
from .graph import Color, Edge, HostGraph, allocate_free_vertices


@dataclass(frozen=True)
class PathPair:
    """Vertex-disjoint monochromatic paths, as vertex sequences.

    A path's length in edges is len(seq) - 1; () means no path of that color.
    """

    red: tuple[int, ...]
    blue: tuple[int, ...]

    @property
    def red_length(self) -> int:
        return max(len(self.red) - 1, 0)

    @property
    def blue_length(self) -> int:
        return max(len(self.blue) - 1, 0)


@dataclass(frozen=True)
class ExtendResult:
    """Outcome of the extend-or-build disjunction.

    kind "blue": pair.blue has exactly the requested number of edges.
    kind "red": pair.red has exactly m edges and pair.blue keeps j edges.
    """

    kind: str
    pair: PathPair
    j: int


def _forge(
    g: HostGraph,
    blue_seed: tuple[int, ...],
    stop: Callable[[int, int], Optional[str]],
    tag: str,
) -> StrategyGen:
    """Link-unit loop; returns (verdict, red_vertices, blue_vertices, last_grew).

    ``stop(rho, beta)`` inspects the current red/blue lengths in edges and
    returns a verdict string to finish, or None to keep playing. The loop
    re-checks after every reply. ``last_grew`` names the side the final round
    extended, so callers can trim a +2 overshoot from the right path.
    """
    blue = list(blue_seed) if blue_seed else allocate_free_vertices(g, 1)
    red = allocate_free_vertices(g, 1)
    link: Optional[Color] = None
    last_grew = ""

    while True:
        verdict = stop(len(red) - 1, len(blue) - 1)
        if verdict is not None:
            return verdict, tuple(red), tuple(blue), last_grew
        if link is None:
            u, v = red[-1], blue[-1]
            reply = yield Edge(u, v), tag
            if len(red) == 1 and len(blue) == 1:
                # both sides are bare reserves: absorb the edge directly
                if reply is Color.RED:
                    red = [u, v]
                    blue = allocate_free_vertices(g, 1)
                    last_grew = "red"
                else:
                    blue = [v, u]
                    red = allocate_free_vertices(g, 1)
                    last_grew = "blue"
            else:
                link = reply
        elif link is Color.RED:
            (fresh,) = allocate_free_vertices(g, 1)
            reply = yield Edge(blue[-1], fresh), tag
            if reply is Color.BLUE:
                blue.append(fresh)
                last_grew = "blue"
            else:
                # the banked red link plus this edge extend red through
                # blue's stolen tip
                red.extend([blue.pop(), fresh])
                if not blue:
                    blue = allocate_free_vertices(g, 1)
                last_grew = "red"
            link = None
        else:
            (fresh,) = allocate_free_vertices(g, 1)
            reply = yield Edge(red[-1], fresh), tag
            if reply is Color.RED:
                red.append(fresh)
                last_grew = "red"
            else:
                blue.extend([red.pop(), fresh])
                if not red:
                    red = allocate_free_vertices(g, 1)
                last_grew = "blue"
            link = None


def _as_path(seq: tuple[int, ...]) -> tuple[int, ...]:
    """A bare reserve vertex is not a path; report it as the empty path."""
    return seq if len(seq) >= 2 else ()


def force_path_pair_budget(k: int) -> int:
    return 2 * k - 1


def force_path_pair(k: int) -> GeneratorBuilder:
    """Force a red path and a disjoint blue path totalling exactly k edges.

    Worst case 2k-1 rounds (audited exhaustively for small k); which side ends
    up with which share is Painter's choice.
    """
    if k < 1:
        raise ValueError("k must be at least 1")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        def stop(rho: int, beta: int) -> Optional[str]:
            return "done" if rho + beta >= k else None

        _, red, blue, last_grew = yield from _forge(g, (), stop, "path-pair")
        total = (len(red) - 1) + (len(blue) - 1)
        if total == k + 1:
            # a tip steal overshot by one; give back the newest vertex
            if last_grew == "red":
                red = red[:-1]
            else:
                blue = blue[:-1]
        return PathPair(_as_path(red), _as_path(blue))

    return GeneratorBuilder(
        f"path-pair[{k}]", force_path_pair_budget(k), run, provides=PathPair
    )


def extend_budget(m: int, k: int, e: int) -> int:
    return 2 * (k - e + m - 1) + 2


def extend_blue_or_red(m: int, k: int, start: tuple[int, ...] = ()) -> GeneratorBuilder:
    """Grow a given blue path to k edges, or build a disjoint red path of m edges.

    ``start`` is the vertex sequence of an existing blue path (possibly empty)
    assumed to sit in an otherwise fresh region: no other colored edge touches
    its vertices. Whichever target is hit first ends the run; the result
    reports which, plus the leftover blue length j for the red outcome.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be at least 1")
    e = max(len(start) - 1, 0)
    if e >= k:
        raise ValueError(f"start path already has {e} >= k = {k} edges")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        seed = start
        if not seed and isinstance(prev, tuple):
            seed = prev  # composed: previous stage hands the blue path

        def stop(rho: int, beta: int) -> Optional[str]:
            if beta >= k:
                return "blue"
            if rho >= m:
                return "red"
            return None

        verdict, red, blue, _ = yield from _forge(g, seed, stop, "extend-or-build")
        if verdict == "blue":
            if len(blue) - 1 > k:
                blue = blue[: k + 1]
            return ExtendResult("blue", PathPair(_as_path(red), blue), k)
        if len(red) - 1 > m:
            red = red[: m + 1]
        return ExtendResult("red", PathPair(red, _as_path(blue)), max(len(blue) - 1, 0))

    return GeneratorBuilder(
        f"extend[{m},{k}]", extend_budget(m, k, e), run, provides=ExtendResult
    )
