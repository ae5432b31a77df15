"""Builder strategies for an odd red-cycle target.

Odd k breaks the even playbook: a red path can no longer be threaded through
blue components at matching parity, so refusals must be cashed in differently.
The currency here is the wish triangle, a three-vertex pattern (one red edge
plus either two more reds or two blues at an apex) that later buys a
guaranteed splice between two blue path ends. Builder farms fresh pairs into
a red matching and an almost-blue path, converts refusals into wish
triangles, and finishes through one of three endgames: glue a stretched path
into a cycle with two wishes, binary-search a dragon tail's chord, or grow a
small blue cycle by ears until it is long enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .engine import GeneratorBuilder, RedCycleFound, StrategyGen, ceil_log2
from .evenstrategy import LineForest, _check, _probe, icicle_grow, join_to_two
from .graph import (
    Color,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    allocate_free_vertices,
    cycle_witness,
)
from .pathforge import extend_blue_or_red
from .shorten import Ring, shorten_full


def _half(k: int) -> int:
    return (k - 1) // 2


def _path_witness(seq: tuple[int, ...]) -> Witness:
    edges = tuple(Edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))
    return Witness(WitnessKind.BLUE_PATH, edges, len(seq))


# -- structures ----------------------------------------------------------


class WishPattern(Enum):
    ALL_RED = "all-red"
    RED_BLUE_BLUE = "red-blue-blue"


@dataclass(frozen=True)
class WishTriangle:
    """A banked triangle that later buys one blue path splice.

    The rim edge is red. An all-red wish has red apex edges; the mixed wish
    has blue ones. Either pattern lets a splice attempt fall back onto a red
    C_k threat instead of stalling.
    """

    apex: int
    rim: tuple[int, int]
    pattern: WishPattern

    def vertices(self) -> tuple[int, int, int]:
        return (self.apex, self.rim[0], self.rim[1])

    def check(self, g: HostGraph) -> None:
        assert g.color_of(Edge(*self.rim)) is Color.RED, "wish rim must be red"
        want = Color.RED if self.pattern is WishPattern.ALL_RED else Color.BLUE
        for r in self.rim:
            assert g.color_of(Edge(self.apex, r)) is want, "wish apex edge off-color"


@dataclass(frozen=True)
class AlmostBluePath:
    """A path whose edges are blue except for at most one red edge.

    ``red_at`` indexes the red edge: vertices[red_at]-vertices[red_at+1].
    """

    vertices: tuple[int, ...]
    red_at: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("an almost-blue path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        if self.red_at is not None and not 0 <= self.red_at < len(self.vertices) - 1:
            raise ValueError("red_at must index an internal edge")

    @property
    def order(self) -> int:
        return len(self.vertices)

    def stretches(self) -> tuple[tuple[int, ...], ...]:
        """The maximal all-blue runs, one or two of them."""
        if self.red_at is None:
            return (self.vertices,)
        i = self.red_at
        return (self.vertices[: i + 1], self.vertices[i + 1 :])


@dataclass(frozen=True)
class DragonTail:
    """A blue path shadowed by a red zigzag through per-edge rung vertices.

    ``blue`` is u_0..u_m; ``red`` is the walk u_0 w_1 u_1 w_2 ... w_m u_m, so
    red[2i] == blue[i] and the rungs sit at odd positions.
    """

    blue: tuple[int, ...]
    red: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.blue) < 2:
            raise ValueError("a dragon tail needs at least one blue edge")
        if len(self.red) != 2 * len(self.blue) - 1:
            raise ValueError("red zigzag must visit a rung per blue edge")
        if any(self.red[2 * i] != v for i, v in enumerate(self.blue)):
            raise ValueError("red zigzag must pass through the blue path vertices")
        if len(set(self.red)) != len(self.red):
            raise ValueError("tail vertices must be distinct")

    @property
    def length(self) -> int:
        """Number of blue edges."""
        return len(self.blue) - 1

    def rung(self, i: int) -> int:
        """The zigzag vertex w_i between u_{i-1} and u_i, 1-based."""
        return self.red[2 * i - 1]

    def verify_colors(self, g: HostGraph) -> None:
        for i in range(len(self.blue) - 1):
            assert g.color_of(Edge(self.blue[i], self.blue[i + 1])) is Color.BLUE
        for i in range(len(self.red) - 1):
            assert g.color_of(Edge(self.red[i], self.red[i + 1])) is Color.RED


@dataclass(frozen=True)
class Dragon:
    """A blue cycle with a dragon tail grafted on.

    In the shared-edge form (no bypass) the tail's first blue edge u_0-u_1 is
    an edge of the cycle. With a bypass, only u_0 lies on the cycle and the
    bypass is a blue edge from u_1 to a cycle neighbor of u_0.
    """

    cycle: tuple[int, ...]
    tail: DragonTail
    bypass: Optional[Edge] = None

    def __post_init__(self) -> None:
        u0, u1 = self.tail.blue[0], self.tail.blue[1]
        if u0 not in self.cycle:
            raise ValueError("tail root must lie on the cycle")
        i = self.cycle.index(u0)
        n = len(self.cycle)
        neighbors = {self.cycle[i - 1], self.cycle[(i + 1) % n]}
        if self.bypass is None:
            if u1 not in neighbors:
                raise ValueError("without a bypass, u_0-u_1 must be a cycle edge")
            body = set(self.tail.red[1:]) - {u1}
        else:
            if not self.bypass.touches(u1):
                raise ValueError("bypass must end at u_1")
            x = self.bypass.other(u1)
            if x not in neighbors:
                raise ValueError("bypass must start at a cycle neighbor of u_0")
            body = set(self.tail.red[1:])
        if body & set(self.cycle):
            raise ValueError("tail must leave the cycle after its root")


@dataclass(frozen=True)
class WishHarvest:
    """Wish triangles found while hunting, plus the blue path that survived."""

    wishes: tuple[WishTriangle, ...]
    path: tuple[int, ...]


# -- gluing through red territory ----------------------------------------


def red_glue(k: int, left: tuple[int, ...], right: tuple[int, ...], pivot: int) -> GeneratorBuilder:
    """Join two blue windows into one blue path, or complete a red C_k.

    Both windows hold exactly (k-1)//2 vertices; their last vertices must
    already be red-adjacent to the pivot. Probing the zigzag between the
    windows either collects k-2 red edges, closing a red C_k through the
    pivot, or hits a blue edge whose position keeps at least floor(k/2)
    window vertices on a blue path from left[0] to right[0].
    """
    h = _half(k)
    _check(k >= 3 and k % 2 == 1, "red_glue needs odd k >= 3")
    _check(len(left) == h and len(right) == h, "windows must hold (k-1)//2 vertices each")
    _check(not set(left) & set(right), "windows must be disjoint")
    _check(pivot not in left and pivot not in right, "pivot must avoid both windows")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        assert g.color_of(Edge(pivot, left[-1])) is Color.RED, "pivot-left edge must be red"
        assert g.color_of(Edge(pivot, right[-1])) is Color.RED, "pivot-right edge must be red"
        u = list(reversed(left))
        v = list(reversed(right))
        ring: list[int] = []
        for i in range(h):
            ring.append(u[i])
            ring.append(v[h - 1 - i])
        for idx in range(k - 2):
            c = yield from _probe(g, Edge(ring[idx], ring[idx + 1]), f"red-glue:{idx}")
            if c is Color.BLUE:
                r = idx // 2
                keep_l = h - r if idx % 2 == 0 else h - 1 - r
                keep_r = r + 1
                return tuple(left[:keep_l]) + tuple(reversed(right[:keep_r]))
        raise RedCycleFound(cycle_witness([pivot, *ring], WitnessKind.RED_CYCLE))

    return GeneratorBuilder(f"red-glue[{k}]", k - 2, run, provides=tuple)


def wish_glue(
    k: int, left: tuple[int, ...], right: tuple[int, ...], wish: WishTriangle
) -> GeneratorBuilder:
    """Join two blue windows through a banked wish triangle.

    Windows are as in red_glue but need no red adjacency; the triangle
    supplies the pivot candidates. Two probes classify each rim vertex
    against the window ends; every reply pattern either closes the path
    directly, or hands a genuinely red-adjacent pivot to red_glue. The
    result runs from left[0] to right[0] on floor(k/2) to k+2 vertices.
    """
    h = _half(k)
    _check(k >= 3 and k % 2 == 1, "wish_glue needs odd k >= 3")
    _check(len(left) == h and len(right) == h, "windows must hold (k-1)//2 vertices each")
    _check(not set(left) & set(right), "windows must be disjoint")
    _check(
        not set(wish.vertices()) & (set(left) | set(right)),
        "wish triangle must avoid both windows",
    )

    def run(g: HostGraph, prev: object) -> StrategyGen:
        wish.check(g)
        t1, t3 = wish.rim
        t2 = wish.apex
        p, q = tuple(left), tuple(right)
        c_pu = yield from _probe(g, Edge(p[-1], t1), "wish-glue:rim1")
        c_qu = yield from _probe(g, Edge(q[-1], t1), "wish-glue:rim1")
        if c_pu is Color.BLUE and c_qu is Color.BLUE:
            return p + (t1,) + tuple(reversed(q))
        if c_pu is Color.RED and c_qu is Color.RED:
            return (yield from red_glue(k, p, q, t1).factory(g, None))
        # mixed: orient so the blue reply sits on the p side, undo at the end
        swapped = c_pu is Color.RED
        if swapped:
            p, q = q, p
        c_pv = yield from _probe(g, Edge(p[-1], t3), "wish-glue:rim2")
        c_qv = yield from _probe(g, Edge(q[-1], t3), "wish-glue:rim2")
        if c_pv is Color.BLUE and c_qv is Color.BLUE:
            out = p + (t3,) + tuple(reversed(q))
        elif c_pv is Color.RED and c_qv is Color.RED:
            out = yield from red_glue(k, p, q, t3).factory(g, None)
        elif c_qv is Color.BLUE:
            # p[-1] is blue-adjacent to t1, q[-1] to t3: the apex bridges them
            if wish.pattern is WishPattern.RED_BLUE_BLUE:
                out = p + (t1, t2, t3) + tuple(reversed(q))
            else:
                shifted = yield from red_glue(
                    k, p[1:] + (t1,), q[1:] + (t3,), t2
                ).factory(g, None)
                out = (p[0],) + tuple(shifted) + (q[0],)
        else:
            # t3 is red toward q[-1]; the red rim carries it back to t1
            shifted = yield from red_glue(k, p[1:] + (t1,), q, t3).factory(g, None)
            out = (p[0],) + tuple(shifted)
        return tuple(reversed(out)) if swapped else tuple(out)

    return GeneratorBuilder(f"wish-glue[{k}]", k + 4, run, provides=tuple)


def wish_glue_forest(k: int, forest: LineForest, wish: WishTriangle) -> GeneratorBuilder:
    """Collapse a one- or two-path forest into one blue path via a wish.

    A second component at most (k-1)//2 big is simply dropped; otherwise the
    facing end windows are glued. Either way the result keeps at least
    forest.order - (k-1)//2 vertices.
    """
    h = _half(k)
    _check(k >= 3 and k % 2 == 1, "wish_glue_forest needs odd k >= 3")
    _check(1 <= len(forest) <= 2, "forest must have one or two components")
    vs = {v for p in forest.paths for v in p}
    _check(not set(wish.vertices()) & vs, "wish triangle must avoid the forest")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        comps = sorted(forest.paths, key=len)
        if len(comps) == 1:
            return comps[0]
        small, big = comps
        if len(small) <= h:
            return big
        joined = yield from wish_glue(k, big[-h:], small[-h:], wish).factory(g, None)
        return tuple(big[:-h]) + tuple(joined) + tuple(reversed(small[:-h]))

    return GeneratorBuilder(f"wish-glue-forest[{k}]", k + 4, run, provides=tuple)


def wish_close_cycle(k: int, path: tuple[int, ...], wish: WishTriangle) -> GeneratorBuilder:
    """Bend a blue path on m >= k vertices into a blue cycle via a wish.

    The path's two end windows are glued; the splice plus the untouched
    middle closes a cycle of m - (k-1)//2 to m + 3 vertices.
    """
    h = _half(k)
    m = len(path)
    _check(k >= 3 and k % 2 == 1, "wish_close_cycle needs odd k >= 3")
    _check(m >= k, "path must have at least k vertices")
    _check(not set(wish.vertices()) & set(path), "wish triangle must avoid the path")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        head = tuple(reversed(path[:h]))
        tail = tuple(path[-h:])
        splice = yield from wish_glue(k, head, tail, wish).factory(g, None)
        # splice runs path[h-1] .. path[m-h]; the interior walks back
        return Ring(tuple(splice) + tuple(reversed(path[h : m - h])))

    return GeneratorBuilder(f"wish-close[{k}]", k + 4, run, provides=Ring)


# -- almost-blue path maintenance ----------------------------------------


def _extend_blue(
    g: HostGraph, k: int, path: AlmostBluePath, pair: tuple[int, int]
) -> StrategyGen:
    """Attach a fresh blue edge to the almost-blue path, within 4 rounds.

    Returns (path', wish-or-None). With no red edge one probe appends the
    pair, tolerating a red junction. Around an existing red edge, the pair
    either reroutes it away or the replies close a wish triangle and the red
    edge's endpoints leave the path; a two-vertex path consumed whole leaves
    path' as None.
    """
    v1, v2 = pair
    b = path.vertices
    if path.red_at is None:
        c = yield from _probe(g, Edge(b[-1], v1), "extend:junction")
        red = len(b) - 1 if c is Color.RED else None
        return AlmostBluePath(b + (v1, v2), red), None
    i = path.red_at
    u1, u2 = b[i], b[i + 1]
    c1 = yield from _probe(g, Edge(u1, v1), "extend:reroute")
    c2 = yield from _probe(g, Edge(u2, v2), "extend:reroute")
    if c1 is Color.BLUE or c2 is Color.BLUE:
        red = i if c1 is Color.RED else (i + 2 if c2 is Color.RED else None)
        return AlmostBluePath(b[: i + 1] + (v1, v2) + b[i + 1 :], red), None
    c3 = yield from _probe(g, Edge(u1, v2), "extend:wish")
    if c3 is Color.RED:
        if k == 3:
            raise RedCycleFound(cycle_witness([u1, u2, v2], WitnessKind.RED_CYCLE))
        tri = WishTriangle(u2, (u1, v2), WishPattern.ALL_RED)
    else:
        tri = WishTriangle(v2, (u1, v1), WishPattern.RED_BLUE_BLUE)
    before, after = b[:i], b[i + 2 :]
    if before and after:
        c4 = yield from _probe(g, Edge(before[-1], after[0]), "extend:rejoin")
        red = len(before) - 1 if c4 is Color.RED else None
        return AlmostBluePath(before + after, red), tri
    if before or after:
        return AlmostBluePath(before or after), tri
    return None, tri


def path_to_cycle(k: int, path: AlmostBluePath) -> GeneratorBuilder:
    """Bend an almost-blue path on t >= 2k vertices into a blue cycle.

    One probe repairs or sidesteps the red edge, then a chord attempt at the
    midpoint either closes directly or leaves two red spokes that feed
    red_glue. The cycle keeps at least (t-k+1)/2 vertices; at most k+1
    rounds, red refusals ending in a red C_k.
    """
    h = _half(k)
    t = path.order
    _check(k >= 3 and k % 2 == 1, "path_to_cycle needs odd k >= 3")
    _check(t >= 2 * k, "path must have at least 2k vertices")

    def close_within(g: HostGraph, p: tuple[int, ...], pivot: int) -> StrategyGen:
        # pivot is red-adjacent to both ends of the all-blue path p
        head = tuple(reversed(p[:h]))
        tail = tuple(p[-h:])
        splice = yield from red_glue(k, head, tail, pivot).factory(g, None)
        return Ring(tuple(splice) + tuple(reversed(p[h : len(p) - h])))

    def run(g: HostGraph, prev: object) -> StrategyGen:
        if path.red_at is None:
            p = path.vertices
        else:
            # the short piece's red endpoint doubles as pivot; probe it
            # against the long piece's far end
            a, c = path.stretches()
            if len(a) >= len(c):
                long_far_in, pivot = a, c[0]
            else:
                long_far_in, pivot = tuple(reversed(c)), a[-1]
            reply = yield from _probe(g, Edge(pivot, long_far_in[0]), "bend:mend")
            if reply is Color.RED:
                # pivot now red-touches both ends of the long piece
                return (yield from close_within(g, long_far_in, pivot))
            p = tuple(reversed(c)) + a if len(a) >= len(c) else a + tuple(reversed(c))
        mid = len(p) // 2
        c1 = yield from _probe(g, Edge(p[0], p[mid - 1]), "bend:chord")
        if c1 is Color.BLUE:
            return Ring(p[:mid])
        c2 = yield from _probe(g, Edge(p[mid - 1], p[-1]), "bend:chord")
        if c2 is Color.BLUE:
            return Ring(p[mid - 1 :])
        return (yield from close_within(g, p, p[mid - 1]))

    return GeneratorBuilder(f"bend[{k}]", k + 1, run, provides=Ring)

# -- red matching into dragon tails --------------------------------------


def _interleave(blue: list[int], rungs: list[int]) -> tuple[int, ...]:
    out = [blue[0]]
    for w, u in zip(rungs, blue[1:]):
        out.extend((w, u))
    return tuple(out)


def matching_to_tail(
    k: int,
    matching: tuple[tuple[int, int], ...],
    starts: tuple[int, int],
    wish_goal: int = 2,
) -> GeneratorBuilder:
    """Convert a red matching into a dragon tail or into wish triangles.

    From a start vertex, each matching edge is probed at both ends from the
    current tail tip: mixed replies extend the tail by one blue edge plus a
    red rung, same-colored replies close a wish triangle and the tip retires
    (the second start vertex covers a triangle at the bare root). Exhausting
    all m edges leaves a tail of at least m-2 blue edges; collecting
    wish_goal triangles stops early with the surviving path. Two rounds per
    edge, so at most 2m in total.
    """
    _check(k >= 3 and k % 2 == 1, "matching_to_tail needs odd k >= 3")
    _check(len(matching) >= 1, "matching must not be empty")
    _check(1 <= wish_goal <= 2, "wish_goal must be 1 or 2")
    mvs = [v for e in matching for v in e]
    _check(len(set(mvs)) == len(mvs), "matching edges must be disjoint")
    _check(not set(starts) & set(mvs), "start vertices must avoid the matching")
    _check(starts[0] != starts[1], "start vertices must differ")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        for a, b in matching:
            assert g.color_of(Edge(a, b)) is Color.RED, "matching edge must be red"
        blue = [starts[0]]
        rungs: list[int] = []
        spare = [starts[1]]
        wishes: list[WishTriangle] = []
        for i, (v, w) in enumerate(matching):
            tip = blue[-1]
            c1 = yield from _probe(g, Edge(tip, v), f"match:{i}")
            c2 = yield from _probe(g, Edge(tip, w), f"match:{i}")
            if c1 is not c2:
                nxt, rung = (v, w) if c1 is Color.BLUE else (w, v)
                blue.append(nxt)
                rungs.append(rung)
                continue
            if c1 is Color.RED:
                if k == 3:
                    raise RedCycleFound(cycle_witness([tip, v, w], WitnessKind.RED_CYCLE))
                wishes.append(WishTriangle(tip, (v, w), WishPattern.ALL_RED))
            else:
                wishes.append(WishTriangle(tip, (v, w), WishPattern.RED_BLUE_BLUE))
            if len(blue) == 1:
                # the bare root joined a triangle; restart from the spare
                if spare:
                    blue = [spare.pop()]
                    rungs = []
                else:
                    blue = []
            else:
                blue.pop()
                rungs.pop()
            if len(wishes) >= wish_goal:
                return WishHarvest(tuple(wishes), tuple(blue))
        assert len(blue) >= 2, "exhaustion below goal always leaves a tail"
        return DragonTail(tuple(blue), _interleave(blue, rungs))

    budget = 2 * len(matching)
    return GeneratorBuilder(f"match-tail[{k}]", budget, run, provides=(WishHarvest, DragonTail))


def tail_to_cycle(k: int, tail: DragonTail) -> GeneratorBuilder:
    """Close a dragon tail of m > k blue edges into a blue cycle.

    A chord from the root is binary-searched along the blue path; the flip
    point either yields a long chord cycle directly or localizes enough red
    edges that a handful of repair probes must go blue or complete a red C_k
    through the zigzag. The cycle has more than m-k and at most m+4 vertices
    and always contains the tail's first blue edge.
    """
    m = tail.length
    _check(k >= 3 and k % 2 == 1, "tail_to_cycle needs odd k >= 3")
    _check(m > k, "tail must have more than k blue edges")
    u = tail.blue

    def red_cycle(vertices: list[int]) -> RedCycleFound:
        return RedCycleFound(cycle_witness(vertices, WitnessKind.RED_CYCLE))

    def run(g: HostGraph, prev: object) -> StrategyGen:
        tail.verify_colors(g)
        w = tail.rung
        c = yield from _probe(g, Edge(u[0], u[m]), "tail:close")
        if c is Color.BLUE:
            return Ring(u)
        lo, hi = 1, m
        while hi - lo > 1:
            mid = (lo + hi) // 2
            c = yield from _probe(g, Edge(u[0], u[mid]), "tail:search")
            if c is Color.BLUE:
                lo = mid
            else:
                hi = mid
        j = lo
        if j >= max(m - k, 2):
            return Ring(u[: j + 1])
        c = yield from _probe(g, Edge(u[j + 1], u[m]), "tail:skip")
        if c is Color.RED:
            s = m - (k - 3) // 2
            c = yield from _probe(g, Edge(u[0], u[s]), "tail:deep")
            if c is Color.RED:
                zig = [u[s]]
                for i in range(s + 1, m + 1):
                    zig.extend((w(i), u[i]))
                raise red_cycle(zig + [u[j + 1], u[0]])
            return Ring(u[: s + 1])
        if k >= 7:
            t = j + (k - 3) // 2
            c = yield from _probe(g, Edge(u[j - 1], u[t]), "tail:detour")
            if c is Color.RED:
                zig = [u[j - 1]]
                for i in range(j, t + 1):
                    zig.extend((w(i), u[i]))
                raise red_cycle(zig)
            return Ring(u[:j] + u[t : m + 1] + (u[j + 1], u[j]))
        c = yield from _probe(g, Edge(u[j - 1], u[j + 2]), "tail:detour")
        if c is Color.BLUE:
            return Ring(u[:j] + u[j + 2 : m + 1] + (u[j + 1], u[j]))
        if k == 5:
            c1 = yield from _probe(g, Edge(u[j - 1], w(j + 1)), "tail:mend")
            if c1 is Color.RED:
                raise red_cycle([u[j - 1], w(j + 1), u[j + 1], w(j + 2), u[j + 2]])
            c2 = yield from _probe(g, Edge(w(j + 1), u[j + 2]), "tail:mend")
            if c2 is Color.RED:
                raise red_cycle([w(j + 1), u[j + 2], u[j - 1], w(j), u[j]])
            return Ring(u[:j] + (w(j + 1),) + u[j + 2 : m + 1] + (u[j + 1], u[j]))
        # k == 3: four mend probes, each refusal closing a red triangle
        c1 = yield from _probe(g, Edge(u[j - 1], w(j + 2)), "tail:mend")
        if c1 is Color.RED:
            raise red_cycle([u[j - 1], w(j + 2), u[j + 2]])
        c2 = yield from _probe(g, Edge(w(j), u[j + 2]), "tail:mend")
        if c2 is Color.RED:
            raise red_cycle([w(j), u[j + 2], u[j - 1]])
        c3 = yield from _probe(g, Edge(w(j), w(j + 1)), "tail:mend")
        if c3 is Color.RED:
            raise red_cycle([w(j), w(j + 1), u[j]])
        c4 = yield from _probe(g, Edge(w(j + 1), w(j + 2)), "tail:mend")
        if c4 is Color.RED:
            raise red_cycle([w(j + 1), w(j + 2), u[j + 1]])
        return Ring(
            u[:j]
            + (w(j + 2), w(j + 1), w(j))
            + u[j + 2 : m + 1]
            + (u[j + 1], u[j])
        )

    budget = ceil_log2(m) + 8
    return GeneratorBuilder(f"tail-cycle[{k},{m}]", budget, run, provides=Ring)


def _orient_from(cycle: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Rotate (and flip if needed) a cyclic sequence to start with a, b."""
    n = len(cycle)
    for i in range(n):
        if cycle[i] != a:
            continue
        if cycle[(i + 1) % n] == b:
            return cycle[i:] + cycle[:i]
        if cycle[i - 1] == b:
            rolled = cycle[i:] + cycle[:i]
            return rolled[:1] + tuple(reversed(rolled[1:]))
    raise ValueError("edge not on cycle")


def dragon_close(k: int, dragon: Dragon) -> GeneratorBuilder:
    """Merge a dragon's cycle with a cycle closed out of its tail.

    tail_to_cycle always returns a cycle through the tail's first blue edge;
    stitching it to the dragon's cycle along that shared edge (or through
    the bypass) costs no further rounds. The merged cycle has
    v(cycle)+v(closed)-2 vertices, one more with a bypass.
    """
    _check(k >= 3 and k % 2 == 1, "dragon_close needs odd k >= 3")
    u0, u1 = dragon.tail.blue[0], dragon.tail.blue[1]

    def run(g: HostGraph, prev: object) -> StrategyGen:
        closed = yield from tail_to_cycle(k, dragon.tail).factory(g, None)
        cp = _orient_from(closed.vertices, u0, u1)
        if dragon.bypass is None:
            cyc = _orient_from(dragon.cycle, u0, u1)
            # walk the big cycle u_1..u_0 one way, u_0..u_1 back the other
            return Ring(cyc[1:] + (u0,) + tuple(reversed(cp[2:])))
        x = dragon.bypass.other(u1)
        assert g.color_of(dragon.bypass) is Color.BLUE, "bypass edge must be blue"
        cyc = _orient_from(dragon.cycle, u0, x)
        return Ring(cyc[:1] + tuple(reversed(cyc[1:])) + cp[1:])

    m = dragon.tail.length
    budget = ceil_log2(m) + 8
    return GeneratorBuilder(f"dragon[{k}]", budget, run, provides=Ring)


# -- stretching a path to order ------------------------------------------


def longer_path(k: int, path: AlmostBluePath, wish: WishTriangle, s: int) -> GeneratorBuilder:
    """Stretch an almost-blue path by s vertices into an all-blue path.

    The longer blue stretch is extended directly; if Painter stonewalls, the
    refusals bank a red path of 2k-4 edges, an icicle forest regrows the blue
    mass (the other stretch rides along as the donated special), the red bank
    threads the forest down to two paths, and the wish splices those into
    one. Output has exactly path.order + s vertices; at most 2s + 12k rounds.
    """
    t = path.order
    target = t + s
    _check(k >= 3 and k % 2 == 1, "longer_path needs odd k >= 3")
    _check(s >= 1, "extension must add at least one vertex")
    _check(not set(wish.vertices()) & set(path.vertices), "wish must avoid the path")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        pieces = path.stretches()
        if len(pieces) == 1:
            head, rest = pieces[0], ()
        else:
            a, c = pieces
            ra, rc = tuple(reversed(a)), c  # red-edge endpoint first
            head, rest = (ra, rc) if len(ra) >= len(rc) else (rc, ra)
        kb = len(head) + s + k - 1
        res = yield from extend_blue_or_red(2 * k - 4, kb, start=head).factory(g, None)
        if res.kind == "blue":
            comps = (res.pair.blue, rest) if rest else (res.pair.blue,)
            glued = yield from wish_glue_forest(k, LineForest(comps), wish).factory(g, None)
            return tuple(glued[:target])
        seed = res.pair.blue or tuple(allocate_free_vertices(g, 1))
        forest = yield from icicle_grow(
            k, target + _half(k), seed, rest or None
        ).factory(g, None)
        if len(forest) > 2:
            forest = yield from join_to_two(k, forest, res.pair.red).factory(g, None)
        glued = yield from wish_glue_forest(k, forest, wish).factory(g, None)
        return tuple(glued[:target])

    return GeneratorBuilder(f"stretch[{k},+{s}]", 2 * s + 12 * k, run, provides=tuple)


# -- farming fresh pairs ---------------------------------------------------


def _stage_one(
    g: HostGraph,
    k: int,
    cap: int,
    need: int = 2,
    path_target: Optional[int] = None,
) -> StrategyGen:
    """Farm fresh pairs into a red matching, an almost-blue path and wishes.

    Each iteration hosts exactly one fresh pair: a red reply banks a matching
    edge, a blue one feeds the path. Returns a (reason, matching, path,
    wishes) tuple; reason is "wishes" once `need` triangles are banked,
    "stretch" once an all-blue run reaches path_target, else "cap" when cap
    vertices have been hosted.
    """
    matching: list[tuple[int, int]] = []
    path: Optional[AlmostBluePath] = None
    wishes: list[WishTriangle] = []
    host = 0
    while host < cap:
        u, v = allocate_free_vertices(g, 2)
        host += 2
        c = yield Edge(u, v), "farm"
        if c is Color.RED:
            matching.append((u, v))
            continue
        if path is None:
            path = AlmostBluePath((u, v))
        else:
            path, tri = yield from _extend_blue(g, k, path, (u, v))
            if tri is not None:
                wishes.append(tri)
                if len(wishes) >= need:
                    return "wishes", tuple(matching), path, tuple(wishes)
        if path_target is not None and path is not None:
            if max(len(p) for p in path.stretches()) >= path_target:
                return "stretch", tuple(matching), path, tuple(wishes)
    return "cap", tuple(matching), path, tuple(wishes)


# -- the ear hunt ----------------------------------------------------------


def _hunt(
    g: HostGraph,
    k: int,
    n: int,
    goal: str,
    ring0: Ring,
    matching: tuple[tuple[int, int], ...],
    wishes: tuple[WishTriangle, ...],
) -> StrategyGen:
    """Grow a blue cycle by ears, cashing refusals as wishes or a dragon.

    Two anchor vertices on the cycle meet each unused matching edge: double
    blue inserts an ear, one red banks a wish and taints the anchors, double
    red roots a dragon tail whose growth reuses the matching probes. Returns
    ("ring", vertices) or ("path", vertices) on an outright win, else
    ("wishes", wishes, salvage) once two wishes are banked. Exhaustion can
    only happen with a live tail, which the dragon splice converts into a
    cycle (or, for a path goal, a walk down the tail) of at least n vertices.
    """
    cyc = list(ring0.vertices)
    taint = 0
    tail: list[int] = []
    rungs: list[int] = []
    bank = list(wishes)

    def won() -> object:
        return ("ring", tuple(cyc)) if goal == "cycle" else ("path", tuple(cyc[:n]))

    if len(cyc) >= n:
        return won()
    for idx, (v, w) in enumerate(matching):
        if not tail:
            inner, outer = cyc[taint], cyc[taint + 1]
            c1 = yield from _probe(g, Edge(inner, v), f"hunt:{idx}")
            c2 = yield from _probe(g, Edge(outer, v), f"hunt:{idx}")
            if c1 is Color.BLUE and c2 is Color.BLUE:
                cyc.insert(taint + 1, v)
                if len(cyc) >= n:
                    return won()
            elif c1 is Color.RED and c2 is Color.RED:
                tail = [outer, inner]
                rungs = [v]
            else:
                apex, redv = (outer, inner) if c1 is Color.RED else (inner, outer)
                bank.append(WishTriangle(apex, (redv, v), WishPattern.RED_BLUE_BLUE))
                taint += 2
                if len(bank) >= 2:
                    return "wishes", tuple(bank), tuple(cyc[taint:])
                assert len(cyc) - taint >= 2, "anchors must survive a taint step"
            continue
        tip = tail[-1]
        c1 = yield from _probe(g, Edge(tip, v), f"hunt:{idx}")
        c2 = yield from _probe(g, Edge(tip, w), f"hunt:{idx}")
        if c1 is not c2:
            nxt, rung = (v, w) if c1 is Color.BLUE else (w, v)
            tail.append(nxt)
            rungs.append(rung)
            continue
        if c1 is Color.RED:
            if k == 3:
                raise RedCycleFound(cycle_witness([tip, v, w], WitnessKind.RED_CYCLE))
            bank.append(WishTriangle(tip, (v, w), WishPattern.ALL_RED))
        else:
            bank.append(WishTriangle(tip, (v, w), WishPattern.RED_BLUE_BLUE))
        tail.pop()
        rungs.pop()
        if len(bank) >= 2:
            return "wishes", tuple(bank), tuple(reversed(tail)) + tuple(cyc[taint + 2 :])
        if len(tail) == 1:
            # the cap itself fell; its root keeps the taint arc contiguous
            taint += 1
            tail = []
            rungs = []
            assert len(cyc) - taint >= 2, "anchors must survive a cap loss"
    assert tail, "ear growth must reach the target before edges run out"
    dt = DragonTail(tuple(tail), _interleave(tail, rungs))
    if goal == "path":
        oriented = _orient_from(tuple(cyc), tail[0], tail[1])
        return "path", tuple(reversed(tail)) + tuple(reversed(oriented[2:]))
    ring = yield from dragon_close(k, Dragon(tuple(cyc), dt)).factory(g, None)
    return "ring", tuple(ring.vertices)


# -- endgames --------------------------------------------------------------


def _spendable(g: HostGraph, path: Optional[AlmostBluePath]) -> AlmostBluePath:
    if path is not None:
        return path
    return AlmostBluePath(tuple(allocate_free_vertices(g, 1)))


def _two_wish_path(
    g: HostGraph,
    k: int,
    n: int,
    wishes: tuple[WishTriangle, ...],
    path: Optional[AlmostBluePath],
) -> StrategyGen:
    """Finish a blue path on exactly n vertices from one banked wish."""
    base = _spendable(g, path)
    longest = max(base.stretches(), key=len)
    if len(longest) >= n:
        return longest[:n]
    t1 = min(base.order, n - 1)
    window = _prefix(base, t1)
    return (yield from longer_path(k, window, wishes[0], n - t1).factory(g, None))


def _two_wish_cycle(
    g: HostGraph,
    k: int,
    n: int,
    wishes: tuple[WishTriangle, ...],
    path: Optional[AlmostBluePath],
) -> StrategyGen:
    """Finish a blue cycle on n to n+(k-1)//2+3 vertices from two wishes."""
    h = _half(k)
    target = n + h
    base = _spendable(g, path)
    longest = max(base.stretches(), key=len)
    if len(longest) >= target:
        return (
            yield from wish_close_cycle(k, longest[:target], wishes[0]).factory(g, None)
        )
    t1 = min(base.order, target - 1)
    window = _prefix(base, t1)
    stretched = yield from longer_path(k, window, wishes[0], target - t1).factory(g, None)
    return (yield from wish_close_cycle(k, stretched, wishes[1]).factory(g, None))


def _prefix(path: AlmostBluePath, t1: int) -> AlmostBluePath:
    red = path.red_at if path.red_at is not None and path.red_at <= t1 - 2 else None
    return AlmostBluePath(path.vertices[:t1], red)


# -- full games ------------------------------------------------------------


def odd_cycle(k: int, n: int) -> GeneratorBuilder:
    """Force a blue cycle on exactly n vertices, or a red C_k, for odd k.

    Stage one farms 2n+8k fresh vertices into a matching, an almost-blue
    path and wish triangles; the endgame then goes through whichever of the
    two-wish splice, the lone bend, the matching-to-tail conversion or the
    ear hunt the banked material supports, and overshoot is shortened away.
    Stays under 3n + ceil(log2 n) + 50k rounds.
    """
    _check(k >= 3 and k % 2 == 1, "odd cycle targets need odd k >= 3")
    _check(n >= 8 * k, "cycle target needs n >= 8k")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        cap = 2 * n + 8 * k
        reason, matching, path, wishes = yield from _stage_one(g, k, cap)
        if reason == "wishes":
            ring = yield from _two_wish_cycle(g, k, n, wishes, path)
        else:
            t = path.order if path is not None else 0
            if t >= 2 * n + k:
                ring = yield from path_to_cycle(k, path).factory(g, None)
            elif t < max(2 * k, k + 7):
                starts = allocate_free_vertices(g, 2)
                res = yield from matching_to_tail(
                    k, matching, tuple(starts), wish_goal=2 - len(wishes)
                ).factory(g, None)
                if isinstance(res, WishHarvest):
                    base = AlmostBluePath(res.path) if res.path else None
                    ring = yield from _two_wish_cycle(
                        g, k, n, wishes + res.wishes, base
                    )
                else:
                    ring = yield from tail_to_cycle(k, res).factory(g, None)
            else:
                ring0 = yield from path_to_cycle(k, path).factory(g, None)
                out = yield from _hunt(g, k, n, "cycle", ring0, matching, wishes)
                if out[0] == "ring":
                    ring = Ring(out[1])
                else:
                    _, bank, salvage = out
                    base = AlmostBluePath(salvage) if salvage else None
                    ring = yield from _two_wish_cycle(g, k, n, bank, base)
        assert len(ring) >= n, "every endgame lands at or above the target"
        return (yield from shorten_full(k, n, len(ring) - n).factory(g, ring))

    budget = 3 * n + ceil_log2(n) + 50 * k
    return GeneratorBuilder(f"odd-cycle[{k},{n}]", budget, run, provides=Witness)


def odd_path(k: int, n: int) -> GeneratorBuilder:
    """Force a blue path on exactly n vertices, or a red C_k, for odd k.

    Same farming stage as the cycle game, but it exits as soon as one blue
    stretch reaches n, one wish suffices for the splice, and no binary
    search is ever needed, which keeps the round count under 3n + 50k.
    """
    _check(k >= 3 and k % 2 == 1, "odd path targets need odd k >= 3")
    _check(n >= 1, "path target needs at least one vertex")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        if n == 1:
            # Any vertex of the infinite host is a blue path already.
            return Witness(WitnessKind.BLUE_PATH, (), 1)
        cap = 2 * n + 8 * k
        reason, matching, path, wishes = yield from _stage_one(
            g, k, cap, path_target=n
        )
        if reason == "stretch":
            longest = max(path.stretches(), key=len)
            return _path_witness(longest[:n])
        if reason == "wishes":
            found = yield from _two_wish_path(g, k, n, wishes, path)
            return _path_witness(tuple(found))
        t = path.order if path is not None else 0
        if t < max(2 * k, k + 7):
            starts = allocate_free_vertices(g, 2)
            res = yield from matching_to_tail(
                k, matching, tuple(starts), wish_goal=2 - len(wishes)
            ).factory(g, None)
            if isinstance(res, WishHarvest):
                base = AlmostBluePath(res.path) if res.path else None
                found = yield from _two_wish_path(g, k, n, wishes + res.wishes, base)
                return _path_witness(tuple(found))
            assert len(res.blue) >= n, "an exhausted tail outgrows the target"
            return _path_witness(res.blue[:n])
        ring0 = yield from path_to_cycle(k, path).factory(g, None)
        out = yield from _hunt(g, k, n, "path", ring0, matching, wishes)
        if out[0] == "path":
            assert len(out[1]) >= n, "hunt path exits carry at least n vertices"
            return _path_witness(out[1][:n])
        _, bank, salvage = out
        base = AlmostBluePath(salvage) if salvage else None
        found = yield from _two_wish_path(g, k, n, bank, base)
        return _path_witness(tuple(found))

    budget = 3 * n + 50 * k
    return GeneratorBuilder(f"odd-path[{k},{n}]", budget, run, provides=Witness)
