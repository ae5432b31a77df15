"""Builder strategies for an even red-cycle target.

The route to a blue C_n when k is even: bank a short red path while a blue
path grows for free, spread the blue structure into a small forest of paths
(the icicle machinery), thread the forest components together through the
banked red path, knot the last two components into one long path, then bend
that path's ends together and shorten the resulting cycle to size.

Red replies never go to waste. Every probe either extends blue structure or
feeds a red-path threat, and once enough red accumulates, each refusal to
join blue paths walks straight into a red cycle on k vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import GeneratorBuilder, PreconditionViolated, RedCycleFound, StrategyGen
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


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionViolated(msg)


def _probe(g: HostGraph, edge: Edge, tag: str):
    """Ask Painter about an edge, reading it for free if already colored.

    Earlier stages leave stray colored edges between their leftover vertices
    (banked link probes, refused join offers), and a later stage may want the
    same pair. The color is information either way; only fresh edges cost a
    round.
    """
    if g.is_colored(edge):
        return g.color_of(edge)
    return (yield (edge, tag))


@dataclass(frozen=True)
class LineForest:
    """Vertex-disjoint blue paths, each stored as its vertex sequence."""

    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for p in self.paths:
            if not p:
                raise ValueError("a forest component cannot be empty")
            for v in p:
                if v in seen:
                    raise ValueError("forest components share a vertex")
                seen.add(v)

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def order(self) -> int:
        """Total vertex count over all components."""
        return sum(len(p) for p in self.paths)


@dataclass
class IcicleState:
    """A red spine with a blue path hanging off each spine vertex.

    ``icicles[i]`` is the blue path rooted at ``spine[i]`` (its first
    vertex), possibly just the spine vertex itself. The separate special
    path feeds the spine; its probe endpoint sits at index 0. The score is
    the bookkeeping quantity that rises every round and certifies the round
    bound.
    """

    spine: list[int]
    icicles: list[list[int]]
    special: list[int]

    @property
    def t(self) -> int:
        """Vertices held by the spine-plus-icicles part."""
        return sum(len(ic) for ic in self.icicles)

    @property
    def score(self) -> int:
        j = len(self.special)
        blue_edges = max(j - 1, 0) + sum(len(ic) - 1 for ic in self.icicles)
        return self.t + j + blue_edges

    def check(self, k: int) -> None:
        """Assert the maintained shape claims; cheap, used every round."""
        a = len(self.spine)
        assert 1 <= a <= k and a == len(self.icicles)
        assert all(ic[0] == v for v, ic in zip(self.spine, self.icicles))
        if a >= k - 1:
            assert len(self.special) == 1, "special must stay trivial near the cap"
        if a == k:
            assert len(self.icicles[-1]) == 1, "top icicle must be trivial at the cap"

    def as_forest(self) -> LineForest:
        """The blue paths held so far; a still-bare special is dropped."""
        paths = [tuple(ic) for ic in self.icicles]
        if len(self.special) >= 2:
            paths.append(tuple(self.special))
        return LineForest(tuple(paths))


def _icicle(
    g: HostGraph,
    k: int,
    target: int,
    start: tuple[int, ...],
    special: tuple[int, ...] | None = None,
) -> StrategyGen:
    seed = list(special) if special else allocate_free_vertices(g, 1)
    st = IcicleState([start[0]], [list(start)], seed)
    # score bumps gained without spending a round (re-roots, resurfaced red
    # edges); surfaced in the next tag so score bookkeeping stays auditable
    jumps = 0
    while st.score < 2 * target:
        st.check(k)
        closing = len(st.spine) == k
        edge = Edge(st.spine[-1], st.spine[0] if closing else st.special[0])
        if g.is_colored(edge):
            # a forgotten spine edge resurfacing between the current top and
            # a special endpoint: red for free, no round spent
            c = g.color_of(edge)
            assert c is Color.RED, "blue edges never stray outside the structure"
            jumps += 1
        else:
            tag = f"icicle:s={st.score}" + (f":jump{jumps}" if jumps else "")
            jumps = 0
            c = yield edge, tag
        if closing:
            if c is Color.RED:
                raise RedCycleFound(cycle_witness(st.spine, WitnessKind.RED_CYCLE))
            # the bottom icicle swings up to hang off the top spine vertex;
            # the bottom red edge is forgotten
            merged = [st.spine[-1]] + st.icicles[0]
            st.spine = st.spine[1:]
            st.icicles = st.icicles[1:-1] + [merged]
        elif c is Color.RED:
            # the probed endpoint becomes the new spine top, carrying the
            # whole special as its icicle; reseed the special
            st.spine.append(st.special[0])
            st.icicles.append(st.special)
            st.special = allocate_free_vertices(g, 1)
        else:
            # drop the top red edge; the top icicle joins the special
            # through the new blue edge
            merged = st.special[::-1] + st.icicles.pop()
            st.spine.pop()
            if st.spine:
                st.special = merged
            else:
                # the spine is gone: re-root the merged path as a fresh
                # one-vertex spine and reseed, a free score bump
                st.spine = [merged[0]]
                st.icicles = [merged]
                st.special = allocate_free_vertices(g, 1)
                jumps += 1
    return st.as_forest()


def icicle_grow(
    k: int,
    n_target: int,
    start: tuple[int, ...],
    special: tuple[int, ...] | None = None,
) -> GeneratorBuilder:
    """Grow one blue path into a blue forest of at most k paths.

    The forest ends up with at least ``n_target`` vertices in total. The
    score starts at twice the seed path's size and rises by at least one per
    round toward twice the target, so at most 2*(n_target - m) rounds are
    spent; a red reply to the spine-closing probe is instead a red C_k.

    A second blue path may be donated as the initial special. Its vertices
    count toward the score immediately (the budget shrinks by 2*(len-1)), and
    it is absorbed into the structure by the usual moves, so a caller holding
    two paths pays only for the genuinely new growth.
    """
    _check(k >= 3, "k must be at least 3")
    _check(len(start) >= 1, "seed path must not be empty")
    if special is not None:
        _check(len(special) >= 1, "a donated special must not be empty")
        _check(not set(start) & set(special), "seed and special must be disjoint")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        return (yield from _icicle(g, k, n_target, start, special))

    donated = max(len(special or ()) - 1, 0)
    budget = max(0, 2 * (n_target - len(start) - donated))
    return GeneratorBuilder(f"icicle[{k},{n_target}]", budget, run, provides=LineForest)


def _join_to_two(
    g: HostGraph, k: int, forest: LineForest, spine: tuple[int, ...]
) -> StrategyGen:
    comps = [list(p) for p in forest.paths]
    block = 0
    while len(comps) > 2:
        comps.sort(key=lambda c: (len(c), c[0]))
        trio = comps[:3]
        near, far = spine[block], spine[block + k - 2]
        block += 1
        tag = f"join2:{block}"

        replies: list[Color] = []
        for comp in trio:
            c = yield from _probe(g, Edge(comp[-1], near), tag)
            replies.append(c)
            if replies.count(Color.BLUE) == 2:
                break
        blue = [comp for comp, c in zip(trio, replies) if c is Color.BLUE]
        if len(blue) >= 2:
            a, b = blue[0], blue[1]
            junction = near
        else:
            # two of the offers came back red; refusing both rescue edges
            # would close a red cycle through the spine segment
            a, b = [comp for comp, c in zip(trio, replies) if c is Color.RED][:2]
            segment = spine[block - 1 : block + k - 2]
            for comp in (a, b):
                c = yield from _probe(g, Edge(comp[-1], far), tag)
                if c is Color.RED:
                    raise RedCycleFound(
                        cycle_witness([comp[-1]] + list(segment), WitnessKind.RED_CYCLE)
                    )
            junction = far
        merged = a + [junction] + b[::-1]
        comps.remove(a)
        comps.remove(b)
        comps.append(merged)
    return LineForest(tuple(tuple(c) for c in comps))


def join_to_two(k: int, forest: LineForest, redpath: tuple[int, ...]) -> GeneratorBuilder:
    """Merge a blue forest down to two paths, riding a banked red path.

    Each merge block offers one red-path vertex to three component ends; two
    blue replies join two components through it, and otherwise the two red
    repliers are offered a vertex k-2 steps down the red path, which Painter
    must color blue on pain of a red C_k. Five rounds per block, one block
    per lost component. The junction vertices come out of the red path, so
    the result grows by one vertex per merge.
    """
    t = len(forest)
    _check(k >= 3, "k must be at least 3")
    _check(2 <= t <= k, "forest must bring 2..k components")
    _check(len(redpath) >= k + t - 4, "red path too short to thread the merges")
    _check(
        not set(redpath) & {v for p in forest.paths for v in p},
        "red path must avoid the forest",
    )

    def run(g: HostGraph, prev: object) -> StrategyGen:
        return (yield from _join_to_two(g, k, forest, redpath))

    return GeneratorBuilder(f"join2[{k},t={t}]", 5 * (t - 2), run, provides=LineForest)


def _knot(g: HostGraph, k: int, u_seg: list[int], v_seg: list[int]) -> StrategyGen:
    half = k // 2
    ring: list[int] = []
    for i in range(half):
        ring.append(u_seg[i])
        ring.append(v_seg[half - 1 - i])
    for idx in range(k):
        a, b = ring[idx], ring[(idx + 1) % k]
        c = yield from _probe(g, Edge(a, b), "knot")
        if c is Color.BLUE:
            i = u_seg.index(a if a in u_seg else b)
            j = v_seg.index(b if a in u_seg else a)
            return list(reversed(u_seg[i:])) + v_seg[j:]
    raise RedCycleFound(cycle_witness(ring, WitnessKind.RED_CYCLE))


def knot_join(k: int, P: tuple[int, ...], Q: tuple[int, ...]) -> GeneratorBuilder:
    """Join two blue half-paths end to end, or collect a red C_k.

    P and Q each list k/2 consecutive vertices of a blue path; index 0 is
    the endpoint that survives into the joined path. The k candidate edges
    zigzag between the two sides and form a single cycle over P u Q, so an
    all-red reply closes a red C_k, while the first blue reply yields a blue
    path from P[0] to Q[0] keeping at least k/2 of the vertices.
    """
    _check(k >= 4 and k % 2 == 0, "knot_join needs even k >= 4")
    _check(len(P) == k // 2 and len(Q) == k // 2, "each side brings exactly k/2 vertices")
    _check(not set(P) & set(Q), "the two sides must be vertex disjoint")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        joined = yield from _knot(g, k, list(reversed(P)), list(reversed(Q)))
        return tuple(joined)

    return GeneratorBuilder(f"knot[{k}]", k, run, provides=tuple)


def join_two_paths(k: int, forest: LineForest) -> GeneratorBuilder:
    """Collapse a blue forest of at most two paths into one blue path.

    Either one component is too short to matter and the other already serves,
    or the knot is applied to the two k/2-vertex end segments. Costs at most
    k rounds and k/2 vertices.
    """
    half = k // 2
    _check(k >= 4 and k % 2 == 0, "join_two_paths needs even k >= 4")
    _check(1 <= len(forest) <= 2, "forest must have one or two components")
    _check(forest.order > half, "forest must bring more than k/2 vertices")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        comps = sorted(forest.paths, key=len)
        if len(comps) == 1:
            return comps[0]
        small, big = comps
        if len(small) < half:
            return big
        # knot the two tail segments; both heads survive into the result
        joined = yield from _knot(
            g, k, list(reversed(small[-half:])), list(reversed(big[-half:]))
        )
        return tuple(small[:-half]) + tuple(joined) + tuple(reversed(big[:-half]))

    return GeneratorBuilder(f"join-two[{k}]", k, run, provides=tuple)


def even_path(k: int, n: int) -> GeneratorBuilder:
    """Force a blue path on exactly n vertices, or a red C_k.

    Pipeline: extend blue to n vertices outright or bank a red path of 2k-4
    edges, spread the leftover blue into an icicle forest totalling n+k/2
    vertices, thread the forest down to two paths through the red bank, knot
    those into one, and trim. Worst case stays under 2n+11k rounds.
    """
    _check(k >= 4 and k % 2 == 0, "even targets need even k >= 4")
    _check(n >= k, "path target below k vertices")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        half = k // 2
        res = yield from extend_blue_or_red(2 * k - 4, n - 1).factory(g, None)
        if res.kind == "blue":
            return res.pair.blue
        seed = res.pair.blue or tuple(allocate_free_vertices(g, 1))
        forest = yield from icicle_grow(k, n + half, seed).factory(g, None)
        if len(forest) > 2:
            forest = yield from join_to_two(k, forest, res.pair.red).factory(g, None)
        path = yield from join_two_paths(k, forest).factory(g, None)
        return tuple(path[:n])

    return GeneratorBuilder(f"even-path[{k},{n}]", 2 * n + 11 * k, run, provides=tuple)


def even_cycle(k: int, n: int) -> GeneratorBuilder:
    """Force a blue cycle on exactly n vertices, or a red C_k.

    Builds a blue path on n+k/2 vertices, knots its two end segments into a
    blue cycle that overshoots by at most k/2 vertices, then shortens. The
    whole run stays under 2n+20k rounds.
    """
    _check(k >= 4 and k % 2 == 0, "even cycle targets need even k >= 4")
    _check(n >= 3 * k, "cycle target needs n >= 3k")

    def run(g: HostGraph, prev: object) -> StrategyGen:
        half = k // 2
        path = yield from even_path(k, n + half).factory(g, None)
        head = tuple(reversed(path[:half]))
        tail = tuple(path[-half:])
        joined = yield from knot_join(k, head, tail).factory(g, None)
        ring = Ring(tuple(joined) + tuple(reversed(path[half : len(path) - half])))
        return (yield from shorten_full(k, n, len(ring) - n).factory(g, ring))

    return GeneratorBuilder(f"even-cycle[{k},{n}]", 2 * n + 20 * k, run, provides=Witness)
