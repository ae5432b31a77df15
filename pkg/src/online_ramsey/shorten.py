"""Trading a too-long blue cycle down to one of exactly the target length.

The joining strategies overshoot: they deliver a blue cycle on n+h vertices
for some small surplus h instead of the wanted C_n. The strategies here burn
that surplus off. Each probes chords of the current cycle so that a blue
reply yields a strictly shorter blue cycle while red replies accumulate into
a path one edge short of a red cycle on k vertices.

Surplus is removed in three gears: ``shorten_half`` cuts any surplus
k <= h <= 2n down to at most 3 in k+1 rounds, ``shorten_small`` walks a
small surplus down to at most 1 in h+k+4 rounds, and ``shorten_by_one``
clears the final extra vertex in k+2 rounds. ``shorten_full`` chains them
and never needs more than 3k+10 rounds in total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generator, Optional

from .engine import GeneratorBuilder, PreconditionViolated, RedCycleFound
from .graph import (
    Color,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    allocate_free_vertices,
    color_edge,
    cycle_witness,
)


@dataclass(frozen=True)
class Ring:
    """A blue cycle, tracked as its vertex sequence in cyclic order."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def witness(self) -> Witness:
        return cycle_witness(self.vertices, WitnessKind.BLUE_CYCLE)


def lay_blue_cycle(g: HostGraph, length: int) -> Ring:
    """Pre-seed a blue cycle on fresh vertices; consumes no rounds."""
    vs = allocate_free_vertices(g, length)
    for i in range(length):
        color_edge(g, Edge(vs[i - 1], vs[i]), Color.BLUE)
    return Ring(tuple(vs))


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionViolated(msg)


def _expect_ring(prev: object, length: int) -> Ring:
    if not isinstance(prev, Ring):
        raise PreconditionViolated(f"expected a Ring, got {type(prev).__name__}")
    if len(prev) != length:
        raise PreconditionViolated(f"expected a blue cycle on {length} vertices, got {len(prev)}")
    return prev


def _probe(g: HostGraph, edge: Edge, tag: str) -> Generator:
    """Ask Painter for the edge's color, reading it off if already colored.

    Wrap-around chord arithmetic can land on an edge that an earlier stage
    colored. Its color is then free information, not a round.
    """
    if g.is_colored(edge):
        return g.color_of(edge)
    return (yield (edge, tag))


# -- walks along the tracked cycle -------------------------------------


def _arc(ring: list, i: int, j: int) -> list:
    """ring[i..j] inclusive, walking forward with wraparound."""
    size = len(ring)
    i %= size
    j %= size
    if i <= j:
        return ring[i : j + 1]
    return ring[i:] + ring[: j + 1]


def _skip_one(ring: list, x: int) -> list:
    """Cycle that a blue chord (x, x+2) buys: everything except ring[x+1]."""
    return [ring[x % len(ring)]] + _arc(ring, x + 2, x - 1)


def _stitch_forward(ring: list, p: int, q: int) -> list:
    """Cycle from blue chords (p, p+q) and (p+2, p+q+1): drops ring[p+1]."""
    return [ring[p % len(ring)]] + _arc(ring, p + 2, p + q)[::-1] + _arc(ring, p + q + 1, p - 1)


def _stitch_backward(ring: list, x: int, y: int) -> list:
    """Cycle from blue chords (x, y) and (x+1, y+2): drops ring[y+1]."""
    return _arc(ring, y + 2, x) + _arc(ring, x + 1, y)[::-1]


# -- surplus of exactly one --------------------------------------------


def _by_one(g: HostGraph, ring_in: Ring, k: int) -> Generator:
    """From a blue cycle on n+1 vertices, force blue C_n or red C_k.

    Two anchor chords are probed first. Both red leaves them one even-step
    rail away from closing a red C_k; a blue anchor pairs with one follow-up
    chord that either completes a stitched C_n or starts the same rail.
    """
    ring = list(ring_in.vertices)
    size = len(ring)

    def ch(i: int, j: int) -> Edge:
        return Edge(ring[i % size], ring[j % size])

    def rail(start: int) -> Generator:
        # A red chord (start, start+2k-2) exists. Probe the even steps in
        # between: a blue step shortcuts two cycle edges, all red closes
        # the red cycle through the chord.
        for i in range(k - 1):
            c = yield from _probe(g, ch(start + 2 * i, start + 2 * i + 2), "by-one:rail")
            if c is Color.BLUE:
                return Ring(tuple(_skip_one(ring, start + 2 * i)))
        raise RedCycleFound(
            cycle_witness((ring[(start + 2 * i) % size] for i in range(k)), WitnessKind.RED_CYCLE)
        )

    if k % 2:
        anchor1, anchor2 = (0, 2 * k - 1), (k - 1, 3 * k - 4)
        follow1, follow2 = (2, 2 * k), (k - 3, 3 * k - 5)
        tops = list(range(0, k, 2))
        bots = list(range(2 * k - 1, 3 * k - 3, 2))
    else:
        anchor1, anchor2 = (0, 2 * k - 3), (k - 2, 3 * k - 5)
        follow1, follow2 = (1, 2 * k - 1), (k - 1, 3 * k - 3)
        tops = list(range(0, k - 1, 2))
        bots = list(range(2 * k - 3, 3 * k - 4, 2))

    c1 = yield from _probe(g, ch(*anchor1), "by-one:anchor")
    c2 = yield from _probe(g, ch(*anchor2), "by-one:anchor")

    if c1 is Color.RED and c2 is Color.RED:
        # Walk both anchored even-step rails; all red closes the cycle
        # tops -> bots reversed through the two red anchors.
        for run in (tops, bots):
            for a, b in zip(run, run[1:]):
                c = yield from _probe(g, ch(a, b), "by-one:rail")
                if c is Color.BLUE:
                    return Ring(tuple(_skip_one(ring, a)))
        raise RedCycleFound(
            cycle_witness((ring[x] for x in tops + bots[::-1]), WitnessKind.RED_CYCLE)
        )

    if c1 is Color.BLUE:
        c = yield from _probe(g, ch(*follow1), "by-one:pair")
        if c is Color.BLUE:
            if k % 2:
                return Ring(tuple(_stitch_forward(ring, 0, 2 * k - 1)))
            return Ring(tuple(_stitch_backward(ring, 0, 2 * k - 3)))
        return (yield from rail(follow1[0]))

    # c1 red, c2 blue.
    c = yield from _probe(g, ch(*follow2), "by-one:pair")
    if c is Color.BLUE:
        if k % 2:
            return Ring(tuple(_stitch_forward(ring, k - 3, 2 * k - 2)))
        return Ring(tuple(_stitch_backward(ring, k - 2, 3 * k - 5)))
    return (yield from rail(follow2[0]))


def shorten_by_one(k: int, n: int) -> GeneratorBuilder:
    """Blue cycle on n+1 vertices to blue C_n, or red C_k on the way.

    Needs n > 3k-3 so all probed chords stay distinct. At most k+2 rounds.
    """
    _check(k >= 3, "k must be at least 3")
    _check(n > 3 * k - 3, "shorten_by_one needs n > 3k-3")

    def run(g: HostGraph, prev: object) -> Generator:
        ring = _expect_ring(prev, n + 1)
        return (yield from _by_one(g, ring, k))

    return GeneratorBuilder(f"shorten-by-one[{k},{n}]", k + 2, run, requires=Ring, provides=Ring)


# -- small surplus ------------------------------------------------------


def _small(g: HostGraph, ring_in: Ring, k: int, n: int) -> Generator:
    """Walk a blue cycle longer than n+1 down to n or n+1 vertices.

    The cycle carries a red path along positions 0, 2, .., 2q. Stepping the
    path (case "step") either grows q or shrinks the cycle; once q hits k
    the path is folded back to k-2 or k-3 edges by two wide chords (case
    "fold") that Painter cannot color red without closing a red C_k.
    """
    ring = list(ring_in.vertices)
    q = 0
    while len(ring) >= n + 2:
        p = len(ring)
        if q < k or (q == k and p >= n + 6):
            c = yield from _probe(g, Edge(ring[2 * q], ring[2 * q + 2]), "small:step")
            if c is Color.RED:
                q += 1
            else:
                del ring[2 * q + 1]
        else:
            # q == k with p close to n, or q == k+1: fold the red path.
            fold = 0 if q == k else 1
            assert q == k + fold and (fold == 0 or p >= n + 6)
            c = yield from _probe(g, Edge(ring[0], ring[2 * k - 2]), f"small:fold{fold}")
            if c is Color.RED:
                raise RedCycleFound(cycle_witness(ring[0 : 2 * k - 1 : 2], WitnessKind.RED_CYCLE))
            lo, hi = 2 * fold + 2, 2 * k + 2 * fold
            c = yield from _probe(g, Edge(ring[lo], ring[hi]), f"small:fold{fold}")
            if c is Color.RED:
                raise RedCycleFound(cycle_witness(ring[lo : hi + 1 : 2], WitnessKind.RED_CYCLE))
            ring = ring[2 * k - 2 : lo - 1 : -1] + ring[hi:] + [ring[0]]
            q = k - 2 - fold
    return Ring(tuple(ring))


def shorten_small(k: int, n: int, h: int) -> GeneratorBuilder:
    """Blue cycle on n+h vertices to blue C_n or C_{n+1}, or red C_k.

    Needs n > 2k and h >= 1. At most h+k+4 rounds: the cycle loses a vertex
    or the red path grows every round, except for at most two fold episodes
    close to the target length.
    """
    _check(k >= 3, "k must be at least 3")
    _check(n > 2 * k, "shorten_small needs n > 2k")
    _check(h >= 1, "shorten_small needs surplus h >= 1")

    def run(g: HostGraph, prev: object) -> Generator:
        ring = _expect_ring(prev, n + h)
        return (yield from _small(g, ring, k, n))

    return GeneratorBuilder(f"shorten-small[{k},{n}+{h}]", h + k + 4, run, requires=Ring, provides=Ring)


# -- large surplus ------------------------------------------------------


def _half(g: HostGraph, ring_in: Ring, k: int, n: int, h: int) -> Generator:
    """Cut a surplus of h >= k down to h mod 2 plus at most 2, in k+1 rounds.

    Stage one anchors a red connector between two positions 2q apart, where
    q = h // 2. Stage two zig-zags between the q-spaced neighbourhoods of
    the connector's endpoints: any blue reply is a chord spanning close to
    2q positions (an immediate big cut), and all red closes a red C_k
    through the connector.
    """
    ring = list(ring_in.vertices)
    p = len(ring)
    q = h // 2
    m = k // 2

    def ch(i: int, j: int) -> Edge:
        return Edge(ring[i % p], ring[j % p])

    if q <= 1:
        return Ring(tuple(ring))  # already inside the target band

    if k % 2 == 0:
        c = yield from _probe(g, ch(0, 2 * q), "half:anchor")
        if c is Color.BLUE:
            return Ring(tuple([ring[0]] + ring[2 * q :]))
        connector: list[int] = []
    else:
        c1 = yield from _probe(g, ch(0, q), "half:anchor")
        c2 = yield from _probe(g, ch(q, 2 * q), "half:anchor")
        if c1 is Color.BLUE and c2 is Color.BLUE:
            return Ring(tuple([ring[0], ring[q]] + ring[2 * q :]))
        if c2 is Color.RED:
            if c1 is Color.BLUE:
                c3 = yield from _probe(g, ch(2 * q, 3 * q), "half:anchor")
                if c3 is Color.BLUE:
                    tail = ring[3 * q :] if 3 * q < p else []
                    return Ring(tuple([ring[0]] + ring[q : 2 * q + 1] + tail))
                # Red path q - 2q - 3q: rotate it onto positions 0 - q - 2q.
                ring = ring[q:] + ring[:q]
        else:
            # c1 red, c2 blue: mirror the probe to the other side of 0.
            c3 = yield from _probe(g, ch(p - q, 0), "half:anchor")
            if c3 is Color.BLUE:
                return Ring(tuple([ring[q]] + ring[2 * q : p - q + 1] + ring[:q]))
            ring = ring[p - q :] + ring[: p - q]
        connector = [ring[q]]

    # Zig-zag between positions {0..m-1} and {2q..2q+m-1}. Every chord in
    # the walk spans 2q-1, 2q or 2q+1 positions.
    zig_a = [j if j % 2 == 0 else 2 * q + j for j in range(m)]
    zig_b = [2 * q + j if j % 2 == 0 else j for j in range(m)]
    spots = zig_a + zig_b[::-1]
    for a, b in zip(spots, spots[1:]):
        c = yield from _probe(g, ch(a, b), "half:zig")
        if c is Color.BLUE:
            x, y = min(a, b), max(a, b)
            return Ring(tuple([ring[x]] + ring[y:] + ring[:x]))
    raise RedCycleFound(
        cycle_witness([ring[s] for s in spots] + connector, WitnessKind.RED_CYCLE)
    )


def shorten_half(k: int, n: int, h: int) -> GeneratorBuilder:
    """Blue cycle on n+h vertices to one on n+r .. n+r+2, r = h mod 2.

    Needs k <= h <= 2n. At most k+1 rounds regardless of h.
    """
    _check(k >= 3, "k must be at least 3")
    _check(n >= 3, "target cycles need at least 3 vertices")
    _check(k <= h <= 2 * n, "shorten_half needs k <= h <= 2n")

    def run(g: HostGraph, prev: object) -> Generator:
        ring = _expect_ring(prev, n + h)
        return (yield from _half(g, ring, k, n, h))

    return GeneratorBuilder(f"shorten-half[{k},{n}+{h}]", k + 1, run, requires=Ring, provides=Ring)


# -- full pipeline ------------------------------------------------------


def shorten_full(k: int, n: int, h: int) -> GeneratorBuilder:
    """Blue cycle on n+h vertices to exactly blue C_n, or red C_k.

    Chains the three gears as needed for the given surplus. Worst case is
    (k+1) + (k+7) + (k+2) = 3k+10 rounds.
    """
    _check(k >= 3, "k must be at least 3")
    _check(n > 3 * k - 3, "shorten_full needs n > 3k-3")
    _check(0 <= h <= 2 * n, "surplus must satisfy 0 <= h <= 2n")

    def run(g: HostGraph, prev: object) -> Generator:
        ring = _expect_ring(prev, n + h)
        if h >= k:
            ring = yield from _half(g, ring, k, n, h)
        if len(ring) >= n + 2:
            ring = yield from _small(g, ring, k, n)
        if len(ring) == n + 1:
            ring = yield from _by_one(g, ring, k)
        return ring.witness()

    return GeneratorBuilder(f"shorten[{k},{n}+{h}]", 3 * k + 10, run, requires=Ring, provides=Witness)
