"""Exact game-tree computations for tiny targets and fixed-strategy audits.

Two searches live here. exact_online_ramsey plays both sides optimally
(Builder minimizes rounds, Painter maximizes) over colored graphs taken up to
isomorphism. worst_case_rounds fixes the Builder and exhausts every Painter
reply string, giving the tightest budget that Builder strategy really needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .engine import GameConfig, GeneratorBuilder
from .graph import Color, Edge, HostGraph, color_edge, verify_witness

RED = 0
BLUE = 1

# a colored edge is (u, v, color) with u < v; a state is a frozenset of them
ColoredEdge = tuple[int, int, int]
State = frozenset


class StateCapExceeded(Exception):
    """The search or canonizer hit its size guard."""


@dataclass(frozen=True)
class Unbounded:
    """No win within the round cap."""

    cap: int


@dataclass(frozen=True)
class TargetSpec:
    """A cycle or path target; size counts vertices."""

    kind: str  # "cycle" or "path"
    size: int

    def __post_init__(self) -> None:
        if self.kind not in ("cycle", "path"):
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.kind == "cycle" and self.size < 3:
            raise ValueError("cycle targets need size >= 3")
        if self.kind == "path" and self.size < 2:
            raise ValueError("path targets need size >= 2")


@dataclass(frozen=True)
class CanonicalState:
    """A position up to color-preserving isomorphism, plus rounds spent reaching it."""

    key: tuple
    rounds: int


# -- containment checks ---------------------------------------------------


def _adj_of(edges: Iterable[ColoredEdge], color: int) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v, c in edges:
        if c == color:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    return adj


def _has_cycle(adj: dict[int, list[int]], k: int) -> bool:
    def extend(root: int, cur: int, steps: int, seen: set[int]) -> bool:
        if steps == k - 1:
            return root in adj.get(cur, ())
        for nxt in adj.get(cur, ()):
            if nxt <= root or nxt in seen:
                continue
            seen.add(nxt)
            if extend(root, nxt, steps + 1, seen):
                return True
            seen.remove(nxt)
        return False

    return any(extend(r, r, 0, {r}) for r in adj)


def _has_path(adj: dict[int, list[int]], n_vertices: int) -> bool:
    if n_vertices == 1:
        return bool(adj)

    def extend(cur: int, count: int, seen: set[int]) -> bool:
        if count == n_vertices:
            return True
        for nxt in adj.get(cur, ()):
            if nxt in seen:
                continue
            seen.add(nxt)
            if extend(nxt, count + 1, seen):
                return True
            seen.remove(nxt)
        return False

    return any(extend(s, 1, {s}) for s in adj)


def contains_target(edges: Iterable[ColoredEdge], color: int, target: TargetSpec) -> bool:
    adj = _adj_of(edges, color)
    if target.kind == "cycle":
        return _has_cycle(adj, target.size)
    return _has_path(adj, target.size)


# -- canonical forms -------------------------------------------------------

_PERM_GUARD = 2_000_000


def _refine(vertices: list[int], edges: list[ColoredEdge]) -> dict[int, int]:
    """Iterated neighborhood refinement; returns vertex -> class index."""
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
    for u, v, c in edges:
        inc[u].append((c, v))
        inc[v].append((c, u))
    labels = {
        v: (sum(1 for c, _ in inc[v] if c == RED), sum(1 for c, _ in inc[v] if c == BLUE))
        for v in vertices
    }
    while True:
        sigs = {
            v: (labels[v], tuple(sorted((c, labels[w]) for c, w in inc[v])))
            for v in vertices
        }
        order = sorted(set(sigs.values()))
        new = {v: order.index(sigs[v]) for v in vertices}
        if len(set(new.values())) == len(set(labels.values())):
            return new
        labels = new


def _canon_component(vertices: list[int], edges: list[ColoredEdge]) -> tuple:
    if len(vertices) > 10:
        raise StateCapExceeded(f"component with {len(vertices)} vertices exceeds the canonizer bound")
    labels = _refine(vertices, edges)
    classes: dict[int, list[int]] = {}
    for v in vertices:
        classes.setdefault(labels[v], []).append(v)
    ordered = [sorted(classes[c]) for c in sorted(classes)]
    total = 1
    for cls in ordered:
        for i in range(2, len(cls) + 1):
            total *= i
        if total > _PERM_GUARD:
            raise StateCapExceeded("too many candidate labelings in canonization")
    base = 0
    slots: list[tuple[int, int]] = []  # (class start, class size)
    for cls in ordered:
        slots.append((base, len(cls)))
        base += len(cls)

    best: Optional[tuple] = None
    for perms in itertools.product(*(itertools.permutations(cls) for cls in ordered)):
        pos: dict[int, int] = {}
        for (start, _), perm in zip(slots, perms):
            for offset, v in enumerate(perm):
                pos[v] = start + offset
        key_edges = []
        for u, v, c in edges:
            pu, pv = pos[u], pos[v]
            if pu > pv:
                pu, pv = pv, pu
            key_edges.append((pu, pv, c))
        key = (len(vertices),) + tuple(sorted(key_edges))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonical_key(edges: Iterable[ColoredEdge]) -> tuple:
    """Isomorphism-invariant key: sorted canonical forms of the components."""
    edges = list(edges)
    if not edges:
        return ()
    neighbors: dict[int, set[int]] = {}
    for u, v, _ in edges:
        neighbors.setdefault(u, set()).add(v)
        neighbors.setdefault(v, set()).add(u)
    seen: set[int] = set()
    comps: list[tuple] = []
    for start in neighbors:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for nxt in neighbors[cur]:
                if nxt not in comp:
                    comp.add(nxt)
                    frontier.append(nxt)
        seen |= comp
        comp_edges = [e for e in edges if e[0] in comp]
        comps.append(_canon_component(sorted(comp), comp_edges))
    return tuple(sorted(comps))


# -- optimal play ----------------------------------------------------------


def _moves(edges: State, extra_fresh: int) -> list[tuple[int, int]]:
    touched = sorted({w for u, v, _ in edges for w in (u, v)})
    nxt = (max(touched) + 1) if touched else 0
    fresh = list(range(nxt, nxt + extra_fresh))
    universe = touched + fresh
    colored = {(u, v) for u, v, _ in edges}
    out = []
    for i, a in enumerate(universe):
        for b in universe[i + 1 :]:
            if (a, b) in colored:
                continue
            out.append((a, b))
    return out


class _MinimaxSearch:
    def __init__(self, red: TargetSpec, blue: TargetSpec, extra_fresh: int) -> None:
        self.red = red
        self.blue = blue
        self.extra_fresh = extra_fresh
        self.exact: dict[tuple, int] = {}
        self.beyond: dict[tuple, int] = {}  # proven value > beyond[key]
        self.canon_cache: dict[State, tuple] = {}
        self.states = 0

    def key_of(self, edges: State) -> tuple:
        k = self.canon_cache.get(edges)
        if k is None:
            k = canonical_key(edges)
            self.canon_cache[edges] = k
        return k

    def won(self, edges: State) -> bool:
        return contains_target(edges, RED, self.red) or contains_target(edges, BLUE, self.blue)

    def value(self, edges: State, allow: int) -> Optional[int]:
        """Exact optimal rounds if <= allow, else None."""
        if self.won(edges):
            return 0
        if allow <= 0:
            return None
        key = self.key_of(edges)
        hit = self.exact.get(key)
        if hit is not None:
            return hit if hit <= allow else None
        if self.beyond.get(key, -1) >= allow:
            return None
        self.states += 1
        if self.states > 5_000_000:
            raise StateCapExceeded("minimax state guard tripped")

        best: Optional[int] = None
        tried: set[tuple] = set()
        for a, b in _moves(edges, self.extra_fresh):
            child_r = edges | {(a, b, RED)}
            child_b = edges | {(a, b, BLUE)}
            sig = tuple(sorted((self.key_of(child_r), self.key_of(child_b))))
            if sig in tried:
                continue
            tried.add(sig)
            bound = allow if best is None else min(allow, best - 1)
            if bound < 1:
                break
            worst = 0
            for child in (child_r, child_b):
                cv = self.value(child, bound - 1)
                if cv is None:
                    worst = None
                    break
                worst = max(worst, cv)
            if worst is not None:
                best = 1 + worst
        if best is None:
            self.beyond[key] = max(self.beyond.get(key, -1), allow)
            return None
        self.exact[key] = best
        return best


def exact_online_ramsey(
    red_target: TargetSpec,
    blue_target: TargetSpec,
    cap: int = 12,
    extra_fresh: int = 2,
) -> Union[int, Unbounded]:
    """Exact optimal-play value of the game, or Unbounded(cap).

    Builder's move universe at each state is every uncolored pair among the
    touched vertices plus fresh ones; isomorphic children collapse, so one
    fresh vertex plus the single fresh-fresh pair is what the search really
    branches on. ``extra_fresh`` exists for the soundness check that offering
    more fresh vertices changes nothing.
    """
    if cap > 12:
        raise StateCapExceeded("exact search capped at 12 rounds")
    if red_target.size > 6 or blue_target.size > 6:
        raise StateCapExceeded("exact search supports targets on at most 6 vertices")
    if extra_fresh < 2:
        raise ValueError("need at least 2 fresh vertices to offer a first move")
    search = _MinimaxSearch(red_target, blue_target, extra_fresh)
    result = search.value(frozenset(), cap)
    return Unbounded(cap) if result is None else result


def position_value(
    g: HostGraph,
    pending: Edge,
    reply: Color,
    red_target: TargetSpec,
    blue_target: TargetSpec,
    cap: int,
) -> int:
    """Rounds Builder still needs after ``pending`` gets ``reply``, capped.

    Used by the minimax painter; cap+1 encodes "no forced win within cap".
    """
    edges = {(e.u, e.v, RED if c is Color.RED else BLUE) for e, c in g.edges()}
    edges.add((pending.u, pending.v, RED if reply is Color.RED else BLUE))
    search = _MinimaxSearch(red_target, blue_target, extra_fresh=2)
    result = search.value(frozenset(edges), cap)
    return cap + 1 if result is None else result


# -- fixed-Builder audit ----------------------------------------------------

BuilderSource = Union[GeneratorBuilder, Callable[[], GeneratorBuilder]]
Setup = Callable[[], tuple[HostGraph, object]]


def _fresh_builder(source: BuilderSource) -> GeneratorBuilder:
    if isinstance(source, GeneratorBuilder):
        return source.clone()
    return source()


def worst_case_rounds(
    builder: BuilderSource,
    cfg: GameConfig,
    cap: int,
    setup: Optional[Setup] = None,
) -> Union[int, Unbounded]:
    """Max rounds over every Painter reply string until the Builder finishes.

    The builder must be deterministic; each explored line replays it from
    scratch against the reply prefix. ``setup`` supplies a pre-seeded board
    and the input structure for lemma-level strategies.

    Exceeding the cap on any line yields Unbounded(cap). Claimed witnesses are
    verified along the way; a bad claim raises InvalidWitness via the checks.
    """
    if cap > 24:
        raise StateCapExceeded("reply-tree audit capped at 24 rounds")

    def finished(b: GeneratorBuilder, g: HostGraph) -> bool:
        w = b.claim_witness()
        if w is not None:
            if not verify_witness(g, w):
                raise AssertionError(f"strategy {b.name} claimed a bad witness during audit")
            return True
        return b.done

    def simulate(prefix: tuple[Color, ...]) -> tuple[bool, int]:
        """(finished, rounds used when finished or len(prefix) if still open)."""
        if setup is None:
            g, prev = HostGraph(), None
        else:
            g, prev = setup()
        b = _fresh_builder(builder)
        b.start(g, prev)
        if finished(b, g):
            return True, 0
        used = 0
        for c in prefix:
            e = b.next_edge(g)
            color_edge(g, e, c)
            used += 1
            b.observe(e, c)
            if finished(b, g):
                return True, used
        return False, used

    def explore(prefix: tuple[Color, ...]) -> Optional[int]:
        done, used = simulate(prefix)
        if done:
            return used
        if used >= cap:
            return None
        a = explore(prefix + (Color.RED,))
        if a is None:
            return None
        b = explore(prefix + (Color.BLUE,))
        if b is None:
            return None
        return max(a, b)

    result = explore(())
    return Unbounded(cap) if result is None else result
