"""Colored host graph on an unbounded vertex pool.

The board is the complete graph on the naturals. Only colored edges are
stored; a vertex is "free" while it has no colored edge. Vertices are
handed out by a monotone allocator so a strategy can always grab genuinely
fresh ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional


class Color(Enum):
    RED = "red"
    BLUE = "blue"

    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class WitnessKind(Enum):
    RED_CYCLE = "red_cycle"
    BLUE_CYCLE = "blue_cycle"
    BLUE_PATH = "blue_path"


class DuplicateEdge(Exception):
    """An already-colored edge was selected again."""


class KTooLarge(Exception):
    """Cycle detection asked for a length beyond the supported cap."""


@dataclass(frozen=True)
class Edge:
    """Unordered pair of distinct vertices, stored with u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop at vertex {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} not on edge {self}")

    def touches(self, w: int) -> bool:
        return w == self.u or w == self.v

    def __repr__(self) -> str:
        return f"({self.u},{self.v})"


@dataclass(frozen=True)
class Witness:
    """A claimed monochromatic cycle or path.

    ``edges`` are listed in traversal order.  ``length`` counts vertices,
    which for a cycle equals the number of edges and for a path is one more
    than the number of edges.  The one structure with no edges is the path on
    a single vertex; it names no particular vertex, since any one realizes it.
    """

    kind: WitnessKind
    edges: tuple[Edge, ...]
    length: int

    @property
    def color(self) -> Color:
        return Color.RED if self.kind is WitnessKind.RED_CYCLE else Color.BLUE

    def vertices(self) -> list[int]:
        """Vertex sequence along the witness, in traversal order.

        For a cycle the starting vertex is not repeated at the end.
        """
        if not self.edges:
            return []
        return _walk_vertices(self.edges, closed=self.kind is not WitnessKind.BLUE_PATH)


def cycle_witness(seq: Iterable[int], kind: WitnessKind) -> Witness:
    """Close a vertex sequence into a cycle witness."""
    vs = list(seq)
    edges = tuple(Edge(vs[i - 1], vs[i]) for i in range(len(vs)))
    return Witness(kind=kind, edges=edges, length=len(vs))


class HostGraph:
    """Mutable colored graph plus the fresh-vertex allocator."""

    def __init__(self) -> None:
        self._colors: dict[Edge, Color] = {}
        self._adj: dict[int, list[tuple[int, Color]]] = {}
        self._next_vertex = 0

    # -- queries -------------------------------------------------------

    def color_of(self, e: Edge) -> Optional[Color]:
        return self._colors.get(e)

    def is_colored(self, e: Edge) -> bool:
        return e in self._colors

    def edges(self) -> Iterator[tuple[Edge, Color]]:
        return iter(self._colors.items())

    def edge_count(self) -> int:
        return len(self._colors)

    def neighbors(self, v: int, color: Optional[Color] = None) -> list[int]:
        pairs = self._adj.get(v, [])
        if color is None:
            return [w for w, _ in pairs]
        return [w for w, c in pairs if c is color]

    def degree(self, v: int, color: Optional[Color] = None) -> int:
        return len(self.neighbors(v, color))

    def touched_vertices(self) -> list[int]:
        return sorted(self._adj.keys())

    @property
    def next_vertex(self) -> int:
        return self._next_vertex


def allocate_free_vertices(g: HostGraph, count: int) -> list[int]:
    """Reserve ``count`` vertices that no colored edge touches.

    Ids are strictly increasing across the life of the graph and are never
    reissued, so two calls can never hand out overlapping sets.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    start = g._next_vertex
    g._next_vertex = start + count
    return list(range(start, start + count))


def color_edge(g: HostGraph, e: Edge, c: Color) -> None:
    """Record Painter's color for a newly selected edge."""
    if e in g._colors:
        raise DuplicateEdge(f"edge {e} already colored {g._colors[e].value}")
    g._colors[e] = c
    g._adj.setdefault(e.u, []).append((e.v, c))
    g._adj.setdefault(e.v, []).append((e.u, c))
    # Keep the allocator ahead of any vertex used directly (tests may build
    # graphs by hand without going through allocate_free_vertices).
    if e.v >= g._next_vertex:
        g._next_vertex = e.v + 1


def _walk_vertices(edges: tuple[Edge, ...], closed: bool) -> list[int]:
    """Vertex sequence traced by consecutive edges; raises if they don't chain."""
    if not edges:
        raise ValueError("empty edge list")
    if len(edges) == 1:
        return [edges[0].u, edges[0].v]
    first, second = edges[0], edges[1]
    if second.touches(first.v):
        seq = [first.u, first.v]
    elif second.touches(first.u):
        seq = [first.v, first.u]
    else:
        raise ValueError("edges do not chain")
    for e in edges[1:]:
        seq.append(e.other(seq[-1]))
    if closed:
        if seq[-1] != seq[0]:
            raise ValueError("cycle does not close")
        seq.pop()
    return seq


def verify_witness(g: HostGraph, w: Witness) -> bool:
    """Check a witness against the host graph.

    True iff every listed edge is present with the claimed color, consecutive
    edges chain, vertices are pairwise distinct, cycles close up, and the
    ``length`` field matches the realized structure exactly.
    """
    if not w.edges:
        return w.kind is WitnessKind.BLUE_PATH and w.length == 1
    want = w.color
    for e in w.edges:
        if g.color_of(e) is not want:
            return False
    closed = w.kind is not WitnessKind.BLUE_PATH
    try:
        seq = _walk_vertices(w.edges, closed=closed)
    except ValueError:
        return False
    if len(set(seq)) != len(seq):
        return False
    if closed:
        if len(w.edges) < 3:
            return False
        return w.length == len(w.edges)
    return w.length == len(seq)


def detect_cycle(g: HostGraph, color: Color, k: int) -> Optional[Witness]:
    """Exhaustively search for a cycle of length exactly k in one color class.

    Test-support routine: production wins come from strategy-emitted
    witnesses, this is the independent cross-check.
    """
    if k < 3:
        raise ValueError("cycles have length at least 3")
    adj: dict[int, list[int]] = {}
    for e, c in g.edges():
        if c is color:
            adj.setdefault(e.u, []).append(e.v)
            adj.setdefault(e.v, []).append(e.u)

    # Only start a cycle at its minimum vertex; prune branches below the root.
    def extend(root: int, path: list[int], seen: set[int]) -> Optional[list[int]]:
        cur = path[-1]
        if len(path) == k:
            return path if root in adj.get(cur, ()) else None
        for nxt in adj.get(cur, ()):
            if nxt <= root or nxt in seen:
                continue
            seen.add(nxt)
            path.append(nxt)
            found = extend(root, path, seen)
            if found is not None:
                return found
            path.pop()
            seen.remove(nxt)
        return None

    for root in sorted(adj):
        hit = extend(root, [root], {root})
        if hit is not None:
            cyc = hit + [root]
            edges = tuple(Edge(cyc[i], cyc[i + 1]) for i in range(k))
            kind = WitnessKind.RED_CYCLE if color is Color.RED else WitnessKind.BLUE_CYCLE
            return Witness(kind, edges, k)
    return None


def detect_red_cycle_k(g: HostGraph, k: int) -> Optional[Witness]:
    """Find a red cycle of length exactly k, if one exists (k capped at 32)."""
    if k > 32:
        raise KTooLarge(f"k={k} exceeds the supported cap of 32")
    return detect_cycle(g, Color.RED, k)


def detect_path(g: HostGraph, color: Color, n_vertices: int) -> Optional[Witness]:
    """Exhaustively search for a path on exactly n_vertices in one color class.

    Test-support routine, same caveat as detect_cycle.
    """
    if n_vertices < 2:
        raise ValueError("paths have at least 2 vertices")
    adj: dict[int, list[int]] = {}
    for e, c in g.edges():
        if c is color:
            adj.setdefault(e.u, []).append(e.v)
            adj.setdefault(e.v, []).append(e.u)

    def extend(path: list[int], seen: set[int]) -> Optional[list[int]]:
        if len(path) == n_vertices:
            return path
        for nxt in adj.get(path[-1], ()):
            if nxt in seen:
                continue
            seen.add(nxt)
            path.append(nxt)
            found = extend(path, seen)
            if found is not None:
                return found
            path.pop()
            seen.remove(nxt)
        return None

    for start in sorted(adj):
        hit = extend([start], {start})
        if hit is not None:
            edges = tuple(Edge(hit[i], hit[i + 1]) for i in range(n_vertices - 1))
            if color is not Color.BLUE:
                raise ValueError("path witnesses are blue-side only")
            return Witness(WitnessKind.BLUE_PATH, edges, n_vertices)
    return None
