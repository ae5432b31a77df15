"""Host graph primitives: edges, coloring, witnesses, detection."""

import pytest

from online_ramsey.graph import (
    Color,
    DuplicateEdge,
    Edge,
    HostGraph,
    Witness,
    WitnessKind,
    allocate_free_vertices,
    color_edge,
    cycle_witness,
    detect_cycle,
    verify_witness,
)


def test_edge_is_unordered_and_rejects_loops():
    assert Edge(5, 2) == Edge(2, 5)
    assert Edge(5, 2).u == 2
    assert Edge(1, 7).other(7) == 1
    with pytest.raises(ValueError):
        Edge(3, 3)


def test_color_edge_rejects_duplicates():
    g = HostGraph()
    color_edge(g, Edge(0, 1), Color.RED)
    with pytest.raises(DuplicateEdge):
        color_edge(g, Edge(1, 0), Color.BLUE)
    assert g.color_of(Edge(0, 1)) is Color.RED
    assert g.edge_count() == 1


def test_allocator_never_reissues_and_skips_hand_built_vertices():
    g = HostGraph()
    first = allocate_free_vertices(g, 3)
    color_edge(g, Edge(10, 11), Color.BLUE)
    second = allocate_free_vertices(g, 2)
    assert not set(first) & set(second)
    assert min(second) > 11


def test_neighbors_and_degree_filter_by_color():
    g = HostGraph()
    color_edge(g, Edge(0, 1), Color.RED)
    color_edge(g, Edge(0, 2), Color.BLUE)
    assert sorted(g.neighbors(0)) == [1, 2]
    assert g.neighbors(0, Color.RED) == [1]
    assert g.degree(0, Color.BLUE) == 1
    assert g.touched_vertices() == [0, 1, 2]


def test_verify_witness_checks_colors_chaining_and_length():
    g = HostGraph()
    vs = allocate_free_vertices(g, 4)
    for a, b in zip(vs, vs[1:]):
        color_edge(g, Edge(a, b), Color.BLUE)
    path = Witness(WitnessKind.BLUE_PATH, tuple(Edge(a, b) for a, b in zip(vs, vs[1:])), 4)
    assert verify_witness(g, path)
    assert path.vertices() == list(vs)
    # wrong length
    assert not verify_witness(g, Witness(path.kind, path.edges, 5))
    # wrong color
    assert not verify_witness(g, Witness(WitnessKind.RED_CYCLE, path.edges, 3))
    # edges that do not chain
    broken = (Edge(vs[0], vs[1]), Edge(vs[2], vs[3]))
    assert not verify_witness(g, Witness(WitnessKind.BLUE_PATH, broken, 4))


def test_verify_witness_cycles_must_close_and_repeat_no_vertex():
    g = HostGraph()
    vs = allocate_free_vertices(g, 5)
    w = cycle_witness(vs, WitnessKind.BLUE_CYCLE)
    for e in w.edges:
        color_edge(g, e, Color.BLUE)
    assert verify_witness(g, w)
    assert len(w.vertices()) == 5
    open_walk = Witness(WitnessKind.BLUE_CYCLE, w.edges[:-1], 4)
    assert not verify_witness(g, open_walk)


def test_single_vertex_blue_path_is_the_only_zero_edge_witness():
    g = HostGraph()
    trivial = Witness(WitnessKind.BLUE_PATH, (), 1)
    assert verify_witness(g, trivial)
    assert trivial.vertices() == []
    assert not verify_witness(g, Witness(WitnessKind.BLUE_PATH, (), 2))
    assert not verify_witness(g, Witness(WitnessKind.RED_CYCLE, (), 1))


def test_detect_cycle_finds_exact_lengths_only():
    g = HostGraph()
    vs = allocate_free_vertices(g, 4)
    for e in cycle_witness(vs, WitnessKind.RED_CYCLE).edges:
        color_edge(g, e, Color.RED)
    found = detect_cycle(g, Color.RED, 4)
    assert found is not None and verify_witness(g, found)
    assert detect_cycle(g, Color.RED, 3) is None
    assert detect_cycle(g, Color.BLUE, 4) is None
