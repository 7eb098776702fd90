import pytest

from isk4lab.enumeration import enumerate_up_to
from isk4lab.graph import (
    Graph,
    canonical_cycle,
    complete,
    complete_bipartite,
    connectivity,
    cycle,
    enumerate_cycles,
    enumerate_holes,
    girth,
    is_hole,
    path,
    theta,
    triangle_witness,
)

from oracles import all_cycles, girth_oracle, holes_oracle

PRISM = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_graph_is_immutable_and_hashable():
    g = cycle(5)
    with pytest.raises(AttributeError):
        g.n = 7
    assert hash(g) == hash(cycle(5))
    assert g == Graph(5, [(1, 0), (2, 1), (3, 2), (4, 3), (0, 4)])


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(complete_bipartite(3, 3)) == 4
    assert girth(path(6)) is None
    assert girth(Graph(1)) is None


def test_triangle_witness_examples():
    tri = triangle_witness(PRISM)
    assert tri is not None and all(PRISM.has_edge(a, b) for a, b in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])])
    assert triangle_witness(cycle(6)) is None
    assert triangle_witness(complete(4)) is not None


def test_connectivity_examples():
    c5 = connectivity(cycle(5))
    assert len(c5.components) == 1 and not c5.cut_vertices and c5.is_two_connected
    p4 = connectivity(path(4))
    assert len(p4.components) == 1 and p4.cut_vertices == {1, 2} and not p4.is_two_connected
    assert len(connectivity(Graph(4, [(0, 1), (2, 3)])).components) == 2


def test_hole_examples():
    assert [h.cycle for h in enumerate_holes(cycle(6))] == [(0, 1, 2, 3, 4, 5)]
    assert list(enumerate_holes(complete(4))) == []
    holes = list(enumerate_holes(complete_bipartite(3, 3)))
    assert len(holes) == 9 and all(len(h) == 4 for h in holes)


def test_hole_max_len():
    g = theta([2, 3, 4])
    assert {len(h) for h in enumerate_holes(g)} == {5, 6, 7}
    assert {len(h) for h in enumerate_holes(g, max_len=6)} == {5, 6}


def test_induced_examples():
    k3, old = complete(4).induced([0, 2, 3])
    assert k3 == complete(3) and old == (0, 2, 3)
    g = theta([3, 3, 3])
    assert g.induced(range(g.n))[0] == g
    assert cycle(6).induced([0, 2, 4])[0].edge_count == 0


def test_canonical_cycle():
    assert canonical_cycle([3, 2, 1, 0]) == (0, 1, 2, 3)
    assert canonical_cycle([2, 0, 3, 1]) == (0, 2, 1, 3)


def test_enumerate_cycles_k4():
    assert len(list(enumerate_cycles(complete(4)))) == 7


@pytest.mark.parametrize("n", range(1, 8))
def test_girth_and_holes_against_oracle(n):
    for g in enumerate_up_to(n, n_min=n):
        assert girth(g) == girth_oracle(g)
        holes = list(enumerate_holes(g))
        assert {frozenset(h.cycle) for h in holes} == holes_oracle(g)
        assert len(holes) == len({h.cycle for h in holes})
        assert all(is_hole(g, h.cycle) for h in holes)
        if n <= 6:
            ours = {canonical_cycle(c) for c in enumerate_cycles(g)}
            assert ours == {canonical_cycle(c) for c in all_cycles(g)}


def test_induced_subgraph_functoriality():
    g = theta([2, 3, 3])
    keep = [0, 1, 2, 4, 5]
    h, old = g.induced(keep)
    for i in range(h.n):
        for j in range(h.n):
            assert h.has_edge(i, j) == g.has_edge(old[i], old[j])
    hh, old2 = h.induced([0, 2, 3])
    direct, _ = g.induced([old[i] for i in old2])
    assert hh == direct
