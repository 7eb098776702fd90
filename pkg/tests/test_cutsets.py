import pytest

from isk4lab.cutsets import (
    check_witness,
    find_clique_cutset,
    find_double_star_cutset,
    find_proper_two_cutset,
    find_star_cutset,
    is_proper_split,
    verify_separation,
)
from isk4lab.enumeration import enumerate_graphs
from isk4lab.graph import Graph, complete_bipartite, cycle, path, theta, wheel_on_cycle

from oracles import _disconnected_without, star_cutsets_by_center

C12X = wheel_on_cycle(12, [0, 3, 6, 9])


def test_clique_cutset_examples():
    diamond = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    w = find_clique_cutset(diamond, 2)
    assert w.cutset == {0, 1} and check_witness(diamond, w)
    assert find_clique_cutset(cycle(5), 2) is None
    w = find_clique_cutset(complete_bipartite(1, 3), 2)
    assert w.cutset == {0}


def test_clique_cutset_disconnected_is_empty():
    w = find_clique_cutset(Graph(4, [(0, 1), (2, 3)]), 2)
    assert w.cutset == frozenset() and len(w.components) == 2


def test_star_cutset_examples():
    w = find_star_cutset(C12X)
    assert w is not None and check_witness(C12X, w)
    assert find_star_cutset(cycle(5)) is None
    w = find_star_cutset(path(4))
    assert w.cutset == {1} and w.center == 1


def test_star_cutset_on_wheel_separates_sector():
    cut = {12, 0, 3}
    assert _disconnected_without(C12X, cut)
    assert verify_separation(C12X, cut, {1, 2}, set(range(12)) - cut - {1, 2})


def test_double_star_examples():
    w = find_double_star_cutset(C12X)
    assert w is not None and check_witness(C12X, w)
    assert find_double_star_cutset(cycle(6)) is None
    assert find_double_star_cutset(Graph(2, [(0, 1)])) is None


def test_proper_two_cutset_examples():
    g = theta([3, 3, 3, 3])
    w = find_proper_two_cutset(g)
    assert w is not None and w.cutset == {0, 1} and check_witness(g, w)
    x_side, y_side, a, b = w.split
    assert len(x_side) == 4 and len(y_side) == 4
    assert find_proper_two_cutset(theta([3, 3, 3])) is None
    assert find_proper_two_cutset(cycle(5)) is None


def test_is_proper_split_rejects_path_side():
    g = theta([3, 3, 3])
    assert not is_proper_split(g, {2, 3}, {4, 5, 6, 7}, 0, 1)


def test_verify_separation_examples():
    assert verify_separation(path(3), {1}, {0}, {2})
    assert not verify_separation(cycle(4), {0}, {1}, {3})


@pytest.mark.parametrize("n", range(3, 8))
def test_star_cutset_against_exhaustive(n):
    for g in enumerate_graphs(n):
        ref = star_cutsets_by_center(g)
        w = find_star_cutset(g)
        if not ref:
            assert w is None
            continue
        assert w is not None and check_witness(g, w)
        assert w.center == min(ref)
        assert w.cutset in ref[w.center]
        # no single non-centre vertex can be dropped
        for v in w.cutset - {w.center}:
            assert not _disconnected_without(g, set(w.cutset - {v}))
        # every star cutset is a double star cutset
        d = find_double_star_cutset(g)
        if any(len(c) >= 2 for cs in ref.values() for c in cs):
            assert d is not None and check_witness(g, d)
