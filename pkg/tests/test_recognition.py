import random

import pytest

from isk4lab.enumeration import enumerate_graphs
from isk4lab.graph import Graph, complete, complete_bipartite, cycle, petersen, theta, wheel_on_cycle
from isk4lab.recognition import (
    BudgetExceeded,
    chordless_status,
    contains_isk4,
    contains_k33,
    contains_prism,
    is_isk4_witness,
    is_series_parallel,
    multipartite_class,
    profile,
)

from oracles import has_k4_subdivision_subgraph, naive_isk4, naive_k33

PRISM = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
C12X = wheel_on_cycle(12, [0, 3, 6, 9])


def test_isk4_examples():
    w = contains_isk4(complete(4))
    assert w is not None and w.vertex_set == frozenset(range(4))
    three_wheel = wheel_on_cycle(6, [0, 2, 4])
    w = contains_isk4(three_wheel)
    assert w is not None and is_isk4_witness(three_wheel, w)
    w = contains_isk4(petersen())
    assert w is not None and is_isk4_witness(petersen(), w)


def test_isk4_absent():
    assert contains_isk4(cycle(7)) is None
    assert contains_isk4(complete_bipartite(3, 3)) is None
    assert contains_isk4(C12X) is None


def test_isk4_budget():
    with pytest.raises(BudgetExceeded):
        contains_isk4(petersen(), budget=1)


def test_isk4_through_vertex():
    g = complete(4).add_vertex(0)
    assert contains_isk4(g, through=4) is None
    assert contains_isk4(g, through=0) is not None


def test_k33_examples():
    assert contains_k33(complete_bipartite(3, 3)) == frozenset(range(6))
    s = contains_k33(complete_bipartite(3, 4))
    assert s is not None and len(s) == 6
    assert contains_k33(C12X) is None


def test_prism_examples():
    assert contains_prism(PRISM) == frozenset(range(6))
    assert contains_prism(cycle(8)) is None
    assert contains_prism(complete(4)) is None


def test_series_parallel_examples():
    assert is_series_parallel(theta([3, 3, 3]))
    assert not is_series_parallel(complete(4))
    assert not is_series_parallel(complete_bipartite(3, 3))
    assert is_series_parallel(Graph(0))


def test_multipartite_examples():
    mp = multipartite_class(complete_bipartite(3, 3))
    assert mp.kind == "complete_bipartite" and sorted(len(p) for p in mp.parts) == [3, 3]
    assert multipartite_class(complete(3)).kind == "complete_tripartite"
    assert multipartite_class(cycle(6)).kind == "neither"


def test_chordless_status_examples():
    s = chordless_status(cycle(5))
    assert s.chordless and s.sparse
    s = chordless_status(complete(4))
    assert not s.chordless and not s.sparse
    s = chordless_status(theta([3, 3, 3, 3]))
    assert s.chordless and s.sparse


def test_profile_petersen():
    p = profile(petersen())
    assert p.triangle_free and not p.isk4_free and p.girth == 5


@pytest.mark.parametrize("n", [5, 6])
def test_isk4_matches_naive(n):
    for g in enumerate_graphs(n):
        w = contains_isk4(g)
        assert (w is None) == (naive_isk4(g) is None)
        if w is not None:
            assert is_isk4_witness(g, w)


def test_k33_and_sp_match_naive_on_samples():
    rng = random.Random(7)
    graphs = list(enumerate_graphs(7))
    for g in rng.sample(graphs, 200):
        assert (contains_k33(g) is None) == (naive_k33(g) is None)
        assert is_series_parallel(g) == (not has_k4_subdivision_subgraph(g))
