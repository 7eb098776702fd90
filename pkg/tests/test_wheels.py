import pytest

from isk4lab.graph import Graph, Hole, complete_bipartite, cycle, wheel_on_cycle
from isk4lab.wheels import (
    OutOfClass,
    check_outcome,
    check_wheel_decomposition,
    classify_wrt_wheel,
    crossing,
    decompose,
    enumerate_wheels,
    find_short_connection,
    hole_appendices,
    is_proper_wheel,
    is_short_connection,
    make_wheel,
    wheel_appendices,
    wheel_decomposition,
)

C12X = wheel_on_cycle(12, [0, 3, 6, 9])
H12 = Hole(tuple(range(12)))


def with_extra(g, nbrs):
    return g.add_vertex(sum(1 << v for v in nbrs))


def test_wheel_structure():
    w = make_wheel(C12X, H12, 12)
    assert w.spokes == (0, 3, 6, 9) and w.n == 4 and w.vertex_count == 13
    assert [s.path for s in w.sectors()] == [(0, 1, 2, 3), (3, 4, 5, 6), (6, 7, 8, 9), (9, 10, 11, 0)]
    assert w.sector(0).interior == (1, 2)


def test_enumerate_wheels_examples():
    assert any(w.hole == H12 and w.center == 12 for w in enumerate_wheels(C12X))
    assert list(enumerate_wheels(cycle(5))) == []
    assert list(enumerate_wheels(complete_bipartite(3, 3))) == []


def test_classify_examples():
    w = make_wheel(C12X, H12, 12)
    g = with_extra(C12X, [1])
    assert classify_wrt_wheel(g, w, 13).kind == "type1"
    g = with_extra(C12X, [1, 3])
    t = classify_wrt_wheel(g, w, 13)
    assert t.kind == "type2" and t.sector == 0
    g = with_extra(C12X, [1, 7])
    assert classify_wrt_wheel(g, w, 13).kind == "improper"
    with pytest.raises(ValueError):
        classify_wrt_wheel(C12X, w, 0)


def test_proper_wheel_examples():
    w = make_wheel(C12X, H12, 12)
    assert is_proper_wheel(C12X, w)
    assert not is_proper_wheel(with_extra(C12X, [1, 7]), w)


def test_hole_appendix_examples():
    h = Hole(tuple(range(6)))
    apps = hole_appendices(with_extra(cycle(6), [0, 2]), h)
    assert len(apps) == 1 and apps[0].kind == "single_vertex" and apps[0].attachment == {0, 2}
    g = Graph(8, list(cycle(6).edges()) + [(6, 7), (6, 0), (7, 3)])
    apps = hole_appendices(g, h)
    assert len(apps) == 1 and apps[0].kind == "proper_path" and apps[0].attachment == {0, 3}
    assert hole_appendices(with_extra(cycle(6), [0, 1]), h) == []


def test_crossing_examples():
    h = Hole(tuple(range(6)))
    g = Graph(8, list(cycle(6).edges()) + [(6, 0), (6, 2), (7, 1), (7, 4)])
    p, q = sorted(hole_appendices(g, h), key=lambda a: a.path)
    assert crossing(p, q)
    g = Graph(8, list(cycle(6).edges()) + [(6, 0), (6, 2), (7, 3), (7, 5)])
    p, q = sorted(hole_appendices(g, h), key=lambda a: a.path)
    assert not crossing(p, q)
    g = Graph(8, list(cycle(6).edges()) + [(6, 0), (6, 2), (7, 0), (7, 4)])
    p, q = sorted(hole_appendices(g, h), key=lambda a: a.path)
    assert not crossing(p, q)


def test_wheel_appendix_examples():
    w = make_wheel(C12X, H12, 12)
    assert len(wheel_appendices(with_extra(C12X, [1, 7]), w)) == 1
    assert wheel_appendices(with_extra(C12X, [1, 2]), w) == []
    inside = Graph(15, list(C12X.edges()) + [(13, 14), (13, 0), (14, 2)])
    assert wheel_appendices(inside, w) == []


def test_short_connection_examples():
    w = make_wheel(C12X, H12, 12)
    g = Graph(15, list(C12X.edges()) + [(13, 14), (13, 2), (14, 4)])
    c = find_short_connection(g, w)
    assert c is not None and c.path == (13, 14) and is_short_connection(g, w, c)
    assert find_short_connection(C12X, w) is None
    g = Graph(15, list(C12X.edges()) + [(13, 14), (13, 2), (14, 4), (14, 12)])
    assert find_short_connection(g, w) is None


def test_wheel_decomposition_examples():
    w = make_wheel(C12X, H12, 12)
    d = wheel_decomposition(C12X, w)
    assert d is not None and check_wheel_decomposition(C12X, d)
    assert d.sector_cutsets[0].cutset == {12, 0, 3}
    g = Graph(13, list(C12X.edges()) + [(1, 7)])
    assert wheel_decomposition(g, make_wheel(g, H12, 12)) is None
    g8 = wheel_on_cycle(8, [0, 2, 4, 6])
    d = wheel_decomposition(g8, make_wheel(g8, Hole(tuple(range(8))), 8))
    assert d is not None and check_wheel_decomposition(g8, d)


def test_decompose_examples():
    assert decompose(cycle(5)).tag == "series_parallel"
    out = decompose(complete_bipartite(3, 3))
    assert out.tag == "complete_bipartite" and check_outcome(complete_bipartite(3, 3), out)
    out = decompose(C12X)
    assert out.tag == "wheel_decomposition" and not out.fallback
    assert out.witness.wheel.center == 12 and check_outcome(C12X, out)


def test_decompose_out_of_class():
    with pytest.raises(OutOfClass):
        decompose(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(OutOfClass):
        decompose(wheel_on_cycle(6, [0, 2, 4]))
