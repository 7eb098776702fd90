"""Wheels, sectors, appendices, short connections and wheel decompositions.

Sector indices are 0-based: sector ``i`` of a wheel runs along the hole from
spoke ``i`` to spoke ``i + 1`` (indices modulo the spoke count).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .cutsets import CutsetWitness, find_clique_cutset, verify_separation
from .graph import Graph, Hole, bits, enumerate_holes, to_mask, triangle_witness
from .recognition import (
    DEFAULT_BUDGET,
    Multipartite,
    contains_isk4,
    is_series_parallel,
    multipartite_class,
)


class OutOfClass(ValueError):
    """The input is outside the class an operation is defined for.

    ``witness`` is the offending structure: a triangle, an ISK4 witness, or
    whatever the raising operation found.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolation(RuntimeError):
    """No outcome of the decomposition theorem applies.  Never expected."""

    def __init__(self, message: str, graph: Graph):
        super().__init__(message)
        self.graph = graph


# -- wheels and sectors ----------------------------------------------------------------


@dataclass(frozen=True)
class Sector:
    index: int
    path: tuple[int, ...]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.path[1:-1]


@dataclass(frozen=True)
class Wheel:
    hole: Hole
    center: int
    spokes: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.spokes)

    @property
    def vertex_count(self) -> int:
        return len(self.hole) + 1

    def sector(self, i: int) -> Sector:
        k = self.n
        i %= k
        pos = self._positions()
        return Sector(i, self.hole.subpath(pos[i], pos[(i + 1) % k]))

    def sectors(self) -> list[Sector]:
        return [self.sector(i) for i in range(self.n)]

    def _positions(self) -> list[int]:
        index = {v: p for p, v in enumerate(self.hole.cycle)}
        return [index[s] for s in self.spokes]


def make_wheel(g: Graph, hole: Hole, center: int) -> Wheel:
    """The wheel (hole, center); spokes follow the hole's canonical traversal."""
    if center in hole.cycle:
        raise ValueError("the center must lie outside the hole")
    spokes = tuple(v for v in hole.cycle if g.adj[center] >> v & 1)
    if len(spokes) < 3:
        raise ValueError("a wheel center needs at least three neighbours on the hole")
    return Wheel(hole, center, spokes)


def enumerate_wheels(g: Graph, holes: list[Hole] | None = None) -> Iterator[Wheel]:
    """Every wheel of g once: holes in enumeration order, centers ascending."""
    adj = g.adj
    if holes is None:
        holes = list(enumerate_holes(g))
    for h in holes:
        hm = h.mask
        for x in bits(g.full_mask & ~hm):
            if (adj[x] & hm).bit_count() >= 3:
                yield make_wheel(g, h, x)


def wheel_key(w: Wheel) -> tuple:
    """Fewest spokes, then fewest vertices, then canonical hole, then center."""
    return (w.n, w.vertex_count, w.hole.cycle, w.center)


# -- proper wheels ------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexType:
    """``kind`` is type0, type1, type2 or improper; type2 names its sector."""

    kind: str
    sector: int | None = None


def classify_wrt_wheel(g: Graph, w: Wheel, u: int) -> VertexType:
    hm = w.hole.mask
    if hm >> u & 1 or g.closed(w.center) >> u & 1:
        raise ValueError(f"vertex {u} lies in the hole or in the closed neighbourhood of the center")
    on_hole = g.adj[u] & hm
    k = on_hole.bit_count()
    if k == 0:
        return VertexType("type0")
    if k == 1:
        return VertexType("type1")
    if k == 2:
        for s in w.sectors():
            if on_hole & ~to_mask(s.path) == 0:
                return VertexType("type2", s.index)
    return VertexType("improper")


def improper_vertices(g: Graph, w: Wheel) -> list[int]:
    outside = g.full_mask & ~w.hole.mask & ~g.closed(w.center)
    return [u for u in bits(outside) if classify_wrt_wheel(g, w, u).kind == "improper"]


def is_proper_wheel(g: Graph, w: Wheel) -> bool:
    return not improper_vertices(g, w)


# -- appendices -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Appendix:
    """An appendix ``path`` of a hole attaching at ``u1`` (next to path[0])
    and ``u2`` (next to path[-1]).  ``sectors`` are the two u1u2-subpaths of
    the hole."""

    path: tuple[int, ...]
    u1: int
    u2: int
    kind: str  # "single_vertex" or "proper_path"
    sectors: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def attachment(self) -> frozenset[int]:
        return frozenset((self.u1, self.u2))


def _hole_arcs(h: Hole, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    i, j = h.cycle.index(a), h.cycle.index(b)
    return h.subpath(i, j), h.subpath(j, i)


def _make_appendix(h: Hole, path: tuple[int, ...], u1: int, u2: int) -> Appendix:
    kind = "single_vertex" if len(path) == 1 else "proper_path"
    return Appendix(path, u1, u2, kind, _hole_arcs(h, u1, u2))


def hole_appendices(g: Graph, h: Hole) -> list[Appendix]:
    """Every appendix of h, single vertices first, then paths in lexicographic order."""
    adj = g.adj
    hm = h.mask
    outside = g.full_mask & ~hm
    out: list[Appendix] = []
    ends: list[int] = []
    inner = 0
    for v in bits(outside):
        on_hole = adj[v] & hm
        k = on_hole.bit_count()
        if k == 2:
            u1, u2 = bits(on_hole)
            if not adj[u1] >> u2 & 1:
                out.append(_make_appendix(h, (v,), u1, u2))
        elif k == 1:
            ends.append(v)
        elif k == 0:
            inner |= 1 << v
    end_mask = to_mask(ends)
    paths = []
    for s in ends:
        # chordless paths s ... t through vertices with no hole neighbour
        stack = [(s, (s,), 1 << s)]
        while stack:
            last, p, used = stack.pop()
            before = used & ~(1 << last)
            for w in bits(adj[last] & ~used & (inner | end_mask)):
                if adj[w] & before:
                    continue
                if end_mask >> w & 1:
                    if w > s and adj[w] & hm != adj[s] & hm:
                        paths.append(p + (w,))
                else:
                    stack.append((w, p + (w,), used | (1 << w)))
    for p in sorted(paths):
        u1 = (adj[p[0]] & hm).bit_length() - 1
        u2 = (adj[p[-1]] & hm).bit_length() - 1
        out.append(_make_appendix(h, p, u1, u2))
    return out


def crossing(p: Appendix, q: Appendix) -> bool:
    """P and Q interleave: their attachments are disjoint and Q has one end
    in each sector of the hole w.r.t. P."""
    if p.attachment & q.attachment:
        return False
    first, second = (set(s) for s in p.sectors)
    return (q.u1 in first and q.u2 in second) or (q.u1 in second and q.u2 in first)


def crossing_pairs(appendices: list[Appendix]) -> list[tuple[Appendix, Appendix]]:
    found = []
    for i, p in enumerate(appendices):
        for q in appendices[i + 1:]:
            if crossing(p, q):
                found.append((p, q))
    return found


def _properly_contains_sector(arc: tuple[int, ...], w: Wheel) -> bool:
    arc_set = set(arc)
    for s in w.sectors():
        if set(s.path) < arc_set:
            return True
    return False


def wheel_appendices(g: Graph, w: Wheel, hole_apps: list[Appendix] | None = None) -> list[Appendix]:
    if hole_apps is None:
        hole_apps = hole_appendices(g, w.hole)
    nx = g.adj[w.center]
    out = []
    for a in hole_apps:
        if w.center in a.path:
            continue
        if (nx & to_mask(a.path)).bit_count() > 1:
            continue
        if all(_properly_contains_sector(arc, w) for arc in a.sectors):
            out.append(a)
    return out


# -- short connections --------------------------------------------------------------------------


@dataclass(frozen=True)
class ShortConnection:
    """A short connection between sectors ``sector`` and ``sector + 1``."""

    path: tuple[int, ...]
    sector: int
    u1: int
    u2: int


def short_connections(g: Graph, w: Wheel) -> Iterator[ShortConnection]:
    adj = g.adj
    hm = w.hole.mask
    region = g.full_mask & ~hm & ~g.closed(w.center)
    for i in range(w.n):
        joint = w.spokes[(i + 1) % w.n]
        rest = hm & ~(1 << joint)
        near = to_mask(w.sector(i).path) & ~(1 << joint)
        far = to_mask(w.sector(i + 1).path) & ~(1 << joint)
        starts = [v for v in bits(region) if (adj[v] & rest).bit_count() == 1 and adj[v] & near]
        ends = {v for v in bits(region) if (adj[v] & rest).bit_count() == 1 and adj[v] & far}
        inner = to_mask(v for v in bits(region) if not adj[v] & rest)
        for s in starts:
            stack = [(s, (s,), 1 << s)]
            while stack:
                last, p, used = stack.pop()
                before = used & ~(1 << last)
                for t in bits(adj[last] & region & ~used):
                    if adj[t] & before:
                        continue
                    if t in ends:
                        yield ShortConnection(
                            p + (t,), i,
                            (adj[s] & rest).bit_length() - 1,
                            (adj[t] & rest).bit_length() - 1,
                        )
                    if inner >> t & 1:
                        stack.append((t, p + (t,), used | (1 << t)))


def find_short_connection(g: Graph, w: Wheel) -> ShortConnection | None:
    """A short connection with fewest vertices (ties: sector, then path), or None."""
    return min(short_connections(g, w), key=lambda c: (len(c.path), c.sector, c.path), default=None)


def is_short_connection(g: Graph, w: Wheel, c: ShortConnection) -> bool:
    """Check every defining condition directly."""
    adj = g.adj
    hm = w.hole.mask
    p = c.path
    if len(p) < 2 or len(set(p)) != len(p):
        return False
    pm = to_mask(p)
    if pm & (hm | g.closed(w.center)):
        return False
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if (adj[p[a]] >> p[b] & 1) != (b == a + 1):
                return False
    joint = w.spokes[(c.sector + 1) % w.n]
    rest = hm & ~(1 << joint)
    near = set(w.sector(c.sector).path) - {joint}
    far = set(w.sector(c.sector + 1).path) - {joint}
    if adj[p[0]] & rest != 1 << c.u1 or c.u1 not in near:
        return False
    if adj[p[-1]] & rest != 1 << c.u2 or c.u2 not in far:
        return False
    return all(adj[v] & rest == 0 for v in p[1:-1])


# -- wheel decompositions ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectorCutset:
    index: int
    cutset: frozenset[int]
    components: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class WheelDecomposition:
    wheel: Wheel
    sector_cutsets: tuple[SectorCutset, ...]


def _sector_cut(g: Graph, w: Wheel, i: int) -> tuple[int, int, int]:
    hm = w.hole.mask
    cut = (g.closed(w.center) & ~hm) | (1 << w.spokes[i]) | (1 << w.spokes[(i + 1) % w.n])
    sector = to_mask(w.sector(i).path)
    return cut, sector & ~cut, hm & ~sector & ~cut


def wheel_decomposition(g: Graph, w: Wheel) -> WheelDecomposition | None:
    """All n sector cutsets of the wheel, or None if one fails to separate."""
    found = []
    for i in range(w.n):
        cut, a_side, b_side = _sector_cut(g, w, i)
        comps = g.components(g.full_mask & ~cut)
        if len(comps) < 2 or not verify_separation(g, cut, a_side, b_side):
            return None
        found.append(SectorCutset(i, frozenset(bits(cut)), tuple(frozenset(bits(c)) for c in comps)))
    return WheelDecomposition(w, tuple(found))


def check_wheel_decomposition(g: Graph, d: WheelDecomposition) -> bool:
    w = d.wheel
    if len(d.sector_cutsets) != w.n:
        return False
    try:
        if make_wheel(g, w.hole, w.center) != w:
            return False
    except ValueError:
        return False
    for sc in d.sector_cutsets:
        cut, a_side, b_side = _sector_cut(g, w, sc.index)
        if to_mask(sc.cutset) != cut:
            return False
        if len(g.components(g.full_mask & ~cut)) < 2 or not verify_separation(g, cut, a_side, b_side):
            return False
    return True


# -- the decomposition theorem ---------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionOutcome:
    """``tag`` is series_parallel, complete_bipartite, clique_cutset_le2 or
    wheel_decomposition; ``witness`` carries the matching evidence.
    ``fallback`` is set when the fewest-spoke proper wheel did not decompose
    and another wheel was used instead."""

    tag: str
    witness: Multipartite | CutsetWitness | WheelDecomposition | None = None
    fallback: bool = False


def check_class(g: Graph, budget: int = DEFAULT_BUDGET) -> None:
    """Raise OutOfClass unless g is {triangle, ISK4}-free."""
    tri = triangle_witness(g)
    if tri is not None:
        raise OutOfClass("graph contains a triangle", tri)
    isk = contains_isk4(g, budget)
    if isk is not None:
        raise OutOfClass("graph contains an ISK4", isk)


def best_proper_wheel(g: Graph, wheels: list[Wheel]) -> Wheel | None:
    for w in sorted(wheels, key=wheel_key):
        if is_proper_wheel(g, w):
            return w
    return None


def decompose(g: Graph, budget: int = DEFAULT_BUDGET, checked: bool = False) -> DecompositionOutcome:
    """The first outcome of the decomposition theorem that applies to g.

    The wheel outcome uses a proper wheel with fewest spokes.  If that wheel
    does not decompose, every other wheel is tried (marked ``fallback``)
    before TheoremViolation is raised.
    """
    if not checked:
        check_class(g, budget)
    if is_series_parallel(g):
        return DecompositionOutcome("series_parallel")
    mp = multipartite_class(g)
    if mp.kind == "complete_bipartite":
        return DecompositionOutcome("complete_bipartite", mp)
    cc = find_clique_cutset(g, 2)
    if cc is not None:
        return DecompositionOutcome("clique_cutset_le2", cc)
    wheels = sorted(enumerate_wheels(g), key=wheel_key)
    best = best_proper_wheel(g, wheels)
    if best is not None:
        d = wheel_decomposition(g, best)
        if d is not None:
            return DecompositionOutcome("wheel_decomposition", d)
    for w in wheels:
        if w is best:
            continue
        d = wheel_decomposition(g, w)
        if d is not None:
            return DecompositionOutcome("wheel_decomposition", d, fallback=True)
    raise TheoremViolation("no outcome of the decomposition theorem applies", g)


def check_outcome(g: Graph, out: DecompositionOutcome) -> bool:
    """Re-verify an outcome with the checkers of the relevant module."""
    from .cutsets import check_witness

    if out.tag == "series_parallel":
        return is_series_parallel(g)
    if out.tag == "complete_bipartite":
        mp = multipartite_class(g)
        return mp.kind == "complete_bipartite" and mp == out.witness
    if out.tag == "clique_cutset_le2":
        w = out.witness
        return w.kind == "clique" and len(w.cutset) <= 2 and check_witness(g, w)
    if out.tag == "wheel_decomposition":
        return check_wheel_decomposition(g, out.witness)
    return False
