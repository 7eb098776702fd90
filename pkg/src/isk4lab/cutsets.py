"""Clique, star, double star and proper 2-cutsets: search and verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, to_mask


@dataclass(frozen=True)
class CutsetWitness:
    """Evidence that ``cutset`` disconnects a graph.

    ``kind`` is one of ``clique``, ``star``, ``double_star`` or ``proper_two``.
    Star cutsets record their ``center``; double star cutsets the adjacent
    pair ``x, y``; proper 2-cutsets the split ``(X, Y, a, b)``.
    """

    kind: str
    cutset: frozenset[int]
    components: tuple[frozenset[int], ...]
    center: int | None = None
    x: int | None = None
    y: int | None = None
    split: tuple[frozenset[int], frozenset[int], int, int] | None = field(default=None)


def verify_separation(g: Graph, cut, a_side, b_side) -> bool:
    """True iff no component of ``g - cut`` meets both ``a_side`` and ``b_side``."""
    cut_m, a_m, b_m = (to_mask(s) if not isinstance(s, int) else s for s in (cut, a_side, b_side))
    if cut_m & a_m or cut_m & b_m or a_m & b_m:
        raise ValueError("cut, a_side and b_side must be pairwise disjoint")
    for comp in g.components(g.full_mask & ~cut_m):
        if comp & a_m and comp & b_m:
            return False
    return True


def _witness(g: Graph, kind: str, cut: int, **extra) -> CutsetWitness:
    comps = g.components(g.full_mask & ~cut)
    return CutsetWitness(
        kind, frozenset(bits(cut)), tuple(frozenset(bits(c)) for c in comps), **extra
    )


def _is_cutset(g: Graph, cut: int) -> bool:
    return len(g.components(g.full_mask & ~cut)) >= 2


def find_clique_cutset(g: Graph, kmax: int) -> CutsetWitness | None:
    """A smallest clique cutset of size at most ``kmax``.

    Ties go to the lexicographically least vertex set.  A disconnected graph
    has the empty clique cutset.
    """
    if g.n <= 2:
        return None
    if not g.is_connected():
        return _witness(g, "clique", 0)
    for k in range(1, kmax + 1):
        for clique in _cliques(g, k):
            cut = to_mask(clique)
            if _is_cutset(g, cut):
                return _witness(g, "clique", cut)
    return None


def _cliques(g: Graph, k: int):
    """Cliques of size k in lexicographic order."""
    adj = g.adj

    def grow(chosen, cand):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for v in bits(cand):
            yield from grow(chosen + [v], cand & adj[v] & ~((2 << v) - 1))

    yield from grow([], g.full_mask)


def _dominated_cutset(g: Graph, core: int, pool: int) -> int | None:
    """Cutset C with core ⊆ C ⊆ core ∪ pool, or None.  No single vertex of
    pool can be dropped from C without reconnecting the graph.

    Writing C = core ∪ (pool − U), C is a cutset iff G[R ∪ U] is
    disconnected, where R is everything outside core ∪ pool.  A seed U is
    chosen, then grown greedily from the largest ids down so that small ids
    stay in the cutset.
    """
    rest = g.full_mask & ~core & ~pool
    comps = g.components(rest)
    adj = g.adj
    if len(comps) >= 2:
        keep = 0
    elif rest:
        loose = [u for u in bits(pool) if not adj[u] & rest]
        if not loose:
            return None
        keep = 1 << loose[-1]
    else:
        keep = None
        members = list(bits(pool))
        for u in reversed(members):
            for w in reversed(members):
                if w < u and not adj[u] >> w & 1:
                    keep = (1 << u) | (1 << w)
                    break
            if keep is not None:
                break
        if keep is None:
            return None
    # repeat until stable: a vertex rejected early may fit once others joined
    grown = True
    while grown:
        grown = False
        for u in reversed(list(bits(pool & ~keep))):
            trial = keep | (1 << u)
            if len(g.components(rest | trial)) >= 2:
                keep = trial
                grown = True
    return core | (pool & ~keep)


def find_star_cutset(g: Graph) -> CutsetWitness | None:
    """A star cutset from which no single non-centre vertex can be dropped.

    Centres are tried in ascending order; the first one that admits a star
    cutset wins.
    """
    if g.n <= 2:
        return None
    for c in range(g.n):
        cut = _dominated_cutset(g, 1 << c, g.adj[c])
        if cut is not None:
            return _witness(g, "star", cut, center=c)
    return None


def find_double_star_cutset(g: Graph) -> CutsetWitness | None:
    """A double star cutset: adjacent x, y with every other member adjacent to one of them."""
    if g.n <= 2:
        return None
    for x, y in g.edges():
        core = (1 << x) | (1 << y)
        cut = _dominated_cutset(g, core, (g.adj[x] | g.adj[y]) & ~core)
        if cut is not None:
            return _witness(g, "double_star", cut, x=x, y=y)
    return None


def _is_path_graph(g: Graph, mask: int) -> bool:
    k = mask.bit_count()
    if not g.is_connected(mask):
        return False
    degs = [(g.adj[v] & mask).bit_count() for v in bits(mask)]
    edges = sum(degs) // 2
    return edges == k - 1 and max(degs, default=0) <= 2


def is_proper_split(g: Graph, X, Y, a: int, b: int) -> bool:
    """Check every defining condition of a split (X, Y, a, b)."""
    xm = to_mask(X) if not isinstance(X, int) else X
    ym = to_mask(Y) if not isinstance(Y, int) else Y
    ab = (1 << a) | (1 << b)
    if a == b or g.has_edge(a, b) or not xm or not ym:
        return False
    if xm & ym or (xm | ym) & ab or (xm | ym | ab) != g.full_mask:
        return False
    if g.neighborhood(xm) & ym:
        return False
    for side in (xm, ym):
        m = side | ab
        comp = next(c for c in g.components(m) if c >> a & 1)
        if not comp >> b & 1:
            return False
        if _is_path_graph(g, m):
            return False
    return True


def find_proper_two_cutset(g: Graph) -> CutsetWitness | None:
    """A proper 2-cutset with its split, trying pairs and groupings in order."""
    if g.n <= 3 or not g.is_connected():
        return None
    for a, b in combinations(range(g.n), 2):
        if g.has_edge(a, b):
            continue
        ab = (1 << a) | (1 << b)
        comps = g.components(g.full_mask & ~ab)
        k = len(comps)
        if k < 2:
            continue
        # component 0 always on the X side
        for sel in range(1 << (k - 1)):
            xm = comps[0]
            for i in range(1, k):
                if sel >> (i - 1) & 1:
                    xm |= comps[i]
            ym = g.full_mask & ~ab & ~xm
            if ym and is_proper_split(g, xm, ym, a, b):
                return _witness(
                    g, "proper_two", ab,
                    split=(frozenset(bits(xm)), frozenset(bits(ym)), a, b),
                )
    return None


def check_witness(g: Graph, w: CutsetWitness) -> bool:
    """Re-verify a cutset witness against ``g`` from scratch."""
    cut = to_mask(w.cutset)
    if cut & ~g.full_mask:
        return False
    comps = g.components(g.full_mask & ~cut)
    if len(comps) < 2:
        return False
    if w.kind == "clique":
        return all(g.has_edge(u, v) for u, v in combinations(w.cutset, 2))
    if w.kind == "star":
        c = w.center
        return c in w.cutset and cut & ~(1 << c) & ~g.adj[c] == 0
    if w.kind == "double_star":
        x, y = w.x, w.y
        if not (x in w.cutset and y in w.cutset and g.has_edge(x, y)):
            return False
        return cut & ~(g.adj[x] | g.adj[y] | (1 << x) | (1 << y)) == 0
    if w.kind == "proper_two":
        X, Y, a, b = w.split
        return w.cutset == {a, b} and is_proper_split(g, X, Y, a, b)
    return False
