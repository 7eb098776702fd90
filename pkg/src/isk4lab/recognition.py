"""Class-membership predicates: ISK4, K33 and prism detection, series-parallel,
complete multipartite, chordless and sparse recognition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .graph import Graph, bits, girth, lowest, to_mask, triangle_witness

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The backtracking node budget ran out before the search finished."""


@dataclass(frozen=True)
class IskWitness:
    branch_vertices: tuple[int, int, int, int]
    paths: tuple[tuple[int, ...], ...]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes: int):
        self.left = nodes

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("backtracking node budget exhausted")


def _path_system(
    g: Graph,
    terminals: int,
    pairs: Sequence[tuple[int, int]],
    budget: _Budget,
    through: int | None = None,
) -> list[tuple[int, ...]] | None:
    """Find induced, internally disjoint paths joining each terminal pair.

    The union of ``terminals`` and the path interiors must induce exactly the
    fixed terminal edges plus the path edges.  Adjacent pairs are joined by
    their edge; every other edge between terminals must have been vetted by
    the caller.  With ``through`` set, the first path must pass through that
    vertex.
    """
    adj = g.adj
    forced = []
    free = []
    if through is not None and adj[pairs[0][0]] >> pairs[0][1] & 1:
        return None
    for p, q in pairs:
        if adj[p] >> q & 1:
            forced.append((p, q))
        else:
            free.append((p, q))
    # paths each terminal still has to start, per search depth
    demand = []
    for start in range(len(free)):
        rem: dict[int, int] = {}
        for p, q in free[start:]:
            rem[p] = rem.get(p, 0) + 1
            rem[q] = rem.get(q, 0) + 1
        demand.append(tuple(rem.items()))

    def feasible(S: int, start: int) -> bool:
        for t, k in demand[start]:
            if (adj[t] & ~S).bit_count() < k:
                return False
        return True

    def solve(idx: int, S: int) -> list[tuple[int, ...]] | None:
        if idx == len(free):
            return []
        if not feasible(S, idx):
            return None
        p, q = free[idx]
        must = through if (idx == 0 and through is not None) else None
        qbit = 1 << q
        # iterative DFS over induced p..q paths
        stack = [(p, (p,), S)]
        while stack:
            u, path, used = stack.pop()
            ok = (1 << u) | qbit
            if must is not None and not (used >> must & 1):
                if adj[must] & used & ~ok:
                    continue
            for w in bits(adj[u] & ~used):
                budget.spend()
                touch = adj[w] & used
                if touch & ~ok:
                    continue
                if touch & qbit:
                    if must is not None and w != must and not (used >> must & 1):
                        continue
                    rest = solve(idx + 1, used | (1 << w))
                    if rest is not None:
                        return [path + (w, q)] + rest
                else:
                    stack.append((w, path + (w,), used | (1 << w)))
        return None

    found = solve(0, terminals)
    if found is None:
        return None
    return [(p, q) for p, q in forced] + found


def _isk4_branch_search(g: Graph, branch: tuple[int, ...], budget: _Budget, through=None):
    pairs = list(combinations(branch, 2))
    paths = _path_system(g, to_mask(branch), pairs, budget, through)
    if paths is None:
        return None
    return IskWitness(tuple(branch), tuple(sorted(paths)))


def contains_isk4(g: Graph, budget: int = DEFAULT_BUDGET, through: int | None = None) -> IskWitness | None:
    """An induced subdivision of K4 in ``g``, or None.

    The search picks four branch vertices, then grows the six branch paths by
    backtracking, rejecting any vertex with an edge into the partial witness
    other than to its path predecessor or its target.  With ``through`` the
    search is restricted to witnesses containing that vertex.
    """
    b = _Budget(budget)
    deg3 = [v for v in range(g.n) if g.adj[v].bit_count() >= 3]
    if through is None:
        for branch in combinations(deg3, 4):
            w = _isk4_branch_search(g, branch, b)
            if w is not None:
                return w
        return None
    if g.adj[through].bit_count() < 2:
        return None
    others = [v for v in deg3 if v != through]
    if g.adj[through].bit_count() >= 3:
        for rest in combinations(others, 3):
            w = _isk4_branch_search(g, tuple(sorted(rest + (through,))), b)
            if w is not None:
                return w
    # ``through`` as a subdivision vertex: try each branch pair as its carrier
    for branch in combinations(others, 4):
        if not _could_carry(g, branch, through):
            continue
        for p, q in combinations(branch, 2):
            rest = [pq for pq in combinations(branch, 2) if pq != (p, q)]
            paths = _path_system(g, to_mask(branch), [(p, q)] + rest, b, through)
            if paths is not None:
                return IskWitness(tuple(branch), tuple(sorted(paths)))
    return None


def _could_carry(g: Graph, branch, v: int) -> bool:
    # a subdivision vertex sees at most two witness vertices, hence at most two branch vertices
    return (g.adj[v] & to_mask(branch)).bit_count() <= 2 and not (1 << v) & to_mask(branch)


def is_isk4_witness(g: Graph, w: IskWitness) -> bool:
    """Check that ``w`` induces a subdivision of K4 with the reported structure."""
    branch = w.branch_vertices
    if len(set(branch)) != 4 or len(w.paths) != 6:
        return False
    ends = sorted(tuple(sorted((p[0], p[-1]))) for p in w.paths)
    if ends != sorted(combinations(sorted(branch), 2)):
        return False
    interiors = [v for p in w.paths for v in p[1:-1]]
    if len(set(interiors)) != len(interiors) or set(interiors) & set(branch):
        return False
    mask = to_mask(w.vertex_set)
    expected = {v: 0 for v in w.vertex_set}
    for p in w.paths:
        for a, c in zip(p, p[1:]):
            expected[a] |= 1 << c
            expected[c] |= 1 << a
    return all(g.adj[v] & mask == m for v, m in expected.items())


def contains_k33(g: Graph, through: int | None = None) -> frozenset[int] | None:
    """Six vertices inducing K_{3,3}, or None.

    One side is grown from its least vertex (or from ``through``), the other
    is a stable triple inside the common neighbourhood of the first.
    """
    adj = g.adj
    full = g.full_mask
    starts = range(g.n) if through is None else (through,)
    for a in starts:
        non = full & ~adj[a] & ~(1 << a)
        if through is None:
            non &= ~((2 << a) - 1)
        for b in bits(non):
            ab = adj[a] & adj[b]
            if ab.bit_count() < 3:
                continue
            for c in bits(non & ~adj[b] & ~((2 << b) - 1)):
                common = ab & adj[c]
                if common.bit_count() < 3:
                    continue
                for x in bits(common):
                    rest = common & ~adj[x] & ~((2 << x) - 1)
                    for y in bits(rest):
                        z = rest & ~adj[y] & ~((2 << y) - 1)
                        if z:
                            return frozenset((a, b, c, x, y, lowest(z)))
    return None


def contains_prism(g: Graph, budget: int = DEFAULT_BUDGET) -> frozenset[int] | None:
    """Vertex set of an induced prism, or None."""
    tris = []
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            for w in bits(adj[u] & adj[v] >> (v + 1) << (v + 1)):
                tris.append((u, v, w))
    b = _Budget(budget)
    for t1, t2 in combinations(tris, 2):
        if set(t1) & set(t2):
            continue
        terms = to_mask(t1 + t2)
        for perm in permutations(t2):
            pairs = list(zip(t1, perm))
            # any edge between the triangles must be one of the matched pairs
            cross = {(a, c) for a in t1 for c in t2 if adj[a] >> c & 1}
            if not cross <= set(pairs):
                continue
            paths = _path_system(g, terms, pairs, b)
            if paths is not None:
                return frozenset(v for p in paths for v in p)
    return None


def is_series_parallel(g: Graph) -> bool:
    """True iff no subgraph of ``g`` is a subdivision of K4.

    Reduction: delete vertices of degree at most 1 and suppress vertices of
    degree 2 (parallel edges merge, as the adjacency is kept simple); the
    graph is series-parallel iff this empties it.
    """
    adj = list(g.adj)
    alive = g.full_mask
    queue = [v for v in range(g.n) if adj[v].bit_count() <= 2]
    while queue:
        v = queue.pop()
        if not alive >> v & 1:
            continue
        nb = adj[v]
        d = nb.bit_count()
        if d > 2:
            continue
        alive &= ~(1 << v)
        adj[v] = 0
        for u in bits(nb):
            adj[u] &= ~(1 << v)
        if d == 2:
            a = lowest(nb)
            c = lowest(nb & ~(1 << a))
            adj[a] |= 1 << c
            adj[c] |= 1 << a
        for u in bits(nb):
            if adj[u].bit_count() <= 2:
                queue.append(u)
    return alive == 0


@dataclass(frozen=True)
class Multipartite:
    kind: str  # "complete_bipartite", "complete_tripartite" or "neither"
    parts: tuple[frozenset[int], ...] = ()


def multipartite_class(g: Graph) -> Multipartite:
    """Complete bipartite / tripartite recognition with non-empty parts."""
    if g.n < 2:
        return Multipartite("neither")
    comp = g.complement()
    parts = comp.components()
    for p in parts:
        for v in bits(p):
            if g.adj[v] & p:
                return Multipartite("neither")
            if g.adj[v] != g.full_mask & ~p:
                return Multipartite("neither")
    sides = tuple(frozenset(bits(p)) for p in parts)
    if len(parts) == 2:
        return Multipartite("complete_bipartite", sides)
    if len(parts) == 3:
        return Multipartite("complete_tripartite", sides)
    return Multipartite("neither")


def is_chordless(g: Graph) -> bool:
    """No cycle has a chord: no edge uv leaves u, v 2-connected in G - uv."""
    from .graph import cut_vertices

    adj = g.adj
    for u, v in g.edges():
        # uv is a chord iff G - uv has two internally disjoint u-v paths,
        # i.e. some u-v path avoids each single interior vertex.
        h = list(adj)
        h[u] &= ~(1 << v)
        h[v] &= ~(1 << u)
        hg = Graph._trusted(tuple(h))
        comp = next(c for c in hg.components() if c >> u & 1)
        if not comp >> v & 1:
            continue
        # u, v in one block iff no cut vertex of the component separates them
        separated = False
        for c in bits(cut_vertices(hg, comp) & ~(1 << u) & ~(1 << v)):
            rest = comp & ~(1 << c)
            part = next(x for x in hg.components(rest) if x >> u & 1)
            if not part >> v & 1:
                separated = True
                break
        if not separated:
            return False
    return True


def is_sparse(g: Graph) -> bool:
    """Every edge has an end of degree at most 2."""
    deg = g.degrees()
    return all(deg[u] <= 2 or deg[v] <= 2 for u, v in g.edges())


@dataclass(frozen=True)
class ChordlessStatus:
    chordless: bool
    sparse: bool


def chordless_status(g: Graph) -> ChordlessStatus:
    sparse = is_sparse(g)
    chordless = True if sparse else is_chordless(g)
    assert chordless or not sparse
    return ChordlessStatus(chordless, sparse)


@dataclass(frozen=True)
class ClassProfile:
    triangle_free: bool
    isk4_free: bool
    k33_free: bool
    girth: int | None
    series_parallel: bool
    complete_bipartite: bool
    complete_tripartite: bool
    chordless: bool
    sparse: bool


def profile(g: Graph, budget: int = DEFAULT_BUDGET) -> ClassProfile:
    mp = multipartite_class(g)
    cs = chordless_status(g)
    return ClassProfile(
        triangle_free=triangle_witness(g) is None,
        isk4_free=contains_isk4(g, budget) is None,
        k33_free=contains_k33(g) is None,
        girth=girth(g),
        series_parallel=is_series_parallel(g),
        complete_bipartite=mp.kind == "complete_bipartite",
        complete_tripartite=mp.kind == "complete_tripartite",
        chordless=cs.chordless,
        sparse=cs.sparse,
    )
