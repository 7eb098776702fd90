"""Immutable simple graphs over dense vertex ids, with bitset adjacency.

Vertex sets are passed around as Python ints used as bitsets: bit ``v`` is
set when vertex ``v`` belongs to the set.  Python ints are unbounded, so the
same representation serves every graph size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitset.  Instances are
    immutable and hashable; every derived graph is a new object.
    """

    __slots__ = ("n", "adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._set(n, tuple(adj))

    def _set(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_nbrs", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from neighbourhood bitsets, checking symmetry and loops."""
        adj = tuple(masks)
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}->{u}")
        g = cls.__new__(cls)
        g._set(n, adj)
        return g

    @classmethod
    def _trusted(cls, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g._set(len(adj), adj)
        return g

    # -- elementary queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            object.__setattr__(
                self, "_nbrs", tuple(tuple(bits(m)) for m in self.adj)
            )
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        """N[v] as a bitset."""
        return self.adj[v] | (1 << v)

    def neighborhood(self, mask: int) -> int:
        """N(C) for a vertex set C: neighbours of C outside C."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of G[mask] as bitsets, ordered by least vertex."""
        rest = self.full_mask if mask is None else mask
        adj = self.adj
        comps = []
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                reach = 0
                while frontier:
                    low = frontier & -frontier
                    reach |= adj[low.bit_length() - 1]
                    frontier ^= low
                frontier = reach & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self, mask: int | None = None) -> bool:
        m = self.full_mask if mask is None else mask
        return m == 0 or len(self.components(m)) == 1

    def induced(self, vertices: Iterable[int] | int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph and the table mapping new ids to old ids."""
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        old = tuple(bits(mask))
        index = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            m = 0
            for u in bits(self.adj[v] & mask):
                m |= 1 << index[u]
            adj.append(m)
        return Graph._trusted(tuple(adj)), old

    def without(self, vertices: Iterable[int] | int) -> tuple["Graph", tuple[int, ...]]:
        """G minus a vertex set (written G \\ C), with the id table."""
        mask = vertices if isinstance(vertices, int) else to_mask(vertices)
        return self.induced(self.full_mask & ~mask)

    def add_vertex(self, nbr_mask: int) -> "Graph":
        """New graph with vertex ``n`` adjacent to ``nbr_mask``."""
        v = self.n
        adj = [m | (1 << v) if nbr_mask >> u & 1 else m for u, m in enumerate(self.adj)]
        adj.append(nbr_mask)
        return Graph._trusted(tuple(adj))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v, m in enumerate(self.adj):
            adj[perm[v]] = to_mask(perm[u] for u in bits(m))
        return Graph._trusted(tuple(adj))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph._trusted(tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.adj))
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors used throughout tests and demos -------------------------------


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(m: int, k: int) -> Graph:
    return Graph(m + k, [(u, m + v) for u in range(m) for v in range(k)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def theta(branch_lengths: Iterable[int]) -> Graph:
    """Two hubs 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges = []
    n = 2
    for length in branch_lengths:
        if length < 1:
            raise ValueError("branch length must be positive")
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Graph(n, edges)


def wheel_on_cycle(rim: int, spokes: Iterable[int]) -> Graph:
    """Cycle 0..rim-1 plus a centre (id ``rim``) adjacent to ``spokes``."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(s, rim) for s in spokes]
    return Graph(rim + 1, edges)


# -- structural queries -----------------------------------------------------------


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests."""
    best = None
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def triangle_witness(g: Graph) -> tuple[int, int, int] | None:
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            common = adj[u] & adj[v] >> (v + 1) << (v + 1)
            if common:
                return (u, v, lowest(common))
    return None


def is_triangle_free(g: Graph) -> bool:
    return triangle_witness(g) is None


@dataclass(frozen=True)
class ConnectivityReport:
    components: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    is_two_connected: bool


def cut_vertices(g: Graph, mask: int | None = None) -> int:
    """Articulation points of G[mask] as a bitset (iterative low-link)."""
    mask = g.full_mask if mask is None else mask
    adj = g.adj
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts = 0
    counter = 0
    for root in bits(mask):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(bits(adj[root] & mask)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(bits(adj[w] & mask))))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    cuts |= 1 << parent
        if root_children >= 2:
            cuts |= 1 << root
    return cuts


def connectivity(g: Graph) -> ConnectivityReport:
    comps = g.components()
    cuts = cut_vertices(g)
    two = len(comps) == 1 and g.n >= 3 and cuts == 0
    return ConnectivityReport(
        components=tuple(frozenset(bits(c)) for c in comps),
        cut_vertices=frozenset(bits(cuts)),
        is_two_connected=two,
    )


def is_two_connected(g: Graph, mask: int | None = None) -> bool:
    mask = g.full_mask if mask is None else mask
    return mask.bit_count() >= 3 and g.is_connected(mask) and cut_vertices(g, mask) == 0


# -- holes ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hole:
    """A chordless cycle of length at least 4, in canonical form.

    The canonical form starts at the least vertex and continues towards the
    smaller of its two cycle neighbours.
    """

    cycle: tuple[int, ...]

    @property
    def mask(self) -> int:
        return to_mask(self.cycle)

    def __len__(self):
        return len(self.cycle)

    def subpath(self, i: int, j: int) -> tuple[int, ...]:
        """Vertices from position i forward to position j, inclusive."""
        k = len(self.cycle)
        out = [self.cycle[i % k]]
        while i % k != j % k:
            i += 1
            out.append(self.cycle[i % k])
        return tuple(out)


def canonical_cycle(seq: Iterable[int]) -> tuple[int, ...]:
    cyc = list(seq)
    i = cyc.index(min(cyc))
    fwd = cyc[i:] + cyc[:i]
    back = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, back))


def is_hole(g: Graph, seq: Iterable[int]) -> bool:
    cyc = tuple(seq)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    mask = to_mask(cyc)
    for i, v in enumerate(cyc):
        expected = (1 << cyc[i - 1]) | (1 << cyc[(i + 1) % k])
        if g.adj[v] & mask != expected:
            return False
    return True


def enumerate_holes(g: Graph, max_len: int | None = None, within: int | None = None) -> Iterator[Hole]:
    """Every hole of G (optionally of G[within]) exactly once, canonical form.

    Holes are grown as chordless paths from their least vertex ``s``; a
    candidate next vertex may touch the path only at its current end, or at
    ``s`` when it closes the cycle.
    """
    adj = g.adj
    universe = g.full_mask if within is None else within
    limit = g.n if max_len is None else max_len
    if limit < 4:
        return
    for s in bits(universe):
        allowed = universe & ~((2 << s) - 1)
        for v1 in bits(adj[s] & allowed):
            stack = [(v1, (s, v1), (1 << s) | (1 << v1))]
            while stack:
                u, path, used = stack.pop()
                others = used & ~(1 << u) & ~(1 << s)
                for w in bits(adj[u] & allowed & ~used):
                    if adj[w] & others:
                        continue
                    if adj[w] >> s & 1:
                        if len(path) >= 3 and w > v1:
                            yield Hole(path + (w,))
                    elif len(path) + 2 <= limit:
                        stack.append((w, path + (w,), used | (1 << w)))


def enumerate_cycles(g: Graph, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every cycle of G (chords allowed) exactly once, in canonical form."""
    adj = g.adj
    universe = g.full_mask if within is None else within
    for s in bits(universe):
        allowed = universe & ~((2 << s) - 1)
        for v1 in bits(adj[s] & allowed):
            stack = [(v1, (s, v1), (1 << s) | (1 << v1))]
            while stack:
                u, path, used = stack.pop()
                for w in bits(adj[u] & allowed & ~used):
                    if adj[w] >> s & 1 and w > v1:
                        yield path + (w,)
                    stack.append((w, path + (w,), used | (1 << w)))
