"""Chordless graphs: the degree pattern on cycles, blocks of proper 2-cutsets,
and the label splitter for trees used by the degree-2 arguments."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cutsets import CutsetWitness, check_witness, find_proper_two_cutset
from .graph import Graph, bits, is_two_connected, lowest, to_mask
from .recognition import is_chordless


# -- labelled trees -------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledTree:
    tree: Graph
    labels_x: frozenset[int]
    labels_y: frozenset[int]

    def __post_init__(self):
        t = self.tree
        if t.n == 0 or not t.is_connected() or t.edge_count != t.n - 1:
            raise ValueError("labels must sit on a non-empty tree")
        if any(not 0 <= v < t.n for v in self.labels_x | self.labels_y):
            raise ValueError("label on a vertex outside the tree")


@dataclass(frozen=True)
class TreeSplit:
    """Either two disjoint x-to-y paths ``p`` and ``q`` (tag disjoint_paths)
    or a vertex ``v`` with subtrees ``t_x`` and ``t_y`` (tag split_vertex)."""

    tag: str
    p: tuple[int, ...] | None = None
    q: tuple[int, ...] | None = None
    v: int | None = None
    t_x: frozenset[int] | None = None
    t_y: frozenset[int] | None = None


class _TreeIndex:
    """Per-tree tables: components of T - v and the path between any two vertices."""

    def __init__(self, t: Graph):
        n = t.n
        self.n = n
        self.pieces = [t.components(t.full_mask & ~(1 << v)) for v in range(n)]
        self.paths = [[()] * n for _ in range(n)]
        for s in range(n):
            parent = {s: None}
            order = [s]
            for u in order:
                for w in t.neighbors(u):
                    if w not in parent:
                        parent[w] = u
                        order.append(w)
            for e in range(n):
                p = [e]
                while p[-1] != s:
                    p.append(parent[p[-1]])
                self.paths[s][e] = tuple(reversed(p))
        self.path_masks = [[to_mask(p) for p in row] for row in self.paths]


@lru_cache(maxsize=256)
def _index(t: Graph) -> _TreeIndex:
    return _TreeIndex(t)


def tree_label_split(lt: LabeledTree) -> TreeSplit:
    """The outcome of the tree dichotomy that holds for ``lt``.

    Follows the classical argument: with at most one x-label (or y-label)
    split at it; otherwise split at the least vertex lying on every
    x-to-y path, and failing that return two disjoint x-to-y paths
    (shortest first pair, then least endpoints).
    """
    t = lt.tree
    tag, first, second = split_masks(t, to_mask(lt.labels_x), to_mask(lt.labels_y))
    if tag == "disjoint_paths":
        return TreeSplit(tag, p=first, q=second)
    v = lowest(first & second)
    return TreeSplit(tag, v=v, t_x=frozenset(bits(first)), t_y=frozenset(bits(second)))


def split_masks(t: Graph, xm: int, ym: int):
    """Bitmask core of ``tree_label_split``.

    Returns ("split_vertex", T_x mask, T_y mask) or ("disjoint_paths", P, Q)
    with P and Q as vertex tuples.
    """
    idx = _index(t)
    full = t.full_mask
    if xm & (xm - 1) == 0:
        v = (xm.bit_length() - 1) if xm else 0
        return "split_vertex", 1 << v, full
    if ym & (ym - 1) == 0:
        v = (ym.bit_length() - 1) if ym else 0
        return "split_vertex", full, 1 << v
    for v, pieces in enumerate(idx.pieces):
        side_x = 1 << v
        for c in pieces:
            if c & xm:
                if c & ym:
                    break
                side_x |= c
        else:
            return "split_vertex", side_x, (full & ~side_x) | (1 << v)
    found = _disjoint_paths(idx, xm, ym)
    if found is None:
        raise AssertionError("tree dichotomy failed: neither outcome found")
    return ("disjoint_paths",) + found


def _disjoint_paths(idx: _TreeIndex, xm: int, ym: int):
    cands = sorted(
        (len(idx.paths[a][b]), a, b) for a in bits(xm) for b in bits(ym)
    )
    for _, a, b in cands:
        pm = idx.path_masks[a][b]
        for _, c, d in cands:
            if not idx.path_masks[c][d] & pm:
                return idx.paths[a][b], idx.paths[c][d]
    return None


def check_tree_split(lt: LabeledTree, s: TreeSplit) -> bool:
    """Verify a split against the definition of its outcome."""
    t = lt.tree
    if s.tag == "disjoint_paths":
        for path in (s.p, s.q):
            if not path or path[0] not in lt.labels_x or path[-1] not in lt.labels_y:
                return False
            if len(set(path)) != len(path):
                return False
            if any(not t.has_edge(u, w) for u, w in zip(path, path[1:])):
                return False
        return not set(s.p) & set(s.q)
    if s.tag == "split_vertex":
        tx, ty = s.t_x, s.t_y
        if tx | ty != frozenset(range(t.n)) or tx & ty != {s.v}:
            return False
        if not lt.labels_x <= tx or not lt.labels_y <= ty:
            return False
        return t.is_connected(to_mask(tx)) and t.is_connected(to_mask(ty))
    return False


# -- the degree pattern on cycles ----------------------------------------------------------


def four_degree_pattern(g: Graph, cyc) -> tuple[int, int, int, int] | None:
    """Least (a, b, c, d) in cyclic order along ``cyc`` with degrees 2, >=3, 2, >=3.

    Either traversal direction counts.  Returns None when no such quadruple
    exists.
    """
    cyc = tuple(cyc)
    k = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    deg = g.degrees()
    low = sorted(v for v in cyc if deg[v] == 2)
    high = sorted(v for v in cyc if deg[v] >= 3)

    def ordered(a, b, c, d):
        pa = pos[a]
        for sign in (1, -1):
            ob, oc, od = ((sign * (pos[v] - pa)) % k for v in (b, c, d))
            if ob < oc < od:
                return True
        return False

    for a, b, c, d in product(low, high, low, high):
        if a != c and b != d and ordered(a, b, c, d):
            return a, b, c, d
    return None


# -- blocks of a proper 2-cutset ----------------------------------------------------------------


class InvalidWitness(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    """One block: ``graph`` on local ids, ``old_ids[i]`` the parent id of
    local vertex i (None for the marker, always the last vertex)."""

    graph: Graph
    old_ids: tuple[int | None, ...]

    @property
    def marker(self) -> int:
        return self.graph.n - 1


@dataclass(frozen=True)
class BlockPair:
    g_x: Block  # built on X, carries the marker m_Y
    g_y: Block  # built on Y, carries the marker m_X


def _block(g: Graph, side: frozenset[int], a: int, b: int) -> Block:
    part, old = g.induced(side | {a, b})
    local = {v: i for i, v in enumerate(old)}
    marked = part.add_vertex((1 << local[a]) | (1 << local[b]))
    return Block(marked, old + (None,))


def chordless_blocks(g: Graph, w: CutsetWitness, check: bool = True) -> BlockPair:
    """The two blocks of the split, each side plus a marker joined to a and b.

    With ``check`` set and a 2-connected chordless parent, both blocks are
    asserted 2-connected and chordless.
    """
    if w.kind != "proper_two" or w.split is None or not check_witness(g, w):
        raise InvalidWitness("not a valid proper 2-cutset witness for this graph")
    x_side, y_side, a, b = w.split
    pair = BlockPair(_block(g, x_side, a, b), _block(g, y_side, a, b))
    if check and is_two_connected(g) and is_chordless(g):
        for blk in (pair.g_x, pair.g_y):
            if not (is_two_connected(blk.graph) and is_chordless(blk.graph)):
                raise AssertionError("block of a 2-connected chordless graph lost a property")
    return pair


def split_fully(g: Graph) -> list[Graph]:
    """Split along proper 2-cutsets until no block has one; returns the leaves."""
    leaves = []
    todo = [g]
    while todo:
        h = todo.pop()
        w = find_proper_two_cutset(h)
        if w is None:
            leaves.append(h)
            continue
        pair = chordless_blocks(h, w, check=False)
        for blk in (pair.g_x, pair.g_y):
            if blk.graph.n >= h.n:
                raise AssertionError("block is not smaller than its parent")
            todo.append(blk.graph)
    return leaves
