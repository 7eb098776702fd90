"""Vertices of degree two: the (x, y)-property, bad triples and their
construction recipes, and 3-coloring by low-degree elimination."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator

import pynauty

from .chordless import LabeledTree, tree_label_split
from .cutsets import find_clique_cutset
from .graph import Graph, bits, is_two_connected, to_mask, triangle_witness
from .recognition import DEFAULT_BUDGET, contains_isk4, contains_k33, is_series_parallel, multipartite_class
from .wheels import OutOfClass


# -- the (x, y)-property ----------------------------------------------------------------


@dataclass(frozen=True)
class PropertyVerdict:
    """``tag`` is has_xy_property (with ``witness``), bad_xx, bad_yy or bad_xy."""

    tag: str
    witness: int | None = None


def _admissible(g: Graph, x: int, y: int) -> None:
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("x and y must be vertices of the graph")
    if x != y and not g.has_edge(x, y):
        raise ValueError(f"x={x} and y={y} must be equal or adjacent")


def degree2_witness(g: Graph, x: int, y: int) -> int | None:
    """Least degree-2 vertex outside N[x] and N[y], if any."""
    far = g.full_mask & ~g.closed(x) & ~g.closed(y)
    for v in bits(far):
        if g.adj[v].bit_count() == 2:
            return v
    return None


def xy_property(g: Graph, x: int, y: int) -> PropertyVerdict:
    _admissible(g, x, y)
    w = degree2_witness(g, x, y)
    if w is not None:
        return PropertyVerdict("has_xy_property", w)
    if degree2_witness(g, x, x) is None:
        return PropertyVerdict("bad_xx")
    if degree2_witness(g, y, y) is None:
        return PropertyVerdict("bad_yy")
    return PropertyVerdict("bad_xy")


def is_bad_triple(g: Graph, x: int, y: int) -> bool:
    _admissible(g, x, y)
    if degree2_witness(g, x, y) is not None:
        return False
    if x == y:
        return True
    return degree2_witness(g, x, x) is not None and degree2_witness(g, y, y) is not None


# -- recipes for bad triples ------------------------------------------------------------------


class RecipeError(ValueError):
    """A recipe breaks one of its conditions; ``condition`` says which (0 = shape)."""

    def __init__(self, condition: int, message: str):
        super().__init__(f"condition {condition}: {message}")
        self.condition = condition


class PreconditionError(ValueError):
    def __init__(self, predicate: str):
        super().__init__(f"precondition failed: {predicate}")
        self.predicate = predicate


class RecoveryFailure(RuntimeError):
    """The structure promised for bad triples did not materialise."""


@dataclass(frozen=True)
class BadTripleRecipe:
    """Tree ``tree`` split into subtrees ``tree_x`` and ``tree_y`` sharing only
    ``glue`` (when ``same_xy`` is false; otherwise both are the whole tree and
    ``glue`` is None), plus degree-2 vertices given as (side, tree anchor)."""

    same_xy: bool
    tree: Graph
    tree_x: frozenset[int]
    tree_y: frozenset[int]
    glue: int | None
    attachments: tuple[tuple[str, int], ...]

    def validate(self) -> None:
        t = self.tree
        everything = frozenset(range(t.n))
        if t.n == 0 or not t.is_connected() or t.edge_count != t.n - 1:
            raise RecipeError(0, "the tree must be a non-empty tree")
        if self.same_xy:
            if self.tree_x != everything or self.tree_y != everything or self.glue is not None:
                raise RecipeError(0, "with x = y both subtrees are the whole tree and there is no glue")
            if any(side != "x" for side, _ in self.attachments):
                raise RecipeError(0, "with x = y every attachment is on side x")
        else:
            if self.tree_x | self.tree_y != everything or self.tree_x & self.tree_y != {self.glue}:
                raise RecipeError(0, "subtrees must cover the tree and meet exactly at the glue vertex")
            for part in (self.tree_x, self.tree_y):
                if not t.is_connected(to_mask(part)):
                    raise RecipeError(0, "each side must induce a subtree")
        for side, anchor in self.attachments:
            home = self.tree_x if side == "x" else self.tree_y if side == "y" else None
            if home is None or anchor not in home:
                raise RecipeError(0, f"attachment ({side}, {anchor}) is not anchored in its subtree")
        sides = [s for s, _ in self.attachments]
        if sides.count("x") < 1 or (not self.same_xy and sides.count("y") < 1):
            raise RecipeError(1, "x and y each need a neighbour outside {x, y}")
        count = [0] * t.n
        for _, anchor in self.attachments:
            count[anchor] += 1
        for v in range(t.n):
            d = t.degree(v)
            need = {0: 3, 1: 2, 2: 1}.get(d, 0)
            if count[v] < need:
                cond = {2: 2, 1: 3, 0: 4}[d]
                raise RecipeError(cond, f"tree vertex {v} of tree-degree {d} has {count[v]} attachments, needs {need}")


@dataclass(frozen=True)
class BuiltRecipe:
    graph: Graph
    x: int
    y: int
    tree_ids: tuple[int, ...]
    attachment_ids: tuple[int, ...]


def recipe_build(r: BadTripleRecipe) -> BuiltRecipe:
    """Vertices: x = 0, then y = 1 unless x = y, then the tree, then one
    vertex per attachment in recipe order."""
    r.validate()
    x = 0
    y = 0 if r.same_xy else 1
    base = 1 if r.same_xy else 2
    tree_ids = tuple(range(base, base + r.tree.n))
    edges = [] if r.same_xy else [(x, y)]
    edges += [(tree_ids[u], tree_ids[v]) for u, v in r.tree.edges()]
    att_ids = []
    nxt = base + r.tree.n
    for side, anchor in r.attachments:
        edges.append((x if side == "x" else y, nxt))
        edges.append((nxt, tree_ids[anchor]))
        att_ids.append(nxt)
        nxt += 1
    return BuiltRecipe(Graph(nxt, edges), x, y, tree_ids, tuple(att_ids))


def recipe_recover(g: Graph, x: int, y: int, budget: int = DEFAULT_BUDGET) -> BadTripleRecipe:
    """Read the recipe of a bad triple off the graph, following the structure
    of the classification: the far tree, its labels and its split."""
    _admissible(g, x, y)
    if g.n < 5:
        raise PreconditionError("at least 5 vertices")
    if triangle_witness(g) is not None:
        raise PreconditionError("triangle-free")
    if not is_two_connected(g):
        raise PreconditionError("2-connected")
    if not is_series_parallel(g):
        raise PreconditionError("series-parallel")
    if find_clique_cutset(g, 2) is not None:
        raise PreconditionError("no clique cutset")
    if not is_bad_triple(g, x, y):
        raise PreconditionError("bad triple")
    adj = g.adj
    near = (g.closed(x) | g.closed(y))
    ring = near & ~(1 << x) & ~(1 << y)
    far = g.full_mask & ~near
    if not far:
        raise RecoveryFailure("nothing outside N[x] and N[y]")
    tree, old = g.induced(far)
    if not tree.is_connected() or tree.edge_count != tree.n - 1:
        raise RecoveryFailure("the far side is not a tree")
    local = {v: i for i, v in enumerate(old)}
    attachments = []
    for a in bits(ring):
        if adj[a].bit_count() != 2:
            raise RecoveryFailure(f"neighbour {a} of x or y does not have degree 2")
        anchor = adj[a] & far
        if anchor.bit_count() != 1:
            raise RecoveryFailure(f"neighbour {a} of x or y has no single neighbour in the tree")
        side = "x" if adj[a] >> x & 1 else "y"
        attachments.append((side, local[anchor.bit_length() - 1]))
    if x == y:
        whole = frozenset(range(tree.n))
        recipe = BadTripleRecipe(True, tree, whole, whole, None, tuple(attachments))
    else:
        lx = frozenset(t for s, t in attachments if s == "x")
        ly = frozenset(t for s, t in attachments if s == "y")
        split = tree_label_split(LabeledTree(tree, lx, ly))
        if split.tag != "split_vertex":
            raise RecoveryFailure("the labelled tree has two disjoint x-to-y paths")
        recipe = BadTripleRecipe(False, tree, split.t_x, split.t_y, split.v, tuple(attachments))
    try:
        recipe.validate()
    except RecipeError as exc:
        raise RecoveryFailure(f"recovered recipe is invalid: {exc}") from exc
    return recipe


def generate_recipes(max_tree_order: int = 4, extras: int = 1) -> Iterator[BadTripleRecipe]:
    """Every valid recipe up to the given tree order, in a fixed order.

    For each tree (smallest first), the x = y recipes come first, then one
    recipe per glue vertex and assignment of the components of T - glue to
    the two sides.  Each tree vertex receives exactly the attachments its
    tree-degree requires (sides chosen in every allowed way), followed by
    variants with up to ``extras`` additional attachments.
    """
    from .enumeration import enumerate_graphs

    for n in range(1, max_tree_order + 1):
        for t in enumerate_graphs(n, ["tree"]):
            everything = frozenset(range(n))
            shapes = [(True, everything, everything, None)]
            for v in range(n):
                comps = t.components(t.full_mask & ~(1 << v))
                for pick in product((0, 1), repeat=len(comps)):
                    tx = frozenset({v}) | frozenset(u for c, s in zip(comps, pick) if s == 0 for u in bits(c))
                    ty = frozenset({v}) | frozenset(u for c, s in zip(comps, pick) if s == 1 for u in bits(c))
                    shapes.append((False, tx, ty, v))
            seen = set()
            for same, tx, ty, glue in shapes:
                slots = sorted({("x", a) for a in tx} | ({("y", a) for a in ty} if not same else set()),
                               key=lambda s: (s[1], s[0]))
                need = [max(0, 3 - t.degree(v)) for v in range(n)]
                per_vertex = []
                for v in range(n):
                    sides = [s for s in slots if s[1] == v]
                    per_vertex.append(list(combinations_with_replacement(sides, need[v])))
                for base in product(*per_vertex):
                    core = tuple(a for group in base for a in group)
                    for k in range(extras + 1):
                        for more in combinations_with_replacement(slots, k):
                            atts = tuple(sorted(core + more, key=lambda s: (s[1], s[0])))
                            if (same, tx, ty, atts) in seen:
                                continue
                            seen.add((same, tx, ty, atts))
                            r = BadTripleRecipe(same, t, tx, ty, glue, atts)
                            try:
                                r.validate()
                            except RecipeError:
                                continue
                            yield r


def _rooted_certificate(g: Graph, x: int, y: int) -> bytes:
    fixed = [{x}] if x == y else [{x}, {y}]
    rest = set(range(g.n)) - {x, y}
    parts = fixed + ([rest] if rest else [])
    ng = pynauty.Graph(g.n, adjacency_dict={v: list(g.neighbors(v)) for v in range(g.n)}, vertex_coloring=parts)
    return pynauty.certificate(ng)


def rooted_isomorphic(g: Graph, gx: int, gy: int, h: Graph, hx: int, hy: int) -> bool:
    """Is there an isomorphism g -> h sending gx to hx and gy to hy?"""
    if g.n != h.n or g.edge_count != h.edge_count or (gx == gy) != (hx == hy):
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return _rooted_certificate(g, gx, gy) == _rooted_certificate(h, hx, hy)


# -- 3-coloring ---------------------------------------------------------------------------


class MissingLowDegreeVertex(RuntimeError):
    """A K33-free graph of the class with minimum degree at least 3."""

    def __init__(self, graph: Graph):
        super().__init__("no vertex of degree at most 2 in a K33-free graph of the class")
        self.graph = graph


@dataclass(frozen=True)
class Coloring:
    color: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.color[v]

    def __len__(self):
        return len(self.color)


def low_degree_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v].bit_count() <= 2]


def verify_coloring(g: Graph, c: Coloring) -> bool:
    col = c.color
    if len(col) != g.n or any(k not in (0, 1, 2) for k in col):
        return False
    return all(col[u] != col[v] for u, v in g.edges())


def _eliminate(g: Graph) -> list[int]:
    """Elimination order: repeatedly the lowest-id vertex of minimum degree."""
    adj = list(g.adj)
    alive = g.full_mask
    order = []
    while alive:
        best = min(bits(alive), key=lambda v: ((adj[v] & alive).bit_count(), v))
        if (adj[best] & alive).bit_count() > 2:
            h, _ = g.induced(alive)
            raise MissingLowDegreeVertex(h)
        order.append(best)
        alive &= ~(1 << best)
    return order


def _greedy_color(g: Graph) -> list[int]:
    order = _eliminate(g)
    col = [-1] * g.n
    for v in reversed(order):
        used = {col[u] for u in g.neighbors(v) if col[u] >= 0}
        col[v] = min(k for k in range(3) if k not in used)
    return col


def merge_colorings(cut, parts) -> Coloring:
    """Glue colorings of the pieces G[K + C_i] into one coloring of G.

    ``parts`` holds (graph, coloring, embedding) with ``embedding[i]`` the
    global id of local vertex i.  The first part keeps its colors; each later
    part is recolored by the permutation that matches it on the cutset K.
    """
    cut = sorted(cut)
    if len(cut) > 2:
        raise ValueError("cutsets of more than two vertices are not supported")
    total = {}
    for idx, (part, coloring, emb) in enumerate(parts):
        local_of = {gv: i for i, gv in enumerate(emb)}
        if idx == 0 and not total:
            perm = {0: 0, 1: 1, 2: 2}
        else:
            perm = {}
            for k in cut:
                src = coloring[local_of[k]]
                dst = total[k]
                if perm.get(src, dst) != dst or dst in {v for s, v in perm.items() if s != src}:
                    raise AssertionError("no color permutation aligns the cutset")
                perm[src] = dst
            spare = [c for c in range(3) if c not in perm.values()]
            for c in range(3):
                if c not in perm:
                    perm[c] = spare.pop(0)
        for i, gv in enumerate(emb):
            colour = perm[coloring[i]]
            if gv in total and total[gv] != colour:
                raise AssertionError("parts disagree on a shared vertex")
            total[gv] = colour
    n = max(total) + 1 if total else 0
    return Coloring(tuple(total[v] for v in range(n)))


def _color_rec(g: Graph) -> list[int]:
    if g.n == 0:
        return []
    if contains_k33(g) is None:
        return _greedy_color(g)
    mp = multipartite_class(g)
    if mp.kind == "complete_bipartite":
        col = [0] * g.n
        for v in mp.parts[1]:
            col[v] = 1
        return col
    cc = find_clique_cutset(g, 2)
    if cc is None:
        raise OutOfClass("graph contains K33 but is neither complete bipartite nor split by a small clique cutset")
    cut = to_mask(cc.cutset)
    parts = []
    for comp in g.components(g.full_mask & ~cut):
        piece, emb = g.induced(comp | cut)
        parts.append((piece, Coloring(tuple(_color_rec(piece))), emb))
    return list(merge_colorings(cc.cutset, parts).color)


def three_color(g: Graph, budget: int = DEFAULT_BUDGET, check: bool = True) -> Coloring:
    """A proper 3-coloring of a {triangle, ISK4}-free graph.

    K33-free graphs are colored by removing a lowest-id minimum-degree vertex
    until nothing is left and reinserting with the lowest free color.  Graphs
    containing K33 are complete bipartite or split along a clique cutset of
    size at most two, and the pieces are colored separately and merged.
    """
    if check:
        tri = triangle_witness(g)
        if tri is not None:
            raise OutOfClass("graph contains a triangle", tri)
        isk = contains_isk4(g, budget)
        if isk is not None:
            raise OutOfClass("graph contains an ISK4", isk)
    c = Coloring(tuple(_color_rec(g)))
    if not verify_coloring(g, c):
        raise AssertionError("produced an improper coloring")
    return c


def find_three_coloring(g: Graph) -> Coloring | None:
    """Exact search: a proper 3-coloring or None.  Colors the most constrained
    vertex first and breaks symmetry by never opening more than one new color."""
    n = g.n
    adj = g.adj
    col = [-1] * n
    classes = [0, 0, 0]

    def pick():
        best, key = -1, None
        for v in range(n):
            if col[v] < 0:
                free = sum(1 for k in range(3) if not adj[v] & classes[k])
                cand = (free, -adj[v].bit_count(), v)
                if key is None or cand < key:
                    best, key = v, cand
        return best

    def solve(colored: int) -> bool:
        if colored == n:
            return True
        v = pick()
        opened = sum(1 for k in range(3) if classes[k])
        for k in range(min(3, opened + 1)):
            if adj[v] & classes[k]:
                continue
            col[v] = k
            classes[k] |= 1 << v
            if solve(colored + 1):
                return True
            classes[k] &= ~(1 << v)
            col[v] = -1
        return False

    return Coloring(tuple(col)) if solve(0) else None
