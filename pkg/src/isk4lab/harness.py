"""Falsification suites: one per proven statement, run over every graph of the
relevant class up to a given order (or over an external graph6 corpus), plus
counterexample hunts for the two open conjectures.

A suite is a class of graphs plus a per-graph check returning the list of
violations.  Reports list violations sorted by the graph6 string of the
canonical form, so they do not depend on the number of workers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable

from .chordless import LabeledTree, check_tree_split, four_degree_pattern, tree_label_split
from .cutsets import find_clique_cutset, find_proper_two_cutset, find_star_cutset
from .degree2 import (
    MissingLowDegreeVertex,
    RecoveryFailure,
    find_three_coloring,
    is_bad_triple,
    low_degree_vertices,
    recipe_build,
    recipe_recover,
    rooted_isomorphic,
    three_color,
    verify_coloring,
    xy_property,
)
from .enumeration import canonical_form, enumerate_graphs
from .formats import decode_graph6, encode_graph6
from .graph import Graph, enumerate_cycles, enumerate_holes, girth, is_two_connected, triangle_witness
from .recognition import contains_isk4, contains_k33, is_chordless, is_series_parallel, is_sparse
from .wheels import (
    TheoremViolation,
    best_proper_wheel,
    check_outcome,
    crossing_pairs,
    decompose,
    enumerate_wheels,
    hole_appendices,
    is_proper_wheel,
    short_connections,
    wheel_appendices,
    wheel_decomposition,
    wheel_key,
)


@dataclass(frozen=True)
class Violation:
    graph: str  # graph6 of the canonical form
    predicate: str
    witness: str


@dataclass
class SuiteReport:
    suite_id: str
    graphs_scanned: int
    violations: list[Violation] = field(default_factory=list)
    wall_time: float = 0.0
    orders: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite_id": self.suite_id,
            "graphs_scanned": self.graphs_scanned,
            "orders": list(self.orders) if self.orders else None,
            "violations": [v.__dict__ for v in self.violations],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


# -- full (non-incremental) class predicates, for corpus input ---------------------------

MEMBERSHIP: dict[str, Callable[[Graph], bool]] = {
    "triangle_free": lambda g: triangle_witness(g) is None,
    "girth5": lambda g: (girth(g) or 99) >= 5,
    "forest": lambda g: g.edge_count == g.n - len(g.components()),
    "k33_free": lambda g: contains_k33(g) is None,
    "series_parallel": is_series_parallel,
    "chordless": is_chordless,
    "isk4_free": lambda g: contains_isk4(g) is None,
    "connected": lambda g: g.is_connected(),
    "two_connected": lambda g: is_two_connected(g),
    "tree": lambda g: g.is_connected() and g.edge_count == g.n - 1,
    "not_cycle": lambda g: not (g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees())),
}


@dataclass(frozen=True)
class Suite:
    suite_id: str
    statement: str
    filters: tuple[str, ...]
    check: Callable[[Graph], list[tuple[str, str]]]
    default_n: int
    extra: Callable[[Graph], bool] | None = None
    n_min: int = 1

    def member(self, g: Graph) -> bool:
        if g.n < self.n_min or not all(MEMBERSHIP[f](g) for f in self.filters):
            return False
        return self.extra is None or self.extra(g)


SUITES: dict[str, Suite] = {}


def _suite(suite_id, statement, filters, default_n, extra=None, n_min=1):
    def register(fn):
        SUITES[suite_id] = Suite(suite_id, statement, tuple(filters), fn, default_n, extra, n_min)
        return fn

    return register


def _admissible_pairs(g: Graph):
    for v in range(g.n):
        yield v, v
    for u, v in g.edges():
        yield u, v
        yield v, u


def _no_small_clique_cutset(g: Graph) -> bool:
    return find_clique_cutset(g, 2) is None


def _min_spoke_proper_wheels(g: Graph):
    proper = [w for w in enumerate_wheels(g) if is_proper_wheel(g, w)]
    if not proper:
        return []
    least = min(w.n for w in proper)
    return sorted((w for w in proper if w.n == least), key=wheel_key)


def _wheel_str(w) -> str:
    return f"hole={list(w.hole.cycle)} center={w.center}"


@_suite("lemma_ca", "no two appendices of a hole cross", ("isk4_free", "k33_free", "connected"), 8)
def _check_ca(g):
    out = []
    for h in enumerate_holes(g):
        for p, q in crossing_pairs(hole_appendices(g, h)):
            out.append(("crossing_appendices", f"hole={list(h.cycle)} P={list(p.path)} Q={list(q.path)}"))
    return out


@_suite("lemma_w1", "wheels with fewest vertices are proper", ("triangle_free", "isk4_free", "connected"), 9)
def _check_w1(g):
    wheels = list(enumerate_wheels(g))
    if not wheels:
        return []
    least = min(w.vertex_count for w in wheels)
    return [("improper_min_wheel", _wheel_str(w)) for w in wheels
            if w.vertex_count == least and not is_proper_wheel(g, w)]


@_suite("lemma_wa1", "each sector w.r.t. a wheel appendix holds three spokes", ("isk4_free", "connected"), 8)
def _check_wa1(g):
    out = []
    holes = list(enumerate_holes(g))
    apps = {h: hole_appendices(g, h) for h in holes}
    for w in enumerate_wheels(g, holes):
        for a in wheel_appendices(g, w, apps[w.hole]):
            for arc in a.sectors:
                if sum(1 for v in arc if g.has_edge(w.center, v)) < 3:
                    out.append(("sector_with_few_spokes", f"{_wheel_str(w)} P={list(a.path)}"))
    return out


_TRI_ISK4_K33 = ("triangle_free", "isk4_free", "k33_free", "connected")


@_suite("lemma_w2", "a fewest-spoke proper wheel with an appendix is a 4-wheel", _TRI_ISK4_K33, 9)
def _check_w2(g):
    return [("appendix_on_big_wheel", _wheel_str(w)) for w in _min_spoke_proper_wheels(g)
            if w.n != 4 and wheel_appendices(g, w)]


@_suite("lemma_w3", "fewest-spoke proper wheels have no short connection", _TRI_ISK4_K33, 9)
def _check_w3(g):
    out = []
    for w in _min_spoke_proper_wheels(g):
        c = next(short_connections(g, w), None)
        if c is not None:
            out.append(("short_connection", f"{_wheel_str(w)} P={list(c.path)}"))
    return out


@_suite("lemma_w4", "fewest-spoke proper wheels give a wheel decomposition", _TRI_ISK4_K33, 9)
def _check_w4(g):
    return [("no_wheel_decomposition", _wheel_str(w)) for w in _min_spoke_proper_wheels(g)
            if wheel_decomposition(g, w) is None]


@_suite("theorem_maindecomp", "decomposition of {triangle, ISK4}-free graphs",
        ("triangle_free", "isk4_free"), 9)
def _check_maindecomp(g):
    try:
        out = decompose(g, checked=True)
    except TheoremViolation:
        return [("theorem_violation", "no outcome applies")]
    if not check_outcome(g, out):
        return [("unverified_outcome", out.tag)]
    if out.fallback:
        return [("fallback_wheel", out.tag)]
    return []


@_suite("theorem_maindecomp2", "{triangle, ISK4, K33}-free: series-parallel or wheel decomposition",
        ("triangle_free", "isk4_free", "k33_free"), 9)
def _check_maindecomp2(g):
    if is_series_parallel(g):
        return []
    w = best_proper_wheel(g, list(enumerate_wheels(g)))
    if w is None:
        return [("no_proper_wheel", "")]
    if wheel_decomposition(g, w) is None:
        return [("no_wheel_decomposition", _wheel_str(w))]
    return []


@_suite("corollary_cmain", "ISK4-free, girth >= 5: series-parallel or star cutset",
        ("girth5", "isk4_free", "connected"), 10)
def _check_cmain(g):
    if is_series_parallel(g) or find_star_cutset(g) is not None:
        return []
    return [("no_star_cutset", "")]


@_suite("theorem_tchordless", "2-connected chordless: sparse or proper 2-cutset",
        ("chordless", "two_connected"), 10)
def _check_tchordless(g):
    if is_sparse(g) or find_proper_two_cutset(g) is not None:
        return []
    return [("neither_sparse_nor_split", "")]


@_suite("theorem_thCchordless", "degree pattern 2, >=3, 2, >=3 on every cycle",
        ("chordless", "two_connected", "not_cycle"), 10)
def _check_thCchordless(g):
    return [("no_pattern", f"cycle={list(c)}") for c in enumerate_cycles(g)
            if four_degree_pattern(g, c) is None]


def _check_xy_all(g):
    return [("missing_xy_property", f"x={x} y={y}") for x, y in _admissible_pairs(g)
            if xy_property(g, x, y).tag != "has_xy_property"]


SUITES["lemma_xy"] = Suite(
    "lemma_xy", "(x, y)-property for 2-connected series-parallel girth >= 5 graphs without clique cutset",
    ("girth5", "series_parallel", "two_connected"), _check_xy_all, 10, _no_small_clique_cutset,
)
SUITES["lemma_l2conn"] = Suite(
    "lemma_l2conn", "(x, y)-property for 2-connected ISK4-free girth >= 5 graphs",
    ("girth5", "isk4_free", "two_connected"), _check_xy_all, 10,
)


@_suite("theorem_thcolor", "ISK4-free, girth >= 5: two vertices of degree <= 2 and 3-colorable",
        ("girth5", "isk4_free"), 10, n_min=2)
def _check_thcolor(g):
    out = []
    low = low_degree_vertices(g)
    if len(low) < 2:
        out.append(("fewer_than_two_low_degree", f"low={low}"))
    try:
        c = three_color(g, check=False)
        if not verify_coloring(g, c):
            out.append(("improper_coloring", str(list(c.color))))
    except MissingLowDegreeVertex:
        out.append(("missing_low_degree_vertex", ""))
    return out


@_suite("lemma_ldesc", "bad triples are rebuilt by their recipe",
        ("triangle_free", "series_parallel", "two_connected"), 9, _no_small_clique_cutset, n_min=5)
def _check_ldesc(g):
    out = []
    for x, y in _admissible_pairs(g):
        if not is_bad_triple(g, x, y):
            continue
        try:
            r = recipe_recover(g, x, y)
        except RecoveryFailure as exc:
            out.append(("recovery_failure", f"x={x} y={y}: {exc}"))
            continue
        b = recipe_build(r)
        if not rooted_isomorphic(g, x, y, b.graph, b.x, b.y):
            out.append(("rebuild_not_isomorphic", f"x={x} y={y}"))
    return out


@_suite("lemma_ltree", "tree label dichotomy", ("tree",), 7)
def _check_ltree(g):
    out = []
    n = g.n
    for code in range(4 ** n):
        xs = frozenset(v for v in range(n) if code >> (2 * v) & 1)
        ys = frozenset(v for v in range(n) if code >> (2 * v + 1) & 1)
        lt = LabeledTree(g, xs, ys)
        s = tree_label_split(lt)
        if not check_tree_split(lt, s):
            out.append(("invalid_split", f"x={sorted(xs)} y={sorted(ys)}"))
    return out


# -- running -------------------------------------------------------------------------------


class UnknownSuite(KeyError):
    pass


def _run_one(args) -> list[Violation]:
    suite_id, g6 = args
    g = decode_graph6(g6)
    return [Violation(g6, p, w) for p, w in SUITES[suite_id].check(g)]


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8)))


def suite_graphs(suite: Suite, n_max: int, n_min: int | None = None) -> list[Graph]:
    lo = max(suite.n_min, n_min or 1)
    out = []
    for n in range(lo, n_max + 1):
        for g in enumerate_graphs(n, suite.filters, cap=max(n_max, 1)):
            if suite.extra is None or suite.extra(g):
                out.append(g)
    return out


def read_corpus(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [decode_graph6(line) for line in fh if line.strip() and not line.startswith("#")]


def run_suite(
    suite_id: str,
    n_max: int | None = None,
    n_min: int | None = None,
    corpus: str | Iterable[Graph] | None = None,
    jobs: int = 1,
) -> SuiteReport:
    """Run one suite over enumerated graphs (orders up to ``n_max``) or a corpus."""
    if suite_id not in SUITES:
        raise UnknownSuite(suite_id)
    suite = SUITES[suite_id]
    start = time.perf_counter()
    if corpus is not None:
        graphs = read_corpus(corpus) if isinstance(corpus, str) else list(corpus)
        graphs = [g for g in graphs if suite.member(g)]
        orders = None
    else:
        n_max = suite.default_n if n_max is None else n_max
        graphs = suite_graphs(suite, n_max, n_min)
        orders = (max(suite.n_min, n_min or 1), n_max)
    keys = [encode_graph6(canonical_form(g)) for g in graphs]
    found = _map(_run_one, [(suite_id, k) for k in keys], jobs)
    violations = sorted((v for vs in found for v in vs), key=lambda v: (v.graph, v.predicate, v.witness))
    return SuiteReport(suite_id, len(graphs), violations, time.perf_counter() - start, orders)


# -- conjecture hunts ---------------------------------------------------------------------------

HUNTS = {
    "conj1": (("triangle_free", "isk4_free", "k33_free"), "minimum degree at least 3"),
    "conj2": (("triangle_free", "isk4_free"), "not 3-colorable"),
}


def _hunt_one(args) -> list[Violation]:
    conj, g6 = args
    g = decode_graph6(g6)
    if conj == "conj1":
        if g.n and min(g.degrees()) >= 3:
            return [Violation(g6, "min_degree_ge_3", f"min_degree={min(g.degrees())}")]
        return []
    if find_three_coloring(g) is None:
        return [Violation(g6, "not_3_colorable", "")]
    return []


def hunt(conjecture_id: str, n_max: int, jobs: int = 1, n_min: int = 1) -> SuiteReport:
    """Scan every graph of the conjecture's class with n_min <= n <= n_max."""
    if conjecture_id not in HUNTS:
        raise UnknownSuite(conjecture_id)
    filters, _ = HUNTS[conjecture_id]
    start = time.perf_counter()
    graphs = [g for n in range(n_min, n_max + 1) for g in enumerate_graphs(n, filters, cap=max(n_max, 1))]
    keys = [encode_graph6(canonical_form(g)) for g in graphs]
    found = _map(_hunt_one, [(conjecture_id, k) for k in keys], jobs)
    violations = sorted((v for vs in found for v in vs), key=lambda v: (v.graph, v.predicate))
    return SuiteReport(f"hunt_{conjecture_id}", len(graphs), violations, time.perf_counter() - start, (n_min, n_max))
