"""Acceptance criteria, one test each.  Every test prints a single
``[acceptance NN] PASS|FAIL ...`` line so the run log doubles as the report."""

import time
from itertools import islice

import pytest

from isk4lab.chordless import split_masks
from isk4lab.degree2 import generate_recipes, recipe_build, xy_property
from isk4lab.enumeration import enumerate_graphs
from isk4lab.formats import decode_graph6, encode_graph6
from isk4lab.harness import SUITES, hunt, run_suite
from isk4lab.recognition import contains_isk4, is_isk4_witness, is_series_parallel

from oracles import (
    brute_force_classes,
    has_k4_subdivision_subgraph,
    labeled_counts,
    naive_isk4,
    orbit_sum,
    tree_dichotomy_tables,
    tree_path_masks,
)


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[acceptance {number:02d}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def _suite_line(rep) -> str:
    return f"{rep.suite_id}: {rep.graphs_scanned} graphs, {len(rep.violations)} violations"


def test_01_series_parallel_oracle(report):
    start = time.perf_counter()
    checked = mismatches = 0
    at_eight = 0
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            checked += 1
            at_eight += n == 8
            if is_series_parallel(g) != (not has_k4_subdivision_subgraph(g)):
                mismatches += 1
    secs = time.perf_counter() - start
    report(1, mismatches == 0 and at_eight == 12346 and secs < 300,
           f"series-parallel vs subdivision search: {checked} graphs (n=8: {at_eight}), "
           f"{mismatches} mismatches, {secs:.1f}s")


def test_02_isk4_oracle(report):
    start = time.perf_counter()
    checked = mismatches = 0
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            checked += 1
            w = contains_isk4(g)
            if (w is None) != (naive_isk4(g) is None) or (w is not None and not is_isk4_witness(g, w)):
                mismatches += 1
    secs = time.perf_counter() - start
    report(2, mismatches == 0 and secs < 600,
           f"ISK4 search vs induced-subset scan: {checked} graphs, {mismatches} mismatches, {secs:.1f}s")


def test_03_main_decomposition(report):
    rep = run_suite("theorem_maindecomp", n_max=9)
    report(3, rep.ok and rep.wall_time < 1800, _suite_line(rep) + f", {rep.wall_time:.1f}s")


def test_04_girth5_series_parallel_or_star_cutset(report):
    # connected and disconnected graphs alike
    check = SUITES["corollary_cmain"].check
    scanned = bad = 0
    for n in range(1, 11):
        for g in enumerate_graphs(n, ["girth5", "isk4_free"], cap=10):
            scanned += 1
            bad += bool(check(g))
    report(4, bad == 0, f"corollary_cmain: {scanned} graphs, {bad} violations")


def test_05_no_crossing_appendices(report):
    rep = run_suite("lemma_ca", n_max=9)
    report(5, rep.ok, _suite_line(rep))


def test_06_minimum_wheels_proper(report):
    rep = run_suite("lemma_w1", n_max=9)
    report(6, rep.ok, _suite_line(rep))


def test_07_low_degree_and_coloring(report):
    rep = run_suite("theorem_thcolor", n_max=11)
    report(7, rep.ok, _suite_line(rep))


def test_08_bad_triple_round_trip(report):
    rep = run_suite("lemma_ldesc", n_min=5, n_max=9)
    recipes = list(islice(generate_recipes(max_tree_order=6), 1000))
    failures = 0
    for r in recipes:
        b = recipe_build(r)
        if xy_property(b.graph, b.x, b.y).tag == "has_xy_property":
            failures += 1
    ok = rep.ok and len(set(recipes)) == 1000 and failures == 0
    report(8, ok, _suite_line(rep) + f"; {len(set(recipes))} generated recipes, {failures} with the property")


def test_09_chordless_degree_pattern(report):
    rep = run_suite("theorem_thCchordless", n_max=10)
    report(9, rep.ok, _suite_line(rep))


def _connected_table(tree) -> list[bool]:
    return [tree.is_connected(m) for m in range(1 << tree.n)]


def test_10_tree_dichotomy(report):
    trees = labelings = bad = 0
    for n in range(1, 10):
        for tree in enumerate_graphs(n, ["tree"]):
            trees += 1
            paths, split = tree_dichotomy_tables(tree)
            # exclusive and exhaustive on the oracle side
            if (paths & split).any() or not (paths | split).all():
                bad += 1
                continue
            pm = tree_path_masks(tree)
            conn = _connected_table(tree)
            full = (1 << n) - 1
            for xm in range(1 << n):
                row = paths[xm]
                for ym in range(1 << n):
                    labelings += 1
                    tag, first, second = split_masks(tree, xm, ym)
                    if tag == "disjoint_paths":
                        ok = row[ym] and all(
                            xm >> p[0] & 1 and ym >> p[-1] & 1 and pm[p[0]][p[-1]] == sum(1 << v for v in p)
                            for p in (first, second)
                        ) and not pm[first[0]][first[-1]] & pm[second[0]][second[-1]]
                    else:
                        shared = first & second
                        ok = (not row[ym] and first | second == full and shared and not shared & (shared - 1)
                              and xm & ~first == 0 and ym & ~second == 0 and conn[first] and conn[second])
                    bad += not ok
    report(10, bad == 0, f"tree label splitter: {trees} trees, {labelings} labelings, {bad} disagreements")


def test_11_conjecture_hunts(report):
    one = hunt("conj1", 8)
    two = hunt("conj2", 8)
    report(11, one.ok and two.ok,
           f"conj1: {one.graphs_scanned} graphs, {len(one.violations)} counterexamples; "
           f"conj2: {two.graphs_scanned} graphs, {len(two.violations)} counterexamples")


ROUND_TRIP_CLASSES = [
    ((), 8),
    (("triangle_free", "connected"), 10),
    (("triangle_free", "isk4_free"), 9),
    (("triangle_free", "isk4_free", "connected"), 10),
    (("girth5", "isk4_free"), 10),
    (("chordless", "two_connected"), 10),
    (("tree",), 10),
]


def test_12_graph6_and_counts(report):
    graphs = mismatches = 0
    for filters, n_max in ROUND_TRIP_CLASSES:
        for n in range(1, n_max + 1):
            for g in enumerate_graphs(n, filters, cap=n_max):
                graphs += 1
                s = encode_graph6(g)
                h = decode_graph6(s)
                if h != g or encode_graph6(h) != s:
                    mismatches += 1
    count_errors = []
    for n in range(1, 8):
        ref = labeled_counts(n)
        for key, filters in (("all", []), ("connected", ["connected"]), ("triangle_free", ["triangle_free"])):
            got = orbit_sum(list(enumerate_graphs(n, filters)), n)
            if got != ref[key]:
                count_errors.append((n, key, got, ref[key]))
    for n in range(1, 6):
        if len(list(enumerate_graphs(n))) != brute_force_classes(n):
            count_errors.append((n, "classes"))
    report(12, mismatches == 0 and not count_errors,
           f"graph6 round trip on {graphs} graphs, {mismatches} mismatches; "
           f"labelled counts n<=7 ({len(count_errors)} errors)")
