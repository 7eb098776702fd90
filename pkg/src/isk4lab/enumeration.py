"""Isomorph-free generation of small graphs by vertex augmentation.

Every filter that is closed under induced subgraphs ("hereditary") is applied
while the graphs are grown, one vertex at a time; the others are applied to
the finished graphs.  Growing only from class members is complete because
deleting a vertex keeps a graph inside a hereditary class, and for connected
output there is always a vertex whose deletion keeps the graph connected.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

import pynauty

from .graph import Graph, bits, is_two_connected
from .recognition import contains_isk4, contains_k33, is_chordless, is_series_parallel

DEFAULT_CAP_CONNECTED = 10
DEFAULT_CAP_GENERAL = 9


class CapExceeded(ValueError):
    """Requested order is above the configured enumeration cap."""


def certificate(g: Graph) -> bytes:
    return pynauty.certificate(_to_nauty(g))


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    lab = pynauty.canon_label(_to_nauty(g))
    perm = [0] * g.n
    for new, old in enumerate(lab):
        perm[old] = new
    return g.relabel(perm)


def automorphism_group_size(g: Graph) -> int:
    _, order_mant, order_exp, _, _ = pynauty.autgrp(_to_nauty(g))
    return round(order_mant * 10**order_exp)


def _to_nauty(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={v: list(g.neighbors(v)) for v in range(g.n)})


# -- filters ---------------------------------------------------------------------
#
# A hereditary filter is a test ``(parent, child) -> bool`` where ``child`` is
# ``parent`` plus the vertex ``child.n - 1`` and ``parent`` is already known to
# pass.  It only has to rule out obstructions through the new vertex.


def _new_nbrs(child: Graph) -> int:
    return child.adj[child.n - 1]


def _h_triangle_free(parent: Graph, child: Graph) -> bool:
    s = _new_nbrs(child)
    return all(not (parent.adj[u] & s) for u in bits(s))


def _h_girth5(parent: Graph, child: Graph) -> bool:
    s = _new_nbrs(child)
    seen = 0
    for u in bits(s):
        nb = parent.adj[u]
        if nb & s or nb & seen:
            return False
        seen |= nb
    return True


def _h_forest(parent: Graph, child: Graph) -> bool:
    s = _new_nbrs(child)
    return all((c & s).bit_count() <= 1 for c in parent.components())


def _h_isk4_free(parent: Graph, child: Graph) -> bool:
    return contains_isk4(child, through=child.n - 1) is None


def _h_k33_free(parent: Graph, child: Graph) -> bool:
    return contains_k33(child, through=child.n - 1) is None


HEREDITARY: dict[str, Callable[[Graph, Graph], bool]] = {
    "triangle_free": _h_triangle_free,
    "girth5": _h_girth5,
    "forest": _h_forest,
    "k33_free": _h_k33_free,
    "series_parallel": lambda p, c: is_series_parallel(c),
    "chordless": lambda p, c: is_chordless(c),
    # keep the expensive search last so cheap filters prune first
    "isk4_free": _h_isk4_free,
}

FINAL: dict[str, Callable[[Graph], bool]] = {
    "connected": lambda g: g.is_connected(),
    "two_connected": lambda g: is_two_connected(g),
    "tree": lambda g: g.is_connected() and g.edge_count == g.n - 1,
    "not_cycle": lambda g: not (g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees())),
}

# filters whose members have independent neighbourhoods: grow only via stable sets
_STABLE_NBRS = {"triangle_free", "girth5", "forest"}

_ORDER = list(HEREDITARY)
_CHEAP = {"triangle_free", "girth5", "forest"}

FILTER_NAMES = tuple(HEREDITARY) + tuple(FINAL)


def _stable_sets(g: Graph) -> Iterator[int]:
    """All stable sets of ``g`` (including the empty one)."""
    adj = g.adj
    stack = [(0, g.full_mask)]
    while stack:
        chosen, cand = stack.pop()
        yield chosen
        for v in bits(cand):
            # each set is produced once: only larger vertices may follow v
            stack.append((chosen | (1 << v), cand & ~adj[v] & ~((2 << v) - 1)))


def _triangle_free_sets(g: Graph) -> Iterator[int]:
    """Vertex sets inducing triangle-free subgraphs: a new vertex joined to a
    triangle would close a K4."""
    adj = g.adj
    stack = [(0, g.full_mask)]
    while stack:
        chosen, cand = stack.pop()
        yield chosen
        for v in bits(cand):
            inner = adj[v] & chosen
            if any(adj[u] & inner for u in bits(inner)):
                continue
            stack.append((chosen | (1 << v), cand & ~((2 << v) - 1)))


def _all_subsets(g: Graph) -> Iterator[int]:
    return iter(range(1 << g.n))


_cache: dict[tuple, list[list[Graph]]] = {}


def _levels(hereditary: tuple[str, ...], connected: bool, n: int) -> list[list[Graph]]:
    key = (hereditary, connected)
    levels = _cache.setdefault(key, [[Graph(0)], [Graph(1)]])
    cheap = [HEREDITARY[f] for f in hereditary if f in _CHEAP]
    costly = [HEREDITARY[f] for f in hereditary if f not in _CHEAP]
    if _STABLE_NBRS & set(hereditary):
        subsets = _stable_sets
    elif "isk4_free" in hereditary:
        subsets = _triangle_free_sets
    else:
        subsets = _all_subsets
    while len(levels) <= n:
        seen: set[bytes] = set()
        found: dict[bytes, Graph] = {}
        for parent in levels[-1]:
            for s in subsets(parent):
                if connected and s == 0 and parent.n > 0:
                    continue
                child = parent.add_vertex(s)
                if not all(t(parent, child) for t in cheap):
                    continue
                # isomorphic children share every verdict: test each class once
                cert = certificate(child)
                if cert in seen:
                    continue
                seen.add(cert)
                if all(t(parent, child) for t in costly):
                    found[cert] = child
        levels.append([canonical_form(found[c]) for c in sorted(found)])
    return levels


def enumerate_graphs(
    n: int,
    filters: Iterable[str] = (),
    cap: int | None = None,
) -> Iterator[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices passing ``filters``.

    Graphs come in canonical labelling, sorted by certificate, so the stream
    is identical from run to run.
    """
    filters = list(filters)
    unknown = [f for f in filters if f not in HEREDITARY and f not in FINAL]
    if unknown:
        raise ValueError(f"unknown filter(s): {', '.join(unknown)}")
    connected = any(f in ("connected", "two_connected", "tree") for f in filters)
    if cap is None:
        cap = DEFAULT_CAP_CONNECTED if connected else DEFAULT_CAP_GENERAL
    if n > cap:
        raise CapExceeded(f"n={n} is above the enumeration cap {cap}")
    hered = [f for f in _ORDER if f in filters]
    if "tree" in filters and "forest" not in hered:
        hered.insert(0, "forest")
    final = [FINAL[f] for f in filters if f in FINAL]
    for g in _levels(tuple(hered), connected, n)[n]:
        if all(t(g) for t in final):
            yield g


def enumerate_up_to(n_max: int, filters: Iterable[str] = (), n_min: int = 1, cap: int | None = None) -> Iterator[Graph]:
    filters = list(filters)
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, filters, cap=cap)


def clear_cache() -> None:
    _cache.clear()
