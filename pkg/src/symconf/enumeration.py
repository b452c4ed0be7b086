"""Exhaustive enumeration and tabulation of small configurations."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from . import _kernels
from .blocking import blocking_profile
from .colouring import strong_chromatic_number
from .constructions import fano, stitch2, stitch2_choices
from .core import Configuration, Graph, connected_components
from .errors import BoundExceeded, FourCycleRisk, OutOfRange
from .graphs import Component, config_connectivity, girth, is_connected_graph, two_cut
from .isomorphism import canonical_config, canonical_form, graph_certificate, symmetry_profile

ENUM_BOUND = 13
COMPONENT_BOUND = 18
SPLIT_DEPTH = 3


def _matrix_to_config(rows, v):
    blocks = [[] for _ in range(v)]
    for i, r in enumerate(rows):
        for j in range(v):
            if (r >> (v - 1 - j)) & 1:
                blocks[j].append(i)
    return Configuration(v, tuple(tuple(b) for b in blocks))


def _subtree(args):
    v, prefix = args
    return _kernels.orderly_matrices(v, v, 0, 0, tuple(prefix))


def raw_matrices(v: int, jobs: int = 1):
    """Lexmax incidence matrices, one per isomorphism class (connected or not)."""
    if jobs <= 1:
        return list(_kernels.orderly_matrices(v, v))
    prefixes = _kernels.orderly_matrices(v, v, 0, 0, (), min(SPLIT_DEPTH, v))
    with ProcessPoolExecutor(jobs) as pool:
        parts = pool.map(_subtree, [(v, p) for p in prefixes])
        return [m for part in parts for m in part]


def enumerate_configs(v: int, connected_only: bool = True, bound: int = ENUM_BOUND, jobs: int = 1):
    """One canonical representative per isomorphism class, sorted by canonical form."""
    if v < 7:
        return []
    if v > bound:
        raise BoundExceeded(f"v={v} exceeds enumeration bound {bound}")
    out = []
    for rows in raw_matrices(v, jobs):
        x = _matrix_to_config(rows, v)
        if connected_only and len(connected_components(x)) > 1:
            continue
        out.append(canonical_config(x))
    out.sort(key=lambda c: c.blocks)
    keys = {c.blocks for c in out}
    assert len(keys) == len(out), "duplicate isomorphism class in enumeration"
    return out


def _row_for(x: Configuration):
    """Per-configuration data feeding the table columns."""
    connected = len(connected_components(x)) == 1
    sym = symmetry_profile(x)
    bp = blocking_profile(x)
    chi_s = strong_chromatic_number(x)[0] if connected else None
    return connected, sym, bp, chi_s


def tabulate_properties(v: int, bound: int = ENUM_BOUND, jobs: int = 1, configs=None):
    """Counts for one value of v.

    Columns a..i: total, self-dual, self-polar, point-transitive, cyclic,
    flag-transitive, weakly flag-transitive, connected blocking-set-free and
    disconnected.  Histograms (over connected classes) of minimal blocking
    size (``None`` for blocking-set-free) and of the strong chromatic number.
    """
    if configs is None:
        configs = enumerate_configs(v, connected_only=False, bound=bound, jobs=jobs)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_row_for, configs, chunksize=16))
    else:
        rows = [_row_for(x) for x in configs]
    t = Counter()
    blocking_hist = Counter()
    chi_hist = Counter()
    for connected, sym, bp, chi_s in rows:
        t["a"] += 1
        t["b"] += sym.self_dual
        t["c"] += sym.self_polar
        t["d"] += sym.point_transitive
        t["e"] += sym.cyclic
        t["f"] += sym.flag_transitive
        t["g"] += sym.weakly_flag_transitive
        if connected:
            t["h"] += not bp.has
            blocking_hist[bp.min_size] += 1
            chi_hist[chi_s] += 1
        else:
            t["i"] += 1
    row = {k: t[k] for k in "abcdefghi"}
    row["v"] = v
    row["connected"] = row["a"] - row["i"]
    row["min_blocking"] = dict(sorted(blocking_hist.items(), key=lambda kv: (kv[0] is not None, kv[0] or 0)))
    row["chi_s"] = dict(sorted(chi_hist.items()))
    return row


# -- 3-connected blocking-set-free systems ---------------------------------------

def _stitch_all(x, y):
    return [canonical_config(stitch2(x, y, ch)) for ch in stitch2_choices(x, y)]


def enumerate_3conn_bsfree(v: int, verify: bool = True, levels=None, jobs: int = 1):
    """Closure of the Fano plane under stitch2 in every possible way.

    Returns the sorted canonical classes on ``v`` points.  ``levels`` may be a
    dict v -> classes reused between calls.
    """
    if v < 7 or (v - 7) % 6:
        raise OutOfRange("v must be 1 (mod 6) and at least 7")
    levels = {} if levels is None else levels
    levels.setdefault(7, [canonical_config(fano())])
    for n in range(13, v + 1, 6):
        if n in levels:
            continue
        pairs = []
        for a in range(7, n, 6):
            b = n + 1 - a
            for x in levels[a]:
                for y in levels[b]:
                    pairs.append((x, y))
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = list(pool.map(_stitch_all, *zip(*pairs)))
        else:
            results = [_stitch_all(x, y) for x, y in pairs]
        found = {}
        for res in results:
            for c in res:
                found.setdefault(c.blocks, c)
        levels[n] = [found[k] for k in sorted(found)]
    out = levels[v]
    if verify:
        for x in out:
            assert not blocking_profile(x, verify_sizes=False).has
            assert config_connectivity(x) == 3
    return out


# -- components for the 2-connected search ------------------------------------------

def _component_from_rows(rows, p):
    n = 2 * p
    edges = []
    for i, r in enumerate(rows):
        for j in range(p):
            if (r >> (p - 1 - j)) & 1:
                edges.append((i, p + j))
    g = Graph.from_edges(n, edges, [0] * p + [1] * p)
    a = next(u for u in range(p) if g.degree(u) == 2)
    d = next(u for u in range(p, n) if g.degree(u) == 2)
    return Component(g, a, d)


def _component_key(c: Component):
    # uncoloured graph with the distinguished vertices marked
    colours = [0] * c.graph.n
    colours[c.a] = colours[c.d] = 1
    return graph_certificate(c.graph, colours)


def generate_components(n: int, bound: int = COMPONENT_BOUND):
    """Connected subcubic bipartite graphs of order ``n`` and girth >= 6 with
    3n/2 - 1 edges, one per isomorphism class."""
    if n % 2:
        raise OutOfRange("order must be even")
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds component bound {bound}")
    p = n // 2
    if p < 3:
        return []
    seen = {}
    for rows in _kernels.orderly_matrices(p, p, 1, 1):
        c = _component_from_rows(rows, p)
        if not is_connected_graph(c.graph):
            continue
        assert girth(c.graph) >= 6
        seen.setdefault(_component_key(c), c)
    return [seen[k] for k in sorted(seen)]


def component_distance(c: Component) -> int:
    from collections import deque
    dist = {c.a: 0}
    q = deque([c.a])
    while q:
        u = q.popleft()
        for w in c.graph.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist.get(c.d, -1)


def join_components(c1: Component, c2: Component, variant: int = 1) -> Graph:
    """Join two components by two edges between their distinguished vertices.

    Variant 1 adds a1-d2 and d1-a2, variant 2 adds a1-a2 and d1-d2 (the
    second component's parts are then swapped).
    """
    if c1.d in c1.graph.adj[c1.a] and c2.d in c2.graph.adj[c2.a]:
        raise FourCycleRisk("both components have adjacent distinguished vertices")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    n1 = c1.graph.n
    edges = list(c1.graph.edges()) + [(u + n1, w + n1) for u, w in c2.graph.edges()]
    parts2 = list(c2.graph.parts)
    if variant == 1:
        edges += [(c1.a, c2.d + n1), (c1.d, c2.a + n1)]
    else:
        edges += [(c1.a, c2.a + n1), (c1.d, c2.d + n1)]
        parts2 = [1 - x for x in parts2]
    g = Graph.from_edges(n1 + c2.graph.n, edges, list(c1.graph.parts) + parts2)
    assert all(len(a) == 3 for a in g.adj)
    assert all(g.parts[u] != g.parts[w] for u, w in g.edges())
    assert girth(g) >= 6
    return g


def edge_connectivity_at_most_2(g: Graph) -> bool:
    edges = g.edges()
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            rest = [e for k, e in enumerate(edges) if k not in (i, j)]
            if not is_connected_graph(Graph.from_edges(g.n, rest)):
                return True
    return False


__all__ = [
    "enumerate_configs", "tabulate_properties", "enumerate_3conn_bsfree", "generate_components",
    "join_components", "component_distance", "raw_matrices", "two_cut", "canonical_form",
]
