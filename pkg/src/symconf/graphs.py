"""Graph algorithms on Levi graphs, associated graphs and their relatives."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from . import _kernels
from .core import Configuration, Graph, levi_graph
from .errors import BoundExceeded, DecompositionNotFound, NotConnected, PreconditionViolated

HAMILTON_BOUND = 64


@dataclass(frozen=True)
class Component:
    """Subcubic bipartite graph with exactly two degree-2 vertices ``a`` and ``d``.

    ``a`` lies in part 0 (points) and ``d`` in part 1 (blocks).
    """

    graph: Graph
    a: int
    d: int

    def __post_init__(self):
        g = self.graph
        degs = [g.degree(u) for u in range(g.n)]
        low = sorted(u for u in range(g.n) if degs[u] == 2)
        assert low == sorted((self.a, self.d)), "distinguished vertices must be the degree-2 ones"
        assert all(k in (2, 3) for k in degs)
        assert g.parts is not None and g.parts[self.a] == 0 and g.parts[self.d] == 1
        assert len(g.edges()) == 3 * g.n // 2 - 1


@dataclass(frozen=True)
class HamiltonResult:
    hamiltonian: bool
    cycle: tuple | None = None

    def __bool__(self):
        return self.hamiltonian


def girth(g: Graph):
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif w != par[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_connected_graph(g: Graph, removed=()) -> bool:
    gone = set(removed)
    alive = [u for u in range(g.n) if u not in gone]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in gone and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def two_cut(g: Graph):
    """A vertex pair whose removal disconnects ``g``, or None."""
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if not is_connected_graph(g, (u, w)):
                return (u, w)
    return None


def config_connectivity(x: Configuration, witness: bool = False):
    """Vertex connectivity (2 or 3) of the Levi graph.

    With ``witness=True`` returns ``(value, cut)`` where ``cut`` is a
    disconnecting vertex pair (Levi-graph indices) or None.
    """
    g = levi_graph(x)
    if not is_connected_graph(g):
        raise NotConnected("configuration is disconnected")
    cut = two_cut(g)
    value = 2 if cut is not None else 3
    return (value, cut) if witness else value


def is_hamiltonian(g: Graph, bound: int = HAMILTON_BOUND) -> HamiltonResult:
    if g.n > bound:
        raise BoundExceeded(f"graph order {g.n} exceeds bound {bound}")
    if not is_connected_graph(g):
        return HamiltonResult(False)
    cycle = _kernels.hamiltonian_cycle(g.n, [list(a) for a in g.adj])
    if cycle is None:
        return HamiltonResult(False)
    cycle = tuple(cycle)
    assert len(set(cycle)) == g.n
    assert all(cycle[(i + 1) % g.n] in g.adj[cycle[i]] for i in range(g.n))
    return HamiltonResult(True, cycle)


def hamiltonian_path_between(g: Graph, u: int, w: int, bound: int = HAMILTON_BOUND) -> bool:
    """Decide whether a Hamiltonian u-w path exists.

    A new vertex is joined to ``u`` and ``w``; the path exists iff the
    augmented graph has a Hamiltonian cycle.
    """
    if u == w:
        raise PreconditionViolated("endpoints must differ")
    if g.n == 2:
        return w in g.adj[u]
    z = g.n
    edges = g.edges() + [(u, z), (w, z)]
    aug = Graph.from_edges(g.n + 1, edges)
    return is_hamiltonian(aug, bound + 1).hamiltonian


# -- 3K2 decompositions ------------------------------------------------------

def _bipartition(g: Graph):
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _perfect_matching(n, adj, side):
    """Augmenting-path matching on a bipartite graph; dict vertex -> mate."""
    mate = [-1] * n

    def augment(u, seen):
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if mate[w] < 0 or augment(mate[w], seen):
                mate[u] = w
                mate[w] = u
                return True
        return False

    for u in range(n):
        if side[u] == 0 and mate[u] < 0:
            if not augment(u, set()):
                return None
    return mate


def three_edge_colouring(g: Graph):
    """Split a cubic bipartite graph into three perfect matchings."""
    side = _bipartition(g)
    if side is None or any(len(a) != 3 for a in g.adj):
        raise PreconditionViolated("graph must be cubic and bipartite")
    mate = _perfect_matching(g.n, g.adj, side)
    if mate is None:
        raise DecompositionNotFound("no perfect matching")
    m1 = sorted((u, mate[u]) for u in range(g.n) if side[u] == 0)
    rest = [[w for w in g.adj[u] if w != mate[u]] for u in range(g.n)]
    # the remainder is 2-regular with even cycles; alternate along each cycle
    m2, m3 = [], []
    done = [False] * g.n
    for s in range(g.n):
        if done[s]:
            continue
        prev, cur, k = -1, s, 0
        while True:
            done[cur] = True
            a, b = rest[cur]
            nxt = a if a != prev else b
            if prev >= 0 and a == b:
                nxt = a
            (m2 if k % 2 == 0 else m3).append(tuple(sorted((cur, nxt))))
            k += 1
            prev, cur = cur, nxt
            if cur == s:
                break
    return [m1, sorted(m2), sorted(m3)]


def three_k2_decomposition(g: Graph):
    """Partition the edges of a cubic bipartite graph of order 2m into m triples
    of pairwise vertex-disjoint edges."""
    colours = three_edge_colouring(g)
    m = g.n // 2
    colour_of = {}
    for c, cls in enumerate(colours):
        for e in cls:
            colour_of[e] = c
    used = set()
    groups = []

    def disjoint(e, f):
        return not (set(e) & set(f))

    def rec(strict):
        if len(groups) == m:
            return True
        first = min(e for e in colours[0] if e not in used) if strict else \
            min(e for e in colour_of if e not in used)
        used.add(first)
        pool1 = colours[1] if strict else sorted(colour_of)
        for e2 in pool1:
            if e2 in used or not disjoint(first, e2):
                continue
            used.add(e2)
            pool2 = colours[2] if strict else sorted(colour_of)
            for e3 in pool2:
                if e3 in used or e3 < e2 and not strict or not disjoint(first, e3) or not disjoint(e2, e3):
                    continue
                used.add(e3)
                groups.append((first, e2, e3))
                if rec(strict):
                    return True
                groups.pop()
                used.discard(e3)
            used.discard(e2)
        used.discard(first)
        return False

    if not rec(True):
        used.clear()
        groups.clear()
        if not rec(False):
            raise DecompositionNotFound("no 3K2 decomposition found")
    out = [tuple(sorted(t)) for t in groups]
    assert sorted(e for t in out for e in t) == sorted(colour_of)
    assert all(len({v for e in t for v in e}) == 6 for t in out)
    return out
