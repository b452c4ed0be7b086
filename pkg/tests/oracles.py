"""Independent reference implementations used only by the tests.

Each one is deliberately naive (exhaustive search, textbook formulas, or
networkx) so that it shares no code path with the library.
"""
from fractions import Fraction
from itertools import combinations, permutations

import networkx as nx


def blocks_ok(v, blocks):
    pts = [p for b in blocks for p in b]
    if sorted(set(pts)) != list(range(v)) or any(pts.count(p) != 3 for p in range(v)):
        return False
    pairs = [frozenset(pq) for b in blocks for pq in combinations(b, 2)]
    return len(pairs) == len(set(pairs))


def brute_blocking_sizes(v, blocks):
    """All sizes of blocking sets by trying every subset."""
    sizes = set()
    for mask in range(1 << v):
        ok = True
        for b in blocks:
            k = sum((mask >> p) & 1 for p in b)
            if k == 0 or k == 3:
                ok = False
                break
        if ok:
            sizes.add(bin(mask).count("1"))
    return sizes


def brute_chromatic(v, blocks, kmax=7):
    """Chromatic number of the associated graph by plain backtracking in point order."""
    nbrs = [set() for _ in range(v)]
    for b in blocks:
        for p in b:
            nbrs[p].update(q for q in b if q != p)

    def colourable(k):
        col = [-1] * v

        def rec(p):
            if p == v:
                return True
            for c in range(k):
                if all(col[q] != c for q in nbrs[p]):
                    col[p] = c
                    if rec(p + 1):
                        return True
            col[p] = -1
            return False

        return rec(0)

    for k in range(1, kmax + 1):
        if colourable(k):
            return k
    return None


def nx_levi(v, blocks):
    g = nx.Graph()
    g.add_nodes_from(range(v), part=0)
    g.add_nodes_from(range(v, 2 * v), part=1)
    for j, b in enumerate(blocks):
        for p in b:
            g.add_edge(p, v + j)
    return g


def nx_aut_orders(v, blocks):
    """(|Aut|, |A|) counted by VF2 over the Levi graph."""
    g = nx_levi(v, blocks)
    same = nx.algorithms.isomorphism.GraphMatcher(
        g, g, node_match=lambda a, b: a["part"] == b["part"])
    aut = sum(1 for _ in same.isomorphisms_iter())
    full = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
    return aut, full


def nx_isomorphic(v1, b1, v2, b2):
    g, h = nx_levi(v1, b1), nx_levi(v2, b2)
    return nx.is_isomorphic(g, h, node_match=lambda a, b: a["part"] == b["part"])


def brute_aut_order(v, blocks):
    """|Aut| by testing every point permutation (v <= 8)."""
    target = {tuple(sorted(b)) for b in blocks}
    return sum(1 for perm in permutations(range(v))
               if {tuple(sorted(perm[p] for p in b)) for b in blocks} == target)


def brute_permanent(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
            if not prod:
                break
        total += prod
    return total


def subset_dp_permanent(m):
    """Permanent by dynamic programming over used-column subsets."""
    n = len(m)
    dp = {0: 1}
    for i in range(n):
        nxt = {}
        for used, val in dp.items():
            for j in range(n):
                if m[i][j] and not used >> j & 1:
                    key = used | 1 << j
                    nxt[key] = nxt.get(key, 0) + val * m[i][j]
        dp = nxt
    return dp.get((1 << n) - 1, 0)


def fraction_det(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(det)


def dfs_hamiltonian(n, adj):
    """Plain depth-first search for a Hamiltonian cycle through vertex 0."""
    if n < 3:
        return False
    path = [0]
    seen = [False] * n
    seen[0] = True

    def rec():
        if len(path) == n:
            return 0 in adj[path[-1]]
        for w in adj[path[-1]]:
            if not seen[w]:
                seen[w] = True
                path.append(w)
                if rec():
                    return True
                path.pop()
                seen[w] = False
        return False

    return rec()


def vertex_connectivity(n, adj):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for u in range(n):
        for w in adj[u]:
            g.add_edge(u, w)
    return nx.node_connectivity(g)


def nx_girth(n, adj):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for u in range(n):
        for w in adj[u]:
            g.add_edge(u, w)
    return nx.girth(g)
