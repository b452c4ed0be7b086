"""Canonical forms, automorphism groups and symmetry predicates."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import _kernels
from .core import Configuration, Graph, dual, format_config, levi_graph

GROUP_ELEMENT_LIMIT = 200_000


@dataclass(frozen=True)
class CanonicalForm:
    text: str

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.text.encode()).hexdigest()

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class SymmetryProfile:
    aut_order: int
    full_order: int
    self_dual: bool
    self_polar: bool
    point_transitive: bool
    flag_transitive: bool
    weakly_flag_transitive: bool
    cyclic: bool

    def as_dict(self):
        return dict(self.__dict__)


def _levi_input(x: Configuration, swap=False):
    g = levi_graph(x)
    colours = [1, 0] if swap else [0, 1]
    cols = [colours[part] for part in g.parts]
    return g, [list(a) for a in g.adj], cols


def _labeling(x: Configuration, swap=False):
    g, adj, cols = _levi_input(x, swap)
    lab, gens, order = _kernels.canonical_labeling(g.n, adj, cols)
    return g, adj, list(lab), [list(p) for p in gens], order


def graph_certificate(g: Graph, colours=None):
    """Canonical certificate of a (vertex-coloured) graph: equal iff isomorphic."""
    cols = list(colours) if colours is not None else [0] * g.n
    lab, _, _ = _kernels.canonical_labeling(g.n, [list(a) for a in g.adj], cols)
    cert = _kernels.pykernels._certificate(list(lab), g.adj, g.n)
    return tuple(sorted(cols)), tuple(cert)


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return graph_certificate(g) == graph_certificate(h)


def canonical_relabeling(x: Configuration):
    """Point permutation ``perm`` with ``x.relabel(perm)`` canonical."""
    _, _, lab, _, _ = _labeling(x)
    perm = [0] * x.v
    for pos in range(x.v):
        perm[lab[pos]] = pos
    return perm


def canonical_config(x: Configuration) -> Configuration:
    return x.relabel(canonical_relabeling(x))


def canonical_form(x: Configuration) -> CanonicalForm:
    y = canonical_config(x)
    return CanonicalForm(format_config(y, "compact" if y.v <= 36 else "decimal"))


def are_isomorphic(x: Configuration, y: Configuration) -> bool:
    if x.v != y.v:
        return False
    return canonical_form(x) == canonical_form(y)


def automorphism_group(x: Configuration):
    """``(generators, order)``; generators are point permutations."""
    _, _, _, gens, order = _labeling(x)
    return [tuple(g[: x.v]) for g in gens], order


def _orbits(n, gens):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i in range(n):
            ra, rb = find(i), find(g[i])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return len({find(i) for i in range(n)})


def _group_elements(n, gens, limit=GROUP_ELEMENT_LIMIT):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = tuple(g[h[i]] for i in range(n))
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
                    if len(seen) > limit:
                        raise RuntimeError("group too large to enumerate")
        frontier = nxt
    return seen


def _is_single_cycle(perm, v):
    p, steps = perm[0], 1
    while p != 0:
        p = perm[p]
        steps += 1
    return steps == v


def symmetry_profile(x: Configuration) -> SymmetryProfile:
    v = x.v
    g, adj, lab, gens, aut_order = _labeling(x)
    _, _, lab2, _, _ = _labeling(x, swap=True)
    cert = _kernels.pykernels._certificate(lab, adj, g.n)
    cert2 = _kernels.pykernels._certificate(lab2, adj, g.n)
    self_dual = cert == cert2
    full_order = 2 * aut_order if self_dual else aut_order

    elements = _group_elements(2 * v, gens) if gens else {tuple(range(2 * v))}
    assert len(elements) == aut_order

    self_polar = False
    anti = []
    if self_dual:
        tau = [0] * (2 * v)
        for i in range(2 * v):
            tau[lab[i]] = lab2[i]
        for h in elements:
            sigma = [tau[h[i]] for i in range(2 * v)]
            anti.append(sigma)
            if not self_polar and all(sigma[sigma[i]] == i for i in range(2 * v)):
                self_polar = True

    point_transitive = _orbits(v, gens) == 1
    cyclic = point_transitive and any(_is_single_cycle(h, v) for h in elements)

    # flags are Levi edges (point p, block vertex v + j)
    flags = [(p, v + j) for j, b in enumerate(x.blocks) for p in b]
    fidx = {f: i for i, f in enumerate(flags)}
    flag_gens = [[fidx[(h[p], h[b])] for p, b in flags] for h in gens]
    flag_transitive = _orbits(len(flags), flag_gens) == 1
    if self_dual and not flag_transitive:
        edge_idx = {}
        for i, (p, b) in enumerate(flags):
            edge_idx[(p, b)] = edge_idx[(b, p)] = i
        full_gens = flag_gens + [[edge_idx[(anti[0][p], anti[0][b])] for p, b in flags]]
        weakly = _orbits(len(flags), full_gens) == 1
    else:
        weakly = flag_transitive
    return SymmetryProfile(aut_order, full_order, self_dual, self_polar,
                           point_transitive, flag_transitive, weakly, cyclic)


def is_self_dual(x: Configuration) -> bool:
    return are_isomorphic(x, dual(x))
