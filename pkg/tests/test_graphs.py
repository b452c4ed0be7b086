import math
import random

import pytest

from symconf.constructions import cyclic_config, fano
from symconf.core import Graph, disjoint_union, levi_graph, parse_config
from symconf.corpus import corpus_get
from symconf.errors import BoundExceeded, NotConnected, PreconditionViolated
from symconf.graphs import (Component, config_connectivity, girth, hamiltonian_path_between,
                            is_connected_graph, is_hamiltonian, three_edge_colouring,
                            three_k2_decomposition, two_cut)

import oracles


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_girth_examples():
    assert girth(levi_graph(fano())) == 6
    assert girth(cycle_graph(6)) == 6
    assert girth(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])) == math.inf


@pytest.mark.parametrize("seed", range(10))
def test_girth_random_against_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 14)
    edges = {tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(n - 1, 2 * n))}
    g = Graph.from_edges(n, edges)
    expected = oracles.nx_girth(g.n, g.adj)
    assert girth(g) == expected


def test_connectivity_examples():
    assert config_connectivity(fano()) == 3
    assert config_connectivity(corpus_get("bsfree-25-2conn").config) == 2
    value, cut = config_connectivity(corpus_get("bsfree-21").config, witness=True)
    assert value == 2 and cut is not None
    assert not is_connected_graph(levi_graph(corpus_get("bsfree-21").config), cut)


def test_connectivity_disconnected():
    with pytest.raises(NotConnected):
        config_connectivity(disjoint_union(fano(), fano()))


@pytest.mark.parametrize("v", [9, 10, 11, 12, 13])
def test_connectivity_against_networkx(classes, v):
    xs = classes(v) if v <= 12 else [corpus_get("bsfree-13").config, cyclic_config(13)]
    for x in xs:
        g = levi_graph(x)
        k = config_connectivity(x)
        assert k == oracles.vertex_connectivity(g.n, g.adj)
        if k == 3:
            assert two_cut(g) is None


def test_hamiltonian_examples():
    res = is_hamiltonian(levi_graph(fano()))
    assert res and len(res.cycle) == 14
    assert is_hamiltonian(cycle_graph(8)).hamiltonian
    assert not is_hamiltonian(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])).hamiltonian


@pytest.mark.parametrize("entry_id", ["bsfree-22", "bsfree-30", "bsfree-32"])
def test_even_blocking_free_non_hamiltonian(entry_id):
    assert not is_hamiltonian(levi_graph(corpus_get(entry_id).config)).hamiltonian


def test_hamiltonian_bound():
    with pytest.raises(BoundExceeded):
        is_hamiltonian(levi_graph(cyclic_config(40)))


@pytest.mark.parametrize("v", [8, 9, 10])
def test_hamiltonian_enumerated_against_dfs(classes, v):
    for x in classes(v):
        g = levi_graph(x)
        assert is_hamiltonian(g).hamiltonian == oracles.dfs_hamiltonian(g.n, g.adj)


def test_path_between_examples():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert hamiltonian_path_between(path, 0, 2)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not hamiltonian_path_between(star, 1, 2)
    with pytest.raises(PreconditionViolated):
        hamiltonian_path_between(path, 1, 1)


def _brute_path(g, u, w):
    seen = {u}
    path = [u]

    def rec():
        if len(path) == g.n:
            return path[-1] == w
        for x in g.adj[path[-1]]:
            if x not in seen and (x != w or len(path) == g.n - 1):
                seen.add(x)
                path.append(x)
                if rec():
                    return True
                path.pop()
                seen.discard(x)
        return False

    return rec()


def test_path_between_on_edge_deleted_heawood():
    from symconf.enumeration import generate_components
    (comp,) = generate_components(14)
    g = comp.graph
    assert hamiltonian_path_between(g, comp.a, comp.d) == _brute_path(g, comp.a, comp.d)
    rng = random.Random(1)
    for _ in range(10):
        u, w = rng.sample(range(g.n), 2)
        assert hamiltonian_path_between(g, u, w) == _brute_path(g, u, w)


def test_component_invariants():
    g = levi_graph(fano())
    edges = [e for e in g.edges() if e != (0, 7)]
    h = Graph.from_edges(14, edges, g.parts)
    c = Component(h, 0, 7)
    assert c.a == 0
    with pytest.raises(AssertionError):
        Component(g, 0, 7)


def _k33():
    return Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)])


@pytest.mark.parametrize("g", [_k33(), levi_graph(fano()), levi_graph(cyclic_config(12)),
                               levi_graph(corpus_get("bsfree-22").config)],
                         ids=["k33", "heawood", "c12", "22"])
def test_three_k2(g):
    m = g.n // 2
    groups = three_k2_decomposition(g)
    assert len(groups) == m
    all_edges = sorted(e for t in groups for e in t)
    assert all_edges == sorted(g.edges())
    for t in groups:
        assert len({v for e in t for v in e}) == 6


def test_three_edge_colouring_matchings():
    g = levi_graph(cyclic_config(10))
    cols = three_edge_colouring(g)
    for m in cols:
        assert sorted(v for e in m for v in e) == list(range(g.n))


def test_three_k2_rejects_non_cubic():
    with pytest.raises(PreconditionViolated):
        three_k2_decomposition(cycle_graph(6))


def test_heawood_decomposition_has_seven_groups():
    assert len(three_k2_decomposition(levi_graph(parse_config("013 026 045 124 156 235 346")))) == 7
