import pytest

from symconf.blocking import blocking_profile
from symconf.colouring import (Colouring, colour_graph, colouring_report, deleted_class_graphs,
                               near_4_colouring, strong_chromatic_number, verify_strong_colouring,
                               verify_weak_colouring, weak_colouring)
from symconf.constructions import col3iso_family, cyclic_config, delgraph_config, fano, triangle_family
from symconf.core import Graph, associated_graph, levi_graph, parse_config
from symconf.corpus import corpus_select
from symconf.errors import BoundExceeded, NotAStrong3Colouring
from symconf.isomorphism import graphs_isomorphic

import oracles

CONFIG_8 = parse_config("012 034 056 135 147 246 257 367")


def cv_formula(v):
    if v == 7:
        return 7
    if v == 11:
        return 6
    return 4 if v % 4 == 0 else 5


@pytest.mark.parametrize("x,k", [(fano(), 7), (CONFIG_8, 4), (cyclic_config(11), 6), (cyclic_config(12), 4)])
def test_examples(x, k):
    chi, c = strong_chromatic_number(x)
    assert chi == k
    assert verify_strong_colouring(x, c)


@pytest.mark.parametrize("v", range(7, 25))
def test_cyclic_formula(v):
    assert strong_chromatic_number(cyclic_config(v))[0] == cv_formula(v)


@pytest.mark.parametrize("v", [8, 9, 10, 11])
def test_against_brute_force(classes, v):
    for x in classes(v):
        assert strong_chromatic_number(x)[0] == oracles.brute_chromatic(x.v, x.blocks)


@pytest.mark.parametrize("v", [7, 8, 9, 10, 11, 12])
def test_structure_of_small_chi(classes, v):
    for x in classes(v):
        chi, _ = strong_chromatic_number(x)
        assert 3 <= chi <= 7
        assert (chi == 7) == (v == 7)
        if chi == 3:
            assert v % 3 == 0
        if chi in (3, 4):
            assert blocking_profile(x).chi_w == 2


def test_verify_helpers():
    x = triangle_family(3)
    classes = Colouring(tuple(p // 3 for p in range(9)))
    assert verify_strong_colouring(x, classes)
    assert not verify_strong_colouring(fano(), Colouring((0,) * 7))
    assert not verify_weak_colouring(fano(), Colouring((0,) * 7))


@pytest.mark.parametrize("a,b", [(2, 0), (0, 2), (1, 1), (3, 1), (2, 2)])
def test_4a_5b_pattern(a, b):
    v = 4 * a + 5 * b
    if v < 7:
        pytest.skip("too small for C_v")
    pattern = [0, 1, 2, 3] * a + [0, 1, 2, 3, 4] * b
    assert verify_strong_colouring(cyclic_config(v), Colouring(tuple(pattern)))


def test_colour_graph_skip():
    g = associated_graph(fano())
    assert colour_graph(g, 5) is None
    assert colour_graph(g, 5, skip=(0, 1)) is not None


def test_weak_colourings():
    assert weak_colouring(fano(), 2) is None
    c = weak_colouring(fano(), 3)
    assert verify_weak_colouring(fano(), c)
    rep = colouring_report(fano())
    assert (rep.chi_w, rep.chi_s) == (3, 7)
    rep = colouring_report(CONFIG_8)
    assert (rep.chi_w, rep.chi_s) == (2, 4)


def test_near_4_examples():
    c, skip = near_4_colouring(CONFIG_8)
    assert skip == () and c.num_colours == 4
    assert near_4_colouring(fano()) is None
    with pytest.raises(BoundExceeded):
        near_4_colouring(cyclic_config(25))


@pytest.mark.parametrize("v", [9, 10, 11, 12])
def test_near_4_implies_weak_2(classes, v):
    for x in classes(v):
        if strong_chromatic_number(x)[0] != 5:
            continue
        res = near_4_colouring(x)
        if res is not None:
            c, skip = res
            assert len(skip) <= 2
            for a, b, d in x.blocks:
                cols = [c.colours[p] for p in (a, b, d) if c.colours[p] is not None]
                assert len(cols) == len(set(cols))
            assert blocking_profile(x).chi_w == 2


def test_near_4_on_chis5_corpus():
    for e in corpus_select("chis5"):
        res = near_4_colouring(e.config)
        if res is not None:
            assert blocking_profile(e.config).chi_w == 2


def test_deleted_class_graphs_triangle():
    x = triangle_family(4)
    gs = deleted_class_graphs(x, Colouring(tuple(p // 4 for p in range(12))))
    assert len(gs) == 3
    for h in gs:
        assert h.n == 8 and all(len(a) == 3 for a in h.adj)


def test_deleted_class_graphs_rejects_bad_colouring():
    with pytest.raises(NotAStrong3Colouring):
        deleted_class_graphs(fano(), Colouring(tuple(range(7))))


@pytest.mark.parametrize("s", [3, 4, 5, 6, 7])
def test_col3iso_deleted_graphs_isomorphic(s):
    x, colouring, gamma = col3iso_family(s)
    assert verify_strong_colouring(x, colouring)
    gs = deleted_class_graphs(x, colouring)
    for h in gs:
        assert graphs_isomorphic(Graph(h.n, h.adj), Graph(gamma.n, gamma.adj))


def _k33():
    return Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)], [0] * 3 + [1] * 3)


@pytest.mark.parametrize("gamma", [_k33(), levi_graph(fano()), levi_graph(CONFIG_8),
                                   levi_graph(cyclic_config(9)), levi_graph(triangle_family(4))],
                         ids=["k33", "heawood", "levi8", "levi9", "levi12"])
def test_delgraph_third_class(gamma):
    x, colouring = delgraph_config(gamma)
    assert x.v == 3 * gamma.n // 2
    assert verify_strong_colouring(x, colouring)
    third = deleted_class_graphs(x, colouring)[2]
    assert graphs_isomorphic(Graph(third.n, third.adj), Graph(gamma.n, gamma.adj))
