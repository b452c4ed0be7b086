import pytest

from symconf.blocking import blocking_profile
from symconf.constructions import fano
from symconf.core import Graph, parse_config, validate
from symconf.corpus import corpus_get, corpus_select
from symconf.enumeration import (component_distance, edge_connectivity_at_most_2,
                                 enumerate_3conn_bsfree, enumerate_configs, generate_components,
                                 join_components, raw_matrices, tabulate_properties)
from symconf.errors import BoundExceeded, FourCycleRisk, OutOfRange
from symconf.graphs import girth
from symconf.isomorphism import are_isomorphic, canonical_config, canonical_form, symmetry_profile

from reference_counts import CHI_S, CONNECTED, MIN_BLOCKING, SYMMETRY, THREE_CONNECTED


@pytest.mark.parametrize("v", range(7, 13))
def test_connected_counts(classes, v):
    assert len(classes(v)) == CONNECTED[v]


def test_small_v_and_bound():
    assert enumerate_configs(6) == []
    with pytest.raises(BoundExceeded):
        enumerate_configs(14)


@pytest.mark.parametrize("v", [9, 10, 11])
def test_output_is_canonical_and_distinct(classes, v):
    xs = classes(v)
    assert [x.blocks for x in xs] == sorted(x.blocks for x in xs)
    assert len({canonical_form(x).text for x in xs}) == len(xs)
    for x in xs:
        assert canonical_config(x) == x


def test_jobs_do_not_change_output():
    assert enumerate_configs(10, jobs=2) == enumerate_configs(10, jobs=1)
    assert sorted(raw_matrices(9, jobs=2)) == sorted(raw_matrices(9))


@pytest.mark.parametrize("v", range(7, 13))
def test_tabulate_rows(classes, v):
    row = tabulate_properties(v, configs=classes(v))
    assert tuple(row[k] for k in "abcdefghi") == SYMMETRY[v]
    assert row["min_blocking"] == MIN_BLOCKING[v]
    assert row["chi_s"] == CHI_S[v]


@pytest.mark.parametrize("v", range(7, 13))
def test_only_fano_is_blocking_free_below_13(classes, v):
    free = [x for x in classes(v) if not blocking_profile(x).has]
    assert len(free) == (v == 7)


def test_3conn_closure_small():
    levels = {}
    for v in (7, 13, 19):
        xs = enumerate_3conn_bsfree(v, levels=levels)
        n, sd, sp = THREE_CONNECTED[v]
        assert len(xs) == n
        profiles = [symmetry_profile(x) for x in xs]
        assert sum(p.self_dual for p in profiles) == sd
        assert sum(p.self_polar for p in profiles) == sp
    assert are_isomorphic(levels[13][0], corpus_get("bsfree-13").config)


def test_3conn_19_matches_corpus():
    xs = enumerate_3conn_bsfree(19)
    listed = [e.config for e in corpus_select("bsfree-19-")]
    assert len(listed) == 4
    keys = {canonical_form(x).text for x in xs}
    assert keys == {canonical_form(y).text for y in listed}


def test_3conn_bad_v():
    with pytest.raises(OutOfRange):
        enumerate_3conn_bsfree(20)


@pytest.mark.parametrize("n,count", [(12, 0), (14, 1), (16, 3)])
def test_component_counts(n, count):
    assert len(generate_components(n)) == count


def test_component_details():
    (heawood_minus,) = generate_components(14)
    g = heawood_minus.graph
    h = Graph.from_edges(14, list(g.edges()) + [(heawood_minus.a, heawood_minus.d)])
    levi = Graph.from_edges(14, [(p, 7 + i) for i, b in enumerate(fano().blocks) for p in b])
    from symconf.isomorphism import graphs_isomorphic
    assert graphs_isomorphic(h, levi)
    assert sorted(component_distance(c) for c in generate_components(16)) == [1, 3, 5]
    for c in generate_components(16):
        assert girth(c.graph) >= 6
        assert c.graph.parts[c.a] != c.graph.parts[c.d]


def test_component_errors():
    with pytest.raises(OutOfRange):
        generate_components(15)
    with pytest.raises(BoundExceeded):
        generate_components(20)


def _decode(g):
    points = [u for u in range(g.n) if g.parts[u] == 0]
    index = {u: i for i, u in enumerate(points)}
    blocks = [tuple(sorted(index[w] for w in g.adj[u])) for u in range(g.n) if g.parts[u] == 1]
    return validate(blocks)


@pytest.mark.parametrize("variant", [1, 2])
def test_join_two_heawood_components(variant):
    (c,) = generate_components(14)
    g = join_components(c, c, variant)
    assert g.n == 28 and girth(g) >= 6
    assert edge_connectivity_at_most_2(g)
    assert _decode(g).ok


def test_join_all_pairs_of_16():
    cs = generate_components(16)
    for c1 in cs:
        for c2 in cs:
            adjacent = [component_distance(c) == 1 for c in (c1, c2)]
            for variant in (1, 2):
                if all(adjacent):
                    with pytest.raises(FourCycleRisk):
                        join_components(c1, c2, variant)
                else:
                    assert _decode(join_components(c1, c2, variant)).ok


def test_join_bad_variant():
    (c,) = generate_components(14)
    with pytest.raises(ValueError):
        join_components(c, c, 3)


def test_cubic_heawood_is_not_two_edge_cut():
    heawood = Graph.from_edges(14, [(p, 7 + i) for i, b in enumerate(parse_config(
        "013 026 045 124 156 235 346").blocks) for p in b])
    assert not edge_connectivity_at_most_2(heawood)
