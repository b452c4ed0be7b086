import random
from itertools import permutations

import pytest

from symconf.constructions import cyclic_config, fano, stitch2, stitch2_choices, triangle_family
from symconf.core import dual, parse_config
from symconf.corpus import corpus_get, corpus_load
from symconf.isomorphism import (are_isomorphic, automorphism_group, canonical_config,
                                 canonical_form, is_self_dual, symmetry_profile)

import oracles


def _relabel_random(x, rng):
    perm = list(range(x.v))
    rng.shuffle(perm)
    return x.relabel(perm)


def test_fano_all_relabelings_same_form():
    x = fano()
    forms = {canonical_form(x.relabel(p)).text for p in permutations(range(7))}
    assert len(forms) == 1


def test_three_9_3_forms(classes):
    forms = {canonical_form(x).text for x in classes(9)}
    assert len(forms) == 3


@pytest.mark.parametrize("entry", corpus_load(), ids=lambda e: e.id)
def test_canonical_invariance_corpus(entry):
    rng = random.Random(entry.id)
    x = entry.config
    ref = canonical_form(x)
    for _ in range(200):
        assert canonical_form(_relabel_random(x, rng)) == ref


def test_canonical_config_is_fixed_point(classes):
    for x in classes(10):
        assert canonical_config(x) == x
        assert canonical_config(canonical_config(x)) == canonical_config(x)


def test_digest_stable():
    d = canonical_form(fano()).digest
    assert len(d) == 64 and d == canonical_form(cyclic_config(7)).digest


def test_stitch_fano_fano_single_class():
    f = fano()
    forms = {canonical_form(stitch2(f, f, ch)).text for ch in stitch2_choices(f, f, reduce=False)}
    assert len(forms) == 1
    assert are_isomorphic(stitch2(f, f), corpus_get("bsfree-13").config)


def test_cyclic7_is_fano():
    assert are_isomorphic(cyclic_config(7), fano())


def test_pappus_differs_from_other_9_3(classes):
    pappus = [x for x in classes(9) if symmetry_profile(x).flag_transitive]
    assert len(pappus) == 1
    others = [x for x in classes(9) if x != pappus[0]]
    assert not any(are_isomorphic(pappus[0], y) for y in others)


def test_isomorphism_is_equivalence(classes):
    rng = random.Random(4)
    xs = classes(10)
    sample = xs + [_relabel_random(x, rng) for x in xs]
    for a in sample:
        assert are_isomorphic(a, a)
        for b in sample:
            ab = are_isomorphic(a, b)
            assert ab == are_isomorphic(b, a)
            assert ab == oracles.nx_isomorphic(a.v, a.blocks, b.v, b.blocks)


@pytest.mark.parametrize("v", [7, 8])
def test_aut_order_brute_force(v):
    x = cyclic_config(v) if v == 7 else parse_config("012 034 056 135 147 246 257 367")
    _, order = automorphism_group(x)
    assert order == oracles.brute_aut_order(x.v, x.blocks)


def test_fano_group():
    gens, order = automorphism_group(fano())
    assert order == 168
    blocks = set(fano().blocks)
    for g in gens:
        assert {tuple(sorted(g[p] for p in b)) for b in blocks} == blocks


@pytest.mark.parametrize("v", [9, 10, 11])
def test_group_orders_against_vf2(classes, v):
    for x in classes(v):
        prof = symmetry_profile(x)
        aut, full = oracles.nx_aut_orders(x.v, x.blocks)
        assert (prof.aut_order, prof.full_order) == (aut, full)
        assert prof.self_dual == (full == 2 * aut)


def test_random_12_mostly_trivial_group(classes):
    xs = classes(12)
    orders = [automorphism_group(x)[1] for x in xs]
    assert orders.count(1) > len(xs) // 2
    for x in random.Random(3).sample(xs, 8):
        aut, _ = oracles.nx_aut_orders(x.v, x.blocks)
        assert automorphism_group(x)[1] == aut


def test_triangle_family_order_divisible_by_12():
    x = triangle_family(4)
    _, order = automorphism_group(x)
    assert order % 12 == 0
    blocks = set(x.blocks)
    s = 4
    shift = [((p % s + 1) % s) + s * (p // s) for p in range(3 * s)]
    rotate = [(p + s) % (3 * s) for p in range(3 * s)]
    for g in (shift, rotate):
        assert {tuple(sorted(g[p] for p in b)) for b in blocks} == blocks


def test_fano_profile():
    p = symmetry_profile(fano())
    assert p.point_transitive and p.flag_transitive and p.cyclic and p.self_polar
    assert p.weakly_flag_transitive and p.self_dual
    assert (p.aut_order, p.full_order) == (168, 336)


def test_special_19_and_16():
    p = symmetry_profile(corpus_get("min9-19-1").config)
    assert p.point_transitive and p.cyclic
    assert p.full_order == 114
    assert are_isomorphic(corpus_get("min9-19-1").config, cyclic_config(19, (0, 1, 8)))
    assert symmetry_profile(corpus_get("min8-16-1").config).flag_transitive


def test_bsfree13_self_dual():
    x = corpus_get("bsfree-13").config
    assert is_self_dual(x)
    assert are_isomorphic(x, dual(x))


@pytest.mark.parametrize("v", [9, 10, 11, 12])
def test_profile_invariants(classes, v):
    for x in classes(v):
        p = symmetry_profile(x)
        assert not p.self_polar or p.self_dual
        assert not p.flag_transitive or p.point_transitive
        assert not p.cyclic or p.point_transitive
        assert p.full_order in (p.aut_order, 2 * p.aut_order)
        assert p.self_dual == (p.full_order == 2 * p.aut_order)
        assert p.self_dual == are_isomorphic(x, dual(x))
