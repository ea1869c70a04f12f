import itertools
import json
import random

import pytest

from pendant_trees import PendantTree, TerminalSet, local_pendant_connectivity, pendant_tree_connectivity
from pendant_trees import verify_packing
from pendant_trees.construct import (
    ConstructionError,
    ConstructionPlan,
    FactorDecomposition,
    construct_pair_product,
    construct_path_product,
    construct_theorem_packing,
    contained_in,
    sharpness_probe,
    steiner_tree,
)
from pendant_trees.families import complete, cycle, path, petersen, wheel
from pendant_trees.flow import disjoint_paths
from pendant_trees.graph import cartesian_product
from pendant_trees.steiner import Packing

W5 = wheel(5)


def test_path_product_same_copy_gets_one_more():
    s = [(0, 1), (0, 2), (0, 4)]
    hp = local_pendant_connectivity(W5, (1, 2, 4)).packing
    pk = construct_path_product(3, W5, s, hp)
    assert len(pk) == len(hp) + 1 == 2
    assert pk.verified


def test_path_product_two_in_copy():
    pk = construct_path_product(3, W5, [(0, 1), (0, 2), (2, 4)])
    assert len(pk) >= 1 and pk.verified


def test_path_product_two_in_copy_coincide():
    pk = construct_path_product(3, W5, [(0, 1), (0, 3), (2, 1)])
    assert len(pk) >= 1 and pk.verified


@pytest.mark.parametrize("projs,least", [((1, 2, 4), 1), ((1, 3, 1), 1), ((2, 2, 2), 2)])
def test_path_product_three_copies(projs, least):
    s = [(i, p) for i, p in zip((0, 1, 2), projs)]
    pk = construct_path_product(3, W5, s)
    assert len(pk) >= least and pk.verified


def test_path_product_all_coincide_uses_every_neighbour():
    pk = construct_path_product(4, W5, [(0, 0), (2, 0), (3, 0)])
    assert len(pk) == W5.degree(0) == 5


def test_path_product_single_layer_falls_back():
    pk = construct_path_product(1, W5, [(0, 1), (0, 2), (0, 4)])
    assert len(pk) == 1


def test_path_product_rejects_bad_h_packing():
    s = TerminalSet((1, 2, 4), W5)
    bad = Packing((PendantTree.from_edges([(1, 0), (2, 0), (4, 3)], s),), s)
    with pytest.raises(ConstructionError):
        construct_path_product(3, W5, [(0, 1), (0, 2), (0, 4)], bad)


def k8_pair():
    g = complete(8)
    pk = local_pendant_connectivity(g, (0, 1, 2)).packing
    return g, pk.trees[:2]


@pytest.mark.parametrize("h,projs", [
    (complete(5), (0, 1, 2)),
    (cycle(4), (0, 2, 0)),
    (complete(4), (1, 1, 3)),
    (cycle(5), (3, 3, 3)),
])
def test_pair_product_k8(h, projs):
    g, gt = k8_pair()
    prod = cartesian_product(g, h)
    s = tuple(zip((0, 1, 2), projs))
    distinct = sorted(set(projs), key=projs.index)
    if len(distinct) == 3:
        ht = local_pendant_connectivity(h, distinct).packing.trees[:2]
        hedges = set().union(*(t.edges for t in ht))
    elif len(distinct) == 2:
        paths = disjoint_paths(h, *distinct)[:2]
        ht = [list(zip(p, p[1:])) for p in paths]
        hedges = {frozenset(e) for p in ht for e in p}
    else:
        nb = sorted(h.neighbors(projs[0]))[:2]
        ht = [[(projs[0], nb[0])], [(projs[0], nb[1])]]
        hedges = {frozenset(e) for p in ht for e in p}
    pk = construct_pair_product(prod, s, gt, ht)
    assert len(pk) == 3 and verify_packing(prod, pk).ok
    gedges = set().union(*(t.edges for t in gt))
    assert all(contained_in(t, gedges, hedges) for t in pk.trees)


def test_pair_product_rejects_degenerate_and_unrooted():
    g, gt = k8_pair()
    h = complete(5)
    prod = cartesian_product(g, h)
    ht = local_pendant_connectivity(h, (0, 1, 2)).packing.trees[:2]
    with pytest.raises(ConstructionError):
        construct_pair_product(prod, ((0, 0), (0, 1), (2, 2)), gt, ht)
    unrooted = [PendantTree(t.edges, t.terminals) for t in gt]
    with pytest.raises(ConstructionError):
        construct_pair_product(prod, ((0, 0), (1, 1), (2, 2)), unrooted, ht)
    with pytest.raises(ConstructionError):
        construct_pair_product(prod, ((0, 0), (1, 1), (2, 2)), [gt[0], gt[0]], ht)


def test_theorem_c4_c4_is_vacuous():
    r = construct_theorem_packing(cycle(4), cycle(4), [(0, 0), (1, 1), (2, 2)])
    assert r.bound == 0 and r.packing.verified


def test_theorem_k5_k5():
    r = construct_theorem_packing(complete(5), complete(5), [(0, 0), (1, 1), (2, 2)])
    assert r.bound == 3 and len(r.packing) >= 3


def test_theorem_k8_example():
    g = complete(8)
    h = complete(6)
    tau = ((5, True), (pendant_tree_connectivity(h, 3).value, True))
    assert tau[1][0] == 3
    r = construct_theorem_packing(g, h, [(0, 0), (1, 1), (2, 2)], tau=tau)
    assert r.swapped and r.bound == 3 and len(r.packing) >= 3
    r = construct_theorem_packing(g, complete(8), [(0, 0), (1, 1), (2, 2)], tau=((5, True), (5, True)))
    assert r.bound == 6 and len(r.packing) >= 6


def test_theorem_same_copy_counts():
    g, h = complete(5), complete(6)
    r = construct_theorem_packing(g, h, [(0, 0), (0, 1), (0, 2)])
    k, l = r.tau_g, r.tau_h
    assert len(r.packing) >= k + l + 2


def test_theorem_swaps_and_maps_back():
    r = construct_theorem_packing(complete(6), complete(4), [(0, 0), (1, 1), (2, 2)])
    prod = cartesian_product(complete(6), complete(4))
    assert r.swapped and verify_packing(prod, r.packing).ok


FACTORS = [path(3), cycle(4), complete(4), complete(5), wheel(5), petersen()]


@pytest.mark.parametrize("g,h", list(itertools.product(FACTORS, FACTORS)))
def test_constructions_always_verify(g, h):
    rng = random.Random(len(g) * 100 + len(h))
    prod = cartesian_product(g, h)
    tau = ((pendant_tree_connectivity(g, 3).value, True), (pendant_tree_connectivity(h, 3).value, True))
    for _ in range(8):
        s = rng.sample(prod.vertices, 3)
        r = construct_theorem_packing(g, h, s, tau=tau)
        assert verify_packing(prod, r.packing).ok
        assert len(r.packing) >= r.bound
        assert r.dropped == 0


def test_construction_never_beats_optimum():
    g, h = complete(4), cycle(4)
    prod = cartesian_product(g, h)
    rng = random.Random(3)
    for _ in range(6):
        s = rng.sample(prod.vertices, 3)
        r = construct_theorem_packing(g, h, s)
        assert len(r.packing) <= local_pendant_connectivity(prod, s).value


def test_transcript_is_deterministic_json():
    a = construct_theorem_packing(complete(5), wheel(5), [(0, 1), (1, 1), (2, 3)])
    b = construct_theorem_packing(complete(5), wheel(5), [(0, 1), (1, 1), (2, 3)])
    prod = cartesian_product(complete(5), wheel(5))
    assert json.dumps(a.transcript(prod)) == json.dumps(b.transcript(prod))
    assert a.transcript(prod)["verified"] is True


def test_decomposition_and_plan():
    prod = cartesian_product(path(3), cycle(4))
    s = ((0, 1), (1, 3), (2, 2))
    d = FactorDecomposition.of(prod, s)
    assert d.corresponded[(1, 3)] == (0, 3)
    assert d.reembed() == s
    plan = ConstructionPlan.pair_up(list("abcde"), list("xyz"))
    assert plan.pairing == [((0, 1), (0, 1))]


def test_steiner_tree_connects_targets():
    h = cycle(6)
    edges = steiner_tree(h, [0, 2, 4])
    assert len(edges) == 4


def test_sharpness_examples():
    r = sharpness_probe(path(3), path(3))
    assert r.bound == 0 and r.tau_product == 0 and r.tight
    r = sharpness_probe(cycle(4), cycle(5))
    assert r.bound == 0 and r.holds and not r.tight
    r = sharpness_probe(complete(4), complete(4))
    assert r.bound == 0 and r.tau_product >= 0 and r.exact
