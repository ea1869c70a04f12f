"""Naive reference for tau_3, independent of the packing engine.

Candidates are built straight from the definition: a root r outside S and
three internally disjoint r-to-terminal paths that avoid the other
terminals.  Every family of pairwise internally disjoint candidates is
then enumerated.
"""

from __future__ import annotations

import itertools

import networkx as nx


def spider_vertex_sets(g: nx.Graph, s: tuple) -> set[frozenset]:
    terms = set(s)
    out = set()
    for r in g.nodes:
        if r in terms:
            continue
        legs = []
        for t in s:
            h = g.subgraph(set(g.nodes) - (terms - {t}))
            legs.append([p for p in nx.all_simple_paths(h, r, t)])
        for combo in itertools.product(*legs):
            inner = [set(p[:-1]) for p in combo]
            if all(len(inner[i] & inner[j]) == 1 for i, j in ((0, 1), (0, 2), (1, 2))):
                out.add(frozenset().union(*inner))
    return out


def local_tau3(g: nx.Graph, s: tuple) -> int:
    cands = sorted(spider_vertex_sets(g, s), key=lambda c: (len(c), sorted(map(str, c))))
    best = 0

    def extend(start: int, used: frozenset, size: int):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(cands)):
            if not (cands[i] & used):
                extend(i + 1, used | cands[i], size + 1)

    extend(0, frozenset(), 0)
    return best


def tau3(g: nx.Graph) -> int:
    if not nx.is_connected(g):
        return 0
    if g.number_of_nodes() < 3:
        return 1
    return min(local_tau3(g, s) for s in itertools.combinations(sorted(g.nodes), 3))


def connected_atlas(max_nodes: int = 7):
    for g in nx.graph_atlas_g():
        if 3 <= g.number_of_nodes() <= max_nodes and nx.is_connected(g):
            yield g
