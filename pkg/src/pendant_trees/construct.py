"""Explicit packings of pendant trees for three terminals in G□H.

Notation used throughout: a product vertex is ``(g, h)``.  A path ``X`` of
G "at h" is the column ``[(g, h) for g in X]`` and a path ``Y`` of H "in
H(g)" is ``[(g, h) for h in Y]``.  Every tree is assembled from such
lifted paths, turned into a rooted K_{1,3} subdivision and verified on
the full host graph before it is returned.

For three terminals with G-coordinates u1, u2, u3 and H-coordinates
a, b, c, the vertices ``(u_i, h)`` with ``h`` in {a, b, c} that are not
terminals are called cross vertices.  None of the pair constructions
touch them, which is what keeps the pieces built from different factor
tree pairs disjoint.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bounds import theorem_lower_bound
from .families import path as path_graph
from .flow import disjoint_paths
from .graph import Graph, GraphError, cartesian_product, copy_subgraph, edge_key, label
from .search import local_pendant_connectivity, pendant_tree_connectivity
from .steiner import (
    Packing,
    PendantTree,
    TerminalSet,
    prune_to_core,
    verify_packing,
)


class ConstructionError(ValueError):
    pass


# small path and tree helpers

def _path_edges(vs: Sequence) -> list[tuple]:
    return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def _at(gpath: Sequence, h) -> list[tuple]:
    """Column: a G-path lifted into the copy G(h)."""
    return [(g, h) for g in gpath]


def _in(g, hpath: Sequence) -> list[tuple]:
    """A H-path lifted into the copy H(g)."""
    return [(g, h) for h in hpath]


def _adjacency(edges: Iterable) -> dict:
    adj: dict = {}
    for e in edges:
        a, b = tuple(e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _tree_path(edges: Iterable, src, dst) -> list:
    """The unique src-dst path in a tree given by its edges."""
    adj = _adjacency(edges)
    if src not in adj or dst not in adj:
        raise ConstructionError(f"{label(src)} or {label(dst)} not in tree")
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if dst not in parent:
        raise ConstructionError("tree is disconnected")
    out = [dst]
    while out[-1] != src:
        out.append(parent[out[-1]])
    return out[::-1]


def _legs(tree: PendantTree) -> dict:
    """Leaf-to-root vertex lists of a rooted spider, keyed by leaf."""
    if tree.root is None:
        raise ConstructionError("factor tree must be rooted")
    return {t: _tree_path(tree.edges, t, tree.root) for t in tree.terminals}


def _bfs_tree(h: Graph, src) -> dict:
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in sorted(h.neighbors(v), key=h.sort_key):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


def steiner_tree(h: Graph, targets: Sequence) -> set:
    """A small tree of ``h`` containing every target (BFS tree from the best centre)."""
    targets = list(dict.fromkeys(targets))
    if len(targets) == 1:
        return set()
    best = None
    for v in h:
        parent = _bfs_tree(h, v)
        if any(t not in parent for t in targets):
            raise ConstructionError("factor graph is disconnected")
        edges = set()
        for t in targets:
            w = t
            while parent[w] is not None:
                edges.add(edge_key(w, parent[w]))
                w = parent[w]
        if best is None or len(edges) < len(best):
            best = edges
    return best


def _spider(edge_lists: Iterable[Sequence], ts: TerminalSet) -> PendantTree:
    edges = set()
    for vs in edge_lists:
        for a, b in _path_edges(vs):
            edges.add(edge_key(a, b))
    return prune_to_core(PendantTree(frozenset(edges), ts))


def _spider_from_edges(edges: Iterable, ts: TerminalSet) -> PendantTree:
    return prune_to_core(PendantTree(frozenset(edge_key(*tuple(e)) for e in edges), ts))


def _lift_edges(edges: Iterable, g) -> list:
    return [((g, a), (g, b)) for a, b in (tuple(e) for e in edges)]


def _order_paths(paths: list[list]) -> list[list]:
    return sorted(paths, key=lambda p: (len(p), [label(v) for v in p]))


# domain records

@dataclass(frozen=True)
class FactorDecomposition:
    """Terminals split into factor coordinates, anchored at the copy holding x."""

    product: Graph
    x: tuple
    g_terminals: tuple
    h_anchor_copy: object
    corresponded: dict

    @classmethod
    def of(cls, product: Graph, terminals: Sequence) -> "FactorDecomposition":
        x = terminals[0]
        anchor = copy_subgraph(product, "G", x[0])
        corr = {t: anchor.corresponding(t) for t in terminals[1:]}
        return cls(product, x, tuple(t[0] for t in terminals), anchor, corr)

    def reembed(self) -> tuple:
        """Undo the correspondence: recovers the original terminals."""
        rest = [(u, c[1]) for u, c in zip(self.g_terminals[1:], self.corresponded.values())]
        return (self.x, *rest)


@dataclass
class ConstructionPlan:
    g_trees: list
    h_trees: list
    pairing: list = field(default_factory=list)

    @classmethod
    def pair_up(cls, g_trees: list, h_trees: list) -> "ConstructionPlan":
        k = min(len(g_trees), len(h_trees))
        pairs = [((2 * i, 2 * i + 1), (2 * i, 2 * i + 1)) for i in range(k // 2)]
        return cls(list(g_trees), list(h_trees), pairs)


@dataclass
class ConstructionResult:
    packing: Packing
    case: str
    subcase: str
    bound: int
    tau_g: int
    tau_h: int
    exact_factors: bool = True
    swapped: bool = False
    dropped: int = 0
    log: list = field(default_factory=list)

    def guarantee(self) -> str:
        return f">= {self.bound}" if self.exact_factors else f">= {self.bound} (factor values are lower bounds)"

    def transcript(self, product: Graph) -> dict:
        trees = []
        for t in self.packing.trees:
            trees.append({
                "root": None if t.root is None else label(t.root),
                "edges": [[label(a), label(b)] for a, b in t.sorted_edges(product)],
            })
        return {
            "product": product.name,
            "terminals": [label(v) for v in self.packing.terminals],
            "case": self.case,
            "subcase": self.subcase,
            "relabeling": "factors swapped" if self.swapped else "none",
            "tau3_factors": {"G": self.tau_g, "H": self.tau_h, "exact": self.exact_factors},
            "bound": self.bound,
            "size": len(self.packing),
            "dropped": self.dropped,
            "verified": self.packing.verified,
            "log": list(self.log),
            "trees": trees,
        }


def _finish(host: Graph, ts: TerminalSet, trees: list[PendantTree], drop: bool = False) -> tuple[Packing, int]:
    """Verify; with ``drop`` remove offending trees until the rest verifies."""
    pk = Packing(tuple(trees), ts)
    v = verify_packing(host, pk)
    dropped = 0
    while not v:
        if not drop:
            raise ConstructionError(f"constructed packing failed verification: {v.violation}")
        idx = v.detail.get("pair", (None, v.detail.get("tree")))[-1]
        trees = [t for i, t in enumerate(trees) if i != idx]
        dropped += 1
        pk = Packing(tuple(trees), ts)
        v = verify_packing(host, pk)
    return Packing(pk.trees, ts, True), dropped


# pair product

def _h_case(projs: Sequence) -> str:
    n = len(set(projs))
    return {3: "distinct", 2: "two-coincide", 1: "all-coincide"}[n]


def _check_factor_pair(host: Graph, trees: Sequence[PendantTree], what: str) -> None:
    pk = Packing(tuple(trees), trees[0].terminals)
    v = verify_packing(host, pk)
    if not v:
        raise ConstructionError(f"{what} trees are not internally disjoint pendant trees: {v.violation}")
    for t in trees:
        if t.root is None:
            raise ConstructionError(f"{what} trees must be rooted")


def _as_edges(t) -> frozenset:
    if isinstance(t, PendantTree):
        return t.edges
    return frozenset(edge_key(*tuple(e)) for e in t)


def pair_trees(g_pair: Sequence[PendantTree], h_pair: Sequence, terminals: Sequence, ts: TerminalSet) -> list[PendantTree]:
    """The three trees inside (T1 ∪ T2)□(T'1 ∪ T'2); no verification here."""
    (u1, a), (u2, b), (u3, c) = terminals
    us = (u1, u2, u3)
    t1, t2 = g_pair
    r, s = t1.root, t2.root
    leg1, leg2 = _legs(t1), _legs(t2)
    A = [leg1[u] for u in us]  # u_i ... r
    B = [leg2[u] for u in us]  # u_i ... s
    projs = (a, b, c)
    case = _h_case(projs)

    if case == "distinct":
        tp1, tp2 = h_pair
        P, Q = _legs(tp1), _legs(tp2)
        sigma, theta = tp1.root, tp2.root
        T = _spider([
            _in(u1, P[a]), _at(A[0], sigma), _in(r, P[b]), _in(r, P[c]),
            _at(A[1], b), _at(A[2], c),
        ], ts)
        T1 = _spider([_in(us[i], Q[p]) for i, p in enumerate(projs)]
                     + [_at(A[i], theta) for i in range(3)], ts)
        T2 = _spider([_at(B[i], p) for i, p in enumerate(projs)]
                     + [_in(s, P[p]) for p in projs], ts)
        return [T, T1, T2]

    if case == "two-coincide":
        # the two terminals sharing H-coordinate ``al``, the odd one at ``be``
        al = next(p for p in projs if projs.count(p) == 2)
        be = next(p for p in projs if projs.count(p) == 1)
        paths = [_tree_path(_as_edges(hp), al, be) for hp in h_pair]
        paths.sort(key=len)
        N, M = paths[0], paths[1]
        if len(M) < 3:
            raise ConstructionError("two-coincide case needs an a-b path of length at least 2")
        m = M[1]
        T = _spider([_at(A[i], projs[i]) for i in range(3)] + [_in(r, N)], ts)
        T2 = _spider([_at(B[i], projs[i]) for i in range(3)] + [_in(s, N)], ts)
        to_m = {al: M[: M.index(m) + 1], be: M[M.index(m):][::-1]}
        T1 = _spider([_in(us[i], to_m[projs[i]]) for i in range(3)]
                     + [_at(A[i], m) for i in range(3)], ts)
        return [T, T1, T2]

    nbrs = sorted({w for e in _as_edges(h_pair[0]) if a in e for w in e if w != a}, key=label)
    if not nbrs:
        raise ConstructionError("all-coincide case needs a neighbour of the common H-vertex")
    sigma = nbrs[0]
    T = _spider_from_edges(_lift_col(t1.edges, a), ts)
    T1 = _spider_from_edges(_lift_col(t2.edges, a), ts)
    rungs = [edge_key(t, (t[0], sigma)) for t in terminals]
    T2 = _spider_from_edges(rungs + _lift_col(t1.edges, sigma), ts)
    return [T, T1, T2]


def _lift_col(edges: Iterable, h) -> list:
    return [edge_key((p, h), (q, h)) for p, q in (tuple(e) for e in edges)]


def contained_in(tree: PendantTree, g_edges: Iterable, h_edges: Iterable) -> bool:
    """Every edge lies in (G-subgraph)□(H-subgraph) spanned by the given edges."""
    ge = {edge_key(*tuple(e)) for e in g_edges}
    he = {edge_key(*tuple(e)) for e in h_edges}
    for e in tree.edges:
        (g1, h1), (g2, h2) = tuple(e)
        if g1 == g2:
            if edge_key(h1, h2) not in he:
                return False
        elif h1 == h2:
            if edge_key(g1, g2) not in ge:
                return False
        else:
            return False
    return True


def construct_pair_product(
    product: Graph,
    terminals: Sequence,
    g_pair: Sequence[PendantTree],
    h_pair: Sequence,
) -> Packing:
    """Three internally disjoint pendant trees from two G-trees and two H-structures.

    ``g_pair`` are rooted, internally disjoint pendant trees of G on the
    three (distinct) G-coordinates.  ``h_pair`` depends on how many
    distinct H-coordinates the terminals have: two rooted pendant trees on
    them (three), two internally disjoint paths joining them with one of
    length at least 2 (two), or any subgraph with an edge at the common
    vertex (one).
    """
    if product.factors is None:
        raise ConstructionError("product graph carries no factor metadata")
    g, h = product.factors
    terminals = tuple(terminals)
    ts = TerminalSet(terminals, product)
    if len(terminals) != 3:
        raise ConstructionError("exactly three terminals are required")
    us = [t[0] for t in terminals]
    if len(set(us)) != 3:
        raise ConstructionError("G-coordinates coincide: handled by the theorem-level cases")
    if len(g_pair) != 2 or len(h_pair) != 2:
        raise ConstructionError("need two G-trees and two H-structures")
    _check_factor_pair(g, g_pair, "G")
    if set(g_pair[0].terminals) != set(us):
        raise ConstructionError("G-trees must be on the G-coordinates of the terminals")
    projs = [t[1] for t in terminals]
    if _h_case(projs) == "distinct":
        if not all(isinstance(t, PendantTree) for t in h_pair):
            raise ConstructionError("H-structures must be pendant trees when H-coordinates are distinct")
        _check_factor_pair(h, h_pair, "H")
        if set(h_pair[0].terminals) != set(projs):
            raise ConstructionError("H-trees must be on the H-coordinates of the terminals")
    else:
        for hp in h_pair:
            for e in _as_edges(hp):
                if not h.has_edge(*tuple(e)):
                    raise ConstructionError("H-structure uses an edge outside H")
        if _h_case(projs) == "two-coincide":
            e1, e2 = (_as_edges(hp) for hp in h_pair)
            v1 = {v for e in e1 for v in e}
            v2 = {v for e in e2 for v in e}
            if (v1 & v2) - set(projs) or (e1 & e2):
                raise ConstructionError("H-paths are not internally disjoint")
    trees = pair_trees(g_pair, h_pair, terminals, ts)
    pk, _ = _finish(product, ts, trees)
    return pk


# path products

def _path_trees(P: Sequence, h: Graph, terminals: Sequence, ts: TerminalSet,
                h_trees: Sequence[PendantTree] | None) -> tuple[str, list[PendantTree]]:
    """Trees in P□H for terminals whose G-coordinates lie on the path P."""
    pos = {g: i for i, g in enumerate(P)}
    at = [pos[t[0]] for t in terminals]
    projs = [t[1] for t in terminals]
    trees: list[PendantTree] = []

    if len(set(at)) == 1:
        # all in one copy: the in-copy packing plus one transversal tree
        i = at[0]
        p = P[i]
        for t in h_trees or ():
            trees.append(_spider_from_edges(_lift_edges(t.edges, p), ts))
        if len(P) > 1:
            q = P[i + 1] if i + 1 < len(P) else P[i - 1]
            st = steiner_tree(h, projs)
            edges = _lift_edges(st, q) + [(t, (q, t[1])) for t in terminals]
            trees.append(_spider_from_edges(edges, ts))
        return "same-copy", trees

    if len(set(at)) == 2:
        # two terminals share copy i, the third sits in copy j
        pair = [t for t in terminals if at.count(pos[t[0]]) == 2]
        lone = next(t for t in terminals if at.count(pos[t[0]]) == 1)
        i, j = pos[pair[0][0]], pos[lone[0]]
        col = list(P[min(i, j): max(i, j) + 1])
        if i > j:
            col.reverse()
        pa, pb, pc = pair[0][1], pair[1][1], lone[1]
        if pc not in (pa, pb):
            for t in h_trees or ():
                legs = _legs(t)
                sg = t.root
                trees.append(_spider([
                    _in(col[0], legs[pa]), _in(col[0], legs[pb]),
                    _at(col, sg), _in(col[-1], legs[pc]),
                ], ts))
            return "two-in-copy", trees
        other = pb if pc == pa else pa
        for Q in _order_paths(disjoint_paths(h, pc, other)):
            if len(Q) < 3:
                continue
            q = Q[1]
            trees.append(_spider([
                _in(col[0], Q[:2][::-1]), _in(col[0], Q[1:][::-1]),
                _at(col, q), _in(col[-1], Q[:2][::-1]),
            ], ts))
        return "two-in-copy-coincide", trees

    order = sorted(terminals, key=lambda t: pos[t[0]])
    lo, hi = pos[order[0][0]], pos[order[-1][0]]
    col_g = list(P[lo: hi + 1])
    case = _h_case(projs)
    if case == "distinct":
        for t in h_trees or ():
            legs = _legs(t)
            sg = t.root
            trees.append(_spider([_in(v[0], legs[v[1]]) for v in terminals] + [_at(col_g, sg)], ts))
        return "three-copies-distinct", trees
    if case == "two-coincide":
        al = next(p for p in projs if projs.count(p) == 2)
        be = next(p for p in projs if projs.count(p) == 1)
        for Q in _order_paths(disjoint_paths(h, al, be)):
            if len(Q) < 3:
                continue
            q = Q[1]
            seg = {al: Q[:2], be: Q[1:][::-1]}
            trees.append(_spider([_in(v[0], seg[v[1]]) for v in terminals] + [_at(col_g, q)], ts))
        return "three-copies-two-coincide", trees
    al = projs[0]
    for w in sorted(h.neighbors(al), key=h.sort_key):
        trees.append(_spider([[v, (v[0], w)] for v in terminals] + [_at(col_g, w)], ts))
    return "three-copies-all-coincide", trees


def _h_packing_for(h: Graph, projs: Sequence, h_packing: Packing | None, budget) -> list[PendantTree]:
    if len(set(projs)) != 3:
        return []
    if h_packing is None:
        return list(local_pendant_connectivity(h, tuple(projs), budget).packing.trees)
    if set(h_packing.terminals) != set(projs):
        raise ConstructionError("H-packing is not on the H-coordinates of the terminals")
    v = verify_packing(h, h_packing)
    if not v:
        raise ConstructionError(f"H-packing rejected: {v.violation}")
    for t in h_packing.trees:
        if t.root is None:
            raise ConstructionError("H-packing trees must be rooted")
    return list(h_packing.trees)


def construct_path_product(n: int, h: Graph, terminals: Sequence, h_packing: Packing | None = None,
                           budget=None) -> Packing:
    """Packing in P_n□H with at least as many trees as the H-packing."""
    product = cartesian_product(path_graph(n), h)
    terminals = tuple(terminals)
    ts = TerminalSet(terminals, product)
    if ts.k != 3:
        raise ConstructionError("exactly three terminals are required")
    projs = [t[1] for t in terminals]
    trees_h = _h_packing_for(h, projs, h_packing, budget)
    _, trees = _path_trees(list(range(n)), h, terminals, ts, trees_h)
    pk, _ = _finish(product, ts, trees)
    return pk


# the product theorem

def _path_order(g: Graph) -> list | None:
    """Vertices of g in path order, or None if g is not a path."""
    if len(g) < 2 or g.num_edges != len(g) - 1 or any(g.degree(v) > 2 for v in g) or not g.is_connected():
        return None
    start = min((v for v in g if g.degree(v) == 1), key=g.sort_key)
    order, prev = [start], None
    while len(order) < len(g):
        nxt = next(w for w in g.neighbors(order[-1]) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def _factor_tau3(g: Graph, budget) -> tuple[int, bool]:
    r = pendant_tree_connectivity(g, 3, budget)
    return r.value, r.exact


def construct_theorem_packing(g: Graph, h: Graph, terminals: Sequence, budget=None,
                              tau: tuple | None = None) -> ConstructionResult:
    """Packing in G□H of size at least min{3⌊τ3(G)/2⌋, 3⌊τ3(H)/2⌋}.

    ``tau`` may pass precomputed ((τ3(G), exact), (τ3(H), exact)).
    """
    if not g.is_connected() or not h.is_connected():
        raise ConstructionError("both factors must be connected")
    terminals = tuple(terminals)
    product = cartesian_product(g, h)
    ts = TerminalSet(terminals, product)
    if ts.k != 3:
        raise ConstructionError("exactly three terminals are required")
    (tg, eg), (th, eh) = tau if tau is not None else (_factor_tau3(g, budget), _factor_tau3(h, budget))
    bound = theorem_lower_bound(tg, th)
    # a path factor goes first so the path-product machinery can use it
    swapped = tg > th or (tg == th and _path_order(h) is not None and _path_order(g) is None)
    if swapped:
        G, H = h, g
        work = tuple((v, u) for u, v in terminals)
        k, l = th, tg
    else:
        G, H = g, h
        work = terminals
        k, l = tg, th
    wprod = cartesian_product(G, H)
    wts = TerminalSet(work, wprod)
    log = [f"tau3 of the first factor {k}, of the second {l}"]
    if swapped:
        log.insert(0, "factors swapped so the first has the smaller tau3")

    us = [t[0] for t in work]
    projs = [t[1] for t in work]
    drop = False
    if len(set(us)) == 1:
        case = "same-copy"
        trees_h = _h_packing_for(H, projs, None, budget)
        u = us[0]
        trees = [_spider_from_edges(_lift_edges(t.edges, u), wts) for t in trees_h]
        st = steiner_tree(H, projs)
        for w in sorted(G.neighbors(u), key=G.sort_key):
            edges = _lift_edges(st, w) + [(t, (w, t[1])) for t in work]
            trees.append(_spider_from_edges(edges, wts))
        subcase = f"{len(trees_h)} in-copy trees + {len(trees) - len(trees_h)} transversal trees"
    elif len(set(us)) == 2:
        case = "two-in-copy"
        drop = True
        pair = [t for t in work if us.count(t[0]) == 2]
        lone = next(t for t in work if us.count(t[0]) == 1)
        u1, u2 = pair[0][0], lone[0]
        routes = _order_paths(disjoint_paths(G, u1, u2))
        P, rest = routes[0], routes[1:]
        trees_h = _h_packing_for(H, projs, None, budget)
        kind, fam_a = _path_trees(P, H, work, wts, trees_h)
        st = steiner_tree(H, projs)
        fam_b = []
        for R in rest:
            mid = len(R) // 2
            w = R[mid]
            pieces = [_at(R[: mid + 1], pair[0][1]), _at(R[: mid + 1], pair[1][1]),
                      _at(R[mid:][::-1], lone[1])]
            edges = set()
            for vs in pieces:
                edges.update(edge_key(a, b) for a, b in _path_edges(vs))
            edges.update(edge_key(*e) for e in _lift_edges(st, w))
            fam_b.append(_spider_from_edges(edges, wts))
        trees = fam_a + fam_b
        subcase = f"{len(fam_a)} path-product trees ({kind}) + {len(fam_b)} route trees"
    else:
        case = "distinct-copies"
        hc = _h_case(projs)
        trees_g = list(local_pendant_connectivity(G, tuple(us), budget).packing.trees)
        if hc == "distinct":
            trees_h = list(local_pendant_connectivity(H, tuple(projs), budget).packing.trees)
            structures = trees_h
        elif hc == "two-coincide":
            al = next(p for p in projs if projs.count(p) == 2)
            be = next(p for p in projs if projs.count(p) == 1)
            paths = _order_paths(disjoint_paths(H, al, be))
            structures = [_path_edges(p) for p in paths]
        else:
            structures = [[(projs[0], w)] for w in sorted(H.neighbors(projs[0]), key=H.sort_key)]
        if hc == "all-coincide":
            plan = ConstructionPlan(trees_g, structures,
                                    [((2 * i, 2 * i + 1), (i, i)) for i in range(min(len(trees_g) // 2, len(structures)))])
        else:
            plan = ConstructionPlan.pair_up(trees_g, structures)
        trees = []
        for (gi, gj), (hi, hj) in plan.pairing:
            g_pair = (plan.g_trees[gi], plan.g_trees[gj])
            h_pair = (plan.h_trees[hi], plan.h_trees[hj])
            trees.extend(pair_trees(g_pair, h_pair, work, wts))
        decomposition = FactorDecomposition.of(wprod, work)
        log.append("corresponded terminals in the anchor copy: "
                   + ", ".join(label(v) for v in decomposition.corresponded.values()))
        subcase = f"H-coordinates {hc}; {len(plan.pairing)} tree pairs"

    order = _path_order(G)
    if order is not None and case != "same-copy":
        kind, alt = _path_trees(order, H, work, wts, _h_packing_for(H, projs, None, budget))
        if len(alt) > len(trees):
            trees, drop = alt, False
            subcase = f"first factor is a path; path-product trees ({kind})"

    log.append(f"case {case}: {subcase}")
    wpk, dropped = _finish(wprod, wts, trees, drop=drop)
    if dropped:
        log.append(f"dropped {dropped} colliding trees")
    if swapped:
        back = [PendantTree(frozenset(edge_key((b[1], b[0]), (c[1], c[0])) for b, c in (tuple(e) for e in t.edges)),
                            ts, None if t.root is None else (t.root[1], t.root[0])) for t in wpk.trees]
        pk, _ = _finish(product, ts, back)
    else:
        pk = Packing(tuple(PendantTree(t.edges, ts, t.root) for t in wpk.trees), ts, True)
    pk = pk.canonical(product)
    return ConstructionResult(pk, case, subcase, bound, tg, th, eg and eh, swapped, dropped, log)


@dataclass
class SharpnessReport:
    g: str
    h: str
    tau_g: int
    tau_h: int
    tau_product: int
    bound: int
    exact: bool

    @property
    def holds(self) -> bool:
        return self.tau_product >= self.bound

    @property
    def tight(self) -> bool:
        return self.exact and self.tau_product == self.bound

    def to_json(self) -> dict:
        return {"G": self.g, "H": self.h, "tau3_G": self.tau_g, "tau3_H": self.tau_h,
                "tau3_product": self.tau_product, "bound": self.bound, "holds": self.holds,
                "tight": self.tight, "exact": self.exact}


def sharpness_probe(g: Graph, h: Graph, budget=None, max_vertices: int = 60) -> SharpnessReport:
    tg, eg = _factor_tau3(g, budget)
    th, eh = _factor_tau3(h, budget)
    prod = cartesian_product(g, h)
    if len(prod) > max_vertices:
        raise GraphError(f"product has {len(prod)} vertices, above the probe limit {max_vertices}")
    r = pendant_tree_connectivity(prod, 3, budget)
    return SharpnessReport(g.name, h.name, tg, th, r.value, theorem_lower_bound(tg, th), eg and eh and r.exact)
