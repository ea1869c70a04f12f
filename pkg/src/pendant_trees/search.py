"""Exact local and global pendant tree-connectivity.

A family of internally disjoint pendant S-Steiner trees is, after pruning,
the same thing as a family of pairwise disjoint vertex sets U in V - S such
that G[U] is connected and every terminal has a neighbour in U (edges
between two terminals are useless because terminals are leaves).  For
|S| = 2 the direct edge is the one exception and counts as a tree with no
internal vertex.  The search therefore packs inclusion-minimal "connected
dominating" sets with bitmasks:

* decide(pool, p): take the terminal with fewest neighbours left in the
  pool and its lowest neighbour s.  Either s lies in one of the p sets
  (enumerate minimal sets containing s, recurse on the rest) or s is
  unused (drop it, recurse).
* prune with the component bound: a set lies inside one component C of
  G[pool] and uses at least one neighbour of every terminal there, so the
  number of sets is at most sum_C min_t |N(t) & C|.

Every set found is turned back into a concrete tree and the resulting
packing is verified by definition before it is returned.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import pruning_bound
from .graph import Graph, label
from .steiner import Packing, TerminalSet, tree_from_vertex_set, verified

DEFAULT_BUDGET = 10**7


class BudgetExhausted(RuntimeError):
    pass


class BoundViolation(RuntimeError):
    """An upper bound used for pruning turned out to be wrong."""


@dataclass
class Budget:
    max_nodes: int = DEFAULT_BUDGET
    used: int = 0

    def fresh(self) -> "Budget":
        return Budget(self.max_nodes)


def _bits(m: int):
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


def _popcount(m: int) -> int:
    return bin(m).count("1")


class _Masks:
    def __init__(self, g: Graph):
        self.g = g
        self.n = len(g)
        self.nbr = [0] * self.n
        for a, b in g.edges():
            ia, ib = g.index(a), g.index(b)
            self.nbr[ia] |= 1 << ib
            self.nbr[ib] |= 1 << ia

    def reach(self, start: int, allowed: int) -> int:
        nbr = self.nbr
        seen = front = start
        while front:
            nxt = 0
            for i in _bits(front):
                nxt |= nbr[i]
            nxt &= allowed & ~seen
            seen |= nxt
            front = nxt
        return seen


class _LocalSearch:
    def __init__(self, m: _Masks, terms: tuple[int, ...], budget: Budget):
        self.m = m
        self.budget = budget
        tmask = 0
        for t in terms:
            tmask |= 1 << t
        self.pool = ((1 << m.n) - 1) & ~tmask
        self.tn = [m.nbr[t] & self.pool for t in terms]
        self.direct = len(terms) == 2 and bool(m.nbr[terms[0]] >> terms[1] & 1)
        self.best: list[int] = []

    # helpers on vertex masks

    def _tick(self):
        self.budget.used += 1
        if self.budget.used > self.budget.max_nodes:
            raise BudgetExhausted

    def dominates(self, u: int) -> bool:
        return all(u & t for t in self.tn)

    def connected(self, u: int) -> bool:
        return self.m.reach(u & -u, u) == u

    def minimize(self, u: int) -> int:
        changed = True
        while changed:
            changed = False
            for i in _bits(u):
                w = u & ~(1 << i)
                if w and self.dominates(w) and self.connected(w):
                    u = w
                    changed = True
        return u

    def is_minimal(self, u: int) -> bool:
        for i in _bits(u):
            w = u & ~(1 << i)
            if w and self.dominates(w) and self.connected(w):
                return False
        return True

    def component_bound(self, pool: int) -> int:
        total = 0
        rest = pool
        while rest:
            c = self.m.reach(rest & -rest, pool)
            rest &= ~c
            total += min(_popcount(c & t) for t in self.tn)
        return total

    @property
    def upper(self) -> int:
        return self.component_bound(self.pool)

    # greedy lower bound

    def _cheap_set(self, pool: int) -> int:
        """A small connected dominating set in ``pool`` grown from the best root."""
        nbr = self.m.nbr
        best = 0
        best_size = math.inf
        for r in _bits(pool):
            parent = {r: r}
            frontier = [r]
            while frontier:
                nxt = []
                for v in frontier:
                    for w in _bits(nbr[v] & pool):
                        if w not in parent:
                            parent[w] = v
                            nxt.append(w)
                frontier = nxt
            u = 0
            ok = True
            reached = 0
            for v in parent:
                reached |= 1 << v
            for t in self.tn:
                hits = t & reached
                if not hits:
                    ok = False
                    break
                if hits & u:
                    continue
                # nearest hook by BFS order; parent dict preserves discovery order
                hook = next(v for v in parent if hits >> v & 1)
                v = hook
                while True:
                    u |= 1 << v
                    if v == r:
                        break
                    v = parent[v]
            if ok and _popcount(u) < best_size:
                best, best_size = u, _popcount(u)
        return self.minimize(best) if best else 0

    def greedy(self) -> list[int]:
        pool = self.pool
        found = []
        while True:
            self._tick()
            u = self._cheap_set(pool)
            if not u:
                return found
            found.append(u)
            pool &= ~u

    # exact decision

    def _sets_with(self, seed: int, pool: int):
        nbr = self.m.nbr
        tn = self.tn

        def feasible(u, forb):
            r = self.m.reach(u, pool & ~forb)
            return all(r & t for t in tn)

        def grow(u, ext, forb):
            self._tick()
            if self.dominates(u):
                if self.is_minimal(u):
                    yield u
                return
            if not feasible(u, forb):
                return
            und = 0
            for t in tn:
                if not u & t:
                    und |= t
            for part in (ext & und, ext & ~und):
                while part:
                    v = part & -part
                    part &= ~v
                    ext &= ~v
                    u2 = u | v
                    i = v.bit_length() - 1
                    yield from grow(u2, ext | (nbr[i] & pool & ~u2 & ~forb), forb)
                    forb |= v
                    if not feasible(u, forb):
                        return

        sb = 1 << seed
        yield from grow(sb, nbr[seed] & pool & ~sb, 0)

    def _decide(self, pool: int, need: int):
        self._tick()
        if need <= 0:
            return []
        if self.component_bound(pool) < need:
            return None
        if need == 1:
            rest = pool
            while rest:
                c = self.m.reach(rest & -rest, pool)
                rest &= ~c
                if self.dominates(c):
                    return [self.minimize(c)]
            return None
        t0 = min(self.tn, key=lambda t: _popcount(t & pool))
        a = t0 & pool
        seed = (a & -a).bit_length() - 1
        for u in self._sets_with(seed, pool):
            r = self._decide(pool & ~u, need - 1)
            if r is not None:
                return [u] + r
        return self._decide(pool & ~(1 << seed), need)

    def at_least(self, p: int):
        """Sets witnessing tau >= p (the direct edge counts), or None."""
        need = p - (1 if self.direct else 0)
        if need <= len(self.best):
            return self.best[:max(need, 0)]
        if not self.best:
            self.best = self.greedy()
            if need <= len(self.best):
                return self.best[:max(need, 0)]
        found = self._decide(self.pool, need)
        if found is not None and len(found) > len(self.best):
            self.best = found
        return found

    def best_value(self) -> int:
        return len(self.best) + (1 if self.direct else 0)

    def solve(self, cap: int | None = None) -> tuple[int, list[int]]:
        """Exact maximum, never searching above ``cap`` when given."""
        ub = self.upper + (1 if self.direct else 0)
        if cap is not None:
            ub = min(ub, cap)
        if not self.best:
            self.best = self.greedy()
        value = self.best_value()
        sets = self.best
        while value < ub:
            r = self.at_least(value + 1)
            if r is None:
                break
            value, sets = value + 1, r
        return value, sets


@dataclass
class LocalResult:
    value: int
    packing: Packing
    exact: bool = True
    upper: int | None = None
    nodes: int = 0

    def to_json(self, g: Graph) -> dict:
        from .steiner import packing_to_json

        return {
            "value": self.value,
            "exact": self.exact,
            "upper": self.value if self.exact else self.upper,
            "nodes": self.nodes,
            "packing": packing_to_json(self.packing, g),
        }


@dataclass
class GlobalResult:
    value: int
    k: int
    witness: TerminalSet | None
    packing: Packing | None
    exact: bool = True
    upper: int | None = None
    subsets_checked: int = 0
    nodes: int = 0
    notes: list = field(default_factory=list)

    def to_json(self, g: Graph) -> dict:
        from .steiner import packing_to_json

        return {
            "graph": g.name,
            "k": self.k,
            "value": self.value,
            "exact": self.exact,
            "upper": self.value if self.exact else self.upper,
            "witness": None if self.witness is None else [label(v) for v in self.witness],
            "packing": None if self.packing is None else packing_to_json(self.packing, g),
            "subsets_checked": self.subsets_checked,
            "nodes": self.nodes,
            "notes": list(self.notes),
        }


def _packing(g: Graph, ts: TerminalSet, direct: bool, sets: list[int]) -> Packing:
    order = g.vertices
    trees = []
    if direct:
        trees.append(tree_from_vertex_set(g, ts, ()))
    for u in sets:
        trees.append(tree_from_vertex_set(g, ts, [order[i] for i in _bits(u)]))
    return verified(g, Packing(tuple(trees), ts).canonical(g))


def _empty(ts: TerminalSet) -> Packing:
    return Packing((), ts, True)


def local_pendant_connectivity(g: Graph, terminals, budget: Budget | int | None = None) -> LocalResult:
    """Exact tau_G(S) with a verified maximum packing as certificate."""
    ts = terminals if isinstance(terminals, TerminalSet) else TerminalSet(tuple(terminals), g)
    budget = _budget(budget)
    if not g.is_connected():
        return LocalResult(0, _empty(ts), True, 0, 0)
    m = _Masks(g)
    search = _LocalSearch(m, tuple(g.index(t) for t in ts), budget)
    try:
        value, sets = search.solve()
        exact = True
    except BudgetExhausted:
        sets = search.best
        value = search.best_value()
        exact = False
    upper = search.upper + (1 if search.direct else 0)
    return LocalResult(value, _packing(g, ts, search.direct, sets), exact, upper, budget.used)


def _budget(b) -> Budget:
    if b is None:
        return Budget()
    if isinstance(b, int):
        return Budget(b)
    return b.fresh()


# symmetry reduction

def automorphism_generators(g: Graph, depth: int = 4) -> list[tuple[int, ...]]:
    """Automorphisms (as index permutations) generating a subgroup of Aut(g).

    For the first ``depth`` base points we look for one automorphism per
    image of the base point that fixes the earlier base points.  Using a
    subgroup only makes orbits finer, so the reduction stays sound.
    """
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    n = len(g)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from((g.index(a), g.index(b)) for a, b in g.edges())
    deg = [nxg.degree(i) for i in range(n)]
    sig = [tuple(sorted(deg[j] for j in nxg[i])) for i in range(n)]
    gens: list[tuple[int, ...]] = []
    base: list[int] = []
    for _ in range(min(depth, n)):
        b = next((i for i in range(n) if i not in base), None)
        if b is None:
            break
        for w in range(n):
            if w == b or w in base or sig[w] != sig[b]:
                continue
            g1 = nxg.copy()
            g2 = nxg.copy()
            for i in range(n):
                g1.nodes[i]["m"] = 0
                g2.nodes[i]["m"] = 0
            for pos, v in enumerate(base):
                g1.nodes[v]["m"] = pos + 1
                g2.nodes[v]["m"] = pos + 1
            g1.nodes[b]["m"] = -1
            g2.nodes[w]["m"] = -1
            gm = GraphMatcher(g1, g2, node_match=lambda x, y: x["m"] == y["m"])
            iso = next(gm.isomorphisms_iter(), None)
            if iso is not None:
                gens.append(tuple(iso[i] for i in range(n)))
        base.append(b)
    return gens


def subset_orbit_representatives(g: Graph, k: int, symmetry: bool = True) -> list[tuple[int, ...]]:
    """One k-subset (as sorted index tuple) per orbit, lexicographically least."""
    n = len(g)
    subsets = itertools.combinations(range(n), k)
    if not symmetry:
        return list(subsets)
    gens = automorphism_generators(g)
    if not gens:
        return list(subsets)
    seen = set()
    reps = []
    for s in subsets:
        if s in seen:
            continue
        reps.append(s)
        seen.add(s)
        stack = [s]
        while stack:
            cur = stack.pop()
            for p in gens:
                img = tuple(sorted(p[i] for i in cur))
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
    return reps


def _decide_task(args):
    g, s, target, max_nodes = args
    budget = Budget(max_nodes)
    search = _LocalSearch(_Masks(g), s, budget)
    try:
        r = search.at_least(target)
        return s, (r is not None), True, budget.used
    except BudgetExhausted:
        return s, False, False, budget.used


def pendant_tree_connectivity(
    g: Graph,
    k: int,
    budget: Budget | int | None = None,
    jobs: int = 1,
    symmetry: bool = True,
    cutoff: bool = True,
) -> GlobalResult:
    """tau_k(g) = min over k-subsets S of tau_g(S), with a minimizing S.

    ``cutoff`` starts the search at the global bound min(δ-k+1, κ-k+2)
    (κ for k=2), which is valid for tau_k but not for a single S.  Turn it
    off to get values that do not rely on those bounds at all.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    base = _budget(budget)
    if not g.is_connected():
        return GlobalResult(0, k, None, None, True, 0, notes=["disconnected graph: tau_k = 0 by convention"])
    n = len(g)
    if k > n:
        return GlobalResult(1, k, None, None, True, 1, notes=["k exceeds the order: tau_k = 1 by convention"])
    m = _Masks(g)
    reps = subset_orbit_representatives(g, k, symmetry)
    best = pruning_bound(g, k) if cutoff else None
    witness = None
    witness_sets: list[int] = []
    witness_direct = False
    exact = True
    lower = math.inf
    nodes = 0

    passed: dict = {}
    if jobs > 1 and best is not None and len(reps) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            tasks = [(g, s, best, base.max_nodes) for s in reps]
            for s, ok, fin, used in ex.map(_decide_task, tasks, chunksize=4):
                nodes += used
                if ok:
                    passed[s] = True

    for s in reps:
        if s in passed:
            continue
        b = base.fresh()
        search = _LocalSearch(m, s, b)
        try:
            if best is None:
                value, sets = search.solve()
                best, witness, witness_sets, witness_direct = value, s, sets, search.direct
            else:
                if best == 0 and witness is not None:
                    nodes += b.used
                    break
                r = search.at_least(best)
                if r is None:
                    value, sets = search.solve(cap=best - 1)
                    best, witness, witness_sets, witness_direct = value, s, sets, search.direct
                elif witness is None and search.upper + search.direct == best:
                    witness, witness_sets, witness_direct = s, r, search.direct
        except BudgetExhausted:
            exact = False
            lower = min(lower, search.best_value())
        nodes += b.used

    if best is not None and witness is None and exact:
        # every representative reached the cutoff; find one that stops there
        for s in reps:
            b = base.fresh()
            search = _LocalSearch(m, s, b)
            try:
                if search.at_least(best + 1) is None:
                    witness, witness_direct = s, search.direct
                    witness_sets = search.at_least(best)
                    nodes += b.used
                    break
            except BudgetExhausted:
                exact = False
            nodes += b.used
        else:
            if exact:
                raise BoundViolation(f"every {k}-subset exceeds the pruning bound {best}")

    notes = []
    if exact:
        value = best
        upper = best
    else:
        value = int(min(lower, best))
        upper = best
        notes.append("inexact: lower bound only (node budget exhausted)")
    ts = None
    pk = None
    if witness is not None:
        ts = TerminalSet(tuple(g.vertices[i] for i in witness), g)
        pk = _packing(g, ts, witness_direct, witness_sets[: max(0, best - (1 if witness_direct else 0))])
    return GlobalResult(value, k, ts, pk, exact, upper, len(reps), nodes, notes)
