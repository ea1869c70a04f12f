"""Menger-style computations on vertex-split unit-capacity flow networks."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Graph, Vertex

_INF = 1 << 30


class _SplitNetwork:
    # vertex i becomes in-node 2i and out-node 2i+1 joined by a capacity-1 arc
    def __init__(self, g: Graph, unbounded: Iterable[Vertex] = ()):
        self.g = g
        n = len(g)
        self.source = 2 * n
        self.sink = 2 * n + 1
        self.res: list[dict[int, int]] = [dict() for _ in range(2 * n + 2)]
        self.orig: dict[tuple[int, int], int] = {}
        free = set(unbounded)
        for v in g:
            i = g.index(v)
            self.arc(2 * i, 2 * i + 1, _INF if v in free else 1)
        for a, b in g.edges():
            ia, ib = g.index(a), g.index(b)
            self.arc(2 * ia + 1, 2 * ib, 1)
            self.arc(2 * ib + 1, 2 * ia, 1)

    def arc(self, a: int, b: int, c: int) -> None:
        self.res[a][b] = self.res[a].get(b, 0) + c
        self.res[b].setdefault(a, 0)
        self.orig[(a, b)] = self.orig.get((a, b), 0) + c

    def out_node(self, v: Vertex) -> int:
        return 2 * self.g.index(v) + 1

    def in_node(self, v: Vertex) -> int:
        return 2 * self.g.index(v)

    def max_flow(self, limit: int = _INF) -> int:
        res = self.res
        s, t = self.source, self.sink
        flow = 0
        while flow < limit:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                a = queue.popleft()
                for b in sorted(res[a]):
                    if res[a][b] > 0 and b not in parent:
                        parent[b] = a
                        queue.append(b)
            if t not in parent:
                break
            b = t
            while b != s:
                a = parent[b]
                res[a][b] -= 1
                res[b][a] += 1
                b = a
            flow += 1
        return flow

    def _flow_on(self, a: int, b: int) -> int:
        c = self.orig.get((a, b), 0)
        return max(0, c - self.res[a].get(b, 0)) if c else 0

    def decompose(self, start: Vertex, stop: set) -> list[list[Vertex]]:
        """Walk flow-carrying arcs from ``start`` until a vertex of ``stop``."""
        g = self.g
        succ: dict[Vertex, list[Vertex]] = {}
        for a, b in g.edges():
            fab = self._flow_on(self.out_node(a), self.in_node(b))
            fba = self._flow_on(self.out_node(b), self.in_node(a))
            if fab and not fba:
                succ.setdefault(a, []).append(b)
            elif fba and not fab:
                succ.setdefault(b, []).append(a)
        paths = []
        for w in sorted(succ.get(start, []), key=g.sort_key):
            path = [start, w]
            while path[-1] not in stop:
                path.append(succ[path[-1]][0])
            paths.append(path)
        paths.sort(key=lambda p: (len(p), [g.sort_key(v) for v in p]))
        return paths


def local_connectivity(g: Graph, x: Vertex, y: Vertex, limit: int | None = None) -> int:
    """Maximum number of internally disjoint x–y paths (a direct edge counts)."""
    return len(disjoint_paths(g, x, y, limit))


def disjoint_paths(g: Graph, x: Vertex, y: Vertex, limit: int | None = None) -> list[list[Vertex]]:
    """A maximum family of internally disjoint x–y paths, shortest first."""
    if x == y:
        raise ValueError("endpoints must differ")
    net = _SplitNetwork(g, unbounded=(x, y))
    net.arc(net.source, net.out_node(x), _INF)
    net.arc(net.out_node(y), net.sink, _INF)
    # the direct edge is one unit; cap it so it is not reused
    net.max_flow(_INF if limit is None else limit)
    return net.decompose(x, {y})


def fan(g: Graph, x: Vertex, targets: Iterable[Vertex], limit: int | None = None) -> list[list[Vertex]]:
    """An (x, U)-fan of maximum size: paths to distinct targets sharing only x."""
    targets = [t for t in targets if t != x]
    net = _SplitNetwork(g, unbounded=(x,))
    net.arc(net.source, net.out_node(x), _INF)
    for t in targets:
        net.arc(net.out_node(t), net.sink, 1)
    net.max_flow(_INF if limit is None else limit)
    return net.decompose(x, set(targets))


def vertex_connectivity(g: Graph) -> int:
    """κ(G) by Even's scheme over non-adjacent pairs; κ(K_n) = n-1."""
    n = len(g)
    if n <= 1 or not g.is_connected():
        return 0
    order = g.vertices
    best = n - 1
    i = 0
    while i < n and i <= best:
        x = order[i]
        for y in order[i + 1:]:
            if g.has_edge(x, y):
                continue
            best = min(best, local_connectivity(g, x, y, limit=best))
        i += 1
    return best
