"""Simple undirected graphs, Cartesian products and factor copies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Mapping

Vertex = Hashable


class GraphError(ValueError):
    pass


def _canonical_order(vertices: Iterable[Vertex]) -> tuple:
    seen = list(dict.fromkeys(vertices))
    try:
        return tuple(sorted(seen))
    except TypeError:
        return tuple(seen)


def edge_key(a: Vertex, b: Vertex) -> frozenset:
    return frozenset((a, b))


class Graph:
    """Immutable simple undirected graph.

    Vertices keep a canonical order (sorted when the identifiers are
    comparable) which fixes every enumeration order downstream.  Products
    carry their two factors in ``factors`` so copies can be recovered.
    """

    __slots__ = ("_order", "_index", "_adj", "_edges", "name", "factors")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple[Vertex, Vertex]] = (),
        name: str = "",
        factors: tuple["Graph", "Graph"] | None = None,
    ):
        order = _canonical_order(vertices)
        index = {v: i for i, v in enumerate(order)}
        adj: dict[Vertex, set] = {v: set() for v in order}
        keys = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            if a not in index or b not in index:
                raise GraphError(f"edge {a!r}-{b!r} has an endpoint outside the vertex set")
            adj[a].add(b)
            adj[b].add(a)
            keys.add(edge_key(a, b))
        self._order = order
        self._index = index
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = frozenset(keys)
        self.name = name
        self.factors = factors

    # basic accessors

    @property
    def vertices(self) -> tuple:
        return self._order

    @property
    def edge_set(self) -> frozenset:
        return self._edges

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Edges as ordered pairs, sorted by canonical vertex position."""
        idx = self._index
        out = []
        for e in self._edges:
            a, b = sorted(e, key=idx.__getitem__)
            out.append((a, b))
        out.sort(key=lambda p: (idx[p[0]], idx[p[1]]))
        return out

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self._order)

    def __repr__(self) -> str:
        label = self.name or "Graph"
        return f"<{label}: {len(self)} vertices, {self.num_edges} edges>"

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return b in self._adj.get(a, ())

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def sort_key(self, v: Vertex) -> int:
        return self._index[v]

    def subgraph(self, vertices: Iterable[Vertex], name: str = "") -> "Graph":
        keep = set(vertices)
        edges = [(a, b) for a, b in self.edges() if a in keep and b in keep]
        return Graph([v for v in self._order if v in keep], edges, name=name)

    def is_connected(self) -> bool:
        if not self._order:
            return False
        start = self._order[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._order)

    def relabel(self, mapping: Mapping[Vertex, Vertex], name: str | None = None) -> "Graph":
        return Graph(
            [mapping[v] for v in self._order],
            [(mapping[a], mapping[b]) for a, b in self.edges()],
            name=self.name if name is None else name,
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self._order)
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g, name: str = "") -> "Graph":
        return cls(list(g.nodes()), list(g.edges()), name=name)


def min_degree(g: Graph) -> int:
    if len(g) == 0:
        return 0
    return min(g.degree(v) for v in g)


def max_degree(g: Graph) -> int:
    if len(g) == 0:
        return 0
    return max(g.degree(v) for v in g)


def cartesian_product(g: Graph, h: Graph, name: str | None = None) -> Graph:
    """G□H on pairs ``(u, v)``; factors are kept for copy extraction."""
    if len(g) == 0 or len(h) == 0:
        raise GraphError("Cartesian product needs two nonempty factors")
    vertices = [(u, v) for u in g for v in h]
    edges = []
    for u in g:
        for a, b in h.edges():
            edges.append(((u, a), (u, b)))
    for v in h:
        for a, b in g.edges():
            edges.append(((a, v), (b, v)))
    if name is None:
        name = f"{g.name or 'G'}□{h.name or 'H'}"
    return Graph(vertices, edges, name=name, factors=(g, h))


def swap_product(p: Graph) -> tuple[Graph, dict]:
    """Return H□G together with the coordinate-swap map from G□H."""
    if p.factors is None:
        raise GraphError("graph carries no factor metadata")
    g, h = p.factors
    q = cartesian_product(h, g)
    return q, {(u, v): (v, u) for (u, v) in p}


@dataclass(frozen=True)
class CopySubgraph:
    """H(u) (role ``"G"`` fixes a G-vertex) or G(v) (role ``"H"``)."""

    anchor: Vertex
    role: str
    vertex_map: Mapping[Vertex, Vertex]
    graph: Graph

    def corresponding(self, vertex: tuple) -> tuple:
        """Coordinate replacement: the vertex of this copy matching ``vertex``."""
        u, v = vertex
        return self.vertex_map[v] if self.role == "G" else self.vertex_map[u]


def copy_subgraph(product: Graph, factor_role: str, anchor: Vertex) -> CopySubgraph:
    if product.factors is None:
        raise GraphError("graph carries no factor metadata")
    g, h = product.factors
    if factor_role == "G":
        if anchor not in g:
            raise GraphError(f"{anchor!r} is not a vertex of the first factor")
        vmap = {v: (anchor, v) for v in h}
    elif factor_role == "H":
        if anchor not in h:
            raise GraphError(f"{anchor!r} is not a vertex of the second factor")
        vmap = {u: (u, anchor) for u in g}
    else:
        raise GraphError(f"factor role must be 'G' or 'H', got {factor_role!r}")
    sub = product.subgraph(vmap.values(), name=f"copy[{factor_role}={anchor}]")
    return CopySubgraph(anchor=anchor, role=factor_role, vertex_map=vmap, graph=sub)


def label(v: Any) -> str:
    """Flat string label; nested product tuples flatten to ``(a,b,c)``."""
    if isinstance(v, tuple):
        return "(" + ",".join(_flatten_label(v)) + ")"
    return str(v)


def _flatten_label(v: Any) -> list[str]:
    if isinstance(v, tuple):
        out = []
        for part in v:
            out.extend(_flatten_label(part))
        return out
    return [str(v)]


def label_map(g: Graph) -> dict[str, Vertex]:
    out = {}
    for v in g:
        key = label(v)
        if key in out:
            raise GraphError(f"ambiguous vertex label {key!r}")
        out[key] = v
    return out
