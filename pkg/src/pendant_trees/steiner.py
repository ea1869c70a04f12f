"""Pendant Steiner trees, packings of them, and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .flow import fan, vertex_connectivity
from .graph import Graph, Vertex, edge_key, label


class NotInHostError(ValueError):
    """A tree uses a vertex or edge that the host graph does not have."""


class UnsupportedError(ValueError):
    pass


class FanUnavailableError(ValueError):
    pass


@dataclass(frozen=True)
class TerminalSet:
    terminals: tuple
    host: Graph = field(compare=False, repr=False)

    def __post_init__(self):
        terms = tuple(self.terminals)
        object.__setattr__(self, "terminals", terms)
        if len(terms) < 2:
            raise ValueError("a terminal set needs at least two vertices")
        if len(set(terms)) != len(terms):
            raise ValueError(f"terminals must be distinct: {terms!r}")
        missing = [t for t in terms if t not in self.host]
        if missing:
            raise ValueError(f"terminals not in host graph: {missing!r}")

    @property
    def k(self) -> int:
        return len(self.terminals)

    def __iter__(self):
        return iter(self.terminals)

    def __len__(self) -> int:
        return len(self.terminals)

    def as_set(self) -> frozenset:
        return frozenset(self.terminals)


@dataclass(frozen=True)
class PendantTree:
    edges: frozenset
    terminals: TerminalSet
    root: Vertex | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], terminals: TerminalSet, root=None) -> "PendantTree":
        return cls(frozenset(edge_key(a, b) for a, b in edges), terminals, root)

    @property
    def vertices(self) -> frozenset:
        out = set()
        for e in self.edges:
            out.update(e)
        return frozenset(out)

    @property
    def internal_vertices(self) -> frozenset:
        return self.vertices - self.terminals.as_set()

    def degrees(self) -> dict:
        deg: dict = {}
        for e in self.edges:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        return deg

    def sorted_edges(self, g: Graph | None = None) -> list[tuple]:
        key = g.sort_key if g is not None else label
        pairs = [tuple(sorted(e, key=key)) for e in self.edges]
        return sorted(pairs, key=lambda p: (key(p[0]), key(p[1])))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Packing:
    trees: tuple
    terminals: TerminalSet
    verified: bool = False

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def canonical(self, g: Graph) -> "Packing":
        """Same trees, ordered by their sorted edge lists."""
        key = g.sort_key

        def tree_key(t):
            return [(key(a), key(b)) for a, b in t.sorted_edges(g)]

        return Packing(tuple(sorted(self.trees, key=tree_key)), self.terminals, self.verified)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violation: str = ""
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "violation": self.violation}


def _check_host(g: Graph, t: PendantTree) -> None:
    for e in t.edges:
        a, b = tuple(e)
        if a not in g or b not in g:
            raise NotInHostError(f"vertex of edge {label(a)}-{label(b)} not in host graph")
        if not g.has_edge(a, b):
            raise NotInHostError(f"edge {label(a)}-{label(b)} not in host graph")


def verify_pendant_tree(g: Graph, t: PendantTree) -> Verdict:
    """Check every pendant-tree invariant; host mismatch raises NotInHostError."""
    _check_host(g, t)
    verts = t.vertices
    terms = t.terminals.as_set()
    missing = [v for v in t.terminals if v not in verts]
    if missing:
        return Verdict(False, f"terminal {label(missing[0])} not in tree", {"vertex": missing[0]})
    if len(t.edges) != len(verts) - 1 or not _connected(verts, t.edges):
        return Verdict(False, "not a tree", {})
    deg = t.degrees()
    for v in t.terminals:
        if deg[v] != 1:
            return Verdict(False, f"terminal {label(v)} has degree {deg[v]}", {"vertex": v})
    if t.root is not None:
        r = t.root
        if r not in verts or deg.get(r) != 3:
            return Verdict(False, f"root {label(r)} does not have degree 3", {"vertex": r})
        for v in verts:
            if v == r or v in terms:
                continue
            if deg[v] != 2:
                return Verdict(False, f"non-root internal vertex {label(v)} has degree {deg[v]}", {"vertex": v})
    return Verdict(True)


def verify_packing(g: Graph, p: Packing) -> Verdict:
    terms = p.terminals.as_set()
    for i, t in enumerate(p.trees):
        if t.terminals.as_set() != terms:
            return Verdict(False, f"tree {i} has a different terminal set", {"tree": i})
    for i, t in enumerate(p.trees):
        v = verify_pendant_tree(g, t)
        if not v:
            return Verdict(False, f"tree {i}: {v.violation}", {"tree": i, **v.detail})
    trees = list(p.trees)
    for i in range(len(trees)):
        vi = trees[i].vertices
        for j in range(i + 1, len(trees)):
            shared_e = trees[i].edges & trees[j].edges
            if shared_e:
                a, b = sorted(next(iter(shared_e)), key=label)
                return Verdict(False, f"trees {i} and {j} share edge {label(a)}-{label(b)}",
                               {"pair": (i, j), "edge": (a, b)})
            shared_v = (vi & trees[j].vertices) - terms
            if shared_v:
                w = min(shared_v, key=label)
                return Verdict(False, f"trees {i} and {j} share vertex {label(w)}",
                               {"pair": (i, j), "vertex": w})
    return Verdict(True)


def verified(g: Graph, p: Packing) -> Packing:
    """Return ``p`` marked verified, or raise if it fails verification."""
    v = verify_packing(g, p)
    if not v:
        raise ValueError(f"packing failed verification: {v.violation}")
    return Packing(p.trees, p.terminals, True)


def _connected(verts: frozenset, edges: frozenset) -> bool:
    if not verts:
        return False
    adj: dict = {v: [] for v in verts}
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def prune_to_core(t: PendantTree) -> PendantTree:
    """Minimal subtree spanning the three terminals, with its root marked."""
    if t.terminals.k != 3:
        raise UnsupportedError("pruning to a K_{1,3} subdivision needs exactly three terminals")
    terms = t.terminals.as_set()
    edges = set(t.edges)
    while True:
        deg: dict = {}
        for e in edges:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        leaves = [v for v, d in deg.items() if d == 1 and v not in terms]
        if not leaves:
            break
        for v in leaves:
            edges = {e for e in edges if v not in e}
    deg = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    roots = [v for v, d in deg.items() if d == 3]
    if len(roots) != 1:
        raise ValueError("tree does not reduce to a subdivision of K_{1,3}")
    return PendantTree(frozenset(edges), t.terminals, roots[0])


def tree_from_vertex_set(g: Graph, terminals: TerminalSet, internal: Iterable[Vertex]) -> PendantTree:
    """Spanning tree of G[internal] with each terminal hung off one neighbour."""
    inner = set(internal)
    terms = terminals.as_set()
    if not inner:
        if terminals.k == 2 and g.has_edge(*terminals.terminals):
            return PendantTree.from_edges([terminals.terminals], terminals)
        raise ValueError("empty internal set only forms a tree for an adjacent terminal pair")
    key = g.sort_key
    start = min(inner, key=key)
    seen = {start}
    order = [start]
    edges = []
    for v in order:
        for w in sorted(g.neighbors(v), key=key):
            if w in inner and w not in seen:
                seen.add(w)
                order.append(w)
                edges.append((v, w))
    if seen != inner:
        raise ValueError("internal vertex set is not connected")
    for t in terminals:
        hooks = sorted((w for w in g.neighbors(t) if w in inner), key=key)
        if not hooks:
            raise ValueError(f"terminal {label(t)} has no neighbour in the internal set")
        edges.append((t, hooks[0]))
    tree = PendantTree.from_edges(edges, terminals)
    if terminals.k == 3:
        tree = prune_to_core(tree)
    del terms
    return tree


def fan_tree(g: Graph, s: TerminalSet) -> PendantTree:
    """A pendant tree made of an (x, S)-fan of size 3 for some x outside S."""
    if s.k != 3:
        raise UnsupportedError("fan trees are built for three terminals")
    if len(g) < 4 or vertex_connectivity(g) < 3:
        raise FanUnavailableError("fan unavailable: graph is not 3-connected")
    terms = s.as_set()
    for x in g:
        if x in terms:
            continue
        paths = fan(g, x, s.terminals, limit=3)
        if len(paths) == 3:
            edges = [(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1)]
            return PendantTree.from_edges(edges, s, root=x)
    raise FanUnavailableError("fan unavailable")


def packing_to_json(p: Packing, g: Graph | None = None) -> dict:
    return {
        "terminals": [label(t) for t in p.terminals],
        "trees": [
            {"edges": [[label(a), label(b)] for a, b in t.sorted_edges(g)],
             "root": None if t.root is None else label(t.root)}
            for t in p.trees
        ],
    }


def packing_from_json(data, g: Graph) -> Packing:
    """Accepts ``{"terminals": [...], "trees": [...]}`` or a bare tree list."""
    from .graph import label_map

    names = label_map(g)

    def vertex(s):
        if s not in names:
            raise NotInHostError(f"vertex {s!r} not in host graph")
        return names[s]

    if isinstance(data, dict):
        raw_trees = data["trees"]
        raw_terms = data.get("terminals")
    else:
        raw_trees = data
        raw_terms = None
    parsed = []
    for tree in raw_trees:
        edges = [(vertex(a), vertex(b)) for a, b in tree["edges"]]
        root = tree.get("root")
        parsed.append((edges, None if root is None else vertex(root)))
    if raw_terms is not None:
        terms = [vertex(t) for t in raw_terms]
    else:
        terms = _infer_terminals(parsed)
    ts = TerminalSet(tuple(terms), g)
    trees = tuple(PendantTree.from_edges(e, ts, r) for e, r in parsed)
    return Packing(trees, ts)


def _infer_terminals(parsed) -> list:
    vsets = []
    for edges, _ in parsed:
        vs = set()
        for a, b in edges:
            vs.update((a, b))
        vsets.append(vs)
    if not vsets:
        raise ValueError("cannot infer terminals from an empty packing")
    if len(vsets) > 1:
        common = set.intersection(*vsets)
        return sorted(common, key=label)
    deg: dict = {}
    for a, b in parsed[0][0]:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return sorted((v for v, d in deg.items() if d == 1), key=label)
