"""Named graphs and interconnection-network families.

Family specs are strings such as ``"petersen"``, ``"cycle:5"`` or
``"torus:4,5"``; :func:`parse_family` turns them into graphs.
"""

from __future__ import annotations

from functools import reduce

from .graph import Graph, GraphError, cartesian_product


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)], name=f"K1,{n}")


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n (order n+1)."""
    _need(n >= 3, f"wheel needs a rim of at least 3 vertices, got {n}")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return Graph(range(n + 1), rim + spokes, name=f"W{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner, name="Petersen")


def hypercube(n: int) -> Graph:
    _need(n >= 0, f"hypercube needs n >= 0, got {n}")
    if n == 0:
        return Graph([0], name="Q0")
    g = _fold([path(2)] * n)
    g.name = f"Q{n}"
    return g


def grid(n: int, m: int) -> Graph:
    g = cartesian_product(path(n), path(m))
    g.name = f"grid({n},{m})"
    return g


def mesh(*sizes: int) -> Graph:
    _need(len(sizes) >= 1, "mesh needs at least one dimension")
    g = _fold([path(s) for s in sizes])
    g.name = f"mesh({','.join(map(str, sizes))})"
    return g


def torus(*sizes: int) -> Graph:
    _need(len(sizes) >= 1, "torus needs at least one dimension")
    g = _fold([cycle(s) for s in sizes])
    g.name = f"torus({','.join(map(str, sizes))})"
    return g


def generalized_hypercube(*sizes: int) -> Graph:
    _need(len(sizes) >= 1, "generalized hypercube needs at least one dimension")
    _need(all(s >= 2 for s in sizes), "generalized hypercube cliques need m_i >= 2")
    g = _fold([complete(s) for s in sizes])
    g.name = f"GH({','.join(map(str, sizes))})"
    return g


def hyper_petersen(n: int) -> Graph:
    """HP_n = Petersen □ Q_{n-3}; HP_3 is the Petersen graph itself."""
    _need(n >= 3, f"hyper Petersen needs n >= 3, got {n}")
    if n == 3:
        g = petersen()
    else:
        g = cartesian_product(petersen(), hypercube(n - 3))
    g.name = f"HP{n}"
    return g


def _fold(factors: list[Graph]) -> Graph:
    return reduce(cartesian_product, factors)


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise GraphError(msg)


_FAMILIES = {
    "path": (path, 1, 1),
    "cycle": (cycle, 1, 1),
    "complete": (complete, 1, 1),
    "star": (star, 1, 1),
    "wheel": (wheel, 1, 1),
    "petersen": (petersen, 0, 0),
    "hypercube": (hypercube, 1, 1),
    "grid": (grid, 2, 2),
    "mesh": (mesh, 1, None),
    "torus": (torus, 1, None),
    "generalized_hypercube": (generalized_hypercube, 1, None),
    "hyper_petersen": (hyper_petersen, 1, 1),
}

_ALIASES = {"gh": "generalized_hypercube", "hp": "hyper_petersen", "k": "complete",
            "p": "path", "c": "cycle", "w": "wheel", "q": "hypercube"}


def family(name: str, *params: int) -> Graph:
    key = _ALIASES.get(name.lower(), name.lower())
    if key not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}")
    fn, lo, hi = _FAMILIES[key]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise GraphError(f"family {key} takes {lo}..{hi if hi is not None else 'n'} parameters, got {len(params)}")
    return fn(*params)


def parse_family(spec: str) -> Graph:
    """``"torus:4,5"`` -> torus(4, 5); ``"petersen"`` -> Petersen graph."""
    name, _, args = spec.strip().partition(":")
    params = []
    if args.strip():
        try:
            params = [int(a) for a in args.split(",")]
        except ValueError:
            raise GraphError(f"bad family parameters in {spec!r}") from None
    return family(name, *params)


def family_names() -> list[str]:
    return sorted(_FAMILIES)
