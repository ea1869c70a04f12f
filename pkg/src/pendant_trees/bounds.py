"""Upper and lower bounds on pendant tree-connectivity, and a ledger for them."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .flow import vertex_connectivity
from .graph import Graph, GraphError, min_degree


class LedgerInconsistent(AssertionError):
    """A lower bound exceeds an upper bound: some computation is wrong."""


def degree_upper_bound(g: Graph, k: int) -> int:
    """max(0, δ - k + 1).

    Valid for k >= 3.  At k = 2 the direct edge between two adjacent
    terminals is a tree of its own, so tau_2 can reach δ (cycles do).
    """
    return max(0, min_degree(g) - k + 1)


def connectivity_upper_bound(g: Graph, k: int, kappa: int | None = None) -> int:
    if kappa is None:
        kappa = vertex_connectivity(g)
    return max(0, kappa - k + 2)


def pruning_bound(g: Graph, k: int) -> int:
    """The upper bound on tau_k(g) the global search starts from."""
    kappa = vertex_connectivity(g)
    if k == 2:
        return kappa
    return min(degree_upper_bound(g, k), connectivity_upper_bound(g, k, kappa))


def adjacent_min_degree_bound(g: Graph) -> int | None:
    """δ - 1 if two minimum-degree vertices are adjacent, else None.

    Recorded for reference only.  Read as a bound on plain κ it is false
    (C4 has κ = δ = 2), so nothing prunes with it.
    """
    d = min_degree(g)
    for a, b in g.edges():
        if g.degree(a) == d and g.degree(b) == d:
            return d - 1
    return None


def spacapan_connectivity(g: Graph, h: Graph) -> int:
    """κ(G□H) = min{κ(G)|V(H)|, κ(H)|V(G)|, δ(G)+δ(H)} for nontrivial factors."""
    if len(g) < 2 or len(h) < 2:
        raise GraphError("product connectivity formula needs factors with at least two vertices")
    return min(
        vertex_connectivity(g) * len(h),
        vertex_connectivity(h) * len(g),
        min_degree(g) + min_degree(h),
    )


def theorem_lower_bound(tau_g: int, tau_h: int) -> int:
    """Guaranteed tau_3(G□H) from the factor values: min{3⌊a/2⌋, 3⌊b/2⌋}."""
    return min(3 * (tau_g // 2), 3 * (tau_h // 2))


@dataclass
class Chain:
    ks: list[int]
    values: list[int]
    exact: list[bool]

    @property
    def non_increasing(self) -> bool:
        pairs = zip(zip(self.values, self.exact), zip(self.values[1:], self.exact[1:]))
        return all(a >= b for (a, ea), (b, eb) in pairs if ea and eb)


def monotonicity_chain(g: Graph, k_max: int, budget=None, k_min: int = 2) -> Chain:
    """[tau_k_min .. tau_k_max]; raises if an exact pair increases."""
    from .search import pendant_tree_connectivity

    ks, values, exact = [], [], []
    for k in range(k_min, k_max + 1):
        r = pendant_tree_connectivity(g, k, budget)
        ks.append(k)
        values.append(r.value)
        exact.append(r.exact)
    chain = Chain(ks, values, exact)
    if not chain.non_increasing:
        raise LedgerInconsistent(f"tau_k increases with k on {g.name}: {values}")
    return chain


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "lower", "upper" or "info"
    value: int
    provenance: str


@dataclass
class BoundLedger:
    graph: Graph
    k: int
    entries: list[BoundEntry] = field(default_factory=list)

    def add(self, name: str, kind: str, value: int, provenance: str) -> None:
        if kind not in ("lower", "upper", "info"):
            raise ValueError(f"bad bound kind {kind!r}")
        self.entries.append(BoundEntry(name, kind, int(value), provenance))
        self.check()

    def lower(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "lower"]
        return max(vals) if vals else None

    def upper(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "upper"]
        return min(vals) if vals else None

    def check(self) -> None:
        lo, hi = self.lower(), self.upper()
        if lo is not None and hi is not None and lo > hi:
            raise LedgerInconsistent(f"{self.graph.name}, k={self.k}: lower bound {lo} exceeds upper bound {hi}")

    def rows(self) -> list[dict]:
        return [
            {"graph": self.graph.name, "k": self.k, "bound": e.name, "kind": e.kind,
             "value": e.value, "provenance": e.provenance}
            for e in self.entries
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["graph", "k", "bound", "kind", "value", "provenance"],
                           lineterminator="\n")
        w.writeheader()
        w.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> list[dict]:
        return self.rows()


def standard_ledger(g: Graph, k: int) -> BoundLedger:
    """Degree and connectivity bounds for (g, k)."""
    led = BoundLedger(g, k)
    kappa = vertex_connectivity(g)
    d = min_degree(g)
    if k >= 3:
        led.add("min-degree", "upper", degree_upper_bound(g, k),
                f"tau_k >= l forces delta >= k+l-1; delta={d}")
    else:
        led.add("min-degree", "upper", d, f"tau_2 = kappa <= delta; delta={d}")
    led.add("connectivity", "upper", connectivity_upper_bound(g, k, kappa),
            f"tau_k >= l forces kappa >= k+l-2; kappa={kappa}")
    adj = adjacent_min_degree_bound(g)
    if adj is not None:
        led.add("adjacent-min-degree", "info", adj,
                "delta-1 when two minimum-degree vertices are adjacent; bounds generalized 3-connectivity, not used")
    if k == 2:
        led.add("menger", "lower", kappa, "tau_2 equals vertex connectivity")
    return led
