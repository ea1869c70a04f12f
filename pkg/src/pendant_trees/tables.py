"""Published values for the standard network families, recomputed."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

from .families import generalized_hypercube, grid, hyper_petersen, hypercube, mesh, torus
from .graph import Graph
from .search import pendant_tree_connectivity


@dataclass(frozen=True)
class Claim:
    network: str
    build: Callable[[], Graph]
    k: int
    relation: str  # "=" or "<="
    value: int

    @property
    def text(self) -> str:
        return f"{self.value}" if self.relation == "=" else f"<= {self.value}"

    def holds(self, computed: int) -> bool:
        return computed == self.value if self.relation == "=" else computed <= self.value


def _grid_claims():
    out = []
    for n in (3, 4):
        for m in (3, 4):
            out.append(Claim(f"P{n}xP{m}", lambda n=n, m=m: grid(n, m), 3, "=", 0))
    # the mesh statement covers every mesh, hypercubes included
    for k in (3, 4):
        out.append(Claim("P3xP3xP3", lambda: mesh(3, 3, 3), k, "=", 0))
    out.append(Claim("Q3 (mesh of P2)", lambda: hypercube(3), 3, "=", 0))
    return out


def _torus_claims():
    out = []
    sizes = (3, 4, 5)
    for a in sizes:
        for b in sizes:
            if b < a:
                continue
            for k, v in ((3, 1), (4, 0)):
                out.append(Claim(f"C{a}xC{b}", lambda a=a, b=b: torus(a, b), k, "=", v))
    for k in (3, 4):
        out.append(Claim("C3xC3xC3", lambda: torus(3, 3, 3), k, "<=", 2 * 3 - k + 2))
    return out


def _clique_claims():
    out = []
    for ms, ks in (((3, 3), (3,)), ((3, 4), (3,)), ((4, 4), (3, 4))):
        for k in ks:
            bound = sum(ms) - len(ms) - k + 2
            name = "x".join(f"K{m}" for m in ms)
            out.append(Claim(name, lambda ms=ms: generalized_hypercube(*ms), k, "<=", bound))
    out.append(Claim("HP3", lambda: hyper_petersen(3), 3, "=", 1))
    out.append(Claim("HP4", lambda: hyper_petersen(4), 3, "=", 2))
    return out


SECTIONS = {"mesh": _grid_claims, "torus": _torus_claims, "clique": _clique_claims}


@dataclass
class Row:
    network: str
    k: int
    claim: str
    computed: str
    match: str

    def as_list(self) -> list:
        return [self.network, self.k, self.claim, self.computed, self.match]


def section_rows(section: str, max_vertices: int = 30, budget=None, jobs: int = 1) -> list[Row]:
    if section not in SECTIONS:
        raise ValueError(f"unknown section {section!r}; choose one of {', '.join(SECTIONS)}")
    rows = []
    for c in SECTIONS[section]():
        g = c.build()
        if len(g) > max_vertices:
            rows.append(Row(c.network, c.k, c.text, "", "skipped"))
            continue
        r = pendant_tree_connectivity(g, c.k, budget, jobs=jobs)
        if not r.exact:
            rows.append(Row(c.network, c.k, c.text, f">={r.value}", "inexact"))
            continue
        rows.append(Row(c.network, c.k, c.text, str(r.value), "yes" if c.holds(r.value) else "no"))
    return rows


def rows_to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["network", "k", "claimed", "computed", "match"])
    for r in rows:
        w.writerow(r.as_list())
    return buf.getvalue()
