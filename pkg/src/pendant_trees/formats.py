"""JSON and DOT input/output for graphs and packings."""

from __future__ import annotations

import json
import os
import re

from .families import parse_family
from .graph import Graph, GraphError, label
from .steiner import Packing

_COLORS = ["red", "blue", "forestgreen", "darkorange", "purple", "brown", "deeppink", "teal",
           "goldenrod", "navy", "olive", "crimson"]


def graph_to_json(g: Graph) -> dict:
    return {
        "name": g.name,
        "vertices": [label(v) for v in g],
        "edges": [[label(a), label(b)] for a, b in g.edges()],
    }


def graph_from_json(data: dict) -> Graph:
    try:
        verts = [str(v) for v in data["vertices"]]
        edges = [(str(a), str(b)) for a, b in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphError(f"malformed graph JSON: {e}") from None
    return Graph(verts, edges, name=str(data.get("name", "")))


def load_graph(spec: str) -> Graph:
    """A family spec such as ``torus:4,5`` or a path to a graph JSON file."""
    if spec.endswith(".json") or os.path.sep in spec:
        try:
            with open(spec) as fh:
                return graph_from_json(json.load(fh))
        except (OSError, json.JSONDecodeError) as e:
            raise GraphError(f"cannot read graph {spec!r}: {e}") from None
    return parse_family(spec)


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def graph_to_dot(g: Graph, packing: Packing | None = None) -> str:
    """DOT text; packing trees are drawn in distinct colours, terminals boxed."""
    colour = {}
    terms = set()
    if packing is not None:
        terms = set(packing.terminals)
        for i, t in enumerate(packing.trees):
            for e in t.edges:
                colour[e] = (_COLORS[i % len(_COLORS)], i)
    lines = [f"graph {_quote(g.name or 'G')} {{", "  node [shape=circle];"]
    for v in g:
        attrs = ' [shape=box, style=filled, fillcolor=lightgrey]' if v in terms else ""
        lines.append(f"  {_quote(label(v))}{attrs};")
    for a, b in g.edges():
        e = frozenset((a, b))
        if e in colour:
            c, i = colour[e]
            attrs = f' [color={c}, penwidth=2.5, label="T{i}"]'
        else:
            attrs = " [color=gray80]"
        lines.append(f"  {_quote(label(a))} -- {_quote(label(b))}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_product_terminals(text: str, g: Graph, h: Graph) -> tuple:
    """``"(0,0),(1,1),(2,2)"``: indices into the vertex orders of G and H."""
    pairs = _PAIR.findall(text)
    leftover = _PAIR.sub("", text).replace(",", "").strip()
    if not pairs or leftover:
        raise GraphError(f"cannot parse terminals {text!r}; expected '(i,j),(i,j),(i,j)'")
    out = []
    for i, j in pairs:
        i, j = int(i), int(j)
        if i >= len(g) or j >= len(h):
            raise GraphError(f"terminal ({i},{j}) out of range for factors of order {len(g)} and {len(h)}")
        out.append((g.vertices[i], h.vertices[j]))
    return tuple(out)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
