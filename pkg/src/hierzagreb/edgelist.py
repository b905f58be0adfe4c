"""Plain-text edge-list format.

::

    # comment lines start with '#'
    n m
    u v          (exactly m edge lines)
    root r       (optional; makes a RootedGraph)
    subset i j   (optional; makes a SubsetGraph)

The writer emits the canonical form: edges as ``u < v`` sorted
lexicographically, subset ids ascending, no comments.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import Graph, GraphError, RootedGraph, SubsetGraph

GraphLike = Union[Graph, RootedGraph, SubsetGraph]


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_edge_list(text: str) -> GraphLike:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((lineno, stripped.split()))
    if not lines:
        raise GraphError("missing header line 'n m'")

    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphError(f"line {lineno}: malformed header, expected 'n m'")
    n, m = _ints(header, lineno)
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative count in header")

    body = lines[1:]
    edges = []
    for lineno, tokens in body[:m]:
        if len(tokens) != 2 or tokens[0] in ("root", "subset"):
            raise GraphError(f"wrong edge count: header says {m}, found {len(edges)}")
        edges.append(_ints(tokens, lineno))
    if len(edges) != m:
        raise GraphError(f"wrong edge count: header says {m}, found {len(edges)}")
    g = Graph(n, edges)

    root = subset = None
    for lineno, tokens in body[m:]:
        key = tokens[0]
        if key == "root" and root is None:
            if len(tokens) != 2:
                raise GraphError(f"line {lineno}: 'root' takes exactly one vertex id")
            root = _ints(tokens[1:], lineno)[0]
        elif key == "subset" and subset is None:
            subset = _ints(tokens[1:], lineno)
        elif key in ("root", "subset"):
            raise GraphError(f"line {lineno}: repeated '{key}' line")
        else:
            raise GraphError(f"wrong edge count: header says {m}, found extra line {lineno}")

    if root is not None and subset is not None:
        raise GraphError("a file may carry a root or a subset, not both")
    if root is not None:
        return RootedGraph(g, root)
    if subset is not None:
        return SubsetGraph(g, subset)
    return g


def write_edge_list(value: GraphLike) -> str:
    g = value if isinstance(value, Graph) else value.graph
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    if isinstance(value, RootedGraph):
        out.append(f"root {value.root}")
    elif isinstance(value, SubsetGraph):
        out.append("subset " + " ".join(str(x) for x in sorted(value.subset)))
    return "\n".join(out) + "\n"


def read_edge_list(path) -> GraphLike:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def save_edge_list(value: GraphLike, path) -> None:
    Path(path).write_text(write_edge_list(value), encoding="utf-8")
