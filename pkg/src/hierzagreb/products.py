"""Graph products built on the generalized hierarchical product.

Vertex ``(a, x)`` of a product of ``g`` and ``h`` always gets id
``a * h.n + x``; this labeling is part of the public contract.
"""

from __future__ import annotations

from typing import Iterable

from . import kernels
from .graph import Graph, GraphError, RootedGraph, SubsetGraph


def hierarchical(g: Graph, h: Graph, u_set: Iterable[int]) -> Graph:
    """Generalized hierarchical product ``G Π H(U)``.

    ``(a, x) ~ (b, y)`` iff ``x == y in U`` and ``ab`` is an edge of ``g``,
    or ``a == b`` and ``xy`` is an edge of ``h``.
    """
    mask = SubsetGraph(h, u_set).mask()
    return _product(g, h, mask)


def _product(g, h, mask):
    gu, gv = g.edge_arrays
    hu, hv = h.edge_arrays
    us, vs = kernels.hier_edges(g.n, gu, gv, h.n, hu, hv, mask)
    return Graph._from_arrays(g.n * h.n, us, vs)


def cartesian(g: Graph, h: Graph) -> Graph:
    return _product(g, h, b"\x01" * h.n)


def cluster(g: Graph, h: RootedGraph) -> Graph:
    """Rooted product ``G{H}``: a copy of ``h`` glued by its root onto every vertex of ``g``."""
    return hierarchical(g, h.graph, [h.root])


def thorn(g: Graph, t: int) -> Graph:
    """Attach ``t`` pendant vertices to every vertex of ``g``."""
    if t < 0:
        raise GraphError(f"thorn count must be non-negative, got {t}")
    star = Graph(t + 1, [(0, k) for k in range(1, t + 1)])
    return cluster(g, RootedGraph(star, 0))
