"""Degree-based indices computed straight from their definitions.

These are the oracles every closed form is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Graph, SubsetGraph


@dataclass(frozen=True)
class UAggregates:
    """Subset sums over ``U``: degrees, squared degrees, internal edges and
    neighbour-degree totals (open neighbourhoods)."""

    sigma1: int
    sigma2: int
    epsilon: int
    nu: int


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    m1: int
    em1: int


def m1(g: Graph) -> int:
    """First Zagreb index: sum of squared vertex degrees."""
    return g.degree_indices()[0]


def m2(g: Graph) -> int:
    """Second Zagreb index: sum of ``d(u) d(v)`` over edges."""
    return g.degree_indices()[1]


def em1(g: Graph) -> int:
    """Reformulated first Zagreb index: sum of squared edge degrees."""
    return g.degree_indices()[2]


def em2(g: Graph) -> int:
    """Reformulated second Zagreb index.

    Sums ``d(e) d(f)`` over unordered pairs of distinct edges sharing an
    endpoint, each pair once.
    """
    return g.degree_indices()[3]


def subset_aggregates(sg: SubsetGraph) -> UAggregates:
    g = sg.graph
    us, vs = g.edge_arrays
    return UAggregates(*kernels.subset_sums(g.n, us, vs, sg.mask()))


def stats(g: Graph) -> GraphStats:
    return GraphStats(g.n, g.m, m1(g), em1(g))
