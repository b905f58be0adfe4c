"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels


class GraphError(ValueError):
    """Raised for invariant violations and malformed graph input."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically: each pair as ``(u, v)`` with ``u < v``,
    sorted lexicographically. Two graphs are equal when their vertex counts
    and canonical edge sets agree.
    """

    __slots__ = ("_n", "_edges", "_us", "_vs", "_adj", "_deg", "_idx")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise GraphError(f"self-loop at ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        self._init(n, sorted(seen))

    def _init(self, n, canonical):
        self._n = n
        self._edges = tuple(canonical)
        self._us = array("q", (u for u, _ in canonical))
        self._vs = array("q", (v for _, v in canonical))
        self._adj = None
        self._deg = None
        self._idx = None

    @classmethod
    def _from_arrays(cls, n: int, us: array, vs: array) -> "Graph":
        # trusted constructor: arrays must already be canonical
        g = cls.__new__(cls)
        g._n = n
        g._us = us
        g._vs = vs
        g._edges = tuple(zip(us, vs))
        g._adj = None
        g._deg = None
        g._idx = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_arrays(self) -> tuple[array, array]:
        """Parallel ``array('q')`` endpoint columns, as consumed by the kernels."""
        return self._us, self._vs

    def degrees(self) -> array:
        if self._deg is None:
            self._deg = kernels.degrees(self._n, self._us, self._vs)
        return self._deg

    def degree_indices(self) -> tuple[int, int, int, int]:
        """``(M1, M2, EM1, EM2)``, computed once by the kernel backend."""
        if self._idx is None:
            self._idx = kernels.degree_indices(self._n, self._us, self._vs)
        return self._idx

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        if self._adj is None:
            adj = [set() for _ in range(self._n)]
            for u, w in self._edges:
                adj[u].add(w)
                adj[w].add(u)
            self._adj = tuple(frozenset(s) for s in adj)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self._n and 0 <= v < self._n):
            return False
        return v in self.neighbors(u)

    def _check_vertex(self, v):
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} out of range for n={self.graph.n}")


@dataclass(frozen=True)
class SubsetGraph:
    """A graph with a distinguished nonempty vertex subset ``U``."""

    graph: Graph
    subset: frozenset[int]

    def __init__(self, graph: Graph, subset: Iterable[int]):
        members = list(subset)
        if not members:
            raise GraphError("subset must be nonempty")
        if len(set(members)) != len(members):
            raise GraphError(f"duplicate ids in subset {sorted(members)}")
        for x in members:
            if not 0 <= x < graph.n:
                raise GraphError(f"subset member {x} out of range for n={graph.n}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "subset", frozenset(members))

    def mask(self) -> bytes:
        out = bytearray(self.graph.n)
        for x in self.subset:
            out[x] = 1
        return bytes(out)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edge_list)


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees()[v]


def neighbor_degree_sum(g: Graph, v: int) -> int:
    """Sum of degrees over the open neighbourhood of ``v``."""
    deg = g.degrees()
    return sum(deg[u] for u in g.neighbors(v))


def edge_degree(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    deg = g.degrees()
    return deg[u] + deg[v] - 2


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n
