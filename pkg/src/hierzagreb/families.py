"""Generators for base graphs and the molecular graph families.

Chemical families are assembled from the product constructors, so their
labeling follows the product convention ``(a, x) -> a * |V(H)| + x``.
"""

from __future__ import annotations

from itertools import combinations

from ._c60_data import C60_EDGES
from .graph import Graph, GraphError, RootedGraph, SubsetGraph, is_connected
from .products import cluster, hierarchical


def _need(cond, message):
    if not cond:
        raise GraphError(message)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def rooted_path(n: int) -> RootedGraph:
    """Path rooted at its end vertex 0."""
    return RootedGraph(path(n), 0)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    _need(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, [(0, k) for k in range(1, n)])


def rooted_star(n: int) -> RootedGraph:
    return RootedGraph(star(n), 0)


def hypercube(d: int) -> Graph:
    _need(d >= 0, f"hypercube needs d >= 0, got {d}")
    n = 1 << d
    return Graph(n, [(v, v | (1 << k)) for v in range(n) for k in range(d) if not v & (1 << k)])


def truncated_cube_half() -> SubsetGraph:
    """Four triangles joined in a ring; ``U`` holds the four degree-2 corners."""
    edges = []
    for k in range(4):
        a, b, c = 3 * k, 3 * k + 1, 3 * k + 2
        edges += [(a, b), (a, c), (b, c), (b, 3 * ((k + 1) % 4))]
    return SubsetGraph(Graph(12, edges), [2, 5, 8, 11])


def truncated_cube() -> Graph:
    half = truncated_cube_half()
    return hierarchical(path(2), half.graph, half.subset)


def _count_cycles(g, length):
    # each cycle is found once from its smallest vertex in each of two directions
    count = 0
    for start in range(g.n):
        stack = [(start, (start,))]
        while stack:
            v, trail = stack.pop()
            for w in g.neighbors(v):
                if w == start and len(trail) == length:
                    count += 1
                elif w > start and w not in trail and len(trail) < length:
                    stack.append((w, trail + (w,)))
    return count // 2


def _girth_at_least(g, k):
    return all(_count_cycles(g, length) == 0 for length in range(3, k))


def c60() -> Graph:
    """Truncated icosahedron, validated on construction."""
    g = Graph(60, C60_EDGES)
    ok = (
        g.m == 90
        and set(g.degrees()) == {3}
        and is_connected(g)
        and _girth_at_least(g, 5)
        and _count_cycles(g, 5) == 12
    )
    if not ok:
        raise GraphError("bundled C60 adjacency failed validation")
    return g


def dimer_fullerene() -> Graph:
    g = c60()
    u, v = g.edges[0]
    return hierarchical(path(2), g, [u, v])


def hex_chain(n: int) -> Graph:
    _need(n >= 1, f"hexagonal chain needs n >= 1, got {n}")
    return hierarchical(path(2), path(2 * n + 1), range(0, 2 * n + 1, 2))


def polyhex(n: int) -> Graph:
    """Zig-zag polyhex nanotube TUHC6[2n, 2]."""
    _need(n >= 2, f"polyhex nanotube needs n >= 2, got {n}")
    return hierarchical(path(2), cycle(2 * n), range(1, 2 * n, 2))


def phenylene(n: int) -> Graph:
    _need(n >= 1, f"phenylene needs n >= 1, got {n}")
    u_set = [3 * k for k in range(n)] + [3 * k + 2 for k in range(n)]
    return hierarchical(path(2), path(3 * n), u_set)


def dendron(p: int, r: int) -> RootedGraph:
    """Rooted tree of progressive degree ``p`` and generation ``r``.

    Vertices are numbered breadth first from the root 0.
    """
    _need(p >= 2 and r >= 1, f"dendron needs p >= 2 and r >= 1, got p={p}, r={r}")
    edges = []
    frontier = [0]
    nxt = 1
    for _ in range(r):
        new = []
        for parent in frontier:
            for _ in range(p):
                edges.append((parent, nxt))
                new.append(nxt)
                nxt += 1
        frontier = new
    return RootedGraph(Graph(nxt, edges), 0)


def dicentric_dendrimer(p: int, r: int) -> Graph:
    return cluster(path(2), dendron(p, r))


def sun(m: int, n: int) -> Graph:
    """Cycle ``C_m`` with a pendant path of ``n`` edges at every vertex."""
    _need(m >= 3 and n >= 1, f"sun needs m >= 3 and n >= 1, got m={m}, n={n}")
    return cluster(cycle(m), rooted_path(n + 1))


def comb(n: int) -> Graph:
    """Square comb lattice ``P_n{P_n}`` rooted at a path end."""
    _need(n >= 2, f"comb needs n >= 2, got {n}")
    return cluster(path(n), rooted_path(n))


def octanitrocubane() -> Graph:
    return cluster(hypercube(3), rooted_path(2))
