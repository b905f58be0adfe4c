import pytest
from hypothesis import given
from hypothesis import strategies as st

from hierzagreb.families import complete, cycle, path, rooted_path
from hierzagreb.graph import Graph, GraphError, RootedGraph, is_connected
from hierzagreb.invariants import em1
from hierzagreb.products import cartesian, cluster, hierarchical, thorn

from _oracles import graph_data, naive_hierarchical_edges

K1 = Graph(1, [])


def _is_2_regular_cycle(g):
    return set(g.degrees()) == {2} and is_connected(g) and g.m == g.n


def test_hierarchical_p2_p3_is_hexagon():
    g = hierarchical(path(2), path(3), [0, 2])
    assert (g.n, g.m) == (6, 6)
    assert _is_2_regular_cycle(g)


def test_hierarchical_polyhex_tube():
    assert em1(hierarchical(path(2), cycle(4), [1, 3])) == 104


def test_hierarchical_labeling():
    g = hierarchical(path(2), path(3), [0, 2])
    # (a, x) -> 3a + x; G-edges only in rows 0 and 2
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 5), (3, 4), (4, 5))


def test_hierarchical_rejects_bad_subsets():
    with pytest.raises(GraphError):
        hierarchical(path(2), path(3), [])
    with pytest.raises(GraphError):
        hierarchical(path(2), path(3), [3])


@given(graph_data(max_n=6), graph_data(max_n=6))
def test_full_subset_is_cartesian(g, h):
    gg, hh = Graph(*g), Graph(*h)
    assert hierarchical(gg, hh, range(hh.n)) == cartesian(gg, hh)


def test_cartesian_examples():
    c4 = cartesian(path(2), path(2))
    assert _is_2_regular_cycle(c4) and c4.n == 4
    prism = cartesian(complete(2), cycle(3))
    assert (prism.n, prism.m, set(prism.degrees())) == (6, 9, {3})
    assert em1(cartesian(path(2), path(4))) == 108


def test_ladder_em1_by_hand():
    # P2 x P4: rails 0-1-2-3 and 4-5-6-7, rungs i -- i+4
    ladder = cartesian(path(2), path(4))
    d = ladder.degrees()
    assert list(d) == [2, 3, 3, 2, 2, 3, 3, 2]
    edge_degrees = sorted(d[u] + d[v] - 2 for u, v in ladder.edges)
    # rails: 3,4,3 twice; rungs: 2,4,4,2
    assert edge_degrees == sorted([3, 4, 3, 3, 4, 3, 2, 4, 4, 2])
    assert sum(x * x for x in edge_degrees) == 108


@given(graph_data(max_n=5), graph_data(max_n=5))
def test_cartesian_edge_count(g, h):
    gg, hh = Graph(*g), Graph(*h)
    assert cartesian(gg, hh).m == gg.n * hh.m + hh.n * gg.m


def test_cluster_examples():
    assert em1(cluster(cycle(3), RootedGraph(cycle(3), 1))) == 216
    from hierzagreb.families import hypercube

    assert em1(cluster(hypercube(3), rooted_path(2))) == 504
    comb3 = cluster(path(3), rooted_path(3))
    assert (comb3.n, comb3.m) == (9, 8)
    assert em1(comb3) == 38


@given(graph_data(max_n=6), graph_data(max_n=6), st.integers(0, 5))
def test_cluster_counts(g, h, root):
    gg, hh = Graph(*g), Graph(*h)
    root %= hh.n
    c = cluster(gg, RootedGraph(hh, root))
    assert (c.n, c.m) == (gg.n * hh.n, gg.n * hh.m + gg.m)


def test_thorn():
    g = cycle(5)
    assert thorn(g, 0) == g
    assert em1(thorn(cycle(3), 1)) == 60
    assert em1(thorn(path(2), 2)) == 32
    t = thorn(path(3), 2)
    assert [t.degrees()[3 * a] for a in range(3)] == [3, 4, 3]
    with pytest.raises(GraphError):
        thorn(g, -1)


# -- structural laws ------------------------------------------------------------


@st.composite
def product_inputs(draw, connected=False):
    g = Graph(*draw(graph_data(max_n=6, connected=connected)))
    h = Graph(*draw(graph_data(max_n=6, connected=connected)))
    u_set = draw(st.sets(st.integers(0, h.n - 1), min_size=1))
    return g, h, sorted(u_set)


@given(product_inputs())
def test_matches_definition(args):
    g, h, u_set = args
    p = hierarchical(g, h, u_set)
    assert set(p.edges) == naive_hierarchical_edges(g.n, g.edges, h.n, h.edges, set(u_set))


@given(product_inputs())
def test_degree_law(args):
    g, h, u_set = args
    p = hierarchical(g, h, u_set)
    dg, dh, dp = g.degrees(), h.degrees(), p.degrees()
    for a in range(g.n):
        for x in range(h.n):
            assert dp[a * h.n + x] == dh[x] + (dg[a] if x in u_set else 0)


@given(product_inputs())
def test_edge_count_law(args):
    g, h, u_set = args
    p = hierarchical(g, h, u_set)
    assert (p.n, p.m) == (g.n * h.n, g.n * h.m + len(u_set) * g.m)


@given(product_inputs())
def test_connectivity_law(args):
    g, h, u_set = args
    assert is_connected(hierarchical(g, h, u_set)) == (is_connected(g) and is_connected(h))


@given(product_inputs(connected=True))
def test_connected_factors_give_connected_product(args):
    assert is_connected(hierarchical(*args))


@given(graph_data(max_n=7))
def test_trivial_factors(data):
    g = Graph(*data)
    assert hierarchical(K1, g, range(0, g.n, 2)) == g
    assert hierarchical(g, K1, [0]) == g
