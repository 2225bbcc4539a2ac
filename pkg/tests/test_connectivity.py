import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cubelat.connectivity import (
    WorkLimitExceeded,
    classify_separator,
    enumerate_min_separators,
    enumerate_separators,
    independent_paths,
    local_connectivity,
    min_vertex_cut,
    vertex_connectivity,
)
from cubelat.graph import Graph
from cubelat.polytope import connected_sum, hypercube
import oracles

CYCLE4 = Graph.from_edges(range(4), [(0, 1), (1, 3), (3, 2), (2, 0)])
PATH3 = Graph.from_edges([10, 20, 30], [(10, 20), (20, 30)])


def q4sum():
    Q4 = hypercube(4)
    return connected_sum(Q4, 7, Q4, 6)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(range(n), edges)


def is_cut(G, X, s, t):
    H = oracles.to_nx(G)
    H.remove_nodes_from(G.labels[v] for v in X)
    return not nx.has_path(H, G.labels[s], G.labels[t])


def test_min_vertex_cut_examples():
    G = hypercube(3).graph
    cut = min_vertex_cut(G, 0, 7)
    assert len(cut) == 3 and is_cut(G, cut, 0, 7)
    assert len(min_vertex_cut(CYCLE4, 0, 3)) == 2
    assert min_vertex_cut(PATH3, 0, 2) == [1]
    with pytest.raises(ValueError):
        min_vertex_cut(PATH3, 0, 1)


def test_independent_paths_examples():
    G = hypercube(3).graph
    paths = independent_paths(G, 0, 7, 3)
    assert len(paths) == 3
    assert len({v for p in paths for v in p[1:-1]}) == 6
    assert independent_paths(G, 0, 7, 4) is None
    arcs = independent_paths(CYCLE4, 0, 3, 2)
    assert sorted(arcs) == [[0, 1, 3], [0, 2, 3]]


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_cube_connectivity(d):
    assert vertex_connectivity(hypercube(d).graph) == d


def test_connected_sum_connectivity():
    Q3 = hypercube(3)
    G = connected_sum(Q3, 5, Q3, 4).graph
    assert vertex_connectivity(G) == 3 == oracles.kappa(oracles.to_nx(G))
    assert vertex_connectivity(q4sum().graph) == 4


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_kappa_matches_brute_force(G):
    H = oracles.to_nx(G)
    expected = oracles.kappa(H)
    assert vertex_connectivity(G) == expected
    assert vertex_connectivity(G, exhaustive=True) == expected
    if G.n >= 2 and nx.is_connected(H):
        assert expected == nx.node_connectivity(H)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_local_connectivity_and_paths(G, data):
    if G.n < 2:
        return
    s = data.draw(st.integers(0, G.n - 1))
    t = data.draw(st.integers(0, G.n - 1).filter(lambda x: x != s))
    k = local_connectivity(G, s, t)
    H = oracles.to_nx(G)
    if nx.has_path(H, s, t):
        if G.has_edge(s, t):
            H2 = H.copy()
            H2.remove_edge(s, t)
            expected = 1 + (nx.node_connectivity(H2, s, t) if nx.has_path(H2, s, t) else 0)
        else:
            expected = nx.node_connectivity(H, s, t)
    else:
        expected = 0
    assert k == expected
    paths = independent_paths(G, s, t, k)
    assert len(paths) == k
    inner = [v for p in paths for v in p[1:-1]]
    assert len(inner) == len(set(inner)) and s not in inner and t not in inner
    for p in paths:
        assert p[0] == s and p[-1] == t
        assert all(G.has_edge(a, b) for a, b in zip(p, p[1:]))
    assert independent_paths(G, s, t, k + 1) is None
    if not G.has_edge(s, t):
        cut = min_vertex_cut(G, s, t)
        assert len(cut) == k and is_cut(G, cut, s, t)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.integers(0, 4))
def test_enumeration_matches_brute_force(G, size):
    if size > G.n:
        return
    found = [s.X for s in enumerate_separators(G, size).separators]
    assert found == oracles.separators(oracles.to_nx(G), size)


@pytest.mark.parametrize("d", [3, 4])
def test_cube_min_separators_are_neighbourhoods(d):
    G = hypercube(d).graph
    census = enumerate_min_separators(G)
    assert census.size == d and len(census.separators) == 2 ** d
    assert [s.X for s in census.separators] == oracles.separators(oracles.cube_nx(d), d)
    assert all(s.is_vertex_link for s in census.separators)
    assert sorted(s.neighborhood_of for s in census.separators) == list(range(2 ** d))


def test_q4sum_separators():
    P = q4sum()
    G = P.graph
    census = enumerate_separators(G, 4)
    assert census.subsets_checked == 10626
    degree4 = sorted(G.labels[v] for v in range(G.n) if G.degree(v) == 4)
    assert len(degree4) == 16
    assert sorted(s.neighborhood_of for s in census.separators) == degree4
    assert all(s.is_vertex_link for s in census.separators)


def test_classify_examples():
    G = hypercube(3).graph
    rep = classify_separator(G, G.neighbors(0))
    assert rep.is_separator and len(rep.components) == 2
    assert rep.singleton_component == 0 and rep.neighborhood_of == 0 and rep.is_vertex_link
    rep = classify_separator(G, [0, 1, 2, 3])
    assert not rep.is_separator and rep.components == [(4, 5, 6, 7)]

    P = q4sum()
    glued = sorted(set(hypercube(4).facets[7]))
    rep = classify_separator(P.graph, [P.graph.index_of(v) for v in glued])
    assert rep.is_separator and [len(c) for c in rep.components] == [8, 8]
    assert rep.neighborhood_of is None and not rep.is_vertex_link


def test_q4sum_size_eight_includes_glued_ring():
    P = q4sum()
    G = P.graph
    glued = tuple(sorted(hypercube(4).facets[7]))
    census = enumerate_separators(G, 8, work_limit=10**6)
    reports = {s.X: s for s in census.separators}
    assert glued in reports
    assert any(s.neighborhood_of is None for s in census.separators)


def test_work_limit():
    G = hypercube(5).graph
    with pytest.raises(WorkLimitExceeded) as err:
        enumerate_separators(G, 5, work_limit=1000)
    assert err.value.needed == 201376
    census = enumerate_separators(hypercube(4).graph, 4, cap=3)
    assert census.truncated and len(census.separators) == 3


def test_parallel_matches_serial():
    G = hypercube(5).graph
    serial = enumerate_separators(G, 5)
    parallel = enumerate_separators(G, 5, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_degenerate_graphs():
    assert vertex_connectivity(Graph.from_edges([0], [])) == 0
    assert vertex_connectivity(Graph.from_edges(range(4), [(0, 1), (2, 3)])) == 0
    K4 = Graph.from_edges(range(4), [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert vertex_connectivity(K4) == 3
    assert enumerate_separators(K4, 3).separators == []
