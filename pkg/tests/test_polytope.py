import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from cubelat.complex import is_pure, strong_connectivity
from cubelat.cube import cube_cell, facet_words
from cubelat.polytope import (
    CubeRecognitionError,
    InstanceError,
    chain_of_cubes,
    connected_sum,
    cube_edges,
    euler_edge_check,
    from_facets,
    hypercube,
    load_instance,
    recognize_cube,
    save_instance,
    vertex_census,
)


@pytest.mark.parametrize("d,v,e,f", [(2, 4, 4, 4), (3, 8, 12, 6), (4, 16, 32, 8), (5, 32, 80, 10)])
def test_hypercube_counts(d, v, e, f):
    P = hypercube(d)
    assert (P.nverts, P.num_edges, len(P.facets)) == (v, e, f)


def test_hypercube_ridges():
    assert len(hypercube(4).boundary.ridges) == 24
    with pytest.raises(ValueError):
        hypercube(1)


def test_recognize_examples():
    square = [(0, 1), (1, 3), (3, 2), (2, 0)]
    ordered = recognize_cube(range(4), square)
    assert ordered[0] == 0 and {frozenset(e) for e in cube_edges(ordered)} == {frozenset(e) for e in square}
    Q3 = hypercube(3)
    ordered = recognize_cube(range(8), [(Q3.graph.labels[u], Q3.graph.labels[v]) for u, v in Q3.graph.edges()])
    assert sorted(ordered) == list(range(8))
    K4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    with pytest.raises(CubeRecognitionError):
        recognize_cube(range(4), K4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_recognize_relabelled_cube(k, rnd):
    ids = list(range(100, 100 + (1 << k)))
    rnd.shuffle(ids)
    edges = cube_edges(tuple(ids))
    ordered = recognize_cube(ids, edges)
    got = {frozenset(e) for e in cube_edges(ordered)}
    assert got == {frozenset(e) for e in edges}


def test_from_facets_q3_valid():
    facets = [cube_cell(w) for w in facet_words(3)]
    P = from_facets(3, facets)
    assert P.nverts == 8 and P.boundary.f_vector() == (8, 12, 6)


def test_from_facets_missing_facet():
    facets = [cube_cell(w) for w in facet_words(3)][:-1]
    with pytest.raises(InstanceError) as err:
        from_facets(3, facets)
    assert err.value.code == "ridge_incidence"


def test_from_facets_scrambled_with_edges():
    Q3 = hypercube(3)
    facets = [list(f) for f in Q3.facets]
    random.Random(3).shuffle(facets[2])
    edges = [[Q3.graph.labels[u], Q3.graph.labels[v]] for u, v in Q3.graph.edges()]
    P = from_facets(3, facets, edges=edges)
    assert P.same_boundary(Q3)
    with pytest.raises(InstanceError):
        from_facets(3, facets)


@pytest.mark.parametrize("facets,code", [
    ([[0, 1, 2]], "bad_input"),
    ([[0, 0, 1, 2]], "bad_input"),
    ([[0, 1, 2, 3], [0, 1, 2, 3]], "inconsistent_faces"),
    ([[0, 1, 2, 4]] + [list(cube_cell(w)) for w in facet_words(3)[1:]], None),
])
def test_from_facets_error_codes(facets, code):
    with pytest.raises(InstanceError) as err:
        from_facets(3, facets)
    if code:
        assert err.value.code == code


def test_two_disjoint_cubes_dual_disconnected():
    facets = [cube_cell(w) for w in facet_words(3)]
    facets += [tuple(v + 8 for v in f) for f in facets]
    with pytest.raises(InstanceError) as err:
        from_facets(3, facets)
    assert err.value.code == "dual_disconnected"


def test_connected_sum_examples():
    Q3 = hypercube(3)
    S = connected_sum(Q3, 5, Q3, 4)
    assert (S.nverts, len(S.facets), S.num_edges) == (12, 10, 20)
    assert euler_edge_check(S)
    Q4 = hypercube(4)
    S = connected_sum(Q4, 7, Q4, 6)
    assert (S.nverts, len(S.facets)) == (24, 14)
    census = vertex_census(S)
    assert census.delta == 4 and len(census.simple_vertices) == 16 and len(census.nonsimple) == 8
    assert sorted(census.nonsimple) == sorted(Q4.facets[7])


def test_connected_sum_of_squares_is_hexagon():
    Q2 = hypercube(2)
    S = connected_sum(Q2, 0, Q2, 3)
    G = S.graph
    assert S.nverts == 6 and G.num_edges == 6 and all(G.degree(v) == 2 for v in range(6))
    assert G.is_connected()


def test_connected_sum_bad_matching():
    Q3 = hypercube(3)
    B = Q3.facets[4]
    A = Q3.facets[5]
    with pytest.raises(InstanceError) as err:
        connected_sum(Q3, 5, Q3, 4, matching={B[0]: A[0]})
    assert err.value.code == "bad_matching"
    crossed = dict(zip(B, (A[0], A[3], A[2], A[1])))
    with pytest.raises(InstanceError):
        connected_sum(Q3, 5, Q3, 4, matching=crossed)


@pytest.mark.parametrize("d,n,v,f", [(3, 2, 12, 10), (3, 3, 16, 14), (4, 2, 24, 14), (4, 3, 32, 20)])
def test_chain_counts(d, n, v, f):
    P = chain_of_cubes(d, n)
    assert (P.nverts, len(P.facets)) == (v, f)


def test_chain_edge_formula():
    P = chain_of_cubes(3, 3)
    assert P.num_edges == 28 and euler_edge_check(P)
    with pytest.raises(ValueError):
        euler_edge_check(hypercube(4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chain_boundary_is_strongly_connected(n):
    B = chain_of_cubes(3, n).boundary
    assert is_pure(B) and strong_connectivity(B)


def test_vertex_census_cubes():
    for d in (3, 4):
        c = vertex_census(hypercube(d))
        assert c.delta == d and len(c.simple_vertices) == 2 ** d and not c.nonsimple


def test_instance_round_trip(tmp_path):
    P = chain_of_cubes(3, 3)
    path = tmp_path / "chain.json"
    save_instance(P, str(path))
    Q = load_instance(str(path))
    assert Q.same_boundary(P) and Q.name == "chain"
    assert json.loads(path.read_text()) == P.to_dict()


def test_load_errors(tmp_path):
    with pytest.raises(InstanceError):
        load_instance(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text('{"d": 3}')
    with pytest.raises(InstanceError):
        load_instance(str(bad))
