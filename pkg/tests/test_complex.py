import json

import pytest
from hypothesis import given, strategies as st

from cubelat.complex import (
    EMPTY_FACE,
    ComplexError,
    Face,
    antistar,
    build_complex,
    dual_graph,
    facet_ridge_path,
    graph_of,
    independent_facet_ridge_paths,
    induced,
    is_pure,
    is_spanning_subcomplex,
    is_strongly_connected,
    load_complex,
    star,
    strong_connectivity,
)
from cubelat.cube import boundary_complex, cube_cell, cube_cutset_complex, CubeCutsetSpec, face_vertex_ids, facet_words

B3 = boundary_complex(3)
B4 = boundary_complex(4)


def test_build_boundary_q3():
    assert B3.f_vector() == (8, 12, 6)
    assert len(B3.faces()) == 26
    assert EMPTY_FACE in B3.all_faces()


def test_build_small():
    assert len(build_complex([(0, 1, 2, 3)]).faces()) == 9
    two = build_complex([(0, 1, 2, 3), (2, 3, 4, 5)])
    assert len(two.faces()) == 15
    assert two.f_vector() == (6, 7, 2)


def test_build_rejects_inconsistent_dims():
    # a closure that reports the same vertex set once as an edge and once as a square
    def closure(c):
        return [(c[:2], len(c) - 1)]

    with pytest.raises(ComplexError):
        build_complex([(0, 1), (0, 1, 2)], closure=closure)


def test_face_validation():
    with pytest.raises(ComplexError):
        Face((0, 1, 2), 1)
    with pytest.raises(ComplexError):
        Face((0,), -1)
    assert Face((3, 1), 1).vertices == (1, 3)


def test_purity_examples():
    assert is_pure(B4)
    C, _ = cube_cutset_complex(CubeCutsetSpec(4, "0000", ("1000", "0010")))
    assert not is_pure(C)
    assert is_pure(build_complex([(7,)]))


def test_star_examples():
    S = star((0,), B3)
    assert S.f_vector() == (7, 9, 3)
    F = face_vertex_ids("0**")
    assert star(F, B3) == build_complex([F])
    assert star((), B3) == B3


def test_antistar_examples():
    A = antistar((0,), B3)
    assert A.f_vector() == (7, 9, 3) and is_pure(A) and strong_connectivity(A)
    assert antistar(face_vertex_ids("0**"), B3) == build_complex([face_vertex_ids("1**")])
    square = build_complex([(0, 1, 2, 3)])
    assert antistar((0, 1), square) == build_complex([(2, 3)])


def test_induced_examples():
    assert induced(B3, B3.vertices) == B3
    empty = induced(B3, [])
    assert empty.dim == -1 and empty.faces() == []
    C = induced(B4, set(range(16)) - {0, 1, 2, 4, 8})
    assert C.dim == 2 and is_pure(C) and len(C.vertices) == 11
    with pytest.raises(ComplexError):
        induced(B3, [99])


def test_graph_examples():
    G = graph_of(B3)
    assert (G.n, G.num_edges) == (8, 12) and all(G.degree(v) == 3 for v in range(8))
    G = graph_of(B4)
    assert (G.n, G.num_edges) == (16, 32) and all(G.degree(v) == 4 for v in range(16))
    sq = graph_of(build_complex([(0, 1, 2, 3)]))
    assert sq.num_edges == 4 and sorted(sq.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_dual_graph_is_cocktail_party(d):
    D = dual_graph(boundary_complex(d))
    assert D.n == 2 * d
    facets = boundary_complex(d).facets
    for i in range(D.n):
        assert D.degree(i) == 2 * d - 2
        (opposite,) = [j for j in range(D.n) if j != i and not D.has_edge(i, j)]
        assert not set(facets[i].vertices) & set(facets[opposite].vertices)


def test_dual_graph_single_facet():
    D = dual_graph(build_complex([face_vertex_ids("0**")]))
    assert D.n == 1 and D.num_edges == 0


def test_dual_graph_nonpure_raises():
    with pytest.raises(ComplexError):
        dual_graph(build_complex([(0, 1, 2, 3), (4, 5)]))


def test_strong_connectivity_examples():
    assert is_strongly_connected(B4)
    two = build_complex([(0, 1, 2, 3), (4, 5, 6, 7)])
    assert strong_connectivity(two).pure and not strong_connectivity(two)
    points = build_complex([(v,) for v in range(5)])
    assert strong_connectivity(points)
    nonpure = strong_connectivity(build_complex([(0, 1, 2, 3), (3, 4)]))
    assert not nonpure.connected and not nonpure.pure
    with pytest.raises(ComplexError):
        strong_connectivity(induced(B3, []))


def test_spanning_examples():
    C, Cp = cube_cutset_complex(CubeCutsetSpec(4, "0000", ("1000",)))
    assert is_spanning_subcomplex(Cp, C)
    assert not is_spanning_subcomplex(build_complex([face_vertex_ids("0**")]), B3)
    assert is_spanning_subcomplex(B3, B3)


def test_facet_ridge_path_examples():
    F1, F2 = face_vertex_ids("0**"), face_vertex_ids("1**")
    path = facet_ridge_path(B3, F1, F2)
    assert len(path) == 3
    avoid = [face_vertex_ids(w) for w in ["*0*", "*1*", "**0"]]
    path = facet_ridge_path(B3, F1, F2, avoid_facets=avoid)
    assert [f.vertices for f in path] == [F1, face_vertex_ids("**1"), F2]
    every_side = avoid + [face_vertex_ids("**1")]
    assert facet_ridge_path(B3, F1, F2, avoid_facets=every_side) is None


@pytest.mark.parametrize("d", [2, 3, 4])
def test_facet_ridge_path_avoiding_any_facet(d):
    B = boundary_complex(d)
    facets = B.facets
    for a in facets:
        for b in facets:
            if a == b:
                continue
            for x in facets:
                if x in (a, b):
                    continue
                path = facet_ridge_path(B, a, b, avoid_facets=[x])
                assert path is not None and x not in path
                for f, g in zip(path, path[1:]):
                    assert len(set(f.vertices) & set(g.vertices)) == 2 ** (d - 2)


def test_independent_facet_ridge_paths():
    k, paths = independent_facet_ridge_paths(B3, face_vertex_ids("0**"), face_vertex_ids("1**"))
    assert k == 4 and len(paths) == 4
    inner = [f for p in paths for f in p[1:-1]]
    assert len(inner) == len(set(inner))
    k, _ = independent_facet_ridge_paths(B3, face_vertex_ids("0**"), face_vertex_ids("*0*"))
    assert k >= 3
    facets = B4.facets
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            assert independent_facet_ridge_paths(B4, facets[i], facets[j])[0] >= 4


def test_json_round_trip():
    for C in [B3, B4, cube_cutset_complex(CubeCutsetSpec(4, "0000", ("1000", "0010")))[0]]:
        assert load_complex(C.to_json()) == C
    data = json.loads(B3.to_json())
    assert data["dim"] == 2 and len(data["faces"]) == 6


facet_subsets = st.integers(3, 4).flatmap(
    lambda d: st.lists(st.sampled_from([w.letters for w in facet_words(d)]), min_size=1, unique=True)
)


@given(facet_subsets)
def test_subcomplex_relations(words):
    C = build_complex(cube_cell(w) for w in words)
    d = len(words[0])
    B = boundary_complex(d)
    assert C.is_subcomplex_of(B)
    assert is_pure(C) and C.dim == d - 1
    for v in C.vertices:
        S, A = star((v,), C), antistar((v,), C)
        assert S.is_subcomplex_of(C) and A.is_subcomplex_of(C)
        assert v not in A.vertices
        assert A == C.minus([v])
        assert all(v in f.vertices for f in S.maximal)
