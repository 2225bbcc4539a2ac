"""Combinatorial cubical polytopes: generators, loading and validation.

A polytope is given by its facets, each an ordered list of ``2**(d-1)``
vertex ids whose positions, read in binary, are the facet's cube
coordinates.  Validation checks everything the connectivity arguments rely
on (cube facets, faces meeting properly, every ridge in exactly two facets,
connected dual graph).  Sphericity is not checked: a file that passes is
trusted to describe a polytope.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .complex import ComplexError, PolytopalComplex, build_complex, dual_graph, graph_of
from .cube import cube_cell, cube_closure, facet_words
from .graph import Graph


class InstanceError(ValueError):
    """Invalid polytope input; ``code`` names the violated condition."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


class CubeRecognitionError(InstanceError):
    def __init__(self, message: str):
        super().__init__("cube_recognition", message)


def recognize_cube(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Order the vertices of a cube graph by binary cube coordinates.

    The least vertex is the origin and its neighbours, in ascending id order,
    are the unit vectors (first neighbour = most significant bit).  Every
    vertex at distance ``j`` from the origin must see exactly ``j``
    neighbours at distance ``j - 1``; its label is the union of theirs.
    """
    vs = sorted(set(vertices))
    size = len(vs)
    k = size.bit_length() - 1
    if size == 0 or size != 1 << k:
        raise CubeRecognitionError(f"{size} vertices is not a power of two")
    inside = set(vs)
    nbrs: dict[int, set[int]] = {v: set() for v in vs}
    for u, v in edges:
        if u in inside and v in inside:
            nbrs[u].add(v)
            nbrs[v].add(u)
    for v in vs:
        if len(nbrs[v]) != k:
            raise CubeRecognitionError(f"vertex {v} has degree {len(nbrs[v])}, expected {k}")
    origin = vs[0]
    dist = {origin: 0}
    queue = deque([origin])
    while queue:
        u = queue.popleft()
        for w in sorted(nbrs[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if len(dist) != size:
        raise CubeRecognitionError("graph is disconnected")
    label = {origin: 0}
    for i, w in enumerate(sorted(nbrs[origin])):
        label[w] = 1 << (k - 1 - i)
    for v in sorted(vs, key=lambda v: (dist[v], v)):
        j = dist[v]
        if j == 0:
            continue
        lower = [w for w in nbrs[v] if dist[w] == j - 1]
        if len(lower) != j:
            raise CubeRecognitionError(
                f"vertex {v} at distance {j} has {len(lower)} neighbours at distance {j - 1}"
            )
        if j >= 2:
            lab = 0
            for w in lower:
                lab |= label[w]
            if lab.bit_count() != j:
                raise CubeRecognitionError(f"vertex {v} gets inconsistent label")
            label[v] = lab
    if len(set(label.values())) != size:
        raise CubeRecognitionError("labels are not distinct")
    for u in vs:
        for w in nbrs[u]:
            if (label[u] ^ label[w]).bit_count() != 1:
                raise CubeRecognitionError(f"edge {u}-{w} joins labels differing in more than one place")
    ordered = [0] * size
    for v, lab in label.items():
        ordered[lab] = v
    return tuple(ordered)


def cube_edges(ordered: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(ordered[p], ordered[p ^ (1 << b)])
            for p in range(len(ordered)) for b in range(len(ordered).bit_length() - 1)
            if p < p ^ (1 << b)]


@dataclass(frozen=True)
class VertexCensus:
    degrees: tuple[int, ...]
    delta: int
    simple_vertices: tuple[int, ...]
    nonsimple: tuple[int, ...]


@dataclass(eq=False)
class CubicalPolytope:
    d: int
    nverts: int
    facets: tuple[tuple[int, ...], ...]
    boundary: PolytopalComplex = field(repr=False)
    name: str = ""

    @cached_property
    def graph(self) -> Graph:
        return graph_of(self.boundary)

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def facet_faces(self):
        return [self.boundary.face(f) for f in self.facets]

    def proper_faces(self):
        """All nonempty proper faces, sorted by dimension then vertex ids."""
        return self.boundary.faces()

    def to_dict(self) -> dict:
        return {"d": self.d, "vertices": self.nverts, "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def same_boundary(self, other: "CubicalPolytope") -> bool:
        return self.d == other.d and self.boundary == other.boundary


def from_facets(
    d: int,
    facets: Iterable[Iterable[int]],
    edges: Optional[Iterable[Iterable[int]]] = None,
    nverts: Optional[int] = None,
    name: str = "",
) -> CubicalPolytope:
    """Validate facet data and build the polytope.

    Without ``edges`` each facet must already be coordinatized.  With
    ``edges`` facets may be unordered vertex sets; each is coordinatized by
    :func:`recognize_cube` against the given edges.
    """
    if d < 2:
        raise InstanceError("bad_input", f"dimension {d} < 2")
    facets = [tuple(int(v) for v in f) for f in facets]
    if not facets:
        raise InstanceError("bad_input", "no facets")
    size = 1 << (d - 1)
    for f in facets:
        if len(f) != size:
            raise InstanceError("bad_input", f"facet {list(f)} has {len(f)} vertices, expected {size}")
        if len(set(f)) != size:
            raise InstanceError("bad_input", f"facet {list(f)} repeats a vertex")
    used = sorted({v for f in facets for v in f})
    if nverts is None:
        nverts = used[-1] + 1
    if used[0] < 0 or used[-1] >= nverts or len(used) != nverts:
        raise InstanceError("bad_input", f"facets must use exactly the vertex ids 0..{nverts - 1}")

    if edges is not None:
        edge_set = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InstanceError("bad_input", f"self-loop at {u}")
            edge_set.add((min(u, v), max(u, v)))
        facets = [recognize_cube(f, edge_set) for f in facets]
    else:
        edge_set = None

    keys = [frozenset(f) for f in facets]
    if len(set(keys)) != len(keys):
        raise InstanceError("inconsistent_faces", "two facets share the same vertex set")

    facet_edges = {(min(u, v), max(u, v)) for f in facets for u, v in cube_edges(f)}
    if edge_set is not None and edge_set != facet_edges:
        raise InstanceError("cube_recognition", "edge list differs from the edges of the recognized facets")
    for f, key in zip(facets, keys):
        own = {(min(u, v), max(u, v)) for u, v in cube_edges(f)}
        extra = [e for e in facet_edges if e[0] in key and e[1] in key and e not in own]
        if extra:
            raise InstanceError("cube_recognition", f"facet {list(f)} induces non-cube edge {list(extra[0])}")

    try:
        boundary = build_complex(facets)
    except ComplexError as exc:
        raise InstanceError("inconsistent_faces", str(exc)) from None

    face_sets = [{frozenset(sub) for sub, _ in cube_closure(f)} for f in facets]
    for a, b in combinations(range(len(facets)), 2):
        meet = keys[a] & keys[b]
        if meet and (meet not in face_sets[a] or meet not in face_sets[b]):
            raise InstanceError(
                "inconsistent_faces",
                f"facets {list(facets[a])} and {list(facets[b])} meet in {sorted(meet)}, not a common face",
            )

    if boundary.dim != d - 1:
        raise InstanceError("bad_input", f"boundary has dimension {boundary.dim}, expected {d - 1}")
    for ridge in boundary.faces(d - 2):
        count = sum(1 for key in keys if ridge.key <= key)
        if count != 2:
            raise InstanceError("ridge_incidence", f"ridge {list(ridge.vertices)} lies in {count} facet(s)")
    if not dual_graph(boundary).is_connected():
        raise InstanceError("dual_disconnected", "facet-ridge graph is disconnected")
    return CubicalPolytope(d, nverts, tuple(facets), boundary, name)


def hypercube(d: int) -> CubicalPolytope:
    if d < 2:
        raise ValueError(f"hypercube needs d >= 2, got {d}")
    return from_facets(d, [cube_cell(w) for w in facet_words(d)], name=f"Q{d}")


def _edges_within(P: CubicalPolytope, vertices) -> list[tuple[int, int]]:
    inside = set(vertices)
    G = P.graph
    return [(G.labels[u], G.labels[v]) for u, v in G.edges() if G.labels[u] in inside and G.labels[v] in inside]


def connected_sum(
    P1: CubicalPolytope,
    f1: int,
    P2: CubicalPolytope,
    f2: int,
    matching: Optional[dict[int, int]] = None,
) -> CubicalPolytope:
    """Glue ``P2`` to ``P1`` along facet ``f2`` of ``P2`` and facet ``f1`` of ``P1``.

    ``matching`` maps vertices of ``P2``'s facet to vertices of ``P1``'s
    facet.  Without it, both facets are coordinatized by
    :func:`recognize_cube` and matched position by position.  The two glued
    facets disappear; ``P1`` keeps its ids and the remaining ``P2`` vertices
    get the next ids in ascending order.
    """
    if P1.d != P2.d:
        raise ValueError(f"cannot glue a {P1.d}-polytope to a {P2.d}-polytope")
    for P, f in ((P1, f1), (P2, f2)):
        if not 0 <= f < len(P.facets):
            raise ValueError(f"facet index {f} out of range")
    A, B = P1.facets[f1], P2.facets[f2]
    edges_a, edges_b = _edges_within(P1, A), _edges_within(P2, B)
    if matching is None:
        oa, ob = recognize_cube(A, edges_a), recognize_cube(B, edges_b)
        matching = dict(zip(ob, oa))
    else:
        matching = {int(k): int(v) for k, v in matching.items()}
        if set(matching) != set(B) or sorted(matching.values()) != sorted(A):
            raise InstanceError("bad_matching", "matching is not a bijection between the two facets")
        ea = {frozenset(e) for e in edges_a}
        if {frozenset((matching[u], matching[v])) for u, v in edges_b} != ea:
            raise InstanceError("bad_matching", "matching is not a graph isomorphism of the facets")

    relabel = dict(matching)
    nxt = P1.nverts
    for v in range(P2.nverts):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    facets = [f for i, f in enumerate(P1.facets) if i != f1]
    facets += [tuple(relabel[v] for v in f) for i, f in enumerate(P2.facets) if i != f2]
    name = f"{P1.name or 'P1'}#{P2.name or 'P2'}"
    return from_facets(P1.d, facets, nverts=nxt, name=name)


def chain_of_cubes(d: int, n: int) -> CubicalPolytope:
    """``n`` copies of Q_d glued in a row, each along the facets x_1 = 1 and x_1 = 0."""
    if d < 3:
        raise ValueError(f"chain_of_cubes needs d >= 3, got {d}")
    if n < 1:
        raise ValueError(f"chain_of_cubes needs n >= 1, got {n}")
    Q = hypercube(d)
    words = [w.letters for w in facet_words(d)]
    low, high = words.index("0" + "*" * (d - 1)), words.index("1" + "*" * (d - 1))
    P, far = Q, high
    for _ in range(n - 1):
        tail = len(P.facets) - 1
        P = connected_sum(P, far, Q, low)
        far = tail + (high if high < low else high - 1)
    P.name = f"chain({d},{n})"
    return P


def vertex_census(P: CubicalPolytope) -> VertexCensus:
    G = P.graph
    degrees = tuple(G.degree(i) for i in range(G.n))
    simple = tuple(G.labels[i] for i in range(G.n) if degrees[i] == P.d)
    nonsimple = tuple(G.labels[i] for i in range(G.n) if degrees[i] != P.d)
    return VertexCensus(degrees, min(degrees), simple, nonsimple)


def euler_edge_check(P: CubicalPolytope) -> bool:
    if P.d != 3:
        raise ValueError("the edge count 2|V| - 4 only applies to cubical 3-polytopes")
    return P.num_edges == 2 * P.nverts - 4


def instance_from_dict(data: dict, name: str = "") -> CubicalPolytope:
    try:
        d = int(data["d"])
        facets = data["facets"]
        nverts = data.get("vertices")
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError("bad_input", f"malformed instance: {exc}") from None
    return from_facets(d, facets, edges=data.get("edges"), nverts=nverts, name=name)


def load_instance(path: str) -> CubicalPolytope:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceError("bad_input", f"cannot read {path}: {exc}") from None
    return instance_from_dict(data, name=os.path.splitext(os.path.basename(path))[0])


def save_instance(P: CubicalPolytope, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(P.to_json() + "\n")
