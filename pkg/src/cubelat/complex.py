"""Polytopal complexes whose cells are combinatorial cubes.

A complex is stored as the set of its faces, each keyed by its vertex set.
Every face also keeps a cube coordinatization (an ordered vertex tuple), so
the complex can be written out and re-closed under subfaces.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from .cube import cube_closure
from .graph import Graph


class ComplexError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Face:
    vertices: tuple[int, ...]
    dim: int

    def __post_init__(self):
        vs = tuple(sorted(set(self.vertices)))
        if len(vs) != len(self.vertices) and len(self.vertices):
            raise ComplexError(f"repeated vertex in face {self.vertices}")
        if vs and vs[0] < 0:
            raise ComplexError("vertex ids must be nonnegative")
        object.__setattr__(self, "vertices", vs)
        if self.dim >= 0 and len(vs) != 1 << self.dim:
            raise ComplexError(f"cube face of dim {self.dim} needs {1 << self.dim} vertices, got {len(vs)}")
        if self.dim == -1 and vs:
            raise ComplexError("only the empty face has dimension -1")

    @property
    def key(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)


EMPTY_FACE = Face((), -1)


def _as_key(F) -> frozenset[int]:
    if isinstance(F, Face):
        return F.key
    return frozenset(F)


class PolytopalComplex:
    """An immutable complex; build it with :func:`build_complex`."""

    def __init__(self, dims: dict[frozenset, int], order: dict[frozenset, tuple[int, ...]]):
        dims = dict(dims)
        dims[frozenset()] = -1
        self._dims = dims
        self._order = order
        self.dim = max(dims.values())
        by_dim: dict[int, list[Face]] = {}
        for key, k in dims.items():
            by_dim.setdefault(k, []).append(Face(tuple(key), k))
        self._by_dim = {k: sorted(v) for k, v in by_dim.items()}
        self.vertices = tuple(sorted(v for f in self._by_dim.get(0, []) for v in f.vertices))
        self.maximal = tuple(sorted(self._find_maximal(), key=lambda f: (-f.dim, f.vertices)))

    def _find_maximal(self) -> list[Face]:
        if self.dim < 0:
            return [EMPTY_FACE]
        out = []
        for k in range(self.dim + 1):
            above: dict[int, list[frozenset]] = {}
            for f in self._by_dim.get(k + 1, []):
                for v in f.vertices:
                    above.setdefault(v, []).append(f.key)
            for f in self._by_dim.get(k, []):
                key = f.key
                if not any(key <= g for g in above.get(f.vertices[0], [])):
                    out.append(f)
        return out

    def __contains__(self, F) -> bool:
        return _as_key(F) in self._dims

    def __len__(self):
        return len(self._dims)

    def __eq__(self, other):
        return isinstance(other, PolytopalComplex) and self._dims == other._dims

    def __hash__(self):
        return hash(frozenset(self._dims.items()))

    def __repr__(self):
        counts = ", ".join(str(len(self.faces(k))) for k in range(self.dim + 1))
        return f"<PolytopalComplex dim={self.dim} f=({counts})>"

    def face(self, F) -> Face:
        key = _as_key(F)
        if key not in self._dims:
            raise ComplexError(f"{sorted(key)} is not a face of the complex")
        return Face(tuple(key), self._dims[key])

    def faces(self, k: Optional[int] = None) -> list[Face]:
        """Faces of dimension ``k`` (all nonempty faces when ``k`` is None), sorted."""
        if k is None:
            return [f for j in range(self.dim + 1) for f in self._by_dim.get(j, [])]
        return list(self._by_dim.get(k, []))

    def all_faces(self) -> list[Face]:
        return [EMPTY_FACE] + self.faces()

    @property
    def facets(self) -> list[Face]:
        return self.faces(self.dim) if self.dim >= 0 else []

    @property
    def ridges(self) -> list[Face]:
        return self.faces(self.dim - 1) if self.dim >= 1 else []

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def coordinatization(self, F) -> tuple[int, ...]:
        return self._order[_as_key(F)]

    def is_subcomplex_of(self, other: "PolytopalComplex") -> bool:
        return all(key in other._dims and other._dims[key] == k for key, k in self._dims.items())

    def _restrict(self, keep: Callable[[frozenset], bool]) -> "PolytopalComplex":
        dims = {key: k for key, k in self._dims.items() if key and keep(key)}
        return PolytopalComplex(dims, {key: self._order[key] for key in dims})

    def _downward_closure(self, tops: Iterable[frozenset]) -> "PolytopalComplex":
        dims: dict[frozenset, int] = {}
        order: dict[frozenset, tuple[int, ...]] = {}
        for top in tops:
            for cell, k in cube_closure(self._order[top]):
                key = frozenset(cell)
                if key not in dims:
                    dims[key] = k
                    order[key] = cell
        return PolytopalComplex(dims, order)

    def induced(self, X: Iterable[int]) -> "PolytopalComplex":
        X = frozenset(X)
        if not X <= set(self.vertices):
            raise ComplexError(f"vertices {sorted(X - set(self.vertices))} are not in the complex")
        return self._restrict(lambda key: key <= X)

    def minus(self, X: Iterable[int]) -> "PolytopalComplex":
        """The complex with the vertices ``X`` removed; ids outside the complex are ignored."""
        X = frozenset(X)
        return self._restrict(lambda key: not key & X)

    @cached_property
    def dual_structure(self) -> tuple[list[Face], list[tuple[int, int, Face]]]:
        """Facets in sorted order and the ridge-sharing pairs ``(i, j, ridge)``."""
        return _dual_edges(self)

    def to_json(self) -> str:
        cells = [list(self._order[f.key]) for f in self.maximal if f.dim >= 0]
        return json.dumps({"dim": self.dim, "faces": cells})


def build_complex(cells: Iterable[Iterable[int]], closure=cube_closure) -> PolytopalComplex:
    """Close the given cells under subfaces and deduplicate faces by vertex set.

    ``closure`` maps a cell to its ``(ordered vertices, dim)`` subfaces; the
    default treats each cell as a coordinatized cube.
    """
    dims: dict[frozenset, int] = {}
    order: dict[frozenset, tuple[int, ...]] = {}
    for cell in cells:
        for sub, k in closure(tuple(cell)):
            key = frozenset(sub)
            if len(key) != len(sub):
                raise ComplexError(f"repeated vertex in cell {sub}")
            seen = dims.get(key)
            if seen is None:
                dims[key] = k
                order[key] = tuple(sub)
            elif seen != k:
                raise ComplexError(
                    f"inconsistent complex: vertex set {sorted(key)} declared with dims {seen} and {k}"
                )
    return PolytopalComplex(dims, order)


def load_complex(text: str) -> PolytopalComplex:
    data = json.loads(text)
    C = build_complex(data["faces"])
    if data["faces"] and C.dim != data["dim"]:
        raise ComplexError(f"declared dim {data['dim']} but cells give dim {C.dim}")
    return C


def is_pure(C: PolytopalComplex) -> bool:
    return all(f.dim == C.dim for f in C.maximal)


def star(F, C: PolytopalComplex) -> PolytopalComplex:
    key = C.face(F).key
    return C._downward_closure(g for g in C._dims if g and key <= g)


def antistar(F, C: PolytopalComplex) -> PolytopalComplex:
    key = C.face(F).key
    return C._restrict(lambda g: not g & key)


def induced(C: PolytopalComplex, X: Iterable[int]) -> PolytopalComplex:
    return C.induced(X)


def graph_of(C: PolytopalComplex) -> Graph:
    edges = [f.vertices for f in C.faces(1)]
    return Graph.from_edges(C.vertices, edges)


def _dual_edges(C: PolytopalComplex) -> tuple[list[Face], list[tuple[int, int, Face]]]:
    facets = C.facets
    by_vertex: dict[int, list[int]] = {}
    for i, f in enumerate(facets):
        for v in f.vertices:
            by_vertex.setdefault(v, []).append(i)
    edges = []
    for ridge in C.ridges:
        holders = [i for i in by_vertex.get(ridge.vertices[0], []) if ridge.key <= facets[i].key]
        for a in range(len(holders)):
            for b in range(a + 1, len(holders)):
                edges.append((holders[a], holders[b], ridge))
    return facets, edges


def dual_graph(C: PolytopalComplex) -> Graph:
    """Facet-ridge graph: one vertex per facet (in sorted facet order)."""
    if not is_pure(C):
        raise ComplexError("dual graph of a nonpure complex is undefined")
    if C.dim < 1:
        raise ComplexError("dual graph needs a complex of dimension >= 1")
    facets, edges = C.dual_structure
    return Graph.from_edges(range(len(facets)), [(a, b) for a, b, _ in edges])


@dataclass(frozen=True)
class StrongConnectivity:
    connected: bool
    pure: bool

    def __bool__(self):
        return self.connected


def strong_connectivity(C: PolytopalComplex) -> StrongConnectivity:
    if C.dim < 0:
        raise ComplexError("strong connectivity of the empty complex is undefined")
    pure = is_pure(C)
    if not pure:
        return StrongConnectivity(False, False)
    if C.dim == 0:
        return StrongConnectivity(True, True)
    return StrongConnectivity(dual_graph(C).is_connected(), True)


def is_strongly_connected(C: PolytopalComplex) -> bool:
    return strong_connectivity(C).connected


def is_spanning_subcomplex(sub: PolytopalComplex, C: PolytopalComplex) -> bool:
    return sub.is_subcomplex_of(C) and sub.vertices == C.vertices


def facet_ridge_path(C: PolytopalComplex, F1, F2, avoid_facets=(), avoid_ridges=()) -> Optional[list[Face]]:
    """Shortest facet-ridge path from F1 to F2 avoiding the given facets and ridges.

    Breadth-first over facets in sorted order, so the path returned is the
    lexicographically least among the shortest ones.
    """
    facets, edges = C.dual_structure
    index = {f.key: i for i, f in enumerate(facets)}
    try:
        s, t = index[_as_key(F1)], index[_as_key(F2)]
    except KeyError as exc:
        raise ComplexError(f"{sorted(exc.args[0])} is not a facet") from None
    banned = {_as_key(f) for f in avoid_facets}
    banned_ridges = {_as_key(r) for r in avoid_ridges}
    if facets[s].key in banned or facets[t].key in banned:
        raise ComplexError("path endpoints may not be avoided")
    nbrs: dict[int, set[int]] = {i: set() for i in range(len(facets))}
    for a, b, ridge in edges:
        if ridge.key in banned_ridges:
            continue
        nbrs[a].add(b)
        nbrs[b].add(a)
    prev = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in sorted(nbrs[u]):
            if w not in prev and facets[w].key not in banned:
                prev[w] = u
                queue.append(w)
    if t not in prev:
        return None
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return [facets[i] for i in reversed(path)]


def independent_facet_ridge_paths(C: PolytopalComplex, F1, F2) -> tuple[int, list[list[Face]]]:
    """Maximum number of facet-ridge paths from F1 to F2 sharing no inner facet, with witnesses."""
    from .connectivity import independent_paths, local_connectivity

    D = dual_graph(C)
    facets = C.facets
    index = {f.key: i for i, f in enumerate(facets)}
    s, t = index.get(_as_key(F1)), index.get(_as_key(F2))
    if s is None or t is None:
        raise ComplexError("both endpoints must be facets")
    if s == t:
        raise ComplexError("endpoints must be distinct facets")
    k = local_connectivity(D, s, t)
    paths = independent_paths(D, s, t, k)
    return k, [[facets[i] for i in p] for p in paths]
