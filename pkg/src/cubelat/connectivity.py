"""Vertex connectivity via unit-capacity max-flow, plus separator enumeration.

Each vertex ``v`` is split into ``in(v) = 2v`` and ``out(v) = 2v + 1`` joined
by a capacity-one arc; every graph edge becomes two uncapacitated arcs
``out(u) -> in(v)`` and ``out(v) -> in(u)``.  Augmenting paths are found by
breadth-first search visiting nodes in ascending id, so cuts and path
witnesses are deterministic.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph, iter_bits

DEFAULT_WORK_LIMIT = 10**8
INF = float("inf")


class WorkLimitExceeded(RuntimeError):
    def __init__(self, needed: int, limit: int):
        super().__init__(f"{needed} subset checks exceed the work limit of {limit}")
        self.needed = needed
        self.limit = limit


class FlowNetwork:
    """Split digraph of ``G`` with a residual capacity table."""

    def __init__(self, G: Graph, s: int, t: int):
        if s == t:
            raise ValueError("source and sink must differ")
        self.G, self.s, self.t = G, s, t
        self.source, self.sink = 2 * s + 1, 2 * t
        nodes = 2 * G.n
        self.res: list[dict[int, float]] = [dict() for _ in range(nodes)]
        for v in range(G.n):
            cap = INF if v in (s, t) else 1
            self._arc(2 * v, 2 * v + 1, cap)
        for u, v in G.edges():
            self._arc(2 * u + 1, 2 * v, INF)
            self._arc(2 * v + 1, 2 * u, INF)
        self.succ = [sorted(r) for r in self.res]
        self.value = 0

    def _arc(self, a: int, b: int, cap: float) -> None:
        self.res[a][b] = self.res[a].get(b, 0) + cap
        self.res[b].setdefault(a, 0)

    def _augmenting_path(self) -> Optional[list[int]]:
        prev = {self.source: None}
        queue = deque([self.source])
        res, succ = self.res, self.succ
        while queue:
            a = queue.popleft()
            for b in succ[a]:
                if b not in prev and res[a][b] > 0:
                    prev[b] = a
                    if b == self.sink:
                        path = [b]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(b)
        return None

    def run(self, limit: Optional[int] = None) -> int:
        """Augment until no path remains or the flow value reaches ``limit``."""
        while limit is None or self.value < limit:
            path = self._augmenting_path()
            if path is None:
                break
            for a, b in zip(path, path[1:]):
                self.res[a][b] -= 1
                self.res[b][a] += 1
            self.value += 1
        return self.value

    def source_side(self) -> set[int]:
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            a = queue.popleft()
            for b in self.succ[a]:
                if b not in seen and self.res[a][b] > 0:
                    seen.add(b)
                    queue.append(b)
        return seen

    def min_cut(self) -> list[int]:
        side = self.source_side()
        return [v for v in range(self.G.n) if 2 * v in side and 2 * v + 1 not in side]

    def _flow(self, a: int, b: int) -> float:
        # flow on a forward arc equals the residual capacity of its reverse
        return self.res[b][a]

    def paths(self) -> list[list[int]]:
        """Decompose the current flow into vertex paths from s to t."""
        used: dict[tuple[int, int], int] = {}
        out = []
        G = self.G
        for first in G.neighbors(self.s):
            arc = (self.s, first)
            if self._flow(2 * self.s + 1, 2 * first) - used.get(arc, 0) <= 0:
                continue
            used[arc] = used.get(arc, 0) + 1
            path = [self.s, first]
            while path[-1] != self.t:
                u = path[-1]
                nxt = next(
                    w for w in G.neighbors(u)
                    if self._flow(2 * u + 1, 2 * w) - used.get((u, w), 0) > 0
                )
                used[(u, nxt)] = used.get((u, nxt), 0) + 1
                path.append(nxt)
            out.append(path)
        return out


def _check_pair(G: Graph, s: int, t: int) -> None:
    if not (0 <= s < G.n and 0 <= t < G.n):
        raise ValueError("vertex out of range")
    if s == t:
        raise ValueError("source and sink must differ")


def min_vertex_cut(G: Graph, s: int, t: int) -> list[int]:
    """A minimum set of vertex indices separating non-adjacent ``s`` and ``t``."""
    _check_pair(G, s, t)
    if G.has_edge(s, t):
        raise ValueError(f"{s} and {t} are adjacent; no vertex cut separates them")
    net = FlowNetwork(G, s, t)
    net.run()
    return net.min_cut()


def _without_edge(G: Graph, s: int, t: int) -> Graph:
    adj = list(G.adj)
    adj[s] &= ~(1 << t)
    adj[t] &= ~(1 << s)
    return Graph(G.n, tuple(adj), G.labels)


def local_connectivity(G: Graph, s: int, t: int, limit: Optional[int] = None) -> int:
    """Maximum number of internally disjoint s-t paths (capped at ``limit``)."""
    _check_pair(G, s, t)
    if G.has_edge(s, t):
        rest = None if limit is None else limit - 1
        return 1 + FlowNetwork(_without_edge(G, s, t), s, t).run(rest)
    return FlowNetwork(G, s, t).run(limit)


def independent_paths(G: Graph, s: int, t: int, k: int) -> Optional[list[list[int]]]:
    """``k`` internally vertex-disjoint s-t paths, or None if fewer exist."""
    _check_pair(G, s, t)
    if k <= 0:
        return []
    direct = G.has_edge(s, t)
    net = FlowNetwork(_without_edge(G, s, t) if direct else G, s, t)
    need = k - 1 if direct else k
    if net.run(need) < need:
        return None
    paths = net.paths()
    if direct:
        paths = [[s, t]] + paths
    return paths


def vertex_connectivity(G: Graph, exhaustive: bool = False) -> int:
    """Vertex connectivity of ``G``.

    By default only pairs whose first vertex has index at most the current
    bound are tried: a minimum separator misses one of the first kappa+1
    vertices, which is then separated from some later vertex.  With
    ``exhaustive=True`` every non-adjacent pair is examined.
    """
    if G.n < 2:
        return 0
    if not G.is_connected():
        return 0
    if G.is_complete():
        return G.n - 1
    best = G.min_degree()
    for i in range(G.n):
        if not exhaustive and i > best:
            break
        for j in range(i + 1, G.n):
            if G.has_edge(i, j):
                continue
            flow = FlowNetwork(G, i, j).run(None if exhaustive else best)
            best = min(best, flow)
    return best


@dataclass
class SeparatorReport:
    X: tuple[int, ...]
    is_separator: bool
    components: list[tuple[int, ...]]
    neighborhood_of: Optional[int]
    singleton_component: Optional[int]

    def to_dict(self) -> dict:
        return {
            "X": list(self.X),
            "separator": self.is_separator,
            "components": [list(c) for c in self.components],
            "neighborhood_of": self.neighborhood_of,
            "singleton": self.singleton_component,
        }

    @property
    def is_vertex_link(self) -> bool:
        """Neighbourhood of a vertex that is cut off alone, leaving exactly two components."""
        return (
            self.is_separator
            and self.neighborhood_of is not None
            and len(self.components) == 2
            and (self.neighborhood_of,) in self.components
        )


def _mask_of(G: Graph, X: Iterable[int]) -> int:
    mask = 0
    for v in X:
        mask |= 1 << v
    return mask


def classify_separator(G: Graph, X: Iterable[int]) -> SeparatorReport:
    """Component census of ``G - X``; ``X`` is given as vertex indices.

    The report is expressed in the graph's labels.
    """
    X = sorted(set(X))
    xmask = _mask_of(G, X)
    comps = G.component_masks(G.full & ~xmask)
    components = [tuple(G.labels[v] for v in iter_bits(c)) for c in comps]
    neighborhood_of = next((v for v in range(G.n) if G.adj[v] == xmask), None)
    singleton = next((c for c in comps if c & (c - 1) == 0), None)
    return SeparatorReport(
        X=tuple(G.labels[v] for v in X),
        is_separator=len(comps) >= 2,
        components=components,
        neighborhood_of=None if neighborhood_of is None else G.labels[neighborhood_of],
        singleton_component=None if singleton is None else G.labels[singleton.bit_length() - 1],
    )


def _scan(adj: tuple[int, ...], n: int, size: int, firsts: list[int]) -> list[tuple[int, ...]]:
    full = (1 << n) - 1
    found = []
    for first in firsts:
        for rest in itertools.combinations(range(first + 1, n), size - 1):
            xmask = 1 << first
            for v in rest:
                xmask |= 1 << v
            alive = full & ~xmask
            if not alive:
                continue
            comp = frontier = alive & -alive
            while frontier:
                nb = 0
                f = frontier
                while f:
                    low = f & -f
                    nb |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nb & alive & ~comp
                comp |= frontier
            if comp != alive:
                found.append((first,) + rest)
    return found


def _scan_job(args):
    return _scan(*args)


@dataclass
class SeparatorCensus:
    size: int
    separators: list[SeparatorReport] = field(default_factory=list)
    truncated: bool = False
    subsets_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "count": len(self.separators),
            "truncated": self.truncated,
            "subsets_checked": self.subsets_checked,
            "separators": [s.to_dict() for s in self.separators],
        }


def enumerate_separators(
    G: Graph,
    size: int,
    cap: Optional[int] = None,
    work_limit: int = DEFAULT_WORK_LIMIT,
    jobs: int = 1,
) -> SeparatorCensus:
    """Every ``size``-subset of vertices whose removal disconnects ``G``, lexicographically.

    Raises :class:`WorkLimitExceeded` before scanning when there are more
    than ``work_limit`` subsets.
    """
    if size < 0 or size > G.n:
        raise ValueError(f"separator size {size} out of range for {G.n} vertices")
    needed = math.comb(G.n, size)
    if needed > work_limit:
        raise WorkLimitExceeded(needed, work_limit)
    if size == 0:
        found = [] if G.is_connected() else [()]
    else:
        firsts = list(range(G.n - size + 1))
        if jobs > 1 and needed > 20000:
            chunks = [firsts[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = pool.map(_scan_job, [(G.adj, G.n, size, c) for c in chunks])
                found = sorted(itertools.chain.from_iterable(parts))
        else:
            found = _scan(G.adj, G.n, size, firsts)
    census = SeparatorCensus(size=size, subsets_checked=needed)
    if cap is not None and len(found) > cap:
        found = found[:cap]
        census.truncated = True
    census.separators = [classify_separator(G, X) for X in found]
    return census


def enumerate_min_separators(
    G: Graph,
    kappa: Optional[int] = None,
    cap: Optional[int] = None,
    work_limit: int = DEFAULT_WORK_LIMIT,
    jobs: int = 1,
) -> SeparatorCensus:
    if kappa is None:
        kappa = vertex_connectivity(G)
    return enumerate_separators(G, kappa, cap=cap, work_limit=work_limit, jobs=jobs)

