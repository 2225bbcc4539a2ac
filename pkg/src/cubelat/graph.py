"""Simple undirected graphs stored as adjacency bitmasks.

Vertices are indices ``0..n-1``; ``labels[i]`` carries the external id of
index ``i`` so subgraphs and complex graphs keep their original vertex ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.labels) != self.n:
            raise ValueError("adjacency/labels length does not match n")
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(mask):
                if u >= self.n or not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on the given vertex ids; indices follow ascending id order."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            a, b = index[u], index[v]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(len(labels), tuple(adj), labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index_of(self, label: int) -> int:
        return self.labels.index(label)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def min_degree(self) -> int:
        return min(m.bit_count() for m in self.adj)

    def is_complete(self) -> bool:
        return all(m.bit_count() == self.n - 1 for m in self.adj)

    def component_masks(self, alive: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``alive``, ordered by least vertex."""
        if alive is None:
            alive = self.full
        adj = self.adj
        comps = []
        while alive:
            comp = frontier = alive & -alive
            while frontier:
                nb = 0
                for v in iter_bits(frontier):
                    nb |= adj[v]
                frontier = nb & alive & ~comp
                comp |= frontier
            comps.append(comp)
            alive &= ~comp
        return comps

    def is_connected(self, alive: int | None = None) -> bool:
        if alive is None:
            alive = self.full
        return len(self.component_masks(alive)) <= 1

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining indices; labels are preserved."""
        drop = set(removed)
        keep = [v for v in range(self.n) if v not in drop]
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            mask = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    mask |= 1 << index[u]
            adj.append(mask)
        return Graph(len(keep), tuple(adj), tuple(self.labels[v] for v in keep))
