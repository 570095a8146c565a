"""Small undirected graphs and the pair graphs used for tensor squares."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable


class SimpleGraph:
    """Undirected graph on vertices 0..n-1 without self-loops."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError("self-loop")
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ValueError("edge endpoint out of range")
            norm.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(norm))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SimpleGraph is immutable")

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertex_count}, {sorted(self.edges)})"


def is_connected(gr: SimpleGraph) -> bool:
    if gr.vertex_count == 0:
        return True
    adj = gr.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == gr.vertex_count


def lambda2_graph(gr: SimpleGraph) -> SimpleGraph:
    """Graph on unordered vertex pairs; {a,b} ~ {a,c} iff b != c and b ~ c."""
    pairs = list(combinations(range(gr.vertex_count), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for b, c in gr.edges:
        for a in range(gr.vertex_count):
            if a == b or a == c:
                continue
            pa = index[(min(a, b), max(a, b))]
            pb = index[(min(a, c), max(a, c))]
            edges.append((pa, pb))
    return SimpleGraph(len(pairs), edges)


def s2_graph(gr: SimpleGraph) -> SimpleGraph:
    """Same on pairs with repetition, so {a} ~ {a,b} iff a ~ b too."""
    n = gr.vertex_count
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for b, c in gr.edges:
        for a in range(n):
            pa = index[(min(a, b), max(a, b))]
            pb = index[(min(a, c), max(a, c))]
            if pa != pb:
                edges.append((pa, pb))
    return SimpleGraph(len(pairs), edges)
