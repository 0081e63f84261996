"""Immutable undirected simple graphs on integer vertex ids 0..n-1.

The whole library works on this one representation: a tuple of frozen
neighbor sets.  Vertices are always contiguous ints; labels (if any) live
at the CLI layer, never here.
"""
from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable


class GraphInputError(ValueError):
    """Raised when edges/vertex ids don't form a valid simple graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


@dataclass(frozen=True)
class SmallestLastResult:
    """Vertex elimination order plus each vertex's degree at removal time.

    order[i] is the i-th vertex removed; residual_degrees[i] its degree in
    the graph induced by order[i:].
    """
    order: tuple[int, ...]
    residual_degrees: tuple[int, ...]


@dataclass(frozen=True)
class InducedSubgraph:
    """remove_vertices result: the surviving graph plus the id translation."""
    graph: Graph
    old_of: tuple[int, ...]        # new id -> old id (sorted ascending)
    new_of: dict[int, int]         # old id -> new id


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Rejects negative n, self-loops and out-of-range endpoints (reporting the
    offending edge); duplicate edges are merged silently.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be >= 0, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphInputError(f"self-loop ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(frozenset(a) for a in nbrs)
    m = sum(len(a) for a in adj) // 2
    return Graph(n=n, adj=adj, m=m)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N[S]: the vertices of S together with every neighbor of S."""
    out = set(s)
    for v in tuple(out):
        out.update(g.adj[v])
    return frozenset(out)


def remove_vertices(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph on V \\ S, with ids compacted to 0..n'-1."""
    drop = set(s)
    keep = [v for v in range(g.n) if v not in drop]
    new_of = {old: new for new, old in enumerate(keep)}
    adj = tuple(frozenset(new_of[u] for u in g.adj[old] if u not in drop)
                for old in keep)
    m = sum(len(a) for a in adj) // 2
    return InducedSubgraph(Graph(len(keep), adj, m), tuple(keep), new_of)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of connected components, each sorted, in smallest-id order."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comp.sort()
        comps.append(comp)
    return comps


def is_forest(g: Graph) -> bool:
    # acyclic <=> every component has |edges| = |vertices| - 1
    return g.m == g.n - len(connected_components(g))


# ── smallest-last elimination ────────────────────────────────────────────────

def smallest_last_order(g: Graph) -> SmallestLastResult:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Bucketed by degree; each bucket is a heap of vertex ids so the tie-break
    is exact.  A vertex is re-pushed on every degree change and stale entries
    are skipped lazily, so the work is O((V+E) log V).
    """
    n = g.n
    if n == 0:
        return SmallestLastResult((), ())
    deg = [len(a) for a in g.adj]
    buckets: list[list[int]] = [[] for _ in range(max(deg) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    for b in buckets:
        heapify(b)
    removed = [False] * n
    order: list[int] = []
    resid: list[int] = []
    d = 0
    for _ in range(n):
        if d > 0:
            d -= 1   # removing a min-degree vertex can lower the minimum by at most 1
        while True:
            b = buckets[d] if d < len(buckets) else []
            while b and (removed[b[0]] or deg[b[0]] != d):
                heappop(b)   # stale entry
            if b:
                break
            d += 1
        v = heappop(buckets[d])
        removed[v] = True
        order.append(v)
        resid.append(d)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heappush(buckets[deg[u]], u)
    return SmallestLastResult(tuple(order), tuple(resid))
