"""Degenerate degree (zeta) profiles, cheap vertices, and layer decompositions.

zeta(v) is the largest minimum degree over all induced subgraphs containing v
— equivalently v's coreness.  It is computed in near-linear time from a
smallest-last elimination: walking the order backwards, zeta of the next
vertex is the running maximum of residual degrees seen so far.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, SmallestLastResult, remove_vertices, smallest_last_order


@dataclass(frozen=True)
class ZetaProfile:
    zeta: tuple[int, ...]          # indexed by vertex id
    degeneracy: int                # max zeta; 0 for the empty/edgeless graph
    order: SmallestLastResult


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[frozenset[int], ...]   # layers[0] is the first stripped set
    layer_of: tuple[int, ...]            # vertex -> index into layers


def zeta_profile(g: Graph) -> ZetaProfile:
    """zeta for every vertex via the smallest-last prefix-max recurrence."""
    sl = smallest_last_order(g)
    zeta = [0] * g.n
    running = 0
    for v, d in zip(sl.order, sl.residual_degrees):
        running = max(running, d)
        zeta[v] = running
    return ZetaProfile(tuple(zeta), running if g.n else 0, sl)


def zeta_oracle(g: Graph) -> tuple[int, ...]:
    """Independent zeta computation by threshold peeling (no elimination order).

    For d = 1, 2, ...: iteratively delete every vertex of degree < d; survivors
    have zeta >= d.  Deliberately a separate code path from zeta_profile so the
    two can cross-check each other.
    """
    alive = [True] * g.n
    deg = [len(a) for a in g.adj]
    zeta = [0] * g.n
    remaining = g.n
    d = 1
    while remaining > 0:
        queue = [v for v in range(g.n) if alive[v] and deg[v] < d]
        while queue:
            v = queue.pop()
            if not alive[v]:
                continue
            alive[v] = False
            remaining -= 1
            for u in g.adj[v]:
                if alive[u]:
                    deg[u] -= 1
                    if deg[u] < d:
                        queue.append(u)
        for v in range(g.n):
            if alive[v]:
                zeta[v] = d
        d += 1
    return tuple(zeta)


def is_zeta_regular(g: Graph, profile: ZetaProfile | None = None) -> bool:
    """True when every vertex has the same zeta (degeneracy == min degree)."""
    prof = profile or zeta_profile(g)
    if g.n == 0:
        return True
    return all(z == prof.zeta[0] for z in prof.zeta)


def cheap_vertices(g: Graph, profile: ZetaProfile | None = None) -> frozenset[int]:
    """Vertices u with zeta(u) == deg(u) and zeta(u) minimal on N[u].

    Every minimum-degree vertex qualifies, so the set is nonempty whenever
    the graph is.
    """
    prof = profile or zeta_profile(g)
    z = prof.zeta
    out = set()
    for u in range(g.n):
        if z[u] != len(g.adj[u]):
            continue
        if all(z[u] <= z[v] for v in g.adj[u]):
            out.add(u)
    return frozenset(out)


def layer_decomposition(g: Graph) -> LayerDecomposition:
    """Iteratively strip the cheap vertices; zeta is recomputed per residual.

    layers[i] holds original vertex ids removed at step i+1; every vertex is
    assigned a layer because each nonempty residual has a cheap vertex.
    """
    layers: list[frozenset[int]] = []
    layer_of = [-1] * g.n
    work = g
    old_of = tuple(range(g.n))
    while work.n:
        cheap = cheap_vertices(work)
        original = frozenset(old_of[v] for v in cheap)
        for v in original:
            layer_of[v] = len(layers)
        layers.append(original)
        sub = remove_vertices(work, cheap)
        work = sub.graph
        old_of = tuple(old_of[o] for o in sub.old_of)
    return LayerDecomposition(tuple(layers), tuple(layer_of))
