"""Lower bounds on k-independence numbers from the zeta profile.

All arithmetic below is exact (fractions.Fraction); nothing here ever rounds.
The headline quantity is

    Z_k(G) = sum_v min{1, 1/(zeta(v) + 1/k)}        (k >= 1)

which lower-bounds the (k-1)-independence number.  The "strong" variants
replace the +1/k shift by a per-subset lambda derived from an independent set
of cheap vertices; lambda may be negative, which is where they beat Z_k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .degeneracy import ZetaProfile, cheap_vertices, zeta_profile
from .graph import Graph, GraphInputError, closed_neighborhood, is_forest


@dataclass(frozen=True)
class Inapplicable:
    """Marker for a bound whose hypotheses fail on this graph."""
    reason: str


BoundValue = Fraction | Inapplicable


@dataclass(frozen=True)
class ComponentLambda:
    """One connected piece of the bipartite graph between S and N(S).

    s/t count the S-side and neighbor-side vertices, e the edges between
    them; lam = 1 - e/s + t/s.
    """
    vertices: frozenset[int]
    s: int
    t: int
    e: int
    lam: Fraction


@dataclass(frozen=True)
class GroupedBound:
    value: Fraction
    subset: frozenset[int]
    lam: Fraction
    group_zeta: int


def z_bound(g: Graph, k: int, profile: ZetaProfile | None = None) -> Fraction:
    """Z_k: certified lower bound on the (k-1)-independence number."""
    if k < 1:
        raise GraphInputError(f"z_bound index must be >= 1, got {k}")
    zeta = (profile or zeta_profile(g)).zeta
    shift = Fraction(1, k)
    return sum((min(Fraction(1), 1 / (z + shift)) for z in zeta), Fraction(0))


def caro_wei(g: Graph) -> Fraction:
    """Classical degree-based bound sum 1/(deg(v)+1); Z_1 always dominates it."""
    return sum((Fraction(1, len(a) + 1) for a in g.adj), Fraction(0))


def turan_zeta(g: Graph, profile: ZetaProfile | None = None) -> Fraction:
    """n / (mean zeta + 1) — the averaged form of Z_1 (Z_1 dominates it)."""
    if g.n == 0:
        raise GraphInputError("turan_zeta needs at least one vertex")
    zeta = (profile or zeta_profile(g)).zeta
    mean = Fraction(sum(zeta), g.n)
    return Fraction(g.n) / (mean + 1)


def baseline_bounds(g: Graph) -> dict[str, BoundValue]:
    """Literature baselines for comparison tables: never certified here.

    ch_a1 = 2n/(ceil(dbar)+2), ch_a2 = 3n/(dbar+3), and caro_tuza_a1 =
    sum 3/(2(deg+1)) which requires minimum degree >= 2.
    """
    if g.n == 0:
        raise GraphInputError("baseline_bounds needs at least one vertex")
    dbar = Fraction(2 * g.m, g.n)
    out: dict[str, BoundValue] = {
        "ch_a1": Fraction(2 * g.n, math.ceil(dbar) + 2),
        "ch_a2": Fraction(3 * g.n) / (dbar + 3),
    }
    if min(len(a) for a in g.adj) >= 2:
        out["caro_tuza_a1"] = sum(
            (Fraction(3, 2 * (len(a) + 1)) for a in g.adj), Fraction(0))
    else:
        out["caro_tuza_a1"] = Inapplicable("requires minimum degree >= 2")
    return out


# ── lambda machinery over independent sets of cheap vertices ────────────────

def _check_cheap_independent(g: Graph, profile: ZetaProfile, s: frozenset[int]) -> None:
    if not s:
        raise GraphInputError("subset must be nonempty")
    cheap = cheap_vertices(g, profile)
    stray = s - cheap
    if stray:
        raise GraphInputError(f"vertices {sorted(stray)} are not cheap")
    for u in s:
        hit = g.adj[u] & s
        if hit:
            raise GraphInputError(f"subset is not independent: edge ({u},{min(hit)})")


def component_lambdas(g: Graph, profile: ZetaProfile,
                      s: frozenset[int]) -> list[ComponentLambda]:
    """Split the bipartite graph (S, N(S)) into components and compute lambda.

    Only S-to-N(S) edges count; edges inside N(S) are ignored.  Components are
    returned in order of their smallest vertex id.
    """
    _check_cheap_independent(g, profile, s)
    seen: set[int] = set()
    comps: list[ComponentLambda] = []
    for root in sorted(s):
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        members: set[int] = set()
        while stack:
            v = stack.pop()
            members.add(v)
            nxt = g.adj[v] if v in s else (g.adj[v] & s)
            for u in nxt:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        side_s = members & s
        side_t = members - s
        e = sum(len(g.adj[v]) for v in side_s)   # S is independent: all edges leave S
        s_n, t_n = len(side_s), len(side_t)
        lam = 1 - Fraction(e, s_n) + Fraction(t_n, s_n)
        comps.append(ComponentLambda(frozenset(members), s_n, t_n, e, lam))
    return comps


def strong_bound_component(g: Graph, profile: ZetaProfile,
                           s: frozenset[int]) -> BoundValue:
    """Per-component lambda-strengthened bound on the independence number.

    Requires every component lambda to be nonnegative; otherwise reports
    Inapplicable (a negative component lambda breaks the averaging argument
    in this per-component form).
    """
    comps = component_lambdas(g, profile, s)
    neg = [c for c in comps if c.lam < 0]
    if neg:
        worst = min(neg, key=lambda c: c.lam)
        return Inapplicable(
            f"component with lambda {worst.lam} < 0 (vertices {sorted(worst.vertices)[:6]}...)")
    zeta = profile.zeta
    covered: set[int] = set()
    total = Fraction(0)
    for c in comps:
        covered |= c.vertices
        total += sum((1 / (zeta[v] + c.lam) for v in c.vertices), Fraction(0))
    total += sum((Fraction(1, zeta[v] + 1) for v in range(g.n) if v not in covered),
                 Fraction(0))
    return total


def select_dense_subset(g: Graph, s: frozenset[int]) -> frozenset[int]:
    """Peel lowest-degree members off S and keep the prefix minimizing lambda.

    lambda(S') = 1 + (|N(S')| - e(S'))/|S'|; ties keep the largest subset.
    Because S is independent, a member's degree into N(S') is just its graph
    degree, so the peeling order is static: ascending (degree, id).
    """
    if not s:
        raise GraphInputError("subset must be nonempty")
    order = sorted(s, key=lambda v: (len(g.adj[v]), v))
    cnt = {v: 0 for v in closed_neighborhood(g, s) - s}
    for u in order:
        for v in g.adj[u]:
            cnt[v] += 1
    nsize = len(cnt)
    e = sum(len(g.adj[u]) for u in order)
    best_j = 0
    best_lam = None
    for j in range(len(order)):
        size = len(order) - j
        lam = 1 + Fraction(nsize - e, size)
        if best_lam is None or lam < best_lam:
            best_lam, best_j = lam, j
        u = order[j]          # peel u and move to the next suffix
        e -= len(g.adj[u])
        for v in g.adj[u]:
            cnt[v] -= 1
            if cnt[v] == 0:
                nsize -= 1
    return frozenset(order[best_j:])


def independent_cheap_set(g: Graph, profile: ZetaProfile | None = None) -> frozenset[int]:
    """Greedy maximal independent subset of the cheap vertices.

    Min-degree-first (degree inside the induced cheap subgraph), smallest id
    on ties — the same construction the certified greedy uses each round.
    """
    prof = profile or zeta_profile(g)
    cheap = cheap_vertices(g, prof)
    alive = set(cheap)
    deg = {u: len(g.adj[u] & cheap) for u in cheap}
    out = set()
    while alive:
        u = min(alive, key=lambda v: (deg[v], v))
        out.add(u)
        dead = (g.adj[u] & alive) | {u}
        for w in dead:
            alive.discard(w)
        for w in dead:
            for x in g.adj[w]:
                if x in alive:
                    deg[x] -= 1
    return frozenset(out)


def strong_bound_grouped(g: Graph, profile: ZetaProfile | None = None) -> GroupedBound | Inapplicable:
    """Group cheap vertices by zeta, pick the group subset of minimal lambda.

    Within each zeta-class: greedy maximal independent subset, then
    select_dense_subset.  The minimum-lambda subset is used for the bound;
    inapplicable when that lambda makes a denominator nonpositive.
    """
    if g.n == 0:
        return Inapplicable("empty graph")
    prof = profile or zeta_profile(g)
    zeta = prof.zeta
    cheap = cheap_vertices(g, prof)
    groups: dict[int, set[int]] = {}
    for u in cheap:
        groups.setdefault(zeta[u], set()).add(u)

    best: tuple[Fraction, int, frozenset[int]] | None = None
    for zval in sorted(groups):
        grp = frozenset(groups[zval])
        seed = _greedy_mis_induced(g, grp)
        subset = select_dense_subset(g, seed)
        nbhd = closed_neighborhood(g, subset) - subset
        e = sum(len(g.adj[u]) for u in subset)
        lam = 1 + Fraction(len(nbhd) - e, len(subset))
        if best is None or lam < best[0]:
            best = (lam, zval, subset)
    assert best is not None
    lam, zval, subset = best
    closed = closed_neighborhood(g, subset)
    low = min(zeta[v] for v in closed)
    if low + lam <= 0:
        return Inapplicable(
            f"lambda {lam} yields nonpositive denominator on N[S] (min zeta {low})")
    value = sum((1 / (zeta[v] + lam) for v in closed), Fraction(0))
    value += sum((Fraction(1, zeta[v] + 1) for v in range(g.n) if v not in closed),
                 Fraction(0))
    return GroupedBound(value=value, subset=subset, lam=lam, group_zeta=zval)


def _greedy_mis_induced(g: Graph, pool: frozenset[int]) -> frozenset[int]:
    """Greedy maximal independent set inside G[pool], min-degree-first."""
    alive = set(pool)
    deg = {u: len(g.adj[u] & pool) for u in pool}
    out = set()
    while alive:
        u = min(alive, key=lambda v: (deg[v], v))
        out.add(u)
        dead = (g.adj[u] & alive) | {u}
        for w in dead:
            alive.discard(w)
        for w in dead:
            for x in g.adj[w]:
                if x in alive:
                    deg[x] -= 1
    return frozenset(out)


def forest_z_closed_form(n: int, isolated: int, k: int) -> Fraction:
    """Closed form of Z_{k+1} on a forest with `isolated` degree-0 vertices."""
    if n < 0 or isolated < 0 or isolated > n or k < 0:
        raise GraphInputError("need 0 <= isolated <= n and k >= 0")
    return Fraction((n - isolated) * (k + 1), k + 2) + isolated


def full_bound_report(g: Graph, profile: ZetaProfile | None = None) -> dict[str, BoundValue]:
    """Every bound this library knows, keyed by its report name.

    forest_zk is the forest closed form at k=1 (it must equal z2 exactly on
    forests — kept as a cross-check witness, inapplicable elsewhere).
    """
    prof = profile or zeta_profile(g)
    report: dict[str, BoundValue] = {
        "z1": z_bound(g, 1, prof),
        "z2": z_bound(g, 2, prof),
        "z3": z_bound(g, 3, prof),
        "caro_wei": caro_wei(g),
    }
    if g.n == 0:
        report["turan_zeta"] = Inapplicable("empty graph")
        report["strong_component"] = Inapplicable("empty graph")
        report["strong_grouped"] = Inapplicable("empty graph")
        report["caro_tuza_a1"] = Inapplicable("empty graph")
        report["ch_a1"] = Inapplicable("empty graph")
        report["ch_a2"] = Inapplicable("empty graph")
        report["forest_zk"] = Inapplicable("empty graph")
        return report
    report["turan_zeta"] = turan_zeta(g, prof)
    report["strong_component"] = strong_bound_component(
        g, prof, independent_cheap_set(g, prof))
    grouped = strong_bound_grouped(g, prof)
    report["strong_grouped"] = grouped if isinstance(grouped, Inapplicable) else grouped.value
    report.update(baseline_bounds(g))
    if is_forest(g):
        isolated = sum(1 for a in g.adj if not a)
        report["forest_zk"] = forest_z_closed_form(g.n, isolated, 1)
    else:
        report["forest_zk"] = Inapplicable("not a forest")
    return report
