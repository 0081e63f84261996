"""Certified greedy algorithms for k-independent sets.

Every algorithm follows the same round structure: strip isolated vertices
(each is worth exactly 1), find a cheap structure S in the working graph,
bank its exact-rational contribution, delete N[S], repeat.  The banked
certificate is a true lower bound on the optimum, and the chosen set always
has at least ceil(certificate) vertices — that invariant is what makes these
greedies "certified" rather than heuristic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bounds import (GroupedBound, component_lambdas, independent_cheap_set,
                     strong_bound_grouped)
from .cheap_sets import (CheapSet, cheap_weight, find_1_cheap, find_2_cheap,
                         find_k_cheap_forest)
from .degeneracy import ZetaProfile, cheap_vertices, zeta_profile
from .graph import Graph, GraphInputError, closed_neighborhood, is_forest, remove_vertices


@dataclass(frozen=True)
class TraceStep:
    kind: str
    picked: tuple[int, ...]         # original vertex ids added this round
    removed: tuple[int, ...]        # original vertex ids deleted this round
    contribution: Fraction
    lam: Fraction | None = None


@dataclass(frozen=True)
class GreedyRun:
    chosen: frozenset[int]
    certificate: Fraction
    level: int                      # max degree allowed inside the chosen set
    trace: tuple[TraceStep, ...]
    anomalies: tuple[dict, ...] = ()


def _strip_isolated(work: Graph, old: tuple[int, ...], chosen: set[int],
                    trace: list[TraceStep]) -> tuple[Graph, tuple[int, ...], Fraction]:
    iso = [v for v in range(work.n) if not work.adj[v]]
    if not iso:
        return work, old, Fraction(0)
    orig = tuple(sorted(old[v] for v in iso))
    chosen.update(orig)
    trace.append(TraceStep("isolated-block", orig, orig, Fraction(len(iso))))
    sub = remove_vertices(work, iso)
    return sub.graph, tuple(old[o] for o in sub.old_of), Fraction(len(iso))


def _run_with_finder(g: Graph, level: int,
                     finder: Callable[[Graph, ZetaProfile], CheapSet],
                     anomalies: list | None = None) -> GreedyRun:
    work, old = g, tuple(range(g.n))
    chosen: set[int] = set()
    cert = Fraction(0)
    trace: list[TraceStep] = []
    while work.n:
        work, old, got = _strip_isolated(work, old, chosen, trace)
        cert += got
        if work.n == 0:
            break
        prof = zeta_profile(work)
        cs = finder(work, prof)
        nbhd = closed_neighborhood(work, cs.vertices)
        contribution = cheap_weight(work, prof.zeta, cs.vertices, level)
        picked = tuple(sorted(old[v] for v in cs.vertices))
        removed = tuple(sorted(old[v] for v in nbhd))
        chosen.update(picked)
        cert += contribution
        trace.append(TraceStep(cs.kind, picked, removed, contribution))
        sub = remove_vertices(work, nbhd)
        work, old = sub.graph, tuple(old[o] for o in sub.old_of)
    return GreedyRun(frozenset(chosen), cert, level, tuple(trace),
                     tuple(anomalies) if anomalies else ())


def min_greedy(g: Graph, seed: int | None = None) -> GreedyRun:
    """Independent set: repeatedly take a minimum-degree vertex, drop N[v].

    Deterministic smallest-id tie-break by default; pass a seed for a
    randomized tie-break among the minimum-degree vertices.
    """
    rng = random.Random(seed) if seed is not None else None

    def pick(work: Graph, prof: ZetaProfile) -> CheapSet:
        degs = work.degrees()
        low = min(degs)
        pool = [v for v in range(work.n) if degs[v] == low]
        v = rng.choice(pool) if rng is not None else pool[0]
        return CheapSet(frozenset({v}), 0, "single-cheap")

    return _run_with_finder(g, 0, pick)


def cheap_greedy(g: Graph) -> GreedyRun:
    """Independent set certified by lambda-strengthened accounting.

    Each round builds two candidates: S1, a maximal independent subset of the
    cheap vertices accounted per bipartite component, and S2, the grouped
    minimum-lambda subset.  The smaller applicable lambda wins (S1 on ties);
    if neither applies, a single cheap vertex still banks at least its own
    weight.  The certificate is >= Z_1 of the input.
    """
    work, old = g, tuple(range(g.n))
    chosen: set[int] = set()
    cert = Fraction(0)
    trace: list[TraceStep] = []
    while work.n:
        work, old, got = _strip_isolated(work, old, chosen, trace)
        cert += got
        if work.n == 0:
            break
        prof = zeta_profile(work)
        zeta = prof.zeta

        s1 = independent_cheap_set(work, prof)
        comps = component_lambdas(work, prof, s1)
        lam1 = min((c.lam for c in comps), default=None)
        s1_ok = lam1 is not None and all(c.lam >= 0 for c in comps)

        grouped = strong_bound_grouped(work, prof)
        s2_ok = isinstance(grouped, GroupedBound)

        if s2_ok and (not s1_ok or grouped.lam < lam1):
            s, lam, kind = grouped.subset, grouped.lam, "grouped-lambda"
            nbhd = closed_neighborhood(work, s)
            contribution = sum((1 / (zeta[v] + lam) for v in nbhd), Fraction(0))
        elif s1_ok:
            s, lam, kind = s1, lam1, "component-lambda"
            nbhd = closed_neighborhood(work, s)
            contribution = sum((sum((1 / (zeta[v] + c.lam) for v in c.vertices),
                                    Fraction(0)) for c in comps), Fraction(0))
        else:
            u = min(cheap_vertices(work, prof))
            s, lam, kind = frozenset({u}), None, "single-cheap"
            nbhd = closed_neighborhood(work, s)
            contribution = sum((Fraction(1, zeta[v] + 1) for v in nbhd), Fraction(0))

        picked = tuple(sorted(old[v] for v in s))
        removed = tuple(sorted(old[v] for v in nbhd))
        chosen.update(picked)
        cert += contribution
        trace.append(TraceStep(kind, picked, removed, contribution, lam))
        sub = remove_vertices(work, nbhd)
        work, old = sub.graph, tuple(old[o] for o in sub.old_of)
    return GreedyRun(frozenset(chosen), cert, 0, tuple(trace))


def one_cheap_greedy(g: Graph) -> GreedyRun:
    """1-independent set of size >= ceil(Z_2(G)) via 1-cheap sets."""
    return _run_with_finder(g, 1, find_1_cheap)


def two_cheap_greedy(g: Graph) -> GreedyRun:
    """2-independent set of size >= ceil(Z_3(G)) via 2-cheap sets.

    Any verifier rejections inside the 2-cheap search are surfaced on the
    run's anomalies field.
    """
    log: list = []

    def pick(work: Graph, prof: ZetaProfile) -> CheapSet:
        return find_2_cheap(work, prof, log)

    return _run_with_finder(g, 2, pick, anomalies=log)


def forest_k_greedy(g: Graph, k: int) -> GreedyRun:
    """k-independent set in a forest, size >= ceil(Z_{k+1}(G))."""
    if not is_forest(g):
        raise GraphInputError("forest_k_greedy requires a forest")

    def pick(work: Graph, prof: ZetaProfile) -> CheapSet:
        return find_k_cheap_forest(work, k, prof)

    return _run_with_finder(g, k, pick)
