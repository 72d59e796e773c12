"""Shared test utilities: oracles and instrumented graph wrappers."""

from __future__ import annotations

import numpy as np

from localgraph import Graph, LocalGraph, graph_from_edges


class InstrumentedGraph(LocalGraph):
    """LocalGraph wrapper that logs every query it answers.

    Deliberately does not expose ``total_volume`` so algorithms treat it as
    a purely local backend.
    """

    def __init__(self, g: LocalGraph):
        self._g = g
        self.log: list[tuple[str, int]] = []

    def neighbors(self, v):
        self.log.append(("neighbors", v))
        return self._g.neighbors(v)

    def degree(self, v):
        self.log.append(("degree", v))
        return self._g.degree(v)

    def vertex_exists(self, v):
        self.log.append(("exists", v))
        return self._g.vertex_exists(v)


def random_connected_graph(rng: np.random.Generator, n: int,
                           extra_edges: int | None = None,
                           weighted: bool = False) -> Graph:
    """Random tree plus extra edges: connected, no self-loops, no zero degrees."""
    edges = {}
    for v in range(1, n):
        u = int(rng.integers(v))
        w = float(rng.uniform(0.1, 3.0)) if weighted else 1.0
        edges[(u, v)] = w
    if extra_edges is None:
        extra_edges = n
    for _ in range(extra_edges):
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in edges:
            edges[key] = float(rng.uniform(0.1, 3.0)) if weighted else 1.0
    return graph_from_edges([(u, v, w) for (u, v), w in edges.items()])


def lazy_walk_matrix(g: Graph) -> np.ndarray:
    """Column-stochastic lazy walk (I + A D^{-1}) / 2 built from neighbor views."""
    n = g.n
    m = np.zeros((n, n))
    for v in range(n):
        d = g.degree(v)
        for u, w in g.neighbors(v):
            m[u, v] += w / d
    return (np.eye(n) + m) / 2.0


def exact_ppr(g: Graph, source: np.ndarray, alpha: float) -> np.ndarray:
    """Dense solve of ``p = alpha * source + (1 - alpha) * W p``."""
    w = lazy_walk_matrix(g)
    return np.linalg.solve(np.eye(g.n) - (1.0 - alpha) * w, alpha * source)


def as_vector(d: dict[int, float], n: int) -> np.ndarray:
    vec = np.zeros(n)
    for k, v in d.items():
        vec[k] = v
    return vec


def brute_force_sweep(g: Graph, p: dict[int, float]):
    """Independent quadratic-time re-scan of every sweep prefix.

    Returns ``(conductance, prefix)`` for the minimum-conductance prefix
    under the same ordering and tie rules the sweep implements.
    """
    support = [v for v, pv in p.items() if pv > 0]
    order = sorted(support, key=lambda v: (-p[v] / g.degree(v), v))
    total = g.total_volume()
    best = None
    for i in range(1, len(order) + 1):
        prefix = order[:i]
        vol = sum(g.degree(v) for v in prefix)
        denom = min(vol, total - vol)
        if denom <= 0:
            continue
        inside = set(prefix)
        phi = sum(
            w for u in prefix for v, w in g.neighbors(u) if v != u and v not in inside
        ) / denom
        if best is None or phi < best[0]:
            best = (phi, prefix)
    return best
