"""Stochastic block model and Erdős–Rényi generators.

Each unordered vertex pair is present independently with the block-dependent
probability. Pairs inside a block (and across each block pair) are sampled
with geometric gap skipping, so generation costs O(edges) instead of
enumerating the quadratic pair space. Every block pair draws from its own
RNG stream derived from the top-level seed, which makes the output
independent of block iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, _graph_from_edge_arrays

__all__ = ["SbmSpec", "sbm", "erdos_renyi"]

# n*n must stay well inside int64 when inter-block pairs are sampled
VERTEX_CAP = 2**31


@dataclass(frozen=True)
class SbmSpec:
    """Parameters of a planted-partition random graph."""

    k: int
    cluster_size: int
    p: float
    q: float
    rng_seed: int = 0

    def __post_init__(self):
        if self.k < 1 or self.cluster_size < 1:
            raise ValueError("k and cluster_size must be at least 1")
        if not (0.0 <= self.p <= 1.0 and 0.0 <= self.q <= 1.0):
            raise ValueError("p and q must be probabilities")

    @property
    def n(self) -> int:
        return self.k * self.cluster_size


def _block_rng(seed: int, a: int, b: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(a, b)))


def _sample_positions(rng: np.random.Generator, m: int, prob: float) -> np.ndarray:
    """Sorted positions of successes among ``m`` Bernoulli(prob) trials."""
    if prob <= 0.0 or m == 0:
        return np.array([], dtype=np.int64)
    out = []
    pos = -1
    batch = max(int(m * prob * 1.2) + 16, 16)
    while pos < m:
        gaps = rng.geometric(prob, size=batch)
        positions = pos + np.cumsum(gaps)
        out.append(positions)
        pos = int(positions[-1])
    positions = np.concatenate(out)
    return positions[positions < m]


def _intra_block_edges(rng, size: int, prob: float, offset: int):
    """Edges among the ``size`` vertices of one block, IDs offset globally."""
    m = size * (size - 1) // 2
    t = _sample_positions(rng, m, prob)
    if t.size == 0:
        return t, t
    # pair #t in the row-major upper triangle: row boundaries are cumulative
    # counts of (size-1-i) entries per row i
    counts = np.arange(size - 1, 0, -1, dtype=np.int64)
    bounds = np.cumsum(counts)
    i = np.searchsorted(bounds, t, side="right")
    prev = np.where(i > 0, bounds[np.maximum(i - 1, 0)], 0)
    j = t - prev + i + 1
    return i + offset, j + offset


def _inter_block_edges(rng, size_a: int, size_b: int, prob: float, off_a: int, off_b: int):
    m = size_a * size_b
    t = _sample_positions(rng, m, prob)
    if t.size == 0:
        return t, t
    return t // size_b + off_a, t % size_b + off_b


def sbm(spec: SbmSpec) -> tuple[Graph, np.ndarray]:
    """Sample a graph from the block model along with its planted labels.

    Vertex ``i`` belongs to cluster ``i // cluster_size``; edges have unit
    weight and there are no self-loops. Deterministic for a fixed spec.
    """
    n = spec.n
    if spec.q > 0 and n > VERTEX_CAP:
        raise OverflowError(f"n={n} exceeds the generator cap {VERTEX_CAP}")
    if spec.cluster_size > VERTEX_CAP:
        raise OverflowError(f"cluster_size exceeds the generator cap {VERTEX_CAP}")
    us, vs = [], []
    s = spec.cluster_size
    for a in range(spec.k):
        rng = _block_rng(spec.rng_seed, a, a)
        eu, ev = _intra_block_edges(rng, s, spec.p, a * s)
        us.append(eu)
        vs.append(ev)
        for b in range(a + 1, spec.k):
            rng = _block_rng(spec.rng_seed, a, b)
            eu, ev = _inter_block_edges(rng, s, s, spec.q, a * s, b * s)
            us.append(eu)
            vs.append(ev)
    us = np.concatenate(us) if us else np.array([], dtype=np.int64)
    vs = np.concatenate(vs) if vs else np.array([], dtype=np.int64)
    labels = np.repeat(np.arange(spec.k, dtype=np.int64), s)
    graph = _graph_from_edge_arrays(
        us.astype(np.int64), vs.astype(np.int64), np.ones(len(us)), n_min=n
    )
    return graph, labels


def erdos_renyi(n: int, p: float, rng_seed: int = 0) -> Graph:
    """G(n, p) random graph; a one-block special case of the block model."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return _graph_from_edge_arrays(
            np.array([], dtype=np.int64), np.array([], dtype=np.int64), np.array([])
        )
    graph, _ = sbm(SbmSpec(k=1, cluster_size=n, p=p, q=0.0, rng_seed=rng_seed))
    return graph
