"""Local clustering (approximate personalized PageRank + sweep cut) and
global spectral clustering.

The push procedure keeps two sparse vectors: the approximation ``p`` and the
residual ``r``, starting with all mass on the seed. Pushing a vertex ``u``
moves an ``alpha`` fraction of its residual into ``p(u)``, keeps half of the
remainder at ``u`` and spreads the other half across its neighbors in
proportion to edge weight. Vertices are processed from a FIFO queue and
enter it when their residual first reaches ``eps * degree``; on return every
vertex satisfies ``r(u) < eps * degree(u)``.

The graph is consulted one row at a time and only when a vertex actually
needs its neighborhood, so the same code runs against in-memory and
disk-backed graphs, touches only vertices near the seed, and computes
identical (p, r) vectors wherever the rows come from. The sweep stage then
orders the support by p/degree and returns the best prefix; see
``sweep_set`` for how prefixes are scored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import DONE, _NEED, _UCUR, push_loop, sweep_loop
from .errors import UnknownVertexError
from .graph import Graph, LocalGraph, normalized_laplacian

__all__ = [
    "PagerankPair",
    "SweepResult",
    "approximate_pagerank",
    "sweep_set",
    "acl_cluster_result",
    "local_cluster_acl",
    "local_cluster",
    "spectral_cluster",
    "DEFAULT_ALPHA",
]

DEFAULT_ALPHA = 1.0 / 2000.0


@dataclass
class PagerankPair:
    """Approximate PageRank vector and its residual, as sparse dicts."""

    p: dict[int, float]
    r: dict[int, float]


@dataclass
class SweepResult:
    """Minimum-conductance prefix of a sweep, with the full profile."""

    cluster: list[int]
    conductance: float
    profile: list[tuple[int, float]]


class _Frontier:
    """Lazily fetched, locally re-indexed view of the graph around a seed.

    Vertices get a dense local ID the first time they are seen; a vertex's
    row is fetched from the backing graph only when the push loop needs its
    degree or neighbors. Rows keep the backing graph's neighbor order so
    results do not depend on where the rows came from.
    """

    def __init__(self, g: LocalGraph, seed: int):
        self.g = g
        self.l2g = [seed]
        self.g2l = {seed: 0}
        self.cap = 1024
        self.ecap = 4096
        self.r = np.zeros(self.cap)
        self.p = np.zeros(self.cap)
        self.deg = np.zeros(self.cap)
        self.wmax = np.zeros(self.cap)
        self.has_row = np.zeros(self.cap, dtype=np.uint8)
        self.inqueue = np.zeros(self.cap, dtype=np.uint8)
        self.row_start = np.zeros(self.cap, dtype=np.int64)
        self.row_len = np.zeros(self.cap, dtype=np.int64)
        self.queue = np.zeros(self.cap, dtype=np.int64)
        self.cols = np.zeros(self.ecap, dtype=np.int64)
        self.wts = np.zeros(self.ecap)
        self.esize = 0
        self.sti = np.zeros(5, dtype=np.int64)
        self.sti[_UCUR] = -1
        self.stf = np.zeros(1)

    @property
    def n_local(self) -> int:
        return len(self.l2g)

    def _grow_vertices(self) -> None:
        old_cap = self.cap
        self.cap *= 2
        for name in ("r", "p", "deg", "wmax"):
            arr = np.zeros(self.cap)
            arr[:old_cap] = getattr(self, name)
            setattr(self, name, arr)
        for name, dtype in (("has_row", np.uint8), ("inqueue", np.uint8),
                            ("row_start", np.int64), ("row_len", np.int64)):
            arr = np.zeros(self.cap, dtype=dtype)
            arr[:old_cap] = getattr(self, name)
            setattr(self, name, arr)
        # re-linearize the ring buffer into the larger queue
        head, tail = self.sti[0], self.sti[1]
        count = (tail - head) % old_cap
        new_queue = np.zeros(self.cap, dtype=np.int64)
        if count:
            if head + count <= old_cap:
                new_queue[:count] = self.queue[head : head + count]
            else:
                first = old_cap - head
                new_queue[:first] = self.queue[head:]
                new_queue[first:count] = self.queue[: count - first]
        self.queue = new_queue
        self.sti[0] = 0
        self.sti[1] = count

    def _local_id(self, gid: int) -> int:
        lid = self.g2l.get(gid)
        if lid is None:
            lid = len(self.l2g)
            if lid + 1 >= self.cap:
                self._grow_vertices()
            self.g2l[gid] = lid
            self.l2g.append(gid)
        return lid

    def fetch(self, lid: int) -> None:
        """Pull one row from the backing graph into the local arrays."""
        row = self.g.neighbors(self.l2g[lid])
        need = len(row)
        while self.esize + need > self.ecap:
            self.ecap *= 2
            for name in ("cols", "wts"):
                arr = np.zeros(self.ecap, dtype=getattr(self, name).dtype)
                arr[: self.esize] = getattr(self, name)[: self.esize]
                setattr(self, name, arr)
        start = self.esize
        for i, (gid, w) in enumerate(row):
            self.cols[start + i] = self._local_id(int(gid))
            self.wts[start + i] = w
        self.esize += need
        self.row_start[lid] = start
        self.row_len[lid] = need
        self.deg[lid] = sum(w for _, w in row)
        self.has_row[lid] = 1

    def run_push(self, alpha: float, eps: float) -> None:
        self.fetch(0)
        if self.deg[0] <= 0:
            raise ValueError(f"seed vertex {self.l2g[0]} has degree 0")
        self.r[0] = 1.0
        if self.r[0] >= eps * self.deg[0]:
            self.queue[0] = 0
            self.inqueue[0] = 1
            self.sti[1] = 1
        while True:
            ret = push_loop(
                self.sti, self.stf, self.queue, self.inqueue, self.r, self.p,
                self.deg, self.has_row, self.wmax, self.row_start, self.row_len,
                self.cols, self.wts, alpha, eps, self.cap,
            )
            if ret == DONE:
                return
            self.fetch(int(self.sti[_NEED]))

    def row_entries(self, lid: int):
        lo = self.row_start[lid]
        hi = lo + self.row_len[lid]
        return zip(self.cols[lo:hi].tolist(), self.wts[lo:hi].tolist())


def _validate_params(alpha: float, epsilon: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")


def _start_frontier(g: LocalGraph, seed: int) -> _Frontier:
    seed = int(seed)
    if not g.vertex_exists(seed):
        raise UnknownVertexError(seed)
    return _Frontier(g, seed)


def approximate_pagerank(
    g: LocalGraph, seed: int, alpha: float, epsilon: float
) -> PagerankPair:
    """Run the push procedure from ``seed``; see the module docstring.

    Returns sparse ``(p, r)`` with ``r(u) < epsilon * degree(u)`` everywhere
    and ``sum(p) + sum(r)`` equal to 1 up to float rounding.
    """
    _validate_params(alpha, epsilon)
    fr = _start_frontier(g, seed)
    fr.run_push(alpha, epsilon)
    return PagerankPair(p=_sparse(fr, fr.p), r=_sparse(fr, fr.r))


def _sparse(fr: _Frontier, arr: np.ndarray) -> dict[int, float]:
    n = fr.n_local
    return {fr.l2g[i]: float(arr[i]) for i in np.nonzero(arr[:n] > 0)[0]}


# -- sweep -------------------------------------------------------------------


def _sweep_order(gids: np.ndarray, scores: np.ndarray) -> np.ndarray:
    """Indices sorting by score descending, smaller vertex ID on ties."""
    return np.lexsort((gids, -scores))


def _total_volume(g: LocalGraph) -> float:
    """Total graph volume when the backend can report it, else -1.

    In-memory graphs know their volume, so sweep prefixes are scored with
    the two-sided conductance (cut over the smaller side). A disk-backed or
    otherwise local-only graph cannot know it; there the prefix's own volume
    is the only denominator available.
    """
    fn = getattr(g, "total_volume", None)
    return float(fn()) if callable(fn) else -1.0


def _run_sweep(m: int, degs, rank_cols, rank_wts, row_ptr, total_vol) -> tuple[int, np.ndarray]:
    """Sweep in rank space: member ``i`` of the order has degree ``degs[i]``
    and neighbor entries encoded as ranks (``m`` meaning outside the support).
    Returns the first index attaining the minimum conductance."""
    conds = np.zeros(m)
    sweep_loop(
        np.arange(m, dtype=np.int64), np.arange(m + 1, dtype=np.int64), degs,
        row_ptr[:-1], np.diff(row_ptr), rank_cols, rank_wts, conds, total_vol,
    )
    best = int(np.argmin(conds))
    if not np.isfinite(conds[best]):
        raise ValueError("sweep found no prefix with positive denominator")
    return best, conds


def _scratch_conductance(members: list[int], inside: set[int], rows, total_vol: float) -> float:
    """Recompute the chosen prefix's conductance from scratch."""
    vol = sum(rows[u][1] for u in members)
    cut = 0.0
    for u in members:
        for v, w in rows[u][0]:
            if v != u and v not in inside:
                cut += w
    denom = vol if total_vol < 0.0 else min(vol, total_vol - vol)
    return cut / denom


def sweep_set(g: LocalGraph, p: dict[int, float]) -> SweepResult:
    """Minimum-conductance prefix of the support of ``p``.

    Support vertices are ordered by ``p(u)/degree(u)`` descending and each
    prefix's cut and volume are maintained incrementally, so the whole sweep
    inspects every support edge once. Prefixes are scored ``cut/vol`` when
    only local queries are available, and cut over the smaller side when the
    backend knows the total volume (see ``_total_volume``); ties go to the
    smaller vertex ID in the ordering and to the shorter prefix in the
    minimum.
    """
    support = [int(v) for v, pv in p.items() if pv > 0]
    if not support:
        raise ValueError("sweep requires a vector with nonempty support")
    rows: dict[int, tuple[list[tuple[int, float]], float]] = {}
    for v in support:
        nbrs = g.neighbors(v)
        deg = sum(w for _, w in nbrs)
        if deg <= 0:
            raise ValueError(f"support vertex {v} has degree 0")
        rows[v] = (nbrs, deg)
    gids = np.array(support, dtype=np.int64)
    degs = np.array([rows[v][1] for v in support])
    scores = np.array([p[v] for v in support]) / degs
    perm = _sweep_order(gids, scores)
    order_ids = [support[i] for i in perm]
    rank = {v: i for i, v in enumerate(order_ids)}
    m = len(order_ids)
    rank_cols, rank_wts, row_ptr = [], [], [0]
    for v in order_ids:
        for u, w in rows[v][0]:
            if u == v:
                continue
            rank_cols.append(rank.get(u, m))
            rank_wts.append(w)
        row_ptr.append(len(rank_cols))
    total_vol = _total_volume(g)
    best, conds = _run_sweep(
        m,
        degs[perm],
        np.array(rank_cols, dtype=np.int64),
        np.array(rank_wts),
        np.array(row_ptr, dtype=np.int64),
        total_vol,
    )
    cluster = order_ids[: best + 1]
    flat_rows = {u: (rows[u][0], rows[u][1]) for u in cluster}
    cond = _scratch_conductance(cluster, set(cluster), flat_rows, total_vol)
    return SweepResult(cluster, cond, [(i + 1, float(c)) for i, c in enumerate(conds)])


def acl_cluster_result(
    g: LocalGraph, seed: int, alpha: float, epsilon: float
) -> SweepResult:
    """Push from ``seed`` and sweep, reusing the rows the push fetched."""
    _validate_params(alpha, epsilon)
    fr = _start_frontier(g, seed)
    fr.run_push(alpha, epsilon)
    n = fr.n_local
    support = np.nonzero(fr.p[:n] > 0)[0]
    if support.size == 0:
        raise ValueError("sweep requires a vector with nonempty support")
    gids = np.array([fr.l2g[i] for i in support], dtype=np.int64)
    scores = fr.p[support] / fr.deg[support]
    perm = _sweep_order(gids, scores)
    order = support[perm]
    rank = np.full(n, len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    m = len(order)
    rank_cols, rank_wts, row_ptr = [], [], [0]
    for lid in order.tolist():
        for v, w in fr.row_entries(lid):
            if v == lid:
                continue
            rank_cols.append(int(rank[v]))
            rank_wts.append(w)
        row_ptr.append(len(rank_cols))
    total_vol = _total_volume(g)
    best, conds = _run_sweep(
        m,
        fr.deg[order],
        np.array(rank_cols, dtype=np.int64),
        np.array(rank_wts),
        np.array(row_ptr, dtype=np.int64),
        total_vol,
    )
    cluster_lids = order[: best + 1].tolist()
    cluster = [fr.l2g[i] for i in cluster_lids]
    rows = {
        fr.l2g[i]: ([(fr.l2g[v], w) for v, w in fr.row_entries(i)], float(fr.deg[i]))
        for i in cluster_lids
    }
    cond = _scratch_conductance(cluster, set(cluster), rows, total_vol)
    return SweepResult(cluster, cond, [(i + 1, float(c)) for i, c in enumerate(conds)])


def local_cluster_acl(g: LocalGraph, seed: int, alpha: float, epsilon: float) -> list[int]:
    """ACL local clustering; returns the cluster as a sorted ID list."""
    return sorted(acl_cluster_result(g, seed, alpha, epsilon).cluster)


def local_cluster(g: LocalGraph, seed: int, target_volume: float) -> list[int]:
    """Local clustering with defaults derived from a soft volume estimate.

    Uses ``alpha = 1/2000`` and ``epsilon = 1/(20 * target_volume)``. The
    target volume is a hint, not a constraint on the returned set.
    """
    if not target_volume > 0:
        raise ValueError(f"target_volume must be positive, got {target_volume}")
    return local_cluster_acl(g, seed, DEFAULT_ALPHA, 1.0 / (20.0 * target_volume))


# -- spectral clustering -------------------------------------------------------

_DENSE_EIG_LIMIT = 500


def spectral_cluster(g: Graph, k: int, rng_seed: int = 0) -> list[int]:
    """Partition all vertices into ``k`` clusters spectrally.

    Embeds vertices with the ``k`` smallest eigenvectors of the normalized
    Laplacian, row-normalizes, and runs k-means++ with a fixed RNG seed.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be between 1 and {g.n}, got {k}")
    if k == 1:
        return [0] * g.n
    lap = normalized_laplacian(g)
    if g.n <= _DENSE_EIG_LIMIT or k >= g.n - 1:
        vals, vecs = np.linalg.eigh(lap.toarray())
        embedding = vecs[:, :k]
    else:
        import scipy.sparse.linalg as spla

        try:
            vals, vecs = spla.eigsh(
                lap, k=k, which="SA", tol=1e-8, maxiter=1000,
                v0=np.full(g.n, 1.0 / np.sqrt(g.n)),
            )
        except spla.ArpackError as exc:
            from .errors import EigensolverError

            raise EigensolverError(f"eigensolver failed to converge: {exc}") from exc
        embedding = vecs[:, np.argsort(vals)]
    norms = np.linalg.norm(embedding, axis=1)
    norms[norms == 0] = 1.0
    embedding = embedding / norms[:, None]

    from sklearn.cluster import KMeans

    km = KMeans(
        n_clusters=k, init="k-means++", n_init=10, max_iter=300, tol=1e-6,
        random_state=rng_seed,
    )
    return [int(c) for c in km.fit_predict(embedding)]
