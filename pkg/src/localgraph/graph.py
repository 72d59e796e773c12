"""Core graph types and vertex-set statistics.

The in-memory :class:`Graph` stores an undirected weighted graph in
compressed sparse row form. The :class:`LocalGraph` base class is the
query contract shared with disk-backed graphs: local clustering needs
nothing beyond ``neighbors``/``degree`` lookups by vertex ID.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Iterable, Iterator

import numpy as np

from .errors import DuplicateEdgeError, UnknownVertexError

if TYPE_CHECKING:
    import scipy.sparse as sp

__all__ = [
    "LocalGraph",
    "Graph",
    "graph_from_edges",
    "volume",
    "cut_weight",
    "conductance",
    "local_conductance",
    "normalized_laplacian",
]


class LocalGraph(ABC):
    """Neighborhood-query capability needed by local algorithms.

    Implementations answer queries for one vertex at a time and never
    have to enumerate the whole vertex set. A self-loop is reported once
    in ``neighbors`` with its weight doubled, so that ``degree(v)`` always
    equals the sum of the weights returned by ``neighbors(v)``.
    """

    @abstractmethod
    def neighbors(self, v: int) -> list[tuple[int, float]]:
        """Return ``(neighbor, weight)`` pairs of ``v``."""

    @abstractmethod
    def degree(self, v: int) -> float:
        """Weighted degree of ``v``; self-loops count twice."""

    @abstractmethod
    def vertex_exists(self, v: int) -> bool:
        """Whether ``v`` is a vertex of this graph."""

    def neighbors_unweighted(self, v: int) -> list[int]:
        """Neighbor IDs of ``v``, in the same order as ``neighbors``."""
        return [u for u, _ in self.neighbors(v)]

    def degree_unweighted(self, v: int) -> int:
        """Number of neighbor entries of ``v``."""
        return len(self.neighbors(v))


class Graph(LocalGraph):
    """Immutable in-memory sparse undirected weighted graph.

    Adjacency is CSR: ``indices[indptr[v]:indptr[v+1]]`` are the neighbors
    of ``v`` with matching ``weights``. Rows are sorted by neighbor ID and
    every edge is stored in both endpoint rows; a self-loop is stored once
    with its raw weight. Instances are never mutated after construction.
    """

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray, weights: np.ndarray):
        self._n = int(n)
        self._indptr = indptr
        self._indices = indices
        self._weights = weights
        # degree counts a self-loop twice: row sum + one extra loop weight
        deg = np.zeros(self._n)
        if self._n > 0 and len(indices):
            rows = np.repeat(np.arange(self._n), np.diff(indptr))
            np.add.at(deg, rows, weights)
            loop_mask = indices == rows
            if loop_mask.any():
                np.add.at(deg, rows[loop_mask], weights[loop_mask])
        self._degrees = deg
        for arr in (self._indptr, self._indices, self._weights, self._degrees):
            arr.setflags(write=False)

    # -- basic properties -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def num_edges(self) -> int:
        """Number of distinct undirected edges (self-loops count once)."""
        loops = int(np.sum(self._indices == np.repeat(np.arange(self._n), np.diff(self._indptr))))
        return (len(self._indices) - loops) // 2 + loops

    def total_volume(self) -> float:
        return float(self._degrees.sum())

    # -- LocalGraph interface ---------------------------------------------

    def vertex_exists(self, v: int) -> bool:
        return 0 <= v < self._n

    def neighbors(self, v: int) -> list[tuple[int, float]]:
        if not self.vertex_exists(v):
            raise UnknownVertexError(v)
        lo, hi = self._indptr[v], self._indptr[v + 1]
        return [
            (int(u), float(w) if u != v else 2.0 * float(w))
            for u, w in zip(self._indices[lo:hi], self._weights[lo:hi])
        ]

    def neighbors_unweighted(self, v: int) -> list[int]:
        if not self.vertex_exists(v):
            raise UnknownVertexError(v)
        return [int(u) for u in self._indices[self._indptr[v] : self._indptr[v + 1]]]

    def degree(self, v: int) -> float:
        if not self.vertex_exists(v):
            raise UnknownVertexError(v)
        return float(self._degrees[v])

    def degree_unweighted(self, v: int) -> int:
        if not self.vertex_exists(v):
            raise UnknownVertexError(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    # -- bulk access -------------------------------------------------------

    def row(self, v: int) -> tuple[np.ndarray, np.ndarray]:
        """Raw CSR row of ``v`` (no self-loop doubling)."""
        lo, hi = self._indptr[v], self._indptr[v + 1]
        return self._indices[lo:hi], self._weights[lo:hi]

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield each undirected edge once as ``(u, v, w)`` with ``u <= v``."""
        for u in range(self._n):
            lo, hi = self._indptr[u], self._indptr[u + 1]
            for v, w in zip(self._indices[lo:hi], self._weights[lo:hi]):
                if u <= v:
                    yield u, int(v), float(w)

    def adjacency_matrix(self) -> "sp.csr_matrix":
        """Adjacency as ``scipy.sparse.csr_matrix`` with doubled diagonal.

        Row sums of the returned matrix equal the degree vector, which is
        the convention the Laplacian and random-walk operators rely on.
        """
        import scipy.sparse as sp

        a = sp.csr_matrix(
            (self._weights.copy(), self._indices.copy(), self._indptr.copy()),
            shape=(self._n, self._n),
        )
        a += sp.diags(a.diagonal())
        return a

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
            and np.array_equal(self._weights, other._weights)
        )

    def __hash__(self):
        return hash((self._n, len(self._indices)))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.num_edges()})"


def graph_from_edges(edges: Iterable[tuple[int, int, float]]) -> Graph:
    """Build a :class:`Graph` from ``(u, v, weight)`` triples.

    Both orientations of the same pair collapse to one undirected edge when
    the weights agree exactly; disagreeing weights raise
    :class:`DuplicateEdgeError`. Vertex IDs need not be contiguous — gaps
    become isolated vertices.
    """
    edge_list = list(edges)
    if not edge_list:
        return Graph(0, np.zeros(1, dtype=np.int64), np.array([], dtype=np.int64), np.array([]))
    us = np.fromiter((e[0] for e in edge_list), dtype=np.int64, count=len(edge_list))
    vs = np.fromiter((e[1] for e in edge_list), dtype=np.int64, count=len(edge_list))
    ws = np.fromiter((e[2] for e in edge_list), dtype=np.float64, count=len(edge_list))
    return _graph_from_edge_arrays(us, vs, ws)


def _graph_from_edge_arrays(
    us: np.ndarray, vs: np.ndarray, ws: np.ndarray, n_min: int = 0
) -> Graph:
    if us.size and (us.min() < 0 or vs.min() < 0):
        raise ValueError("vertex IDs must be non-negative")
    if ws.size and (not np.all(np.isfinite(ws)) or ws.min() <= 0):
        raise ValueError("edge weights must be positive and finite")
    if us.size == 0:
        n = max(n_min, 0)
        return Graph(n, np.zeros(n + 1, dtype=np.int64), np.array([], dtype=np.int64), np.array([]))
    lo = np.minimum(us, vs)
    hi = np.maximum(us, vs)
    order = np.lexsort((hi, lo))
    lo, hi, ws = lo[order], hi[order], ws[order]
    if lo.size > 1:
        same = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
        if same.any():
            conflict = same & (ws[1:] != ws[:-1])
            if conflict.any():
                i = int(np.argmax(conflict)) + 1
                raise DuplicateEdgeError(
                    f"edge ({lo[i]}, {hi[i]}) given conflicting weights "
                    f"{ws[i - 1]} and {ws[i]}"
                )
            keep = np.concatenate([[True], ~same])
            lo, hi, ws = lo[keep], hi[keep], ws[keep]
    n = max(int(hi.max()) + 1, n_min)
    loops = lo == hi
    src = np.concatenate([lo, hi[~loops]])
    dst = np.concatenate([hi, lo[~loops]])
    w2 = np.concatenate([ws, ws[~loops]])
    order = np.lexsort((dst, src))
    src, dst, w2 = src[order], dst[order], w2[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(n, indptr, dst, w2)


# -- set statistics ---------------------------------------------------------


def _check_members(g: LocalGraph, s: Iterable[int]) -> list[int]:
    members = []
    seen = set()
    for v in s:
        v = int(v)
        if v in seen:
            continue
        if not g.vertex_exists(v):
            raise UnknownVertexError(v)
        seen.add(v)
        members.append(v)
    return members


def volume(g: LocalGraph, s: Iterable[int]) -> float:
    """Sum of weighted degrees over the set; 0 for the empty set."""
    return float(sum(g.degree(v) for v in _check_members(g, s)))


def cut_weight(g: LocalGraph, s: Iterable[int]) -> float:
    """Total weight of edges with exactly one endpoint in the set."""
    members = _check_members(g, s)
    inside = set(members)
    cut = 0.0
    for u in members:
        for v, w in g.neighbors(u):
            if v != u and v not in inside:
                cut += w
    return cut


def conductance(g: Graph, s: Iterable[int]) -> float:
    """Cut weight over the smaller side's volume.

    Defined for nonempty strict subsets of the vertex set only; needs the
    total volume, so it is restricted to in-memory graphs.
    """
    members = _check_members(g, s)
    if not members or len(members) == g.n:
        raise ValueError("conductance requires a nonempty strict subset of the vertices")
    vol_s = volume(g, members)
    denom = min(vol_s, g.total_volume() - vol_s)
    if denom <= 0:
        raise ValueError("conductance undefined: zero volume on one side of the cut")
    return cut_weight(g, members) / denom


def local_conductance(g: LocalGraph, s: Iterable[int]) -> float:
    """Cut weight over the set's own volume.

    The denominator a local algorithm can actually compute: the total
    graph volume is unknowable through neighborhood queries alone.
    """
    members = _check_members(g, s)
    vol_s = volume(g, members)
    if vol_s <= 0:
        raise ValueError("local conductance undefined for zero-volume sets")
    return cut_weight(g, members) / vol_s


def normalized_laplacian(g: Graph) -> "sp.csr_matrix":
    """Symmetric normalized Laplacian ``I - D^{-1/2} A D^{-1/2}``.

    Eigenvalues lie in [0, 2]; rejects graphs with zero-degree vertices.
    """
    import scipy.sparse as sp

    if g.n == 0:
        return sp.csr_matrix((0, 0))
    deg = g.degrees
    if np.any(deg == 0):
        v = int(np.argmax(deg == 0))
        raise ValueError(f"vertex {v} has degree 0; normalized Laplacian undefined")
    inv_sqrt = sp.diags(1.0 / np.sqrt(deg))
    lap = sp.eye(g.n, format="csr") - inv_sqrt @ g.adjacency_matrix() @ inv_sqrt
    return sp.csr_matrix(lap)
