"""Readers, writers, and converters for the EdgeList and AdjacencyList formats.

EdgeList: one edge per line, ``u v`` or ``u v w``. AdjacencyList: one vertex
per line, ``u: v1 v2`` (unweighted) or ``u: v1:w1 v2:w2`` (weighted), with
line-leading IDs strictly increasing so the file supports binary search.
Lines whose first non-blank character is ``#`` are comments; blank lines are
ignored. Both formats round-trip exactly through the writers here.
"""

from __future__ import annotations

import heapq
import os
import struct
import tempfile
from typing import Iterable, Iterator

import numpy as np

from .errors import DuplicateEdgeError, ParseError, UnsortedNodeIdsError
from .graph import Graph, _graph_from_edge_arrays

__all__ = [
    "load_edgelist",
    "save_edgelist",
    "load_adjacencylist",
    "save_adjacencylist",
    "edgelist_to_adjacencylist",
    "adjacencylist_to_edgelist",
]


def format_weight(w: float) -> str:
    """Shortest exact decimal form; integral weights print as integers."""
    if w == int(w) and abs(w) < 1e16:
        return str(int(w))
    return repr(w)


def _parse_id(token: str, path, line_no: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(path, line_no, f"expected a vertex ID, got {token!r}") from None
    if v < 0:
        raise ParseError(path, line_no, f"vertex ID must be non-negative, got {v}")
    return v

def _parse_weight(token: str, path, line_no: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise ParseError(path, line_no, f"expected an edge weight, got {token!r}") from None
    if not np.isfinite(w) or w <= 0:
        raise ParseError(path, line_no, f"edge weight must be positive and finite, got {token}")
    return w

def _content_lines(f) -> Iterator[tuple[int, str]]:
    for line_no, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


# -- EdgeList ----------------------------------------------------------------


def _iter_edgelist(path) -> Iterator[tuple[int, int, float]]:
    with open(path) as f:
        for line_no, line in _content_lines(f):
            tokens = line.split()
            if len(tokens) not in (2, 3):
                raise ParseError(
                    path, line_no, f"expected 'u v' or 'u v w', got {len(tokens)} tokens"
                )
            u = _parse_id(tokens[0], path, line_no)
            v = _parse_id(tokens[1], path, line_no)
            w = _parse_weight(tokens[2], path, line_no) if len(tokens) == 3 else 1.0
            yield u, v, w


def load_edgelist(path) -> Graph:
    """Read an EdgeList file into a :class:`Graph`."""
    us, vs, ws = [], [], []
    for u, v, w in _iter_edgelist(path):
        us.append(u)
        vs.append(v)
        ws.append(w)
    return _graph_from_edge_arrays(
        np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64), np.array(ws)
    )


def save_edgelist(g: Graph, path) -> None:
    """Write each undirected edge once, smaller endpoint first, rows sorted.

    Weights are omitted only when every edge in the graph has weight 1, so a
    file never mixes weighted and unweighted lines.
    """
    weighted = any(w != 1.0 for _, _, w in g.edges()) if g.n else False
    with open(path, "w") as f:
        for u in range(g.n):
            ids, ws = g.row(u)
            for v, w in zip(ids.tolist(), ws.tolist()):
                if u <= v:
                    f.write(f"{u} {v} {format_weight(w)}\n" if weighted else f"{u} {v}\n")


# -- AdjacencyList -----------------------------------------------------------


def _parse_adjacency_header(tokens: list[str], path, line_no: int) -> int:
    head = tokens[0]
    if not head.endswith(":"):
        raise ParseError(path, line_no, f"expected 'u:' at line start, got {head!r}")
    return _parse_id(head[:-1], path, line_no)


def _parse_neighbor_token(token: str, path, line_no: int) -> tuple[int, float]:
    if ":" in token:
        parts = token.split(":")
        if len(parts) != 2:
            raise ParseError(path, line_no, f"malformed neighbor token {token!r}")
        return _parse_id(parts[0], path, line_no), _parse_weight(parts[1], path, line_no)
    return _parse_id(token, path, line_no), 1.0


def _iter_adjacencylist(path) -> Iterator[tuple[int, int, list[tuple[int, float]]]]:
    """Yield ``(line_no, head, neighbors)`` per content line, checking sortedness."""
    prev_head = -1
    with open(path) as f:
        for line_no, line in _content_lines(f):
            tokens = line.split()
            head = _parse_adjacency_header(tokens, path, line_no)
            if head <= prev_head:
                raise UnsortedNodeIdsError(
                    path, line_no, f"node ID {head} not greater than previous {prev_head}"
                )
            prev_head = head
            nbrs = [_parse_neighbor_token(t, path, line_no) for t in tokens[1:]]
            yield line_no, head, nbrs


def load_adjacencylist(path) -> Graph:
    """Read an AdjacencyList file into a :class:`Graph`.

    An edge listed in only one endpoint's line is still added symmetrically;
    listing it in both lines with different weights is an error.
    """
    edges: dict[tuple[int, int], float] = {}
    max_id = -1
    for line_no, head, nbrs in _iter_adjacencylist(path):
        max_id = max(max_id, head)
        for v, w in nbrs:
            max_id = max(max_id, v)
            key = (head, v) if head <= v else (v, head)
            old = edges.setdefault(key, w)
            if old != w:
                raise DuplicateEdgeError(
                    f"{path}: line {line_no}: edge {key} has conflicting weights {old} and {w}"
                )
    us = np.fromiter((k[0] for k in edges), dtype=np.int64, count=len(edges))
    vs = np.fromiter((k[1] for k in edges), dtype=np.int64, count=len(edges))
    ws = np.fromiter(edges.values(), dtype=np.float64, count=len(edges))
    return _graph_from_edge_arrays(us, vs, ws, n_min=max_id + 1)


def save_adjacencylist(g: Graph, path) -> None:
    """One line per vertex in increasing order, neighbors sorted by ID.

    Weight tokens ``v:w`` are used for the whole file as soon as the graph
    has any non-unit weight, so a file never mixes the two token styles.
    """
    weighted = any(w != 1.0 for _, _, w in g.edges()) if g.n else False
    with open(path, "w") as f:
        for u in range(g.n):
            ids, ws = g.row(u)
            if weighted:
                body = " ".join(f"{v}:{format_weight(w)}" for v, w in zip(ids.tolist(), ws.tolist()))
            else:
                body = " ".join(str(v) for v in ids.tolist())
            f.write(f"{u}: {body}\n" if body else f"{u}:\n")


# -- streaming converters ----------------------------------------------------

_REC = struct.Struct("<qqd")
_SORT_BUFFER = 1 << 17  # records held in memory per sort chunk


def _flush_chunk(buf: list[tuple[int, int, float]], tmpdir: str, idx: int) -> str:
    buf.sort()
    chunk_path = os.path.join(tmpdir, f"chunk{idx:05d}")
    with open(chunk_path, "wb") as f:
        for rec in buf:
            f.write(_REC.pack(*rec))
    return chunk_path


def _read_chunk(chunk_path: str) -> Iterator[tuple[int, int, float]]:
    with open(chunk_path, "rb") as f:
        while True:
            blob = f.read(_REC.size * 4096)
            if not blob:
                return
            for off in range(0, len(blob), _REC.size):
                yield _REC.unpack_from(blob, off)


def _merged_unique(
    records: Iterable[tuple[int, int, float]], tmpdir: str
) -> Iterator[tuple[int, int, float]]:
    """Externally sort directed records by (src, dst), collapsing duplicates."""
    chunks = []
    buf: list[tuple[int, int, float]] = []
    for rec in records:
        buf.append(rec)
        if len(buf) >= _SORT_BUFFER:
            chunks.append(_flush_chunk(buf, tmpdir, len(chunks)))
            buf = []
    buf.sort()
    streams = [_read_chunk(c) for c in chunks] + [iter(buf)]
    prev = None
    for rec in heapq.merge(*streams):
        if prev is not None and rec[:2] == prev[:2]:
            if rec[2] != prev[2]:
                raise DuplicateEdgeError(
                    f"edge ({rec[0]}, {rec[1]}) has conflicting weights {prev[2]} and {rec[2]}"
                )
            continue
        prev = rec
        yield rec


def edgelist_to_adjacencylist(in_path, out_path) -> None:
    """Convert an EdgeList file to an AdjacencyList file.

    Uses an external sort of directed edge records, so resident memory stays
    bounded by the sort buffer regardless of the edge count.
    """
    with tempfile.TemporaryDirectory(prefix="el2al-") as tmpdir:
        max_id = -1
        weighted = False

        def directed() -> Iterator[tuple[int, int, float]]:
            nonlocal max_id, weighted
            for u, v, w in _iter_edgelist(in_path):
                max_id = max(max_id, u, v)
                weighted = weighted or w != 1.0
                yield u, v, w
                if u != v:
                    yield v, u, w

        chunk_sorted = _merged_unique(directed(), tmpdir)
        with open(out_path, "w") as f:
            # the first next() drains the whole input into sort chunks, so
            # max_id and the weighted flag are final before any line is written
            pending = next(chunk_sorted, None)
            for u in range(max_id + 1):
                parts = []
                while pending is not None and pending[0] == u:
                    v, w = pending[1], pending[2]
                    parts.append(f"{v}:{format_weight(w)}" if weighted else str(v))
                    pending = next(chunk_sorted, None)
                body = " ".join(parts)
                f.write(f"{u}: {body}\n" if body else f"{u}:\n")


def adjacencylist_to_edgelist(in_path, out_path) -> None:
    """Convert an AdjacencyList file to an EdgeList file.

    Every edge is written exactly once with the smaller endpoint first.
    Isolated vertices have no EdgeList representation and are dropped.
    """
    weighted = False

    def undirected() -> Iterator[tuple[int, int, float]]:
        nonlocal weighted
        for _, head, nbrs in _iter_adjacencylist(in_path):
            for v, w in nbrs:
                weighted = weighted or w != 1.0
                yield (head, v, w) if head <= v else (v, head, w)

    with tempfile.TemporaryDirectory(prefix="al2el-") as tmpdir:
        merged = _merged_unique(undirected(), tmpdir)
        with open(out_path, "w") as f:
            # the first next() drains the input, finalizing the weighted flag
            first = next(merged, None)
            if first is not None:
                for u, v, w in _chain_one(first, merged):
                    f.write(f"{u} {v} {format_weight(w)}\n" if weighted else f"{u} {v}\n")


def _chain_one(first, rest):
    yield first
    yield from rest
