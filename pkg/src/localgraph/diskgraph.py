"""Disk-backed local graph over a sorted AdjacencyList file.

Neighbor queries run a binary search over raw byte offsets: probe a
midpoint, scan forward to the next line start, parse the header ID and
recurse. A query therefore reads O(log(file size)) short regions instead
of the whole file, which is what makes local clustering on graphs larger
than memory possible. Header sortedness is trusted at open time (checking
it would read the entire file); `validate_sorted` performs the full check
on demand.

Two bounded caches keep repeated queries cheap without changing any
result: an LRU of parsed lines keyed by vertex (pure read-through), and a
memo of probe outcomes keyed by byte offset. Probe offsets are quantized
to a coarse grid while the search interval is large, so different queries
revisit the same memoized probes and most of the descent costs no I/O.
"""

from __future__ import annotations

import os
import threading
from collections import OrderedDict

from .errors import ParseError, UnknownVertexError, UnsortedNodeIdsError
from .graph import LocalGraph

__all__ = ["DiskGraph", "open_disk_graph"]

_PROBE_CHUNK = 288
_GRID = 1024
_TAIL_SPAN = 2048


class DiskGraph(LocalGraph):
    """Read-only :class:`LocalGraph` answering queries by binary search.

    Thread safe: every read is an independent positioned read (``os.pread``)
    and the caches are lock-guarded. ``bytes_read`` counts every byte pulled
    from the file and exists for locality diagnostics.
    """

    def __init__(self, path, cache_size: int = 1024):
        self._path = str(path)
        self._fd: int | None = None
        self._fd = os.open(self._path, os.O_RDONLY)
        self._size = os.fstat(self._fd).st_size
        self._lock = threading.Lock()
        self._cache_size = cache_size
        self._line_cache: OrderedDict[int, list[tuple[int, float]]] = OrderedDict()
        self._probe_memo: OrderedDict[int, tuple[int, int, int] | None] = OrderedDict()
        self.bytes_read = 0

    # -- raw file access ----------------------------------------------------

    def _pread(self, offset: int, length: int) -> bytes:
        if self._fd is None:
            raise ValueError("DiskGraph is closed")
        data = os.pread(self._fd, length, offset)
        with self._lock:
            self.bytes_read += len(data)
        return data

    def _probe_at(self, p: int) -> tuple[int, int, int] | None:
        """First header line at or after ``p`` as ``(id, start, end)``.

        Starts one positioned read covering the tail of any line straddling
        ``p`` plus the following lines; extends only when a line crosses the
        chunk boundary. Comment and blank lines are skipped.
        """
        if p >= self._size:
            return None
        if p == 0:
            base = 0
            data = self._pread(0, _PROBE_CHUNK)
            idx = 0
        else:
            base = p - 1
            data = self._pread(base, _PROBE_CHUNK)
            if data[:1] == b"\n":
                idx = 1
            else:
                nl = data.find(b"\n")
                while nl < 0:
                    if base + len(data) >= self._size:
                        return None
                    data += self._pread(base + len(data), _PROBE_CHUNK)
                    nl = data.find(b"\n")
                idx = nl + 1
        while True:
            if base + idx >= self._size:
                return None
            nl = data.find(b"\n", idx)
            while nl < 0 and base + len(data) < self._size:
                data += self._pread(base + len(data), _PROBE_CHUNK)
                nl = data.find(b"\n", idx)
            end_in = nl if nl >= 0 else len(data)
            text = data[idx:end_in].strip()
            if text and not text.startswith(b"#"):
                head = text.split(None, 1)[0]
                if not head.endswith(b":"):
                    raise ParseError(self._path, None,
                                     f"expected 'u:' at byte offset {base + idx}, got {head!r}")
                try:
                    node = int(head[:-1])
                except ValueError:
                    raise ParseError(self._path, None,
                                     f"bad node ID {head!r} at byte offset {base + idx}") from None
                return node, base + idx, base + end_in + (1 if nl >= 0 else 0)
            if nl < 0:
                return None
            idx = end_in + 1

    def _probe(self, p: int) -> tuple[int, int, int] | None:
        """Memoized probe. Only grid-aligned offsets are cached: those repeat
        across searches for different vertices, while exact midpoints are
        query-specific and would churn the memo."""
        cacheable = p % _GRID == 0
        if cacheable:
            with self._lock:
                if p in self._probe_memo:
                    self._probe_memo.move_to_end(p)
                    return self._probe_memo[p]
        found = self._probe_at(p)
        if cacheable:
            with self._lock:
                self._probe_memo[p] = found
                if len(self._probe_memo) > 8 * self._cache_size:
                    self._probe_memo.popitem(last=False)
        return found

    # -- binary search ------------------------------------------------------

    def _find_row(self, v: int) -> list[tuple[int, float]]:
        """Parsed neighbor tokens of ``v``'s line, raw weights, file order."""
        with self._lock:
            row = self._line_cache.get(v)
            if row is not None:
                self._line_cache.move_to_end(v)
                return row
        lo, hi = 0, self._size
        while hi - lo > _TAIL_SPAN:
            mid = (lo + hi) // 2
            p = (mid // _GRID) * _GRID
            if p < lo:
                p = mid
            probe = self._probe(p)
            if probe is None:
                hi = p
                continue
            head, start, end = probe
            if head == v:
                return self._load_row(v, start, end)
            if head < v:
                lo = end
            else:
                hi = p
        return self._scan_span(v, lo, hi)

    def _scan_span(self, v: int, lo: int, hi: int) -> list[tuple[int, float]]:
        """Scan the final search interval in one read. ``lo`` is always a
        line start, and the target line (if present) starts in ``[lo, hi)``.
        """
        if lo >= hi:
            raise UnknownVertexError(v)
        data = self._pread(lo, hi - lo)
        idx = 0
        while idx < hi - lo:
            nl = data.find(b"\n", idx)
            while nl < 0 and lo + len(data) < self._size:
                data += self._pread(lo + len(data), _PROBE_CHUNK)
                nl = data.find(b"\n", idx)
            end_in = nl if nl >= 0 else len(data)
            text = data[idx:end_in].strip()
            if text and not text.startswith(b"#"):
                head = text.split(None, 1)[0]
                if not head.endswith(b":"):
                    raise ParseError(self._path, None,
                                     f"expected 'u:' at byte offset {lo + idx}, got {head!r}")
                try:
                    node = int(head[:-1])
                except ValueError:
                    raise ParseError(self._path, None,
                                     f"bad node ID {head!r} at byte offset {lo + idx}") from None
                if node == v:
                    row = self._parse_row(v, text, lo + idx)
                    with self._lock:
                        self._line_cache[v] = row
                        if len(self._line_cache) > self._cache_size:
                            self._line_cache.popitem(last=False)
                    return row
                if node > v:
                    break
            idx = end_in + 1
        raise UnknownVertexError(v)

    def _load_row(self, v: int, start: int, end: int) -> list[tuple[int, float]]:
        """Read exactly ``v``'s line (its extent is known from the probe),
        parse it, and cache the result."""
        data = self._pread(start, end - start)
        row = self._parse_row(v, data, start)
        with self._lock:
            self._line_cache[v] = row
            if len(self._line_cache) > self._cache_size:
                self._line_cache.popitem(last=False)
        return row

    def _parse_row(self, v: int, line: bytes, start: int) -> list[tuple[int, float]]:
        tokens = line.strip().decode().split()[1:]
        row = []
        for t in tokens:
            try:
                if ":" in t:
                    id_s, w_s = t.split(":")
                    u, w = int(id_s), float(w_s)
                else:
                    u, w = int(t), 1.0
                if u < 0 or w <= 0:
                    raise ValueError
            except ValueError:
                raise ParseError(
                    self._path, None,
                    f"bad neighbor token {t!r} on node {v}'s line (byte offset {start})",
                ) from None
            row.append((u, w))
        return row

    # -- LocalGraph interface -------------------------------------------------

    def vertex_exists(self, v: int) -> bool:
        if v < 0:
            return False
        try:
            self._find_row(v)
            return True
        except UnknownVertexError:
            return False

    def neighbors(self, v: int) -> list[tuple[int, float]]:
        return [(u, w if u != v else 2.0 * w) for u, w in self._find_row(v)]

    def neighbors_unweighted(self, v: int) -> list[int]:
        return [u for u, _ in self._find_row(v)]

    def degree(self, v: int) -> float:
        return sum(w if u != v else 2.0 * w for u, w in self._find_row(v))

    def degree_unweighted(self, v: int) -> int:
        return len(self._find_row(v))

    # -- maintenance ----------------------------------------------------------

    def validate_sorted(self) -> None:
        """Full-scan debug check that header IDs strictly increase."""
        pos = 0
        prev = -1
        line_no = 0
        while pos < self._size:
            probe = self._probe_at(pos)
            if probe is None:
                return
            node, start, end = probe
            line_no += 1
            if node <= prev:
                raise UnsortedNodeIdsError(
                    self._path, None,
                    f"node ID {node} at byte offset {start} not greater than previous {prev}",
                )
            prev = node
            pos = end

    def close(self) -> None:
        if self._fd is not None:
            os.close(self._fd)
            self._fd = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def __del__(self):
        try:
            self.close()
        except OSError:
            pass

    def __repr__(self):
        return f"DiskGraph({self._path!r}, size={self._size})"


def open_disk_graph(path, cache_size: int = 1024) -> DiskGraph:
    """Open an AdjacencyList file for local queries without loading it."""
    return DiskGraph(path, cache_size=cache_size)
