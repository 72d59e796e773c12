"""Numba-compiled inner loops for the push and sweep stages.

Both kernels operate on local (densely re-indexed) vertex IDs so the
arithmetic is identical no matter where the rows come from: an in-memory
graph, a disk-backed graph, or an instrumented wrapper. The push kernel is
resumable — it returns to the caller whenever it needs a row that has not
been fetched yet, and continues exactly where it stopped once the row is
appended to the arrays.
"""

from __future__ import annotations

import numpy as np

DONE = 0
NEED_ROW = 1

# sti slots
_HEAD, _TAIL, _UCUR, _ROWPOS, _NEED = 0, 1, 2, 3, 4


def _push_loop(sti, stf, queue, inqueue, r, p, deg, has_row, wmax,
               row_start, row_len, cols, wts, alpha, eps, cap):
    head = sti[_HEAD]
    tail = sti[_TAIL]
    u = sti[_UCUR]
    pos = sti[_ROWPOS]
    r_old = stf[0]
    while True:
        if u == -1:
            if head == tail:
                sti[_HEAD] = head
                sti[_TAIL] = tail
                sti[_UCUR] = -1
                return DONE
            cand = queue[head]
            if has_row[cand] == 0:
                sti[_HEAD] = head
                sti[_TAIL] = tail
                sti[_UCUR] = -1
                sti[_NEED] = cand
                return NEED_ROW
            head = (head + 1) % cap
            inqueue[cand] = 0
            r_old = r[cand]
            p[cand] += alpha * r_old
            r[cand] = (1.0 - alpha) * r_old / 2.0
            u = cand
            pos = 0
        rs = row_start[u]
        rl = row_len[u]
        base = (1.0 - alpha) * r_old / (2.0 * deg[u])
        while pos < rl:
            v = cols[rs + pos]
            w = wts[rs + pos]
            if has_row[v] == 0:
                # defer fetching v while its residual provably stays below
                # threshold: each receipt reveals an incident edge, so
                # degree(v) >= wmax[v] and r(v) < eps*wmax[v] cannot push
                if w > wmax[v]:
                    wmax[v] = w
                if r[v] + base * w >= eps * wmax[v]:
                    sti[_HEAD] = head
                    sti[_TAIL] = tail
                    sti[_UCUR] = u
                    sti[_ROWPOS] = pos
                    sti[_NEED] = v
                    stf[0] = r_old
                    return NEED_ROW
                r[v] += base * w
                pos += 1
                continue
            r[v] += base * w
            if inqueue[v] == 0 and deg[v] > 0.0 and r[v] >= eps * deg[v]:
                queue[tail] = v
                tail = (tail + 1) % cap
                inqueue[v] = 1
            pos += 1
        if inqueue[u] == 0 and r[u] >= eps * deg[u]:
            queue[tail] = u
            tail = (tail + 1) % cap
            inqueue[u] = 1
        u = -1


def _sweep_loop(order, rank, deg, row_start, row_len, cols, wts, conds, total_vol):
    """Prefix conductances; ``total_vol < 0`` means the graph's total volume
    is unknown and the prefix's own volume is the denominator."""
    cut = 0.0
    vol = 0.0
    m = order.shape[0]
    for i in range(m):
        u = order[i]
        vol += deg[u]
        rs = row_start[u]
        for t in range(row_len[u]):
            v = cols[rs + t]
            if v == u:
                continue
            if rank[v] < i:
                cut -= wts[rs + t]
            else:
                cut += wts[rs + t]
        if total_vol < 0.0:
            conds[i] = cut / vol
        else:
            rest = total_vol - vol
            denom = vol if vol < rest else rest
            conds[i] = cut / denom if denom > 0.0 else np.inf


_compiled: dict[str, object] = {}


def _jit(name: str, fn):
    """Compile on first use; numba import is deferred so that commands that
    never push (convert, gen, stats) do not pay for it."""
    got = _compiled.get(name)
    if got is None:
        try:
            from numba import njit

            got = njit(cache=True)(fn)
        except ImportError:  # pragma: no cover - slow but correct fallback
            got = fn
        _compiled[name] = got
    return got


def push_loop(*args):
    return _jit("push", _push_loop)(*args)


def sweep_loop(*args):
    return _jit("sweep", _sweep_loop)(*args)
