"""Hot loops: proper-coloring enumeration and per-coloring clique tallies.

Each kernel exists twice. The loop form is written in the numba-compatible
subset and is compiled with ``@njit`` when numba imports; the numpy form is a
vectorized rewrite used when numba is missing or when the environment sets
``COLORCURV_DISABLE_NUMBA=1``. Both return identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

HAVE_NUMBA = njit is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("COLORCURV_DISABLE_NUMBA", "").strip() not in ("1", "true", "yes")
BACKEND = "numba" if USE_NUMBA else "numpy"


def lower_neighbors(n: int, edges) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays of the neighbors ``u < v`` for each vertex ``v``."""
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        lists[v].append(u)
    ptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        ptr[v + 1] = ptr[v] + len(lists[v])
    idx = np.array([u for ls in lists for u in sorted(ls)], dtype=np.int64)
    return ptr, idx


def pack_cliques(cliques_by_dim) -> tuple[np.ndarray, np.ndarray]:
    """Cliques as a ``-1``-padded ``(Q, width)`` array plus their dimensions."""
    flat = [c for level in cliques_by_dim for c in level]
    width = max((len(c) for c in flat), default=1)
    verts = np.full((len(flat), width), -1, dtype=np.int64)
    dims = np.empty(len(flat), dtype=np.int64)
    for i, c in enumerate(flat):
        verts[i, : len(c)] = c
        dims[i] = len(c) - 1
    return verts, dims


# -- loop forms (numba source) ------------------------------------------------


def _backtrack_loop(n, lo_ptr, lo_idx, c, out, limit):
    # Writes colorings into ``out`` while rows remain; returns the total count
    # (stopping early once ``limit > 0`` solutions are found).
    if n == 0:
        return 1
    col = np.zeros(n, dtype=np.int64)
    cap = out.shape[0]
    count = 0
    v = 0
    while v >= 0:
        col[v] += 1
        if col[v] > c:
            col[v] = 0
            v -= 1
            continue
        ok = True
        for j in range(lo_ptr[v], lo_ptr[v + 1]):
            if col[lo_idx[j]] == col[v]:
                ok = False
                break
        if not ok:
            continue
        if v == n - 1:
            if count < cap:
                for t in range(n):
                    out[count, t] = col[t]
            count += 1
            if limit > 0 and count >= limit:
                return count
        else:
            v += 1
    return count


def _top_counts_loop(colorings, verts, dims, n, depth):
    # counts[m, x, d]: d-dimensional cliques through x on which x carries the
    # largest color of coloring m.
    M = colorings.shape[0]
    Q = verts.shape[0]
    counts = np.zeros((M, n, depth), dtype=np.int64)
    for m in range(M):
        for q in range(Q):
            d = dims[q]
            best = verts[q, 0]
            bv = colorings[m, best]
            for t in range(1, d + 1):
                u = verts[q, t]
                if colorings[m, u] > bv:
                    bv = colorings[m, u]
                    best = u
            counts[m, best, d] += 1
    return counts


if HAVE_NUMBA:
    _backtrack_jit = njit(cache=True)(_backtrack_loop)
    _top_counts_jit = njit(cache=True)(_top_counts_loop)
else:  # pragma: no cover
    _backtrack_jit = _backtrack_loop
    _top_counts_jit = _top_counts_loop


# -- numpy forms ----------------------------------------------------------------


def _colorings_numpy(n, lo_ptr, lo_idx, c, limit=0):
    # Vertex-by-vertex extension; repeat/tile keeps rows in lexicographic order.
    rows = np.zeros((1, 0), dtype=np.int64)
    palette = np.arange(1, c + 1, dtype=np.int64)
    for v in range(n):
        m = rows.shape[0]
        if m == 0:
            break
        ext = np.repeat(rows, c, axis=0)
        new = np.tile(palette, m)
        ok = np.ones(m * c, dtype=bool)
        for u in lo_idx[lo_ptr[v] : lo_ptr[v + 1]]:
            ok &= ext[:, u] != new
        rows = np.concatenate([ext[ok], new[ok, None]], axis=1)
    if rows.shape[1] != n:
        rows = np.zeros((0, n), dtype=np.int64)
    if limit > 0:
        rows = rows[:limit]
    return rows


def _top_counts_numpy(colorings, verts, dims, n, depth):
    M = colorings.shape[0]
    flat = np.zeros(M * n * depth, dtype=np.int64)
    rows = np.arange(M, dtype=np.int64)[:, None]
    for d in np.unique(dims):
        cl = verts[dims == d, : d + 1]
        vals = colorings[:, cl]  # (M, Q_d, d+1)
        top = cl[np.arange(cl.shape[0])[None, :], vals.argmax(axis=2)]  # (M, Q_d)
        keys = (rows * n + top) * depth + d
        flat += np.bincount(keys.ravel(), minlength=flat.size)
    return flat.reshape(M, n, depth)


# -- dispatch -----------------------------------------------------------------


def enumerate_colorings_array(n, lo_ptr, lo_idx, c, use_numba=None) -> np.ndarray:
    """All proper colorings with colors ``1..c`` as an ``(M, n)`` int64 array."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if not use_numba:
        return _colorings_numpy(n, lo_ptr, lo_idx, c)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    total = _backtrack_jit(n, lo_ptr, lo_idx, c, np.zeros((0, n), dtype=np.int64), 0)
    out = np.zeros((total, n), dtype=np.int64)
    _backtrack_jit(n, lo_ptr, lo_idx, c, out, 0)
    return out


def has_coloring(n, lo_ptr, lo_idx, c, use_numba=None) -> bool:
    if use_numba is None:
        use_numba = USE_NUMBA
    if not use_numba:
        return _colorings_numpy(n, lo_ptr, lo_idx, c, limit=1).shape[0] > 0
    return _backtrack_jit(n, lo_ptr, lo_idx, c, np.zeros((0, max(n, 1)), dtype=np.int64), 1) > 0


def top_counts(colorings, verts, dims, n, depth, use_numba=None) -> np.ndarray:
    if use_numba is None:
        use_numba = USE_NUMBA
    colorings = np.ascontiguousarray(colorings, dtype=np.int64)
    if colorings.shape[0] == 0 or verts.shape[0] == 0:
        return np.zeros((colorings.shape[0], n, depth), dtype=np.int64)
    if use_numba:
        return _top_counts_jit(colorings, verts, dims, n, depth)
    return _top_counts_numpy(colorings, verts, dims, n, depth)
