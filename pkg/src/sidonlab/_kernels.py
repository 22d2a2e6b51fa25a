"""Hot numeric kernels.

Every kernel exists twice: a loop-oriented version compiled with numba
and a vectorized pure-numpy version. The numba path is the default;
set SIDONLAB_NO_NUMBA=1 (or run without numba installed) to select the
numpy fallback. benchmarks/bench_kernels.py compares the two.

All arrays are int64; truth tables have length 2^n with entries < 2^n,
point sets hold m-bit masks. Walsh-side kernels are exact in int64 for
n <= 12 (|W| <= 2^n, cubes <= 2^36, transform sums <= 2^60).
"""

import os

import numpy as np

_PARITY16 = np.zeros(1 << 16, dtype=np.uint8)
for _i in range(1, 1 << 16):
    _PARITY16[_i] = _PARITY16[_i >> 1] ^ (_i & 1)


def parity(x):
    """Parity of an unsigned int of any width."""
    return x.bit_count() & 1


# ---------------------------------------------------------------------------
# loop kernels (numba targets)


def _fwht_inplace_loops(a):
    n = a.shape[0]
    h = 1
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2


def _walsh_table_loops(values, n):
    size = 1 << n
    out = np.empty(size * size, np.int64)
    for v in range(size):
        base = v * size
        for x in range(size):
            out[base + x] = 1 - 2 * np.int64(_PARITY16[v & values[x]])
        h = 1
        while h < size:
            for i in range(0, size, 2 * h):
                for j in range(base + i, base + i + h):
                    p = out[j]
                    q = out[j + h]
                    out[j] = p + q
                    out[j + h] = p - q
            h *= 2
    return out


def _ddt_row_loops(values, a):
    size = values.shape[0]
    counts = np.zeros(size, np.int64)
    for x in range(size):
        counts[values[x ^ a] ^ values[x]] += 1
    return counts


def _ddt_max_loops(values):
    size = values.shape[0]
    counts = np.zeros(size, np.int64)
    best = np.int64(0)
    for a in range(1, size):
        counts[:] = 0
        for x in range(size):
            b = values[x ^ a] ^ values[x]
            counts[b] += 1
            if counts[b] > best:
                best = counts[b]
    return best


def _solution_row_loops(values, a):
    size = values.shape[0]
    counts = np.zeros(size, np.int64)
    for x in range(size):
        fx = values[x]
        xa = x ^ a
        for y in range(size):
            counts[fx ^ values[y] ^ values[xa ^ y]] += 1
    return counts


def _solution_table_loops(values, n):
    size = 1 << n
    out = np.zeros(size * size, np.int64)
    for a in range(size):
        base = a << n
        for x in range(size):
            fx = values[x]
            xa = x ^ a
            for y in range(size):
                out[base | (fx ^ values[y] ^ values[xa ^ y])] += 1
    return out


def _pair_xor_counts_loops(values):
    size = values.shape[0]
    counts = np.zeros(size, np.int64)
    for x in range(size):
        fx = values[x]
        for y in range(size):
            counts[fx ^ values[y]] += 1
    return counts


def _triple_mult_loops(points, m):
    mult = np.zeros(1 << m, np.int64)
    s = points.shape[0]
    for i in range(s):
        for j in range(i + 1, s):
            pij = points[i] ^ points[j]
            for k in range(j + 1, s):
                mult[pij ^ points[k]] += 1
    return mult


def _has_pair_collision_loops(points, m):
    seen = np.zeros(1 << m, np.uint8)
    s = points.shape[0]
    for i in range(s):
        for j in range(i + 1, s):
            x = points[i] ^ points[j]
            if seen[x]:
                return True
            seen[x] = 1
    return False


def _dproperty_missing_loops(values, n):
    size = 1 << n
    achieved = np.zeros(size, np.uint8)
    for a in range(size):
        fa = values[a]
        for x in range(size):
            t = values[x] ^ fa
            xa = x ^ a
            for y in range(size):
                achieved[t ^ values[y] ^ values[xa ^ y]] = 1
    missing = 0
    for c in range(1, size):
        if not achieved[c]:
            missing += 1
    return missing


# ---------------------------------------------------------------------------
# numpy fallbacks


def _fwht_inplace_numpy(a):
    h = 1
    while h < a.shape[0]:
        b = a.reshape(-1, 2, h)
        x = b[:, 0, :].copy()
        b[:, 0, :] += b[:, 1, :]
        b[:, 1, :] = x - b[:, 1, :]
        h *= 2


def _walsh_table_numpy(values, n):
    size = 1 << n
    v = np.arange(size, dtype=np.int64)
    signs = 1 - 2 * _PARITY16[v[:, None] & values[None, :]].astype(np.int64)
    h = 1
    while h < size:
        b = signs.reshape(size, -1, 2, h)
        x = b[:, :, 0, :].copy()
        b[:, :, 0, :] += b[:, :, 1, :]
        b[:, :, 1, :] = x - b[:, :, 1, :]
        h *= 2
    return signs.reshape(-1)


def _ddt_row_numpy(values, a):
    x = np.arange(values.shape[0], dtype=np.int64)
    return np.bincount(values[x ^ a] ^ values, minlength=values.shape[0])


def _ddt_max_numpy(values):
    size = values.shape[0]
    x = np.arange(size, dtype=np.int64)
    best = 0
    for a in range(1, size):
        best = max(best, int(np.bincount(values[x ^ a] ^ values).max()))
    return best


def _solution_row_numpy(values, a):
    x = np.arange(values.shape[0], dtype=np.int64)
    xg = x[:, None] ^ x[None, :]
    t = values[xg ^ a] ^ values[:, None] ^ values[None, :]
    return np.bincount(t.ravel(), minlength=values.shape[0])


def _solution_table_numpy(values, n):
    size = 1 << n
    x = np.arange(size, dtype=np.int64)
    xg = x[:, None] ^ x[None, :]
    vx = values[:, None] ^ values[None, :]
    out = np.empty(size * size, np.int64)
    for a in range(size):
        t = values[xg ^ a] ^ vx
        out[a << n:(a + 1) << n] = np.bincount(t.ravel(), minlength=size)
    return out


def _pair_xor_counts_numpy(values):
    vx = values[:, None] ^ values[None, :]
    return np.bincount(vx.ravel(), minlength=values.shape[0])


def _triple_mult_numpy(points, m):
    mult = np.zeros(1 << m, np.int64)
    s = points.shape[0]
    for i in range(s):
        for j in range(i + 1, s):
            np.add.at(mult, points[i] ^ points[j] ^ points[j + 1:], 1)
    return mult


def _has_pair_collision_numpy(points, m):
    s = points.shape[0]
    if s < 2:
        return False
    iu = np.triu_indices(s, k=1)
    xs = points[iu[0]] ^ points[iu[1]]
    return np.unique(xs).size != xs.size


def _dproperty_missing_numpy(values, n):
    size = 1 << n
    x = np.arange(size, dtype=np.int64)
    xg = x[:, None] ^ x[None, :]
    vx = values[:, None] ^ values[None, :]
    achieved = np.zeros(size, bool)
    for a in range(size):
        cs = values[xg ^ a] ^ vx ^ values[a]
        achieved[cs.ravel()] = True
        if achieved.all():
            return 0
    return int(np.count_nonzero(~achieved[1:]))


NUMPY_IMPLS = {
    "fwht_inplace": _fwht_inplace_numpy,
    "walsh_table": _walsh_table_numpy,
    "ddt_row": _ddt_row_numpy,
    "ddt_max": _ddt_max_numpy,
    "solution_row": _solution_row_numpy,
    "solution_table": _solution_table_numpy,
    "pair_xor_counts": _pair_xor_counts_numpy,
    "triple_mult": _triple_mult_numpy,
    "has_pair_collision": _has_pair_collision_numpy,
    "dproperty_missing": _dproperty_missing_numpy,
}

_LOOP_IMPLS = {
    "fwht_inplace": _fwht_inplace_loops,
    "walsh_table": _walsh_table_loops,
    "ddt_row": _ddt_row_loops,
    "ddt_max": _ddt_max_loops,
    "solution_row": _solution_row_loops,
    "solution_table": _solution_table_loops,
    "pair_xor_counts": _pair_xor_counts_loops,
    "triple_mult": _triple_mult_loops,
    "has_pair_collision": _has_pair_collision_loops,
    "dproperty_missing": _dproperty_missing_loops,
}


def _build_numba_impls():
    import numba

    return {name: numba.njit(cache=True)(fn) for name, fn in _LOOP_IMPLS.items()}


USE_NUMBA = os.environ.get("SIDONLAB_NO_NUMBA", "0").lower() not in ("1", "true", "yes")
NUMBA_IMPLS = None
if USE_NUMBA:
    try:
        NUMBA_IMPLS = _build_numba_impls()
    except ImportError:
        USE_NUMBA = False

ACTIVE_IMPLS = NUMBA_IMPLS if USE_NUMBA else NUMPY_IMPLS

fwht_inplace = ACTIVE_IMPLS["fwht_inplace"]
walsh_table = ACTIVE_IMPLS["walsh_table"]
ddt_row = ACTIVE_IMPLS["ddt_row"]
ddt_max = ACTIVE_IMPLS["ddt_max"]
solution_row = ACTIVE_IMPLS["solution_row"]
solution_table = ACTIVE_IMPLS["solution_table"]
pair_xor_counts = ACTIVE_IMPLS["pair_xor_counts"]
triple_mult = ACTIVE_IMPLS["triple_mult"]
has_pair_collision = ACTIVE_IMPLS["has_pair_collision"]
dproperty_missing = ACTIVE_IMPLS["dproperty_missing"]
