"""Compiled depth-first enumerators over normalized partial permutations.

Every search fixes ``f(0) = 0`` and assigns ``f(1), ..., f(n-1)`` in order,
trying candidate values in ascending order.  For each shift ``k`` the kernel
keeps the functional graph of the known pairs ``x -> f(x + k)`` as a set of
disjoint paths (endpoint tables plus an undo log), so closing a cycle is
detected in O(1) per shift.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# constraint bits
C_DIFF = 1  # f(x) - x distinct (orthomorphism)
C_SUM = 2  # f(x) + x distinct (complete mapping)

# targets
T_NONE = 0
T_FULL_CYCLE = 1  # every shift of type (1, n-1)
T_AVOID = 2  # no shift has a cycle of length in [2, L]

# modes
M_COUNT = 0
M_COLLECT = 1
M_FIRST = 2


@njit(cache=True)
def _unit_inverses(n):
    inv = np.full(n, -1, dtype=np.int64)
    for a in range(1, n):
        for b in range(1, n):
            if (a * b) % n == 1:
                inv[a] = b
                break
    if n == 1:
        inv[0] = 0
    return inv


@njit(cache=True)
def _shift_prunes(target, n, L, length, nfixed):
    if target == T_FULL_CYCLE:
        if length == 1:
            return nfixed > 1
        return length != n - 1
    if target == T_AVOID:
        return 2 <= length <= L
    return False


_DEBRUIJN_CONST = 0x03F79D71B4CB0A89
_DEBRUIJN = np.uint64(_DEBRUIJN_CONST)
_DEBRUIJN_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _DEBRUIJN_TABLE[(((1 << _i) * _DEBRUIJN_CONST) % (1 << 64)) >> 58] = _i
MAX_N = 62


@njit(cache=True)
def _lowest_bit(m):
    low = m & (~m + np.uint64(1))
    return _DEBRUIJN_TABLE[(low * _DEBRUIJN) >> np.uint64(58)]


@njit(cache=True)
def _rotl(m, s, n, full):
    if s == 0:
        return m
    return ((m << np.uint64(s)) | (m >> np.uint64(n - s))) & full


@njit(cache=True)
def _apply(x, v, n, target, L, head, tail, size, nfixed, log, log_len):
    """Adds the pair x -> v to every shift graph; returns True on a prune."""
    log_len[x] = 0
    for k in range(n):
        u = (x - k) % n
        s = head[k, u]
        j = log_len[x]
        log[x, j, 0] = k
        log_len[x] = j + 1
        if s == v:
            ln = size[k, s]
            if ln == 1:
                nfixed[k] += 1
                log[x, j, 5] = -1
            else:
                log[x, j, 5] = 0
            if _shift_prunes(target, n, L, ln, nfixed[k]):
                return True
        else:
            e = tail[k, v]
            log[x, j, 1] = s
            log[x, j, 2] = e
            log[x, j, 3] = u
            log[x, j, 4] = v
            log[x, j, 5] = size[k, v]
            tail[k, s] = e
            head[k, e] = s
            size[k, s] += size[k, v]
    return False


@njit(cache=True)
def _slope_ok(x, v, n, f, inv):
    for y in range(x):
        iv = inv[(x - y) % n]
        if iv >= 0 and ((v - f[y]) * iv) % n < f[1]:
            return False
    return True


@njit(cache=True)
def _enumerate(n, constraint, target, L, slope_normalize, prefix, mode,
               budget, capacity):
    """Returns (count, witnesses, nodes, exhausted, consistent).

    Requires 1 <= n <= MAX_N (candidate sets are 64-bit masks).
    """
    track = target != T_NONE
    one = np.uint64(1)
    full = (one << np.uint64(n)) - one
    f = np.full(n, -1, dtype=np.int64)
    used_val = np.uint64(0)
    used_diff = np.uint64(0)
    used_sum = np.uint64(0)
    inv = _unit_inverses(n)

    head = np.empty((n, n), dtype=np.int64)
    tail = np.empty((n, n), dtype=np.int64)
    size = np.ones((n, n), dtype=np.int64)
    nfixed = np.zeros(n, dtype=np.int64)
    for k in range(n):
        for x in range(n):
            head[k, x] = x
            tail[k, x] = x
    # undo log: per depth, up to n records (k, s, e, u, v, kind) where kind
    # is the merged path size, 0 for a closed cycle, -1 for a fixed point
    log = np.zeros((n + 1, n, 6), dtype=np.int64)
    log_len = np.zeros(n + 1, dtype=np.int64)
    avail = np.zeros(n + 1, dtype=np.uint64)

    out = np.empty((capacity, n), dtype=np.int64)
    stored = 0
    count = 0
    nodes = 0
    exhausted = True

    f[0] = 0
    used_val |= one
    used_diff |= one
    used_sum |= one
    if track and _apply(0, 0, n, target, L, head, tail, size, nfixed, log,
                        log_len):
        return 0, out[:0], 0, True, True

    start = 1
    for i in range(prefix.shape[0]):
        x = i + 1
        v = prefix[i]
        if x >= n or v < 0 or v >= n or (used_val >> np.uint64(v)) & one:
            return 0, out[:0], 0, True, False
        d = (v - x) % n
        sm = (v + x) % n
        if (constraint & C_DIFF) and (used_diff >> np.uint64(d)) & one:
            return 0, out[:0], 0, True, False
        if (constraint & C_SUM) and (used_sum >> np.uint64(sm)) & one:
            return 0, out[:0], 0, True, False
        if slope_normalize and x >= 2 and not _slope_ok(x, v, n, f, inv):
            return 0, out[:0], 0, True, False
        f[x] = v
        used_val |= one << np.uint64(v)
        used_diff |= one << np.uint64(d)
        used_sum |= one << np.uint64(sm)
        if track and _apply(x, v, n, target, L, head, tail, size, nfixed, log,
                            log_len):
            return 0, out[:0], 0, True, True
        start = x + 1

    x = start
    v = 0
    if x < n:
        m = full & ~used_val
        if constraint & C_DIFF:
            m &= ~_rotl(used_diff, x, n, full)
        if constraint & C_SUM:
            m &= ~_rotl(used_sum, (n - x) % n, n, full)
        avail[x] = m
    while True:
        if x == n:
            count += 1
            if mode != M_COUNT:
                if stored == out.shape[0]:
                    bigger = np.empty((2 * out.shape[0] + 1, n), dtype=np.int64)
                    bigger[:stored] = out[:stored]
                    out = bigger
                out[stored] = f
                stored += 1
                if mode == M_FIRST:
                    exhausted = False
                    break
            if x == start:
                break
            x -= 1
        else:
            found = False
            while avail[x] != 0:
                v = _lowest_bit(avail[x])
                avail[x] &= ~(one << np.uint64(v))
                if slope_normalize and x >= 2 and not _slope_ok(x, v, n, f,
                                                                 inv):
                    continue
                nodes += 1
                if budget > 0 and nodes > budget:
                    exhausted = False
                    break
                f[x] = v
                if track and _apply(x, v, n, target, L, head, tail, size,
                                    nfixed, log, log_len):
                    _undo_graph(x, head, tail, size, nfixed, log, log_len)
                    f[x] = -1
                    continue
                found = True
                break
            if not exhausted:
                break
            if found:
                used_val |= one << np.uint64(v)
                used_diff |= one << np.uint64((v - x) % n)
                used_sum |= one << np.uint64((v + x) % n)
                x += 1
                if x < n:
                    m = full & ~used_val
                    if constraint & C_DIFF:
                        m &= ~_rotl(used_diff, x, n, full)
                    if constraint & C_SUM:
                        m &= ~_rotl(used_sum, (n - x) % n, n, full)
                    avail[x] = m
                continue
            if x == start:
                break
            x -= 1
        # undo the assignment at depth x
        v = f[x]
        used_val &= ~(one << np.uint64(v))
        used_diff &= ~(one << np.uint64((v - x) % n))
        used_sum &= ~(one << np.uint64((v + x) % n))
        f[x] = -1
        if track:
            _undo_graph(x, head, tail, size, nfixed, log, log_len)
    return count, out[:stored], nodes, exhausted, True


@njit(cache=True)
def _undo_graph(x, head, tail, size, nfixed, log, log_len):
    for i in range(log_len[x] - 1, -1, -1):
        k = log[x, i, 0]
        kind = log[x, i, 5]
        if kind == -1:
            nfixed[k] -= 1
        elif kind > 0:
            s = log[x, i, 1]
            e = log[x, i, 2]
            tail[k, s] = log[x, i, 3]
            head[k, e] = log[x, i, 4]
            size[k, s] -= kind
    log_len[x] = 0


@njit(cache=True)
def _min_max_cycles(n, budget):
    """Branch and bound for min over normalized permutations of the largest
    shift cycle count.  Returns (best, witness, nodes, exhausted)."""
    f = np.full(n, -1, dtype=np.int64)
    used_val = np.zeros(n, dtype=np.bool_)
    head = np.empty((n, n), dtype=np.int64)
    tail = np.empty((n, n), dtype=np.int64)
    size = np.ones((n, n), dtype=np.int64)
    closed = np.zeros(n, dtype=np.int64)  # closed cycles per shift
    closed_nodes = np.zeros(n, dtype=np.int64)
    for k in range(n):
        for x in range(n):
            head[k, x] = x
            tail[k, x] = x
    log = np.zeros((n, n, 5), dtype=np.int64)

    best = n + 1
    witness = np.zeros(n, dtype=np.int64)
    nodes = 0
    exhausted = True
    cand = np.zeros(n + 1, dtype=np.int64)
    # x is the position being assigned; position 0 gets value 0 only
    x = 0
    cand[0] = 0
    while True:
        if x == n:
            worst = 0
            for k in range(n):
                if closed[k] > worst:
                    worst = closed[k]
            if worst < best:
                best = worst
                witness[:] = f
            if best <= 2 or x == 0:
                break
            x -= 1
        else:
            found = False
            v = cand[x]
            limit = n if x > 0 else 1
            while v < limit:
                if used_val[v]:
                    v += 1
                    continue
                nodes += 1
                if budget > 0 and nodes > budget:
                    exhausted = False
                    break
                f[x] = v
                used_val[v] = True
                pruned = False
                for k in range(n):
                    u = (x - k) % n
                    s = head[k, u]
                    if s == v:
                        closed[k] += 1
                        closed_nodes[k] += size[k, s]
                        log[x, k, 4] = -size[k, s]
                    else:
                        e = tail[k, v]
                        log[x, k, 0] = s
                        log[x, k, 1] = e
                        log[x, k, 2] = u
                        log[x, k, 3] = v
                        log[x, k, 4] = size[k, v]
                        tail[k, s] = e
                        head[k, e] = s
                        size[k, s] += size[k, v]
                # cut when some shift is forced to reach the incumbent
                for k in range(n):
                    lower = closed[k]
                    if closed_nodes[k] < n:
                        lower += 1
                    if lower >= best:
                        pruned = True
                        break
                if pruned:
                    _undo_bb(x, n, f, used_val, head, tail, size, closed,
                             closed_nodes, log)
                    v += 1
                    continue
                found = True
                break
            if not exhausted:
                break
            if found:
                cand[x] = v + 1
                x += 1
                if x < n:
                    cand[x] = 1
                continue
            if x == 0:
                break
            x -= 1
        _undo_bb(x, n, f, used_val, head, tail, size, closed, closed_nodes, log)
    return best, witness, nodes, exhausted


@njit(cache=True)
def _undo_bb(x, n, f, used_val, head, tail, size, closed, closed_nodes, log):
    v = f[x]
    used_val[v] = False
    f[x] = -1
    for k in range(n - 1, -1, -1):
        kind = log[x, k, 4]
        if kind < 0:
            closed[k] -= 1
            closed_nodes[k] += kind
        else:
            s = log[x, k, 0]
            e = log[x, k, 1]
            tail[k, s] = log[x, k, 2]
            head[k, e] = log[x, k, 3]
            size[k, s] -= kind
