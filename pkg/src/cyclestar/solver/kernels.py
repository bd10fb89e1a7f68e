"""Inner loops of the exact solver and the brute-force oracle.

All kernels take plain int64 arrays so they compile under numba's nopython
mode; with the JIT disabled the same functions run as ordinary Python.
"""
import numpy as np

from ._accel import maybe_njit

FOUND = 0
EXHAUSTED = 1
PAUSED = 2


@maybe_njit
def backtrack(nbr_ptr, nbr_pos, twin_prev, k, labels, used, state, max_nodes):
    """Resumable depth-first search for an edge irregular labeling with span <= k.

    Vertices are addressed by search position ``0..n-1``. ``nbr_pos[nbr_ptr[p]:
    nbr_ptr[p+1]]`` lists the positions ``< p`` adjacent to position ``p``;
    ``twin_prev[p]`` is the position of the previous false twin, or -1.
    ``labels`` holds the label per position (0 = untried), ``used`` flags the
    edge weights currently taken (size ``2k + 1``) and ``state = [p, nodes]``
    is the cursor. Each successful label placement counts as one node.
    Returns FOUND, EXHAUSTED, or PAUSED when placing one more node would
    exceed ``max_nodes`` for this call (``max_nodes < 0`` disables the limit).
    A paused state resumes exactly where it stopped.
    """
    n = labels.shape[0]
    p = state[0]
    nodes = state[1]
    stop_at = nodes + max_nodes
    while True:
        if p >= n:
            state[0] = p
            state[1] = nodes
            return FOUND
        if p < 0:
            state[0] = p
            state[1] = nodes
            return EXHAUSTED
        lo = nbr_ptr[p]
        hi = nbr_ptr[p + 1]
        cur = labels[p]
        if cur > 0:
            for t in range(lo, hi):
                used[cur + labels[nbr_pos[t]]] = 0
            start = cur + 1
        else:
            start = 1
            if twin_prev[p] >= 0:
                start = labels[twin_prev[p]]
        placed = 0
        for c in range(start, k + 1):
            t = lo
            while t < hi:
                w = c + labels[nbr_pos[t]]
                if used[w]:
                    break
                used[w] = 1
                t += 1
            if t == hi:
                placed = 1
                break
            for s in range(lo, t):
                used[c + labels[nbr_pos[s]]] = 0
        if placed:
            if max_nodes >= 0 and nodes >= stop_at:
                # undo the trial; resuming re-derives the same candidate
                for s in range(lo, hi):
                    used[c + labels[nbr_pos[s]]] = 0
                state[0] = p
                state[1] = nodes
                return PAUSED
            labels[p] = c
            nodes += 1
            p += 1
            if p < n:
                labels[p] = 0
        else:
            labels[p] = 0
            p -= 1


@maybe_njit
def brute_force_scan(eu, ev, n, k, start, count, weight_seen):
    """Scan labelings ``start .. start+count-1`` in lexicographic order.

    Labeling index ``idx`` has vertex 0 as its most significant base-``k``
    digit; digit ``d`` maps to label ``d + 1``. Returns the first index whose
    edge weights are pairwise distinct, or -1.
    """
    m = eu.shape[0]
    digits = np.zeros(n, dtype=np.int64)
    rem = start
    for j in range(n - 1, -1, -1):
        digits[j] = rem % k
        rem //= k
    for off in range(count):
        ok = True
        for i in range(m):
            w = digits[eu[i]] + digits[ev[i]]
            if weight_seen[w]:
                ok = False
                for s in range(i):
                    weight_seen[digits[eu[s]] + digits[ev[s]]] = 0
                break
            weight_seen[w] = 1
        if ok:
            for s in range(m):
                weight_seen[digits[eu[s]] + digits[ev[s]]] = 0
            return start + off
        j = n - 1
        while j >= 0:
            digits[j] += 1
            if digits[j] < k:
                break
            digits[j] = 0
            j -= 1
    return -1


def brute_force_scan_numpy(eu, ev, n, k, start, count, weight_seen=None):
    """Vectorized twin of ``brute_force_scan`` with the same contract."""
    idx = np.arange(start, start + count, dtype=np.int64)
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % k
    w = np.sort(digits[:, eu] + digits[:, ev], axis=1)
    if w.shape[1] > 1:
        good = np.all(np.diff(w, axis=1) > 0, axis=1)
    else:
        good = np.ones(idx.shape[0], dtype=bool)
    hits = np.flatnonzero(good)
    return int(idx[hits[0]]) if hits.size else -1
