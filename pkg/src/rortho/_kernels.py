"""Numba kernels for the hot loops.

Everything here works on 0-based int64 arrays and mutates in place.  The
public wrappers in :mod:`rortho.switching`, :mod:`rortho.construct` and
:mod:`rortho.randgen` do argument checking, copying and 1-based conversion.
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# switch moves
#
# Each *_cells kernel traces one structure and writes the affected cells into
# ``buf`` (shape (m, 2), rows then columns); it returns the number of cells.
# ``swap_pairwise`` / ``swap_symbols`` then exchange the two symbols along the trace.
# ---------------------------------------------------------------------------


@njit(cache=True)
def row_cycle_cells(A, r, s, c0, buf):
    n = A.shape[1]
    pos_r = np.empty(n, np.int64)
    for j in range(n):
        pos_r[A[r, j]] = j
    m = 0
    c = c0
    while True:
        buf[m, 0] = r
        buf[m, 1] = c
        buf[m + 1, 0] = s
        buf[m + 1, 1] = c
        m += 2
        c = pos_r[A[s, c]]
        if c == c0:
            break
    return m


@njit(cache=True)
def symbol_cycle_cells(A, a, b, i0, j0, buf):
    """Alternating row/column trace of the a/b cycle through (i0, j0).

    Only valid on squares, where every row and column holds both symbols.
    """
    n = A.shape[0]
    m = 0
    i = i0
    j = j0
    while True:
        buf[m, 0] = i
        buf[m, 1] = j
        m += 1
        want = b if A[i, j] == a else a
        for jj in range(n):
            if A[i, jj] == want:
                j = jj
                break
        buf[m, 0] = i
        buf[m, 1] = j
        m += 1
        want = b if A[i, j] == a else a
        for ii in range(n):
            if A[ii, j] == want:
                i = ii
                break
        if i == i0 and j == j0:
            break
    return m


@njit(cache=True)
def column_path_cells(A, c, d, i0, buf):
    """Column path of a rectangle; returns cells in the order they are swapped.

    The trace is done on the unmodified grid: the symbol A[i, d] is looked up
    among the original entries of column c.
    """
    k = A.shape[0]
    m = 0
    i = i0
    for _ in range(k + 1):
        buf[m, 0] = i
        buf[m, 1] = c
        buf[m + 1, 0] = i
        buf[m + 1, 1] = d
        m += 2
        nxt = -1
        for ii in range(k):
            if A[ii, c] == A[i, d]:
                nxt = ii
                break
        if nxt < 0:
            break
        i = nxt
    return m


@njit(cache=True)
def symbol_path_cells(A, a, b, i0, j0, buf):
    k, n = A.shape
    m = 0
    i = i0
    j = j0
    for _ in range(2 * k * n):
        buf[m, 0] = i
        buf[m, 1] = j
        m += 1
        want = b if A[i, j] == a else a
        for jj in range(n):
            if A[i, jj] == want:
                j = jj
                break
        buf[m, 0] = i
        buf[m, 1] = j
        m += 1
        want = b if A[i, j] == a else a
        nxt = -1
        for ii in range(k):
            if A[ii, j] == want:
                nxt = ii
                break
        if nxt < 0:
            break
        i = nxt
    return m


@njit(cache=True)
def swap_pairwise(A, buf, m):
    """Swap consecutive cell pairs (0,1), (2,3), ... of ``buf``."""
    for t in range(0, m, 2):
        i1 = buf[t, 0]
        j1 = buf[t, 1]
        i2 = buf[t + 1, 0]
        j2 = buf[t + 1, 1]
        x = A[i1, j1]
        A[i1, j1] = A[i2, j2]
        A[i2, j2] = x


@njit(cache=True)
def swap_symbols(A, buf, m, a, b):
    for t in range(m):
        i = buf[t, 0]
        j = buf[t, 1]
        A[i, j] = b if A[i, j] == a else a


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------


@njit(cache=True)
def pair_count(A, B, seen):
    n = A.shape[0]
    seen[:] = False
    r = 0
    for i in range(n):
        for j in range(n):
            key = A[i, j] * n + B[i, j]
            if not seen[key]:
                seen[key] = True
                r += 1
    return r


@njit(cache=True)
def self_pair_count(A, seen):
    n = A.shape[0]
    seen[:] = False
    r = 0
    for i in range(n):
        for j in range(n):
            key = A[i, j] * n + A[j, i]
            if not seen[key]:
                seen[key] = True
                r += 1
    return r


# ---------------------------------------------------------------------------
# hill climbing on complete squares
# ---------------------------------------------------------------------------


@njit(cache=True)
def _random_cycle(A, buf):
    """Apply a uniformly chosen cycle move to square A; return (m, kind, a, b).

    kind 0: row cycle, 1: column cycle, 2: symbol cycle.  The cells are left in
    ``buf`` so the caller can undo the move by swapping again.
    """
    n = A.shape[0]
    kind = np.random.randint(3)
    if kind == 0:
        r = np.random.randint(n)
        s = np.random.randint(n - 1)
        if s >= r:
            s += 1
        m = row_cycle_cells(A, r, s, np.random.randint(n), buf)
        swap_pairwise(A, buf, m)
        return m, kind, 0, 0
    if kind == 1:
        At = A.T
        c = np.random.randint(n)
        d = np.random.randint(n - 1)
        if d >= c:
            d += 1
        m = row_cycle_cells(At, c, d, np.random.randint(n), buf)
        for t in range(m):
            x = buf[t, 0]
            buf[t, 0] = buf[t, 1]
            buf[t, 1] = x
        swap_pairwise(A, buf, m)
        return m, kind, 0, 0
    a = np.random.randint(n)
    b = np.random.randint(n - 1)
    if b >= a:
        b += 1
    i0 = np.random.randint(n)
    j0 = 0
    for j in range(n):
        if A[i0, j] == a:
            j0 = j
            break
    m = symbol_cycle_cells(A, a, b, i0, j0, buf)
    swap_symbols(A, buf, m, a, b)
    return m, kind, a, b


@njit(cache=True)
def _undo(A, buf, m, kind, a, b):
    if kind == 2:
        swap_symbols(A, buf, m, a, b)
    else:
        swap_pairwise(A, buf, m)


STRICT = 0
SIDEWAYS = 1
METROPOLIS = 2


@njit(cache=True)
def local_search(A, B, self_mode, target, max_iters, seed, rule, temperature):
    """Random cycle switches steered toward r == target.

    r is r(A, B), or r(A, A^T) when ``self_mode`` is set (B is then ignored
    and every move hits A).  A proposal that lowers |r - target| is always
    kept.  Under SIDEWAYS ties are kept too; under METROPOLIS a proposal that
    raises the distance by d is kept with probability exp(-d / temperature).
    Returns (iterations used, final r); A and B are updated in place.
    """
    np.random.seed(seed)
    n = A.shape[0]
    seen = np.zeros(n * n, np.bool_)
    buf = np.empty((2 * n * n, 2), np.int64)
    if self_mode:
        r = self_pair_count(A, seen)
    else:
        r = pair_count(A, B, seen)
    it = 0
    while r != target and it < max_iters:
        it += 1
        X = A if (self_mode or np.random.randint(2) == 0) else B
        m, kind, a, b = _random_cycle(X, buf)
        if self_mode:
            r2 = self_pair_count(A, seen)
        else:
            r2 = pair_count(A, B, seen)
        delta = abs(r2 - target) - abs(r - target)
        if delta < 0:
            keep = True
        elif delta == 0:
            keep = rule != STRICT
        else:
            keep = rule == METROPOLIS and np.random.random() < np.exp(-delta / temperature)
        if keep:
            r = r2
        else:
            _undo(X, buf, m, kind, a, b)
    return it, r


# ---------------------------------------------------------------------------
# Jacobson-Matthews chain on incidence cubes
#
# ``bad`` holds the improper cell (x, y, z) or x = -1 when the cube is proper.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _find_one(M, x, y, z, axis, skip):
    """Index along ``axis`` of a 1 in the line through (x, y, z), skipping ``skip``."""
    n = M.shape[0]
    for t in range(n):
        if t == skip:
            continue
        if axis == 0:
            v = M[t, y, z]
        elif axis == 1:
            v = M[x, t, z]
        else:
            v = M[x, y, t]
        if v == 1:
            return t
    return -1


@njit(cache=True)
def _pick_one(M, x, y, z, axis):
    """One of the two 1-cells on a line through an improper cell, at random."""
    first = _find_one(M, x, y, z, axis, -1)
    second = _find_one(M, x, y, z, axis, first)
    if np.random.randint(2) == 0:
        return first
    return second


@njit(cache=True)
def jm_move(M, bad):
    n = M.shape[0]
    if n < 2:
        return
    if bad[0] < 0:
        while True:
            x = np.random.randint(n)
            y = np.random.randint(n)
            z = np.random.randint(n)
            if M[x, y, z] == 0:
                break
        x1 = _find_one(M, x, y, z, 0, -1)
        y1 = _find_one(M, x, y, z, 1, -1)
        z1 = _find_one(M, x, y, z, 2, -1)
    else:
        x = bad[0]
        y = bad[1]
        z = bad[2]
        x1 = _pick_one(M, x, y, z, 0)
        y1 = _pick_one(M, x, y, z, 1)
        z1 = _pick_one(M, x, y, z, 2)
    M[x, y, z] += 1
    M[x, y1, z1] += 1
    M[x1, y, z1] += 1
    M[x1, y1, z] += 1
    M[x, y, z1] -= 1
    M[x, y1, z] -= 1
    M[x1, y, z] -= 1
    M[x1, y1, z1] -= 1
    if M[x1, y1, z1] < 0:
        bad[0] = x1
        bad[1] = y1
        bad[2] = z1
    else:
        bad[0] = -1


@njit(cache=True)
def jm_steps(M, bad, steps, seed):
    np.random.seed(seed)
    for _ in range(steps):
        jm_move(M, bad)


@njit(cache=True)
def _cyclic_cube(n):
    M = np.zeros((n, n, n), np.int8)
    for i in range(n):
        for j in range(n):
            M[i, j, (i + j) % n] = 1
    return M


@njit(cache=True)
def _decode(M, out):
    n = M.shape[0]
    for i in range(n):
        for j in range(n):
            for s in range(n):
                if M[i, j, s] == 1:
                    out[i, j] = s
                    break


@njit(cache=True)
def jm_sample_batch(n, count, mixing, seed):
    """``count`` squares, each from a fresh cyclic start.

    The chain is inspected only every ``mixing`` moves and the first proper
    state seen at such a checkpoint is returned.  Stopping at the first
    proper state after ``mixing`` moves instead would favour squares that
    are often entered from improper states, which breaks uniformity.
    Each block gets one extra move with probability 1/2: at n = 2 every move
    flips between the two squares, so fixed even blocks would never leave
    the start.
    """
    np.random.seed(seed)
    out = np.empty((count, n, n), np.int64)
    bad = np.empty(3, np.int64)
    for t in range(count):
        M = _cyclic_cube(n)
        bad[0] = -1
        while True:
            for _ in range(mixing + np.random.randint(2)):
                jm_move(M, bad)
            if bad[0] < 0:
                break
        _decode(M, out[t])
    return out


@njit(cache=True)
def batch_pair_counts(X, Y):
    count, n, _ = X.shape
    seen = np.zeros(n * n, np.bool_)
    out = np.empty(count, np.int64)
    for t in range(count):
        out[t] = pair_count(X[t], Y[t], seen)
    return out


@njit(cache=True)
def batch_self_counts(X):
    count, n, _ = X.shape
    seen = np.zeros(n * n, np.bool_)
    out = np.empty(count, np.int64)
    for t in range(count):
        out[t] = self_pair_count(X[t], seen)
    return out
