"""numba kernels.  Loop-for-loop twins of :mod:`._numpy`; keep them in sync."""

import numpy as np
from numba import njit

_opts = dict(cache=True, nogil=True)


@njit(**_opts)
def rainbow_triangle(mat):
    n = mat.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            cab = mat[a, b]
            if cab < 0:
                continue
            for c in range(b + 1, n):
                cac = mat[a, c]
                cbc = mat[b, c]
                if cac < 0 or cbc < 0:
                    continue
                if cab != cac and cab != cbc and cac != cbc:
                    return a, b, c
    return -1, -1, -1


@njit(**_opts)
def _degrees(mat, ncolors):
    n = mat.shape[0]
    deg = np.zeros((n, ncolors), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            c = mat[u, v]
            if c >= 0:
                deg[u, c] += 1
    return deg


@njit(**_opts)
def _ds_edge(mat, deg, x, y, c, n, m):
    # edge xy has color c; leaves: n at one center, m at the other
    a = deg[x, c] - 1
    b = deg[y, c] - 1
    if a < m or b < m:
        return False
    if a < n and b < n:
        return False
    common = 0
    for w in range(mat.shape[0]):
        if mat[x, w] == c and mat[y, w] == c:
            common += 1
    return a + b - common >= n + m


@njit(**_opts)
def _ds_oriented(mat, deg, x, y, c, n, m):
    a = deg[x, c] - 1
    b = deg[y, c] - 1
    if a < n or b < m:
        return False
    common = 0
    for w in range(mat.shape[0]):
        if mat[x, w] == c and mat[y, w] == c:
            common += 1
    return a + b - common >= n + m


@njit(**_opts)
def double_star(mat, ncolors, n, m):
    """First (n-side centre, m-side centre) of a monochromatic S(n, m), or (-1, -1)."""
    size = mat.shape[0]
    if n + m + 2 > size:
        return -1, -1
    deg = _degrees(mat, ncolors)
    for a in range(size):
        for b in range(a + 1, size):
            c = mat[a, b]
            if c < 0:
                continue
            if _ds_oriented(mat, deg, a, b, c, n, m):
                return a, b
            if _ds_oriented(mat, deg, b, a, c, n, m):
                return b, a
    return -1, -1


@njit(**_opts)
def module_closure(mat, x, y):
    """Smallest module of a complete edge-coloured graph containing x and y."""
    size = mat.shape[0]
    inside = np.zeros(size, dtype=np.bool_)
    queue = np.empty(size, dtype=np.int64)
    inside[x] = True
    queue[0] = y
    inside[y] = True
    head = 0
    tail = 1
    # v splits the module iff it sees some member differently from x
    while head < tail:
        w = queue[head]
        head += 1
        for v in range(size):
            if not inside[v] and mat[v, w] != mat[v, x]:
                inside[v] = True
                queue[tail] = v
                tail += 1
    return inside


@njit(**_opts)
def _node_check(mat, deg, u, v, c, n, m, forbid_rainbow, vertex_sym):
    size = mat.shape[0]
    if vertex_sym:
        if v == 0 and u >= 2:
            if c != mat[u - 1, 0] and deg[0, c] > 1:
                return 3
        d0 = deg[0, 0]
        if mat[u, 0] == 0:
            d0 += size - 1 - u
        if deg[u, c] > d0 or deg[v, c] > d0:
            return 3
    if forbid_rainbow:
        for w in range(size):
            a = mat[u, w]
            b = mat[v, w]
            if a < 0 or b < 0:
                continue
            if a != c and b != c and a != b:
                return 1
    if n + m + 2 <= size:
        if _ds_edge(mat, deg, u, v, c, n, m):
            return 2
        for w in range(size):
            if w != v and mat[u, w] == c and _ds_edge(mat, deg, u, w, c, n, m):
                return 2
            if w != u and mat[v, w] == c and _ds_edge(mat, deg, v, w, c, n, m):
                return 2
    return 0


@njit(**_opts)
def _leaf_check(mat, ncolors, n, m, forbid_rainbow):
    if forbid_rainbow:
        a, _, _ = rainbow_triangle(mat)
        if a >= 0:
            return 4
    x, _ = double_star(mat, ncolors, n, m)
    if x >= 0:
        return 4
    return 0


@njit(**_opts)
def search(mat, deg, eu, ev, choice, nxt, maxc, fixed, state, stats,
           ncolors, n, m, forbid_rainbow, canonical, prune, vertex_sym,
           node_limit):
    """Resumable depth-first colouring search.

    Returns 0 (node limit hit, state saved), 1 (complete colouring in ``mat``)
    or 2 (subtree exhausted).
    """
    n_edges = eu.shape[0]
    pos = state[0]
    while True:
        if pos == n_edges:
            state[0] = pos
            return 1
        if stats[0] >= node_limit:
            state[0] = pos
            return 0
        c = nxt[pos]
        hi = ncolors - 1
        if canonical and maxc[pos] + 1 < hi:
            hi = maxc[pos] + 1
        f = fixed[pos]
        if f >= 0:
            if c < f:
                c = f
            if f < hi:
                hi = f
        if c > hi:
            if pos == 0:
                state[0] = 0
                return 2
            pos -= 1
            u = eu[pos]
            v = ev[pos]
            old = choice[pos]
            mat[u, v] = -1
            mat[v, u] = -1
            deg[u, old] -= 1
            deg[v, old] -= 1
            nxt[pos] = old + 1
            continue
        stats[0] += 1
        u = eu[pos]
        v = ev[pos]
        mat[u, v] = c
        mat[v, u] = c
        deg[u, c] += 1
        deg[v, c] += 1
        choice[pos] = c
        code = 0
        if prune:
            code = _node_check(mat, deg, u, v, c, n, m, forbid_rainbow, vertex_sym)
        elif pos == n_edges - 1:
            code = _leaf_check(mat, ncolors, n, m, forbid_rainbow)
        if code != 0:
            stats[code] += 1
            mat[u, v] = -1
            mat[v, u] = -1
            deg[u, c] -= 1
            deg[v, c] -= 1
            nxt[pos] = c + 1
            continue
        maxc[pos + 1] = max(maxc[pos], c)
        pos += 1
        if pos < n_edges:
            nxt[pos] = 0
