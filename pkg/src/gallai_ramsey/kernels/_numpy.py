"""Pure-numpy kernels.  Same contracts and outputs as :mod:`._jit`."""

import numpy as np


def rainbow_triangle(mat):
    size = mat.shape[0]
    for a in range(size):
        row = mat[a]
        for b in range(a + 1, size):
            cab = row[b]
            if cab < 0:
                continue
            cac = row[b + 1:]
            cbc = mat[b, b + 1:]
            hit = (cac >= 0) & (cbc >= 0) & (cac != cab) & (cbc != cab) & (cac != cbc)
            if hit.any():
                return a, b, b + 1 + int(np.argmax(hit))
    return -1, -1, -1


def double_star(mat, ncolors, n, m):
    size = mat.shape[0]
    if n + m + 2 > size:
        return -1, -1
    forward = np.zeros((size, size), dtype=bool)
    backward = np.zeros((size, size), dtype=bool)
    for c in range(ncolors):
        adj = mat == c
        if not adj.any():
            continue
        a_int = adj.astype(np.int64)
        deg = a_int.sum(axis=1)
        common = a_int @ a_int
        a = deg[:, None] - 1
        b = deg[None, :] - 1
        union_ok = a + b - common >= n + m
        forward |= adj & union_ok & (a >= n) & (b >= m)
        backward |= adj & union_ok & (a >= m) & (b >= n)
    hits = np.triu(forward | backward, k=1)
    if not hits.any():
        return -1, -1
    x, y = np.argwhere(hits)[0]
    if forward[x, y]:
        return int(x), int(y)
    return int(y), int(x)


def module_closure(mat, x, y):
    size = mat.shape[0]
    inside = np.zeros(size, dtype=bool)
    inside[x] = inside[y] = True
    ref = mat[:, x][:, None]
    while True:
        split = (mat[:, inside] != ref).any(axis=1) & ~inside
        if not split.any():
            return inside
        inside |= split


def _ds_any(mat, deg_c, x, c, n, m):
    # any c-coloured edge at x that is the centre edge of an S(n, m)
    adj_x = mat[x] == c
    nbrs = np.flatnonzero(adj_x)
    if nbrs.size == 0:
        return False
    a = deg_c[x] - 1
    b = deg_c[nbrs] - 1
    common = ((mat[nbrs] == c) & adj_x).sum(axis=1)
    ok = (np.minimum(a, b) >= m) & (np.maximum(a, b) >= n) & (a + b - common >= n + m)
    return bool(ok.any())


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
        ru = mat[u]
        rv = mat[v]
        if ((ru >= 0) & (rv >= 0) & (ru != c) & (rv != c) & (ru != rv)).any():
            return 1
    if n + m + 2 <= size:
        deg_c = deg[:, c]
        if _ds_any(mat, deg_c, u, c, n, m) or _ds_any(mat, deg_c, v, c, n, m):
            return 2
    return 0


def _leaf_check(mat, ncolors, n, m, forbid_rainbow):
    if forbid_rainbow and rainbow_triangle(mat)[0] >= 0:
        return 4
    if double_star(mat, ncolors, n, m)[0] >= 0:
        return 4
    return 0


def search(mat, deg, eu, ev, choice, nxt, maxc, fixed, state, stats,
           ncolors, n, m, forbid_rainbow, canonical, prune, vertex_sym,
           node_limit):
    n_edges = eu.shape[0]
    pos = int(state[0])
    eu = eu.tolist()
    ev = ev.tolist()
    fixed = fixed.tolist()
    while True:
        if pos == n_edges:
            state[0] = pos
            return 1
        if stats[0] >= node_limit:
            state[0] = pos
            return 0
        c = int(nxt[pos])
        hi = ncolors - 1
        if canonical and maxc[pos] + 1 < hi:
            hi = int(maxc[pos]) + 1
        f = fixed[pos]
        if f >= 0:
            c = max(c, f)
            hi = min(hi, f)
        if c > hi:
            if pos == 0:
                state[0] = 0
                return 2
            pos -= 1
            u, v = eu[pos], ev[pos]
            old = int(choice[pos])
            mat[u, v] = mat[v, u] = -1
            deg[u, old] -= 1
            deg[v, old] -= 1
            nxt[pos] = old + 1
            continue
        stats[0] += 1
        u, v = eu[pos], ev[pos]
        mat[u, v] = mat[v, u] = c
        deg[u, c] += 1
        deg[v, c] += 1
        choice[pos] = c
        code = 0
        if prune:
            code = _node_check(mat, deg, u, v, c, n, m, forbid_rainbow, vertex_sym)
        elif pos == n_edges - 1:
            code = _leaf_check(mat, ncolors, n, m, forbid_rainbow)
        if code:
            stats[code] += 1
            mat[u, v] = mat[v, u] = -1
            deg[u, c] -= 1
            deg[v, c] -= 1
            nxt[pos] = c + 1
            continue
        maxc[pos + 1] = max(maxc[pos], c)
        pos += 1
        if pos < n_edges:
            nxt[pos] = 0
