"""Hot inner loops: exhaustive subset scans, canonical forms, ranks mod p and
the Hochster sum.

Each kernel has a numba ``@njit`` implementation and a numpy/pure-Python
fallback.  The numba path is used when numba imports and the environment
variable ``BEI_LAB_NUMBA`` is not ``0``; both paths return identical results
(see ``tests/test_kernels.py`` and ``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and os.environ.get("BEI_LAB_NUMBA", "1") != "0"


def _identity(*args, **kwargs):
    if args and callable(args[0]) and len(args) == 1 and not kwargs:
        return args[0]
    return lambda fn: fn


jit = njit if numba is not None else _identity


# -- numba kernels -------------------------------------------------------------

@jit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@jit(cache=True)
def _connected(adj, mask):
    low = mask & -mask
    seen = low
    frontier = low
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            v = 0
            while (b >> v) != 1:
                v += 1
            nxt |= adj[v]
            f ^= b
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


@jit(cache=True)
def _nb_longest_induced_path(adj, n):
    best = 0
    for mask in range(1, 1 << n):
        k = _popcount(mask)
        if k - 1 <= best:
            continue
        edges = 0
        ok = True
        for v in range(n):
            if (mask >> v) & 1:
                d = _popcount(adj[v] & mask)
                if d > 2:
                    ok = False
                    break
                edges += d
        if not ok or edges // 2 != k - 1:
            continue
        if _connected(adj, mask):
            best = k - 1
    return best


@jit(cache=True)
def _nb_longest_induced_cycle(adj, n):
    best = 0
    for mask in range(1, 1 << n):
        k = _popcount(mask)
        if k < 3 or k <= best:
            continue
        ok = True
        for v in range(n):
            if (mask >> v) & 1:
                if _popcount(adj[v] & mask) != 2:
                    ok = False
                    break
        if ok and _connected(adj, mask):
            best = k
    return best


@jit(cache=True)
def _nb_canonical_code(adj, n):
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),... MSB first
    total = n * (n - 1) // 2
    best = (1 << total) - 1 if total > 0 else 0
    perm = np.zeros(n, np.int64)
    nxt = np.zeros(n + 1, np.int64)
    prefix = np.zeros(n + 1, np.int64)
    used = 0
    depth = 0
    nxt[0] = 0
    while depth >= 0:
        if depth == n:
            if prefix[n] < best:
                best = prefix[n]
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
            continue
        v = nxt[depth]
        while v < n and (used >> v) & 1:
            v += 1
        if v >= n:
            depth -= 1
            if depth >= 0:
                used &= ~(1 << perm[depth])
            continue
        nxt[depth] = v + 1
        col = 0
        for i in range(depth):
            col = (col << 1) | ((adj[perm[i]] >> v) & 1)
        code = (prefix[depth] << depth) | col
        nbits = depth * (depth + 1) // 2
        if code > (best >> (total - nbits)):
            continue
        perm[depth] = v
        used |= 1 << v
        prefix[depth + 1] = code
        depth += 1
        nxt[depth] = 0
    return best


@jit(cache=True)
def _modinv(a, p):
    t, nt, r, nr = 0, 1, p, a % p
    while nr:
        q = r // nr
        t, nt = nt, t - q * nt
        r, nr = nr, r - q * nr
    return t % p


@jit(cache=True)
def _nb_rank_mod_p(mat, p):
    A = mat % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, cols):
                tmp = A[r, k]
                A[r, k] = A[piv, k]
                A[piv, k] = tmp
        inv = _modinv(A[r, c], p)
        for k in range(c, cols):
            A[r, k] = A[r, k] * inv % p
        for i in range(r + 1, rows):
            f = A[i, c]
            if f:
                for k in range(c, cols):
                    A[i, k] = (A[i, k] - f * A[r, k]) % p
        r += 1
    return r


@jit(cache=True)
def _nb_hochster(gens, N, p):
    betti = np.zeros((N + 2, N + 1), np.int64)
    index = np.zeros(1 << N, np.int64)
    faces = np.zeros(1 << N, np.int64)
    sizes = np.zeros(1 << N, np.int64)
    for sigma in range(1 << N):
        covered = 0
        for g in gens:
            if g & sigma == g:
                covered |= g
        if covered != sigma:
            continue  # some vertex is a cone point: acyclic
        s = _popcount(sigma)
        # faces of the restriction, grouped by size 0..s
        counts = np.zeros(s + 2, np.int64)
        nf = 0
        sub = sigma
        while True:
            face = True
            for g in gens:
                if g & sub == g:
                    face = False
                    break
            if face:
                faces[nf] = sub
                k = _popcount(sub)
                sizes[nf] = k
                index[sub] = counts[k]
                counts[k] += 1
                nf += 1
            if sub == 0:
                break
            sub = (sub - 1) & sigma
        # ranks of boundary maps C_k -> C_{k-1} on faces of size k
        ranks = np.zeros(s + 2, np.int64)
        for k in range(1, s + 1):
            if counts[k] == 0 or counts[k - 1] == 0:
                continue
            M = np.zeros((counts[k - 1], counts[k]), np.int64)
            for a in range(nf):
                if sizes[a] != k:
                    continue
                f = faces[a]
                col = index[f]
                sign = 1
                for v in range(N):
                    if (f >> v) & 1:
                        row = index[f & ~(1 << v)]
                        M[row, col] = sign % p
                        sign = -sign
            ranks[k] = _nb_rank_mod_p(M, p)
        for k in range(0, s + 1):
            h = counts[k] - ranks[k] - ranks[k + 1]
            if h > 0:
                # reduced homology in dimension k-1 contributes to beta_{s-k, s}
                betti[s - k, s] += h
    return betti


# -- numpy / python fallbacks ----------------------------------------------------

def _np_popcount(a):
    return np.bitwise_count(a).astype(np.int64)


def _np_connected_masks(adj, n, masks):
    low = masks & -masks
    seen = low.copy()
    for _ in range(n):
        reach = seen.copy()
        for v in range(n):
            reach |= np.where((seen >> v) & 1, adj[v], 0)
        seen = reach & masks
    return seen == masks


def _np_longest_induced_path(adj, n):
    masks = np.arange(1, 1 << n, dtype=np.int64)
    k = _np_popcount(masks)
    edges = np.zeros_like(masks)
    maxdeg = np.zeros_like(masks)
    for v in range(n):
        d = np.where((masks >> v) & 1, _np_popcount(adj[v] & masks), 0)
        edges += d
        maxdeg = np.maximum(maxdeg, d)
    cand = masks[(maxdeg <= 2) & (edges // 2 == k - 1)]
    ok = cand[_np_connected_masks(adj, n, cand)]
    return int(_np_popcount(ok).max()) - 1 if ok.size else 0


def _np_longest_induced_cycle(adj, n):
    masks = np.arange(1, 1 << n, dtype=np.int64)
    k = _np_popcount(masks)
    good = k >= 3
    for v in range(n):
        inside = ((masks >> v) & 1).astype(bool)
        good &= ~inside | (_np_popcount(adj[v] & masks) == 2)
    cand = masks[good]
    ok = cand[_np_connected_masks(adj, n, cand)]
    return int(_np_popcount(ok).max()) if ok.size else 0


def _np_canonical_code(adj, n):
    if n <= 1:
        return 0
    A = np.array([[(adj[i] >> j) & 1 for j in range(n)] for i in range(n)], dtype=np.int64)
    P = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    codes = np.zeros(len(P), dtype=np.int64)
    for j in range(1, n):
        for i in range(j):
            codes = (codes << 1) | A[P[:, i], P[:, j]]
    return int(codes.min())


def _np_rank_mod_p(mat, p):
    A = np.array(mat, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r])) % p
        r += 1
    return r


def hochster_betti_py(gens, N, rank):
    """Reference implementation of the Hochster sum with a pluggable rank
    function (used for Q, and as the fallback for GF(p))."""
    betti = np.zeros((N + 2, N + 1), dtype=np.int64)
    gens = [int(g) for g in gens]
    for sigma in range(1 << N):
        covered = 0
        for g in gens:
            if g & sigma == g:
                covered |= g
        if covered != sigma:
            continue
        verts = [v for v in range(N) if (sigma >> v) & 1]
        s = len(verts)
        by_size: list[list[int]] = [[] for _ in range(s + 1)]
        for bits in range(1 << s):
            sub = 0
            for k, v in enumerate(verts):
                if (bits >> k) & 1:
                    sub |= 1 << v
            if not any(g & sub == g for g in gens):
                by_size[bin(sub).count("1")].append(sub)
        counts = [len(x) for x in by_size] + [0]
        ranks = [0] * (s + 2)
        for k in range(1, s + 1):
            if not by_size[k] or not by_size[k - 1]:
                continue
            index = {f: i for i, f in enumerate(by_size[k - 1])}
            M = [[0] * len(by_size[k]) for _ in by_size[k - 1]]
            for col, f in enumerate(by_size[k]):
                sign = 1
                for v in range(N):
                    if (f >> v) & 1:
                        M[index[f & ~(1 << v)]][col] = sign
                        sign = -sign
            ranks[k] = rank(M)
        for k in range(s + 1):
            h = counts[k] - ranks[k] - ranks[k + 1]
            if h > 0:
                betti[s - k, s] += h
    return betti


# -- dispatch -------------------------------------------------------------------------

def _adj_array(adj) -> np.ndarray:
    return np.asarray(adj, dtype=np.int64)


def longest_induced_path(adj, n: int) -> int:
    a = _adj_array(adj)
    return int(_nb_longest_induced_path(a, n)) if NUMBA_ENABLED else _np_longest_induced_path(a, n)


def longest_induced_cycle(adj, n: int) -> int:
    """Length of the longest induced cycle (0 if the graph is a forest)."""
    a = _adj_array(adj)
    return int(_nb_longest_induced_cycle(a, n)) if NUMBA_ENABLED else _np_longest_induced_cycle(a, n)


def canonical_code(adj, n: int) -> int:
    a = _adj_array(adj)
    return int(_nb_canonical_code(a, n)) if NUMBA_ENABLED else _np_canonical_code(a, n)


def rank_mod_p(mat, p: int) -> int:
    A = np.asarray(mat, dtype=np.int64)
    if A.size == 0:
        return 0
    return int(_nb_rank_mod_p(A, p)) if NUMBA_ENABLED else _np_rank_mod_p(A, p)


def hochster_betti_mod_p(gens, N: int, p: int) -> np.ndarray:
    if NUMBA_ENABLED:
        return _nb_hochster(np.asarray(gens, dtype=np.int64), N, p)
    return hochster_betti_py(gens, N, lambda M: _np_rank_mod_p(M, p) if M and M[0] else 0)
