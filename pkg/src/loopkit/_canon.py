"""Canonical labelings of loop tables (numba kernel).

A labeling is grown from seeds: label 0 is the identity, the next seed gets
the next free label, and the subloop generated so far is closed by scanning
products of labeled elements in a fixed order, labeling new elements as
they appear. When the closure is not the whole loop another seed is chosen.
Seeds are restricted to unlabeled elements of the smallest invariant class,
which keeps the candidate set isomorphism-invariant. The canonical table is
the lexicographically least relabeled table over all seed sequences.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def element_invariants(T):
    """Isomorphism-invariant 64-bit code per element."""
    n = T.shape[0]
    base = np.zeros(n, dtype=np.int64)
    for x in range(n):
        k = 1
        p = x
        while p != 0:
            p = T[p, x]
            k += 1
        comm = 0
        roots = 0
        for y in range(n):
            if T[x, y] == T[y, x]:
                comm += 1
            if T[y, y] == x:
                roots += 1
        lnuc = 0
        mnuc = 0
        rnuc = 0
        for y in range(n):
            for z in range(n):
                if T[T[x, y], z] == T[x, T[y, z]]:
                    lnuc += 1
                if T[T[y, x], z] == T[y, T[x, z]]:
                    mnuc += 1
                if T[T[y, z], x] == T[y, T[z, x]]:
                    rnuc += 1
        sq = T[x, x]
        code = k
        code = code * 1000003 + comm
        code = code * 1000003 + roots
        code = code * 1000003 + lnuc
        code = code * 1000003 + mnuc
        code = code * 1000003 + rnuc
        base[x] = code
    # one refinement round over the products with every other element
    refined = np.zeros(n, dtype=np.int64)
    row = np.zeros(n, dtype=np.int64)
    for x in range(n):
        for y in range(n):
            h = base[y] * 31 + base[T[x, y]] * 1009 + base[T[y, x]] * 7919
            row[y] = h
        row.sort()
        h = base[x] + base[T[x, x]] * 65599
        for y in range(n):
            h = h * 6364136223846793005 + row[y]
        refined[x] = h
    return refined


@njit(cache=True)
def _close(T, n, lab, pos, count):
    a = 0
    while a < count:
        for b in range(a + 1):
            x = lab[a]
            y = lab[b]
            p = T[x, y]
            if pos[p] < 0:
                pos[p] = count
                lab[count] = p
                count += 1
            p = T[y, x]
            if pos[p] < 0:
                pos[p] = count
                lab[count] = p
                count += 1
        a += 1
    return count


@njit(cache=True)
def canonical_labeling(T, rank):
    """Return ``(best_pos, canonical_table)``; ``best_pos[x]`` is x's new label."""
    n = T.shape[0]
    LAB = np.full((n + 1, n), -1, dtype=np.int64)
    POS = np.full((n + 1, n), -1, dtype=np.int64)
    CNT = np.zeros(n + 1, dtype=np.int64)
    NEXT = np.zeros(n + 1, dtype=np.int64)
    best = np.full((n, n), n, dtype=np.int64)
    best_pos = np.arange(n)
    have_best = False
    LAB[0, 0] = 0
    POS[0, 0] = 0
    CNT[0] = _close(T, n, LAB[0], POS[0], 1)
    NEXT[0] = 0
    top = 0
    cand = np.zeros((n, n), dtype=np.int64)
    while top >= 0:
        if CNT[top] == n:
            # full labeling: compare with the best table so far
            lab = LAB[top]
            pos = POS[top]
            state = 0  # 0 equal so far, -1 smaller, 1 larger
            if have_best:
                for i in range(n):
                    for j in range(n):
                        v = pos[T[lab[i], lab[j]]]
                        if v != best[i, j]:
                            state = -1 if v < best[i, j] else 1
                            break
                    if state != 0:
                        break
            else:
                state = -1
            if state < 0:
                for i in range(n):
                    for j in range(n):
                        best[i, j] = pos[T[lab[i], lab[j]]]
                best_pos[:] = pos
                have_best = True
            top -= 1
            continue
        # candidate seeds: unlabeled elements of the least rank
        minr = -1
        for x in range(n):
            if POS[top, x] < 0 and (minr < 0 or rank[x] < minr):
                minr = rank[x]
        k = NEXT[top]
        chosen = -1
        m = 0
        for x in range(n):
            if POS[top, x] < 0 and rank[x] == minr:
                if m == k:
                    chosen = x
                    break
                m += 1
        if chosen < 0:
            top -= 1
            continue
        NEXT[top] = k + 1
        LAB[top + 1] = LAB[top]
        POS[top + 1] = POS[top]
        c = CNT[top]
        LAB[top + 1, c] = chosen
        POS[top + 1, chosen] = c
        CNT[top + 1] = _close(T, n, LAB[top + 1], POS[top + 1], c + 1)
        NEXT[top + 1] = 0
        top += 1
    return best_pos, best


@njit(cache=True)
def canonical_batch(tables):
    """Canonical tables for a stack of loop tables."""
    m = tables.shape[0]
    n = tables.shape[1]
    out = np.zeros((m, n, n), dtype=np.int64)
    for t in range(m):
        T = tables[t]
        codes = element_invariants(T)
        srt = np.unique(codes)
        rank = np.searchsorted(srt, codes)
        _, best = canonical_labeling(T, rank)
        out[t] = best
    return out
