"""Latin-square backtracking with identity propagation (numba kernel).

The table is filled cell by cell. Each cell keeps a bitmask of candidate
values; placing a value strikes it from the row and column, and forced
cells (one candidate left, or a value with one possible place in a row or
column) are placed immediately. After that every instance of every
constraint identity is evaluated on the partial table. An instance whose
two sides are both known must agree; when one side is known and the other
is blocked by exactly one empty cell along a chain of known operands, the
empty cell is forced.

The search state lives in preallocated numpy arrays so that a call can
stop after ``batch`` solutions and be resumed later with the same arrays.
"""

import numpy as np
from numba import njit

from .identities import Const, Inv, LInv, Prod, RInv, Var

K_VAR, K_E, K_MUL, K_LINV, K_RINV, K_INV = 0, 1, 2, 3, 4, 5


def compile_identities(identities):
    """Flatten identities into node arrays for the kernel.

    Nodes of each side are stored children-first. Returns
    ``(kind, a, b, meta)`` where ``meta`` rows are
    ``(first_node, node_count, lhs_root, rhs_root, nvars)``.
    """
    kind, arg_a, arg_b, meta = [], [], [], []
    for ident in identities:
        names = ident.vars
        index = {name: i for i, name in enumerate(names)}
        start = len(kind)

        def emit(t):
            if isinstance(t, Var):
                kind.append(K_VAR); arg_a.append(index[t.name]); arg_b.append(-1)
            elif isinstance(t, Const):
                kind.append(K_E); arg_a.append(-1); arg_b.append(-1)
            elif isinstance(t, Prod):
                left = emit(t.left)
                right = emit(t.right)
                kind.append(K_MUL); arg_a.append(left); arg_b.append(right)
            else:
                child = emit(t.arg)
                code = {LInv: K_LINV, RInv: K_RINV, Inv: K_INV}[type(t)]
                kind.append(code); arg_a.append(child); arg_b.append(-1)
            return len(kind) - 1

        lhs = emit(ident.lhs)
        rhs = emit(ident.rhs)
        meta.append((start, len(kind) - start, lhs, rhs, len(names)))
    return (
        np.array(kind, dtype=np.int64),
        np.array(arg_a, dtype=np.int64),
        np.array(arg_b, dtype=np.int64),
        np.array(meta, dtype=np.int64).reshape(-1, 5),
    )


@njit(cache=True)
def _popcount(m):
    c = 0
    while m:
        m &= m - np.uint64(1)
        c += 1
    return c


@njit(cache=True)
def _lowbit(m):
    v = 0
    while (m >> np.uint64(v)) & np.uint64(1) == 0:
        v += 1
    return v


@njit(cache=True)
def _place(T, D, n, i, j, v, qi, qj, qv, qlen):
    """Put ``v`` at (i, j). Returns the new queue length or -1 on conflict."""
    if T[i, j] >= 0:
        return qlen if T[i, j] == v else -1
    bit = np.uint64(1) << np.uint64(v)
    if D[i, j] & bit == 0:
        return -1
    T[i, j] = v
    D[i, j] = bit
    nbit = ~bit
    for k in range(n):
        if k != j and T[i, k] < 0:
            old = D[i, k]
            m = old & nbit
            if m == 0:
                return -1
            D[i, k] = m
            if m != old and m & (m - np.uint64(1)) == 0:
                qi[qlen] = i; qj[qlen] = k; qv[qlen] = _lowbit(m); qlen += 1
        if k != i and T[k, j] < 0:
            old = D[k, j]
            m = old & nbit
            if m == 0:
                return -1
            D[k, j] = m
            if m != old and m & (m - np.uint64(1)) == 0:
                qi[qlen] = k; qj[qlen] = j; qv[qlen] = _lowbit(m); qlen += 1
    return qlen


@njit(cache=True)
def _drain(T, D, n, qi, qj, qv, qlen):
    while qlen > 0:
        qlen -= 1
        qlen = _place(T, D, n, qi[qlen], qj[qlen], qv[qlen], qi, qj, qv, qlen)
        if qlen < 0:
            return False
    return True


@njit(cache=True)
def _hidden_singles(T, D, n, qi, qj, qv):
    """Queue values that fit in only one cell of a row or column.

    Returns the queue length, or -1 when some value fits nowhere.
    """
    qlen = 0
    for i in range(n):
        for v in range(n):
            bit = np.uint64(1) << np.uint64(v)
            count = 0
            where = -1
            placed = False
            for j in range(n):
                if T[i, j] == v:
                    placed = True
                    break
                if T[i, j] < 0 and D[i, j] & bit:
                    count += 1
                    where = j
            if placed:
                continue
            if count == 0:
                return -1
            if count == 1:
                qi[qlen] = i; qj[qlen] = where; qv[qlen] = v; qlen += 1
    for j in range(n):
        for v in range(n):
            bit = np.uint64(1) << np.uint64(v)
            count = 0
            where = -1
            placed = False
            for i in range(n):
                if T[i, j] == v:
                    placed = True
                    break
                if T[i, j] < 0 and D[i, j] & bit:
                    count += 1
                    where = i
            if placed:
                continue
            if count == 0:
                return -1
            if count == 1:
                qi[qlen] = where; qj[qlen] = j; qv[qlen] = v; qlen += 1
    return qlen


@njit(cache=True)
def _row_find(T, n, a, v):
    # j with a*j = v, or -1
    for j in range(n):
        if T[a, j] == v:
            return j
    return -1


@njit(cache=True)
def _col_find(T, n, b, v):
    # i with i*b = v, or -1
    for i in range(n):
        if T[i, b] == v:
            return i
    return -1


@njit(cache=True)
def _eval_nodes(T, n, kind, arg_a, arg_b, start, count, assign, val, opl, opr):
    """Evaluate nodes on a partial table; -1 marks unknown.

    Returns False when a two-sided inverse is requested for an element whose
    left and right inverses are known and differ.
    """
    for k in range(start, start + count):
        kd = kind[k]
        if kd == 0:
            val[k] = assign[arg_a[k]]
        elif kd == 1:
            val[k] = 0
        elif kd == 2:
            x = val[arg_a[k]]
            y = val[arg_b[k]]
            opl[k] = x
            opr[k] = y
            if x >= 0 and y >= 0:
                val[k] = T[x, y]
            else:
                val[k] = -1
        else:
            x = val[arg_a[k]]
            if x < 0:
                val[k] = -1
            elif kd == 3:
                val[k] = _col_find(T, n, x, 0)
            elif kd == 4:
                val[k] = _row_find(T, n, x, 0)
            else:
                lam = _col_find(T, n, x, 0)
                rho = _row_find(T, n, x, 0)
                if lam >= 0 and rho >= 0 and lam != rho:
                    return False
                if lam >= 0 and lam == rho:
                    val[k] = lam
                else:
                    val[k] = -1
    return True


@njit(cache=True)
def _backprop(T, n, kind, arg_a, arg_b, val, opl, opr, node, target):
    """Follow an unknown node down to a single empty cell.

    Returns (i, j, v) for a forced cell, or (-1, -1, -1).
    """
    cur = node
    t = target
    while True:
        kd = kind[cur]
        if kd == 2:
            x = opl[cur]
            y = opr[cur]
            if x >= 0 and y >= 0:
                return x, y, t
            if x >= 0:
                j = _row_find(T, n, x, t)
                if j < 0:
                    return -1, -1, -1
                cur = arg_b[cur]
                t = j
            elif y >= 0:
                i = _col_find(T, n, y, t)
                if i < 0:
                    return -1, -1, -1
                cur = arg_a[cur]
                t = i
            else:
                return -1, -1, -1
        elif kd == 3:
            # arg^l = t  <=>  t * arg = 0
            j = _row_find(T, n, t, 0)
            if j < 0:
                return -1, -1, -1
            cur = arg_a[cur]
            t = j
        elif kd == 4:
            # arg^r = t  <=>  arg * t = 0
            i = _col_find(T, n, t, 0)
            if i < 0:
                return -1, -1, -1
            cur = arg_a[cur]
            t = i
        else:
            return -1, -1, -1


@njit(cache=True)
def _scan_identities(T, D, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv):
    """One pass over all constraint instances.

    Returns -1 on conflict, else the number of cells placed.
    """
    placed = 0
    for c in range(meta.shape[0]):
        start = meta[c, 0]
        count = meta[c, 1]
        lhs = meta[c, 2]
        rhs = meta[c, 3]
        k = meta[c, 4]
        for i in range(k):
            assign[i] = 0
        while True:
            if not _eval_nodes(T, n, kind, arg_a, arg_b, start, count, assign, val, opl, opr):
                return -1
            a = val[lhs]
            b = val[rhs]
            if a >= 0 and b >= 0:
                if a != b:
                    return -1
            elif a >= 0 or b >= 0:
                if a >= 0:
                    ci, cj, cv = _backprop(T, n, kind, arg_a, arg_b, val, opl, opr, rhs, a)
                else:
                    ci, cj, cv = _backprop(T, n, kind, arg_a, arg_b, val, opl, opr, lhs, b)
                if ci >= 0:
                    qlen = _place(T, D, n, ci, cj, cv, qi, qj, qv, 0)
                    if qlen < 0:
                        return -1
                    if not _drain(T, D, n, qi, qj, qv, qlen):
                        return -1
                    placed += 1
            # odometer over the instance variables
            p = k - 1
            while p >= 0:
                assign[p] += 1
                if assign[p] < n:
                    break
                assign[p] = 0
                p -= 1
            if p < 0:
                break
    return placed


@njit(cache=True)
def _propagate(T, D, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv):
    while True:
        qlen = _hidden_singles(T, D, n, qi, qj, qv)
        if qlen < 0:
            return False
        if qlen > 0:
            if not _drain(T, D, n, qi, qj, qv, qlen):
                return False
            continue
        if meta.shape[0] == 0:
            return True
        placed = _scan_identities(T, D, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv)
        if placed < 0:
            return False
        if placed == 0:
            return True


@njit(cache=True)
def _start(Ts, Ds, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv):
    """Fix the identity row and column at stack level 0."""
    full = (np.uint64(1) << np.uint64(n)) - np.uint64(1) if n < 64 else ~np.uint64(0)
    T = Ts[0]
    D = Ds[0]
    for i in range(n):
        for j in range(n):
            T[i, j] = -1
            D[i, j] = full
    for x in range(n):
        qlen = _place(T, D, n, 0, x, x, qi, qj, qv, 0)
        if qlen < 0 or not _drain(T, D, n, qi, qj, qv, qlen):
            return False
        qlen = _place(T, D, n, x, 0, x, qi, qj, qv, 0)
        if qlen < 0 or not _drain(T, D, n, qi, qj, qv, qlen):
            return False
    return _propagate(T, D, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv)


@njit(cache=True)
def _run(Ts, Ds, branch_cell, branch_mask, state, order, n, kind, arg_a, arg_b, meta,
         val, opl, opr, assign, qi, qj, qv, out, batch):
    """Depth-first search; ``state = [top, nodes]``. Returns solutions found."""
    top = state[0]
    found = 0
    ncell = order.shape[0]
    while top >= 0:
        if branch_cell[top] < 0:
            T = Ts[top]
            c = -1
            for idx in range(ncell):
                cell = order[idx]
                if T[cell // n, cell % n] < 0:
                    c = cell
                    break
            if c < 0:
                out[found] = T
                found += 1
                top -= 1
                if found == batch:
                    break
                continue
            branch_cell[top] = c
            branch_mask[top] = Ds[top, c // n, c % n]
        mask = branch_mask[top]
        if mask == 0:
            top -= 1
            continue
        v = _lowbit(mask)
        branch_mask[top] = mask & (mask - np.uint64(1))
        c = branch_cell[top]
        Ts[top + 1] = Ts[top]
        Ds[top + 1] = Ds[top]
        state[1] += 1
        T = Ts[top + 1]
        D = Ds[top + 1]
        qlen = _place(T, D, n, c // n, c % n, v, qi, qj, qv, 0)
        if qlen < 0 or not _drain(T, D, n, qi, qj, qv, qlen):
            continue
        if not _propagate(T, D, n, kind, arg_a, arg_b, meta, val, opl, opr, assign, qi, qj, qv):
            continue
        top += 1
        branch_cell[top] = -1
    state[0] = top
    return found


class Search:
    """Resumable enumeration of loop tables satisfying identities."""

    def __init__(self, n, identities=(), cell_order="row", batch=4096):
        self.n = n
        self.batch = batch
        self.kind, self.arg_a, self.arg_b, self.meta = compile_identities(identities)
        cells = [(i, j) for i in range(1, n) for j in range(1, n)]
        if cell_order == "col":
            cells.sort(key=lambda c: (c[1], c[0]))
        elif cell_order != "row":
            raise ValueError(f"unknown cell order {cell_order!r}")
        self.order = np.array([i * n + j for i, j in cells] or [0], dtype=np.int64)
        if not cells:
            self.order = self.order[:0]
        depth = n * n + 2
        self.Ts = np.full((depth, n, n), -1, dtype=np.int64)
        self.Ds = np.zeros((depth, n, n), dtype=np.uint64)
        self.branch_cell = np.full(depth, -1, dtype=np.int64)
        self.branch_mask = np.zeros(depth, dtype=np.uint64)
        nodes = max(len(self.kind), 1)
        self.val = np.zeros(nodes, dtype=np.int64)
        self.opl = np.zeros(nodes, dtype=np.int64)
        self.opr = np.zeros(nodes, dtype=np.int64)
        nv = int(self.meta[:, 4].max()) if len(self.meta) else 0
        self.assign = np.zeros(max(nv, 1), dtype=np.int64)
        q = 4 * n * n + 16
        self.qi = np.zeros(q, dtype=np.int64)
        self.qj = np.zeros(q, dtype=np.int64)
        self.qv = np.zeros(q, dtype=np.int64)
        self.out = np.zeros((batch, n, n), dtype=np.int64)
        self.state = np.zeros(2, dtype=np.int64)
        ok = _start(self.Ts, self.Ds, n, self.kind, self.arg_a, self.arg_b, self.meta,
                    self.val, self.opl, self.opr, self.assign, self.qi, self.qj, self.qv)
        self.state[0] = 0 if ok else -1

    @property
    def nodes(self):
        return int(self.state[1])

    @property
    def exhausted(self):
        return self.state[0] < 0

    def next_batch(self):
        if self.exhausted:
            return self.out[:0].copy()
        found = _run(self.Ts, self.Ds, self.branch_cell, self.branch_mask, self.state,
                     self.order, self.n, self.kind, self.arg_a, self.arg_b, self.meta,
                     self.val, self.opl, self.opr, self.assign, self.qi, self.qj, self.qv,
                     self.out, self.batch)
        return self.out[:found].copy()

    def __iter__(self):
        while not self.exhausted:
            for t in self.next_batch():
                yield t
