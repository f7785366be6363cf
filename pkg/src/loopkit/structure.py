"""Nuclei, centrum, center, commutators, associators and squares.

Subsets are returned as sorted lists of elements.
"""

from dataclasses import dataclass, asdict

import numpy as np

COMMUTATOR = "commutator"
ASSOCIATOR = "associator"
SQUARE = "square"
COMMUTATOR_ASSOCIATOR = "commutator_associator"


def _members(mask):
    return [int(x) for x in np.nonzero(mask)[0]]


def _assoc_tensor(L):
    # ok[i, j, k] is True when (ij)k == i(jk)
    t = L.table
    return t[t, :] == t[:, t]


def nuclei(L):
    ok = _assoc_tensor(L)
    left = ok.all(axis=(1, 2))
    middle = ok.all(axis=(0, 2))
    right = ok.all(axis=(0, 1))
    return _members(left), _members(right), _members(middle), _members(left & middle & right)


def centrum_center(L):
    t = L.table
    comm = (t == t.T).all(axis=1)
    ok = _assoc_tensor(L)
    nuc = ok.all(axis=(1, 2)) & ok.all(axis=(0, 2)) & ok.all(axis=(0, 1))
    return _members(comm), _members(comm & nuc)


def commutator(L, a, b):
    """The element c with ``ab = (ba)c``."""
    return L.ldiv(L.mul(b, a), L.mul(a, b))


def associator(L, a, b, c):
    """The element d with ``(ab)c = (a(bc))d``."""
    return L.ldiv(L.mul(a, L.mul(b, c)), L.mul(L.mul(a, b), c))


def commutator_table(L):
    t = L.table
    return L.ldiv_table[t.T, t]


def associator_tensor(L):
    t = L.table
    return L.ldiv_table[t[:, t], t[t, :]]


def special_sets(L):
    comm = sorted(set(int(v) for v in np.unique(commutator_table(L))))
    assoc = sorted(set(int(v) for v in np.unique(associator_tensor(L))))
    squares = sorted(set(int(v) for v in np.unique(L.squares)))
    return comm, assoc, squares


def _unique_in(values):
    rest = [v for v in values if v != 0]
    return rest[0] if len(rest) == 1 else None


def unique_nonidentity(L, kind):
    """The ``s != 0`` such that the chosen set is ``{0, s}``, else None."""
    comm, assoc, squares = special_sets(L)
    if kind == COMMUTATOR:
        return _unique_in(comm)
    if kind == ASSOCIATOR:
        return _unique_in(assoc)
    if kind == SQUARE:
        return _unique_in(squares)
    if kind == COMMUTATOR_ASSOCIATOR:
        both = sorted(set(comm) | set(assoc))
        return _unique_in(both) if set(comm) == set(both) == set(assoc) else None
    raise ValueError(f"unknown kind {kind!r}")


def square_flags(L):
    """(nuclear square, centrum square, central square)."""
    nuc = set(nuclei(L)[3])
    centrum, center = centrum_center(L)
    sq = set(int(v) for v in L.squares)
    return sq <= nuc, sq <= set(centrum), sq <= set(center)


def is_power_associative(L):
    n = L.order
    t = L.table
    for x in range(n):
        pw = [0]
        for _ in range(n):
            pw.append(int(t[pw[-1], x]))
        for i in range(n + 1):
            for j in range(n + 1 - i):
                if t[pw[i], pw[j]] != pw[i + j]:
                    return False
    return True


def generated_subloop(L, elements):
    """Closure of ``elements`` (and the identity) under multiplication."""
    got = {0} | {int(x) for x in elements}
    frontier = list(got)
    while frontier:
        new = set()
        for x in list(got):
            for y in frontier:
                new.add(int(L.table[x, y]))
                new.add(int(L.table[y, x]))
        frontier = list(new - got)
        got |= new
    return sorted(got)


def subloop_center(L, elements):
    """Center of the subloop on ``elements``, computed inside that subloop.

    ``elements`` must be closed under multiplication.
    """
    S = np.array(sorted(elements))
    t = L.table
    sub = t[np.ix_(S, S)]
    if not set(np.unique(sub)) <= set(S.tolist()):
        raise ValueError("elements are not closed under multiplication")
    center = []
    for a in S:
        comm = all(t[a, x] == t[x, a] for x in S)
        if not comm:
            continue
        assoc = all(
            t[t[a, x], y] == t[a, t[x, y]]
            and t[t[x, a], y] == t[x, t[a, y]]
            and t[t[x, y], a] == t[x, t[y, a]]
            for x in S
            for y in S
        )
        if assoc:
            center.append(int(a))
    return center


def square_subloop_center(L):
    """Center of the subloop formed by the squares, or None when they are not closed."""
    squares = sorted(set(int(v) for v in L.squares))
    if generated_subloop(L, squares) != squares:
        return None
    return subloop_center(L, squares)


@dataclass(frozen=True)
class StructureReport:
    n_lambda: list
    n_rho: list
    n_mu: list
    nucleus: list
    centrum: list
    center: list
    commutator_set: list
    associator_set: list
    square_set: list
    power_associative: bool

    def items(self):
        return asdict(self).items()


def structure_report(L):
    n_lambda, n_rho, n_mu, nucleus = nuclei(L)
    centrum, center = centrum_center(L)
    comm, assoc, squares = special_sets(L)
    return StructureReport(
        n_lambda=n_lambda,
        n_rho=n_rho,
        n_mu=n_mu,
        nucleus=nucleus,
        centrum=centrum,
        center=center,
        commutator_set=comm,
        associator_set=assoc,
        square_set=squares,
        power_associative=is_power_associative(L),
    )
