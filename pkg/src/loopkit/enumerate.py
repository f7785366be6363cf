"""Small-loop generation, isomorphism and canonical forms, built-in loops."""

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from ._canon import canonical_batch, canonical_labeling, element_invariants
from ._search import Search
from .core import LoopTable, Permutation, validate_table
from .errors import BudgetExceeded, LoopError, OrderMismatch, UnknownName
from .identities import Identity, named_identity, parse_identity, registry_names

DEFAULT_BUDGET = 8


# --- canonical forms and isomorphism -------------------------------------------


def _rank(table):
    codes = element_invariants(table)
    return np.searchsorted(np.unique(codes), codes)


def canonical_form(L):
    """Return ``(labeling, canonical_loop)`` where ``labeling`` maps L onto it."""
    T = np.ascontiguousarray(L.table, dtype=np.int64)
    pos, best = canonical_labeling(T, _rank(T))
    return Permutation(pos, check=False), LoopTable(best, name=L.name, _checked=True)


def _key(table):
    n = len(table)
    return bytes([n]) + np.asarray(table, dtype=np.uint8).tobytes()


def canonical_key(L):
    """Byte string that is equal for two loops exactly when they are isomorphic."""
    return _key(canonical_form(L)[1].table)


def key_text(key):
    """Short printable form of a canonical key."""
    return key.hex()


def are_isomorphic(L1, L2):
    """Search directly for an isomorphism ``f`` with ``f(xy) = f(x)f(y)``.

    Independent of :func:`canonical_key`: images are chosen for a sequence
    of generators and extended through products, with element orders used
    to prune. Returns a :class:`Permutation` or ``None``.
    """
    if L1.order != L2.order:
        raise OrderMismatch(L1.order, L2.order)
    n = L1.order
    A, B = L1.table, L2.table
    ord1, ord2 = L1.element_orders, L2.element_orders
    if sorted(ord1) != sorted(ord2):
        return None

    def extend(f, used):
        # close f under products; returns False on inconsistency
        changed = True
        while changed:
            changed = False
            known = [x for x in range(n) if f[x] >= 0]
            for x in known:
                for y in known:
                    p, q = int(A[x, y]), int(B[f[x], f[y]])
                    if f[p] < 0:
                        if used[q] or ord1[p] != ord2[q]:
                            return False
                        f[p] = q
                        used[q] = True
                        changed = True
                    elif f[p] != q:
                        return False
        return True

    def search(f, used):
        free = [x for x in range(n) if f[x] < 0]
        if not free:
            return f
        x = free[0]
        for y in range(n):
            if used[y] or ord1[x] != ord2[y]:
                continue
            g, u = f.copy(), used.copy()
            g[x] = y
            u[y] = True
            if extend(g, u):
                res = search(g, u)
                if res is not None:
                    return res
        return None

    f = np.full(n, -1, dtype=np.intp)
    used = np.zeros(n, dtype=bool)
    f[0] = 0
    used[0] = True
    res = search(f, used)
    return None if res is None else Permutation(res)


# --- triple systems and built-in loops ---------------------------------------------


@dataclass(frozen=True)
class TripleSystem:
    point_count: int
    triples: tuple

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(tuple(sorted(t)) for t in self.triples))


class NotASteinerSystem(LoopError):
    def __init__(self, pair, count):
        self.pair = pair
        self.count = count
        super().__init__(f"pair {pair} lies in {count} triples")


FANO = TripleSystem(7, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)])

# affine plane over GF(3): points (a, b) -> 3a + b, lines {p, q, -(p+q)}
AFFINE_PLANE_3 = TripleSystem(9, sorted({
    tuple(sorted((3 * a1 + b1, 3 * a2 + b2, 3 * ((-a1 - a2) % 3) + (-b1 - b2) % 3)))
    for (a1, b1), (a2, b2) in combinations(product(range(3), repeat=2), 2)
}))


def steiner_from_sts(ts):
    """Steiner loop on ``{e} + points``: ``x*x = e`` and ``x*y`` is the third point.

    Point ``p`` becomes element ``p + 1``.
    """
    v = ts.point_count
    third = {}
    for t in ts.triples:
        if len(set(t)) != 3 or any(not 0 <= p < v for p in t):
            raise NotASteinerSystem(t, 0)
        for a, b in combinations(t, 2):
            (c,) = set(t) - {a, b}
            if (a, b) in third:
                raise NotASteinerSystem((a, b), 2)
            third[a, b] = third[b, a] = c
    for a, b in combinations(range(v), 2):
        if (a, b) not in third:
            raise NotASteinerSystem((a, b), 0)
    n = v + 1
    grid = np.zeros((n, n), dtype=np.intp)
    grid[0, :] = grid[:, 0] = np.arange(n)
    for a in range(v):
        for b in range(v):
            grid[a + 1, b + 1] = 0 if a == b else third[a, b] + 1
    return validate_table(n, grid)


def cyclic(n):
    idx = np.arange(n)
    return validate_table(n, (idx[:, None] + idx[None, :]) % n, name=f"cyclic:{n}")


def elementary_abelian_2(k):
    idx = np.arange(2 ** k)
    return validate_table(2 ** k, idx[:, None] ^ idx[None, :], name=f"elem_abelian_2:{k}")


def sym3():
    # 0 = id, 1 = (123), 2 = (132), 3..5 the transpositions; product = apply left then right
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    index = {p: i for i, p in enumerate(perms)}
    grid = [[index[tuple(q[p[k]] for k in range(3))] for q in perms] for p in perms]
    return validate_table(6, grid, name="sym3")


def direct_product(L1, L2, name=None):
    """Direct product; the pair (a, b) is element ``a * |L2| + b``."""
    n1, n2 = L1.order, L2.order
    a = np.arange(n1 * n2)
    g1, g2 = a // n2, a % n2
    grid = L1.table[g1[:, None], g1[None, :]] * n2 + L2.table[g2[:, None], g2[None, :]]
    return validate_table(n1 * n2, grid, name=name)


def builtin_names():
    return ("cyclic:N", "klein", "elem_abelian_2:K", "sym3", "steiner8", "steiner10")


def builtin(name):
    if name.startswith("cyclic:"):
        return cyclic(_int_arg(name))
    if name.startswith("elem_abelian_2:"):
        return elementary_abelian_2(_int_arg(name))
    if name == "klein":
        L = elementary_abelian_2(2)
        L.name = "klein"
        return L
    if name == "sym3":
        return sym3()
    if name == "steiner8":
        L = steiner_from_sts(FANO)
        L.name = "steiner8"
        return L
    if name == "steiner10":
        L = steiner_from_sts(AFFINE_PLANE_3)
        L.name = "steiner10"
        return L
    raise UnknownName(name, builtin_names())


def _int_arg(name):
    try:
        k = int(name.split(":", 1)[1])
    except ValueError:
        raise UnknownName(name, builtin_names()) from None
    if k < 1:
        raise UnknownName(name, builtin_names())
    return k


# --- generation ------------------------------------------------------------------------


@dataclass
class GenerationSpec:
    """What to generate.

    ``constraints`` holds :class:`Identity` objects, identity texts, registry
    names, or property names from :data:`loopkit.theorems.PROPERTIES`.
    Identities prune the search; other properties filter finished tables.
    """

    order: int
    constraints: list = field(default_factory=list)
    limit: int = None
    up_to_isomorphism: bool = False
    cell_order: str = "row"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be at least 1")


def _split_constraints(constraints):
    idents, filters = [], []
    for c in constraints:
        if isinstance(c, Identity):
            idents.append(c)
        elif "=" in c:
            idents.append(parse_identity(c))
        elif c in registry_names() or c in ("left-alt", "right-alt", "lap", "rap", "assoc"):
            idents.append(named_identity(c))
        else:
            from .theorems import PROPERTIES

            if c not in PROPERTIES:
                raise UnknownName(c, tuple(registry_names()) + tuple(PROPERTIES))
            filters.append(c)
    return idents, filters


def _passes(L, filters):
    from .theorems import PROPERTIES

    return all(PROPERTIES[name](L).verdict is True for name in filters)


def generate(spec, budget=DEFAULT_BUDGET):
    """Yield loops of ``spec.order`` satisfying ``spec.constraints``.

    Emission order is deterministic. With ``up_to_isomorphism`` each class
    is emitted once, as its canonical table, at its first occurrence.
    """
    n = spec.order
    if n > budget and spec.limit is None:
        raise BudgetExceeded(n, budget)
    idents, filters = _split_constraints(spec.constraints)
    search = Search(n, idents, cell_order=spec.cell_order)
    seen = set()
    emitted = 0
    while not search.exhausted:
        batch = search.next_batch()
        if not len(batch):
            continue
        if spec.up_to_isomorphism:
            canon = canonical_batch(np.ascontiguousarray(batch))
        for k, table in enumerate(batch):
            if spec.up_to_isomorphism:
                key = _key(canon[k])
                if key in seen:
                    continue
                seen.add(key)
                L = LoopTable(canon[k], _checked=True)
            else:
                L = LoopTable(table, _checked=True)
            if filters and not _passes(L, filters):
                continue
            yield L
            emitted += 1
            if spec.limit is not None and emitted >= spec.limit:
                return


def catalog(order, constraints=(), budget=DEFAULT_BUDGET):
    """All isomorphism classes of the given order, as a list."""
    return list(generate(GenerationSpec(order, list(constraints), up_to_isomorphism=True), budget=budget))


def canonical_keys(loops):
    return {canonical_key(L) for L in loops}
