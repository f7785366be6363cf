"""Autotopisms, isotopes, inner mappings and map classification.

Permutations act on the right and compose left to right, so ``p * q``
applies ``p`` first. A triple ``(U, V, W)`` is an autotopism of L when
``xU * yV == (x*y)W`` for all x, y.
"""

from dataclasses import dataclass

import numpy as np

from .core import INAPPLICABLE, LoopTable, Permutation
from .errors import BudgetExceeded, NoTwoSidedInverse, OrderMismatch, TableFormatError

DEFAULT_AUTOTOPISM_BUDGET = 8


@dataclass(frozen=True)
class AutotopismTriple:
    U: Permutation
    V: Permutation
    W: Permutation

    def __post_init__(self):
        if not len(self.U) == len(self.V) == len(self.W):
            raise OrderMismatch(len(self.U), len(self.V), len(self.W))

    @classmethod
    def identity(cls, n):
        i = Permutation.identity(n)
        return cls(i, i, i)

    @property
    def order(self):
        return len(self.U)

    def __mul__(self, other):
        return compose_autotopisms(self, other)

    def inverse(self):
        return invert_autotopism(self)

    def to_text(self):
        return "\n".join(p.to_text() for p in (self.U, self.V, self.W)) + "\n"


def _img(p):
    return p.image if isinstance(p, Permutation) else np.asarray(p)


def is_autotopism(L, t):
    n = L.order
    if t.order != n:
        raise OrderMismatch(n, t.order)
    T = L.table
    U, V, W = _img(t.U), _img(t.V), _img(t.W)
    return bool(np.array_equal(T[U[:, None], V[None, :]], W[T]))


def compose_autotopisms(s, t):
    if s.order != t.order:
        raise OrderMismatch(s.order, t.order)
    return AutotopismTriple(s.U * t.U, s.V * t.V, s.W * t.W)


def invert_autotopism(t):
    return AutotopismTriple(t.U.inverse(), t.V.inverse(), t.W.inverse())


def write_triples(triples):
    return "\n".join(t.to_text() for t in triples)


def read_triples(text):
    triples = []
    for stanza in text.strip().split("\n\n"):
        rows = [ln for ln in stanza.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows:
            continue
        if len(rows) != 3:
            raise TableFormatError(f"a triple needs 3 permutation lines, got {len(rows)}")
        try:
            perms = [Permutation([int(v) for v in ln.split()]) for ln in rows]
        except ValueError as exc:
            raise TableFormatError(str(exc)) from None
        triples.append(AutotopismTriple(*perms))
    return triples


# --- isotopes --------------------------------------------------------------------


def _principal_grid(L, a, b):
    # x o y = (x/b) * (a\y)
    return L.table[L.rdiv_table[:, b][:, None], L.ldiv_table[a, :][None, :]]


def _swap_to_zero(grid, e):
    n = len(grid)
    tau = np.arange(n)
    tau[0], tau[e] = e, 0
    return tau[grid[tau[:, None], tau[None, :]]], tau


def principal_isotope(L, a, b, with_relabeling=False):
    """The loop ``x o y = (x/b)*(a\\y)``, with its identity ``a*b`` renamed 0.

    With ``with_relabeling`` the renaming (a transposition) is also returned.
    """
    e = L.mul(a, b)
    grid, tau = _swap_to_zero(_principal_grid(L, a, b), e)
    M = LoopTable(grid, name=None, _checked=True)
    return (M, Permutation(tau, check=False)) if with_relabeling else M


def _find_identity(grid):
    n = len(grid)
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(grid[e], idx) and np.array_equal(grid[:, e], idx):
            return e
    return None


def isotope_raw(L, A, B, C):
    """Table of ``x o y = (x A^-1 * y B^-1) C`` without any relabeling."""
    n = L.order
    if not len(A) == len(B) == len(C) == n:
        raise OrderMismatch(n, len(A), len(B), len(C))
    ai, bi = _img(A.inverse()), _img(B.inverse())
    return _img(C)[L.table[ai[:, None], bi[None, :]]]


def isotope(L, A, B, C):
    """Return ``(grid, is_loop)`` for the isotope under ``(A, B, C)``.

    When the result has an identity it is renamed 0 (by swapping it with 0).
    """
    grid = isotope_raw(L, A, B, C)
    e = _find_identity(grid)
    if e is None:
        return grid, False
    return _swap_to_zero(grid, e)[0], True


# --- autotopism search ---------------------------------------------------------


def _orders(M, e):
    n = len(M)
    out = np.empty(n, dtype=np.intp)
    for y in range(n):
        p, k = y, 1
        while p != e:
            p = M[p, y]
            k += 1
        out[y] = k
    return out


def _isomorphisms(A, B, e, ord_a, ord_b):
    """All bijections f with f(0) = e and f(A[x, y]) = B[f(x), f(y)], sorted by image."""
    n = len(A)
    found = []

    def close(f, used, fresh):
        # extend f along products with the newly mapped elements
        mapped = [x for x in range(n) if f[x] >= 0]
        queue = list(fresh)
        while queue:
            x = queue.pop()
            for y in mapped:
                for p, q in ((A[x, y], B[f[x], f[y]]), (A[y, x], B[f[y], f[x]])):
                    if f[p] < 0:
                        if used[q] or ord_a[p] != ord_b[q]:
                            return False
                        f[p] = q
                        used[q] = True
                        mapped.append(p)
                        queue.append(p)
                    elif f[p] != q:
                        return False
        return True

    def search(f, used):
        free = np.nonzero(f < 0)[0]
        if len(free) == 0:
            found.append(f.copy())
            return
        x = int(free[0])
        for y in range(n):
            if used[y] or ord_a[x] != ord_b[y]:
                continue
            g, u = f.copy(), used.copy()
            g[x] = y
            u[y] = True
            if close(g, u, [x]):
                search(g, u)

    f = np.full(n, -1, dtype=np.intp)
    used = np.zeros(n, dtype=bool)
    f[0] = e
    used[e] = True
    if ord_b[e] == 1 and close(f, used, [0]):
        search(f, used)
    found.sort(key=lambda g: tuple(g))
    return found


def autotopism_group(L, budget=DEFAULT_AUTOTOPISM_BUDGET, count_only=False):
    """Every autotopism of L, sorted by ``(W, a, b)`` with ``a = 0U``, ``b = 0V``.

    An autotopism is fixed by W, a and b: ``U = W R_b^-1``, ``V = W L_a^-1``,
    and W is an isomorphism from L onto the principal isotope at (a, b).
    """
    n = L.order
    if n > budget:
        raise BudgetExceeded(n, budget)
    A = L.table
    ord_a = L.element_orders
    found = []
    for a in range(n):
        La_inv = L.left_translation(a).inverse()
        for b in range(n):
            B = _principal_grid(L, a, b)
            e = L.mul(a, b)
            Rb_inv = L.right_translation(b).inverse()
            for w in _isomorphisms(A, B, e, ord_a, _orders(B, e)):
                W = Permutation(w, check=False)
                found.append((tuple(w), a, b, W, Rb_inv, La_inv))
    if count_only:
        return len(found)
    found.sort(key=lambda r: r[:3])
    return [AutotopismTriple(W * Rb_inv, W * La_inv, W) for _, _, _, W, Rb_inv, La_inv in found]


def automorphisms(L):
    """All automorphisms of L, sorted by image."""
    ords = L.element_orders
    return [Permutation(f, check=False) for f in _isomorphisms(L.table, L.table, 0, ords, ords)]


# --- inner mappings ------------------------------------------------------------


def middle_inner(L, x):
    """``T(x) = R_x L_x^-1``, i.e. ``y -> x\\(y*x)``."""
    R, Lx = L.translations(x)
    return R * Lx.inverse()


def right_inner(L, x, y):
    """``R(x, y) = R_x R_y R_{xy}^-1``."""
    return L.right_translation(x) * L.right_translation(y) * L.right_translation(L.mul(x, y)).inverse()


def left_inner(L, x, y):
    """``L(x, y) = L_x L_y L_{yx}^-1``, which fixes the identity."""
    return L.left_translation(x) * L.left_translation(y) * L.left_translation(L.mul(y, x)).inverse()


def inner_maps(L, x, y=None):
    T = middle_inner(L, x)
    if y is None:
        return T, None, None
    return T, right_inner(L, x, y), left_inner(L, x, y)


def gamma_map(L, x):
    """``y -> x(x((y/x)/x))``, the map ``R_x^-2 L_x^2``."""
    R, Lx = L.translations(x)
    Ri = R.inverse()
    return Ri * Ri * Lx * Lx


# --- map classification -------------------------------------------------------


@dataclass(frozen=True)
class MapClassification:
    is_bijection: bool
    fixes_identity: bool
    is_automorphism: bool
    is_anti_automorphism: bool
    is_semi_automorphism: bool
    pseudo_automorphism_companions: list


def is_automorphism(L, f):
    T = L.table
    f = _img(f)
    return bool(np.array_equal(T[f[:, None], f[None, :]], f[T]))


def classify_map(L, f):
    n = L.order
    f = np.asarray(_img(f), dtype=np.intp)
    if len(f) != n:
        raise OrderMismatch(n, len(f))
    T = L.table
    bij = bool(np.array_equal(np.sort(f), np.arange(n)))
    fixes = bool(f[0] == 0)
    hom = T[f[:, None], f[None, :]]
    auto = bij and bool(np.array_equal(hom, f[T]))
    anti = bij and bool(np.array_equal(hom.T, f[T]))
    # semi-automorphism: (zy.z)f == (zf.yf).zf, indexed [z, y]
    col = np.arange(n)[:, None]
    zyz = T[T, col]
    semi = fixes and bool(np.array_equal(f[zyz], T[hom, f[:, None]]))
    companions = []
    if bij:
        for c in range(n):
            fc = T[f, c]
            if np.array_equal(T[f[:, None], fc[None, :]], T[f[T], c]):
                companions.append(c)
    return MapClassification(bij, fixes, auto, anti, semi, companions)


def is_A_loop(L):
    """True when every T(x), R(x, y) and L(x, y) is an automorphism."""
    n = L.order
    for x in range(n):
        if not is_automorphism(L, middle_inner(L, x)):
            return False
        for y in range(n):
            if not is_automorphism(L, right_inner(L, x, y)):
                return False
            if not is_automorphism(L, left_inner(L, x, y)):
                return False
    return True


# --- named triples --------------------------------------------------------------

TRIPLE_NAMES = (
    "(L_z^2, I, L_z^2)",
    "(I, R_z^2, R_z^2)",
    "(I, L_z^2, J L_z^2 J)",
    "(R_z^2, I, J R_z^2 J)",
    "(R_{z^2}, L_z^-2, I)",
    "(R_z^2, L_{z^2}^-1, I)",
    "(A_z, R_z, R_z L_z)",
    "(L_z, B_z, L_z R_z)",
)


def osborn_maps(L, z):
    """``(E_z, A_z, B_z)`` with ``E_z = R_z L_z R_z^-1 L_z^-1``."""
    R, Lz = L.translations(z)
    E = R * Lz * R.inverse() * Lz.inverse()
    return E, E * Lz, E.inverse() * R


def named_triples(L, z):
    """Map each entry of :data:`TRIPLE_NAMES` to its triple (or INAPPLICABLE)."""
    n = L.order
    I = Permutation.identity(n)
    R, Lz = L.translations(z)
    z2 = L.mul(z, z)
    R2, L2 = R * R, Lz * Lz
    try:
        J = L.inversion_perm()
    except NoTwoSidedInverse:
        J = None
    _, A, B = osborn_maps(L, z)
    return {
        TRIPLE_NAMES[0]: AutotopismTriple(L2, I, L2),
        TRIPLE_NAMES[1]: AutotopismTriple(I, R2, R2),
        TRIPLE_NAMES[2]: INAPPLICABLE if J is None else AutotopismTriple(I, L2, J * L2 * J),
        TRIPLE_NAMES[3]: INAPPLICABLE if J is None else AutotopismTriple(R2, I, J * R2 * J),
        TRIPLE_NAMES[4]: AutotopismTriple(L.right_translation(z2), L2.inverse(), I),
        TRIPLE_NAMES[5]: AutotopismTriple(R2, L.left_translation(z2).inverse(), I),
        TRIPLE_NAMES[6]: AutotopismTriple(A, R, R * Lz),
        TRIPLE_NAMES[7]: AutotopismTriple(Lz, B, Lz * R),
    }


def named_autotopisms(L, z):
    """Membership in AUT(L) of each named triple at ``z``.

    Triples built from J are INAPPLICABLE when inverses are not two-sided.
    """
    return {
        name: t if t is INAPPLICABLE else is_autotopism(L, t)
        for name, t in named_triples(L, z).items()
    }
