"""Finite loops as Cayley tables, and permutations of their elements.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.
Permutations act on the right and compose left to right: for
``p * q`` the element ``x`` is sent first through ``p``, then ``q``.
"""

from functools import cached_property, reduce
from math import lcm

import numpy as np

from .errors import (
    NoIdentity,
    NoTwoSidedInverse,
    NotLatinSquare,
    OrderMismatch,
    TableFormatError,
)

MAX_ORDER = 64


def _frozen(a, dtype=np.intp):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


class Permutation:
    """A bijection of ``{0..n-1}`` given by its image list."""

    __slots__ = ("image", "_key")

    def __init__(self, image, check=True):
        self.image = _frozen(image)
        if check:
            n = len(self.image)
            if self.image.ndim != 1 or not np.array_equal(
                np.sort(self.image), np.arange(n)
            ):
                raise ValueError(f"{list(self.image)} is not a permutation")
        self._key = self.image.tobytes()

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n), check=False)

    @property
    def order(self):
        return len(self.image)

    def __len__(self):
        return len(self.image)

    def __call__(self, x):
        return int(self.image[x])

    def __getitem__(self, x):
        return int(self.image[x])

    def __iter__(self):
        return (int(v) for v in self.image)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise OrderMismatch(len(self), len(other))
        return Permutation(other.image[self.image], check=False)

    def inverse(self):
        inv = np.empty_like(self.image)
        inv[self.image] = np.arange(len(self.image))
        return Permutation(inv, check=False)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(len(self))
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self):
        return bool(np.array_equal(self.image, np.arange(len(self.image))))

    def cycle_order(self):
        """Order of the permutation in the symmetric group."""
        seen = np.zeros(len(self), dtype=bool)
        lengths = []
        for start in range(len(self)):
            if seen[start]:
                continue
            k, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.image[x]
                k += 1
            lengths.append(k)
        return reduce(lcm, lengths, 1)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return tuple(self) < tuple(other)

    def __repr__(self):
        return f"Permutation({list(self)})"

    def to_text(self):
        return " ".join(str(v) for v in self)


def perm_compose(p, q):
    return p * q


def perm_invert(p):
    return p.inverse()


def perm_identity(n):
    return Permutation.identity(n)


class LoopTable:
    """An order-``n`` loop; ``table[i, j]`` is the product ``i*j``.

    Construct through :func:`validate_table` (or :meth:`from_grid`) so the
    loop axioms are checked. Instances are treated as immutable.
    """

    def __init__(self, table, name=None, _checked=False):
        self.table = _frozen(table)
        self.name = name
        if not _checked:
            _check_loop(self.table)

    @classmethod
    def from_grid(cls, grid, name=None, relabel=False):
        """Validate ``grid``; with ``relabel`` a non-zero identity is moved to 0."""
        arr = np.asarray(grid)
        if relabel:
            arr = relabel_identity(arr)
        return validate_table(len(arr), arr, name=name)

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    def mul(self, x, y):
        return int(self.table[x, y])

    @cached_property
    def ldiv_table(self):
        # ld[a, b] = a\b
        n = self.order
        ld = np.empty((n, n), dtype=np.intp)
        rows = np.arange(n)[:, None]
        ld[rows, self.table] = np.arange(n)[None, :]
        ld.setflags(write=False)
        return ld

    @cached_property
    def rdiv_table(self):
        # rd[b, a] = b/a
        n = self.order
        rd = np.empty((n, n), dtype=np.intp)
        cols = np.arange(n)[None, :]
        rd[self.table, cols] = np.arange(n)[:, None]
        rd.setflags(write=False)
        return rd

    def ldiv(self, a, b):
        return int(self.ldiv_table[a, b])

    def rdiv(self, b, a):
        return int(self.rdiv_table[b, a])

    def right_translation(self, x):
        return Permutation(self.table[:, x], check=False)

    def left_translation(self, x):
        return Permutation(self.table[x, :], check=False)

    def translations(self, x):
        return self.right_translation(x), self.left_translation(x)

    @cached_property
    def left_inverses(self):
        # lam[x] * x = 0
        return _frozen(self.rdiv_table[0, :])

    @cached_property
    def right_inverses(self):
        # x * rho[x] = 0
        return _frozen(self.ldiv_table[:, 0])

    def inverses(self, x):
        return int(self.left_inverses[x]), int(self.right_inverses[x])

    @cached_property
    def has_two_sided_inverses(self):
        return bool(np.array_equal(self.left_inverses, self.right_inverses))

    def inversion_perm(self):
        lam, rho = self.left_inverses, self.right_inverses
        bad = np.nonzero(lam != rho)[0]
        if len(bad):
            x = int(bad[0])
            raise NoTwoSidedInverse(x, int(lam[x]), int(rho[x]))
        return Permutation(lam, check=False)

    def power(self, x, k):
        if k < 0:
            raise ValueError("power needs k >= 0")
        p = 0
        for _ in range(k):
            p = int(self.table[p, x])
        return p

    @cached_property
    def element_orders(self):
        n = self.order
        orders = np.empty(n, dtype=np.intp)
        for x in range(n):
            p, k = int(self.table[0, x]), 1
            while p != 0:
                p = int(self.table[p, x])
                k += 1
            orders[x] = k
        orders.setflags(write=False)
        return orders

    def element_order(self, x):
        return int(self.element_orders[x])

    def exponent(self):
        return reduce(lcm, (int(k) for k in self.element_orders), 1)

    @cached_property
    def squares(self):
        return _frozen(np.diagonal(self.table))

    def is_associative(self):
        t = self.table
        return bool(np.array_equal(t[t, :], t[:, t]))

    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.T))

    def relabel(self, f, name=None):
        """Return the isomorphic loop obtained by renaming ``x`` to ``f[x]``.

        ``f`` must fix 0.
        """
        f = np.asarray(f.image if isinstance(f, Permutation) else f)
        if f[0] != 0:
            raise NoIdentity("relabeling must fix the identity")
        inv = np.empty_like(f)
        inv[f] = np.arange(len(f))
        new = f[self.table[inv[:, None], inv[None, :]]]
        return LoopTable(new, name=name if name is not None else self.name, _checked=True)

    def __eq__(self, other):
        return isinstance(other, LoopTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<LoopTable{label} order={self.order}>"

    def to_text(self):
        return write_table(self)


def _check_loop(arr):
    n = len(arr)
    if arr.ndim != 2 or arr.shape != (n, n) or n == 0:
        raise TableFormatError(f"expected a non-empty square grid, got shape {arr.shape}")
    if arr.min() < 0 or arr.max() >= n:
        raise TableFormatError(f"entries must lie in 0..{n - 1}")
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), full):
            raise NotLatinSquare("row", i)
    for j in range(n):
        if not np.array_equal(np.sort(arr[:, j]), full):
            raise NotLatinSquare("column", j)
    if not (np.array_equal(arr[0], full) and np.array_equal(arr[:, 0], full)):
        raise NoIdentity()


def validate_table(order, grid, name=None, max_order=MAX_ORDER):
    arr = np.asarray(grid)
    if arr.shape != (order, order):
        raise TableFormatError(f"grid shape {arr.shape} does not match order {order}")
    if order > max_order:
        raise TableFormatError(f"order {order} exceeds the maximum {max_order}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise TableFormatError("grid entries must be integers")
    _check_loop(arr)
    return LoopTable(arr, name=name, _checked=True)


def relabel_identity(grid):
    """Swap labels so that a two-sided identity of ``grid`` becomes 0."""
    arr = np.asarray(grid)
    n = len(arr)
    full = np.arange(n)
    for e in range(n):
        if np.array_equal(arr[e], full) and np.array_equal(arr[:, e], full):
            break
    else:
        raise NoIdentity("the table has no two-sided identity")
    swap = np.arange(n)
    swap[[0, e]] = [e, 0]
    # swap is an involution, so it is its own inverse
    return swap[arr[swap[:, None], swap[None, :]]]


# --- text format -----------------------------------------------------------


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def read_table(text, name=None, relabel=False, max_order=MAX_ORDER):
    lines = list(_content_lines(text))
    if not lines:
        raise TableFormatError("empty table text")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise TableFormatError(f"line {lineno}: expected the order, got {first!r}") from None
    if n < 1:
        raise TableFormatError(f"line {lineno}: order must be positive")
    if n > max_order:
        raise TableFormatError(f"order {n} exceeds the maximum {max_order}")
    if len(lines) - 1 != n:
        raise TableFormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise TableFormatError(f"line {lineno}: non-integer entry") from None
        if len(row) != n:
            raise TableFormatError(f"line {lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    arr = np.array(rows)
    if relabel:
        arr = relabel_identity(arr)
    return validate_table(n, arr, name=name, max_order=max_order)


def write_table(loop):
    n = loop.order
    out = [str(n)]
    out.extend(" ".join(str(int(v)) for v in row) for row in loop.table)
    return "\n".join(out) + "\n"


def read_stream(text):
    """Parse tables separated by lines consisting of ``%``."""
    chunks, current = [], []
    for raw in text.splitlines():
        if raw.strip() == "%":
            chunks.append("\n".join(current))
            current = []
        else:
            current.append(raw)
    chunks.append("\n".join(current))
    return [read_table(c) for c in chunks if any(True for _ in _content_lines(c))]


def write_stream(loops):
    return "%\n".join(write_table(L) for L in loops)


def load(source, relabel=False, max_order=MAX_ORDER):
    """Load a table from a path, or from ``builtin:NAME``."""
    if source.startswith("builtin:"):
        from .enumerate import builtin

        L = builtin(source[len("builtin:"):])
        if L.order > max_order:
            raise TableFormatError(f"order {L.order} exceeds the limit {max_order}")
        return L
    with open(source) as fh:
        return read_table(fh.read(), name=source, relabel=relabel, max_order=max_order)


# --- functional aliases -----------------------------------------------------


def mul(L, x, y):
    return L.mul(x, y)


def ldiv(L, a, b):
    return L.ldiv(a, b)


def rdiv(L, b, a):
    return L.rdiv(b, a)


def translations(L, x):
    return L.translations(x)


def inverses(L, x):
    return L.inverses(x)


def power(L, x, k):
    return L.power(x, k)


def element_order(L, x):
    return L.element_order(x)


def exponent(L):
    return L.exponent()


def inversion_perm(L):
    return L.inversion_perm()


class _Inapplicable:
    """Verdict for a property that makes no sense on a given loop."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INAPPLICABLE"

    def __str__(self):
        return "inapplicable"

    def __bool__(self):
        raise TypeError("an inapplicable verdict has no truth value")


INAPPLICABLE = _Inapplicable()
