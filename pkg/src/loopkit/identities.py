"""A small equational language for loop identities.

Syntax::

    identity := term '=' term
    term     := factor ('*' factor)*        # '*' associates to the left
    factor   := atom ('^l' | '^r' | '^-1')*
    atom     := letter | 'e' | '(' term ')'

Variables are single lower-case letters other than ``e``.  ``x^l`` and
``x^r`` are the left and right inverses (``x^l * x = e = x * x^r``), and
``x^-1`` is a two-sided inverse, only meaningful when the two coincide.
"""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import IdentitySyntaxError, NoTwoSidedInverse, UnknownName


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    pass


E = Const()


@dataclass(frozen=True)
class Prod(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class LInv(Term):
    arg: Term


@dataclass(frozen=True)
class RInv(Term):
    arg: Term


@dataclass(frozen=True)
class Inv(Term):
    arg: Term


_SUFFIX = {LInv: "^l", RInv: "^r", Inv: "^-1"}


def term_vars(t):
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Const):
        return set()
    if isinstance(t, Prod):
        return term_vars(t.left) | term_vars(t.right)
    return term_vars(t.arg)


def uses_two_sided_inverse(t):
    if isinstance(t, Inv):
        return True
    if isinstance(t, Prod):
        return uses_two_sided_inverse(t.left) or uses_two_sided_inverse(t.right)
    if isinstance(t, (LInv, RInv)):
        return uses_two_sided_inverse(t.arg)
    return False


def format_term(t):
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return "e"
    if isinstance(t, Prod):
        return f"{_operand(t.left)}*{_operand(t.right)}"
    return _operand(t.arg) + _SUFFIX[type(t)]


def _operand(t):
    s = format_term(t)
    return f"({s})" if isinstance(t, Prod) else s


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    name: str = field(default="", compare=False)

    @property
    def vars(self):
        return tuple(sorted(term_vars(self.lhs) | term_vars(self.rhs)))

    def __str__(self):
        return f"{format_term(self.lhs)} = {format_term(self.rhs)}"


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise IdentitySyntaxError(self.pos, expected, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s):
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def identity(self):
        lhs = self.term()
        if not self.take("="):
            self.error("'=' or '*'")
        rhs = self.term()
        if self.peek():
            self.error("end of input")
        return Identity(lhs, rhs)

    def term(self):
        t = self.factor()
        while self.take("*"):
            t = Prod(t, self.factor())
        return t

    def factor(self):
        t = self.atom()
        while self.take("^"):
            if self.take("-1"):
                t = Inv(t)
            elif self.take("l"):
                t = LInv(t)
            elif self.take("r"):
                t = RInv(t)
            else:
                self.error("'l', 'r' or '-1' after '^'")
        return t

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.term()
            if not self.take(")"):
                self.error("')'")
            return t
        if c == "e":
            self.pos += 1
            return E
        if c.isalpha() and c.islower() and c.isascii():
            self.pos += 1
            return Var(c)
        self.error("a variable, 'e' or '('")


def parse_identity(text):
    return _Parser(text).identity()


def parse_term(text):
    p = _Parser(text)
    t = p.term()
    if p.peek():
        p.error("end of input")
    return t


# --- evaluation ------------------------------------------------------------


def eval_term(L, t, assignment):
    """Value of ``t`` in ``L`` under ``assignment`` (a name -> element map)."""
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, Const):
        return 0
    if isinstance(t, Prod):
        return L.mul(eval_term(L, t.left, assignment), eval_term(L, t.right, assignment))
    x = eval_term(L, t.arg, assignment)
    lam, rho = L.inverses(x)
    if isinstance(t, LInv):
        return lam
    if isinstance(t, RInv):
        return rho
    if lam != rho:
        raise NoTwoSidedInverse(x, lam, rho)
    return lam


def _eval_grid(L, t, grids):
    if isinstance(t, Var):
        return grids[t.name]
    if isinstance(t, Const):
        return np.zeros((), dtype=np.intp)
    if isinstance(t, Prod):
        return L.table[_eval_grid(L, t.left, grids), _eval_grid(L, t.right, grids)]
    x = _eval_grid(L, t.arg, grids)
    if isinstance(t, LInv):
        return L.left_inverses[x]
    if isinstance(t, RInv):
        return L.right_inverses[x]
    return L.left_inverses[x]


def holds(L, identity):
    """Check ``identity`` on every assignment of its variables.

    Returns ``(True, None)`` or ``(False, assignment)`` with the
    lexicographically first failing assignment (variables in alphabetical
    order). Raises :class:`NoTwoSidedInverse` when the identity uses ``^-1``
    and ``L`` lacks two-sided inverses.
    """
    if (uses_two_sided_inverse(identity.lhs) or uses_two_sided_inverse(identity.rhs)) and not L.has_two_sided_inverses:
        L.inversion_perm()  # raises with the offending element
    names = identity.vars
    n = L.order
    k = len(names)
    grids = {}
    for i, name in enumerate(names):
        shape = [1] * k
        shape[i] = n
        grids[name] = np.arange(n).reshape(shape)
    lhs = np.broadcast_to(_eval_grid(L, identity.lhs, grids), (n,) * k)
    rhs = np.broadcast_to(_eval_grid(L, identity.rhs, grids), (n,) * k)
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return True, None
    # argwhere walks in C order, which is lexicographic here
    return False, {name: int(v) for name, v in zip(names, bad[0])}


def holds_slow(L, identity):
    """Reference scan using :func:`eval_term`; used as a cross-check."""
    names = identity.vars
    for values in product(range(L.order), repeat=len(names)):
        a = dict(zip(names, values))
        if eval_term(L, identity.lhs, a) != eval_term(L, identity.rhs, a):
            return False, a
    return True, None


# --- registry ----------------------------------------------------------------

# The Bol, Moufang and extra laws at the end use their usual textbook forms.
_REGISTRY_TEXT = {
    "lc": "(x*x)*(y*z) = (x*(x*y))*z",
    "lc-alt": "x*(y*(y*z)) = (x*(y*y))*z",
    "rc": "(z*y)*(x*x) = z*((y*x)*x)",
    "rc-alt": "((z*y)*y)*x = z*((y*y)*x)",
    "c": "x*(y*(y*z)) = ((x*y)*y)*z",
    "lip": "x^l*(x*y) = y",
    "rip": "(y*x)*x^r = y",
    "wip": "y*(x*y)^r = x^r",
    "cip": "(x*y)*x^r = y",
    "cip-alt": "(x^-1*y)*x = y",
    "left-alternative": "x*(x*y) = (x*x)*y",
    "right-alternative": "(y*x)*x = y*(x*x)",
    "flexible": "(x*y)*x = x*(y*x)",
    "steiner.sq": "x*x = e",
    "steiner.rip": "(y*x)*x = y",
    "steiner.comm": "x*y = y*x",
    "aaip": "(x*y)^-1 = y^-1*x^-1",
    "aip": "(x*y)^-1 = x^-1*y^-1",
    "commutative": "x*y = y*x",
    "associative": "(x*y)*z = x*(y*z)",
    "left-bol": "x*(y*(x*z)) = (x*(y*x))*z",
    "right-bol": "((z*x)*y)*x = z*((x*y)*x)",
    "moufang": "(x*y)*(z*x) = (x*(y*z))*x",
    "extra": "x*(y*(z*x)) = ((x*y)*z)*x",
}

# Aliases keep the registry addressable by the property names used elsewhere.
_ALIASES = {
    "left-alt": "left-alternative",
    "right-alt": "right-alternative",
    "lap": "left-alternative",
    "rap": "right-alternative",
    "assoc": "associative",
}

# Left/right middle laws: the names are held back until their forms are pinned down.
RESERVED = ("lm", "rm")


def registry_names():
    return tuple(_REGISTRY_TEXT)


def named_identity(name):
    key = _ALIASES.get(name, name)
    if key in RESERVED:
        raise UnknownName(name, registry_names(), note="reserved name with no definition yet")
    if key not in _REGISTRY_TEXT:
        raise UnknownName(name, registry_names())
    ident = parse_identity(_REGISTRY_TEXT[key])
    return Identity(ident.lhs, ident.rhs, name=key)
