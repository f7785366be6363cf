"""Named loop properties, Osborn checks, the proposition suite and the hunt.

Each proposition is a material implication checked per loop: when the
hypothesis fails the loop counts as vacuous, otherwise the conclusion is
evaluated and a witness is kept on failure.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .core import INAPPLICABLE, Permutation
from .enumerate import GenerationSpec, canonical_key, generate, key_text
from .errors import NoTwoSidedInverse
from .identities import holds, named_identity, registry_names
from .morphisms import (
    AutotopismTriple,
    gamma_map,
    is_A_loop,
    is_autotopism,
    middle_inner,
    named_triples,
    osborn_maps,
    principal_isotope,
    TRIPLE_NAMES,
)
from .structure import (
    centrum_center,
    generated_subloop,
    is_power_associative,
    nuclei,
    subloop_center,
    unique_nonidentity,
)


@dataclass(frozen=True)
class PropertyValue:
    verdict: object  # True, False, INAPPLICABLE, or a number
    witness: object = None


def _divides(k, m):
    return m % k == 0


class Facts:
    """Lazily computed properties of one loop, shared by all propositions."""

    def __init__(self, L):
        self.L = L
        self._ids = {}

    def ident(self, name):
        """``(verdict, witness)`` for a registry identity; verdict may be INAPPLICABLE."""
        if name not in self._ids:
            try:
                self._ids[name] = holds(self.L, named_identity(name))
            except NoTwoSidedInverse as exc:
                self._ids[name] = (INAPPLICABLE, {"x": exc.element})
        return self._ids[name]

    def has(self, name):
        return self.ident(name)[0] is True

    # loop classes
    @property
    def lc(self):
        return self.has("lc")

    @property
    def rc(self):
        return self.has("rc")

    @property
    def c(self):
        return self.has("c")

    @property
    def lip(self):
        return self.has("lip")

    @property
    def rip(self):
        return self.has("rip")

    @property
    def wip(self):
        return self.has("wip")

    @property
    def associative(self):
        return self.has("associative")

    @property
    def commutative(self):
        return self.has("commutative")

    @property
    def steiner(self):
        return self.has("steiner.sq") and self.has("steiner.rip") and self.has("steiner.comm")

    @cached_property
    def exponent(self):
        return self.L.exponent()

    @cached_property
    def J(self):
        try:
            return self.L.inversion_perm()
        except NoTwoSidedInverse:
            return None

    @cached_property
    def nuclei(self):
        return nuclei(self.L)

    @cached_property
    def centrum_center(self):
        return centrum_center(self.L)

    @cached_property
    def square_set(self):
        return sorted(set(int(v) for v in self.L.squares))

    def _square_outside(self, allowed):
        allowed = set(allowed)
        for x in range(self.L.order):
            if int(self.L.squares[x]) not in allowed:
                return x
        return None

    @cached_property
    def nuclear_square_witness(self):
        return self._square_outside(self.nuclei[3])

    @cached_property
    def centrum_square_witness(self):
        return self._square_outside(self.centrum_center[0])

    @cached_property
    def central_square_witness(self):
        return self._square_outside(self.centrum_center[1])

    @property
    def central_square(self):
        return self.central_square_witness is None

    @property
    def centrum_square(self):
        return self.centrum_square_witness is None

    @property
    def squares_onto(self):
        return len(self.square_set) == self.L.order

    def unique(self, kind):
        return unique_nonidentity(self.L, kind)

    @cached_property
    def j_triples(self):
        """First z failing each J-triple, or None when it holds for every z."""
        if self.J is None:
            return INAPPLICABLE, INAPPLICABLE
        first = [None, None]
        for z in range(self.L.order):
            t = named_triples(self.L, z)
            for k, name in enumerate(TRIPLE_NAMES[2:4]):
                if first[k] is None and not is_autotopism(self.L, t[name]):
                    first[k] = z
        return tuple(first)

    @property
    def j_triple_1(self):
        return self.j_triples[0] is None

    @property
    def j_triple_2(self):
        return self.j_triples[1] is None

    @cached_property
    def middle_inner(self):
        return [middle_inner(self.L, x) for x in range(self.L.order)]

    @cached_property
    def a_loop(self):
        return is_A_loop(self.L)

    @cached_property
    def osborn(self):
        return osborn_definitional(self.L)

    @cached_property
    def osborn_universal(self):
        return osborn_universal(self.L)


# --- Osborn ------------------------------------------------------------------------


def osborn_conditions(L, x):
    """Truth of the four Osborn conditions at ``x``."""
    T = L.table
    E, A, B = osborn_maps(L, x)
    e, ei = E.image, E.inverse().image
    idx = np.arange(L.order)
    y, z = idx[:, None], idx[None, :]
    # x(yz.x) == (x.yE).zx
    c1 = np.array_equal(T[x, T[T[y, z], x]], T[T[x, e[y]], T[z, x]])
    # (x.yz)x == xy.(zE^-1.x)
    c2 = np.array_equal(T[T[x, T[y, z]], x], T[T[x, y], T[ei[z], x]])
    R, Lx = L.translations(x)
    c3 = is_autotopism(L, AutotopismTriple(A, R, R * Lx))
    c4 = is_autotopism(L, AutotopismTriple(Lx, B, Lx * R))
    return bool(c1), bool(c2), c3, c4


def osborn_definitional(L):
    for x in range(L.order):
        if not all(osborn_conditions(L, x)):
            return PropertyValue(False, {"x": x})
    return PropertyValue(True)


def osborn_universal(L):
    wip = named_identity("wip")
    for a in range(L.order):
        for b in range(L.order):
            if not holds(principal_isotope(L, a, b), wip)[0]:
                return PropertyValue(False, {"a": a, "b": b})
    return PropertyValue(True)


def osborn_check(L, method="definitional"):
    if method == "definitional":
        return osborn_definitional(L)
    if method == "universal":
        return osborn_universal(L)
    raise ValueError(f"unknown method {method!r}")


# --- properties --------------------------------------------------------------------


def _ident_prop(name):
    def prop(L, facts=None):
        v, w = (facts or Facts(L)).ident(name)
        return PropertyValue(v, w)

    return prop


def _square_prop(attr):
    def prop(L, facts=None):
        x = getattr(facts or Facts(L), attr)
        return PropertyValue(x is None, None if x is None else {"x": x})

    return prop


def _unique_prop(kind):
    def prop(L, facts=None):
        s = (facts or Facts(L)).unique(kind)
        return PropertyValue(s is not None, s)

    return prop


def _both(a, b):
    def prop(L, facts=None):
        f = facts or Facts(L)
        for name in (a, b):
            v, w = f.ident(name)
            if v is not True:
                return PropertyValue(v, w)
        return PropertyValue(True)

    return prop


def _steiner(L, facts=None):
    f = facts or Facts(L)
    for name in ("steiner.sq", "steiner.rip", "steiner.comm"):
        v, w = f.ident(name)
        if v is not True:
            return PropertyValue(False, w)
    return PropertyValue(True)


def _every_square(L, facts=None):
    f = facts or Facts(L)
    missing = sorted(set(range(L.order)) - set(f.square_set))
    return PropertyValue(not missing, missing[0] if missing else None)


PROPERTIES = {name: _ident_prop(name) for name in registry_names()}
PROPERTIES.update(
    {
        "ip": _both("lip", "rip"),
        "alternative": _both("left-alternative", "right-alternative"),
        "steiner": _steiner,
        "group": _ident_prop("associative"),
        "nuclear-square": _square_prop("nuclear_square_witness"),
        "centrum-square": _square_prop("centrum_square_witness"),
        "central-square": _square_prop("central_square_witness"),
        "exponent": lambda L, facts=None: PropertyValue((facts or Facts(L)).exponent),
        "power-associative": lambda L, facts=None: PropertyValue(is_power_associative(L)),
        "a-loop": lambda L, facts=None: PropertyValue((facts or Facts(L)).a_loop),
        "unique-square": _unique_prop("square"),
        "unique-commutator": _unique_prop("commutator"),
        "unique-associator": _unique_prop("associator"),
        "unique-commutator-associator": _unique_prop("commutator_associator"),
        "every-element-square": _every_square,
        "osborn": lambda L, facts=None: (facts or Facts(L)).osborn,
        "osborn-universal": lambda L, facts=None: (facts or Facts(L)).osborn_universal,
    }
)

DEFAULT_REPORT = (
    "lc", "rc", "c", "flexible", "left-alternative", "right-alternative", "alternative",
    "commutative", "associative", "lip", "rip", "ip", "wip", "cip", "steiner",
    "nuclear-square", "centrum-square", "central-square", "exponent", "power-associative",
    "a-loop", "unique-square", "unique-commutator", "unique-associator", "every-element-square",
)


def property_report(L, names=DEFAULT_REPORT):
    """Ordered mapping of property name to :class:`PropertyValue`."""
    facts = Facts(L)
    return {name: PROPERTIES[name](L, facts) for name in names}


# --- propositions ------------------------------------------------------------------


@dataclass(frozen=True)
class Proposition:
    id: str
    hypothesis: object  # Facts -> bool
    conclusion: object  # Facts -> (bool, witness)
    scope_note: str = ""


def _all(items):
    """First ``(False, witness)`` among ``(ok, witness)`` pairs, else ``(True, None)``."""
    for ok, w in items:
        if not ok:
            return False, w
    return True, None


def _check(ok, w=None):
    return bool(ok), (None if ok else w)


def _p1_hyp(f):
    return f.c and f.J is not None and (f.j_triple_1 or f.j_triple_2)


def _p1(f):
    return _check(_divides(f.exponent, 4), {"exponent": f.exponent})


def _p2_hyp(f):
    return f.c and f.J is not None and f.j_triple_1 and f.j_triple_2


def _p2(f):
    return _all([
        _check(f.central_square, {"x": f.central_square_witness}),
        _check(_divides(f.exponent, 4), {"exponent": f.exponent}),
    ])


def _p3(f):
    L = f.L
    T = L.table
    sq_xy = T[T, T]  # (xy)(xy) at [x, y]
    sq_yx = sq_xy.T
    cube = np.array([L.power(x, 3) for x in range(L.order)])
    # x -> x^3 bijective with (xy)^3 == y^3 x^3
    anti = len(set(cube.tolist())) == L.order and np.array_equal(T[cube[None, :], cube[:, None]], cube[T])
    bad = np.argwhere(sq_xy != sq_yx)
    return _all([
        _check(f.has("flexible"), f.ident("flexible")[1]),
        _check(len(bad) == 0, None if len(bad) == 0 else {"x": int(bad[0][0]), "y": int(bad[0][1])}),
        _check(anti, {"cube": cube.tolist()}),
    ])


def _p4_hyp(f):
    return f.c and f.central_square and _divides(f.exponent, 4)


def _assoc(f):
    return _check(f.associative, f.ident("associative")[1])


def _principal_isotopes_c_and_a(f):
    L = f.L
    for a in range(L.order):
        for b in range(L.order):
            H = principal_isotope(L, a, b)
            if not holds(H, named_identity("c"))[0]:
                return False, {"a": a, "b": b, "fails": "c"}
            if not is_A_loop(H):
                return False, {"a": a, "b": b, "fails": "a-loop"}
    return True, None


def _p5_hyp(f):
    return f.c and (
        (f.central_square and _divides(f.exponent, 4))
        or f.unique("square") is not None
        or (f.J is not None and f.j_triple_1 and f.j_triple_2)
    )


def _p5(f):
    checks = []
    if f.J is not None and f.j_triple_1 and f.j_triple_2:
        checks.append(_assoc(f))
    checks.append(_principal_isotopes_c_and_a(f))
    return _all(checks)


def _p6(f):
    L = f.L
    trivial = None
    for x in range(L.order):
        if not gamma_map(L, x).is_identity():
            trivial = x
            break
    return _check((trivial is None) == f.central_square, {"x": trivial})


def _t_injective(f):
    return len(set(f.middle_inner)) == f.L.order


def _p7_hyp(f):
    return f.c and _t_injective(f)


def _p7(f):
    e2 = _divides(f.exponent, 2)
    checks = [
        _check(e2 == f.central_square, {"exponent": f.exponent}),
        _check(f.central_square == f.steiner, {"steiner": f.steiner}),
    ]
    if f.J is not None and f.j_triple_1 and f.j_triple_2:
        checks.append(_check(f.steiner and _divides(f.exponent, 4), {"exponent": f.exponent}))
    return _all(checks)


def _p8_hyp(f):
    return f.c and f.squares_onto


def _flexible(f):
    return _check(f.has("flexible"), f.ident("flexible")[1])


def _p9_hyp(f):
    return (
        f.c
        and f.J is not None
        and f.j_triple_1
        and f.j_triple_2
        and all((t * t).is_identity() for t in f.middle_inner)
    )


def _p10_hyp(f):
    return (f.c and any(f.unique(k) is not None for k in ("commutator", "associator", "commutator_associator"))) or (
        (f.lc or f.rc) and f.unique("square") is not None
    )


def _p10(f):
    L = f.L
    n_lambda, n_rho, n_mu, nucleus = f.nuclei
    centrum, center = f.centrum_center
    checks = []
    if f.c:
        s = f.unique("commutator")
        if s is not None:
            checks.append(_check(L.mul(s, s) == 0, {"s": s}))
            checks.append(_check(s in centrum, {"s": s}))
            squares = f.square_set
            if generated_subloop(L, squares) == squares:
                checks.append(_check(s in subloop_center(L, squares), {"s": s}))
        s = f.unique("associator")
        if s is not None:
            checks.append(_check(s in nucleus, {"s": s}))
        s = f.unique("commutator_associator")
        if s is not None:
            checks.append(_check(s in center and L.mul(s, s) == 0, {"s": s}))
    s = f.unique("square")
    if (f.lc or f.rc) and s is not None:
        checks.append(_check(L.mul(s, s) == 0, {"s": s}))
        bad = [x for x in range(L.order) if not _divides(L.element_order(x), 4)]
        checks.append(_check(not bad, {"x": bad[0] if bad else None}))
        if f.lc:
            checks.append(_check(s in n_lambda and s in n_mu, {"s": s}))
        if f.rc:
            checks.append(_check(s in n_rho and s in n_mu, {"s": s}))
    return _all(checks)


def _p11_hyp(f):
    return (f.lc or f.rc) and f.unique("square") is not None and f.J is not None


def _p11(f):
    L = f.L
    s = f.unique("square")
    J = f.J
    checks = []
    for x in range(L.order):
        x2 = L.mul(x, x)
        if f.lc:
            checks.append(_check((x2 == s) == (J[x] == L.rdiv(x, s)), {"x": x}))
        if f.rc:
            checks.append(_check((x2 == s) == (J[x] == L.ldiv(s, x)), {"x": x}))
        checks.append(_check((x2 == 0) == (J[x] == x), {"x": x}))
    return _all(checks)


def _p12_hyp(f):
    return f.unique("square") is not None and ((f.lc and f.rip) or (f.rc and f.lip))


def _p12(f):
    L = f.L
    s = f.unique("square")
    J = f.J
    T = L.table
    checks = [
        _check(s in f.centrum_center[1], {"s": s}),
        _check(f.centrum_square, {"x": f.centrum_square_witness}),
    ]
    for x in range(L.order):
        if L.mul(x, x) == s:
            if f.lc and f.rip:
                checks.append(_check(J[x] == L.mul(x, s), {"x": x}))
            if f.rc and f.lip:
                checks.append(_check(J[x] == L.mul(s, x), {"x": x}))
        else:
            checks.append(_check(J[x] == x, {"x": x}))
    sq = np.diagonal(T)
    is_hom = np.array_equal(T[sq[:, None], sq[None, :]], sq[T])
    is_anti = np.array_equal(T[sq[None, :], sq[:, None]], sq[T])
    bij = len(set(sq.tolist())) == L.order
    checks.append(_check(not (bij and (is_hom or is_anti)), {"s": s}))
    checks.append(_check(f.associative or f.steiner, {"s": s}))
    if f.c:
        if not f.commutative:
            checks.append(_check(f.unique("commutator") == s, {"s": s}))
        checks.append(_assoc(f))
    return _all(checks)


def _p13_hyp(f):
    return f.unique("square") is not None


def aac_loop_isotopes(L):
    """Representatives of the loop isotopes of L under triples ``(A, A, C)``.

    Up to renaming by A such an isotope is ``x * y = (xy)D`` with ``D = C A^-1``;
    it has an identity u exactly when ``L_u = R_u`` and ``D = L_u^-1``. Yields
    ``(u, C)`` with ``A = I`` and ``C = L_u^-1``.
    """
    for u in range(L.order):
        Lu = L.left_translation(u)
        if Lu == L.right_translation(u):
            yield u, Lu.inverse()


def _p13(f):
    L = f.L
    s = f.unique("square")
    T = L.table
    for u, C in aac_loop_isotopes(L):
        grid = C.image[T]
        squares = set(np.diagonal(grid).tolist()) - {u}
        ok = len(squares) == 1 and squares <= {C[s], C[0]}
        if not ok:
            return False, {"u": u}
    return True, None


def _exp3(f):
    return _divides(f.exponent, 3)


def _p14_hyp(f):
    return (f.lc or f.rc) and _exp3(f)


def _p14(f):
    v = f.ident("cip")[0]
    return _check(f.centrum_square == (v is True), {"centrum_square": f.centrum_square})


def _p15_hyp(f):
    return ((f.lc or f.rc) and _exp3(f) and f.centrum_square) or (f.c and _exp3(f) and f.central_square)


def _p15(f):
    n_lambda, n_rho, n_mu, nucleus = f.nuclei
    center = f.centrum_center[1]
    checks = [
        _check(f.has("aip"), f.ident("aip")[1]),
        _check(f.has("aaip"), f.ident("aaip")[1]),
        _check(f.wip, f.ident("wip")[1]),
        _check(f.has("cip"), f.ident("cip")[1]),
        _check(n_lambda == n_rho == n_mu == nucleus, {"nucleus": nucleus}),
        _check(set(nucleus) <= set(center), {"nucleus": nucleus}),
        _check(f.commutative, f.ident("commutative")[1]),
        _assoc(f),
    ]
    return _all(checks)


def _p16_hyp(f):
    return (f.lc or f.rc) and _exp3(f)


def _p17_hyp(f):
    return f.lc or f.rc


def _p17(f):
    checks = []
    if f.lc:
        checks.append(_check(f.rip == f.wip, {"rip": f.rip, "wip": f.wip}))
    if f.rc:
        checks.append(_check(f.lip == f.wip, {"lip": f.lip, "wip": f.wip}))
    return _all(checks)


def _p18_hyp(f):
    return (f.lc and f.rip) or (f.rc and f.lip)


def _p18(f):
    L = f.L
    n = L.order
    I = Permutation.identity(n)
    n_lambda, n_rho, n_mu, _ = f.nuclei
    checks = [_check(n_lambda == n_rho == n_mu, {"n_lambda": n_lambda, "n_rho": n_rho, "n_mu": n_mu})]
    for x in range(n):
        R, Lx = L.translations(x)
        Rsq = L.right_translation(L.mul(x, x))
        Lsq = L.left_translation(L.mul(x, x))
        if f.lc and f.rip:
            checks.append(_check(is_autotopism(L, AutotopismTriple(I, Rsq, Rsq)), {"x": x}))
            checks.append(_check(is_autotopism(L, AutotopismTriple(Lx * Lx, Rsq, Rsq * Lx * Lx)), {"x": x}))
        if f.rc and f.lip:
            checks.append(_check(is_autotopism(L, AutotopismTriple(Lsq, I, Lsq)), {"x": x}))
            checks.append(_check(is_autotopism(L, AutotopismTriple(Lsq, R * R, Lsq * R * R)), {"x": x}))
    return _all(checks)


P19_LC = ("rip", "right-alternative", "rc", "aaip", "wip", "c")
P19_RC = ("lip", "left-alternative", "lc", "aaip", "wip", "c")


def equivalence_web(f, names):
    """Verdicts of ``names`` on the loop; INAPPLICABLE counts as False."""
    return {name: f.ident(name)[0] is True for name in names}


def _p19(f):
    checks = []
    for cond, names in ((f.lc, P19_LC), (f.rc, P19_RC)):
        if cond:
            web = equivalence_web(f, names)
            checks.append(_check(len(set(web.values())) == 1, web))
    return _all(checks)


def _p20_hyp(f):
    return f.squares_onto and ((f.rc and f.lip) or (f.lc and f.rip) or f.c)


def _p20(f):
    return _all([_check(f.osborn.verdict, f.osborn.witness), _assoc(f)])


PROPOSITIONS = (
    Proposition("P1", _p1_hyp, _p1, "either J-triple family in AUT for every z"),
    Proposition("P2", _p2_hyp, _p2),
    Proposition("P3", _p2_hyp, _p3),
    Proposition("P4", _p4_hyp, _assoc, "exponent read as x^4 = e for all x"),
    Proposition("P5", _p5_hyp, _p5, "isotopes checked through principal isotopes"),
    Proposition("P6", lambda f: f.c, _p6),
    Proposition("P7", _p7_hyp, _p7),
    Proposition("P8", _p8_hyp, _flexible),
    Proposition("P9", _p9_hyp, _flexible, "T(x)^2 = I for every x"),
    Proposition("P10", _p10_hyp, _p10),
    Proposition("P11", _p11_hyp, _p11, "per-element reading"),
    Proposition("P12", _p12_hyp, _p12),
    Proposition("P13", _p13_hyp, _p13, "new square is sC or eC"),
    Proposition("P14", _p14_hyp, _p14),
    Proposition("P15", _p15_hyp, _p15),
    Proposition("P16", _p16_hyp, _assoc),
    Proposition("P17", _p17_hyp, _p17),
    Proposition("P18", _p18_hyp, _p18),
    Proposition("P19", lambda f: f.lc or f.rc, _p19, "six-way equivalence"),
    Proposition("P20", _p20_hyp, _p20),
)


@dataclass
class PropositionResult:
    id: str
    tested: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)  # (loop, key, witness)

    @property
    def passed(self):
        return not self.failures

    def line(self):
        if self.passed:
            return f"{self.id} PASS tested={self.tested} vacuous={self.vacuous}"
        _, key, witness = self.failures[0]
        return f"{self.id} FAIL loop={key_text(key)} witness={format_witness(witness)}"


def format_witness(w):
    if w is None:
        return "-"
    if isinstance(w, dict):
        return ",".join(f"{k}={_fmt(v)}" for k, v in w.items())
    return _fmt(w)


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "[" + " ".join(str(x) for x in v) + "]"
    return str(v)


def proposition_suite(catalog, propositions=PROPOSITIONS):
    """Evaluate every proposition over ``catalog``, ordered by canonical key."""
    keyed = sorted(((canonical_key(L), L) for L in catalog), key=lambda kv: kv[0])
    results = {p.id: PropositionResult(p.id) for p in propositions}
    for key, L in keyed:
        facts = Facts(L)
        for p in propositions:
            r = results[p.id]
            if not p.hypothesis(facts):
                r.vacuous += 1
                continue
            r.tested += 1
            ok, witness = p.conclusion(facts)
            if not ok:
                r.failures.append((L, key, witness))
    return [results[p.id] for p in propositions]


def suite_catalog(max_order, extra=("steiner8", "steiner10")):
    """All loops of order <= ``max_order`` up to isomorphism, plus built-ins."""
    from .enumerate import builtin, catalog

    loops = []
    for n in range(1, max_order + 1):
        loops.extend(catalog(n, budget=max(8, max_order)))
    keys = {canonical_key(L) for L in loops}
    for name in extra:
        B = builtin(name)
        if canonical_key(B) not in keys:
            loops.append(B)
    return loops


# --- counterexample search ------------------------------------------------------


@dataclass
class HuntResult:
    witness: object  # LoopTable or None
    examined: dict  # order -> number of classes checked
    orders: tuple

    @property
    def found(self):
        return self.witness is not None


def counterexample_search(orders, target, constraints=(), budget=None):
    """First loop, in generation order, with ``target(loop)`` true.

    ``constraints`` prune the generator; ``target`` sees one
    representative per isomorphism class.
    """
    examined = {}
    orders = tuple(orders)
    for n in orders:
        spec = GenerationSpec(n, list(constraints), up_to_isomorphism=True)
        count = 0
        for L in generate(spec, budget=budget or max(8, n)):
            count += 1
            if target(L):
                examined[n] = count
                return HuntResult(L, examined, orders)
        examined[n] = count
    return HuntResult(None, examined, orders)


def osborn_target(L):
    """Non-associative loop satisfying the definitional Osborn conditions."""
    return not L.is_associative() and osborn_definitional(L).verdict is True


def hunt_osborn(max_order=8, budget=None):
    """Search C-loops of order <= ``max_order`` for a non-associative Osborn one."""
    return counterexample_search(range(1, max_order + 1), osborn_target, constraints=("c",), budget=budget)
