import pytest
from hypothesis import given, settings, strategies as st

from loopkit.enumerate import builtin, catalog
from loopkit.errors import IdentitySyntaxError, NoTwoSidedInverse, UnknownName
from loopkit.identities import (
    RESERVED,
    eval_term,
    holds,
    holds_slow,
    named_identity,
    parse_identity,
    parse_term,
    registry_names,
)

C_TEXT = "x*(y*(y*z)) = ((x*y)*y)*z"


def test_parse_c_identity():
    ident = parse_identity(C_TEXT)
    assert ident.vars == ("x", "y", "z")
    assert str(ident) == C_TEXT


def test_parse_wip():
    ident = parse_identity("y*(x*y)^r = x^r")
    assert ident == named_identity("wip")


@pytest.mark.parametrize("text", ["x*) = y", "x*y", "x = ", "x ** y = y", "(x*y = y", "x^q = x", "x = y = z"])
def test_syntax_errors(text):
    with pytest.raises(IdentitySyntaxError):
        parse_identity(text)


def test_product_is_left_associated():
    assert parse_term("x*y*z") == parse_term("(x*y)*z")
    assert parse_term("x*y*z") != parse_term("x*(y*z)")


def test_eval_term(z4, steiner8):
    assert eval_term(z4, parse_term("x*x"), {"x": 3}) == 2
    for L in (z4, steiner8):
        assert all(eval_term(L, parse_term("e*x"), {"x": v}) == v for v in range(L.order))
    t = parse_term("(x*y)*y")
    assert all(eval_term(steiner8, t, {"x": x, "y": y}) == x for x in range(8) for y in range(8))


def test_eval_inverses(z4):
    assert eval_term(z4, parse_term("x^l"), {"x": 1}) == 3
    assert eval_term(z4, parse_term("x^-1*x"), {"x": 1}) == 0


def test_holds_examples(z4, steiner10):
    assert holds(z4, parse_identity(C_TEXT)) == (True, None)
    ok, w = holds(steiner10, named_identity("associative"))
    assert not ok and w == {"x": 1, "y": 2, "z": 4}
    for L in (z4, steiner10):
        assert holds(L, parse_identity("x = x")) == (True, None)


def test_holds_counterexample_is_first(sym3):
    ok, w = holds(sym3, named_identity("cip"))
    assert (ok, w) == (False, {"x": 1, "y": 3})
    assert holds_slow(sym3, named_identity("cip")) == (ok, w)


def test_two_sided_inverse_requirement():
    L = next(L for L in catalog(5) if not L.has_two_sided_inverses)
    with pytest.raises(NoTwoSidedInverse):
        holds(L, named_identity("aip"))
    # one-sided inverses are always fine
    holds(L, named_identity("wip"))


def test_named_identities():
    assert named_identity("c") == parse_identity(C_TEXT)
    assert named_identity("cip") == parse_identity("(x*y)*x^r = y")
    assert named_identity("steiner.sq") == parse_identity("x*x = e")
    assert named_identity("assoc").name == "associative"
    assert len(registry_names()) == len(set(registry_names()))


def test_unknown_and_reserved_names():
    with pytest.raises(UnknownName):
        named_identity("nonsense")
    for name in RESERVED:
        with pytest.raises(UnknownName) as info:
            named_identity(name)
        assert "reserved" in str(info.value)


def test_groups_satisfy_bol_moufang(sym3):
    for name in ("lc", "rc", "c", "left-bol", "right-bol", "moufang", "extra", "flexible", "lip", "rip", "wip"):
        assert holds(sym3, named_identity(name))[0], name


@pytest.mark.parametrize("L", [builtin("cyclic:6"), builtin("klein"), builtin("elem_abelian_2:3")], ids=repr)
def test_abelian_groups_satisfy_whole_registry(L):
    for name in registry_names():
        if name.startswith("steiner"):
            continue
        assert holds(L, named_identity(name))[0], name


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog(5) + catalog(4)), st.sampled_from([n for n in registry_names() if n not in ("aip", "aaip", "cip-alt")]))
def test_vectorised_holds_matches_reference(L, name):
    ident = named_identity(name)
    assert holds(L, ident) == holds_slow(L, ident)
