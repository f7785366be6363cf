import pytest
from hypothesis import given, settings, strategies as st

from loopkit.core import Permutation
from loopkit.enumerate import (
    AFFINE_PLANE_3,
    FANO,
    GenerationSpec,
    NotASteinerSystem,
    TripleSystem,
    are_isomorphic,
    builtin,
    canonical_form,
    canonical_key,
    canonical_keys,
    catalog,
    cyclic,
    direct_product,
    elementary_abelian_2,
    generate,
    steiner_from_sts,
)
from loopkit.errors import BudgetExceeded, UnknownName
from loopkit.identities import holds, named_identity
from loopkit.morphisms import principal_isotope


@pytest.mark.parametrize("order,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 6)])
def test_class_counts(order, count):
    assert len(catalog(order)) == count


@pytest.mark.parametrize("order", [4, 5])
def test_row_and_column_orders_agree(order):
    row = canonical_keys(generate(GenerationSpec(order, up_to_isomorphism=True)))
    col = canonical_keys(generate(GenerationSpec(order, up_to_isomorphism=True, cell_order="col")))
    assert row == col


def test_labeled_counts():
    # normalised Latin squares of orders 4 and 5
    assert sum(1 for _ in generate(GenerationSpec(4))) == 4
    assert sum(1 for _ in generate(GenerationSpec(5))) == 56


def test_order_4_classes(z4, klein):
    assert canonical_keys(catalog(4)) == {canonical_key(z4), canonical_key(klein)}


def test_groups_of_order_6(sym3):
    groups = catalog(6, ["associative"])
    assert canonical_keys(groups) == {canonical_key(cyclic(6)), canonical_key(sym3)}


def test_property_constraint_filters():
    assert len(catalog(5, ["power-associative"])) == 2
    assert all(L.is_commutative() for L in catalog(5, ["commutative"]))


def test_constraint_forms_are_equivalent():
    a = canonical_keys(catalog(5, ["flexible"]))
    b = canonical_keys(catalog(5, ["(x*y)*x = x*(y*x)"]))
    c = canonical_keys(catalog(5, [named_identity("flexible")]))
    assert a == b == c


def test_limit_and_budget():
    assert len(list(generate(GenerationSpec(5, limit=3)))) == 3
    with pytest.raises(BudgetExceeded):
        list(generate(GenerationSpec(9)))
    with pytest.raises(ValueError):
        GenerationSpec(0)
    with pytest.raises(UnknownName):
        list(generate(GenerationSpec(3, ["not-a-property"])))


def test_generation_is_deterministic():
    first = [L.table.tolist() for L in generate(GenerationSpec(5))]
    assert first == [L.table.tolist() for L in generate(GenerationSpec(5))]


def test_are_isomorphic(z4, klein):
    assert are_isomorphic(z4, z4).is_identity()
    assert are_isomorphic(z4, klein) is None
    assert are_isomorphic(z4, principal_isotope(z4, 1, 2)) is not None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog(5) + [builtin("sym3")]), st.randoms(use_true_random=False))
def test_canonical_key_is_an_invariant(L, rnd):
    tail = list(range(1, L.order))
    rnd.shuffle(tail)
    f = Permutation([0] + tail)
    M = L.relabel(f)
    assert canonical_key(M) == canonical_key(L)
    g = are_isomorphic(L, M)
    assert g is not None
    for x in range(L.order):
        for y in range(L.order):
            assert M.mul(g[x], g[y]) == g[L.mul(x, y)]


def test_canonical_form_labeling(sym3):
    lab, C = canonical_form(sym3)
    assert sym3.relabel(lab) == C


def test_keys_separate_classes():
    loops = catalog(5) + catalog(4)
    assert len(canonical_keys(loops)) == len(loops)
    for i, A in enumerate(loops):
        for B in loops[i + 1:]:
            if A.order == B.order:
                assert are_isomorphic(A, B) is None


def test_steiner_constructions():
    S8 = builtin("steiner8")
    S10 = builtin("steiner10")
    assert S8.order == 8 and S10.order == 10
    for L in (S8, S10):
        assert holds(L, named_identity("c"))[0]
        assert holds(L, named_identity("steiner.sq"))[0]
        assert L.is_commutative()
    # the Fano loop is the elementary abelian group; the affine-plane loop is not associative
    assert S8.is_associative()
    assert are_isomorphic(S8, elementary_abelian_2(3)) is not None
    assert not S10.is_associative()


def test_triple_systems_are_steiner():
    assert len(FANO.triples) == 7
    assert len(AFFINE_PLANE_3.triples) == 12


def test_not_a_steiner_system():
    with pytest.raises(NotASteinerSystem):
        steiner_from_sts(TripleSystem(3, []))
    with pytest.raises(NotASteinerSystem):
        steiner_from_sts(TripleSystem(7, list(FANO.triples) + [(0, 1, 2)]))


def test_builtins():
    assert builtin("cyclic:4").table.tolist() == [[(i + j) % 4 for j in range(4)] for i in range(4)]
    assert builtin("klein").table.tolist() == [[i ^ j for j in range(4)] for i in range(4)]
    assert builtin("elem_abelian_2:3").order == 8
    for bad in ("cyclic:x", "cyclic:0", "nope"):
        with pytest.raises(UnknownName):
            builtin(bad)


def test_direct_product(z4):
    P = direct_product(builtin("cyclic:2"), builtin("cyclic:3"))
    assert are_isomorphic(P, cyclic(6)) is not None
    assert direct_product(z4, builtin("cyclic:1")) == z4
