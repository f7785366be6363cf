from itertools import permutations
import pytest
from hypothesis import given, settings, strategies as st

from loopkit.core import INAPPLICABLE, Permutation, validate_table
from loopkit.enumerate import are_isomorphic, builtin, catalog
from loopkit.errors import BudgetExceeded, OrderMismatch, TableFormatError
from loopkit.morphisms import (
    TRIPLE_NAMES,
    AutotopismTriple,
    autotopism_group,
    automorphisms,
    classify_map,
    compose_autotopisms,
    gamma_map,
    inner_maps,
    invert_autotopism,
    is_A_loop,
    is_autotopism,
    isotope,
    middle_inner,
    named_autotopisms,
    principal_isotope,
    read_triples,
    write_triples,
)
from loopkit.structure import SQUARE, unique_nonidentity

TAU = Permutation([1, 0])
I2 = Permutation.identity(2)


def all_perms(n):
    return [Permutation(p) for p in permutations(range(n))]


def brute_autotopisms(L):
    ps = all_perms(L.order)
    return [t for t in (AutotopismTriple(u, v, w) for u in ps for v in ps for w in ps) if is_autotopism(L, t)]


def test_identity_triple(sym3):
    assert is_autotopism(sym3, AutotopismTriple.identity(6))


def test_z2_examples(z2):
    assert is_autotopism(z2, AutotopismTriple(TAU, TAU, I2))
    t = compose_autotopisms(AutotopismTriple(TAU, I2, TAU), AutotopismTriple(I2, TAU, TAU))
    assert t == AutotopismTriple(TAU, TAU, I2)
    assert is_autotopism(z2, t)


def test_left_translation_alone_is_not_autotopism(sym3):
    I = Permutation.identity(6)
    for x in range(1, 6):
        assert not is_autotopism(sym3, AutotopismTriple(sym3.left_translation(x), I, I))


def test_compose_and_invert(sym3):
    e = AutotopismTriple.identity(6)
    aut = autotopism_group(sym3)
    t = aut[17]
    assert compose_autotopisms(e, t) == t
    assert invert_autotopism(e) == e
    assert is_autotopism(sym3, t.inverse())
    assert t * t.inverse() == e
    with pytest.raises(OrderMismatch):
        compose_autotopisms(e, AutotopismTriple.identity(2))


@pytest.mark.parametrize("name,count", [("cyclic:2", 4), ("cyclic:3", 18), ("klein", 96)])
def test_counts_match_brute_force(name, count):
    L = builtin(name)
    fast = autotopism_group(L)
    assert len(fast) == count
    assert sorted(map(write_triples, [[t] for t in fast])) == sorted(map(write_triples, [[t] for t in brute_autotopisms(L)]))


@pytest.mark.parametrize("name", ["cyclic:4", "sym3", "cyclic:6", "cyclic:8", "elem_abelian_2:3"])
def test_group_count_formula(name):
    L = builtin(name)
    assert autotopism_group(L, count_only=True) == L.order ** 2 * len(automorphisms(L))


def test_automorphism_counts(z4, klein, sym3):
    assert len(automorphisms(z4)) == 2
    assert len(automorphisms(klein)) == 6
    assert len(automorphisms(sym3)) == 6


def test_group_is_closed(z4):
    aut = autotopism_group(z4)
    texts = {write_triples([t]) for t in aut}
    for s in aut[::5]:
        for t in aut[::7]:
            assert write_triples([s * t]) in texts


def test_search_is_sorted_and_budgeted(z3):
    aut = autotopism_group(z3)
    keys = [(tuple(t.W), t.U[0], t.V[0]) for t in aut]
    assert keys == sorted(keys)
    with pytest.raises(BudgetExceeded):
        autotopism_group(builtin("steiner10"))
    assert autotopism_group(builtin("steiner10"), budget=10, count_only=True) > 0


def test_triple_text_round_trip(z3):
    aut = autotopism_group(z3)
    assert read_triples(write_triples(aut)) == aut
    with pytest.raises(TableFormatError):
        read_triples("0 1 2\n1 2 0\n")
    with pytest.raises(TableFormatError):
        read_triples("0 1\n0 1\n0 0\n")


def test_principal_isotopes(z4, sym3):
    for L in (z4, sym3):
        assert principal_isotope(L, 0, 0) == L
    assert are_isomorphic(z4, principal_isotope(z4, 1, 2)) is not None
    M, tau = principal_isotope(sym3, 1, 3, with_relabeling=True)
    assert tau[sym3.mul(1, 3)] == 0


def test_principal_isotopes_are_loops():
    for L in catalog(5):
        for a in range(5):
            for b in range(5):
                M = principal_isotope(L, a, b)
                validate_table(5, M.table)


def test_identity_isotope(sym3):
    I = Permutation.identity(6)
    grid, ok = isotope(sym3, I, I, I)
    assert ok and grid.tolist() == sym3.table.tolist()


def test_z3_isotope_scan(z3):
    ps = all_perms(3)
    count = sum(isotope(z3, A, B, C)[1] for A in ps for B in ps for C in ps)
    assert count == 54


def test_aac_isotopes_keep_a_unique_square(z4):
    ps = all_perms(4)
    for A in ps:
        for C in ps:
            grid, ok = isotope(z4, A, A, C)
            if ok:
                M = validate_table(4, grid)
                assert unique_nonidentity(M, SQUARE) is not None


def test_inner_maps_fix_identity(small_loops):
    for L in small_loops:
        for x in range(L.order):
            for y in range(L.order):
                T, R, Lm = inner_maps(L, x, y)
                assert T[0] == R[0] == Lm[0] == 0
        assert inner_maps(L, 0)[1] is None


def test_middle_inner_definition(sym3):
    for x in range(6):
        T = middle_inner(sym3, x)
        for y in range(6):
            assert sym3.mul(x, T[y]) == sym3.mul(y, x)


def test_gamma_map(z4, sym3):
    for x in range(4):
        assert gamma_map(z4, x).is_identity()
    for x in range(6):
        g = gamma_map(sym3, x)
        for y in range(6):
            assert g[y] == sym3.mul(x, sym3.mul(x, sym3.rdiv(sym3.rdiv(y, x), x)))


def test_classify_identity(z4, sym3):
    for L in (z4, sym3):
        c = classify_map(L, Permutation.identity(L.order))
        assert c.is_automorphism and c.is_semi_automorphism
        assert c.is_anti_automorphism == L.is_commutative()
        assert 0 in c.pseudo_automorphism_companions


def test_classify_negation(z4):
    c = classify_map(z4, z4.inversion_perm())
    assert c.is_automorphism and c.is_bijection and c.fixes_identity


def test_classify_non_bijection(z4):
    c = classify_map(z4, [0, 0, 1, 2])
    assert not c.is_bijection and not c.is_automorphism
    assert c.pseudo_automorphism_companions == []


def test_inversion_is_anti_automorphism(sym3):
    c = classify_map(sym3, sym3.inversion_perm())
    assert c.is_anti_automorphism and not c.is_automorphism


def test_a_loops(z4, sym3, steiner10):
    assert is_A_loop(z4) and is_A_loop(sym3)
    assert is_A_loop(steiner10) is False


def test_named_autotopisms_groups(sym3, z4):
    for L in (sym3, z4):
        for z in range(L.order):
            report = named_autotopisms(L, z)
            assert list(report) == list(TRIPLE_NAMES)
            assert all(v is True for name, v in report.items() if name not in TRIPLE_NAMES[2:4])


def test_named_autotopisms_c_loops(c_loops_to_8, steiner10):
    for L in c_loops_to_8 + [steiner10]:
        for z in range(L.order):
            r = named_autotopisms(L, z)
            assert r[TRIPLE_NAMES[0]] is True and r[TRIPLE_NAMES[1]] is True


def test_j_triple_needs_exponent_4(c_loops_to_8):
    big = [L for L in c_loops_to_8 if 4 % L.exponent() != 0]
    assert big
    for L in big:
        assert any(named_autotopisms(L, z)[TRIPLE_NAMES[2]] is False for z in range(L.order))


def test_j_triples_inapplicable_without_inverses():
    L = next(L for L in catalog(5) if not L.has_two_sided_inverses)
    r = named_autotopisms(L, 1)
    assert r[TRIPLE_NAMES[2]] is INAPPLICABLE and r[TRIPLE_NAMES[3]] is INAPPLICABLE
    with pytest.raises(TypeError):
        bool(INAPPLICABLE)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(catalog(5) + [builtin("sym3")]), st.data())
def test_search_output_is_autotopisms(L, data):
    aut = autotopism_group(L)
    t = data.draw(st.sampled_from(aut))
    s = data.draw(st.sampled_from(aut))
    assert is_autotopism(L, t)
    assert is_autotopism(L, s * t.inverse())
