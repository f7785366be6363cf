import pytest

from loopkit.core import validate_table
from loopkit.enumerate import catalog
from loopkit.structure import (
    ASSOCIATOR,
    COMMUTATOR,
    COMMUTATOR_ASSOCIATOR,
    SQUARE,
    associator,
    centrum_center,
    commutator,
    generated_subloop,
    is_power_associative,
    nuclei,
    special_sets,
    square_flags,
    square_subloop_center,
    structure_report,
    subloop_center,
    unique_nonidentity,
)

NON_PA = [[0, 1, 2, 3, 4], [1, 2, 3, 4, 0], [2, 0, 4, 1, 3], [3, 4, 1, 0, 2], [4, 3, 0, 2, 1]]


def test_nuclei(z4, steiner8, steiner10):
    assert nuclei(z4) == ([0, 1, 2, 3],) * 4
    # steiner8 is the elementary abelian group of order 8
    assert nuclei(steiner8)[3] == list(range(8))
    assert nuclei(steiner10)[3] == [0]


def test_c_loops_are_nuclear_square(c_loops_to_8, steiner10):
    for L in c_loops_to_8 + [steiner10]:
        nuc = set(nuclei(L)[3])
        assert set(int(v) for v in L.squares) <= nuc


def test_centrum_center(klein, sym3, steiner10):
    assert centrum_center(klein) == ([0, 1, 2, 3], [0, 1, 2, 3])
    assert centrum_center(sym3) == ([0], [0])
    assert centrum_center(steiner10) == (list(range(10)), [0])


def test_commutator_and_associator(sym3, z4, steiner10):
    for L in (sym3, steiner10):
        for b in range(L.order):
            assert commutator(L, 0, b) == 0
    assert all(associator(sym3, a, b, c) == 0 for a in range(6) for b in range(6) for c in range(6))
    assert associator(steiner10, 1, 2, 4) != 0
    for a in range(6):
        for b in range(6):
            c = commutator(sym3, a, b)
            assert sym3.mul(a, b) == sym3.mul(sym3.mul(b, a), c)


def test_special_sets(klein, z4, steiner10):
    assert special_sets(klein) == ([0], [0], [0])
    assert special_sets(z4)[2] == [0, 2]
    comm, assoc, squares = special_sets(steiner10)
    assert (comm, assoc, squares) == ([0], list(range(10)), [0])


def test_unique_nonidentity(z4, klein):
    assert unique_nonidentity(z4, SQUARE) == 2
    assert unique_nonidentity(klein, SQUARE) is None
    assert unique_nonidentity(z4, COMMUTATOR) is None
    assert unique_nonidentity(z4, ASSOCIATOR) is None
    with pytest.raises(ValueError):
        unique_nonidentity(z4, "bogus")


def test_unique_commutator_in_quaternions():
    Q8 = next(L for L in catalog(8, ["associative"]) if len(set(int(v) for v in L.squares)) == 2 and not L.is_commutative())
    s = unique_nonidentity(Q8, COMMUTATOR)
    assert s is not None
    assert unique_nonidentity(Q8, SQUARE) == s
    assert unique_nonidentity(Q8, COMMUTATOR_ASSOCIATOR) is None  # associator set is {0}


def test_square_flags(z4, steiner8, steiner10, sym3):
    assert square_flags(z4) == (True, True, True)
    assert square_flags(steiner8)[2]
    assert square_flags(steiner10) == (True, True, True)
    assert square_flags(sym3)[1] is False


def test_power_associativity(sym3, steiner10):
    assert is_power_associative(sym3)
    assert is_power_associative(steiner10)
    assert sum(not is_power_associative(L) for L in catalog(5)) == 4
    assert not is_power_associative(validate_table(5, NON_PA))


def test_subloops(z4, sym3):
    assert generated_subloop(z4, [2]) == [0, 2]
    assert generated_subloop(z4, [1]) == [0, 1, 2, 3]
    r = next(x for x in range(6) if sym3.element_orders[x] == 3)
    rotations = generated_subloop(sym3, [r])
    assert len(rotations) == 3
    assert subloop_center(sym3, rotations) == rotations
    with pytest.raises(ValueError):
        subloop_center(z4, [0, 1])
    assert square_subloop_center(z4) == [0, 2]


def test_structure_report(steiner10):
    r = structure_report(steiner10)
    assert r.nucleus == [0] and r.center == [0]
    assert r.centrum == list(range(10))
    assert r.associator_set == list(range(10))
    assert r.power_associative is True
    assert dict(r.items())["square_set"] == [0]
