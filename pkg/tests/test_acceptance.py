"""Acceptance criteria 1-10, each reported as one PASS/FAIL line."""

import time
from itertools import permutations

import pytest

from conftest import record
from loopkit.cli import run
from loopkit.enumerate import GenerationSpec, builtin, canonical_keys, generate
from loopkit.identities import holds, named_identity
from loopkit.core import Permutation
from loopkit.morphisms import (
    AutotopismTriple,
    automorphisms,
    autotopism_group,
    classify_map,
    gamma_map,
    is_autotopism,
    middle_inner,
)
from loopkit.theorems import Facts, P19_LC, equivalence_web, hunt_osborn, osborn_check

pytestmark = pytest.mark.acceptance


def check(criterion, ok, detail=""):
    record(criterion, ok, detail)
    assert ok, detail


def test_criterion_1_enumeration():
    expected = [1, 1, 1, 2, 6, 109]
    counts, agree = [], True
    t0 = time.perf_counter()
    for n in range(1, 7):
        row = canonical_keys(generate(GenerationSpec(n, up_to_isomorphism=True, cell_order="row")))
        col = canonical_keys(generate(GenerationSpec(n, up_to_isomorphism=True, cell_order="col")))
        counts.append(len(row))
        agree &= row == col
    elapsed = time.perf_counter() - t0
    check(1, counts == expected and agree and elapsed < 60, f"counts={counts} strategies agree={agree} {elapsed:.1f}s")


def test_criterion_2_suite():
    t0 = time.perf_counter()
    code, out, _ = run(["verify-paper", "--max-order", "6"])
    elapsed = time.perf_counter() - t0
    failed = [ln for ln in out.splitlines() if " FAIL " in ln]
    lines = out.splitlines()
    ok = code == 0 and len(lines) == 20 and not failed and elapsed < 300
    detail = f"exit={code} {elapsed:.1f}s" + ("; " + "; ".join(failed) if failed else "")
    check(2, ok, detail)


def test_criterion_3_steiner():
    bad = []
    for name in ("steiner8", "steiner10"):
        L = builtin(name)
        want = {"c": True, "lip": True, "rip": True, "commutative": True, "associative": False}
        for ident, value in want.items():
            if holds(L, named_identity(ident))[0] is not value:
                bad.append(f"{name} {ident}")
        if L.exponent() != 2:
            bad.append(f"{name} exponent={L.exponent()}")
    check(3, not bad, "mismatches: " + ", ".join(bad) if bad else "all exact")


def test_criterion_4_inner_maps(c_loops_to_8):
    bad = 0
    checked = 0
    for L in c_loops_to_8:
        for x in range(L.order):
            R, Lx = L.translations(x)
            T = middle_inner(L, x)
            for n in range(1, L.exponent() + 1):
                lhs = middle_inner(L, L.power(x, n))
                rhs = (R ** (n - 1)) * T * (Lx ** (1 - n))
                checked += 1
                bad += lhs != rhs
    check(4, bad == 0 and checked > 0, f"{len(c_loops_to_8)} C-loops, {checked} cases, {bad} mismatches")


def test_criterion_5_gamma(c_loops_to_8):
    bad = 0
    for L in c_loops_to_8:
        J = L.inversion_perm()
        for x in range(L.order):
            g = gamma_map(L, x)
            c = classify_map(L, g)
            x2 = L.mul(x, x)
            ok = (
                c.is_automorphism
                and c.is_semi_automorphism
                and g == middle_inner(L, J[x2])
                and x2 in c.pseudo_automorphism_companions
            )
            bad += not ok
    check(5, bad == 0, f"{len(c_loops_to_8)} C-loops, {bad} failures")


def brute_count(L):
    ps = [Permutation(p) for p in permutations(range(L.order))]
    return sum(is_autotopism(L, AutotopismTriple(u, v, w)) for u in ps for v in ps for w in ps)


def test_criterion_6_autotopisms():
    notes, ok = [], True
    for name, want in (("cyclic:2", 4), ("cyclic:3", 18), ("klein", 96)):
        L = builtin(name)
        t0 = time.perf_counter()
        got = len(autotopism_group(L))
        dt = time.perf_counter() - t0
        formula = L.order ** 2 * len(automorphisms(L))
        ok &= got == want == formula == brute_count(L) and dt < 1
        notes.append(f"{name}={got} ({dt:.2f}s)")
    t0 = time.perf_counter()
    E8 = builtin("elem_abelian_2:3")
    big = autotopism_group(E8, count_only=True)
    dt = time.perf_counter() - t0
    ok &= big == 64 * len(automorphisms(E8)) and dt < 120
    notes.append(f"Z2^3={big} ({dt:.2f}s)")
    check(6, ok, ", ".join(notes))


def test_criterion_7_osborn(loops_to_6):
    disagree = [
        L for L in loops_to_6
        if osborn_check(L, "definitional").verdict != osborn_check(L, "universal").verdict
    ]
    check(7, not disagree, f"{len(loops_to_6)} loops, {len(disagree)} disagreements")


def test_criterion_8_central_square(c_loops_to_8):
    hyp = 0
    bad = 0
    for L in c_loops_to_8:
        f = Facts(L)
        if f.central_square and 4 % f.exponent == 0:
            hyp += 1
            bad += not f.associative
    check(8, bad == 0, f"{hyp} hypothesis loops, {bad} counterexamples")


def test_criterion_9_equivalence(lc_loops_to_8):
    bad = 0
    for L in lc_loops_to_8:
        web = equivalence_web(Facts(L), P19_LC)
        bad += len(set(web.values())) != 1
    check(9, bad == 0, f"{len(lc_loops_to_8)} LC-loops, {bad} broken webs")


def test_criterion_10_hunt():
    t0 = time.perf_counter()
    res = hunt_osborn(8)
    dt = time.perf_counter() - t0
    outcome = "witness found" if res.found else f"exhausted, examined {res.examined}"
    check(10, dt < 600, f"{outcome} ({dt:.1f}s)")
