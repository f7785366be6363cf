"""Steiner loops from triple systems, and their autotopism groups.

The Fano plane gives back the elementary abelian group of order 8; the
affine plane of order 3 gives a genuinely non-associative C-loop.
"""

import time

from loopkit import are_isomorphic, autotopism_group, builtin
from loopkit.morphisms import TRIPLE_NAMES, automorphisms, is_A_loop, named_autotopisms
from loopkit.theorems import osborn_check

for name in ("steiner8", "steiner10"):
    L = builtin(name)
    t0 = time.perf_counter()
    n_aut = autotopism_group(L, budget=10, count_only=True)
    dt = time.perf_counter() - t0
    print(f"{name}: associative={L.is_associative()} |AUT|={n_aut} |Aut|={len(automorphisms(L))} ({dt:.2f}s)")

S8 = builtin("steiner8")
print("steiner8 isomorphic to Z2^3:", are_isomorphic(S8, builtin("elem_abelian_2:3")) is not None)

S10 = builtin("steiner10")
print("steiner10 is an A-loop:", is_A_loop(S10))
print("steiner10 Osborn (definitional):", osborn_check(S10, "definitional"))
print("steiner10 Osborn (universal):", osborn_check(S10, "universal"))

print("\nNamed triples at z = 1 in steiner10:")
for name in TRIPLE_NAMES:
    print(f"  {name:24s} {named_autotopisms(S10, 1)[name]}")
