"""A short walk through the toolkit on small loops.

Run with ``python3 demos/tour.py``.
"""

from loopkit import builtin, catalog, holds, named_identity, parse_identity, property_report
from loopkit.structure import structure_report

print("Loops of order 5 up to isomorphism:", len(catalog(5)))

# Which of them are power-associative?
for L in catalog(5):
    r = property_report(L, ["power-associative", "commutative", "flexible", "ip"])
    flags = ", ".join(k for k, v in r.items() if v.verdict is True) or "none of the listed properties"
    print("  ", L.table[1].tolist(), "->", flags)

# Identities can be written inline.
moufang = named_identity("moufang")
ident = parse_identity("(x*x)*(y*z) = (x*(x*y))*z")
for name in ("sym3", "steiner10"):
    L = builtin(name)
    print(f"\n{name}: moufang {holds(L, moufang)}, LC {holds(L, ident)}")
    for k, v in structure_report(L).items():
        print(f"  {k}: {v}")
