#!/usr/bin/env python3
"""Build every graph family and check the verified signature against the
closed-form parameters.

The verifier counts girth cycles through every edge exactly, so a PASS
line here means the (n, k, g, lambda) formula is machine-checked, not
assumed.
"""

from egrtools import (
    GF,
    build_biaffine,
    build_gq_truncation,
    build_ovoid_spread,
    build_pencil_graph,
    verify_egr,
)

FIELDS = {2: GF(2), 3: GF(3), 4: GF(2, 2), 5: GF(5)}

print("=" * 72)
print("Biaffine planes (girth 6)")
print("=" * 72)
for q in (3, 4, 5):
    sig = verify_egr(build_biaffine(FIELDS[q], 1))
    formula = (2 * q * q, q, 6, (q - 1) ** 2 * (q - 2))
    print(f"  type 1, q={q}: {sig}   formula {formula}", "OK" if (sig.n, sig.k, sig.g, sig.lam) == formula else "MISMATCH")
for q in (3, 4, 5):
    sig = verify_egr(build_biaffine(FIELDS[q], 2))
    formula = (2 * q * q - 2, q, 6, (q - 1) * (q * q - 3 * q + 3))
    print(f"  type 2, q={q}: {sig}   formula {formula}", "OK" if (sig.n, sig.k, sig.g, sig.lam) == formula else "MISMATCH")

print()
print("=" * 72)
print("Truncated generalized quadrangles W(q) (girth 8)")
print("=" * 72)
for q in (3, 4):
    sig = verify_egr(build_gq_truncation(FIELDS[q]))
    formula = (2 * q**3, q, 8, (q - 1) ** 2 * ((q - 2) ** 2 + 1))
    print(f"  q={q}: {sig}   formula {formula}", "OK" if (sig.n, sig.k, sig.g, sig.lam) == formula else "MISMATCH")

print()
print("=" * 72)
print("Ovoid + spread deletion from W(4) (girth 8)")
print("=" * 72)
sig = verify_egr(build_ovoid_spread(FIELDS[4]))
print(f"  q=4: {sig}   formula (136, 4, 8, 36)")

print()
print("=" * 72)
print("Tangent-plane pencil graphs (girth 4)")
print("=" * 72)
for q in (2, 3):
    sig = verify_egr(build_pencil_graph(FIELDS[q]))
    n = q**3 + q**2 + q + 1
    formula = (2 * n, q * q + q + 1, 4, q**3 + q**2)
    print(f"  q={q}: {sig}   formula {formula}", "OK" if (sig.n, sig.k, sig.g, sig.lam) == formula else "MISMATCH")

print()
print("Every edge of every graph above was checked by exact cycle enumeration.")
