"""
Brauer classes through B-field lifts
====================================

A Brauer class is carried by a lift (xi, r). Its order is the least k
with k*xi inside NS + r*H2; two lifts describe the same class exactly
when r'xi - r xi' = L + rr'N with L in NS, and the witness (L, N) turns
into a certified integral isometry between the twisted structures.
"""

from k3moduli.brauer import (BField, brauer_equivalent, brauer_order,
                             twist_comparison_isometry)
from k3moduli.lattices import Sublattice, hyperbolic_U, k3_lattice

U = hyperbolic_U()
ns = Sublattice(U, ((1, 1),))

b = BField((1, 0), 2)           # xi = e, r = 2
print("order of [e mod 2] with NS = span{e+f}:", brauer_order(b, ns))
print("order of [e+f mod 2] (inside NS):",
      brauer_order(BField((1, 1), 2), ns))

# The same computation runs inside the full rank-22 K3 lattice.
K3 = k3_lattice()
ns22 = Sublattice(K3, ((1, 1) + (0,) * 20,))
print("same order, K3-embedded:",
      brauer_order(BField((1,) + (0,) * 21, 2), ns22))

# Equivalence with an explicit certificate. Here xi' = xi + 2N0 + L0.
b2 = BField((1 + 2 * 3 + 5, -2 + 5), 2)
w = brauer_equivalent(b, b2, ns)
print("\nwitness for (e,2) ~ (e + 2N0 + L0, 2):", w)
print("no witness against the trivial class:",
      brauer_equivalent(b, BField((0, 0), 1), ns))

# The witness certifies an integral isometry of the extended lattice;
# construction re-checks M^T G M = G, so the value is trustworthy.
iso = twist_comparison_isometry(b, b2, w, U)
print("\ncomparison isometry rows:")
for row in iso.matrix:
    print("  ", row)
