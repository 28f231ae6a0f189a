"""
The K3 and Mukai lattices
=========================

The named constructors assemble the degree-2 cohomology lattice of a K3
surface and its rank-24 extension carrying the Mukai pairing. Both are
even and unimodular, which the exact invariants confirm on the spot.
"""

from k3moduli.lattices import (Sublattice, direct_sum, e8_minus,
                               hyperbolic_U, k3_lattice, mukai_lattice,
                               rank1)

U = hyperbolic_U()
E8m = e8_minus()
print("U:      signature", U.signature(), "| even:", U.even,
      "| unimodular:", U.unimodular)
print("E8(-1): signature", E8m.signature(), "| even:", E8m.even,
      "| unimodular:", E8m.unimodular)

K3 = k3_lattice()
print("\nK3 lattice = U^3 + E8(-1)^2")
print("  rank", K3.rank, "signature", K3.signature(),
      "discriminant group", K3.discriminant_group())

MK = mukai_lattice()
print("Mukai lattice = K3 + (degree-0/degree-4 plane)")
print("  rank", MK.rank, "signature", MK.signature(),
      "discriminant group", MK.discriminant_group())

# The two added generators pair like the Mukai pairing demands:
# <(1,0,0),(0,0,1)> = -1 and both are isotropic.
e0 = (1,) + (0,) * 23
e4 = (0,) * 23 + (1,)
print("  <e0, e4> =", MK.dot(e0, e4), " <e0, e0> =", MK.dot(e0, e0))

# Neron-Severi data can be an abstract Gram matrix or an embedded
# sublattice; the restricted Gram is read off exactly.
ns = Sublattice(U, ((1, 1),))
print("\nNS = span{e+f} inside U has Gram", ns.gram(),
      "and is primitive:", ns.is_primitive)

print("direct sum <2> + <-2>:", direct_sum(rank1(2), rank1(-2)).gram)
