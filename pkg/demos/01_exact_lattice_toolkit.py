"""
Exact integer linear algebra
============================

Everything in this library runs on arbitrary-precision integers and
exact rationals; the normal forms below are the engine room for all the
lattice computations that follow.
"""

from k3moduli.linalg import (discriminant_group, hnf, intmat, kernel_basis,
                             matmul, orthogonal_complement, short_vectors,
                             signature, snf)

# A Hermite normal form comes with the unimodular row transform that
# produced it, so the factorization can be checked exactly.
m = intmat([[2, 4], [1, 3]])
h, u = hnf(m)
print("matrix:      ", m)
print("row HNF:     ", h)
print("transform u: ", u, "and u*m == h:", matmul(u, m) == h)

# Smith normal form: diagonal with a divisibility chain.
s, _, _ = snf(intmat([[2, 0], [0, 3]]))
print("\nSNF of diag(2,3):", s)

# Saturated integer kernels: the basis spans a primitive sublattice.
print("\nkernel of x+y = 0:", kernel_basis(intmat([[1, 1]])))

# Orthogonal complements with respect to a pairing. In the hyperbolic
# plane U an isotropic vector lies inside its own complement.
U = intmat([[0, 1], [1, 0]])
print("complement of (1,0) in U:", orthogonal_complement(U, intmat([[1, 0]])))

# Exact short-vector enumeration of a positive definite form: one
# representative per sign pair, lexicographically sorted.
print("\nvectors of A2 with norm <= 3:", short_vectors([[2, 1], [1, 2]], 3))

# Signatures and discriminant groups are computed exactly as well.
print("signature of U:", signature(U))
print("discriminant group of diag(-4,-2):",
      discriminant_group(intmat([[-4, 0], [0, -2]])))
