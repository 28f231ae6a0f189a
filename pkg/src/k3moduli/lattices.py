"""Lattices with integer Gram matrices and the standard K3/Mukai constructors.

A :class:`Lattice` is an abstract free module with a symmetric integer Gram
matrix; a :class:`Sublattice` is a choice of independent row vectors inside
an ambient lattice. The named constructors build the hyperbolic plane U,
the negative-definite E8 root lattice, the rank-22 K3 lattice
``U^3 + E8(-1)^2`` and its rank-24 extension carrying the Mukai pairing
``<(r,c,s),(r',c',s')> = (c,c') - r s' - r' s``, with basis ordered
(degree-0 generator, degree-2 basis, degree-4 generator) so that vector
triples concatenate directly into coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import InputError
from .linalg import IntMatrix, IntVec


@dataclass(frozen=True)
class Lattice:
    """Free Z-module of finite rank with a symmetric integer pairing."""

    gram: IntMatrix
    name: str | None = None

    def __post_init__(self):
        gram = linalg.intmat(self.gram)
        object.__setattr__(self, "gram", gram)
        if gram and len(gram) != len(gram[0]):
            raise InputError("Gram matrix must be square")
        if not linalg.is_symmetric(gram):
            raise InputError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def dot(self, u, v):
        """Pairing of two coordinate vectors."""
        return linalg.bilinear(self.gram, u, v)

    def signature(self) -> tuple[int, int, int]:
        return linalg.signature(self.gram)

    def discriminant_group(self) -> tuple[int, ...]:
        return linalg.discriminant_group(self.gram)

    @property
    def unimodular(self) -> bool:
        return self.discriminant_group() == ()


@dataclass(frozen=True)
class Sublattice:
    """Row-span of independent vectors inside an ambient lattice."""

    ambient: Lattice
    basis: IntMatrix = field()

    def __post_init__(self):
        basis = linalg.intmat(self.basis)
        object.__setattr__(self, "basis", basis)
        if any(len(row) != self.ambient.rank for row in basis):
            raise InputError("sublattice basis vectors must have the ambient rank")
        if basis and linalg.rank(basis) != len(basis):
            raise InputError("sublattice basis rows are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> IntMatrix:
        return linalg.gram_of_rows(self.ambient.gram, self.basis)

    def lattice(self, name: str | None = None) -> Lattice:
        return Lattice(self.gram(), name)

    @property
    def is_primitive(self) -> bool:
        return linalg.is_saturated(self.basis)

    def saturated(self) -> "Sublattice":
        """The primitive closure; equal to self when already saturated."""
        return Sublattice(self.ambient, linalg.saturation(self.basis, self.ambient.rank))

    def contains_rational(self, vec) -> bool:
        """Whether ``vec`` lies in the rational span of the basis."""
        if not self.basis:
            return not any(vec)
        return linalg.solve_left(self.basis, tuple(vec)) is not None

    def coordinates(self, vec):
        """Coordinates of ``vec`` in the basis (rational), or None."""
        if not self.basis:
            return None
        return linalg.solve_left(self.basis, tuple(vec))


def sublattice_gram(s: Sublattice) -> IntMatrix:
    """Gram matrix ``B G B^T`` of a sublattice basis."""
    return s.gram()


def full_sublattice(ambient: Lattice) -> Sublattice:
    return Sublattice(ambient, linalg.identity(ambient.rank))


# ---------------------------------------------------------------------------
# named constructors

# E8 Dynkin diagram in Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on 4.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def hyperbolic_U() -> Lattice:
    """The even unimodular hyperbolic plane."""
    return Lattice(((0, 1), (1, 0)), "U")


def e8_minus() -> Lattice:
    """The E8 root lattice with its form negated (even, unimodular, definite)."""
    gram = [[0] * 8 for _ in range(8)]
    for i in range(8):
        gram[i][i] = -2
    for i, j in _E8_EDGES:
        gram[i - 1][j - 1] = 1
        gram[j - 1][i - 1] = 1
    return Lattice(tuple(map(tuple, gram)), "E8(-1)")


def rank1(n: int) -> Lattice:
    """Rank-one lattice ``<n>``."""
    return Lattice(((int(n),),))


def direct_sum(*lattices: Lattice, name: str | None = None) -> Lattice:
    """Orthogonal direct sum, block-diagonal Gram."""
    total = sum(l.rank for l in lattices)
    gram = [[0] * total for _ in range(total)]
    offset = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                gram[offset + i][offset + j] = lat.gram[i][j]
        offset += lat.rank
    return Lattice(tuple(map(tuple, gram)), name)


def k3_lattice() -> Lattice:
    """The K3 lattice ``U^3 + E8(-1)^2`` of rank 22, signature (3,19)."""
    u = hyperbolic_U()
    return direct_sum(u, u, u, e8_minus(), e8_minus(), name="K3")


def mukai_extension(ns: Lattice, name: str | None = None) -> Lattice:
    """Rank ``n+2`` lattice pairing triples ``(r, c, s)`` over ``ns``.

    Basis order is (degree-0, ns basis..., degree-4); the two added
    generators are isotropic and pair to -1 with each other.
    """
    n = ns.rank
    total = n + 2
    gram = [[0] * total for _ in range(total)]
    for i in range(n):
        for j in range(n):
            gram[i + 1][j + 1] = ns.gram[i][j]
    gram[0][total - 1] = -1
    gram[total - 1][0] = -1
    return Lattice(tuple(map(tuple, gram)), name)


def mukai_lattice() -> Lattice:
    """The full rank-24 Mukai lattice, signature (4,20)."""
    return mukai_extension(k3_lattice(), name="Mukai")
