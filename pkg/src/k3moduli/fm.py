"""Certified isometries of Mukai-type lattices.

An :class:`Isometry` stores the matrix of a pairing-preserving map in the
column convention: the image of the j-th source basis vector is the j-th
column, so ``M^T G_target M = G_source`` must hold exactly. Construction
re-checks that identity, so every value in circulation is certified; the
cohomological transforms of interest (B-field exponentials, duality, the
projection along an isotropic vector) are built here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InputError, PreconditionError
from .lattices import Lattice, mukai_extension
from .mukai import MukaiVector, exp_twist

RatMatrix = linalg.RatMatrix


@dataclass(frozen=True)
class Isometry:
    """Pairing-preserving linear map between two lattices of equal rank."""

    matrix: RatMatrix
    source: Lattice
    target: Lattice

    def __post_init__(self):
        m = linalg.exactmat(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = self.source.rank
        if self.target.rank != n or len(m) != n or (m and len(m[0]) != n):
            raise InputError("isometry matrix must be square of matching rank")
        mi = linalg.as_int_matrix(m)
        check = mi if mi is not None else m  # int arithmetic when possible
        lhs = linalg.matmul(linalg.matmul(linalg.transpose(check), self.target.gram),
                            check)
        if linalg.as_int_matrix(lhs) != self.source.gram:
            raise PreconditionError("matrix does not intertwine the Gram matrices")

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Image of a source-coordinate vector."""
        return linalg.mat_vec(self.matrix, tuple(Fraction(x) for x in v))

    def is_identity(self) -> bool:
        return self.matrix == linalg.identity(self.source.rank)

    def inverse(self) -> "Isometry":
        return Isometry(linalg.rat_inverse(self.matrix), self.target, self.source)


def make_isometry(matrix, source: Lattice, target: Lattice) -> Isometry:
    """Certify and wrap a matrix; rejects anything that moves the pairing."""
    return Isometry(linalg.ratmat(matrix), source, target)


def identity_isometry(lat: Lattice) -> Isometry:
    return Isometry(linalg.ratmat(linalg.identity(lat.rank)), lat, lat)


def compose(g: Isometry, f: Isometry) -> Isometry:
    """``g  after  f``; the middle lattices must agree (by Gram matrix)."""
    if f.target.gram != g.source.gram:
        raise InputError("isometries are not composable: lattices do not match")
    a = linalg.as_int_matrix(g.matrix)
    b = linalg.as_int_matrix(f.matrix)
    if a is not None and b is not None:
        product = linalg.matmul(a, b)
    else:
        product = linalg.matmul(g.matrix, f.matrix)
    return Isometry(product, f.source, g.target)


def duality(ambient: Lattice) -> Isometry:
    """The involution ``(r, c, s) -> (r, -c, s)`` in Mukai basis ordering."""
    n = ambient.rank
    if n < 2:
        raise InputError("duality needs the two extended basis vectors")
    diag = [1] + [-1] * (n - 2) + [1]
    m = tuple(tuple(Fraction(diag[i]) if i == j else Fraction(0) for j in range(n))
              for i in range(n))
    return Isometry(m, ambient, ambient)


def twist_isometry(B: Sequence, ns: Lattice) -> Isometry:
    """Matrix of ``e^B`` on the extended lattice over ``ns``.

    Built in closed block form: the degree-0 generator maps to
    ``(1, B, (B,B)/2)``, a degree-2 basis vector ``e`` to ``(0, e, (B,e))``
    and the degree-4 generator is fixed.
    """
    ambient = mukai_extension(ns)
    B = tuple(Fraction(x) for x in B)
    if len(B) != ns.rank:
        raise InputError("twist class has the wrong rank")
    n = ns.rank
    gb = linalg.mat_vec(ns.gram, B)
    bb = sum(x * y for x, y in zip(B, gb))
    m = [[0] * (n + 2) for _ in range(n + 2)]
    m[0][0] = 1
    m[n + 1][n + 1] = 1
    m[n + 1][0] = bb / 2
    for i in range(n):
        m[i + 1][0] = B[i]
        m[i + 1][i + 1] = 1
        m[n + 1][i + 1] = gb[i]
    return Isometry(tuple(map(tuple, m)), ambient, ambient)


def adjoint_check(psi: Isometry, psi_dual: Isometry) -> bool:
    """Whether ``<x, psi(y)> = <psi_dual(x), y>`` on all basis pairs."""
    if psi.target.rank != psi_dual.source.rank or psi.source.rank != psi_dual.target.rank:
        return False
    m_psi = linalg.as_int_matrix(psi.matrix)
    m_dual = linalg.as_int_matrix(psi_dual.matrix)
    lhs = linalg.matmul(psi.target.gram,
                        m_psi if m_psi is not None else psi.matrix)
    rhs = linalg.matmul(linalg.transpose(
        m_dual if m_dual is not None else psi_dual.matrix),
        psi_dual.source.gram)
    return all(a == b for lr, rr in zip(lhs, rhs) for a, b in zip(lr, rr))


def theta_projection(v: MukaiVector, ambient: Lattice) -> tuple[Lattice, RatMatrix]:
    """Quotient lattice ``v-perp / Zv`` for a primitive isotropic vector.

    Returns the quotient Gram together with an ``n x (n-2)`` projection
    matrix: a row vector ``x`` in ``v-perp`` maps to quotient coordinates
    ``x @ proj``. The Mukai pairing descends exactly through the
    projection; this is asserted on the complement basis.
    """
    coords = v.int_coords()
    if len(coords) != ambient.rank:
        raise InputError("vector does not have the ambient rank")
    if linalg.vec_content(coords) != 1:
        raise PreconditionError("vector must be primitive")
    if ambient.dot(coords, coords) != 0:
        raise PreconditionError("vector must be isotropic")
    comp = linalg.orthogonal_complement(ambient.gram, (coords,))
    y = linalg.solve_left(comp, coords)
    assert y is not None and all(t.denominator == 1 for t in y)
    y = tuple(int(t) for t in y)
    completion = linalg.complete_primitive(y)
    quot_rows = linalg.matmul(completion[1:], comp)
    quot_gram = linalg.gram_of_rows(ambient.gram, quot_rows)
    quotient = Lattice(quot_gram)
    # right inverse of comp on its row span, then drop the Zv coordinate
    right_inv = linalg.rat_solve(comp, linalg.identity(len(comp)))
    assert right_inv is not None
    inv_completion = linalg.rat_inverse(completion)
    proj = linalg.matmul(right_inv, tuple(row[1:] for row in inv_completion))
    images = [linalg.vec_mat(x, proj) for x in comp]
    for x, px in zip(comp, images):
        for z, pz in zip(comp, images):
            assert quotient.dot(px, pz) == ambient.dot(x, z), \
                "pairing does not descend through the projection"
    return quotient, proj


def hodge_isometry_between_twists(b, b2, witness, ambient: Lattice) -> Isometry:
    """Comparison isometry for two B-field lifts of one Brauer class.

    Delegates to :func:`k3moduli.brauer.twist_comparison_isometry`; the
    result is the certified lattice-level shadow of the cohomological
    correspondence between the two twisted integral structures.
    """
    from .brauer import twist_comparison_isometry

    return twist_comparison_isometry(b, b2, witness, ambient)
