"""Brauer-class arithmetic through B-field lifts.

A Brauer class of a K3 surface is represented by a lift ``(xi, r)``: an
integer degree-2 class ``xi`` and the order candidate ``r``, standing for
the mod-r reduction of ``xi``. Two lifts ``(xi, r)`` and ``(xi', r')``
describe the same class exactly when

    r' xi - r xi' = L + r r' N

with ``L`` in the Neron-Severi sublattice and ``N`` integral; a solution
``(L, N)`` is a :class:`BrauerWitness` and induces a certified integral
isometry between the two twisted integral structures.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import InputError, PreconditionError
from .fm import Isometry, twist_isometry
from .lattices import Lattice, Sublattice
from .linalg import IntVec
from .mukai import MukaiVector, exp_twist


@dataclass(frozen=True)
class BField:
    """Integer lift ``xi`` of a mod-r class; the twist acts by ``e^{-xi/r}``."""

    xi: IntVec
    r: int

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(int(x) for x in self.xi))
        if self.r < 1:
            raise InputError("B-field denominator must be a positive integer")

    def rational(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.r) for x in self.xi)


@dataclass(frozen=True)
class BrauerWitness:
    """Certificate ``r' xi - r xi' = L + r r' N`` for equivalent lifts.

    Both vectors are stored in ambient degree-2 coordinates; ``L`` is
    required to lie in the Neron-Severi sublattice.
    """

    L: IntVec
    N: IntVec

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(int(x) for x in self.L))
        object.__setattr__(self, "N", tuple(int(x) for x in self.N))


def _saturated_basis(ns: Sublattice) -> linalg.IntMatrix:
    if ns.is_primitive:
        return ns.basis
    warnings.warn("Neron-Severi basis is not primitive; using its saturation",
                  stacklevel=3)
    return linalg.saturation(ns.basis, ns.ambient.rank)


def _check_ambient(b: BField, ns: Sublattice) -> None:
    if len(b.xi) != ns.ambient.rank:
        raise InputError("B-field lift does not match the ambient rank")


def brauer_order(b: BField, ns: Sublattice) -> int:
    """Order of the class of ``xi``: least ``k >= 1`` with ``k xi`` in NS + r H2.

    Computed from the Smith normal form of the quotient of the ambient
    degree-2 lattice by ``NS + r H2``; always divides ``r``.
    """
    _check_ambient(b, ns)
    basis = _saturated_basis(ns)
    n = ns.ambient.rank
    stack = basis + tuple(tuple(b.r * int(i == j) for j in range(n)) for i in range(n))
    s, _, v = linalg.snf(stack)
    image = linalg.vec_mat(b.xi, v)
    order = 1
    for i in range(n):
        d = s[i][i]
        if d == 0:
            raise PreconditionError("quotient by NS + r H2 is not finite")
        residue = image[i] % d
        if residue:
            local = d // gcd(d, residue)
            order = order * local // gcd(order, local)
    return order


def brauer_equivalent(b: BField, b2: BField, ns: Sublattice) -> BrauerWitness | None:
    """Witness ``(L, N)`` when the two lifts define one Brauer class, else None.

    The witness returned is canonical: the target ``r' xi - r xi'`` is
    reduced against the Hermite normal form of the constraint lattice, so
    equal inputs always produce identical certificates.
    """
    _check_ambient(b, ns)
    _check_ambient(b2, ns)
    basis = _saturated_basis(ns)
    n = ns.ambient.rank
    k = len(basis)
    rr = b.r * b2.r
    target = tuple(b2.r * x - b.r * y for x, y in zip(b.xi, b2.xi))
    stack = basis + tuple(tuple(rr * int(i == j) for j in range(n)) for i in range(n))
    h, u = linalg.hnf(stack)
    coeffs = [0] * len(h)
    rem = list(target)
    for i, row in enumerate(h):
        pivot_col = next((j for j, x in enumerate(row) if x), None)
        if pivot_col is None:
            break
        if rem[pivot_col] % row[pivot_col]:
            return None
        q = rem[pivot_col] // row[pivot_col]
        coeffs[i] = q
        rem = [x - q * y for x, y in zip(rem, row)]
    if any(rem):
        return None
    y = linalg.vec_mat(tuple(coeffs), u)
    L = linalg.vec_mat(y[:k], basis) if k else (0,) * n
    N = y[k:]
    witness = BrauerWitness(L, N)
    _check_witness(b, b2, witness, ns.ambient)
    return witness


def _check_witness(b: BField, b2: BField, w: BrauerWitness, ambient: Lattice) -> None:
    if len(w.L) != ambient.rank or len(w.N) != ambient.rank:
        raise InputError("witness vectors do not match the ambient rank")
    rr = b.r * b2.r
    lhs = tuple(b2.r * x - b.r * y for x, y in zip(b.xi, b2.xi))
    rhs = tuple(l + rr * n for l, n in zip(w.L, w.N))
    if lhs != rhs:
        raise PreconditionError("witness identity r'xi - r xi' = L + rr'N fails")


def twist_comparison_isometry(b: BField, b2: BField, w: BrauerWitness,
                              ambient: Lattice) -> Isometry:
    """Certified integral isometry comparing two lifts of one Brauer class.

    The returned map is ``e^{-N}`` on the extended lattice over
    ``ambient``; conjugating it by the two twists turns it into
    multiplication by ``e^{L/rr'}``, so it carries the ``(xi, r)``-twisted
    integral structure onto the ``(xi', r')`` one. Pairing preservation is
    certified at construction.
    """
    _check_witness(b, b2, w, ambient)
    iso = twist_isometry(tuple(-x for x in w.N), ambient)
    if any(x.denominator != 1 for row in iso.matrix for x in row):
        raise PreconditionError("comparison matrix is not integral")
    return iso


def is_mukai_vector(v: MukaiVector, b: BField, ns: Sublattice) -> tuple[bool, bool]:
    """Validity and primitivity of ``v`` as a twisted Mukai vector.

    ``v`` is valid when ``e^{xi/r} v`` is integral and its degree-2 part
    lies in the rational span of the Neron-Severi sublattice; it is
    primitive when the untwisted coordinates additionally have content 1.
    """
    _check_ambient(b, ns)
    ambient = ns.ambient
    if v.dim != ambient.rank:
        raise InputError("vector is not in ambient degree-2 coordinates")
    untwisted = exp_twist(v, tuple(Fraction(x, b.r) for x in b.xi), ambient)
    valid = untwisted.is_integral and ns.contains_rational(v.c)
    if not valid:
        return False, False
    coords = untwisted.int_coords()
    return True, linalg.vec_content(coords) == 1
