"""Numerical and lattice invariants of the moduli space attached to a Mukai vector.

For a primitive Mukai vector ``v`` of positive rank and a general
polarization, the moduli space of semistable twisted sheaves is nonempty
exactly when ``<v, v> >= -2``, is smooth of dimension ``<v, v> + 2``, is a
K3 surface when the square vanishes, and is deformation equivalent to the
Hilbert scheme of ``<v, v>/2 + 1`` points. Its degree-2 lattice is the
orthogonal complement ``v-perp`` (positive square) or the quotient
``v-perp / Zv`` (isotropic case).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .brauer import BField, brauer_order, is_mukai_vector
from .errors import InputError, PreconditionError
from .lattices import Lattice, Sublattice, mukai_extension
from .mukai import MukaiVector, exp_twist, mukai_pairing
from .walls import WallQuery, is_general


@dataclass(frozen=True)
class ModuliReport:
    """Numerical invariants of the moduli space of a Mukai vector."""

    pairing_square: int
    dim: int
    nonempty: bool
    is_k3: bool
    hilb_n: int | None
    general_polarization_assumed: bool = False


def moduli_report(v: MukaiVector, b: BField, ns: Sublattice, H,
                  assume_general: bool = False) -> ModuliReport:
    """Invariants of the moduli space for ``v`` at polarization ``H``.

    ``v`` must be a primitive Mukai vector of positive rank for the lift
    ``b`` (full degree-2 coordinates); ``H`` is given in the coordinates
    of the Neron-Severi basis and must be general unless
    ``assume_general`` overrides the wall check.
    """
    if v.r <= 0:
        raise PreconditionError("moduli invariants need a vector of positive rank")
    valid, primitive = is_mukai_vector(v, b, ns)
    if not valid:
        raise PreconditionError("v is not a Mukai vector for this B-field lift")
    if not primitive:
        raise PreconditionError("v is not primitive")
    ambient = ns.ambient
    v2 = mukai_pairing(v, v, ambient)
    if v2.denominator != 1 or int(v2) % 2:
        raise PreconditionError("<v, v> must be an even integer")
    v2 = int(v2)
    if not assume_general:
        r0 = brauer_order(b, ns)
        if v.r % r0:
            raise PreconditionError("order of the Brauer class does not divide rk(v)")
        ns_coords = ns.coordinates(v.c)
        if ns_coords is None:
            raise PreconditionError("degree-2 part of v is not in the NS span")
        v_ns = MukaiVector(v.r, ns_coords, v.s)
        query = WallQuery(ns.lattice(), v_ns, r0, tuple(H), tuple(H))
        general, witnesses = is_general(tuple(H), query)
        if not general:
            walls = ", ".join(str(w.xi) for w in witnesses[:3])
            raise PreconditionError(
                f"H is not general with respect to v (walls through H: {walls})")
    nonempty = v2 >= -2
    return ModuliReport(
        pairing_square=v2,
        dim=v2 + 2,
        nonempty=nonempty,
        is_k3=(v2 == 0),
        hilb_n=(v2 // 2 + 1) if nonempty else None,
        general_polarization_assumed=assume_general,
    )


def _perp_gram_or_quotient(gram, vec, v2: int) -> linalg.IntMatrix:
    """Gram of ``vec-perp`` (v2 > 0) or of ``vec-perp / Z vec`` (v2 = 0)."""
    comp = linalg.orthogonal_complement(gram, (vec,))
    if v2 > 0:
        return linalg.gram_of_rows(gram, comp)
    y = linalg.solve_left(comp, vec)
    assert y is not None and all(t.denominator == 1 for t in y), \
        "isotropic vector must lie in its saturated complement"
    completion = linalg.complete_primitive(tuple(int(t) for t in y))
    quot_rows = linalg.matmul(completion[1:], comp)
    return linalg.gram_of_rows(gram, quot_rows)


def beauville_lattice(v: MukaiVector, ambient: Lattice) -> Lattice:
    """Degree-2 lattice of the moduli space: ``v-perp`` or ``v-perp / Zv``.

    ``v`` must be integral and primitive in ``ambient`` (the full rank-24
    lattice or an algebraic-mode extension) with ``<v, v> >= 0``.
    """
    coords = v.int_coords()
    if len(coords) != ambient.rank:
        raise InputError("vector does not have the ambient rank")
    if linalg.vec_content(coords) != 1:
        raise PreconditionError("v must be primitive")
    v2 = ambient.dot(coords, coords)
    if v2 < 0:
        raise PreconditionError("degree-2 lattice undefined for <v, v> < 0")
    return Lattice(_perp_gram_or_quotient(ambient.gram, coords, v2))


def algebraic_beauville(v: MukaiVector, b: BField, ns: Sublattice) -> Lattice:
    """Lattice of algebraic classes on the moduli space.

    Intersects ``v-perp`` with the twisted algebraic part: the classes
    whose untwisted degree-2 component stays in the rational span of the
    Neron-Severi sublattice. The result is computed inside the saturated
    sublattice of untwisted classes and is independent of the lift.
    """
    valid, primitive = is_mukai_vector(v, b, ns)
    if not valid:
        raise PreconditionError("v is not a Mukai vector for this B-field lift")
    if not primitive:
        raise PreconditionError("v must be primitive")
    ambient = ns.ambient
    n = ambient.rank
    big = mukai_extension(ambient)
    untwisted = exp_twist(v, tuple(Fraction(x, b.r) for x in b.xi), ambient)
    v2 = mukai_pairing(v, v, ambient)
    if v2 < 0:
        raise PreconditionError("degree-2 lattice undefined for <v, v> < 0")
    v2 = int(v2)
    # untwisted algebraic classes: x with r x_c - x_r xi in NS (x) Q
    ann = linalg.kernel_basis(linalg.saturation(ns.basis, n))
    if ann:
        constraints = tuple(
            (-sum(a * c for a, c in zip(b.xi, u_row)),)
            + tuple(b.r * x for x in u_row)
            + (0,)
            for u_row in ann
        )
        alg = linalg.kernel_basis(constraints)
    else:
        alg = linalg.identity(n + 2)
    alg_gram = linalg.gram_of_rows(big.gram, alg)
    w = linalg.solve_left(alg, untwisted.int_coords())
    assert w is not None and all(t.denominator == 1 for t in w), \
        "untwisted Mukai vector must lie in the algebraic sublattice"
    w = tuple(int(t) for t in w)
    return Lattice(_perp_gram_or_quotient(alg_gram, w, v2))
