"""Mukai vectors, the Mukai pairing, B-field twists and related identities.

A Mukai vector is a triple ``(r, c, s)``: an integer rank, a rational
degree-2 class in the coordinates of a chosen lattice (either an abstract
Neron-Severi lattice or the full rank-22 K3 lattice) and a rational
degree-4 component. The pairing is

    <(r, c, s), (r', c', s')> = (c, c') - r s' - r' s,

and ``exp_twist`` implements multiplication by ``e^B`` for a rational
degree-2 class ``B``, which preserves the pairing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING, Sequence

from .errors import InputError, PreconditionError
from .lattices import Lattice, Sublattice

if TYPE_CHECKING:  # pragma: no cover
    from .brauer import BField

RatVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class MukaiVector:
    """Triple ``(r, c, s)`` with rational degree-2 coordinates."""

    r: int
    c: RatVec
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))
        object.__setattr__(self, "s", Fraction(self.s))

    @property
    def dim(self) -> int:
        """Rank of the lattice the degree-2 part lives in."""
        return len(self.c)

    def coords(self) -> RatVec:
        """Coordinates ``(r, c..., s)`` in the extended (Mukai) lattice."""
        return (Fraction(self.r),) + self.c + (self.s,)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords())

    def int_coords(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise InputError("Mukai vector is not integral")
        return tuple(int(x) for x in self.coords())

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and not any(self.c) and self.s == 0

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        self._match(other)
        return MukaiVector(self.r + other.r,
                           tuple(a + b for a, b in zip(self.c, other.c)),
                           self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        self._match(other)
        return MukaiVector(self.r - other.r,
                           tuple(a - b for a, b in zip(self.c, other.c)),
                           self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, tuple(-x for x in self.c), -self.s)

    def scale(self, k) -> "MukaiVector":
        k = Fraction(k)
        r = k * self.r
        if r.denominator != 1:
            raise InputError("scaling produced a non-integer rank")
        return MukaiVector(int(r), tuple(k * x for x in self.c), k * self.s)

    def _match(self, other: "MukaiVector") -> None:
        if self.dim != other.dim:
            raise InputError("Mukai vectors live over different lattices")


def from_coords(coords: Sequence) -> MukaiVector:
    """Inverse of :meth:`MukaiVector.coords`."""
    coords = [Fraction(x) for x in coords]
    if len(coords) < 2:
        raise InputError("need at least the rank and degree-4 coordinates")
    r = coords[0]
    if r.denominator != 1:
        raise InputError("rank coordinate must be an integer")
    return MukaiVector(int(r), tuple(coords[1:-1]), coords[-1])


def _check_rank(v: MukaiVector, ns: Lattice) -> None:
    if v.dim != ns.rank:
        raise InputError(
            f"vector has degree-2 rank {v.dim}, lattice has rank {ns.rank}")


def mukai_pairing(v: MukaiVector, w: MukaiVector, ns: Lattice) -> Fraction:
    """``(c, c') - r s' - r' s``, exact and symmetric."""
    _check_rank(v, ns)
    _check_rank(w, ns)
    return ns.dot(v.c, w.c) - v.r * w.s - w.r * v.s


def exp_twist(v: MukaiVector, B: Sequence, ns: Lattice) -> MukaiVector:
    """Multiply by ``e^B``: ``(r, c + rB, s + (B,c) + r(B,B)/2)``."""
    _check_rank(v, ns)
    B = tuple(Fraction(x) for x in B)
    if len(B) != ns.rank:
        raise InputError("twist class has the wrong rank")
    c = tuple(x + v.r * b for x, b in zip(v.c, B))
    s = v.s + ns.dot(B, v.c) + v.r * ns.dot(B, B) / 2
    return MukaiVector(v.r, c, s)


def mukai_from_chern(r: int, c1: Sequence, c2: int, ns: Lattice,
                     surface: str = "k3") -> MukaiVector:
    """Mukai vector of untwisted Chern data ``(r, c1, c2)``.

    ``surface`` selects the square root of the Todd class: ``(1, 0, 1)``
    for a K3 surface, ``(1, 0, 0)`` for an abelian surface.
    """
    if r < 0:
        raise InputError("rank must be nonnegative")
    if surface not in ("k3", "abelian"):
        raise InputError("surface must be 'k3' or 'abelian'")
    c1 = tuple(Fraction(x) for x in c1)
    if len(c1) != ns.rank:
        raise InputError("c1 has the wrong rank")
    s = ns.dot(c1, c1) / 2 - c2
    if surface == "k3":
        s += r
    return MukaiVector(r, c1, s)


@dataclass(frozen=True)
class UntwistResult:
    """Outcome of clearing a B-field twist from a Mukai vector."""

    vector: MukaiVector            # e^{xi/rG} v = (rk, D, a)
    w_class: tuple[int, ...] | None  # D mod rk, when defined
    integral: bool


def untwist(v: MukaiVector, b: "BField", rG: int, ns_in_h2: Sublattice) -> UntwistResult:
    """Clear the twist: compute ``e^{xi/rG} v`` and the mod-rank class of D.

    When the result is integral the congruence ``<v,v> = (D,D) mod 2 rk``
    is asserted. For rank 0 only the untwisted vector is reported.
    """
    if rG < 1:
        raise InputError("reference rank must be positive")
    ambient = ns_in_h2.ambient
    xi = tuple(int(x) for x in b.xi)
    if len(xi) != ambient.rank:
        raise InputError("B-field lift has the wrong ambient rank")
    B = tuple(Fraction(x, rG) for x in xi)
    out = exp_twist(v, B, ambient)
    integral = out.is_integral
    if not integral or v.r == 0:
        return UntwistResult(out, None, integral)
    d = tuple(int(x) for x in out.c)
    v2 = mukai_pairing(v, v, ambient)
    dd = ambient.dot(d, d)
    assert (v2 - dd) % (2 * abs(v.r)) == 0, "untwist congruence violated"
    w_class = tuple(x % abs(v.r) for x in d)
    return UntwistResult(out, w_class, True)


def primitive_part(v: MukaiVector) -> tuple[MukaiVector, int]:
    """Write an integral vector as ``content * v0`` with ``v0`` primitive."""
    coords = v.int_coords()
    if v.is_zero:
        raise PreconditionError("the zero vector has no primitive part")
    content = 0
    for x in coords:
        content = gcd(content, abs(x))
    v0 = MukaiVector(v.r // content,
                     tuple(Fraction(int(x), content) for x in v.c),
                     Fraction(int(v.s), content))
    return v0, content


def is_primitive(v: MukaiVector) -> bool:
    coords = v.int_coords()
    g = 0
    for x in coords:
        g = gcd(g, abs(x))
    return g == 1


def expected_c2_residue(r: int, w: Sequence[int], ns: Lattice) -> int:
    """``-(r-1)(w,w) mod 2r`` for an integer lift ``w`` of a mod-r class.

    The residue does not depend on the choice of lift; this is asserted
    against a second lift shifted by ``r`` in the first coordinate.
    """
    if r < 1:
        raise InputError("rank must be positive")
    w = tuple(int(x) for x in w)
    if len(w) != ns.rank:
        raise InputError("w has the wrong rank")
    modulus = 2 * r
    res = (-(r - 1) * ns.dot(w, w)) % modulus
    if ns.rank:
        shifted = (w[0] + r,) + w[1:]
        assert res == (-(r - 1) * ns.dot(shifted, shifted)) % modulus, \
            "c2 residue depends on the lift"
    return res


def extension_defect(v1: MukaiVector, v2: MukaiVector, l1: int, l2: int,
                     vF1: MukaiVector, vF2: MukaiVector, ns: Lattice) -> Fraction:
    """Pairing defect of a two-step extension.

    With ``v = v1 + v2`` and ``l = l1 + l2`` returns

        <v1^2>/l1 + <v2^2>/l2 - <v^2>/l,

    asserting the exact identity with ``<(l2 vF1 - l1 vF2)^2>/(l l1 l2)``.
    The decompositions ``vi = li v0 + vFi`` must share the same ``v0``.
    """
    if l1 < 1 or l2 < 1:
        raise InputError("multiplicities must be positive")
    try:
        base1 = (v1 - vF1).scale(Fraction(1, l1))
        base2 = (v2 - vF2).scale(Fraction(1, l2))
    except InputError as exc:
        raise PreconditionError(f"inconsistent decomposition: {exc}") from exc
    if base1 != base2:
        raise PreconditionError(
            "(v1 - vF1)/l1 and (v2 - vF2)/l2 disagree: no common base vector")
    v = v1 + v2
    l = l1 + l2
    lhs = (mukai_pairing(v1, v1, ns) / l1 + mukai_pairing(v2, v2, ns) / l2
           - mukai_pairing(v, v, ns) / l)
    diff = vF1.scale(l2) - vF2.scale(l1)
    rhs = mukai_pairing(diff, diff, ns) / (l * l1 * l2)
    assert lhs == rhs, "extension defect identity violated"
    return lhs


def bogomolov_check(v: MukaiVector, l: int, ns: Lattice) -> bool:
    """Whether ``<v, v> >= -2 l^2``."""
    if l < 1:
        raise InputError("multiplicity must be positive")
    return mukai_pairing(v, v, ns) >= -2 * l * l


# ---------------------------------------------------------------------------
# reduced Hilbert polynomials


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class HilbertCoeffs:
    """Coefficients ``a_d ... a_0`` of a Hilbert polynomial in the binomial basis.

    ``chi(m) = sum_i a_i * binom(m + i, i)`` for a sheaf of dimension ``d``.
    """

    d: int
    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        if self.d < 0:
            raise InputError("dimension must be nonnegative")
        if len(self.a) != self.d + 1:
            raise InputError("need exactly d+1 coefficients a_d ... a_0")

    @property
    def leading(self) -> Fraction:
        return self.a[0]

    def reduced(self) -> tuple[Fraction, ...]:
        """Coefficient sequence of ``chi/a_d``, top degree first."""
        if self.leading <= 0:
            raise PreconditionError("leading Hilbert coefficient must be positive")
        return tuple(x / self.leading for x in self.a)

    def eval(self, m: int) -> Fraction:
        """Exact value ``chi(m)``; binomials expanded as falling factorials."""
        total = Fraction(0)
        for k, coeff in enumerate(self.a):
            i = self.d - k
            binom = Fraction(1)
            for t in range(i):
                binom = binom * (m + i - t) / (t + 1)
            total += coeff * binom
        return total


def stability_compare(f: HilbertCoeffs, e: HilbertCoeffs) -> Ordering:
    """Compare reduced Hilbert polynomials in the ``m >> 0`` order.

    Returns how ``chi_F/a_d(F)`` compares against ``chi_E/a_d(E)`` for all
    large ``m``; requires ``f.d <= e.d``. The comparison is the exact
    lexicographic one on coefficient sequences, padded at the top so that
    a strictly smaller dimension sorts below.
    """
    if f.d > e.d:
        raise InputError("subobject dimension exceeds ambient dimension")
    rf = f.reduced()
    re_ = e.reduced()
    pad = e.d - f.d
    rf = (Fraction(0),) * pad + rf
    if rf < re_:
        return Ordering.LESS
    if rf > re_:
        return Ordering.GREATER
    return Ordering.EQUAL


def type_lambda_check(f: HilbertCoeffs, e: HilbertCoeffs, lam) -> bool:
    """Slope-level test: ``a_{d-1}(F)/a_d(F) <= a_{d-1}(E)/a_d(E) + lambda``."""
    if f.d < 1 or e.d < 1:
        raise PreconditionError("type-lambda comparison needs dimension >= 1")
    if f.leading <= 0 or e.leading <= 0:
        raise PreconditionError("leading Hilbert coefficient must be positive")
    return f.a[1] / f.a[0] <= e.a[1] / e.a[0] + Fraction(lam)
