"""Walls and chambers in the positive cone of a Neron-Severi lattice.

For a Mukai vector ``v`` of positive rank and the minimal twisted rank
``r0``, set ``l = rk(v)/r0``. Degree-2 classes ``xi`` with

    0 < -(xi, xi) <= B,   B = (l^2/4) (2 l^2 + <v, v>)

cut hyperplanes ``W_xi = {L : (xi, L) = 0}`` out of the positive cone; a
polarization is *general* when it lies on no wall, and two polarizations
in one chamber give the same moduli stack. Everything here is enumerated
exactly: candidate vectors come from Fincke-Pohst enumeration of a
positive-definite majorant of the indefinite form, then exact predicates
keep precisely the wall vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import InputError, PreconditionError
from .lattices import Lattice
from .linalg import IntVec
from .mukai import MukaiVector, mukai_pairing


@dataclass(frozen=True)
class Wall:
    """Primitive degree-2 class with negative square, up to sign."""

    xi: IntVec
    norm: int                      # -(xi, xi) > 0
    on_endpoint: bool = False

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(int(x) for x in self.xi))


@dataclass(frozen=True)
class WallQuery:
    """Wall-and-chamber problem: lattice, vector, minimal rank, segment."""

    ns: Lattice
    v: MukaiVector
    r0: int
    H0: IntVec
    H1: IntVec = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "H0", tuple(int(x) for x in self.H0))
        h1 = tuple(int(x) for x in self.H1) if self.H1 else self.H0
        object.__setattr__(self, "H1", h1)
        if self.r0 < 1:
            raise InputError("minimal twisted rank r0 must be positive")
        if len(self.H0) != self.ns.rank or len(self.H1) != self.ns.rank:
            raise InputError("polarizations must have the lattice rank")
        if self.v.dim != self.ns.rank:
            raise InputError("Mukai vector does not match the lattice rank")
        pos, neg, zero = self.ns.signature()
        if pos != 1 or zero != 0:
            raise PreconditionError(
                "wall queries need a nondegenerate lattice of signature (1, rho-1)")

    @property
    def l(self) -> int:
        if self.v.r <= 0 or self.v.r % self.r0:
            raise PreconditionError("r0 must divide the positive rank of v")
        return self.v.r // self.r0


def wall_bound(v: MukaiVector, r0: int, ns: Lattice) -> Fraction:
    """``(l^2/4)(2 l^2 + <v, v>)`` with ``l = rk(v)/r0``."""
    if r0 < 1:
        raise InputError("minimal twisted rank r0 must be positive")
    if v.r <= 0:
        raise PreconditionError("wall bound needs a vector of positive rank")
    if v.r % r0:
        raise PreconditionError("r0 must divide the rank of v")
    l = v.r // r0
    v2 = mukai_pairing(v, v, ns)
    return Fraction(l * l, 4) * (2 * l * l + v2)


def _require_positive(ns: Lattice, H: IntVec, label: str) -> int:
    hh = ns.dot(H, H)
    if hh <= 0:
        raise PreconditionError(f"({label}, {label}) must be positive")
    return hh


def _majorant(ns: Lattice, P: IntVec):
    """Positive-definite form ``q_P(x) = 2 (x,P)^2/(P,P) - (x,x)``."""
    gp = linalg.mat_vec(ns.gram, P)
    pp = Fraction(ns.dot(P, P))
    n = ns.rank
    return tuple(
        tuple(2 * Fraction(gp[i] * gp[j]) / pp - ns.gram[i][j] for j in range(n))
        for i in range(n)
    )


def _norm(ns: Lattice, xi) -> int:
    return -ns.dot(xi, xi)


def _lex_positive(xi: IntVec) -> IntVec:
    lead = next((x for x in xi if x), 0)
    return xi if lead >= 0 else tuple(-x for x in xi)


def _sorted_walls(walls: list[Wall]) -> tuple[Wall, ...]:
    return tuple(sorted(walls, key=lambda w: (w.norm, w.xi)))


def is_general(H, q: WallQuery) -> tuple[bool, tuple[Wall, ...]]:
    """Whether ``H`` lies on no wall; witnesses are the walls through it.

    The candidates live in the negative-definite lattice ``NS (cap) H-perp``,
    so they are the short vectors of the negated restricted form up to the
    wall bound.
    """
    H = tuple(int(x) for x in H)
    _require_positive(q.ns, H, "H")
    bound = wall_bound(q.v, q.r0, q.ns)
    if q.ns.rank == 1 or bound <= 0:
        return True, ()
    comp = linalg.orthogonal_complement(q.ns.gram, (H,))
    if not comp:
        return True, ()
    neg_gram = tuple(tuple(-x for x in row)
                     for row in linalg.gram_of_rows(q.ns.gram, comp))
    walls = []
    for z in linalg.short_vectors(neg_gram, bound):
        xi = linalg.vec_mat(z, comp)
        if linalg.vec_content(xi) != 1:
            continue
        norm = _norm(q.ns, xi)
        if 0 < norm <= bound:
            walls.append(Wall(_lex_positive(xi), norm, on_endpoint=True))
    return not walls, _sorted_walls(walls)


def walls_between(q: WallQuery) -> tuple[Wall, ...]:
    """All walls meeting the segment ``[H0, H1]`` in the positive cone.

    Wall vectors are reported once each: primitive, sign-normalized so
    that ``(xi, H0) >= 0`` (lexicographically positive when that pairing
    vanishes), with walls through an endpoint flagged.
    """
    h00 = _require_positive(q.ns, q.H0, "H0")
    _require_positive(q.ns, q.H1, "H1")
    h01 = q.ns.dot(q.H0, q.H1)
    if h01 <= 0:
        raise PreconditionError("(H0, H1) must be positive")
    bound = wall_bound(q.v, q.r0, q.ns)
    if q.ns.rank == 1 or bound <= 0:
        return ()
    h11 = q.ns.dot(q.H1, q.H1)
    # min of (H_t, H_t) on [0,1]: quadratic with leading coefficient (H0-H1)^2
    cands = [Fraction(h00), Fraction(h11)]
    lead = h00 - 2 * h01 + h11
    if lead > 0:
        tstar = Fraction(h00 - h01, lead)
        if 0 < tstar < 1:
            cands.append(Fraction(h00) * (1 - tstar) ** 2
                         + 2 * h01 * tstar * (1 - tstar)
                         + Fraction(h11) * tstar ** 2)
    seg_min = min(cands)
    # q_{H_t}(H0) <= 2 max((H0,H_t)^2) / min (H_t,H_t) - (H0,H0) =: C
    c_bound = 2 * Fraction(max(h00 * h00, h01 * h01)) / seg_min - h00
    radius = bound + 2 * bound * c_bound / h00
    walls = []
    for xi in linalg.short_vectors(_majorant(q.ns, q.H0), radius):
        if linalg.vec_content(xi) != 1:
            continue
        norm = _norm(q.ns, xi)
        if not 0 < norm <= bound:
            continue
        s0 = q.ns.dot(xi, q.H0)
        s1 = q.ns.dot(xi, q.H1)
        if s0 * s1 > 0:
            continue
        if s0 < 0 or (s0 == 0 and s1 < 0):
            xi = tuple(-x for x in xi)
            s0, s1 = -s0, -s1
        if s0 == 0 and s1 == 0:
            xi = _lex_positive(xi)
        walls.append(Wall(xi, norm, on_endpoint=(s0 == 0 or s1 == 0)))
    return _sorted_walls(walls)


def same_chamber(q: WallQuery) -> bool:
    """True when no wall meets the segment and both endpoints are general."""
    if walls_between(q):
        return False
    return is_general(q.H0, q)[0] and is_general(q.H1, q)[0]


def strong_generality(H, q: WallQuery) -> tuple[bool, int | None]:
    """Minimum-norm criterion for generality.

    Returns ``(holds, min_norm)`` where ``min_norm`` is the least
    ``-(D, D)`` over nonzero ``D`` in ``NS (cap) H-perp`` (None when the
    complement is trivial); the criterion holds when that minimum exceeds
    the wall bound, and then ``H`` is general for every vector with the
    same bound.
    """
    H = tuple(int(x) for x in H)
    _require_positive(q.ns, H, "H")
    bound = wall_bound(q.v, q.r0, q.ns)
    if q.ns.rank == 1:
        return True, None
    comp = linalg.orthogonal_complement(q.ns.gram, (H,))
    if not comp:
        return True, None
    neg_gram = tuple(tuple(-x for x in row)
                     for row in linalg.gram_of_rows(q.ns.gram, comp))
    start = min(neg_gram[i][i] for i in range(len(neg_gram)))
    vecs = linalg.short_vectors(neg_gram, start)
    min_norm = int(min(linalg.bilinear(neg_gram, z, z) for z in vecs))
    return min_norm > bound, min_norm
