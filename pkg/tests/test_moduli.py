import random
from fractions import Fraction

import pytest

from k3moduli.brauer import BField
from k3moduli.errors import PreconditionError
from k3moduli.lattices import (Lattice, Sublattice, hyperbolic_U,
                               mukai_extension, mukai_lattice)
from k3moduli.linalg import (discriminant_group, gram_of_rows, identity,
                             orthogonal_complement, signature)
from k3moduli.moduli import (algebraic_beauville, beauville_lattice,
                             moduli_report)
from k3moduli.mukai import MukaiVector, exp_twist


def trivial_setup(K3):
    ns = Sublattice(K3, ((1, 1) + (0,) * 20,))
    return ns, BField((0,) * 22, 1)


class TestModuliReport:
    def test_hilbert_scheme_family(self, K3):
        ns, b0 = trivial_setup(K3)
        for n in range(1, 7):
            v = MukaiVector(1, (0,) * 22, 1 - n)
            rep = moduli_report(v, b0, ns, (1,))
            assert rep.pairing_square == 2 * n - 2
            assert rep.dim == 2 * n
            assert rep.nonempty
            assert rep.is_k3 == (n == 1)
            assert rep.hilb_n == n
            assert rep.dim - rep.pairing_square == 2

    def test_rigid_and_empty(self, K3):
        ns, b0 = trivial_setup(K3)
        rigid = moduli_report(MukaiVector(1, (0,) * 22, 1), b0, ns, (1,))
        assert rigid.pairing_square == -2 and rigid.nonempty and rigid.dim == 0
        empty = moduli_report(MukaiVector(1, (0,) * 22, 2), b0, ns, (1,))
        assert not empty.nonempty
        assert empty.hilb_n is None

    def test_rejects_non_primitive(self, K3):
        ns, b0 = trivial_setup(K3)
        with pytest.raises(PreconditionError):
            moduli_report(MukaiVector(2, (0,) * 22, -2), b0, ns, (1,))

    def test_rejects_rank_zero(self, K3):
        ns, b0 = trivial_setup(K3)
        with pytest.raises(PreconditionError):
            moduli_report(MukaiVector(0, (0,) * 22, 1), b0, ns, (1,))

    def test_rejects_non_mukai_vector(self, K3):
        ns, b0 = trivial_setup(K3)
        bad_c = (1, 0) + (0,) * 20   # not in NS span
        with pytest.raises(PreconditionError):
            moduli_report(MukaiVector(1, bad_c, 0), b0, ns, (1,))

    def test_general_polarization_enforced(self, K3):
        # NS of rank 2 containing a wall through H
        ns = Sublattice(K3, ((1, 1) + (0,) * 20, (0, 0, 1, -1) + (0,) * 18))
        b0 = BField((0,) * 22, 1)
        v = MukaiVector(2, (0,) * 22, -1)   # <v^2> = 4, l = 2, bound 12
        with pytest.raises(PreconditionError):
            moduli_report(v, b0, ns, (1, 0))
        rep = moduli_report(v, b0, ns, (1, 0), assume_general=True)
        assert rep.general_polarization_assumed
        assert rep.dim == 6

    def test_twisted_case(self, U, K3):
        ns = Sublattice(K3, ((1, 1) + (0,) * 20,))
        b = BField((1,) + (0,) * 21, 2)
        inv = tuple(Fraction(-x, 2) for x in b.xi)
        # untwisted D = xi + (e+f) keeps the degree-2 part of v inside NS
        v = exp_twist(MukaiVector(2, (2, 1) + (0,) * 20, 0), inv, K3)
        rep = moduli_report(v, b, ns, (1,))
        assert rep.pairing_square == 4
        assert rep.dim == 6


class TestBeauville:
    def test_isotropic_gives_k3_lattice(self, MUKAI, K3):
        out = beauville_lattice(MukaiVector(1, (0,) * 22, 0), MUKAI)
        assert out.rank == 22
        assert out.signature() == (3, 19, 0)
        assert out.even
        assert out.unimodular

    def test_positive_square_family(self, MUKAI):
        for n in range(2, 6):
            v = MukaiVector(1, (0,) * 22, 1 - n)
            out = beauville_lattice(v, MUKAI)
            assert out.rank == 23
            assert out.signature() == (3, 20, 0)
            assert out.even
            assert out.discriminant_group() == (2 * n - 2,)

    def test_hand_derived_complement(self, MUKAI, K3):
        # v = (1, 0, 1-n): v-perp contains the K3 block and (1, 0, n-1)
        n = 3
        v = MukaiVector(1, (0,) * 22, 1 - n)
        extra = (1,) + (0,) * 22 + (n - 1,)
        vec = v.int_coords()
        assert MUKAI.dot(extra, vec) == 0
        rows = tuple((0,) + row + (0,) for row in identity(22) for row in [row])
        basis = ((1,) + (0,) * 22 + (n - 1,),) + tuple(
            (0,) + e + (0,) for e in identity(22))
        gram = gram_of_rows(MUKAI.gram, basis)
        assert gram[0][0] == -2 * (n - 1)
        assert discriminant_group(gram) == (2 * n - 2,)
        out = beauville_lattice(v, MUKAI)
        assert out.discriminant_group() == (2 * n - 2,)
        assert signature(gram) == out.signature()

    def test_cyclic_discriminant(self, MUKAI):
        # primitive v with <v,v> = 2m in the unimodular ambient
        for m in range(1, 6):
            v = MukaiVector(1, (0,) * 22, -m)
            out = beauville_lattice(v, MUKAI)
            assert out.discriminant_group() == (2 * m,)

    def test_algebraic_mode_point_vector(self):
        ns = Lattice(((2,),))
        ambient = mukai_extension(ns)
        out = beauville_lattice(MukaiVector(0, (0,), 1), ambient)
        assert out.gram == ((2,),)

    def test_quotient_independent_of_basis(self, MUKAI):
        # permuting the ambient basis does not change the invariants
        v = MukaiVector(1, (0,) * 22, 0)
        out1 = beauville_lattice(v, MUKAI)
        perm = list(range(24))
        random.Random(3).shuffle(perm)
        gram2 = tuple(tuple(MUKAI.gram[perm[i]][perm[j]] for j in range(24))
                      for i in range(24))
        coords = v.int_coords()
        v2 = tuple(coords[perm[i]] for i in range(24))
        # build the same vector in permuted coordinates
        lat2 = Lattice(gram2)
        from k3moduli.mukai import from_coords
        out2 = beauville_lattice(from_coords(v2), lat2)
        assert out1.signature() == out2.signature()
        assert out1.discriminant_group() == out2.discriminant_group()

    def test_negative_square_rejected(self, MUKAI):
        with pytest.raises(PreconditionError):
            beauville_lattice(MukaiVector(1, (0,) * 22, 1), MUKAI)

    def test_non_primitive_rejected(self, MUKAI):
        with pytest.raises(PreconditionError):
            beauville_lattice(MukaiVector(2, (0,) * 22, 0), MUKAI)

    def test_evenness_inherited(self, MUKAI):
        rng = random.Random(101)
        for _ in range(10):
            coords = [rng.randint(-2, 2) for _ in range(24)]
            from math import gcd
            g = 0
            for x in coords:
                g = gcd(g, abs(x))
            if g != 1:
                continue
            from k3moduli.mukai import from_coords
            v = from_coords(coords)
            v2 = MUKAI.dot(coords, coords)
            if v2 < 0:
                continue
            out = beauville_lattice(v, MUKAI)
            assert out.even
            expected_rank = 23 if v2 > 0 else 22
            assert out.rank == expected_rank


class TestAlgebraicBeauville:
    def test_untwisted_structure_sheaf(self, U):
        for d in (1, 2, 3):
            ns = Sublattice(U, ((1, d),))
            out = algebraic_beauville(MukaiVector(1, (0, 0), 0),
                                      BField((0, 0), 1), ns)
            assert out.gram == ((2 * d,),)

    def test_rank_bookkeeping(self, U):
        ns = Sublattice(U, ((1, 1),))
        b0 = BField((0, 0), 1)
        isotropic = algebraic_beauville(MukaiVector(1, (0, 0), 0), b0, ns)
        assert isotropic.rank == 1
        positive = algebraic_beauville(MukaiVector(1, (0, 0), -1), b0, ns)
        assert positive.rank == 2

    def test_twisted_case(self, U):
        ns = Sublattice(U, ((1, 1),))
        b = BField((1, 0), 2)
        inv = tuple(Fraction(-x, 2) for x in b.xi)
        v = exp_twist(MukaiVector(2, (2, 1), 0), inv, U)
        out = algebraic_beauville(v, b, ns)
        assert out.rank == 2
        assert out.even

    def test_rejects_negative_square(self, U):
        ns = Sublattice(U, ((1, 1),))
        with pytest.raises(PreconditionError):
            algebraic_beauville(MukaiVector(1, (0, 0), 1), BField((0, 0), 1), ns)
