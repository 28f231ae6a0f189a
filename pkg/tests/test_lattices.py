import pytest

from k3moduli.errors import InputError
from k3moduli.lattices import (Lattice, Sublattice, direct_sum, e8_minus,
                               full_sublattice, hyperbolic_U, k3_lattice,
                               mukai_extension, mukai_lattice, rank1,
                               sublattice_gram)


def test_hyperbolic_plane(U):
    assert U.signature() == (1, 1, 0)
    assert U.even
    assert U.unimodular


def test_e8_minus():
    e8 = e8_minus()
    assert e8.signature() == (0, 8, 0)
    assert e8.even
    assert e8.unimodular


def test_rank1():
    assert rank1(2).gram == ((2,),)
    assert not rank1(3).even


def test_k3_lattice(K3):
    assert K3.rank == 22
    assert K3.signature() == (3, 19, 0)
    assert K3.even
    assert K3.unimodular


def test_mukai_lattice(MUKAI):
    assert MUKAI.rank == 24
    assert MUKAI.signature() == (4, 20, 0)
    assert MUKAI.even
    assert MUKAI.unimodular


def test_mukai_added_summand(MUKAI):
    # the degree-0 and degree-4 generators are isotropic and pair to -1
    e0 = (1,) + (0,) * 23
    e4 = (0,) * 23 + (1,)
    assert MUKAI.dot(e0, e4) == -1
    assert MUKAI.dot(e0, e0) == 0
    assert MUKAI.dot(e4, e4) == 0


def test_direct_sum_signature(U):
    lat = direct_sum(U, rank1(-2))
    assert lat.rank == 3
    assert lat.signature() == (1, 2, 0)
    assert direct_sum(rank1(2), rank1(-2)).gram == ((2, 0), (0, -2))
    assert direct_sum(U).gram == U.gram


def test_gram_validation():
    with pytest.raises(InputError):
        Lattice(((0, 1), (2, 0)))
    with pytest.raises(InputError):
        Lattice(((0, 1),))


def test_sublattice_gram(U):
    ns = Sublattice(U, ((1, 1),))
    assert sublattice_gram(ns) == ((2,),)
    assert Sublattice(U, ((1, 0),)).gram() == ((0,),)
    assert full_sublattice(U).gram() == U.gram


def test_sublattice_rejects_dependent(U):
    with pytest.raises(InputError):
        Sublattice(U, ((1, 1), (2, 2)))
    with pytest.raises(InputError):
        Sublattice(U, ((1, 1, 0),))


def test_sublattice_saturation(U):
    s = Sublattice(U, ((2, 2),))
    assert not s.is_primitive
    sat = s.saturated()
    assert sat.basis == ((1, 1),)
    assert sat.is_primitive


def test_sublattice_membership(U):
    s = Sublattice(U, ((1, 1),))
    assert s.contains_rational((3, 3))
    assert not s.contains_rational((1, 0))
    assert s.coordinates((3, 3)) == (3,)


def test_mukai_extension_rank(U):
    ext = mukai_extension(U)
    assert ext.rank == 4
    assert ext.signature() == (2, 2, 0)
    assert mukai_extension(k3_lattice()).gram == mukai_lattice().gram
