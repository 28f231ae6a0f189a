"""Exact lattice-theoretic invariants for moduli of twisted sheaves on K3 surfaces.

All arithmetic is exact (arbitrary-precision integers and reduced
rationals); every identity asserted by the library holds with zero
tolerance. The main entry points:

* :mod:`k3moduli.linalg` -- Hermite/Smith normal forms, saturated kernels
  and complements, exact short-vector enumeration, signatures.
* :mod:`k3moduli.lattices` -- the hyperbolic plane, E8(-1), the K3 and
  Mukai lattices, sublattices.
* :mod:`k3moduli.mukai` -- Mukai vectors, the Mukai pairing, B-field
  twists, Chern-character conversion, stability comparisons.
* :mod:`k3moduli.brauer` -- orders and equivalence of B-field lifts of
  Brauer classes, with certified comparison isometries.
* :mod:`k3moduli.walls` -- wall-and-chamber decompositions certifying
  general polarizations.
* :mod:`k3moduli.moduli` -- dimension/emptiness reports and Beauville
  lattices of moduli spaces.
* :mod:`k3moduli.fm` -- certified isometries modeling cohomological
  Fourier-Mukai correspondences.
"""

from .brauer import (BField, BrauerWitness, brauer_equivalent, brauer_order,
                     is_mukai_vector, twist_comparison_isometry)
from .errors import InputError, PreconditionError
from .fm import (Isometry, adjoint_check, compose, duality,
                 hodge_isometry_between_twists, identity_isometry,
                 make_isometry, theta_projection, twist_isometry)
from .lattices import (Lattice, Sublattice, direct_sum, e8_minus,
                       full_sublattice, hyperbolic_U, k3_lattice,
                       mukai_extension, mukai_lattice, rank1, sublattice_gram)
from .moduli import ModuliReport, algebraic_beauville, beauville_lattice, moduli_report
from .mukai import (HilbertCoeffs, MukaiVector, Ordering, UntwistResult,
                    bogomolov_check, exp_twist, expected_c2_residue,
                    extension_defect, mukai_from_chern, mukai_pairing,
                    primitive_part, stability_compare, type_lambda_check,
                    untwist)
from .walls import (Wall, WallQuery, is_general, same_chamber,
                    strong_generality, wall_bound, walls_between)

__all__ = [
    "BField", "BrauerWitness", "HilbertCoeffs", "InputError", "Isometry",
    "Lattice", "ModuliReport", "MukaiVector", "Ordering", "PreconditionError",
    "Sublattice", "UntwistResult", "Wall", "WallQuery", "adjoint_check",
    "algebraic_beauville", "beauville_lattice", "bogomolov_check",
    "brauer_equivalent", "brauer_order", "compose", "direct_sum", "duality",
    "e8_minus", "exp_twist", "expected_c2_residue", "extension_defect",
    "full_sublattice", "hodge_isometry_between_twists", "hyperbolic_U",
    "identity_isometry", "is_general", "is_mukai_vector", "k3_lattice",
    "make_isometry", "moduli_report", "mukai_extension", "mukai_from_chern",
    "mukai_lattice", "mukai_pairing", "primitive_part", "rank1",
    "same_chamber", "stability_compare", "strong_generality",
    "sublattice_gram", "theta_projection", "twist_comparison_isometry",
    "twist_isometry", "type_lambda_check", "untwist", "wall_bound",
    "walls_between",
]

__version__ = "0.1.0"
