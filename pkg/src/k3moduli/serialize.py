"""JSON encoding and decoding of the document types.

Arbitrary precision survives serialization: rationals travel as reduced
``"p/q"`` strings (plain decimal strings when integral), and integers are
emitted as JSON numbers only inside the 53-bit safe range, as strings
beyond it. Floating-point JSON numbers are rejected on input.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Sequence

from . import lattices
from .brauer import BField, BrauerWitness
from .errors import InputError
from .fm import Isometry
from .lattices import Lattice, Sublattice
from .mukai import HilbertCoeffs, MukaiVector
from .moduli import ModuliReport
from .walls import Wall, WallQuery

_SAFE = 2**53 - 1
_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")


# ---------------------------------------------------------------------------
# scalars


def encode_int(x: int):
    return int(x) if -_SAFE <= x <= _SAFE else str(int(x))


def encode_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decode_int(doc, where: str = "integer") -> int:
    if isinstance(doc, bool):
        raise InputError(f"{where}: expected an integer, got a boolean")
    if isinstance(doc, int):
        return doc
    if isinstance(doc, str):
        try:
            return int(doc)
        except ValueError as exc:
            raise InputError(f"{where}: not an integer: {doc!r}") from exc
    if isinstance(doc, float):
        raise InputError(f"{where}: floating point input is not accepted")
    raise InputError(f"{where}: expected an integer")


def decode_rational(doc, where: str = "rational") -> Fraction:
    if isinstance(doc, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(doc, int):
        return Fraction(doc)
    if isinstance(doc, float):
        raise InputError(f"{where}: floating point input is not accepted; "
                         "use a 'p/q' string")
    if isinstance(doc, str):
        if not _RATIONAL_RE.match(doc):
            raise InputError(f"{where}: not a 'p/q' rational: {doc!r}")
        return Fraction(doc)
    raise InputError(f"{where}: expected a rational")


def _expect_mapping(doc, where: str) -> dict:
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected a JSON object")
    return doc


def _expect_list(doc, where: str) -> list:
    if not isinstance(doc, list):
        raise InputError(f"{where}: expected a JSON array")
    return doc


def _field(doc: dict, key: str, where: str):
    if key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    return doc[key]


# ---------------------------------------------------------------------------
# vectors and matrices


def decode_int_vector(doc, where: str = "vector") -> tuple[int, ...]:
    return tuple(decode_int(x, where) for x in _expect_list(doc, where))


def decode_rat_vector(doc, where: str = "vector") -> tuple[Fraction, ...]:
    return tuple(decode_rational(x, where) for x in _expect_list(doc, where))


def decode_int_rows(doc, where: str = "matrix") -> tuple:
    return tuple(decode_int_vector(row, where) for row in _expect_list(doc, where))


def encode_entry(x):
    """Integral values as JSON numbers (safe range), rationals as 'p/q'."""
    f = Fraction(x)
    if f.denominator == 1:
        return encode_int(f.numerator)
    return encode_rational(f)


def encode_matrix(rows) -> dict:
    """Shared project-wide matrix document {"rows", "cols", "data"}."""
    data = [[encode_entry(x) for x in row] for row in rows]
    return {
        "rows": len(data),
        "cols": len(data[0]) if data else 0,
        "data": data,
    }


def decode_matrix(doc, where: str = "matrix") -> tuple:
    doc = _expect_mapping(doc, where)
    data = _expect_list(_field(doc, "data", where), where)
    rows = decode_int(_field(doc, "rows", where), where)
    cols = decode_int(_field(doc, "cols", where), where)
    out = tuple(decode_rat_vector(row, where) for row in data)
    if len(out) != rows or any(len(r) != cols for r in out):
        raise InputError(f"{where}: data shape disagrees with rows/cols")
    return out


# ---------------------------------------------------------------------------
# domain documents


def encode_lattice(lat: Lattice) -> dict:
    doc: dict[str, Any] = {"gram": [[encode_int(x) for x in row] for row in lat.gram]}
    if lat.name is not None:
        doc["name"] = lat.name
    return doc


def decode_lattice(doc, where: str = "lattice") -> Lattice:
    if doc == "K3":
        return lattices.k3_lattice()
    if doc == "Mukai":
        return lattices.mukai_lattice()
    doc = _expect_mapping(doc, where)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{where}: name must be a string")
    return Lattice(decode_int_rows(_field(doc, "gram", where), where), name)


def encode_sublattice(s: Sublattice) -> dict:
    return {
        "ambient": encode_lattice(s.ambient),
        "basis": [[encode_int(x) for x in row] for row in s.basis],
    }


def decode_sublattice(doc, where: str = "sublattice") -> Sublattice:
    doc = _expect_mapping(doc, where)
    ambient = decode_lattice(_field(doc, "ambient", where), where + ".ambient")
    return Sublattice(ambient, decode_int_rows(_field(doc, "basis", where), where))


def encode_mukai_vector(v: MukaiVector) -> dict:
    return {
        "r": encode_int(v.r),
        "c": [encode_rational(x) for x in v.c],
        "s": encode_rational(v.s),
    }


def decode_mukai_vector(doc, where: str = "mukai vector") -> MukaiVector:
    doc = _expect_mapping(doc, where)
    return MukaiVector(
        decode_int(_field(doc, "r", where), where + ".r"),
        decode_rat_vector(_field(doc, "c", where), where + ".c"),
        decode_rational(_field(doc, "s", where), where + ".s"),
    )


def encode_bfield(b: BField) -> dict:
    return {"xi": [encode_int(x) for x in b.xi], "r": encode_int(b.r)}


def decode_bfield(doc, where: str = "B-field") -> BField:
    doc = _expect_mapping(doc, where)
    return BField(decode_int_vector(_field(doc, "xi", where), where + ".xi"),
                  decode_int(_field(doc, "r", where), where + ".r"))


def encode_witness(w: BrauerWitness) -> dict:
    return {"L": [encode_int(x) for x in w.L], "N": [encode_int(x) for x in w.N]}


def decode_witness(doc, where: str = "witness") -> BrauerWitness:
    doc = _expect_mapping(doc, where)
    return BrauerWitness(decode_int_vector(_field(doc, "L", where), where + ".L"),
                         decode_int_vector(_field(doc, "N", where), where + ".N"))


def encode_hilbert(h: HilbertCoeffs) -> dict:
    return {"d": encode_int(h.d), "a": [encode_rational(x) for x in h.a]}


def decode_hilbert(doc, where: str = "hilbert coefficients") -> HilbertCoeffs:
    doc = _expect_mapping(doc, where)
    return HilbertCoeffs(decode_int(_field(doc, "d", where), where + ".d"),
                         decode_rat_vector(_field(doc, "a", where), where + ".a"))


def encode_isometry(iso: Isometry) -> dict:
    return {
        "matrix": [[encode_entry(x) for x in row] for row in iso.matrix],
        "source": encode_lattice(iso.source),
        "target": encode_lattice(iso.target),
    }


def decode_isometry(doc, where: str = "isometry") -> Isometry:
    doc = _expect_mapping(doc, where)
    matrix = tuple(decode_rat_vector(row, where + ".matrix")
                   for row in _expect_list(_field(doc, "matrix", where), where))
    return Isometry(matrix,
                    decode_lattice(_field(doc, "source", where), where + ".source"),
                    decode_lattice(_field(doc, "target", where), where + ".target"))


def encode_wall(w: Wall) -> dict:
    return {
        "xi": [encode_int(x) for x in w.xi],
        "norm": encode_int(w.norm),
        "on_endpoint": w.on_endpoint,
    }


def decode_wall_query(doc, where: str = "wall query",
                      single_point: bool = False) -> WallQuery:
    doc = _expect_mapping(doc, where)
    ns = decode_lattice(_field(doc, "ns", where), where + ".ns")
    v = decode_mukai_vector(_field(doc, "v", where), where + ".v")
    r0 = decode_int(_field(doc, "r0", where), where + ".r0")
    if single_point:
        h0 = decode_int_vector(_field(doc, "H", where), where + ".H")
        h1 = h0
    else:
        h0 = decode_int_vector(_field(doc, "H0", where), where + ".H0")
        h1 = decode_int_vector(_field(doc, "H1", where), where + ".H1")
    return WallQuery(ns, v, r0, h0, h1)


def encode_moduli_report(rep: ModuliReport) -> dict:
    return {
        "v2": encode_int(rep.pairing_square),
        "dim": encode_int(rep.dim),
        "nonempty": rep.nonempty,
        "is_k3": rep.is_k3,
        "hilb_n": encode_int(rep.hilb_n) if rep.hilb_n is not None else None,
    }
