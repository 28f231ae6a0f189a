"""Command-line front end: every computation as a subcommand over JSON.

Input documents come from a file path argument or standard input (``-``);
the result document goes to standard output. Exit status is 0 on success,
2 when the input is malformed and 3 when a mathematical precondition
fails (the offending hypothesis is named in the error document).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fm, lattices, linalg, moduli, mukai, serialize, walls
from .brauer import (BField, brauer_equivalent, brauer_order, is_mukai_vector,
                     twist_comparison_isometry)
from .errors import InputError, PreconditionError
from .serialize import (decode_bfield, decode_hilbert, decode_int,
                        decode_int_rows, decode_int_vector, decode_lattice,
                        decode_isometry, decode_mukai_vector, decode_rational,
                        decode_rat_vector, decode_sublattice, decode_wall_query,
                        decode_witness, encode_int, encode_isometry,
                        encode_lattice, encode_matrix, encode_moduli_report,
                        encode_mukai_vector, encode_rational, encode_wall,
                        encode_witness, _expect_mapping, _field)


def _cmd_pairing(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    v = decode_mukai_vector(_field(doc, "v", "input"))
    w = decode_mukai_vector(_field(doc, "w", "input"))
    return encode_rational(mukai.mukai_pairing(v, w, ns))


def _cmd_twist(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    v = decode_mukai_vector(_field(doc, "v", "input"))
    B = decode_rat_vector(_field(doc, "B", "input"), "B")
    return encode_mukai_vector(mukai.exp_twist(v, B, ns))


def _cmd_chern(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    v = mukai.mukai_from_chern(
        decode_int(_field(doc, "r", "input"), "r"),
        decode_int_vector(_field(doc, "c1", "input"), "c1"),
        decode_int(_field(doc, "c2", "input"), "c2"),
        ns,
        surface=args.surface,
    )
    return encode_mukai_vector(v)


def _cmd_untwist(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_sublattice(_field(doc, "ns", "input"))
    v = decode_mukai_vector(_field(doc, "v", "input"))
    b = decode_bfield(_field(doc, "b", "input"))
    rG = decode_int(_field(doc, "rG", "input"), "rG")
    res = mukai.untwist(v, b, rG, ns)
    return {
        "D": encode_mukai_vector(res.vector),
        "w": [encode_int(x) for x in res.w_class] if res.w_class is not None else None,
        "integral": res.integral,
    }


def _cmd_primitive(doc, args):
    doc = _expect_mapping(doc, "input")
    v = decode_mukai_vector(_field(doc, "v", "input"))
    v0, content = mukai.primitive_part(v)
    return {"v0": encode_mukai_vector(v0), "content": encode_int(content)}


def _cmd_c2_residue(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    res = mukai.expected_c2_residue(
        decode_int(_field(doc, "r", "input"), "r"),
        decode_int_vector(_field(doc, "w", "input"), "w"),
        ns,
    )
    return encode_int(res)


def _cmd_extension_defect(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    value = mukai.extension_defect(
        decode_mukai_vector(_field(doc, "v1", "input"), "v1"),
        decode_mukai_vector(_field(doc, "v2", "input"), "v2"),
        decode_int(_field(doc, "l1", "input"), "l1"),
        decode_int(_field(doc, "l2", "input"), "l2"),
        decode_mukai_vector(_field(doc, "vF1", "input"), "vF1"),
        decode_mukai_vector(_field(doc, "vF2", "input"), "vF2"),
        ns,
    )
    return encode_rational(value)


def _cmd_bogomolov(doc, args):
    doc = _expect_mapping(doc, "input")
    ns = decode_lattice(_field(doc, "ns", "input"))
    return mukai.bogomolov_check(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_int(_field(doc, "l", "input"), "l"),
        ns,
    )


def _cmd_stability_compare(doc, args):
    doc = _expect_mapping(doc, "input")
    f = decode_hilbert(_field(doc, "f", "input"), "f")
    e = decode_hilbert(_field(doc, "e", "input"), "e")
    out = {"order": mukai.stability_compare(f, e).value}
    if "lambda" in doc:
        lam = decode_rational(doc["lambda"], "lambda")
        out["type_lambda"] = mukai.type_lambda_check(f, e, lam)
    return out


def _cmd_brauer_order(doc, args):
    doc = _expect_mapping(doc, "input")
    return encode_int(brauer_order(
        decode_bfield(_field(doc, "b", "input")),
        decode_sublattice(_field(doc, "ns", "input")),
    ))


def _cmd_brauer_equiv(doc, args):
    doc = _expect_mapping(doc, "input")
    witness = brauer_equivalent(
        decode_bfield(_field(doc, "b", "input")),
        decode_bfield(_field(doc, "b2", "input"), "b2"),
        decode_sublattice(_field(doc, "ns", "input")),
    )
    return {
        "equivalent": witness is not None,
        "witness": encode_witness(witness) if witness is not None else None,
    }


def _cmd_twist_square(doc, args):
    doc = _expect_mapping(doc, "input")
    iso = twist_comparison_isometry(
        decode_bfield(_field(doc, "b", "input")),
        decode_bfield(_field(doc, "b2", "input"), "b2"),
        decode_witness(_field(doc, "witness", "input")),
        decode_lattice(_field(doc, "ambient", "input"), "ambient"),
    )
    return encode_isometry(iso)


def _cmd_mukai_check(doc, args):
    doc = _expect_mapping(doc, "input")
    valid, primitive = is_mukai_vector(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_bfield(_field(doc, "b", "input")),
        decode_sublattice(_field(doc, "ns", "input")),
    )
    return {"valid": valid, "primitive": primitive}


def _cmd_wall_bound(doc, args):
    doc = _expect_mapping(doc, "input")
    return encode_rational(walls.wall_bound(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_int(_field(doc, "r0", "input"), "r0"),
        decode_lattice(_field(doc, "ns", "input")),
    ))


def _cmd_general(doc, args):
    query = decode_wall_query(doc, single_point=True)
    general, witnesses = walls.is_general(query.H0, query)
    return {
        "general": general,
        "witnesses": [encode_wall(w) for w in witnesses],
    }


def _cmd_walls_between(doc, args):
    query = decode_wall_query(doc)
    found = walls.walls_between(query)
    return {
        "bound": encode_rational(walls.wall_bound(query.v, query.r0, query.ns)),
        "walls": [encode_wall(w) for w in found],
    }


def _cmd_same_chamber(doc, args):
    return walls.same_chamber(decode_wall_query(doc))


def _cmd_strong_general(doc, args):
    query = decode_wall_query(doc, single_point=True)
    holds, min_norm = walls.strong_generality(query.H0, query)
    return {
        "holds": holds,
        "min_norm": encode_int(min_norm) if min_norm is not None else None,
    }


def _cmd_moduli(doc, args):
    doc = _expect_mapping(doc, "input")
    report = moduli.moduli_report(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_bfield(_field(doc, "b", "input")),
        decode_sublattice(_field(doc, "ns", "input")),
        decode_int_vector(_field(doc, "H", "input"), "H"),
        assume_general=bool(doc.get("assume_general", False)),
    )
    return encode_moduli_report(report)


def _cmd_beauville(doc, args):
    doc = _expect_mapping(doc, "input")
    lat = moduli.beauville_lattice(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_lattice(_field(doc, "ambient", "input"), "ambient"),
    )
    return encode_lattice(lat)


def _cmd_algebraic_beauville(doc, args):
    doc = _expect_mapping(doc, "input")
    lat = moduli.algebraic_beauville(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_bfield(_field(doc, "b", "input")),
        decode_sublattice(_field(doc, "ns", "input")),
    )
    return encode_lattice(lat)


def _cmd_complement(doc, args):
    doc = _expect_mapping(doc, "input")
    basis = linalg.orthogonal_complement(
        decode_int_rows(_field(doc, "gram", "input"), "gram"),
        decode_int_rows(_field(doc, "vectors", "input"), "vectors"),
    )
    return encode_matrix(basis)


def _cmd_discriminant(doc, args):
    doc = _expect_mapping(doc, "input")
    factors = linalg.discriminant_group(
        decode_int_rows(_field(doc, "gram", "input"), "gram"))
    return [encode_int(d) for d in factors]


def _cmd_signature(doc, args):
    doc = _expect_mapping(doc, "input")
    pos, neg, zero = linalg.signature(
        decode_int_rows(_field(doc, "gram", "input"), "gram"))
    return {"pos": pos, "neg": neg, "zero": zero}


def _cmd_theta(doc, args):
    doc = _expect_mapping(doc, "input")
    quotient, proj = fm.theta_projection(
        decode_mukai_vector(_field(doc, "v", "input")),
        decode_lattice(_field(doc, "ambient", "input"), "ambient"),
    )
    return {"quotient": encode_lattice(quotient), "proj": encode_matrix(proj)}


def _cmd_compose(doc, args):
    doc = _expect_mapping(doc, "input")
    iso = fm.compose(
        decode_isometry(_field(doc, "g", "input"), "g"),
        decode_isometry(_field(doc, "f", "input"), "f"),
    )
    return encode_isometry(iso)


def _cmd_adjoint_check(doc, args):
    doc = _expect_mapping(doc, "input")
    return fm.adjoint_check(
        decode_isometry(_field(doc, "psi", "input"), "psi"),
        decode_isometry(_field(doc, "psi_dual", "input"), "psi_dual"),
    )


def _cmd_lattice(doc, args):
    doc = _expect_mapping(doc, "input")
    kind = _field(doc, "kind", "input")
    if kind == "U":
        lat = lattices.hyperbolic_U()
    elif kind == "E8minus":
        lat = lattices.e8_minus()
    elif kind == "rank1":
        lat = lattices.rank1(decode_int(_field(doc, "n", "input"), "n"))
    elif kind == "K3":
        lat = lattices.k3_lattice()
    elif kind == "Mukai":
        lat = lattices.mukai_lattice()
    elif kind == "direct_sum":
        parts = [decode_lattice(p, "parts") for p in
                 serialize._expect_list(_field(doc, "parts", "input"), "parts")]
        lat = lattices.direct_sum(*parts)
    elif kind == "mukai_of":
        lat = lattices.mukai_extension(
            decode_lattice(_field(doc, "ns", "input"), "ns"))
    else:
        raise InputError(f"unknown lattice kind {kind!r}")
    return encode_lattice(lat)


_COMMANDS = {
    "pairing": _cmd_pairing,
    "twist": _cmd_twist,
    "chern": _cmd_chern,
    "untwist": _cmd_untwist,
    "primitive": _cmd_primitive,
    "c2-residue": _cmd_c2_residue,
    "extension-defect": _cmd_extension_defect,
    "bogomolov": _cmd_bogomolov,
    "stability-compare": _cmd_stability_compare,
    "brauer-order": _cmd_brauer_order,
    "brauer-equiv": _cmd_brauer_equiv,
    "twist-square": _cmd_twist_square,
    "mukai-check": _cmd_mukai_check,
    "wall-bound": _cmd_wall_bound,
    "general": _cmd_general,
    "walls-between": _cmd_walls_between,
    "same-chamber": _cmd_same_chamber,
    "strong-general": _cmd_strong_general,
    "moduli": _cmd_moduli,
    "beauville": _cmd_beauville,
    "algebraic-beauville": _cmd_algebraic_beauville,
    "complement": _cmd_complement,
    "discriminant": _cmd_discriminant,
    "signature": _cmd_signature,
    "theta": _cmd_theta,
    "compose": _cmd_compose,
    "adjoint-check": _cmd_adjoint_check,
    "lattice": _cmd_lattice,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3moduli",
        description="Exact lattice invariants for moduli of twisted sheaves "
                    "on K3 surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} computation")
        p.add_argument("input", nargs="?", default="-",
                       help="input JSON file, or - for stdin (default)")
        p.add_argument("--pretty", action="store_true",
                       help="indent the output document")
        if name == "chern":
            p.add_argument("--surface", choices=("k3", "abelian"), default="k3",
                           help="surface type fixing sqrt(td)")
    return parser


def _emit(doc, pretty: bool) -> None:
    if pretty:
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = json.dumps(doc, separators=(",", ":"), sort_keys=True)
    sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
        doc = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        _emit({"error": {"code": "validation", "message": f"bad input: {exc}"}},
              args.pretty)
        return 2
    try:
        result = _COMMANDS[args.command](doc, args)
    except InputError as exc:
        _emit({"error": {"code": "validation", "message": str(exc)}}, args.pretty)
        return 2
    except PreconditionError as exc:
        _emit({"error": {"code": "precondition", "message": str(exc)}}, args.pretty)
        return 3
    _emit(result, args.pretty)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
