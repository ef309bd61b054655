"""Command-line entry point: ``hopfsym <command> ...``.

Exit status: 0 when every check passes or a verdict was produced, 1 on a
validation failure or regression mismatch, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys

from . import checkers as ck
from .catalog import run_regression
from .constructions import coinvariants, regular_comodule, smash_product, trivial_extension
from .corep import ComoduleAlgebraSC, NotSovereignError
from .exactlin import DimensionError, Field, FieldError
from .hopfcore import HopfSC, ValidationError, dual_hopf, is_involutory
from .interchange import Document, MalformedInput, dumps, load, serialize
from .structure import (
    LEFT,
    RIGHT,
    IN_H,
    ON_H,
    StructureError,
    check_theorem42_precondition,
    distinguished_pair,
    integrals,
    is_cosemisimple,
    is_semisimple,
    is_sovereign_character,
    is_unimodular,
    verify_integral_identities,
)

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field", default=d(None), help="q or fp:p (overrides the file)")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget", type=int, default=d(ck.DEFAULT_BUDGET))
    p.add_argument("--report", choices=("text", "json"), default=d("text"))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfsym", description="Exact checks for Hopf algebras and comodule algebras",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    def add(name, help_, obj=True, character=False, plain=False):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("file")
        if obj:
            p.add_argument("--object", required=True)
        if character:
            p.add_argument("--character", required=not plain)
        if plain:
            p.add_argument("--plain", action="store_true", help="ignore the coaction (H = k)")
        return p

    add("validate", "run every axiom validator", obj=False)
    add("dual", "emit the dual Hopf algebra")
    add("structure", "integrals, alpha, g and the integral identities")
    add("sovereign", "is a character sovereign", character=True)
    add("smash", "emit the smash product A#H*")
    add("trivext", "emit the trivial extension E(A) and its canonical witness", character=True)
    add("coinv", "emit the coinvariant subalgebra")
    add("frobenius", "Frobenius in M^H (or plain)", plain=True)
    add("symmetric", "(H,u)-symmetric (or plain symmetric)", character=True, plain=True)
    cat = sub.add_parser("catalog", help="built-in examples", parents=[common])
    cat.add_argument("action", choices=("run-all",))
    return parser


# -- helpers --------------------------------------------------------------------


def _field(args) -> Field | None:
    if args.field is None:
        return None
    try:
        return Field.parse(args.field)
    except FieldError as exc:
        raise MalformedInput(str(exc)) from None


def _object(doc: Document, name: str):
    if name in doc.hopfs:
        return doc.hopfs[name]
    if name in doc.comodules:
        return doc.comodules[name]
    raise MalformedInput(f"no object named {name!r}; have {', '.join(doc.order)}")


def _hopf(doc, name) -> HopfSC:
    obj = _object(doc, name)
    return obj if isinstance(obj, HopfSC) else obj.hopf


def _comodule(doc, name) -> ComoduleAlgebraSC:
    obj = _object(doc, name)
    return regular_comodule(obj, name) if isinstance(obj, HopfSC) else obj


def _character(doc: Document, H: HopfSC, spec: str):
    F = H.field
    if spec in doc.characters:
        hname, coords = doc.characters[spec]
        if doc.hopfs[hname] is not H:
            raise MalformedInput(f"character {spec!r} lives on {hname}, not on this object's Hopf algebra")
        return coords
    if spec == "alpha":
        # over a dual H0*, this is also the distinguished grouplike g of H0
        return distinguished_pair(H).alpha
    if spec in ("eps", "counit"):
        return H.counit
    try:
        coords = F.array([x for x in spec.split(",")])
    except FieldError as exc:
        raise MalformedInput(f"bad character {spec!r}: {exc}") from None
    if coords.shape != (H.dim,):
        raise MalformedInput(f"character needs {H.dim} coordinates")
    return coords


def _fmt(F, v) -> list:
    return [F.fmt(x) for x in v]


def _emit(args, payload: dict, text_lines: list | None = None) -> None:
    if args.report == "json" or text_lines is None:
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


# -- commands --------------------------------------------------------------------


def cmd_validate(args, doc: Document) -> int:
    lines = [f"{name}: valid" for name in doc.order]
    _emit(args, {"valid": True, "objects": list(doc.order)}, lines)
    return EXIT_OK


def cmd_dual(args, doc) -> int:
    H = _hopf(doc, args.object)
    out = Document(doc.field)
    out.add_hopf(args.object + "_dual", dual_hopf(H))
    sys.stdout.write(dumps(serialize(out)))
    return EXIT_OK


def structure_report(H: HopfSC) -> dict:
    F = H.field
    pair = distinguished_pair(H)
    ints = {
        f"{side}_{loc}": _fmt(F, integrals(H, side, loc).generator)
        for side in (LEFT, RIGHT) for loc in (IN_H, ON_H)
    }
    return {
        "basis": list(H.labels),
        "integrals": ints,
        "alpha": _fmt(F, pair.alpha),
        "g": _fmt(F, pair.g),
        "unimodular": is_unimodular(H),
        "cosemisimple": is_cosemisimple(H),
        "semisimple": is_semisimple(H),
        "involutory": is_involutory(H),
        "s2_precondition": check_theorem42_precondition(H),
        "alpha_sovereign": is_sovereign_character(H, pair.alpha),
        "identities": verify_integral_identities(H).as_dict(),
    }


def cmd_structure(args, doc) -> int:
    H = _hopf(doc, args.object)
    rep = structure_report(H)
    lines = [f"basis: {' '.join(rep['basis'])}"]
    for k, v in rep["integrals"].items():
        lines.append(f"integral {k}: ({','.join(v)})")
    for k in ("alpha", "g"):
        lines.append(f"{k}: ({','.join(rep[k])})")
    for k in ("unimodular", "cosemisimple", "semisimple", "involutory", "s2_precondition", "alpha_sovereign"):
        lines.append(f"{k}: {str(rep[k]).lower()}")
    for k, v in rep["identities"].items():
        lines.append(f"identity {k}: {v}")
    _emit(args, rep, lines)
    return EXIT_OK if verify_integral_identities(H).ok else EXIT_FAIL


def cmd_sovereign(args, doc) -> int:
    H = _hopf(doc, args.object)
    u = _character(doc, H, args.character)
    ok = is_sovereign_character(H, u)
    _emit(args, {"character": _fmt(H.field, u), "sovereign": ok}, [f"sovereign: {str(ok).lower()}"])
    return EXIT_OK


def cmd_smash(args, doc) -> int:
    A = _comodule(doc, args.object)
    sm = smash_product(A)
    out = Document(doc.field)
    hname = doc.hopf_name(A.hopf) if any(v is A.hopf for v in doc.hopfs.values()) else args.object
    out.add_hopf(hname + "_dual", sm.comodule.hopf)
    out.add_comodule(args.object + "_smash", sm.comodule)
    sys.stdout.write(dumps(serialize(out)))
    return EXIT_OK


def cmd_trivext(args, doc) -> int:
    A = _comodule(doc, args.object)
    u = _character(doc, A.hopf, args.character)
    TE = trivial_extension(A, u)
    out = Document(doc.field)
    hname = next((k for k, v in doc.hopfs.items() if v is A.hopf), "H")
    out.add_hopf(hname, A.hopf)
    ename = f"E_{args.object}"
    out.add_comodule(ename, TE.comodule)
    data = serialize(out)
    data["functionals"] = {"canonical_witness": {"object": ename, "coords": _fmt(doc.field, TE.witness)}}
    sys.stdout.write(dumps(data))
    return EXIT_OK


def cmd_coinv(args, doc) -> int:
    A = _comodule(doc, args.object)
    B, inc = coinvariants(A)
    F = doc.field
    payload = {
        "field": str(F),
        "basis": list(B.labels),
        "mult": [[[F.fmt(x) for x in row] for row in plane] for plane in B.mult],
        "unit": _fmt(F, B.unit),
        "inclusion": [[F.fmt(x) for x in row] for row in inc],
    }
    sys.stdout.write(dumps(payload))
    return EXIT_OK


def _report_out(args, rep: ck.CheckReport) -> int:
    lines = [f"verdict: {rep.verdict}"]
    if rep.witness is not None:
        lines.append("witness: (" + ",".join(_fmt(rep.field, rep.witness)) + ")")
    lines.append(f"trials: {rep.trials}")
    lines.append(f"note: {rep.confidence_note}")
    lines += [f"diagnostic: {d}" for d in rep.diagnostics]
    _emit(args, rep.as_dict(), lines)
    return EXIT_OK


def cmd_frobenius(args, doc) -> int:
    A = _comodule(doc, args.object)
    if args.plain:
        rep = ck.check_plain(A.alg, ck.FROBENIUS, args.budget, args.seed)
    else:
        rep = ck.check_frobenius_in_MH(A, args.budget, args.seed)
    return _report_out(args, rep)


def cmd_symmetric(args, doc) -> int:
    A = _comodule(doc, args.object)
    if args.plain:
        rep = ck.check_plain(A.alg, ck.SYMMETRIC, args.budget, args.seed)
    else:
        rep = ck.check_symmetric(A, _character(doc, A.hopf, args.character), args.budget, args.seed)
    return _report_out(args, rep)


def cmd_catalog(args) -> int:
    F = _field(args) or Field()
    summary = run_regression(args.seed, args.budget, F)
    if args.report == "json":
        sys.stdout.write(dumps(summary.as_dict()))
    else:
        sys.stdout.write(summary.text() + "\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


COMMANDS = {
    "validate": cmd_validate,
    "dual": cmd_dual,
    "structure": cmd_structure,
    "sovereign": cmd_sovereign,
    "smash": cmd_smash,
    "trivext": cmd_trivext,
    "coinv": cmd_coinv,
    "frobenius": cmd_frobenius,
    "symmetric": cmd_symmetric,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        if args.command == "catalog":
            return cmd_catalog(args)
        doc = load(args.file, _field(args))
        return COMMANDS[args.command](args, doc)
    except (MalformedInput, FieldError, DimensionError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValidationError as exc:
        print("validation failed:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_FAIL
    except (NotSovereignError, StructureError, ck.PreconditionError) as exc:
        print(f"check refused: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
