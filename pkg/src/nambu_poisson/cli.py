"""Command-line interface.

Exit codes: 0 pass/success, 1 a checked FAIL (including failed preconditions
under ``--strict``), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .algebra import check_nambu_poisson, check_poisson, fix_coordinate
from .cohomology import CocyclePair, check_np_2cocycle, cocycle_space_dims, twisted_semidirect
from .deformations import check_deformation_direct, check_deformation_theorem
from .errors import AxiomViolation, HypothesisFailed, NambuPoissonError
from .field import QQ, PrimeField, field_from_spec
from .fixtures import BUILTIN, DESCRIPTIONS, builtin, example_files
from .ns import check_ns_np, ns_from_reynolds, ns_from_nijenhuis, ns_from_twisted_o, subadjacent_np
from .operators import (
    TwistedOCandidate, check_nijenhuis, check_reynolds, check_twisted_o, deform_by_nijenhuis, reynolds_deformed,
)
from .report import ERROR, FAIL, OK, PASS, ReportDocument
from .representations import adjoint_rep, check_np_rep, semidirect_np
from .search import SearchSpec, lift_to_rationals, search, verify


class UsageError(Exception):
    pass


# -- argument parsing ------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", help="write the result here instead of standard output")
    p.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    p.add_argument("--field", help="read values in this field ('rational' or 'gf <p>')")
    p.add_argument("--strict", action="store_true", help="validate preconditions before constructing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (search only)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="nambu-poisson", description="Exact Nambu-Poisson algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check axioms").add_subparsers(dest="what", required=True)
    for what in ("algebra", "rep", "cocycle", "ns", "operator"):
        c = check.add_parser(what, parents=[common])
        c.add_argument("file")
        if what == "operator":
            c.add_argument("--kind", choices=("nijenhuis", "reynolds", "twisted-o"), default="nijenhuis")
            c.add_argument("--operator", help="file holding the [operator] section")

    construct = sub.add_parser("construct", help="build new structures").add_subparsers(dest="what", required=True)
    for what in ("semidirect", "twisted-semidirect", "deformed", "ns-subadjacent", "from-nijenhuis",
                 "from-operator", "fix-coordinate"):
        c = construct.add_parser(what, parents=[common])
        c.add_argument("file")
        if what in ("deformed", "from-nijenhuis", "from-operator"):
            c.add_argument("--operator", help="file holding the [operator] section")
        if what == "deformed":
            c.add_argument("--kind", choices=("nijenhuis", "reynolds"), default="nijenhuis")
        if what == "from-operator":
            c.add_argument("--kind", choices=("twisted-o", "reynolds"), default="twisted-o")
        if what == "fix-coordinate":
            c.add_argument("--x0", required=True,
                           help="basis index (1-based) or comma-separated coordinates of x0")

    coh = sub.add_parser("cohomology", parents=[common], help="dimensions of Z^2, B^2, H^2")
    coh.add_argument("file")

    deform = sub.add_parser("deform", help="(1,2)-linear deformations").add_subparsers(dest="what", required=True)
    dc = deform.add_parser("check", parents=[common])
    dc.add_argument("file")

    s = sub.add_parser("search", parents=[common], help="brute-force search over GF(p)")
    s.add_argument("--kind", required=True, choices=("nijenhuis", "reynolds", "twisted-rb", "np-algebra"))
    s.add_argument("--base", help="algebra file or built-in example name")
    s.add_argument("--dim", type=int)
    s.add_argument("--cocycle", help="file with [phi]/[psi] for twisted-rb")
    s.add_argument("--coefficients", help="comma-separated coefficient set")
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("--diagonal", action="store_true")
    s.add_argument("--upper-triangular", action="store_true")
    s.add_argument("--lift", action="store_true", help="also re-check centered lifts over the rationals")

    ex = sub.add_parser("examples", help="built-in example files").add_subparsers(dest="what", required=True)
    ex.add_parser("list", parents=[common])
    w = ex.add_parser("write", parents=[common])
    w.add_argument("directory")
    return parser


# -- helpers ---------------------------------------------------------------------

def _field(args):
    return field_from_spec(args.field) if args.field else None


def _load(args, path=None) -> io.AlgebraFile:
    return io.load(path or args.file, _field(args))


def _need(obj, what, path):
    if obj is None:
        raise UsageError(f"{path} has no {what} sections")
    return obj


def _rep_or_adjoint(doc: io.AlgebraFile, A):
    return doc.rep if doc.rep is not None else adjoint_rep(A)


def _operator(args, doc):
    if getattr(args, "operator", None):
        op = _load(args, args.operator).operator
        return _need(op, "[operator]", args.operator)
    return _need(doc.operator, "[operator]", args.file)


def _candidate(doc, A, r):
    rep = _rep_or_adjoint(doc, A)
    pair = doc.pair if doc.pair is not None else CocyclePair.zero(A.field, rep.n, rep.m)
    return TwistedOCandidate(r, rep, pair)


def _finish(rep: ReportDocument) -> int:
    if rep.status is None:
        rep.set("status", FAIL if rep.failed else PASS)
    return 1 if rep.status == FAIL else 0


# -- subcommands -----------------------------------------------------------------

def cmd_check(args, rep: ReportDocument):
    doc = _load(args)
    rep.set("field", doc.field.name)
    A = doc.algebra
    if args.what == "algebra":
        if A is None and doc.poisson is not None:
            rep.add_check("poisson", check_poisson(doc.poisson), doc.field)
        else:
            rep.add_check("nambu-poisson", check_nambu_poisson(_need(A, "[product]/[bracket]", args.file)),
                          doc.field)
    elif args.what == "rep":
        A = _need(A, "[product]/[bracket]", args.file)
        rep.add_check("representation", check_np_rep(A, _need(doc.rep, "[mu]/[rho]", args.file)), doc.field)
    elif args.what == "cocycle":
        A = _need(A, "[product]/[bracket]", args.file)
        pair = _need(doc.pair, "[phi]/[psi]", args.file)
        rep.add_check("2-cocycle", check_np_2cocycle(A, _rep_or_adjoint(doc, A), pair), doc.field)
    elif args.what == "ns":
        rep.add_check("ns-nambu-poisson", check_ns_np(_need(doc.ns, "NS", args.file)), doc.field)
    else:
        A = _need(A, "[product]/[bracket]", args.file)
        N = _operator(args, doc)
        if args.kind == "nijenhuis":
            rep.add_check("nijenhuis", check_nijenhuis(A, N), doc.field)
        elif args.kind == "reynolds":
            rep.add_check("reynolds", check_reynolds(A, N), doc.field)
        else:
            rep.add_check("twisted-o", check_twisted_o(_candidate(doc, A, N), A, strict=True), doc.field)
    return _finish(rep), None


def _x0(spec: str, n: int, field):
    parts = [p for p in spec.replace(" ", "").split(",") if p]
    if len(parts) == 1:
        i = int(parts[0])
        if not 1 <= i <= n:
            raise UsageError(f"--x0 basis index must be in 1..{n}")
        v = field.zeros(n)
        v[i - 1] = field.convert(1)
        return v
    if len(parts) != n:
        raise UsageError(f"--x0 needs 1 index or {n} coordinates")
    return field.array([field.parse(p) for p in parts])


def cmd_construct(args, rep: ReportDocument):
    doc = _load(args)
    rep.set("field", doc.field.name)
    strict, what = args.strict, args.what
    A = doc.algebra
    if what != "ns-subadjacent":
        A = _need(A, "[product]/[bracket]", args.file)
    if what == "semidirect":
        R = _need(doc.rep, "[mu]/[rho]", args.file)
        if strict and not rep.add_check("representation", check_np_rep(A, R), doc.field):
            return 1, None
        out = io.emit_objects(algebra=semidirect_np(A, R))
    elif what == "twisted-semidirect":
        R = _rep_or_adjoint(doc, A)
        pair = _need(doc.pair, "[phi]/[psi]", args.file)
        if strict and not rep.add_check("2-cocycle", check_np_2cocycle(A, R, pair), doc.field):
            return 1, None
        out = io.emit_objects(algebra=twisted_semidirect(A, R, pair))
    elif what == "deformed":
        N = _operator(args, doc)
        if args.kind == "nijenhuis":
            out = io.emit_objects(algebra=deform_by_nijenhuis(A, N, strict=strict))
        else:
            out = io.emit_objects(algebra=reynolds_deformed(A, N, strict=strict))
    elif what == "ns-subadjacent":
        out = io.emit_objects(algebra=subadjacent_np(_need(doc.ns, "NS", args.file), strict=strict))
    elif what == "from-nijenhuis":
        out = io.emit_objects(ns=ns_from_nijenhuis(A, _operator(args, doc), strict=strict))
    elif what == "from-operator":
        r = _operator(args, doc)
        if args.kind == "reynolds":
            out = io.emit_objects(ns=ns_from_reynolds(A, r, strict=strict)[1])
        else:
            out = io.emit_objects(ns=ns_from_twisted_o(_candidate(doc, A, r), A, strict=strict))
    else:
        out = io.emit_objects(poisson=fix_coordinate(A, _x0(args.x0, A.dim, A.field), strict=strict))
    rep.set("status", OK)
    rep.set("output", out)
    return 0, out


def cmd_cohomology(args, rep: ReportDocument):
    doc = _load(args)
    rep.set("field", doc.field.name)
    A = _need(doc.algebra, "[product]/[bracket]", args.file)
    dims = cocycle_space_dims(A, _rep_or_adjoint(doc, A))
    rep.set("dimensions", dims.as_dict())
    rep.set("status", OK)
    return 0, None


def cmd_deform(args, rep: ReportDocument):
    doc = _load(args)
    rep.set("field", doc.field.name)
    d = _need(doc.deformation, "[phi1]/[psi1]/[psi2]", args.file)
    rep.add_check("deformation (direct)", check_deformation_direct(d), doc.field)
    rep.add_check("deformation (theorem)", check_deformation_theorem(d), doc.field)
    return _finish(rep), None


def _witness_dict(w, lift_ok=None) -> dict:
    if hasattr(w, "matrix"):
        out = {"matrix": [[w.field.format(x) for x in row] for row in w.matrix]}
    else:
        out = {"file": io.emit_objects(algebra=w)}
    if lift_ok is not None:
        out["lift_verifies"] = lift_ok
    return out


def _lift_verifies(spec: SearchSpec, w) -> bool:
    lifted = lift_to_rationals(w)
    if spec.kind == "np-algebra":
        return check_nambu_poisson(lifted) is None
    A = lift_to_rationals(spec.base)
    if spec.kind == "nijenhuis":
        return check_nijenhuis(A, lifted) is None
    if spec.kind == "reynolds":
        return check_reynolds(A, lifted) is None
    if spec.cocycle is None:
        pair = CocyclePair.zero(QQ, A.dim, A.dim)
    else:
        pair = CocyclePair(lift_to_rationals(spec.cocycle.phi), lift_to_rationals(spec.cocycle.psi))
    return check_twisted_o(TwistedOCandidate(lifted, adjoint_rep(A), pair), A, strict=False) is None


def cmd_search(args, rep: ReportDocument):
    field = field_from_spec(args.field or "gf 2")
    if not isinstance(field, PrimeField):
        raise UsageError("search needs --field gf <p>")
    rep.set("field", field.name)
    base = None
    if args.kind != "np-algebra":
        if not args.base:
            raise UsageError(f"--base is required for {args.kind}")
        base = builtin(args.base, field) if args.base in BUILTIN else io.load(args.base, field).algebra
        base = _need(base, "[product]/[bracket]", args.base)
    elif args.dim is None:
        raise UsageError("--dim is required for np-algebra")
    cocycle = io.load(args.cocycle, field).pair if args.cocycle else None
    coefs = tuple(int(c) for c in args.coefficients.split(",")) if args.coefficients else None
    spec = SearchSpec(args.kind, field, base=base, dim=args.dim, coefficients=coefs, budget=args.budget,
                      seed=args.seed, diagonal=args.diagonal, upper_triangular=args.upper_triangular,
                      cocycle=cocycle)
    res = search(spec, jobs=args.jobs)
    witnesses = []
    for w in res.witnesses:
        witnesses.append(_witness_dict(w, _lift_verifies(spec, w) if args.lift else None))
    rep.set("search", {
        "kind": args.kind, "field": field.name, "space_size": res.space_size, "examined": res.examined,
        "budget_exceeded": res.budget_exceeded, "witness_count": len(res.witnesses), "witnesses": witnesses,
    })
    rep.set("status", OK if all(verify(spec, w) for w in res.witnesses) else FAIL)
    return (0 if rep.status == OK else 1), None


def cmd_examples(args, rep: ReportDocument):
    if args.what == "list":
        rep.set("examples", [{"name": nm, "dim": builtin(nm).dim, "description": DESCRIPTIONS[nm]}
                             for nm in BUILTIN])
    else:
        d = Path(args.directory)
        d.mkdir(parents=True, exist_ok=True)
        for name, text in example_files().items():
            (d / name).write_text(text)
        rep.set("input", str(d))
    rep.set("status", OK)
    return 0, None


COMMANDS = {"check": cmd_check, "construct": cmd_construct, "cohomology": cmd_cohomology, "deform": cmd_deform,
            "search": cmd_search, "examples": cmd_examples}


def run(argv=None) -> tuple[int, ReportDocument, str, str | None]:
    """Execute one invocation; returns (exit code, report, text to write, --out path)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = 0 if exc.code in (0, None) else 2
        return code, ReportDocument("usage", status=OK if code == 0 else ERROR), "", None
    name = args.command + (f" {args.what}" if getattr(args, "what", None) else "")
    rep = ReportDocument(name)
    if getattr(args, "file", None):
        rep.set("input", args.file)
    fmt, out = args.format, args.out
    try:
        code, direct = COMMANDS[args.command](args, rep)
    except (AxiomViolation, HypothesisFailed) as exc:
        rep.set("status", FAIL)
        if getattr(exc, "report", None) is not None:
            rep.add_check("precondition", exc.report)
        rep.set("error", str(exc))
        return 1, rep, rep.render(fmt), out
    except (NambuPoissonError, UsageError, OSError, ValueError, KeyError) as exc:
        rep.set("status", ERROR)
        rep.set("error", str(exc.args[0]) if isinstance(exc, KeyError) else str(exc))
        return 2, rep, rep.render(fmt), out
    if direct is not None and fmt == "text":
        return code, rep, direct, out
    return code, rep, rep.render(fmt), out


def main(argv=None) -> int:
    code, rep, text, out = run(argv)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    if code == 2 and "error" in rep.data:
        print(f"error: {rep.data['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
