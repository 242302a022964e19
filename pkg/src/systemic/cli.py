"""Command-line entry point: ``systemic <verb> ...``.

Exit codes: 0 all pass, 1 any fail, 2 inconclusive without fail, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .core import FiniteSystem, check_system
from .instancefile import InstanceError, load_instance, shipped_files
from .instances import REGISTRY, get_instance
from .matrices import (Matrix, column_space_projectivity, find_vnr_partner,
                       is_preceq_idempotent_matrix, matrix_mul)
from .modules import (MapTable, SystemicModule, check_module, classify_map, is_onto,
                      system_module)
from .projective import KINDS, Scope, is_projective
from .report import VerificationReport
from .schanuel import verify_trSh, verify_trSh11, verify_trSh118
from .search import BudgetExceeded
from .suites import SUITE_NAMES, UnknownSuite, run_suite

EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _load(ref: str):
    """A registry name or a path to an instance file."""
    if ref in REGISTRY and not Path(ref).exists():
        return get_instance(ref)
    return load_instance(ref)


def _as_module(obj) -> SystemicModule:
    if isinstance(obj, FiniteSystem):
        return system_module(obj)
    if not isinstance(obj, SystemicModule):
        raise UsageError(f"expected a module, got a {type(obj).__name__}")
    return obj


def _emit(rep: VerificationReport, fmt: str, verbose: bool) -> int:
    sys.stdout.write(rep.to_json() if fmt == "structured" else rep.to_text(verbose))
    return rep.exit_code


# --- verbs -------------------------------------------------------------------------------

def cmd_validate(args) -> VerificationReport:
    obj = load_instance(args.file)
    rep = VerificationReport("validate", {"file": args.file})
    rep.add("parse", "instance-file", "pass", note=type(obj).__name__)
    if isinstance(obj, FiniteSystem):
        r = check_system(obj)
        for c in r.checks:
            rep.add(c.name, c.level, c.status, c.witness or None,
                    "" if c.status != "fail" else "axiom violated")
        rep.scope["classification"] = r.classification
    elif isinstance(obj, SystemicModule):
        r = check_module(obj)
        for c in r.checks:
            rep.add(c.name, c.level, c.status, c.witness or None,
                    "" if c.status != "fail" else "axiom violated")
    elif isinstance(obj, MapTable):
        c = classify_map(obj)
        rep.scope["labels"] = sorted(c.labels) or ["none"]
        rep.scope["null"] = c.is_null
    elif isinstance(obj, Matrix):
        rep.scope["shape"] = list(obj.shape)
    return rep


def cmd_suite(args) -> VerificationReport:
    inst = None
    if args.instance is not None:
        inst = args.instance if args.instance in REGISTRY else load_instance(args.instance)
    return run_suite(args.name, args.scope, inst, args.budget)


def cmd_projective(args) -> VerificationReport:
    P = _as_module(_load(args.module))
    scope = Scope(args.scope) if args.scope is not None else Scope()
    v = is_projective(P, args.kind, scope, args.budget)
    rep = VerificationReport("projective", {"module": P.name, "kind": args.kind,
                                            "scope": v.scope})
    verdict = {"true": "pass", "false": "fail", "inconclusive": "inconclusive"}[v.status]
    witness = None
    if v.status == "false":
        witness = v.counterexample if v.counterexample is not None else str(v)
    cert = v.certificate
    note = str(v)
    if v.status == "true" and cert is not None and hasattr(cert, "nu"):
        note += f"; nu={cert.nu!r}"
    rep.add(f"{args.kind}-projective", "projectivity", verdict, witness, note)
    return rep


def cmd_matrix(args) -> VerificationReport:
    A = load_instance(args.file)
    if not isinstance(A, Matrix):
        raise UsageError("expected a matrix file")
    rep = VerificationReport("matrix", {"matrix": str(A), "check": args.check})
    if args.check == "idem":
        if A.shape[0] != A.shape[1]:
            raise UsageError("idempotence needs a square matrix")
        rep.check("preceq-idempotent", "matrix-idempotent", is_preceq_idempotent_matrix(A),
                  str(matrix_mul(A, A)), "A ⪯ A²")
    elif args.check == "vnr":
        if not isinstance(A.system, FiniteSystem):
            raise UsageError("partner search needs a finite system")
        B = find_vnr_partner(A)
        rep.check("vnr-partner", "matrix-vnr", B is not None, str(A),
                  f"B={B}" if B is not None else "no B with A ⪯ ABA")
        if B is not None:
            AB = matrix_mul(A, B)
            rep.check("product-idempotent", "matrix-vnr", is_preceq_idempotent_matrix(AB),
                      str(AB))
    else:
        if not isinstance(A.system, FiniteSystem):
            raise UsageError("column spaces need a finite system")
        if A.shape[0] != A.shape[1] or not is_preceq_idempotent_matrix(A):
            rep.add("colspace", "colspace-projective", "skipped", None, "not-preceq-idempotent")
        else:
            C, cert = column_space_projectivity(A)
            rep.add("colspace", "colspace-projective", "pass", None,
                    f"{C.size} columns {sorted(C.elements)}; 1 ⪯ πν verified")
    return rep


def cmd_schanuel(args) -> VerificationReport:
    f1, f2 = load_instance(args.f1), load_instance(args.f2)
    if not (isinstance(f1, MapTable) and isinstance(f2, MapTable)):
        raise UsageError("expected two map files")
    if f1.target != f2.target:
        raise UsageError("the maps must share a target")
    if args.mode == "preceq":
        return verify_trSh11(f1, f2, args.budget)
    rep = verify_trSh(f1, f2, args.budget)
    if all(classify_map(f).is_homomorphism for f in (f1, f2)) and is_onto(f2):
        rep.extend(verify_trSh118(f1, f2, args.budget), prefix="hom.")
    return rep


def cmd_list(args) -> int:
    print("instances:")
    for name in REGISTRY:
        obj = get_instance(name)
        size = getattr(obj, "size", None)
        print(f"  {name}" + (f" ({size} elements)" if size is not None else " (formula carrier)"))
    print("suites:")
    for name in SUITE_NAMES:
        print(f"  {name}")
    print("shipped files:")
    for p in shipped_files():
        print(f"  {p}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="systemic", description="Checks for systems, modules and projectivity.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(q, budget=True):
        q.add_argument("--format", choices=("text", "structured"), default="text")
        q.add_argument("--verbose", "-v", action="store_true", help="also list passing clauses")
        if budget:
            q.add_argument("--budget", type=int, default=None,
                           help="candidate evaluations per search (default from SYSTEMIC_BUDGET)")

    q = sub.add_parser("validate", help="parse and audit an instance file")
    q.add_argument("file")
    common(q, budget=False)
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("suite", help="run a named verification suite")
    q.add_argument("name", choices=SUITE_NAMES, metavar="name")
    q.add_argument("--scope", type=int, default=None, help="module size bound")
    q.add_argument("--instance", default=None, help="registry name or instance file")
    common(q)
    q.set_defaults(func=cmd_suite)

    q = sub.add_parser("projective", help="decide projectivity of a module")
    q.add_argument("module", help="module file or registry name")
    q.add_argument("--kind", choices=KINDS, required=True)
    q.add_argument("--scope", type=int, default=None, help="target size bound")
    common(q)
    q.set_defaults(func=cmd_projective)

    q = sub.add_parser("matrix", help="matrix checks")
    q.add_argument("file")
    q.add_argument("--check", choices=("idem", "vnr", "colspace"), required=True)
    common(q, budget=False)
    q.set_defaults(func=cmd_matrix)

    q = sub.add_parser("schanuel", help="replay the pullback comparison for two maps")
    q.add_argument("f1")
    q.add_argument("f2")
    q.add_argument("--mode", choices=("strict", "preceq"), default="strict")
    common(q)
    q.set_defaults(func=cmd_schanuel)

    q = sub.add_parser("list", help="list built-in instances, suites and shipped files")
    q.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "list":
        return cmd_list(args)
    try:
        rep = args.func(args)
    except (InstanceError, UsageError, UnknownSuite, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return 2
    return _emit(rep, args.format, args.verbose)


if __name__ == "__main__":
    sys.exit(main())
