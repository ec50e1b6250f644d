"""Batch front end for the exact conformal-superalgebra toolkit.

Subcommands configure a family, run axiom sweeps, structural probes, the
identity corpus, the free-field crosscheck, Jordan checks, basis listings, and
the classical fixtures, then emit a deterministic JSON or text report.

Exit codes: 0 pass, 1 mathematical violation, 2 configuration error,
3 inconclusive (a window-limited probe stalled).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

from .corpus import CASES
from .elements import Element
from .engine import (MatrixCarrier, check_derivative_axiom, check_jacobi,
                     check_skew_symmetry)
from .families import build_family
from .fixtures import axiom_fixture_run
from .oracle import crosscheck_even_sector, oracle_partial_check
from .probes import generator_probe, jordan_structure_check, simplicity_probe

SCHEMA = "confal-report/1"

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_STALLED = 3


def _threads() -> int:
    raw = os.environ.get("CONFAL_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _jsonable(value):
    """Make report payloads JSON-safe without losing exactness."""
    if isinstance(value, Element):
        return value.render()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def _check_payload(result) -> dict:
    return {
        "ok": result.ok,
        "checked": result.checked,
        "counterexamples": _jsonable(result.counterexamples),
    }


def _emit(report: dict, args) -> None:
    report = {"schema": SCHEMA, **report}
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"{key}: {json.dumps(value, sort_keys=True)}"
                 for key, value in sorted(report.items())]
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _family_from(args):
    return build_family(args.family, k=args.k, k1=args.k1, k2=args.k2)


def _family_basis(family, top):
    return [elem for w in family.weights_up_to(Fraction(top))
            for elem in family.basis_at_weight(w)]


def cmd_verify_axioms(args) -> int:
    family = _family_from(args)
    basis = _family_basis(family, args.max_weight)
    if not basis:
        raise ValueError("empty sweep: no basis elements below the weight cap")
    carrier = MatrixCarrier(family.ambient)
    pairs = list(product(basis, basis))
    triples = list(product(basis, basis, basis))
    results = {
        "derivative": check_derivative_axiom(carrier, pairs),
        "skew": check_skew_symmetry(carrier, pairs),
        "jacobi": check_jacobi(carrier, triples, args.max_mode, args.max_mode),
    }
    ok = all(r.ok for r in results.values())
    report = {
        "command": "verify-axioms",
        "config": {"family": family.name, "k": args.k, "k1": args.k1,
                   "k2": args.k2, "max_weight": args.max_weight,
                   "max_mode": args.max_mode, "threads": _threads()},
        "ok": ok,
        "checks": {name: _check_payload(r) for name, r in results.items()},
    }
    _emit(report, args)
    return EXIT_PASS if ok else EXIT_VIOLATION


def _probe_exit(status: str) -> int:
    if status == "reached-full-span":
        return EXIT_PASS
    if status == "stalled":
        return EXIT_STALLED
    return EXIT_VIOLATION


def cmd_probe(args, kind: str) -> int:
    family = _family_from(args)
    if kind == "simplicity":
        probe = simplicity_probe(family, Fraction(args.window),
                                 slack=args.slack)
    else:
        probe = generator_probe(family, Fraction(args.max_weight))
    report = {
        "command": f"probe-{kind}",
        "config": {"family": family.name, "k": args.k, "k1": args.k1,
                   "k2": args.k2, "threads": _threads()},
        "ok": probe.status == "reached-full-span",
        "probe": probe.as_dict(),
    }
    _emit(report, args)
    return _probe_exit(probe.status)


def _run_corpus_case(entry, k, max_exp, levels):
    checked = 0
    failures = []
    for desc, lhs, rhs in entry["run"](k, max_exp, levels):
        checked += 1
        if lhs != rhs and len(failures) < 5:
            failures.append({"params": desc, "lhs": _jsonable(lhs),
                             "rhs": _jsonable(rhs)})
    return {"tag": entry["tag"], "corrected": entry["corrected"],
            "checked": checked, "failures": failures}


def cmd_corpus(args) -> int:
    levels = tuple(args.levels)
    workers = _threads()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(
            lambda entry: _run_corpus_case(entry, args.k, args.max_exp, levels),
            CASES))
    rows.sort(key=lambda row: row["tag"])
    ok = all(not row["failures"] for row in rows)
    report = {
        "command": "corpus",
        "config": {"k": args.k, "max_exp": args.max_exp,
                   "levels": list(levels), "threads": workers},
        "ok": ok,
        "checked": sum(row["checked"] for row in rows),
        "cases": rows,
    }
    _emit(report, args)
    return EXIT_PASS if ok else EXIT_VIOLATION


def cmd_oracle(args) -> int:
    if args.k < 1:
        raise ValueError("k must be a positive integer")
    mode_report = crosscheck_even_sector(args.k, args.max_exp)
    partial_report = oracle_partial_check(args.k, args.max_exp)
    ok = mode_report.ok and partial_report.ok
    report = {
        "command": "oracle-crosscheck",
        "config": {"k": args.k, "max_exp": args.max_exp,
                   "threads": _threads()},
        "ok": ok,
        "modes": mode_report.as_dict(),
        "derivation": partial_report.as_dict(),
    }
    _emit(report, args)
    return EXIT_PASS if ok else EXIT_VIOLATION


def cmd_jordan(args) -> int:
    result = jordan_structure_check(args.kind, args.k, args.ell)
    report = {
        "command": "jordan-check",
        "config": {"kind": args.kind, "k": args.k, "ell": args.ell,
                   "threads": _threads()},
        "ok": result.ok,
        "check": _check_payload(result),
    }
    _emit(report, args)
    return EXIT_PASS if result.ok else EXIT_VIOLATION


def cmd_basis(args) -> int:
    family = _family_from(args)
    basis = family.basis_at_weight(Fraction(args.weight))
    report = {
        "command": "basis",
        "config": {"family": family.name, "k": args.k, "k1": args.k1,
                   "k2": args.k2, "weight": args.weight},
        "ok": True,
        "dimension": len(basis),
        "elements": [elem.render() for elem in basis],
    }
    _emit(report, args)
    return EXIT_PASS


def cmd_fixtures(args) -> int:
    results = axiom_fixture_run(args.max_depth)
    ok = all(r.ok for r in results.values())
    report = {
        "command": "fixtures",
        "config": {"max_depth": args.max_depth, "threads": _threads()},
        "ok": ok,
        "checks": {name: _check_payload(r)
                   for name, r in sorted(results.items())},
    }
    _emit(report, args)
    return EXIT_PASS if ok else EXIT_VIOLATION


def _add_output_flags(sub):
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--output", default=None, help="write report to a file")


def _add_family_flags(sub):
    sub.add_argument("--family", required=True,
                     help="rkk:L | star1 | star2 | dagger1 | dagger2 |"
                          " super:L | superstar | superdagger")
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--k1", type=int, default=None)
    sub.add_argument("--k2", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confal",
        description="exact checks and probes for matrix conformal superalgebras")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("verify-axioms",
                              help="run the three axiom sweeps over a family")
    _add_family_flags(sub)
    sub.add_argument("--max-weight", type=int, default=4)
    sub.add_argument("--max-mode", type=int, default=4)
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_verify_axioms)

    sub = commands.add_parser("probe-simplicity",
                              help="ideal-closure probe inside a weight window")
    _add_family_flags(sub)
    sub.add_argument("--window", type=int, default=4)
    sub.add_argument("--slack", type=int, default=2)
    _add_output_flags(sub)
    sub.set_defaults(handler=lambda a: cmd_probe(a, "simplicity"))

    sub = commands.add_parser("probe-generators",
                              help="generated-subalgebra probe from the"
                                   " designated generators")
    _add_family_flags(sub)
    sub.add_argument("--max-weight", type=int, default=6)
    _add_output_flags(sub)
    sub.set_defaults(handler=lambda a: cmd_probe(a, "generators"))

    sub = commands.add_parser("corpus",
                              help="evaluate the frozen identity corpus")
    sub.add_argument("--k", type=int, default=2)
    sub.add_argument("--max-exp", type=int, default=3)
    sub.add_argument("--levels", type=int, nargs="+", default=[0, 1])
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_corpus)

    sub = commands.add_parser("oracle-crosscheck",
                              help="compare the engine with the free-field"
                                   " oscillator model")
    sub.add_argument("--k", type=int, default=2)
    sub.add_argument("--max-exp", type=int, default=2)
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_oracle)

    sub = commands.add_parser("jordan-check",
                              help="finite algebra structure of a bottom"
                                   " weight space")
    sub.add_argument("--kind", choices=("A", "gl", "B", "C"), required=True)
    sub.add_argument("--k", type=int, default=2)
    sub.add_argument("--ell", type=int, default=0)
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_jordan)

    sub = commands.add_parser("basis",
                              help="list the family basis at one weight")
    _add_family_flags(sub)
    sub.add_argument("--weight", type=int, required=True)
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_basis)

    sub = commands.add_parser("fixtures",
                              help="axiom sweeps over the classical fixture"
                                   " algebras")
    sub.add_argument("--max-depth", type=int, default=4)
    _add_output_flags(sub)
    sub.set_defaults(handler=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
