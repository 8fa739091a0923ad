"""Command-line interface: ``finbasis <command> SPEC [options]``.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .basis import check_finitary_basis
from .cover import NotCovered, finite_cover, minimum_cover
from .dot import IoFailure, hasse_dot
from .dsl import SpecError, parse_family, parse_spec
from .ideal import build_completion, enumerate_ideals
from .order import DEFAULT_MAX_CARRIER, OrderError, covering_pairs
from .report import CheckOptions, build_poset, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(path, exc) from exc


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoFailure(path, exc) from exc


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _options(args) -> CheckOptions:
    return CheckOptions(
        closure=args.closure, max_carrier=args.max_carrier, seed=args.seed,
        exhaustive_size=getattr(args, "exhaustive_size", 0),
        random_count=getattr(args, "random", 0),
    )


def cmd_validate(args) -> int:
    spec = parse_spec(_read(args.spec))
    try:
        p = build_poset(spec, _options(args))
    except OrderError as exc:
        print(f"invalid poset: {type(exc).__name__}: {exc}")
        if args.report:
            _write(args.report, _dump({"poset": {"valid": False, "error": type(exc).__name__,
                                                 "witness": list(exc.witness)}}))
        return EXIT_FAIL
    report = check_finitary_basis(p, spec.basis)
    print(f"poset {spec.name}: {len(p)} elements, valid")
    if report.is_basis:
        print(f"finitary basis: yes (bottom {report.bottom})")
    else:
        subset, reason = report.failure
        print(f"finitary basis: no ({reason} at {{{', '.join(subset)}}})")
    if args.report:
        _write(args.report, _dump({
            "poset": {"valid": True, "size": len(p)},
            "basis": {"is_basis": report.is_basis, "bottom": report.bottom,
                      "failure": None if report.failure is None else
                      {"subset": list(report.failure[0]), "reason": report.failure[1]}},
        }))
    return EXIT_OK if report.is_basis else EXIT_FAIL


def cmd_ideals(args) -> int:
    spec = parse_spec(_read(args.spec))
    p = build_poset(spec, _options(args))
    ideals = enumerate_ideals(p, spec.basis)
    for ideal in ideals:
        print(ideal)
    if args.report:
        _write(args.report, _dump({"count": len(ideals),
                                   "ideals": [list(i.members) for i in ideals]}))
    return EXIT_OK


def cmd_complete(args) -> int:
    spec = parse_spec(_read(args.spec))
    p = build_poset(spec, _options(args))
    c = build_completion(p, spec.basis)
    covers = covering_pairs(c.poset)
    print(f"completion of {spec.name}: {len(c.ideals)} ideals, bottom {c.bottom}")
    for lo, hi in covers:
        print(f"  {lo} < {hi}")
    if args.report:
        _write(args.report, _dump({
            "size": len(c.ideals),
            "ideals": [list(i.members) for i in c.ideals],
            "bottom": list(c.bottom.members),
            "covering_pairs": [[list(lo.members), list(hi.members)] for lo, hi in covers],
        }))
    return EXIT_OK


def cmd_cover(args) -> int:
    fam = parse_family(_read(args.family))
    try:
        w = (minimum_cover if args.minimum else finite_cover)(fam.sets, fam.target)
    except NotCovered as exc:
        print(f"not covered: {exc}")
        return EXIT_FAIL

    def fmt(s):
        return "{" + ", ".join(sorted(s)) + "}"
    print("subfamily:", " ".join(fmt(s) for s in w.subfamily) or "(empty)")
    for x in sorted(w.assignment):
        print(f"  {x} -> {fmt(w.assignment[x])}")
    if args.report:
        _write(args.report, _dump({
            "subfamily": [sorted(s) for s in w.subfamily],
            "assignment": {x: sorted(s) for x, s in w.assignment.items()},
        }))
    return EXIT_OK


def cmd_check(args) -> int:
    spec = parse_spec(_read(args.spec))
    report = run_checks(spec, _options(args))
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.summary())
    if args.report:
        _write(args.report, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    spec = parse_spec(_read(args.spec))
    p = build_poset(spec, _options(args))
    if args.completion:
        text = hasse_dot(build_completion(p, spec.basis), spec.name)
    else:
        text = hasse_dot(p, spec.name)
    _write(args.output, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--closure", action="store_true",
                        help="close the relation reflexively and transitively even in strict mode")
    common.add_argument("--max-carrier", type=int, default=DEFAULT_MAX_CARRIER, metavar="N")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--report", metavar="PATH", help="write a JSON report here")

    parser = _Parser(prog="finbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check poset axioms and basis")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ideals", parents=[common], help="list the ideals of the basis")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("complete", parents=[common], help="build the ideal completion")
    p.add_argument("spec")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("cover", parents=[common], help="extract a finite covering subfamily")
    p.add_argument("family")
    p.add_argument("--minimum", action="store_true",
                   help="smallest cover instead of first-match (exponential)")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("check", parents=[common], help="run the full oracle battery")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a summary")
    p.add_argument("--exhaustive-size", type=int, default=0, metavar="N",
                   help="also check every labeled poset with up to N elements")
    p.add_argument("--random", type=int, default=0, metavar="K",
                   help="also check K seeded random posets")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-dot", parents=[common], help="write the Hasse diagram as DOT")
    p.add_argument("spec")
    p.add_argument("-o", "--output", metavar="PATH")
    p.add_argument("--completion", action="store_true", help="export the ideal completion")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"{args.command}: parse error at {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IoFailure as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    except OrderError as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
