"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 parse error,
3 engine/oracle mismatch, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import engine, models, oracle
from .differential import ComplexSpec
from .errors import (
    DegreeOutOfRange,
    InconsistencyError,
    ParseError,
    ResourceCapExceeded,
    SpecError,
    ValidationError,
)
from .graded import format_fraction
from .problem import dumps, expression_to_json, load_document, serialize, spec_from_document

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> ComplexSpec:
    doc = load_document(_read(args.file))
    return spec_from_document(doc, getattr(args, "max_degree", None))


def _table(rows, header, fmt) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    width = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(row, width)) for row in [header, *rows]]
    return "\n".join(lines) + "\n"


def cmd_check(args, out, err) -> int:
    doc = load_document(_read(args.file))
    try:
        spec_from_document(doc)
    except ValidationError as exc:
        err.write("invalid\n" + str(exc.report) + "\n")
        return EXIT_INVALID
    out.write("valid\n")
    return EXIT_OK


def _betti_rows(spec: ComplexSpec):
    b = engine.betti(spec, spec.max_degree)
    return sorted(b.items())


def _write_betti(spec: ComplexSpec, fmt: str, out) -> None:
    rows = _betti_rows(spec)
    if fmt == "json":
        out.write(dumps({"betti": [list(r) for r in rows], "max_degree": spec.max_degree}))
    else:
        out.write(_table(rows, ("n", "betti"), fmt))


def cmd_betti(args, out, err) -> int:
    _write_betti(_load(args), args.format, out)
    return EXIT_OK


def cmd_dims(args, out, err) -> int:
    spec = _load(args)
    rows = list(enumerate(engine.dimensions(spec, spec.max_degree)))
    if args.format == "json":
        out.write(dumps({"dims": [list(r) for r in rows], "max_degree": spec.max_degree}))
    else:
        out.write(_table(rows, ("n", "dim"), args.format))
    return EXIT_OK


def cmd_ring(args, out, err) -> int:
    spec = _load(args)
    res = engine.ring_structure(spec, spec.max_degree)
    reps = [
        (n, i, r) for n in sorted(res.representatives) for i, r in enumerate(res.representatives[n])
    ]
    products = sorted(res.ring_constants.items())
    if args.format == "json":
        out.write(dumps({
            "max_degree": res.max_reliable_degree,
            "betti": [list(r) for r in engine.poincare_table(res)],
            "representatives": [
                {"degree": n, "index": i, "terms": expression_to_json(r)} for n, i, r in reps
            ],
            "products": [
                {"left": [d1, i], "right": [d2, j], "result": [format_fraction(c) for c in coeffs]}
                for (d1, i, d2, j), coeffs in products
            ],
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("left_degree", "left_index", "right_degree", "right_index", "result"))
        for (d1, i, d2, j), coeffs in products:
            writer.writerow((d1, i, d2, j, " ".join(format_fraction(c) for c in coeffs)))
        out.write(buf.getvalue())
    else:
        out.write("representatives\n")
        for n, i, r in reps:
            out.write(f"  [{n},{i}] {r}\n")
        out.write("products\n")
        for (d1, i, d2, j), coeffs in products:
            terms = [f"{format_fraction(c)}*[{d1 + d2},{k}]" for k, c in enumerate(coeffs) if c]
            out.write(f"  [{d1},{i}]*[{d2},{j}] = {' + '.join(terms) or '0'}\n")
    return EXIT_OK


def cmd_example(args, out, err) -> int:
    if args.name not in models.FIXTURES:
        err.write(f"unknown example {args.name!r}; known: {', '.join(sorted(models.FIXTURES))}\n")
        return EXIT_PARSE
    truncation = args.max_degree or models.DEFAULT_TRUNCATION
    spec = models.fixture(args.name, truncation)
    if args.emit:
        out.write(serialize(spec))
        return EXIT_OK
    _write_betti(spec, args.format, out)
    return EXIT_OK


def _verify_one(spec: ComplexSpec, err, label: str) -> bool:
    mine = engine.betti(spec, spec.max_degree)
    theirs = oracle.dense_betti(spec, spec.max_degree)
    if mine != theirs:
        err.write(f"{label}: engine {mine} != oracle {theirs}\n")
        return False
    return True


def cmd_verify(args, out, err) -> int:
    if args.random is not None:
        from .randomspec import random_spec

        failures = 0
        for k in range(args.random):
            seed = args.seed + k
            spec = random_spec(seed, truncation=args.max_degree or 10)
            failures += not _verify_one(spec, err, f"seed {seed}")
        out.write(f"{args.random - failures}/{args.random} random specs agree\n")
        return EXIT_OK if failures == 0 else EXIT_MISMATCH
    if args.file is None:
        err.write("verify needs a file or --random\n")
        return EXIT_PARSE
    spec = _load(args)
    if not _verify_one(spec, err, args.file):
        return EXIT_MISMATCH
    out.write(f"engine and oracle agree through degree {spec.max_degree}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopcohom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(sp, optional_file=False):
        sp.add_argument("file", nargs="?" if optional_file else None, default="-",
                        help="problem document, '-' for stdin")
        return sp

    fmt = dict(choices=("table", "json", "csv"), default="table")

    with_file(sub.add_parser("check", help="validate a problem document"), True)
    for name, helptext in (("betti", "Betti numbers"), ("ring", "representatives and products"),
                           ("dims", "dimensions of the complex")):
        sp = with_file(sub.add_parser(name, help=helptext), True)
        sp.add_argument("--max-degree", type=int, default=None)
        sp.add_argument("--format", **fmt)

    sp = sub.add_parser("example", help="run or emit a built-in fixture")
    sp.add_argument("name")
    sp.add_argument("--emit", action="store_true", help="print the problem document instead")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--format", **fmt)

    sp = sub.add_parser("verify", help="compare engine and dense oracle")
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--random", type=int, default=None, metavar="COUNT",
                    help="check COUNT seeded random specs instead of a file")
    sp.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {
    "check": cmd_check,
    "betti": cmd_betti,
    "ring": cmd_ring,
    "dims": cmd_dims,
    "example": cmd_example,
    "verify": cmd_verify,
}


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ValidationError as exc:
        err.write("invalid\n" + str(exc.report) + "\n")
        return EXIT_INVALID
    except SpecError as exc:
        err.write(f"invalid: {exc}\n")
        return EXIT_INVALID
    except ResourceCapExceeded as exc:
        err.write(f"resource cap exceeded: {exc}\n")
        return EXIT_RESOURCE
    except DegreeOutOfRange as exc:
        err.write(f"{exc}\n")
        return EXIT_PARSE
    except InconsistencyError as exc:
        err.write(f"inconsistency: {exc}\n")
        return EXIT_MISMATCH
    except OSError as exc:
        err.write(f"{exc}\n")
        return EXIT_PARSE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
