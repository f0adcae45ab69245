"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 validation error, 3 mismatch or failed
check, 4 matrix size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .diagram import DiagramError, TangleWord, validate
from .dsl import DSLSyntaxError, DSLValidationError, parse_dsl
from .ktheory import (
    DEFAULT_MATRIX_CAP,
    MatrixCapError,
    NegativeCoefficientError,
    evaluate_closed,
    operator_matrix,
    poincare_table,
    render_matrix,
)
from .relations import FAMILIES, FamilySummary, iter_results
from .skein import evaluate_by_resolution

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str | None, stdin: TextIO) -> str:
    if path in (None, "-"):
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def _load(text: str, m: int, bottom: tuple[int, ...] | None = None) -> TangleWord:
    try:
        return parse_dsl(text, m, bottom)
    except DSLSyntaxError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from None
    except DSLValidationError as exc:
        raise CliError(f"invalid diagram: {exc}", EXIT_VALIDATION) from None


def _require_closed(word: TangleWord) -> None:
    if len(word.bottom) or len(validate(word)):
        raise CliError("invalid diagram: word is not closed", EXIT_VALIDATION)


def _cap_sign(args) -> int:
    return -1 if args.debug_flip_cap_sign else 1


def cmd_eval(args, out: TextIO, stdin: TextIO) -> int:
    word = _load(_read(args.path, stdin), args.m)
    _require_closed(word)
    value = evaluate_closed(word, cap_sign=_cap_sign(args))
    payload: dict = {"invariant": value.to_json()}
    lines = [str(value)]
    code = EXIT_OK
    if args.check_resolution:
        res = evaluate_by_resolution(word)
        verdict = "EQUAL" if res == value else "DIFFER"
        payload["resolution"] = res.to_json()
        payload["verdict"] = verdict
        lines += [f"resolution: {res}", verdict]
        code = EXIT_OK if verdict == "EQUAL" else EXIT_MISMATCH
    out.write(json.dumps(payload) + "\n" if args.json else "\n".join(lines) + "\n")
    return code


def cmd_poincare(args, out: TextIO, stdin: TextIO) -> int:
    word = _load(_read(args.path, stdin), args.m)
    _require_closed(word)
    if not word.is_crossingless:
        raise CliError("invalid diagram: poincare needs a crossingless graph", EXIT_VALIDATION)
    try:
        table = poincare_table(word)
    except NegativeCoefficientError as exc:
        raise CliError(f"positivity violated: {exc}", EXIT_MISMATCH) from None
    if args.json:
        out.write(json.dumps({"poincare": {str(i): d for i, d in table.items()}}) + "\n")
    else:
        out.write("".join(f"{i} {d}\n" for i, d in table.items()))
    return EXIT_OK


def _bottom(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise CliError(f"bad --bottom {text!r}: labels must be integers", EXIT_PARSE) from None


def cmd_matrix(args, out: TextIO, stdin: TextIO) -> int:
    if args.expr is not None and args.path is not None:
        raise CliError("give either a file or --expr, not both", EXIT_PARSE)
    text = args.expr if args.expr is not None else _read(args.path, stdin)
    word = _load(text, args.m, _bottom(args.bottom))
    try:
        mat = operator_matrix(word.gens, word.bottom, cap=args.matrix_cap, cap_sign=_cap_sign(args))
    except MatrixCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    out.write(render_matrix(mat))
    return EXIT_OK


def cmd_test_relations(args, out: TextIO, stdin: TextIO) -> int:
    families = args.family or list(FAMILIES)
    unknown = [f for f in families if f not in FAMILIES]
    if unknown:
        raise CliError(f"unknown families {unknown}; choose from {list(FAMILIES)}", EXIT_PARSE)
    summaries = {f: FamilySummary(f) for f in families}
    rows = []
    try:
        for res in iter_results(args.m, args.max_n, families, cap=args.matrix_cap, cap_sign=_cap_sign(args)):
            s = summaries[res.relation.family]
            if res.ok:
                s.passed += 1
            else:
                s.failed += 1
            rows.append(res)
    except MatrixCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    failed = sum(s.failed for s in summaries.values())
    if args.json:
        payload = {
            "m": args.m,
            "max_n": args.max_n,
            "rows": [
                {"relation": r.relation.describe(), "ok": r.ok, **({"error": r.error} if r.error else {})}
                for r in rows
            ],
            "summary": {f: {"passed": s.passed, "failed": s.failed} for f, s in summaries.items()},
        }
        out.write(json.dumps(payload) + "\n")
    else:
        for r in rows:
            tail = f"  [{r.error}]" if r.error else ""
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r.relation.describe()}{tail}\n")
        out.write("-- summary\n")
        for f, s in summaries.items():
            out.write(f"{f:10s} {s.passed:5d} passed {s.failed:5d} failed\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True, help="rank parameter of sl(m), at least 2")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--matrix-cap", type=int, default=DEFAULT_MATRIX_CAP, metavar="ENTRIES")
    common.add_argument("--debug-flip-cap-sign", action="store_true", help=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="slmtangle", description="sl(m) tangle invariants from K-theory operators")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a closed diagram")
    e.add_argument("path", nargs="?", help="DSL file, '-' or omitted for stdin")
    e.add_argument("--check-resolution", action="store_true", help="also evaluate by skein resolution")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("test-relations", parents=[common], help="run the relation battery")
    t.add_argument("--max-n", type=int, default=3)
    t.add_argument("--family", action="append", help="restrict to a family (repeatable)")
    t.set_defaults(func=cmd_test_relations)

    pc = sub.add_parser("poincare", parents=[common], help="Poincare table of a crossingless graph")
    pc.add_argument("path", nargs="?")
    pc.set_defaults(func=cmd_poincare)

    mx = sub.add_parser("matrix", parents=[common], help="dump the operator matrix of a word")
    mx.add_argument("path", nargs="?")
    mx.add_argument("--expr", help="inline DSL text, e.g. 'cross 1 1; cross 1 2'")
    mx.add_argument("--bottom", help="bottom labels, comma separated")
    mx.set_defaults(func=cmd_matrix)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.m < 2:
        err.write("error: --m must be at least 2\n")
        return EXIT_PARSE
    try:
        return args.func(args, out, stdin)
    except CliError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except DiagramError as exc:
        err.write(f"error: invalid diagram: {exc}\n")
        return EXIT_VALIDATION


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
