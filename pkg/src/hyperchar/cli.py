"""Command-line surface: generating sets, table regeneration, fixture
verification, and the conjecture scan.

Exit codes: 0 success, 1 result mismatch or conjecture failure, 2 invalid
arguments, 3 route not applicable to the requested order, 4 I/O failure.
Data streams are byte-deterministic: stdout never carries timing; timing
goes to stderr, or into an explicit elapsed_ms field for JSON when --timing
is set.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .characteristic import characteristic_bitset, minimal_generating_set
from .closed_form import gen_set_closed_form
from .harness import (
    FixtureParseError,
    conjecture_scan,
    load_fixtures,
    shipped_fixture_path,
    table_rows,
    validate_fixture,
    worker_count,
)
from .modular import Prime, is_prime
from .norm_criterion import candidate_sums, generating_set_via_norm

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_ARGS = 2
EXIT_INAPPLICABLE = 3
EXIT_IO = 4


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _format_plain(gens: tuple[int, ...]) -> str:
    return "{" + ", ".join(str(g) for g in gens) + "}"


def _format_braced(gens: tuple[int, ...]) -> str:
    return "{" + " ".join(str(g) for g in gens) + "}"


def _emit_record(route: str, p: int, n: int, gens: tuple[int, ...], fmt: str,
                 witnesses: Optional[dict] = None, elapsed_ms: Optional[float] = None,
                 lone_route: bool = True) -> None:
    if fmt == "plain":
        prefix = "" if lone_route else f"{route} "
        print(f"{prefix}{_format_plain(gens)}")
    elif fmt == "csv":
        print(f"{p},{n},{route},{_format_braced(gens)}")
    else:
        record: dict = {"p": p, "n": n, "route": route, "generators": list(gens)}
        if witnesses is not None:
            record["witnesses"] = {str(s): list(c) for s, c in sorted(witnesses.items())}
        if elapsed_ms is not None:
            record["elapsed_ms"] = round(elapsed_ms, 3)
        print(json.dumps(record, sort_keys=True))


def cmd_genset(args: argparse.Namespace) -> int:
    try:
        p = Prime(args.p)
    except ValueError:
        return _fail(EXIT_BAD_ARGS, f"--p must be prime, got {args.p}")
    n = args.n
    if n < 1 or (p - 1) % n != 0:
        return _fail(EXIT_BAD_ARGS, f"--n must divide p-1 = {p - 1}, got {n}")

    requested = ["closed", "dp", "norm"] if args.route == "all" else [args.route]
    if args.route == "all":
        requested = [r for r in requested if _route_applies(r, n)]
    else:
        if not _route_applies(args.route, n):
            return _fail(EXIT_INAPPLICABLE, _why_inapplicable(args.route, n))

    outputs = []
    for route in requested:
        witnesses = None
        t0 = time.perf_counter()
        if route == "dp":
            gens = minimal_generating_set(characteristic_bitset(p, n)).generators
        elif route == "closed":
            gens = gen_set_closed_form(p, n).generators
        else:
            gens = generating_set_via_norm(p, Prime(n)).generators
            witnesses = candidate_sums(p, Prime(n)).witnesses
        elapsed = (time.perf_counter() - t0) * 1000.0
        outputs.append((route, gens, witnesses, elapsed))

    lone = args.route != "all"
    for route, gens, witnesses, elapsed in outputs:
        _emit_record(
            route, int(p), n, gens, args.format,
            witnesses=witnesses,
            elapsed_ms=elapsed if (args.timing and args.format == "json") else None,
            lone_route=lone,
        )
        if args.timing:
            print(f"# {route}: {elapsed:.3f} ms", file=sys.stderr)

    distinct = {gens for _, gens, _, _ in outputs}
    if len(distinct) > 1:
        return _fail(EXIT_MISMATCH, f"routes disagree for p={int(p)}, n={n}: {sorted(distinct)}")
    return EXIT_OK


def _route_applies(route: str, n: int) -> bool:
    if route == "dp":
        return True
    if route == "closed":
        return n in (1, 2, 3, 4)
    return is_prime(n)


def _why_inapplicable(route: str, n: int) -> str:
    if route == "closed":
        return f"closed-form route covers orders 1..4 only, got n={n}"
    return f"norm route covers prime orders only, got n={n}"


def cmd_table(args: argparse.Namespace) -> int:
    if args.p_max < 2:
        return _fail(EXIT_BAD_ARGS, f"--p-max must be at least 2, got {args.p_max}")
    try:
        workers = worker_count()
    except ValueError as exc:
        return _fail(EXIT_BAD_ARGS, str(exc))
    rows = table_rows(args.p_max, workers)
    if args.format == "fixture":
        lines = [row.as_line() for row in rows]
    else:
        lines = [
            json.dumps(
                {"p": int(r.p), "n": r.order, "route": "dp", "generators": list(r.generators)},
                sort_keys=True,
            )
            for r in rows
        ]
    payload = "\n".join(lines) + "\n"
    if args.output == "-":
        sys.stdout.write(payload)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.output}: {exc}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    path = args.fixture if args.fixture else shipped_fixture_path()
    try:
        rows = load_fixtures(path)
    except FixtureParseError as exc:
        return _fail(EXIT_BAD_ARGS, str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read {path}: {exc}")
    if not rows:
        print("warning: fixture is empty, nothing to verify", file=sys.stderr)
    try:
        workers = worker_count()
    except ValueError as exc:
        return _fail(EXIT_BAD_ARGS, str(exc))
    report = validate_fixture(rows, workers)
    print(f"total={report.total} passed={report.passed} failed={len(report.failures)}")
    for row, computed, route in report.failures:
        print(
            f"mismatch: {row.as_line()} route={route} computed={_format_braced(computed.generators)}",
            file=sys.stderr,
        )
    for note in report.notes:
        if "unexpected" in note:
            print(f"note: {note}", file=sys.stderr)
    for route, ms in sorted(report.route_ms.items()):
        print(f"# {route}: {ms:.1f} ms total", file=sys.stderr)
    return EXIT_OK if not report.failures else EXIT_MISMATCH


def cmd_conjecture(args: argparse.Namespace) -> int:
    if args.n_max % 2 == 0 or args.n_max < 3:
        return _fail(EXIT_BAD_ARGS, f"--n-max must be odd and at least 3, got {args.n_max}")
    report = conjecture_scan(args.n_max)
    print("n,a,b,prime")
    for w in report.verified:
        print(f"{w.n},{w.a},{w.b},{w.prime}")
    if report.failures:
        for n in report.failures:
            print(f"COUNTEREXAMPLE: no witness for n={n}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"# verified {len(report.verified)} odd values up to {report.n_max}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperchar",
        description="Generating sets of characteristic submonoids of quotient hyperfields F_p/G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_genset = sub.add_parser("genset", help="compute one generating set")
    p_genset.add_argument("--p", type=int, required=True, help="prime modulus")
    p_genset.add_argument("--n", type=int, required=True, help="subgroup order, must divide p-1")
    p_genset.add_argument("--route", choices=("dp", "closed", "norm", "all"), default="dp")
    p_genset.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p_genset.add_argument("--timing", action="store_true", help="report timing (stderr; JSON field)")
    p_genset.set_defaults(func=cmd_genset)

    p_table = sub.add_parser("table", help="emit rows for all primes up to a bound")
    p_table.add_argument("--p-max", type=int, required=True)
    p_table.add_argument("--format", choices=("fixture", "jsonl"), default="fixture")
    p_table.add_argument("--output", default="-", help="output path, '-' for stdout")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="cross-validate a fixture file")
    p_verify.add_argument("--fixture", default=None, help="fixture path (default: shipped reference)")
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser("conjecture", help="scan odd n for Gaussian-prime witnesses")
    p_conj.add_argument("--n-max", type=int, required=True)
    p_conj.set_defaults(func=cmd_conjecture)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
