#!/usr/bin/env python3
"""Recompute the shipped reference tables from scratch and report every
discrepancy, then run the witness scan.

Typical run (about a second):

    python scripts/reproduce_tables.py

Push the table bound or the scan bound up for a longer sitting:

    python scripts/reproduce_tables.py --p-max 500 --n-max 89441
"""

import argparse
import sys
import time

from hyperchar.harness import (
    conjecture_scan,
    load_fixtures,
    shipped_fixture_path,
    table_rows,
    validate_fixture,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p-max", type=int, default=199, help="regenerate rows up to this prime")
    parser.add_argument("--n-max", type=int, default=10001, help="witness scan bound (odd)")
    parser.add_argument("--threads", type=int, default=1, help="worker processes")
    args = parser.parse_args()

    t0 = time.perf_counter()
    fresh = {(int(r.p), r.order): r.generators for r in table_rows(args.p_max, args.threads)}
    shipped = {
        (int(r.p), r.order): r.generators
        for r in load_fixtures(shipped_fixture_path())
        if r.p <= args.p_max
    }
    diffs = [
        key
        for key in sorted(set(fresh) | set(shipped))
        if fresh.get(key) != shipped.get(key)
    ]
    print(f"table rows recomputed: {len(fresh)} (p <= {args.p_max}) "
          f"in {time.perf_counter() - t0:.2f}s; diffs vs shipped fixture: {len(diffs)}")
    for key in diffs:
        print(f"  {key}: shipped={shipped.get(key)} fresh={fresh.get(key)}")

    t0 = time.perf_counter()
    report = validate_fixture(load_fixtures(shipped_fixture_path()), args.threads)
    print(f"route cross-validation: {report.passed}/{report.total} rows passed "
          f"in {time.perf_counter() - t0:.2f}s")
    for row, computed, route in report.failures:
        print(f"  MISMATCH {row.as_line()} via {route}: {computed.generators}")

    t0 = time.perf_counter()
    scan = conjecture_scan(args.n_max)
    print(f"witness scan to {args.n_max}: {len(scan.verified)} witnesses, "
          f"{len(scan.failures)} failures in {time.perf_counter() - t0:.2f}s")
    for n in scan.failures:
        print(f"  COUNTEREXAMPLE: no witness for n={n}")

    ok = not diffs and not report.failures and not scan.failures
    print("all clear" if ok else "DISCREPANCIES FOUND")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
