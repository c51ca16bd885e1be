#!/usr/bin/env python3
"""Exhaustively audit the hyperfield axioms for every quotient F_p/G up to a
prime bound and print one verdict per quotient.

    python scripts/audit_axioms.py --p-max 31
"""

import argparse
import sys

from hyperchar.hyperfield import QuotientHyperfield, check_axioms
from hyperchar.modular import is_prime


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p-max", type=int, default=31)
    args = parser.parse_args()

    failures = 0
    for p in range(2, args.p_max + 1):
        if not is_prime(p):
            continue
        for n in range(1, p):
            if (p - 1) % n != 0:
                continue
            H = QuotientHyperfield(p, n)
            report = check_axioms(H)
            verdict = "ok" if report.all_ok else "FAIL"
            print(f"p={p:>3} n={n:>3} classes={len(H.classes):>3} {verdict}")
            if not report.all_ok:
                failures += 1
                for axiom, witness in report.counterexamples:
                    print(f"      {axiom}: {witness}")
    print(f"{'all quotients passed' if failures == 0 else f'{failures} quotients FAILED'}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
