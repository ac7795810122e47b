#!/usr/bin/env python3
"""Time the exact identity engine on algebras of growing dimension.

The headline number is the full catalog (including the degree-(3,1)
identity, whose polarization enumerates ~dim^4/6 basis tuples) on the
dimension-16 matrix algebra.

    python3 scripts/benchmark_identities.py [max_matrix_size]
"""
from __future__ import annotations

import sys
import time

from nonassoc.algebra import matrix_algebra
from nonassoc.constructions import hadamard_algebra
from nonassoc.identities import IDENTITY_NAMES, check_identity


def suite(algebra, label: str) -> float:
    start = time.monotonic()
    verdicts = []
    for name in IDENTITY_NAMES:
        t = time.monotonic()
        v = check_identity(algebra, name)
        verdicts.append((name, v.passed, time.monotonic() - t))
    elapsed = time.monotonic() - start
    print(f"{label} (dim {algebra.dim}): {elapsed:.3f}s total")
    for name, passed, dt in verdicts:
        print(f"    {name:20s} {'pass' if passed else 'fail':4s} {dt:7.3f}s")
    return elapsed


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for n in range(2, max_n + 1):
        suite(matrix_algebra(n), f"matrix algebra {n}x{n}")
    suite(hadamard_algebra(4, 4), "entrywise algebra 4x4")
    total = suite(matrix_algebra(max_n), f"matrix algebra {max_n}x{max_n} (repeat)")
    budget = 5.0
    print(f"\ndim-{max_n * max_n} full suite: {total:.3f}s "
          f"({'within' if total < budget else 'OVER'} the {budget:.0f}s budget)")
    return 0 if total < budget else 1


if __name__ == "__main__":
    sys.exit(main())
