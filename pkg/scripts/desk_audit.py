#!/usr/bin/env python3
"""Full desk-scale audit: run every verification layer and print a summary.

Covers the three-way dimension agreement, the elimination oracle, the
rewriting basis checks (right multiplications, all overlaps up to degree 6
over one generator and degree 5 over two, the three named shapes), the
ambiguity-family census, and the growth statistic.  Exits nonzero if any
layer fails.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dendriform.gsbcheck import (
    check_local_confluence,
    check_named_cases,
    coverage_audit,
    right_mult_sweep,
)
from dendriform.oracle import build_relation_matrix, enumerate_dd_words, quotient_dim
from dendriform.series import dim_closed, dimension_table, gk_statistic


def section(title):
    print(f"\n== {title} ==")


def main() -> int:
    failures = 0
    t0 = time.time()

    section("dimension table, three methods, degrees 1..30")
    for n in (1, 2, 3):
        try:
            table = dimension_table(30, n, "all")
            print(f"n={n}: agree, dim at degree 10 = {table.rows[9].dim}")
        except RuntimeError as exc:
            print(f"n={n}: FAIL ({exc})")
            failures += 1

    section("elimination oracle vs closed form")
    for n, max_degree in ((1, 5), (2, 4)):
        for m in range(1, max_degree + 1):
            got = quotient_dim(m, n)
            expected = dim_closed(m, n)
            counted = len(enumerate_dd_words(m, n))
            status = "ok" if got == expected == counted else "FAIL"
            if status == "FAIL":
                failures += 1
            print(f"n={n} degree={m}: quotient {got}, closed {expected}, words {counted} [{status}]")
    for m, n in ((4, 1), (5, 1), (4, 2)):
        same = build_relation_matrix(m, n, True).rank == build_relation_matrix(m, n, False).rank
        if not same:
            failures += 1
        print(f"redundant rows at n={n} degree={m}: rank unchanged [{'ok' if same else 'FAIL'}]")

    section("rewriting basis checks")
    sweeps = [
        ("right multiplication, total degree <= 6, n=1", right_mult_sweep(6, 1)),
        ("overlaps, degree <= 6, n=1", check_local_confluence(6, 1)),
        ("overlaps, degree <= 5, n=2", check_local_confluence(5, 2)),
        ("named overlap shapes, distinct generators", check_named_cases(6)),
    ]
    for label, reports in sweeps:
        bad = [r for r in reports if not r.ok]
        if bad:
            failures += 1
            print(f"{label}: {len(bad)}/{len(reports)} FAILED")
            for r in bad[:5]:
                print(f"  at {r.ambiguity_word}: residual {r.residual}")
        else:
            print(f"{label}: {len(reports)} checks, all residuals zero")

    section("ambiguity family census, degree <= 6, n=2")
    census = coverage_audit(6, 2)
    for family in sorted(census):
        print(f"{family}: {census[family]}")
    nested = [k for k in census if k.startswith("inclusion:")]
    if len(nested) != 9 or "right_mult:F2" not in census or "right_mult:F3" not in census:
        print("census is missing a family: FAIL")
        failures += 1

    section("growth statistic, n=1")
    for d in (100, 1000, 10000):
        print(f"degree {d}: {gk_statistic(d, 1).value}")

    print(f"\ntotal time {time.time() - t0:.1f}s")
    print("AUDIT FAILED" if failures else "AUDIT PASSED")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
