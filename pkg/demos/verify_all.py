"""Run every registered identity verifier on its default grid.

Each verifier compares both sides of its identity exactly, polynomial by
polynomial or count by count, over a finite grid.  The enumeration-backed
checks pit generating functions against brute force, so a pass here means
the algebra and the combinatorics tell the same story.
"""

import time

from qpartitions import IDENTITY_IDS, run_identity

total_checked = 0
all_passed = True
start = time.perf_counter()

for identity_id in IDENTITY_IDS:
    report = run_identity(identity_id)
    total_checked += report.checked
    all_passed &= report.passed
    print(report.summary())
    for failure in report.failures[:3]:
        print(f"    {failure.params}: {failure.lhs} != {failure.rhs}")

elapsed = time.perf_counter() - start
print()
print(f"{total_checked} grid points checked in {elapsed:.2f}s;",
      "all identities hold" if all_passed else "FAILURES FOUND")
