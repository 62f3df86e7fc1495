"""The partition number p(n) as a short sum of two-kind counts.

The expansion needs only about 1 + sqrt(n/2) summands: far fewer than the
n/2 + 1 indices the raw sum ranges over, because early summands shift their
target below zero and vanish.  Everything here is exact integer arithmetic.
"""

import math

from qpartitions import (
    corollary_lower_index,
    corollary_term_count,
    corollary_terms,
    p_by_corollary,
    partition_p,
)

print("the expansion of p(6), term by term:")
terms = corollary_terms(6)
print(f"    terms: {terms}")
print(f"    p(6) = {' + '.join(map(str, terms))} = {p_by_corollary(6)}")
print()

print("p(n) by the short sum, cross-checked against p(n, n, n):")
print("    n    p(n)      terms used")
for n in (0, 1, 5, 10, 20, 30, 40, 50, 60):
    value = p_by_corollary(n)
    assert value == partition_p(n)
    print(f"    {n:3d}  {value:8d}  {corollary_term_count(n)}")
print()

print("summand count grows like sqrt(n/2):")
print("    n     first index   count   1 + sqrt(n/2)")
for n in (10, 50, 100, 150, 200):
    count = corollary_term_count(n)
    print(
        f"    {n:4d}  {corollary_lower_index(n):11d}   {count:5d}   "
        f"{1 + math.sqrt(n / 2):6.2f}"
    )
