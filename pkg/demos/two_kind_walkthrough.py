"""Counting partitions with parts of two kinds, three independent ways.

We count partitions of 4 with at most 2 first-kind parts (each even, at
most 4) and at most 2 second-kind parts (each at most 3).  The answer is 6,
and we get it from a generating function, from a convolution, and by
writing the six partitions down.
"""

from qpartitions import (
    TwoKindQuery,
    pbar_convolution,
    pbar_enumerate,
    pbar_genfun,
    pbar_gf,
)

query = TwoKindQuery(r=2, n1=2, n2=3, k1=2, k2=2, n=4)

print("query:", query)
print()

gf = pbar_gf(query.r, query.n1, query.n2, query.k1, query.k2)
print("generating function:", gf)
print("  coefficient of q^4:", pbar_genfun(query))
print("  convolution route: ", pbar_convolution(query))

listing = pbar_enumerate(query)
print("  enumeration route: ", len(listing))
print()

print("the six partitions (second-kind parts carry an apostrophe):")
for item in listing:
    print("   ", item.render())
print()

# The coefficient list of the generating function is the whole table of
# counts for this query family, one entry per target.
print("counts for every target n:")
for n, value in enumerate(gf.coeffs):
    print(f"    n={n:2d}  {value}")
