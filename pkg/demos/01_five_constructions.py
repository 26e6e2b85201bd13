"""Five roads to the same integer matrix.

The order-n Krawtchouk matrix can be built by expanding generating
functions, by summing signed binomials, by symmetrically tensoring the 2x2
Hadamard matrix, by collapsing the 2^n x 2^n Sylvester matrix along binary
weights, and by exhaustively summing signed lattice paths.  This script
builds all five for a few orders and shows they agree entry for entry.
"""

from krawtchouk import (
    k_binsum,
    k_genfunc,
    k_symmetric,
    oracle_matrix,
    reduce_to_symmetric,
    sym_group_power,
    twiston_energy,
)
from krawtchouk.sympow import MAT_H

for n in (3, 5, 8):
    print(f"--- order {n} ---")
    a = k_genfunc(n).mat
    print(a.pretty())

    b = k_binsum(n).mat
    c = sym_group_power(MAT_H, n)
    d = oracle_matrix(n, 1, -1)
    print("generating function == binomial sum:  ", a == b)
    print("generating function == H tensor power:", a == c)
    print("generating function == 2^n path sums: ", a == d)

    twiston_ok = all(twiston_energy(n, q, p) == a[p, q]
                     for p in range(n + 1) for q in range(n + 1))
    print("generating function == twiston energies:", twiston_ok)

    # the symmetric variant, directly and through the Sylvester reduction
    print("column-scaled == Sylvester-reduced:   ",
          k_symmetric(n) == reduce_to_symmetric(n))
    print()

print("A single entry three ways (n=6, p=3, q=3):")
print("  binomial sum   :", k_binsum(6)[3, 3])
print("  path sum       :", oracle_matrix(6)[3, 3])
print("  twiston energy :", twiston_energy(6, 3, 3))
