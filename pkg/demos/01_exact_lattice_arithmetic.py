"""Exact integer lattice arithmetic: normal forms and quotient groups.

Everything in rootprimes runs on unbounded Python integers, so these
computations are exact; there is no floating point anywhere.
"""

from rootprimes import (
    FinAbGroup,
    IntMatrix,
    hermite_normal_form,
    p_torsion_free,
    quotient_group,
    relative_divisors,
    smith_normal_form,
)

# Smith normal form diagonalizes any integer matrix by unimodular row and
# column operations.  The diagonal is the divisibility chain d1 | d2 | ...
m = IntMatrix.from_rows([[2, 4], [6, 8]])
snf = smith_normal_form(m)
print("matrix        ", m)
print("divisors      ", snf.divisors)
print("U @ M @ V     ", snf.U @ m @ snf.V)
print("det U, det V  ", snf.U.det(), snf.V.det())
print()

# The Hermite normal form is the canonical echelon basis of the row lattice.
h, u = hermite_normal_form(IntMatrix.from_rows([[4, 6, 2], [2, 4, 2], [6, 10, 4]]))
print("Hermite basis rows:", h.to_rows())
print()

# Quotients of Z^r by a row lattice come out in invariant-factor form.
g = quotient_group(2, IntMatrix.from_rows([[2, 0], [0, 6]]))
print("Z^2 / <(2,0), (0,6)> =", g)
print("has 2-torsion:", not p_torsion_free(g, 2), "| has 5-torsion:", not p_torsion_free(g, 5))
print()

# Relative elementary divisors measure how one lattice sits inside another.
sub = IntMatrix.from_rows([[2, 0], [0, 3]])
print("divisors of <(2,0),(0,3)> inside Z^2:", relative_divisors(sub, IntMatrix.identity(2)))
print("abstract quotient:", quotient_group(2, sub), "=", FinAbGroup((6,), 0))
