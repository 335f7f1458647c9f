#!/usr/bin/env python3
"""Map the vanishing locus of the resultant over an (a1, a2) grid.

With a3 = 1 fixed at n = 3, the canonical resultant is a polynomial in
(a1, a2). Exact zeros rarely land on grid points, so the map shows the sign
instead: the boundaries between '+' and '-' regions trace the locus where
the gradient system becomes solvable and the indicatrix degenerates. The
same grid is scriptable as JSON lines via `symres sweep`.
"""
from fractions import Fraction

from symres import SymmetricCubic, closed_form_resultant

STEP = Fraction(1, 8)
LO, HI = Fraction(-2), Fraction(2)
COUNT = int((HI - LO) / STEP) + 1

print("sign of the canonical resultant; a2 left to right from "
      f"{LO} to {HI}, a1 top to bottom, step {STEP}; '0' = exact zero\n")
zeros = []
for i in range(COUNT):
    a1 = LO + i * STEP
    row = []
    for j in range(COUNT):
        a2 = LO + j * STEP
        value = closed_form_resultant(SymmetricCubic(3, a1, a2, 1)).canonical_value
        if value == 0:
            row.append("0")
            zeros.append((a1, a2))
        else:
            row.append("+" if value > 0 else "-")
    print("".join(row))

print()
print("grid points landing exactly on the locus:", ", ".join(
    f"(a1={a1}, a2={a2})" for a1, a2 in zeros))
print("(a1, a2) = (0, 0) is the pure product cubic s3, whose gradient system")
print("{x2*x3, x1*x3, x1*x2} visibly vanishes at (1, 0, 0)")
