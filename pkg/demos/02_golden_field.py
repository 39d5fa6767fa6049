"""
Exact arithmetic with the golden ratio
======================================

Q(sqrt 5) numbers are stored as p + q*sqrt(5) with exact rational p, q.
Binet's formulas can then be evaluated without any rounding.
"""

from fibgrid import PHI, PSI, SQRT5, binet_fib, binet_lucas, fib
from fibgrid.qfield import power

print("phi      =", PHI)
print("psi      =", PSI)
print("phi*psi  =", PHI * PSI)
print("phi+psi  =", PHI + PSI)
print("phi**2   =", PHI**2, " (= phi + 1:", PHI**2 == PHI + 1, ")")
print("1/phi    =", 1 / PHI)
print("norm(phi) =", PHI.norm())

# Binet: powers of phi carry F and L in their two components
for n in (10, 11, -7, 50):
    print(f"n={n:>3}  binet F = {binet_fib(n)}   binet L = {binet_lucas(n)}")

# phi**n = (L(n) + F(n) sqrt 5) / 2
n = 30
print(power(PHI, n) == (binet_lucas(n) + fib(n) * SQRT5) / 2)
