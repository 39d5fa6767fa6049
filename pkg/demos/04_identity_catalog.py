"""
Classical identities
====================

Simson, Gelin-Cesaro, Hoggatt-Bergum, Cerin and the F*L product rule,
checked exactly over a window of indices.  Residuals (left minus right)
are reported, so a broken identity shows by how much it fails.
"""

from fibgrid.identities import check_cerin, check_simson, run_suite

for report in run_suite((-30, 30), cerin_max_i=6):
    print(f"{report.identity_name:<24} {'ok' if report.passed else 'FAILED'}")

print("Simson residuals n=-3..3:", [check_simson(n) for n in range(-3, 4)])

# Two Cerin alternating sums are commonly printed without their minus sign.
# The residual of that version is exactly twice the (negated) product:
print("Cerin, i=0, k=0, corrected:", check_cerin(0, 0))
print("Cerin, i=0, k=0, printed  :", check_cerin(0, 0, as_printed=True))
