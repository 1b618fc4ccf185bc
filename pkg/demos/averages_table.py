"""Average unoriented genus and crosscap number, with the two corrections.

Run: python3 demos/averages_table.py
"""
from fractions import Fraction

from twobridge import formulas

print(f"{'c':>3} {'avg genus':>12} {'c/3 + 1/9':>10} {'eps1':>12} {'eps2':>10} {'avg crosscap':>13}")
for c in list(range(3, 21)) + [30, 50, 100]:
    row = formulas.aggregate_row(c)
    print(f"{c:>3} {float(row.GammaBar):>12.6f} {float(Fraction(c, 3) + Fraction(1, 9)):>10.4f} "
          f"{float(row.eps1):>12.3e} {float(row.eps2):>10.3e} {float(row.gammaBar):>13.6f}")
