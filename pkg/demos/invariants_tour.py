"""Conversions and invariants of a few 2-bridge knots and links.

Run: python3 demos/invariants_tour.py
"""
from fractions import Fraction

from twobridge import cf, invariants, oracle

for f in [Fraction(1, 3), Fraction(2, 5), Fraction(4, 15), Fraction(23, 85), Fraction(3, 8)]:
    add = cf.to_positive_additive(f)
    sub = cf.to_positive_subtractive(f)
    rep = invariants.formula_report(f)
    res = oracle.oracle_invariants(oracle.diagram_for(f))
    print(f"{cf.format_fraction(f):>6}  {cf.format_cf('add', add):<18} {cf.format_cf('sub', sub):<20} "
          f"c={rep.crossing_number:<3} {rep.link_class.name:<20} "
          f"w={rep.w} z={rep.z} genus={rep.unoriented_genus} crosscap={rep.crosscap}  "
          f"| state sum: genus={res.gamma_unoriented} crosscap={res.crosscap}")
    if f.denominator % 2:
        print(f"        even form {cf.to_even_subtractive(f)}")
