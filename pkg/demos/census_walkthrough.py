"""Walk through the tuple census at c = 6 and c = 7 and the maps that shrink it.

Run: python3 demos/census_walkthrough.py
"""
from twobridge import census, formulas

print("K(6): tuple -> branch, image, (dw, dz)")
for t in census.enumerate_K(6):
    print(f"  {t!s:<14} f{census.g_branch(t)} -> {census.apply_g(t)!s:<14} {census.delta_wz_of_g(t)}")

print("\nK^P(7): palindrome -> branch, image")
for t in census.enumerate_KP(7):
    print(f"  {t!s:<20} p{census.gP_branch(t)} -> {census.apply_gP(t)}")

print("\n  c  |K(c)|  |K^P(c)|  knots (mirrors distinct)")
for c in range(3, 15):
    K, KP = census.enumerate_K(c), census.enumerate_KP(c)
    print(f"{c:>3} {len(K):>7} {len(KP):>9} {formulas.ernst_sumners(c):>10}")
