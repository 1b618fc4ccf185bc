"""Exhaustive state-sum check of the genus and crosscap formulas for every diagram up to c crossings.

Run: python3 demos/oracle_crosscheck.py [max_c]
"""
import sys

from twobridge import cf, invariants, oracle

max_c = int(sys.argv[1]) if len(sys.argv) > 1 else 10
for c in range(3, max_c + 1):
    fractions = cf.fractions_with_crossing_number(c)
    gaps = agree = 0
    for f in fractions:
        res = oracle.oracle_invariants(oracle.diagram_for(f))
        rep = invariants.formula_report(f)
        same = res.gamma_unoriented == rep.unoriented_genus and rep.crosscap in (None, res.crosscap)
        agree += same
        gaps += res.crosscap == res.gamma_unoriented + 1
    print(f"c={c:>2}: {agree}/{len(fractions)} diagrams agree, {gaps} with crosscap = genus + 1")
