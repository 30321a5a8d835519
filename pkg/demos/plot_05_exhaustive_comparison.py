"""
Exhaustive comparison of the methods
====================================

Every ordered pair of inequivalent Lorenz words up to a given length is run
through the triple count and the template oracle.  Kennedy's formula is
tallied alongside.
"""

from collections import Counter
from fractions import Fraction

from modknot.cli import fuzz_summary

summary = fuzz_summary(6, with_kennedy=True)
print("pairs", summary["pairs"], "all checks passed:", summary["ok"])

###############################################################################
# How far off is Kennedy's value, evaluated on canonical rotations?
k = summary["kennedy"]
print("agree", k["agree"], "disagree", k["disagree"])
gaps = Counter(
    Fraction(d["kennedy_num"], d["kennedy_den"]) - d["rs_link"] for d in k["disagreements"]
)
for gap, n in sorted(gaps.items())[:10]:
    print(f"  kennedy - rs = {gap}: {n} pairs")
