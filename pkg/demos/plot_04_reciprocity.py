"""
Reciprocal words and the symmetrized linking number
===================================================

Summing over a knot and its inverse gives the symmetrized linking number.
When one of the two classes is reciprocal it is exactly four times the plain
linking number; for non-reciprocal pairs it carries less information.
"""

import itertools

from modknot import LorenzWord, inverse_word, is_reciprocal, linking_number, symmetrized_link

print("RRLLRL reciprocal:", is_reciprocal(LorenzWord("RRLLRL")), "inverse", inverse_word(LorenzWord("RRLLRL")))

words = {"A": "LLR", "B": "LLLLRLR", "C": "LLRRLRR", "D": "LLLLLLLLLRRR"}
for (x, sx), (y, sy) in itertools.combinations(words.items(), 2):
    wx, wy = LorenzWord(sx), LorenzWord(sy)
    print(f"{x},{y}: link {linking_number(wx, wy):4}  "
          f"with inverse {linking_number(wx, inverse_word(wy)):4}  "
          f"symmetrized {symmetrized_link(wx, wy):4}")

###############################################################################
# With a reciprocal partner the factor four is exact.
r = LorenzWord("RRLLRL")
for s in words.values():
    w = LorenzWord(s)
    print(s, 4 * linking_number(r, w), symmetrized_link(r, w))
