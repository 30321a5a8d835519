"""
Kennedy's alphabetization formula
=================================

List all rotations of both words, rank them alphabetically, and take a
quarter of C(sigma_1) + C(sigma_2) - C(sigma_3), where C sums the
displacements of a permutation.
"""

from modknot import LorenzWord, alphabetize, compare_methods, crossing_count, shift_list

w1, w2 = LorenzWord("RRLLRL"), LorenzWord("LR")
rows = shift_list(w1) + shift_list(w2)
joint = alphabetize(rows)
individual = alphabetize(shift_list(w1)) + alphabetize(shift_list(w2))
for n, (w, j, i) in enumerate(zip(rows, joint, individual), 1):
    print(f"{n}  {w.letters:8} {j}  {i}")

print("C1, C2, C3 =", crossing_count(alphabetize(shift_list(w1))),
      crossing_count(alphabetize(shift_list(w2))), crossing_count(joint))

###############################################################################
# Comparing with the triple count.  On this pair all methods agree.
print(compare_methods(w1, w2).to_json(indent=1))

###############################################################################
# On (LLR, LR) the formula, evaluated on the words as given, is not an
# integer.  The harness records this instead of failing.
report = compare_methods(LorenzWord("LLR"), LorenzWord("LR"))
print(report.rs_link, report.kennedy_value, report.agreement)
