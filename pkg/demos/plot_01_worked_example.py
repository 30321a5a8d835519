"""
Linking number of two modular knots
===================================

The matrices [[3, 5], [7, 12]] and [[2, 1], [1, 1]] are primitive hyperbolic
elements of PSL(2, Z).  Each one determines a closed orbit of the modular
flow, and we compute how the two orbits link.
"""

from modknot import Psl2Matrix, linking_number, rs_triples, word_of_matrix

a = Psl2Matrix(3, 5, 7, 12)
b = Psl2Matrix(2, 1, 1, 1)

# Each conjugacy class is a cyclic class of Lorenz words
wa, ka = word_of_matrix(a)
wb, kb = word_of_matrix(b)
print("word of A:", wa, "power", ka)
print("word of B:", wb, "power", kb)

###############################################################################
# A triple (i, j, x) records a stretch W' of length x with L W' R starting at
# position i of A's periodic sequence and R W' L at position j of B's.
for t in sorted(rs_triples(wa, wb)):
    print(t)

print("link(k_A, k_B) =", linking_number(wa, wb))

###############################################################################
# The count does not depend on which rotation of each word we start from.
from modknot import LorenzWord

print(linking_number(LorenzWord("RRLLRL"), LorenzWord("LR")))
