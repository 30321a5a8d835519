"""
Rivers, continued fractions and automorphs
==========================================

An indefinite form [a, b, c] has a river on its Conway topograph.  Its word
can be read off the continued fraction of the root (-b + sqrt(D)) / (2a), or
by walking the river one edge at a time.
"""

from modknot import QuadForm, automorph, canonical, cf_expand, reduce_to_river_form, river_word
from modknot.qform import river_walk_word

q = QuadForm(7, 9, -5)
print("discriminant", q.discriminant)

cf = cf_expand(q)
print("continued fraction", cf)

###############################################################################
# Even-indexed partial quotients turn into runs of L, odd ones into runs of R.
print("river word from the continued fraction:", river_word(q))
print("river word from walking the river:     ", river_walk_word(q))

###############################################################################
# Walking once around the river multiplies out to a matrix fixing q.
m = automorph(q)
print("automorph", m.rows())

###############################################################################
# A form that is not a river form is first moved onto its river.
r, move = reduce_to_river_form(QuadForm(3, 5, 1))
print(r, "reached with", move.rows(), "word", canonical(river_word(r)))
