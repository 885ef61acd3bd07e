"""
Counting avoiding words and bounding their growth
=================================================

Exact counts for small lengths, then an upper bound on the growth rate from
the minimal forbidden words up to a length cap.
"""

import numpy as np

from replab import AvoidanceSpec
from replab import enumeration as E

spec = AvoidanceSpec.parse(4, "5/2+")
counts = np.array(E.count_avoiding(spec, 25).counts)
print(counts)

# successive ratios drift towards the growth rate
print(np.round(counts[1:] / counts[:-1], 3)[-8:])

###############################################################################
# Words avoiding the minimal forbidden set up to length 20 form a regular
# language; its transfer matrix gives the bound.

forbidden = E.minimal_forbidden(spec, 20)
print(len(forbidden), "forbidden words by length:", forbidden.by_length())

est = E.growth_upper(forbidden)
print(f"upper bound {est.value:.8f} from {est.state_count} states")

# the automaton over-counts once violations longer than the cap matter
approx = E.automaton_counts(forbidden, 25).counts
print([a - int(c) for a, c in zip(approx, counts)])

###############################################################################
# A 1560-uniform morphism carries squarefree ternary words into avoiding
# words, which gives a lower bound.

print(E.growth_lower_from_morphism(1560).value)
