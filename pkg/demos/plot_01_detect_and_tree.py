"""
Forbidden factors and the avoidance tree
========================================

A spec pairs a square bound with a power bound. ``(3, "3+")`` forbids
squares yy with |y| >= 3 and any factor of exponent above 3.
"""

from replab import AvoidanceSpec, Word, find_violation
from replab.tree import explore

spec = AvoidanceSpec.parse(3, "3+")

# 0101010 has period 2 and length 7, so exponent 7/2
v = find_violation(Word.parse("0101010"), spec)
print(v.kind.value, v.start, v.length, v.exponent)

# 000 is a cube, and cubes are allowed under "3+"
print(find_violation(Word.parse("000"), spec))

###############################################################################
# When no infinite binary word avoids a spec, the tree of avoiding words is
# finite and we can walk all of it.

for l, p in [(2, "inf"), (3, "3"), (7, "7/3")]:
    rep = explore(AvoidanceSpec.parse(l, p))
    print(f"l={l} p={p}: leaves={rep.leaves} height={rep.height} t={rep.maximal_count}")
    print("   ", [str(w) for w in rep.maximal_words_starting_with_zero])

###############################################################################
# An infinite tree is reported as inconclusive at the depth cutoff.

print(explore(spec, max_depth=60))
