"""
Looking for a morphism in the data
==================================

Cut long avoiding words into aligned k-blocks and keep only those that use at
most three distinct blocks. If the survivors die out, no k-uniform morphism
from three letters can work.
"""

from replab import morphisms as M
from replab.discovery import block_filter, infer_avoided_blocks, propose_morphisms

spec = M.TARGETS["f"]

for k in (3, 4, 5):
    a = block_filter(spec, k, 3, 20 * k)
    print(k, "exhausted" if a.exhausted else "alive", a.surviving_word_count_by_length)

###############################################################################
# With k = 10 the search keeps going, and the surviving block triples that
# pass the inclusion and interchange tests include f.
# This takes about 20 seconds.

a = block_filter(spec, 10, 3, 60)
cands = propose_morphisms(spec, 10, 3, analysis=a)
print(len(cands), "candidates")
print(any(set(c.images) == set(M.get("f").images) for c in cands))

###############################################################################
# For a morphism on more letters, some letter pairs must never be adjacent
# in the source word.

rep = infer_avoided_blocks(M.get("h1"), M.TARGETS["h"], 9)
print([str(b) for b in rep.squarefree()])
