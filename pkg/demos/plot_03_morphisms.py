"""
Uniform morphisms and infinite avoiding words
=============================================

f maps each ternary letter to a 10-letter binary block. Images of
squarefree ternary words avoid (3, 3+).
"""

from replab import morphisms as M
from replab.words import find_violation

f = M.get("f")
print(f.as_dict())

verdict = M.verify(f, M.TARGETS["f"])
print({k: v["passed"] for k, v in verdict["checks"].items()}, verdict["corpus"])

###############################################################################
# The composite morphisms are much wider.

for name in ("g", "h"):
    m = M.get(name)
    print(name, m.width, m.source_alphabet, "->", m.target_alphabet)

###############################################################################
# Long prefixes of the infinite words.

for name, spec in M.TARGETS.items():
    w = M.generate_avoiding(name, 5000)
    print(name, str(w)[:40], "...", find_violation(w, spec))
