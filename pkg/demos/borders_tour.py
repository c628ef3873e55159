"""
Bordered and unbordered words
=============================

A word is bordered when a non-empty proper prefix is also a suffix.
"""

from nfaprops.automaton import Automaton
from nfaprops.borders import (
    accepts_bordered,
    accepts_infinitely_many_bordered,
    accepts_infinitely_many_unbordered,
    accepts_unbordered,
    unbordered_window,
)
from nfaprops.families import bordered_family, unbordered_family
from nfaprops.words import borders

print("shortest border of abaab:", borders("abaab").shortest_border)

for t in (2, 3, 4, 5):
    fam = bordered_family(t)
    w = accepts_bordered(fam).witness
    print(f"t={t}  states={fam.n_states:2d}  shortest bordered word length {len(w)}: {fam.render(w)}")

for n in range(4, 9):
    fam = unbordered_family(n)
    w = accepts_unbordered(fam).witness
    print(f"n={n}  shortest unbordered word {fam.render(w)} (length {len(w)})")

# (ab)* is infinite but has a single unbordered word
ab = Automaton.build("ab", 2, [(0, "a", 1), (1, "b", 0)], {0}, {0})
print("(ab)*: infinitely many bordered?", accepts_infinitely_many_bordered(ab).holds)
lo, hi = unbordered_window(ab.n_states)
print(f"(ab)*: infinitely many unbordered? {accepts_infinitely_many_unbordered(ab).holds} (searched lengths {lo}..{hi})")
