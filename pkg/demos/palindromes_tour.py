"""
Palindromes in a regular language
=================================

Build a small automaton, ask for its shortest palindrome, then look at the
family whose shortest palindrome grows quadratically with the state count.
"""

from nfaprops import Automaton
from nfaprops.families import nonpalindrome_family, palindrome_family
from nfaprops.palindromes import (
    accepts_infinitely_many_nonpalindromes,
    accepts_palindrome,
    build_pal_root,
    is_palindromic,
)

# a(b|a)*a over {a, b}: three states, built from symbol names
a = Automaton.build("ab", 3, [(0, "a", 1), (1, "a", 1), (1, "b", 1), (1, "a", 2)], {0}, {2})
v = accepts_palindrome(a)
print("shortest palindrome:", a.render(v.witness), "| bound used:", v.bound_used)

# the pair construction behind it: states [p, q] walk in from both ends
root = build_pal_root(a)
print("pair automaton states:", root.inner.n_states, "for", root.source_n, "source states")

# (a^t)+ b (a^(t-1))+ : the palindrome has to wait for a common multiple
for t in range(2, 7):
    fam = palindrome_family(t)
    w = accepts_palindrome(fam).witness
    print(f"t={t}  states={fam.n_states:2d}  shortest palindrome length={len(w)}")

# the other direction: is every word a palindrome?
for n in range(3, 7):
    v = is_palindromic(nonpalindrome_family(n))
    print(f"n={n}  first non-palindrome {nonpalindrome_family(n).render(v.witness)} (length {len(v.witness)})")

print("infinitely many non-palindromes in a(a|b)*a:", accepts_infinitely_many_nonpalindromes(a).holds)
