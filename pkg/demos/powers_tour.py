"""
Powers and primitive words
==========================

Squares, cubes and arbitrary powers inside a language, and the opposite
question of whether every accepted word is a power.
"""

from nfaprops.automaton import prepare
from nfaprops.families import late_nonpower_family, late_nonpower_words, lcm_power_family, prime_power_family
from nfaprops.powers import (
    Pattern,
    accepts_k_power,
    accepts_power,
    all_k_powers,
    all_powers,
    build_kth_root,
    pattern_acceptance,
)

# the k-th root automaton accepts x exactly when x^k is in the language
fam = lcm_power_family(4)
root = build_kth_root(prepare(fam), 2)
print("square root automaton:", root.inner.n_states, "reachable of", root.declared_states, "declared states")

for n in (3, 4, 5):
    w = accepts_k_power(lcm_power_family(n), 2).witness
    print(f"n={n}  shortest square has length {len(w)}")

w = accepts_k_power(prime_power_family(3), 3).witness
print("shortest cube over periods 2, 3, 5 has length", len(w))

# powers with any exponent >= 2
a = prepare(lcm_power_family(3))
print("shortest power:", a.render(accepts_power(a).witness))

# x (y x)*: every word is a power until the fifth block
x, y = late_nonpower_words(1)
print("x =", x, " y =", y)
v = all_powers(late_nonpower_family(1))
print("all powers?", v.holds, "| first non-power has length", len(v.witness), "| method", v.method)
print("all squares?", all_k_powers(late_nonpower_family(1), 2).holds)

# general patterns: is some h(x y x) accepted, h non-erasing?
pat = Pattern.parse("1 2 1")
print("pattern", pat, "->", a.render(pattern_acceptance(a, pat).witness))
