"""
Boolean transition matrices
===========================

Each word acts on the states as a boolean matrix; the set of all these
matrices is the transition monoid.  numpy arrays convert both ways.
"""

import numpy as np

from nfaprops.boolmat import BoolMatrix, accepting, monoid_closure, power_sequence, word_matrix
from nfaprops.families import nonpalindrome_family

a = nonpalindrome_family(3)
m = word_matrix(a, a.word("aab"))
print("matrix of aab:\n", m.to_array().astype(int))
print("aab accepted:", accepting(a, m))

mon = monoid_closure(a)
print("monoid size:", len(mon), "| truncated:", mon.truncated)
longest = max(mon.witness.values(), key=len)
print("longest shortest representative:", a.render(longest))

# powers of one element eventually cycle
seq, start = power_sequence(word_matrix(a, a.word("a")))
print(f"powers of a: {len(seq)} distinct, cycle starts at exponent {start + 1}")

# and back from numpy
rng = np.random.default_rng(0)
x = BoolMatrix.from_array(rng.random((4, 4)) < 0.3)
print("x^2 via bitmasks equals numpy product:",
      np.array_equal((x @ x).to_array(), (x.to_array().astype(int) @ x.to_array().astype(int)) > 0))
