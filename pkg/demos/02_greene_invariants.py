# What the whole shape means, not just the first row.
#
# The first row of a word's shape is the longest weakly increasing
# subsequence. The deeper rows have a meaning too: the sum of the first k
# rows equals the largest total length of k disjoint weakly increasing
# subsequences. This script checks that on a word by exhaustive search.

from schurweyl.greene import greene_invariant, lis
from schurweyl.rsk import sh_rsk, standardize

word = (1, 3, 2, 2, 1, 3, 1, 2)
shape = sh_rsk(word)
print(f"word:  {word}")
print(f"shape: {shape}")
print()

print(f"longest weakly increasing subsequence: {lis(word)}")
print()
print(" k   prefix of shape   best k disjoint subsequences")
for k in range(1, len(shape) + 1):
    prefix = sum(shape[:k])
    best = greene_invariant(word, k)
    marker = "ok" if prefix == best else "MISMATCH"
    print(f" {k}   {prefix:15d}   {best:28d}   {marker}")

# The search behind greene_invariant tries every way of routing letters
# into k weakly increasing piles, so it is an independent witness for the
# shape; nothing about row insertion enters it.

# Repeated letters never change the combinatorics: renumbering ties from
# left to right (standardization) gives a word with distinct letters and
# the same shape and invariants.

std = standardize(word)
print()
print(f"standardized: {std}")
print(f"same shape:   {sh_rsk(std) == shape}")
for k in (1, 2, 3):
    assert greene_invariant(std, k) == greene_invariant(word, k)
print("same invariants for k = 1, 2, 3")
