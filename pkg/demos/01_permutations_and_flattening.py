"""
Permutations in one-line form, codes, and flattening
====================================================

Permutations are plain tuples: w = (2, 5, 3, 1, 4) sends 1 to 2, 2 to 5,
and so on.  This demo walks through the basic vocabulary every other
module builds on.
"""

from flaghorn import (
    compose,
    descent_set,
    flatten,
    format_permutation,
    identity,
    inverse,
    lehmer_code,
    length,
    longest_element,
    parse_permutation,
    perm_from_lehmer,
)

w = parse_permutation("2,5,3,1,4")
print("w =", format_permutation(w))

# length counts inversions, the pairs written in decreasing order
print("length(w) =", length(w))
assert length(w) == 5

# descents are the positions where the one-line form steps down
print("descents:", descent_set(w))
assert descent_set(w) == {2, 3}

# the longest element reverses everything and has the maximal length
w0 = longest_element(5)
print("longest element of S_5:", w0, "with length", length(w0))
assert length(w0) == 10

# composition acts right to left, and the inverse undoes it
v = inverse(w)
assert compose(w, v) == identity(5)
assert compose(v, w) == identity(5)
print("inverse(w) =", v)

# the Lehmer code records, at each position, how many later entries are
# smaller; it determines the permutation and sums to the length
code = lehmer_code(w)
print("lehmer code:", code)
assert sum(code) == length(w)
assert perm_from_lehmer(code) == w

# flattening restricts w to a set of positions and renumbers the values
# to 1..k while keeping their relative order
positions = (1, 2, 5)
sub = flatten(w, positions)
print("w flattened to positions", positions, "->", sub)
assert sub == (1, 3, 2)

# relative order is all that survives: the values at positions 1, 2, 5
# are 2, 5, 4, and 2 < 4 < 5 becomes 1 < 2 < 3
print("values kept:", tuple(w[p - 1] for p in positions))
