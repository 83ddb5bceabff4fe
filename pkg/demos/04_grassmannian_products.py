"""
Grassmannian products, tableaux, and inequalities
=================================================

On a Grassmannian the structure constants are Littlewood-Richardson
numbers, computed here by counting lattice-word tableaux.  Whether a
product of many classes hits the point class is also decided by a
recursive family of linear inequalities, and the two answers agree.
"""

from flaghorn import (
    format_partition,
    horn_inequality_holds,
    intersection_number,
    lr_coefficient,
    lr_expand,
    partition_from_perm,
    partitions_in_rectangle,
    perm_from_partition,
    product_to_point,
)

# classes on the Grassmannian of 2-planes in C^4 live in a 2 x 2 box
shapes = partitions_in_rectangle(2, 2)
print("shapes in the 2x2 box:", [format_partition(p) for p in shapes])

# a first tableau count: two boxes times two boxes inside a 3 x 3 box
print("c(21,21 -> 321) =", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))
assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2

# multiplying by a single row adds a horizontal strip (the Pieri rule)
print("(2,1) times one box:", lr_expand((2, 1), (1,), 3, 3))
print("(2,1) times a row of two:", lr_expand((2, 1), (2,), 3, 3))

# the multiplicity of the point class in a long product
quad = ((1,), (1,), (1,), (1,))
print("four special classes on 2-planes in C^4:", product_to_point(quad, 2, 4))
assert product_to_point(quad, 2, 4) == 2

# the tableau route agrees with the polynomial oracle
sigma1 = perm_from_partition((1,), 2, 4)
from flaghorn import grassmannian_flag

assert intersection_number((sigma1,) * 4, grassmannian_flag(2, 4)) == 2

# two classes of complementary degree need not multiply to the point
# class; an inequality indexed by single boxes witnesses the failure
bad = ((2,), (1, 1))
bad_perms = tuple(perm_from_partition(p, 2, 4) for p in bad)
print("degrees match:", sum(sum(p) for p in bad) == 4)
print("product multiplicity:", product_to_point(bad, 2, 4))
subsets = ((1, 2), (2, 1))
holds = horn_inequality_holds(bad_perms, subsets, 1, 2, 2)
print("box inequality for", [format_partition(p) for p in bad], "holds:", holds)
assert not holds

# the dual pair passes the same inequality and does reach the point class
good = ((2,), (2,))
good_perms = tuple(perm_from_partition(p, 2, 4) for p in good)
assert product_to_point(good, 2, 4) == 1
assert horn_inequality_holds(good_perms, subsets, 1, 2, 2)
print("the dual pair", [format_partition(p) for p in good], "passes and pairs to 1")

# round trip between partitions and permutation indices
for p in shapes:
    w = perm_from_partition(p, 2, 4)
    assert partition_from_perm(w, 2, 4) == p
print("partition and permutation indexing agree on all", len(shapes), "shapes")
