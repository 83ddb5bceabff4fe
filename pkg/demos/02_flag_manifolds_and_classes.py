"""
Flag manifolds, Schubert classes, and duality
=============================================

A flag type lists the dimensions of the nested subspaces.  Schubert
classes on the manifold are indexed by permutations that increase
everywhere except possibly at the steps; the length of the permutation
is the dimension of its variety.
"""

from flaghorn import (
    FlagType,
    codim,
    complete_flag,
    dual,
    enumerate_flag_types,
    enumerate_minimal_reps,
    fiber_flag,
    grassmannian_flag,
    length,
    partition_from_perm,
    project_to_step,
    restrict_to_fiber,
)

# two-step flags inside C^4: lines inside hyperplanes
flag = FlagType((1, 3), 4)
print("flag type:", flag)
print("dimension:", flag.dimension)
print("block sizes:", flag.block_sizes)
assert flag.dimension == 5

# every flag type on C^4
print("all flag types on C^4:", [str(f) for f in enumerate_flag_types(4)])

# the Schubert basis, one class per minimal representative
reps = enumerate_minimal_reps(flag)
print(len(reps), "classes on", flag)
for w in reps[:6]:
    print("  ", w, "dim", length(w), "codim", codim(w, flag))

# on a Grassmannian the same classes are usually drawn as partitions
gr = grassmannian_flag(2, 4)
print("classes on", gr, "as partitions:")
for w in enumerate_minimal_reps(gr):
    print("  ", w, "->", partition_from_perm(w, 2, 4))

# Poincare duality pairs each class with a complementary-dimension one
for w in enumerate_minimal_reps(complete_flag(3)):
    print("dual of", w, "is", dual(w, complete_flag(3)))
    assert length(w) + length(dual(w, complete_flag(3))) == 3

# forgetting all subspaces but the first projects a class to the
# Grassmannian of the first step; the fibers of that projection are
# smaller flag manifolds carrying the rest of the class
w = (3, 1, 4, 2)
print("projection of", w, "to step 1:", project_to_step(w, flag, 1))
print("fiber manifold:", fiber_flag(flag))
print("restriction of", w, "to the fiber:", restrict_to_fiber(w, flag))
