"""Partitions in a box: the indexing combinatorics.

Everything in this package is indexed by weakly decreasing integer tuples
confined to an m-by-k box.  This script walks through the basic operations:
building, comparing, joining, complementing, and reading off singular loci.
"""

from schubert import (
    Box,
    amalgamate,
    complement,
    complementary_profile,
    lw_singular_partitions,
    make_boxed,
    reconstruct_from_complement,
    rectangle_decomposition,
)

# A partition lives in a box: at most k parts, each at most m.
box = Box(3, 3)
a = make_boxed([3, 2, 1], box)
print(f"a = {a}  (weight {a.weight}, so X_a has complex dimension {a.weight})")

# The box complement reverses and reflects the diagram.  It is the unique
# partner that meets a in a single point in general position.
print(f"complement(a) = {complement(a)}")
print(f"involution check: {complement(complement(a)) == a}")

# Amalgamation glues two boxed partitions into the summed box.  This is how
# products of Grassmannians sit inside a bigger one.
x = make_boxed([2, 1], Box(3, 2))
y = make_boxed([0], Box(0, 1))
print(f"{x}  joined with  {y}  =  {amalgamate(x, y)}")

# Maximal constant blocks of the parts.  One block means the partition is
# rectangular, and its Schubert variety is then nonsingular.
big = make_boxed([6, 6, 4, 4, 4, 2, 1, 1], Box(6, 8))
print(f"rectangle blocks of {big.nonzero()}: {rectangle_decomposition(big).blocks}")

# The singular locus of X_a is a union of smaller Schubert varieties, one per
# adjacent block pair.
for source in ([3, 1, 1], [3, 3, 1], [3, 2, 1]):
    p = make_boxed(source, box)
    components = [s.nonzero() or "(point)" for s in lw_singular_partitions(p)]
    print(f"Sing X_{p.nonzero()} = {components}")
print(f"first component for {big.nonzero()}: {lw_singular_partitions(big)[0].parts}")

# The complementary profile splits off the rotated complement below the
# leading run; it drives the expansion recursion in demo 3.
profile = complementary_profile(make_boxed([3, 1], box))
print(
    f"profile of 3,1,0 @ 3x3: m''={profile.m2}, k''={profile.k2}, a''={profile.complement}"
)
print(f"inverse check: {reconstruct_from_complement(profile.complement, box)}")
