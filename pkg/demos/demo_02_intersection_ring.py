"""The intersection ring of a Grassmannian in the Schubert basis.

Products are computed exactly: dualize by box complement, multiply with
box-truncated Littlewood-Richardson coefficients, dualize back.  The
classical transverse-intersection facts then become checkable statements.
"""

from schubert import (
    Box,
    GrassmannianSpec,
    HomologyClass,
    complement,
    full_partition,
    homology_basis,
    intersect,
    make_boxed,
    pair_kind,
    schubert_class,
    segre_pushforward,
    triple_point_number,
)

box = Box(3, 3)
space = GrassmannianSpec(box)
print(f"ambient space {space}, complex dimension {space.dim}")

# Homology bases of a Schubert variety, one complex degree at a time.
top = make_boxed([3, 2, 1], box)
for degree in (4, 2):
    basis = [b.nonzero() for b in homology_basis(space, top, degree)]
    print(f"H_{2 * degree}(X_321) basis: {basis}")

# The square of [X_21] in the quadric surface's Grassmannian.
g22 = Box(2, 2)
x21 = schubert_class(g22, (2, 1))
print(f"[X_21].[X_21] in G_2(C^4) = {intersect(x21, x21)!r}")

# Empty and point pairs, detected combinatorially and confirmed by products.
for a_parts, b_parts in (((3, 3), (2, 2)), ((3, 3, 1), (2,)), ((2, 1), (2, 1))):
    a, b = make_boxed(a_parts, box), make_boxed(b_parts, box)
    kind = pair_kind(a, b)
    product = intersect(HomologyClass.schubert(space, a), HomologyClass.schubert(space, b))
    print(f"pair ({a.nonzero()}, {b.nonzero()}): {kind.value:6s} product = {product!r}")

# The point pair is exactly the complement pair.
a = make_boxed([3, 1], box)
print(f"complement({a.nonzero()}) = {complement(a).nonzero()}: "
      f"{pair_kind(a, complement(a)).value}")

# The Segre embedding of P^1 x P^1 is the quadric; its class is a sum of two
# Schubert classes.
p1 = schubert_class(Box(1, 1), (1,))
print(f"Segre image class of P^1 x P^1: {segre_pushforward(p1, p1)!r}")

# Triple products built from a complementary profile are Kronecker deltas.
b45 = Box(4, 5)
a = make_boxed([4, 4, 4, 1, 1], b45)
c = make_boxed([4, 4, 2, 2, 2], b45)
for b_parts in ((4, 4, 2, 1, 1), (4, 4, 2, 2)):
    b = make_boxed(b_parts, b45)
    print(f"[X_a].[X_{b.nonzero()}].[X_c] point count = "
          f"{triple_point_number(a, b, c)}")

# And the fundamental class of the Grassmannian is the identity.
full = HomologyClass.schubert(space, full_partition(box))
print(f"[G].[X_321] = {intersect(full, HomologyClass.schubert(space, top))!r}")
