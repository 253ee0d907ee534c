"""The Goresky-MacPherson L-class of X_{3,2,1}, coefficient by coefficient.

X_321 in G_3(C^6) has real dimension 12 and fails rational Poincare duality,
so its L-class is a genuinely new computation.  The middle coefficients are
derived by Gysin-restricting to intersections with three auxiliary Schubert
varieties, each identified as a product through the Segre factorization;
normal-bundle integrals stay symbolic.
"""

from schubert import Box, gysin_restrict_basis, known_lclasses, make_boxed, x321_report

box = Box(3, 3)
X = make_boxed([3, 2, 1], box)

# The one known input: the codimension-4 class of X_21, plus the forced
# classes of a point and a line.
table = known_lclasses()
print("known L-classes:")
for shape in ((), (1,), (2, 1)):
    print(f"  {shape or 'point'}: {table.lookup(shape)!r}")

# Gysin restriction under M = X_33: one basis class survives.
print("\nrestrictions under M = X_33:")
for gen in ((3, 1), (2, 2), (2, 1, 1)):
    value = gysin_restrict_basis(make_boxed([3, 3], box), X, make_boxed(gen, box))
    print(f"  [X_{gen}] -> {value!r}")

# The full derivation, step by step.
report = x321_report()
print("\n" + str(report))
