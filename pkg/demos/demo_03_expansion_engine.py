"""The symbolic expansion engine.

A class attached to an embedded variety expands over the Schubert basis with
one coefficient per partition.  Below the top grade each coefficient is the
genus of an explicit characteristic intersection minus corrections assembled
from higher coefficients and integral constants; everything the theory does
not pin down stays a named unknown, resolvable later against an oracle.
"""

from fractions import Fraction

from schubert import (
    Box,
    UnresolvedSymbols,
    expand_all,
    genus_expression,
    make_boxed,
    resolve,
    schubert_variety,
    uniqueness_check,
)
from schubert.expansion import OracleTable, schubert_variety as sv

# The projective line: top coefficient 1, degree-zero coefficient a genus.
store = {}
line = schubert_variety(make_boxed([1], Box(1, 1)))
table = expand_all(line, store)
print("expansion of X_1 in P^1:")
for part, expr in table.sorted_items():
    print(f"  [{part}] -> {expr}")

# Projective spaces expand with empty corrections: one genus per level.
p3 = schubert_variety(make_boxed([3], Box(3, 1)))
print("\nexpansion of P^3 (full box of G_1(C^4)):")
for part, expr in expand_all(p3, store).sorted_items():
    print(f"  [{part}] -> {expr}")

# A genuinely singular example: the coefficients of X_321 in G_3(C^6).
x321 = schubert_variety(make_boxed([3, 2, 1], Box(3, 3)))
table = expand_all(x321, store)
entry = table.coefficients[make_boxed([3, 1], Box(3, 3))]
print(f"\ncoefficient of [X_31] in the X_321 expansion ({len(entry.terms)} terms):")
print(f"  {entry}")
print(f"unknowns in the whole table: {len(table.symbols())}")

# The genus of a pair expands as a double sum over both coefficient tables.
print("\ngenus of the (X_1, X_1) characteristic intersection:")
print(f"  {genus_expression(line, line, store)}")

# Oracles assign numbers to unknowns; resolution is exact.
toy_table = expand_all(sv(make_boxed([2, 1], Box(2, 2))), store)
oracle = OracleTable({sym: Fraction(1, 3) for sym in toy_table.symbols()})
values = resolve(toy_table, oracle)
print("\nX_21 expansion resolved at an all-1/3 oracle:")
for part, expr in toy_table.sorted_items():
    print(f"  [{part}] = {values[part]}")

try:
    resolve(toy_table, OracleTable())
except UnresolvedSymbols as exc:
    print(f"\nempty oracle leaves {len(exc.symbols)} symbols to compute externally")

# Two oracles that agree on every symbol resolve to identical expansions.
report = uniqueness_check(x321,
                          OracleTable({s: Fraction(1, 2) for s in table.symbols()}),
                          OracleTable({s: Fraction(1, 2) for s in table.symbols()}),
                          store)
print(f"\nuniqueness check on X_321: {report}")
