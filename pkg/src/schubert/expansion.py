"""Symbolic expansion of characteristic-class coefficients over Schubert bases.

A class that restricts well under transverse Gysin maps and is attached to
an embedded variety X in a Grassmannian expands as a
table of rational coefficients over boxed partitions.  Each coefficient
below the top grade satisfies a recursion: it is the genus of an explicit
characteristic intersection minus correction terms built from
higher-weight coefficients, recursively known coefficients of an auxiliary
Schubert variety in a strictly smaller Grassmannian, and integral constants.
The engine keeps every quantity it cannot determine as a named unknown, so
coefficient tables are polynomials resolvable against oracle assignments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BoxMismatch, EmptyBox, MissingExpansion, NotInvertible, UnresolvedSymbols
from .partitions import (
    Box,
    BoxedPartition,
    complementary_profile,
    partitions_of_weight,
    reconstruct_from_complement,
    zero_partition,
)
from .ring import GrassmannianSpec, HomologyClass
from .symbolic import (
    GENUS,
    INTEGRAL,
    SymbolicScalar,
    UnknownSymbol,
    acc_product,
    make_symbol,
    singleton,
)

SHALLOW = "shallow"
DEEP = "deep"


@dataclass(frozen=True)
class EmbeddedVariety:
    """A compact irreducible subvariety of a Grassmannian.

    Schubert varieties carry their indexing partition; named varieties carry
    a user-supplied name, their dimension, and the Schubert expansion of
    their fundamental class (top grade).  Whether a named variety admits the
    transversality needed by the recursion is a user assertion the engine
    does not check.
    """

    space: GrassmannianSpec
    kind: str  # "schubert" | "named"
    partition: Optional[BoxedPartition] = None
    name: Optional[str] = None
    dim: int = 0
    fundamental: Optional[HomologyClass] = None

    def key(self) -> tuple:
        box = self.space.box
        if self.kind == "schubert":
            return ("schubert", self.partition.parts, box.m, box.k)
        return ("named", self.name, box.m, box.k)

    def genus_descriptor(self) -> tuple:
        """Key of this variety inside genus symbols; named varieties are
        identified by name alone."""
        if self.kind == "schubert":
            box = self.space.box
            return ("schubert", self.partition.parts, box.m, box.k)
        return ("named", self.name)

    def descriptor(self) -> str:
        if self.kind == "schubert":
            body = ",".join(map(str, self.partition.parts)) if self.partition.parts else "-"
            return f"schubert:{body}@{self.space.box}"
        return f"named:{self.name}"

    def __str__(self) -> str:
        return self.descriptor()


def schubert_variety(a: BoxedPartition) -> EmbeddedVariety:
    return EmbeddedVariety(
        space=GrassmannianSpec(a.box), kind="schubert", partition=a, dim=a.weight
    )


def named_variety(name: str, fundamental: HomologyClass) -> EmbeddedVariety:
    if fundamental.is_zero():
        raise ValueError("a named variety needs a nonzero fundamental class")
    dim = max(p.weight for p in fundamental.terms)
    top = HomologyClass(
        fundamental.space, {p: c for p, c in fundamental.terms.items() if p.weight == dim}
    )
    return EmbeddedVariety(
        space=fundamental.space, kind="named", name=name, dim=dim, fundamental=top
    )


def integral_symbol(box1: Box, box2: Box, b1: BoxedPartition, b2: BoxedPartition) -> UnknownSymbol:
    return make_symbol(
        INTEGRAL, (box1.m, box1.k, box2.m, box2.k, b1.parts, b2.parts)
    )


def genus_symbol(variety: EmbeddedVariety, m2: int, k2: int, a2: BoxedPartition) -> UnknownSymbol:
    return make_symbol(GENUS, (variety.genus_descriptor(), m2, k2, a2.parts))


def delta_integral(
    bprime: BoxedPartition, bsecond: BoxedPartition, boxprime: Box
) -> Optional[Fraction]:
    """Known value of the integral constant on (b', b''), if any.

    When b'' inverts to a source partition a' in boxprime, the constant is
    the triple-intersection point count delta_{a' b'} (zero in particular
    whenever the weights disagree, where the triple product has positive
    dimension).  The empty 0x0 second factor degenerates to pairing against
    the unit: delta_{|b'|, 0}.  Anything else stays an unknown: None.
    """
    m2, k2 = bsecond.box
    if m2 == 0 and k2 == 0:
        return Fraction(1 if bprime.weight == 0 else 0)
    try:
        source = reconstruct_from_complement(bsecond, boxprime)
    except NotInvertible:
        return None
    return Fraction(1 if bprime == source else 0)


@dataclass
class ClassExpansion:
    """Per-variety table a' -> symbolic coefficient, for weights up to dim."""

    variety: EmbeddedVariety
    coefficients: dict[BoxedPartition, SymbolicScalar] = field(default_factory=dict)

    def coefficient(self, part: BoxedPartition) -> SymbolicScalar:
        try:
            return self.coefficients[part]
        except KeyError:
            raise MissingExpansion(
                f"{self.variety} has no coefficient for {part}"
            ) from None

    def symbols(self) -> set[UnknownSymbol]:
        out: set[UnknownSymbol] = set()
        for expr in self.coefficients.values():
            out |= expr.symbols()
        return out

    def sorted_items(self) -> list[tuple[BoxedPartition, SymbolicScalar]]:
        return sorted(
            self.coefficients.items(), key=lambda kv: (kv[0].weight, kv[0].parts), reverse=True
        )


class OracleTable:
    """Partial assignment of exact rationals to unknown symbols."""

    def __init__(self, assignments=None):
        self.assignments: dict[UnknownSymbol, Fraction] = {
            sym: Fraction(val) for sym, val in (assignments or {}).items()
        }

    def __contains__(self, sym: UnknownSymbol) -> bool:
        return sym in self.assignments

    def __getitem__(self, sym: UnknownSymbol) -> Fraction:
        return self.assignments[sym]

    def __len__(self) -> int:
        return len(self.assignments)

    def get(self, sym, default=None):
        return self.assignments.get(sym, default)

    def keys(self):
        return self.assignments.keys()


ExpansionStore = dict[tuple, ClassExpansion]

_STORE: ExpansionStore = {}

_ONE = SymbolicScalar.constant(1)


def clear_expansion_cache() -> None:
    _STORE.clear()


def _top_coefficient(variety: EmbeddedVariety, aprime: BoxedPartition) -> SymbolicScalar:
    if variety.kind == "schubert":
        value = 1 if aprime == variety.partition else 0
    else:
        value = variety.fundamental.coefficient(aprime)
    return SymbolicScalar.constant(value)


def _lambda(store: ExpansionStore, variety: EmbeddedVariety, part: BoxedPartition) -> SymbolicScalar:
    table = store.get(variety.key())
    if table is None:
        raise MissingExpansion(f"no expansion table for {variety}")
    return table.coefficient(part)


def _correction_sum(
    variety: EmbeddedVariety,
    aprime: BoxedPartition,
    profile,
    isecond: EmbeddedVariety,
    store: ExpansionStore,
    partial: Optional[ClassExpansion] = None,
) -> SymbolicScalar:
    """Sum over r' < l of lambda' * lambda'' * integral, as in the recursion."""
    return SymbolicScalar._raw(
        _correction_acc(variety, aprime, profile, isecond, store, partial)
    )


def _correction_acc(
    variety: EmbeddedVariety,
    aprime: BoxedPartition,
    profile,
    isecond: EmbeddedVariety,
    store: ExpansionStore,
    partial: Optional[ClassExpansion] = None,
) -> dict:
    boxprime = variety.space.box
    box2 = Box(profile.m2, profile.k2)
    d1 = variety.dim
    d2 = profile.complement.weight
    l = d1 - aprime.weight
    acc: dict = {}
    for r1 in range(0, l):
        for r2 in range(0, l - r1 + 1):
            for b1 in partitions_of_weight(d1 - r1, boxprime):
                if partial is not None:
                    lam1 = partial.coefficient(b1)
                else:
                    lam1 = _lambda(store, variety, b1)
                if not lam1:
                    continue
                for b2 in partitions_of_weight(d2 - r2, box2):
                    if r2 == 0:
                        if b2 != profile.complement:
                            continue
                        lam2 = _ONE
                    else:
                        lam2 = _lambda(store, isecond, b2)
                    if not lam2:
                        continue
                    known = delta_integral(b1, b2, boxprime)
                    if known is not None:
                        if known == 0:
                            continue
                        acc_product(acc, lam1, lam2, (), int(known))
                    else:
                        sym = integral_symbol(boxprime, box2, b1, b2)
                        acc_product(acc, lam1, lam2, singleton(sym), 1)
    return acc


def expand_coefficient(
    variety: EmbeddedVariety,
    aprime: BoxedPartition,
    store: Optional[ExpansionStore] = None,
    mode: str = SHALLOW,
    partial: Optional[ClassExpansion] = None,
) -> SymbolicScalar:
    """Coefficient of [X_a'] in the class of `variety`, as a symbolic value.

    At top weight this is the fundamental-class normalization.  Below it,
    the genus head (a single symbol in shallow mode, its expanded sum in
    deep mode) minus the correction sum.  `partial` supplies the
    higher-weight coefficients of `variety` while its table is still under
    construction; otherwise they are read from the store.
    """
    store = _STORE if store is None else store
    boxprime = variety.space.box
    if boxprime.k == 0:
        raise EmptyBox("the recursion needs k > 0")
    if aprime.box != boxprime:
        raise BoxMismatch(f"{aprime} is not in the box of {variety}")
    if aprime.weight > variety.dim:
        raise ValueError(f"{aprime} has weight above dim {variety.dim}")
    if aprime.weight == variety.dim:
        return _top_coefficient(variety, aprime)
    profile = complementary_profile(aprime)
    isecond = schubert_variety(profile.complement)
    expand_all(isecond, store)
    if mode == DEEP:
        head = genus_expression(variety, isecond, store)
    else:
        head = SymbolicScalar.symbol(
            genus_symbol(variety, profile.m2, profile.k2, profile.complement)
        )
    acc = _correction_acc(variety, aprime, profile, isecond, store, partial)
    for mono, coeff in acc.items():
        acc[mono] = -coeff
    for mono, coeff in head.terms.items():
        total = acc.get(mono, 0) + coeff
        if total:
            acc[mono] = total
        elif mono in acc:
            del acc[mono]
    return SymbolicScalar._raw(acc)


def genus_expression(
    iprime: EmbeddedVariety,
    isecond: EmbeddedVariety,
    store: Optional[ExpansionStore] = None,
) -> SymbolicScalar:
    """Genus of the characteristic intersection attached to (i', i'').

    Expands as the double sum of lambda' * lambda'' * integral over
    codimension splits r' + r'' = r <= l with l = dim' + dim'' - k'*m'';
    lambda factors are drawn from the expansion tables, integrals are
    replaced by their known delta values where available.
    """
    store = _STORE if store is None else store
    boxprime = iprime.space.box
    box2 = isecond.space.box
    if box2.m > boxprime.m:
        raise BoxMismatch(f"second factor bound m''={box2.m} exceeds m'={boxprime.m}")
    d1, d2 = iprime.dim, isecond.dim
    l = d1 + d2 - boxprime.k * box2.m
    if l < 0:
        return SymbolicScalar.zero()
    acc: dict = {}
    for r1 in range(0, l + 1):
        for r2 in range(0, l - r1 + 1):
            for b1 in partitions_of_weight(d1 - r1, boxprime):
                lam1 = _lambda(store, iprime, b1)
                if not lam1:
                    continue
                for b2 in partitions_of_weight(d2 - r2, box2):
                    lam2 = _lambda(store, isecond, b2)
                    if not lam2:
                        continue
                    known = delta_integral(b1, b2, boxprime)
                    if known is not None:
                        if known == 0:
                            continue
                        acc_product(acc, lam1, lam2, (), int(known))
                    else:
                        sym = integral_symbol(boxprime, box2, b1, b2)
                        acc_product(acc, lam1, lam2, singleton(sym), 1)
    return SymbolicScalar._raw(acc)


def expand_all(variety: EmbeddedVariety, store: Optional[ExpansionStore] = None) -> ClassExpansion:
    """Full coefficient table of `variety`, memoized per (variety, box) key.

    Double induction: the ambient Grassmannian dimension strictly drops into
    the auxiliary Schubert factors, and within one variety the coefficients
    are filled from the top weight downward.  A zero-dimensional ambient
    space contributes the single coefficient 1.

    Tables are published to the store only once complete, so concurrent
    readers never observe a partial table; a racing duplicate build produces
    the identical result.
    """
    store = _STORE if store is None else store
    key = variety.key()
    hit = store.get(key)
    if hit is not None:
        return hit
    box = variety.space.box
    table = ClassExpansion(variety)
    if box.cells == 0:
        table.coefficients[zero_partition(box)] = SymbolicScalar.constant(1)
        store[key] = table
        return table
    for weight in range(variety.dim, -1, -1):
        for aprime in partitions_of_weight(weight, box):
            table.coefficients[aprime] = expand_coefficient(
                variety, aprime, store, partial=table
            )
    store[key] = table
    return table


def resolve(target, oracle: OracleTable):
    """Substitute oracle values; fully numeric output or UnresolvedSymbols.

    Accepts a SymbolicScalar (returns a Fraction) or a ClassExpansion
    (returns {partition: Fraction}).
    """
    if isinstance(target, SymbolicScalar):
        return target.resolve(oracle.assignments)
    if isinstance(target, ClassExpansion):
        missing: set[UnknownSymbol] = set()
        out: dict[BoxedPartition, Fraction] = {}
        for part, expr in target.coefficients.items():
            reduced = expr.substitute(oracle.assignments)
            left = reduced.symbols()
            if left:
                missing |= left
            else:
                out[part] = reduced.constant_part()
        if missing:
            raise UnresolvedSymbols(sorted(missing))
        return out
    raise TypeError(f"cannot resolve {type(target).__name__}")


@dataclass
class UniquenessReport:
    """Outcome of comparing one expansion resolved under two total oracles."""

    variety: str
    oracles_agree: bool
    equal: bool
    entries: list[tuple[BoxedPartition, Fraction, Fraction]]
    first_divergence: Optional[BoxedPartition]

    def __str__(self) -> str:
        if self.equal:
            return f"{self.variety}: equal ({len(self.entries)} coefficients match)"
        part, va, vb = next(
            (p, a, b) for p, a, b in self.entries if a != b
        )
        return f"{self.variety}: diverges first at {part}: {va} vs {vb}"


def uniqueness_check(
    variety: EmbeddedVariety,
    oracle_a: OracleTable,
    oracle_b: OracleTable,
    store: Optional[ExpansionStore] = None,
) -> UniquenessReport:
    """Resolve one expansion under two oracles and compare coefficientwise.

    When the oracles agree on every symbol of the expansion the resolved
    tables must coincide; otherwise the report names the first divergence.
    """
    table = expand_all(variety, store)
    values_a = resolve(table, oracle_a)
    values_b = resolve(table, oracle_b)
    agree = all(oracle_a[s] == oracle_b[s] for s in table.symbols())
    entries = []
    first = None
    for part, _ in table.sorted_items():
        va, vb = values_a[part], values_b[part]
        entries.append((part, va, vb))
        if first is None and va != vb:
            first = part
    return UniquenessReport(
        variety=str(variety),
        oracles_agree=agree,
        equal=first is None,
        entries=entries,
        first_divergence=first,
    )
