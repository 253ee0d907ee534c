"""Homology of Grassmannians in the Schubert basis, with exact coefficients.

Classes are finitely supported maps from boxed partitions to rationals; the
intersection product is computed by complement-dualizing to cohomology,
multiplying with box-truncated Littlewood-Richardson coefficients, and
dualizing back.  All arithmetic is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoxMismatch, SpaceMismatch
from .lr import lr_expand
from .partitions import (
    Box,
    BoxedPartition,
    amalgamate,
    complement,
    full_partition,
    make_boxed,
    partitions_below,
    zero_partition,
)


@dataclass(frozen=True)
class GrassmannianSpec:
    """The Grassmannian of k-planes in C^(m+k); complex dimension m*k."""

    box: Box

    @property
    def dim(self) -> int:
        return self.box.cells

    def __str__(self) -> str:
        return f"G_{self.box.k}(C^{self.box.m + self.box.k})"


class HomologyClass:
    """Finitely supported rational combination of Schubert classes.

    Terms of mixed grades are allowed; the grade of a term is the weight of
    its partition.  Zero coefficients are dropped on construction.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: GrassmannianSpec, terms=None):
        self.space = space
        cleaned: dict[BoxedPartition, Fraction] = {}
        for part, coeff in (terms or {}).items():
            if part.box != space.box:
                raise SpaceMismatch(f"term {part} is not in the box of {space}")
            q = Fraction(coeff)
            if q:
                cleaned[part] = q
        self.terms = cleaned

    @classmethod
    def schubert(cls, space: GrassmannianSpec, part: BoxedPartition) -> "HomologyClass":
        return cls(space, {part: Fraction(1)})

    @classmethod
    def point(cls, space: GrassmannianSpec) -> "HomologyClass":
        return cls(space, {zero_partition(space.box): Fraction(1)})

    @classmethod
    def zero(cls, space: GrassmannianSpec) -> "HomologyClass":
        return cls(space, {})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, part: BoxedPartition) -> Fraction:
        return self.terms.get(part, Fraction(0))

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if self.space != other.space:
            raise SpaceMismatch("cannot add classes on different Grassmannians")
        merged = dict(self.terms)
        for part, coeff in other.terms.items():
            merged[part] = merged.get(part, Fraction(0)) + coeff
        return HomologyClass(self.space, merged)

    def scale(self, q) -> "HomologyClass":
        q = Fraction(q)
        return HomologyClass(self.space, {p: c * q for p, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomologyClass)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, tuple(sorted((p.parts, c) for p, c in self.terms.items()))))

    def sorted_terms(self) -> list[tuple[BoxedPartition, Fraction]]:
        return sorted(self.terms.items(), key=lambda pc: pc[0].parts, reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[X_{{{','.join(map(str, p.nonzero())) or '0'}}}]" for p, c in self.sorted_terms())


class PairKind(enum.Enum):
    """General-position behavior of a pair of Schubert varieties."""

    EMPTY = "empty"
    POINT = "point"
    OTHER = "other"


def pair_kind(a: BoxedPartition, b: BoxedPartition) -> PairKind:
    """Classify the transverse intersection of the Schubert pair (a, b).

    Empty when some a_i + b_{k+1-i} falls below m; a single point when every
    such sum equals m (equivalently b is the box complement of a).
    """
    if a.box != b.box:
        raise BoxMismatch(f"{a} and {b} live in different boxes")
    m, k = a.box
    sums = [a.parts[i] + b.parts[k - 1 - i] for i in range(k)]
    if any(s < m for s in sums):
        return PairKind.EMPTY
    if all(s == m for s in sums):
        return PairKind.POINT
    return PairKind.OTHER


def homology_basis(space: GrassmannianSpec, top: BoxedPartition, degree: int) -> list[BoxedPartition]:
    """Schubert basis of the homology of X_top in complex dimension `degree`."""
    if top.box != space.box:
        raise SpaceMismatch(f"{top} is not in the box of {space}")
    return partitions_below(top, degree)


def intersect(A: HomologyClass, B: HomologyClass) -> HomologyClass:
    """Bilinear intersection product; a term of dims d_A, d_B lands in d_A + d_B - dim G."""
    if A.space != B.space:
        raise SpaceMismatch("cannot intersect classes on different Grassmannians")
    out: dict[BoxedPartition, Fraction] = {}
    for a, ca in A.terms.items():
        ac = complement(a)
        for b, cb in B.terms.items():
            weight = ca * cb
            for nu, c in lr_expand(ac, complement(b)).items():
                dual = complement(nu)
                out[dual] = out.get(dual, Fraction(0)) + weight * c
    return HomologyClass(A.space, out)


def point_coefficient(A: HomologyClass) -> Fraction:
    """Coefficient of the zero partition (the point class)."""
    return A.coefficient(zero_partition(A.space.box))


def triple_point_number(a: BoxedPartition, b: BoxedPartition, c: BoxedPartition) -> Fraction:
    """Point coefficient of [X_a] . [X_b] . [X_c]."""
    if not (a.box == b.box == c.box):
        raise BoxMismatch("triple product needs a common box")
    space = GrassmannianSpec(a.box)
    prod = intersect(
        intersect(HomologyClass.schubert(space, a), HomologyClass.schubert(space, b)),
        HomologyClass.schubert(space, c),
    )
    return point_coefficient(prod)


def segre_pushforward(Aprime: HomologyClass, Asecond: HomologyClass) -> HomologyClass:
    """Pushforward along the Segre product of the two ambient Grassmannians.

    On basis classes this is [X_{a' join a''}] . [X_{c'' join c'}] in the
    summed box, where c' and c'' are the full boxes of the factors; the
    general case is the bilinear extension.
    """
    box1 = Aprime.space.box
    box2 = Asecond.space.box
    space = GrassmannianSpec(Box(box1.m + box2.m, box1.k + box2.k))
    joined: dict[BoxedPartition, Fraction] = {}
    for a1, c1 in Aprime.terms.items():
        for a2, c2 in Asecond.terms.items():
            key = amalgamate(a1, a2)
            joined[key] = joined.get(key, Fraction(0)) + c1 * c2
    twist = amalgamate(full_partition(box2), full_partition(box1))
    return intersect(HomologyClass(space, joined), HomologyClass.schubert(space, twist))


def schubert_class(box: Box, parts) -> HomologyClass:
    """Convenience: the basis class [X_parts] on the Grassmannian of `box`."""
    space = GrassmannianSpec(box)
    return HomologyClass.schubert(space, make_boxed(parts, box))
