import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from schubert import (
    Box,
    GrassmannianSpec,
    HomologyClass,
    PairKind,
    SpaceMismatch,
    amalgamate,
    complement,
    full_partition,
    homology_basis,
    intersect,
    make_boxed,
    pair_kind,
    point_coefficient,
    schubert_class,
    segre_pushforward,
    triple_point_number,
    zero_partition,
)
from schubert.partitions import partitions_in_box


def _terms(cls):
    return {p.parts: c for p, c in cls.terms.items()}


def test_homology_basis_examples():
    box = Box(3, 3)
    space = GrassmannianSpec(box)
    top = make_boxed([3, 2, 1], box)
    assert [b.parts for b in homology_basis(space, top, 4)] == [
        (3, 1, 0),
        (2, 2, 0),
        (2, 1, 1),
    ]
    assert [b.parts for b in homology_basis(space, top, 2)] == [(2, 0, 0), (1, 1, 0)]
    g22 = GrassmannianSpec(Box(2, 2))
    assert [b.parts for b in homology_basis(g22, full_partition(Box(2, 2)), 0)] == [
        (0, 0)
    ]


def test_intersect_examples():
    box = Box(2, 2)
    x21 = schubert_class(box, (2, 1))
    assert _terms(intersect(x21, x21)) == {(2, 0): 1, (1, 1): 1}
    # fundamental class of the Grassmannian is the identity
    full = schubert_class(box, (2, 2))
    for parts in ((2, 1), (1, 1), (1, 0), (0, 0)):
        cls = schubert_class(box, parts)
        assert intersect(full, cls) == cls
    x1 = schubert_class(box, (1,))
    assert intersect(x1, x1).is_zero()
    assert _terms(intersect(x21, x1)) == {(0, 0): 1}


def test_intersect_space_mismatch():
    with pytest.raises(SpaceMismatch):
        intersect(schubert_class(Box(2, 2), (1,)), schubert_class(Box(3, 3), (1,)))


def test_point_coefficient():
    box = Box(2, 2)
    assert point_coefficient(HomologyClass.point(GrassmannianSpec(box))) == 1
    assert point_coefficient(schubert_class(Box(1, 1), (1,))) == 0
    mixed = schubert_class(box, (2,)) + schubert_class(box, (1, 1))
    assert point_coefficient(mixed) == 0


def test_pair_kind_examples():
    box = Box(3, 3)
    assert pair_kind(make_boxed([3, 3], box), make_boxed([2, 2], box)) is PairKind.EMPTY
    assert pair_kind(make_boxed([3, 3, 1], box), make_boxed([2], box)) is PairKind.POINT
    b22 = Box(2, 2)
    assert pair_kind(make_boxed([2, 1], b22), make_boxed([2, 1], b22)) is PairKind.OTHER


def test_pair_kind_point_iff_complement():
    box = Box(2, 3)
    for a in partitions_in_box(box):
        for b in partitions_in_box(box):
            expected = PairKind.POINT if b == complement(a) else None
            if expected is not None:
                assert pair_kind(a, b) is expected


def test_segre_pushforward_examples():
    p1 = schubert_class(Box(1, 1), (1,))
    quadric = segre_pushforward(p1, p1)
    assert _terms(quadric) == {(2, 0): 1, (1, 1): 1}
    pt = HomologyClass.point(GrassmannianSpec(Box(1, 1)))
    assert _terms(segre_pushforward(pt, pt)) == {(0, 0): 1}
    lhs = segre_pushforward(
        schubert_class(Box(3, 2), (2, 1)),
        HomologyClass.point(GrassmannianSpec(Box(0, 1))),
    )
    assert _terms(lhs) == {(2, 1, 0): 1}


def test_triple_point_examples():
    box = Box(4, 5)
    a = make_boxed([4, 4, 4, 1, 1], box)
    c = make_boxed([4, 4, 2, 2, 2], box)
    assert triple_point_number(a, make_boxed([4, 4, 2, 1, 1], box), c) == 1
    assert triple_point_number(a, make_boxed([4, 4, 2, 2], box), c) == 0
    box2 = Box(3, 2)
    for a in partitions_in_box(box2):
        assert triple_point_number(a, complement(a), full_partition(box2)) == 1


@st.composite
def small_classes(draw):
    box = Box(2, 2)
    space = GrassmannianSpec(box)
    terms = {}
    for p in partitions_in_box(box):
        coeff = draw(st.integers(min_value=-3, max_value=3))
        if coeff and draw(st.booleans()):
            terms[p] = Fraction(coeff)
    return HomologyClass(space, terms)


@settings(max_examples=40)
@given(small_classes(), small_classes(), small_classes())
def test_intersect_bilinear_commutative_associative(A, B, C):
    assert intersect(A, B) == intersect(B, A)
    assert intersect(intersect(A, B), C) == intersect(A, intersect(B, C))
    assert intersect(A + B, C) == intersect(A, C) + intersect(B, C)


def test_intersect_grading():
    box = Box(3, 2)
    space = GrassmannianSpec(box)
    g = space.dim
    for a in partitions_in_box(box):
        for b in partitions_in_box(box):
            product = intersect(
                HomologyClass.schubert(space, a), HomologyClass.schubert(space, b)
            )
            for term in product.terms:
                assert term.weight == a.weight + b.weight - g


def test_segre_compatibility_random():
    rng = random.Random(7)
    boxes = [Box(1, 1), Box(2, 1), Box(1, 2), Box(2, 2)]
    for _ in range(60):
        box1, box2 = rng.choice(boxes), rng.choice(boxes)
        g1, g2 = GrassmannianSpec(box1), GrassmannianSpec(box2)
        big = GrassmannianSpec(Box(box1.m + box2.m, box1.k + box2.k))
        p1 = list(partitions_in_box(box1))
        p2 = list(partitions_in_box(box2))
        a1, b1 = rng.choice(p1), rng.choice(p1)
        a2, b2 = rng.choice(p2), rng.choice(p2)
        lhs = intersect(
            HomologyClass.schubert(big, amalgamate(a1, a2)),
            HomologyClass.schubert(big, amalgamate(b2, b1)),
        )
        rhs = segre_pushforward(
            intersect(HomologyClass.schubert(g1, a1), HomologyClass.schubert(g1, b1)),
            intersect(HomologyClass.schubert(g2, a2), HomologyClass.schubert(g2, b2)),
        )
        assert lhs == rhs


def test_classical_grassmannian_degrees():
    # independent cross-check of the LR kernel: degrees of the Pluecker
    # embeddings, computed as top self-intersections of the hyperplane class
    def degree(box):
        space = GrassmannianSpec(box)
        hyper = HomologyClass.schubert(space, complement(make_boxed([1], box)))
        acc = HomologyClass.schubert(space, full_partition(box))
        for _ in range(space.dim):
            acc = intersect(acc, hyper)
        return point_coefficient(acc)

    assert degree(Box(2, 2)) == 2
    assert degree(Box(3, 2)) == 5
    assert degree(Box(2, 3)) == 5
    assert degree(Box(3, 3)) == 42
    assert degree(Box(4, 2)) == 14
    assert degree(Box(4, 1)) == 1


def test_zero_class_normalization():
    box = Box(2, 2)
    space = GrassmannianSpec(box)
    cls = HomologyClass(space, {zero_partition(box): Fraction(0)})
    assert cls.is_zero()
    assert cls == HomologyClass.zero(space)
