from fractions import Fraction

import pytest

from schubert import (
    Box,
    GrassmannianSpec,
    NotFactorizable,
    gysin_restrict_basis,
    known_lclasses,
    make_boxed,
    x321_report,
)
from schubert.worked_example import (
    canonical_shape,
    find_segre_pattern,
    restriction_integral,
    split_as,
    validate_segre_identity,
)

BOX = Box(3, 3)
X = make_boxed([3, 2, 1], BOX)


def test_gysin_restrict_paper_cases():
    m33 = make_boxed([3, 3], BOX)
    value = gysin_restrict_basis(m33, X, make_boxed([3, 1], BOX))
    assert {p.parts: c for p, c in value.terms.items()} == {(1, 0): Fraction(1)}
    assert value.space == GrassmannianSpec(Box(3, 2))

    assert gysin_restrict_basis(m33, X, make_boxed([2, 2], BOX)).is_zero()

    m331 = make_boxed([3, 3, 1], BOX)
    point = gysin_restrict_basis(m331, X, make_boxed([2], BOX))
    assert {p.parts: c for p, c in point.terms.items()} == {p.parts: Fraction(1) for p in point.terms}
    assert sum(p.weight for p in point.terms) == 0 and len(point.terms) == 1


def test_gysin_restrict_fundamental_class():
    # the top generator restricts to the fundamental class of Y
    m33 = make_boxed([3, 3], BOX)
    value = gysin_restrict_basis(m33, X, X)
    assert {p.parts: c for p, c in value.terms.items()} == {(2, 1): Fraction(1)}


def test_gysin_restrict_errors():
    with pytest.raises(ValueError):
        gysin_restrict_basis(make_boxed([3, 3], BOX), X, make_boxed([3, 3], BOX))
    # a pair whose intersection is no recognizable product is rejected
    with pytest.raises(NotFactorizable):
        gysin_restrict_basis(make_boxed([2, 2], BOX), X, make_boxed([1], BOX))


def test_known_lclasses_table():
    table = known_lclasses()
    x21 = table.lookup((2, 1))
    assert {p.parts: c for p, c in x21.terms.items()} == {
        (2, 1): Fraction(1),
        (1, 0): Fraction(2, 3),
    }
    assert {p.parts for p in table.lookup(()).terms} == {()}
    assert table.lookup((3, 2)) is None
    # diagram transposition indexes the same variety
    assert table.lookup((2, 1)) == table.lookup((2, 1, 0))
    assert table.signature(()) == 1
    assert table.signature((2, 1)) == 0


def test_segre_pattern_for_x321():
    m33 = make_boxed([3, 3], BOX)
    pattern = find_segre_pattern(m33, X)
    assert (pattern.box1, pattern.box2) == (Box(0, 1), Box(3, 2))
    assert pattern.factor1.weight == 0
    assert pattern.factor2.nonzero() == (2, 1)
    validate_segre_identity(pattern, m33, X)

    m331 = make_boxed([3, 3, 1], BOX)
    pattern = find_segre_pattern(m331, X)
    shapes = {pattern.factor1.nonzero(), pattern.factor2.nonzero()}
    assert shapes == {(1,), (2, 1)}
    validate_segre_identity(pattern, m331, X)

    m311 = make_boxed([3, 1, 1], BOX)
    pattern = find_segre_pattern(m311, X)
    assert pattern.factor1.nonzero() == (1,) and pattern.factor2.nonzero() == (1,)
    validate_segre_identity(pattern, m311, X)


def test_split_as():
    assert split_as(X, Box(0, 1), Box(3, 2)) is None
    u, v = split_as(make_boxed([3, 3], BOX), Box(0, 1), Box(3, 2))
    assert u.parts == (0,) and v.parts == (3, 3)


def test_canonical_shape_transposition():
    assert canonical_shape((2, 2, 2)) == (3, 3)
    assert canonical_shape((3, 3)) == (3, 3)
    assert canonical_shape((3, 2, 2)) == (3, 3, 1)
    assert canonical_shape((2, 1)) == (2, 1)
    assert canonical_shape(()) == ()


def test_restriction_integral_keys_mirror():
    direct = restriction_integral((3, 3), [(2, 1)], 1)
    mirrored = restriction_integral((2, 2, 2), [(2, 1, 0)], 1)
    assert direct == mirrored
    assert restriction_integral((3, 3, 1), [(1,), (1,)], 1) != restriction_integral(
        (3, 3, 1), [(2, 1), (1,)], 2
    )


def test_x321_report_coefficients():
    report = x321_report()
    coeffs = report.coefficients

    lam31 = coeffs["lambda_{3,1}"]
    assert lam31.constant_part() == Fraction(2, 3)
    assert len(lam31.symbols()) == 1

    assert coeffs["lambda_{2,1,1}"] == lam31

    lam22 = coeffs["lambda_{2,2}"]
    assert lam22.constant_part() == 0
    assert len(lam22.symbols()) == 1
    assert len(lam22.terms) == 1

    lam2 = coeffs["lambda_2"]
    syms = sorted(lam2.symbols())
    assert len(syms) == 2
    parts = {sym: coeff for mono, coeff in lam2.sorted_terms() for sym in mono}
    assert sorted(parts.values()) == [Fraction(2, 3), Fraction(1)]

    assert coeffs["lambda_{1,1}"] == lam2
    assert coeffs["lambda_{3,2,1}"].constant_part() == 1
    lam0 = coeffs["lambda_0"]
    ((mono, coeff),) = lam0.terms.items()
    assert coeff == 1 and mono[0].kind == "genus"


def test_x321_report_steps_cite_operations():
    report = x321_report()
    assert len(report.steps) >= 10
    for step in report.steps:
        assert step.identity
        assert step.description
    text = str(report)
    assert "lambda_{3,1}" in text
