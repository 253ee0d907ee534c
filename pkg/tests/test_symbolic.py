from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schubert import SymbolicScalar, UnknownSymbol, UnresolvedSymbols
from schubert.symbolic import GENUS, INTEGRAL, make_symbol

A = make_symbol(INTEGRAL, (1, 1, 1, 1, (1,), (1,)))
B = make_symbol(INTEGRAL, (1, 1, 1, 1, (1,), (0,)))
G = make_symbol(GENUS, (("named", "q"), 0, 0, ()))


def test_construction_and_canonical_form():
    expr = SymbolicScalar({(A,): Fraction(1), (): Fraction(2, 3)})
    assert expr.constant_part() == Fraction(2, 3)
    assert expr.symbols() == {A}
    zero = SymbolicScalar({(A,): Fraction(0)})
    assert not zero
    assert zero == SymbolicScalar.zero()


def test_monomials_are_multisets():
    ab = SymbolicScalar({(A, B): 1})
    ba = SymbolicScalar({(B, A): 1})
    assert ab == ba
    square = SymbolicScalar.symbol(A) * SymbolicScalar.symbol(A)
    assert square == SymbolicScalar({(A, A): 1})


def test_ring_operations():
    x = SymbolicScalar.symbol(A)
    y = SymbolicScalar.symbol(B)
    expr = (x + y) * (x - y)
    assert expr == x * x - y * y
    assert 2 * x - x - x == SymbolicScalar.zero()
    assert (x + 1) * (x + 1) == x * x + 2 * x + 1


def test_substitute_partial():
    expr = Fraction(2, 3) * SymbolicScalar.symbol(A) + SymbolicScalar.symbol(B)
    reduced = expr.substitute({A: Fraction(3)})
    assert reduced == SymbolicScalar.constant(2) + SymbolicScalar.symbol(B)
    with pytest.raises(UnresolvedSymbols) as err:
        reduced.resolve({})
    assert err.value.symbols == (B,)


def test_resolve_constants():
    assert SymbolicScalar.constant(Fraction(2, 3)).resolve({}) == Fraction(2, 3)
    expr = SymbolicScalar.symbol(G)
    assert expr.resolve({G: Fraction(0)}) == 0


@given(
    st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
    st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5),
)
def test_substitution_is_ring_homomorphism(a0, a1, a2, b0, b1, b2):
    x = a0 + a1 * SymbolicScalar.symbol(A) + a2 * SymbolicScalar.symbol(G)
    y = b0 + b1 * SymbolicScalar.symbol(A) + b2 * SymbolicScalar.symbol(B)
    values = {A: Fraction(2, 3), B: Fraction(-1, 2), G: Fraction(5)}
    assert (x + y).resolve(values) == x.resolve(values) + y.resolve(values)
    assert (x * y).resolve(values) == x.resolve(values) * y.resolve(values)


def test_deterministic_serialization():
    expr = SymbolicScalar.symbol(B) + SymbolicScalar.symbol(A) * SymbolicScalar.symbol(G)
    text = str(expr)
    # graded order: the degree-1 term prints before the degree-2 term
    assert text.index(str(B)) < text.index(str(G))
    rebuilt = SymbolicScalar({(G, A): 1}) + SymbolicScalar({(B,): 1})
    assert str(rebuilt) == text


def test_symbol_identity_and_order():
    again = UnknownSymbol(INTEGRAL, (1, 1, 1, 1, (1,), (1,)))
    assert again == A
    assert hash(again) == hash(A)
    assert sorted([G, B, A]) == sorted([A, B, G])
