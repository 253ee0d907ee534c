"""Sparse multivariate polynomials over named unknowns with exact coefficients.

Unknowns come in two kinds: `integral` symbols (pairings of an inverted
cohomology class against a restricted cycle) and `genus` symbols (degree-zero
evaluations of a homology class).  A SymbolicScalar is a finitely supported
map from monomials (multisets of unknowns) to rationals; the empty monomial
is the constant part.  Canonical form drops zero coefficients, and the
serialization order is graded lexicographic on the symbols' canonical text.

Performance notes: a symbol IS its canonical text (a str subclass carrying
the structured key), so hashing and comparison stay at C speed; monomials
are interned tuples with an identity-keyed product cache; coefficients may
be plain ints, which are exact and compare equal to the matching Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnresolvedSymbols

INTEGRAL = "integral"
GENUS = "genus"


def _canonical_text(value) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(_canonical_text(v) for v in value) + ")"
    return str(value)


class UnknownSymbol(str):
    """A named unknown, hashed and ordered as its canonical text.

    `key` is a canonical nested tuple of ints and strings; two symbols are
    equal exactly when kind and key agree.
    """

    __slots__ = ("kind", "key")

    def __new__(cls, kind: str, key: tuple):
        tag = "I" if kind == INTEGRAL else "g"
        self = str.__new__(cls, f"{tag}{_canonical_text(key)}")
        self.kind = kind
        self.key = key
        return self

    def canonical(self) -> str:
        return str.__str__(self)

    def __repr__(self) -> str:
        return str.__str__(self)


_SYMBOLS: dict[tuple, UnknownSymbol] = {}


def make_symbol(kind: str, key: tuple) -> UnknownSymbol:
    """Interned symbol constructor; repeated keys share one instance."""
    sym = _SYMBOLS.get((kind, key))
    if sym is None:
        sym = UnknownSymbol(kind, key)
        _SYMBOLS[(kind, key)] = sym
    return sym


Monomial = tuple[UnknownSymbol, ...]

_EMPTY: Monomial = ()
_INTERNED: dict[Monomial, Monomial] = {_EMPTY: _EMPTY}
_MUL_CACHE: dict[tuple[int, int], Monomial] = {}


def _intern(mono: Monomial) -> Monomial:
    return _INTERNED.setdefault(mono, mono)


def singleton(sym: UnknownSymbol) -> Monomial:
    """Interned one-symbol monomial."""
    return _intern((sym,))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    """Merged (sorted) monomial product; interned result, id-keyed cache."""
    if not m1:
        return m2
    if not m2:
        return m1
    key = (id(m1), id(m2))
    hit = _MUL_CACHE.get(key)
    if hit is None:
        hit = _intern(tuple(sorted(m1 + m2)))
        _MUL_CACHE[key] = hit
    return hit


def _monomial_order(mono: Monomial):
    return (len(mono), mono)


class SymbolicScalar:
    """Polynomial with exact coefficients over UnknownSymbol unknowns."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(coeff, (int, Fraction)):
                coeff = Fraction(coeff)
            if coeff:
                key = _intern(tuple(sorted(mono)))
                total = cleaned.get(key, 0) + coeff
                if total:
                    cleaned[key] = total
                elif key in cleaned:
                    del cleaned[key]
        self.terms = cleaned

    @classmethod
    def _raw(cls, terms: dict) -> "SymbolicScalar":
        """Trusted constructor: keys interned and sorted, no zero values."""
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, q) -> "SymbolicScalar":
        if not isinstance(q, (int, Fraction)):
            q = Fraction(q)
        return cls._raw({_EMPTY: q} if q else {})

    @classmethod
    def symbol(cls, sym: UnknownSymbol) -> "SymbolicScalar":
        return cls._raw({singleton(sym): 1})

    @classmethod
    def zero(cls) -> "SymbolicScalar":
        return cls._raw({})

    def __add__(self, other) -> "SymbolicScalar":
        other = _coerce(other)
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = merged.get(mono, 0) + coeff
            if total:
                merged[mono] = total
            elif mono in merged:
                del merged[mono]
        return SymbolicScalar._raw(merged)

    __radd__ = __add__

    def __neg__(self) -> "SymbolicScalar":
        return SymbolicScalar._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SymbolicScalar":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SymbolicScalar":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "SymbolicScalar":
        other = _coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                total = out.get(mono, 0) + c1 * c2
                if total:
                    out[mono] = total
                elif mono in out:
                    del out[mono]
        return SymbolicScalar._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(
            tuple(
                sorted(
                    ((m, Fraction(c)) for m, c in self.terms.items()),
                    key=lambda mc: _monomial_order(mc[0]),
                )
            )
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_part(self) -> Fraction:
        return Fraction(self.terms.get(_EMPTY, 0))

    def symbols(self) -> set[UnknownSymbol]:
        return {sym for mono in self.terms for sym in mono}

    def substitute(self, assignments) -> "SymbolicScalar":
        """Replace assigned symbols by their values; unassigned ones remain."""
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            factor = Fraction(coeff)
            residue: list[UnknownSymbol] = []
            for sym in mono:
                if sym in assignments:
                    factor *= Fraction(assignments[sym])
                else:
                    residue.append(sym)
            key = _intern(tuple(residue))  # subsequence of sorted stays sorted
            total = out.get(key, 0) + factor
            if total:
                out[key] = total
            elif key in out:
                del out[key]
        return SymbolicScalar._raw(out)

    def resolve(self, assignments) -> Fraction:
        """Fully numeric value; raises UnresolvedSymbols when anything is left."""
        reduced = self.substitute(assignments)
        missing = sorted(reduced.symbols())
        if missing:
            raise UnresolvedSymbols(missing)
        return reduced.constant_part()

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return [
            (m, Fraction(c))
            for m, c in sorted(self.terms.items(), key=lambda mc: _monomial_order(mc[0]))
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0/1"
        chunks = []
        for mono, coeff in self.sorted_terms():
            q = f"{coeff.numerator}/{coeff.denominator}"
            if mono:
                chunks.append(q + "*" + "*".join(mono))
            else:
                chunks.append(q)
        return " + ".join(chunks)

    __repr__ = __str__


def _coerce(value) -> SymbolicScalar:
    if isinstance(value, SymbolicScalar):
        return value
    return SymbolicScalar.constant(value)


def acc_product(
    acc: dict, lam1: SymbolicScalar, lam2: SymbolicScalar, extra: Monomial, scale
) -> None:
    """acc += lam1 * lam2 * (extra monomial) * scale, without intermediates."""
    terms2 = lam2.terms
    get = acc.get
    for m1, c1 in lam1.terms.items():
        base = mono_mul(m1, extra)
        c1s = c1 * scale if scale != 1 else c1
        for m2, c2 in terms2.items():
            mono = mono_mul(base, m2)
            total = get(mono, 0) + c1s * c2
            if total:
                acc[mono] = total
            else:
                del acc[mono]
