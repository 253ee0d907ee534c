"""The L-class of the Schubert variety X_{3,2,1} in G_3(C^6), step by step.

The degree-8 and degree-4 coefficients of the Goresky-MacPherson L-class of
X_{3,2,1} are assembled from Gysin restrictions to intersections with three
auxiliary Schubert varieties.  Every intersection is identified through the
Segre-product factorization of amalgamated partitions, every emptiness or
point verdict is cross-checked against the intersection ring, and the
unknown normal-bundle integrals are kept as named symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotFactorizable
from .partitions import (
    Box,
    BoxedPartition,
    conjugate_shape,
    leq,
    lw_singular_partitions,
    make_boxed,
    rectangle_decomposition,
    zero_partition,
)
from .ring import (
    GrassmannianSpec,
    HomologyClass,
    PairKind,
    homology_basis,
    intersect,
    pair_kind,
    point_coefficient,
    segre_pushforward,
)
from .symbolic import INTEGRAL, GENUS, SymbolicScalar, UnknownSymbol


def canonical_shape(parts) -> tuple[int, ...]:
    """Diagram shape up to transposition (conjugate diagrams index isomorphic
    Schubert varieties); the lexicographically larger representative wins."""
    shape = tuple(p for p in parts if p > 0)
    return max(shape, conjugate_shape(shape))


# ---------------------------------------------------------------------------
# Known L-classes
# ---------------------------------------------------------------------------


@dataclass
class KnownClassTable:
    """Total L-classes known exactly, keyed by diagram shape."""

    entries: dict[tuple[int, ...], HomologyClass] = field(default_factory=dict)

    def lookup(self, shape) -> Optional[HomologyClass]:
        return self.entries.get(canonical_shape(shape))

    def graded(self, shape) -> dict[int, dict[tuple[int, ...], Fraction]]:
        """Class terms of `shape`, bucketed by complex degree."""
        entry = self.lookup(shape)
        if entry is None:
            raise NotFactorizable(f"no known L-class for shape {tuple(shape)}")
        out: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for part, coeff in entry.terms.items():
            out.setdefault(part.weight, {})[part.nonzero()] = coeff
        return out

    def signature(self, shape) -> Fraction:
        entry = self.lookup(shape)
        if entry is None:
            raise NotFactorizable(f"no known L-class for shape {tuple(shape)}")
        return point_coefficient(entry)


def known_lclasses() -> KnownClassTable:
    """L-classes this example may consume.

    The point and the projective line are forced (smooth, no middle degrees,
    zero signature); the class of X_{2,1} is the codimension-4 input
    [X_{2,1}] + 2/3 [X_1].
    """
    table = KnownClassTable()

    def put(shape, terms):
        box = Box(shape[0] if shape else 0, len(shape))
        space = GrassmannianSpec(box)
        table.entries[canonical_shape(shape)] = HomologyClass(
            space, {make_boxed(p, box): Fraction(c) for p, c in terms.items()}
        )

    put((), {(): 1})
    put((1,), {(1,): 1})
    put((2, 1), {(2, 1): 1, (1,): Fraction(2, 3)})
    return table


# ---------------------------------------------------------------------------
# Amalgamation splits and Segre factorization
# ---------------------------------------------------------------------------


def split_as(
    p: BoxedPartition, first_box: Box, second_box: Box
) -> Optional[tuple[BoxedPartition, BoxedPartition]]:
    """Write p = u join v with u in first_box, v in second_box, if possible."""
    mu, ku = first_box
    mv, kv = second_box
    if mu + mv != p.box.m or ku + kv != p.box.k:
        return None
    head, tail = p.parts[:kv], p.parts[kv:]
    if any(x < mu for x in head):
        return None
    v = tuple(x - mu for x in head)
    if any(x > mv for x in v):
        return None
    if tail and tail[0] > mu:
        return None
    return BoxedPartition(first_box, tail), BoxedPartition(second_box, v)


def _identify_factor(
    first: BoxedPartition, second: BoxedPartition
) -> Optional[BoxedPartition]:
    """The transverse intersection of a Schubert pair in one factor box,
    when it is recognizably empty (None), a point, or a Schubert variety."""
    kind = pair_kind(first, second)
    if kind is PairKind.EMPTY:
        return None
    if kind is PairKind.POINT:
        return zero_partition(first.box)
    if first.is_full():
        return second
    if second.is_full():
        return first
    raise NotFactorizable(
        f"cannot identify the intersection of {first} and {second}"
    )


@dataclass(frozen=True)
class SegrePattern:
    """A matched pair of amalgamation splits for two partitions in one box.

    The first partition splits as u join v over (box1, box2) while the second
    splits as w join z over (box2, box1); their intersection is then the
    Segre image of (X_u meet X_z) x (X_v meet X_w).
    """

    box1: Box
    box2: Box
    u: BoxedPartition
    v: BoxedPartition
    w: BoxedPartition
    z: BoxedPartition
    factor1: BoxedPartition
    factor2: BoxedPartition


def find_segre_pattern(M: BoxedPartition, X: BoxedPartition) -> SegrePattern:
    """First amalgamation split identifying M meet X as a product of Schubert
    varieties; splits are scanned by decreasing first-factor height."""
    m, k = M.box
    for k1 in range(k, -1, -1):
        for m1 in range(0, m + 1):
            box1, box2 = Box(m1, k1), Box(m - m1, k - k1)
            sm = split_as(M, box1, box2)
            sx = split_as(X, box2, box1)
            if sm is None or sx is None:
                continue
            u, v = sm
            w, z = sx
            try:
                f1 = _identify_factor(u, z)
                f2 = _identify_factor(v, w)
            except NotFactorizable:
                continue
            if f1 is None or f2 is None:
                continue
            return SegrePattern(box1, box2, u, v, w, z, f1, f2)
    raise NotFactorizable(f"no amalgamation split matches ({M}, {X})")


def validate_segre_identity(pattern: SegrePattern, M: BoxedPartition, X: BoxedPartition) -> None:
    """Check [X_M].[X_X] against the pushforward of the factor products."""
    space = GrassmannianSpec(M.box)
    lhs = intersect(HomologyClass.schubert(space, M), HomologyClass.schubert(space, X))
    g1 = GrassmannianSpec(pattern.box1)
    g2 = GrassmannianSpec(pattern.box2)
    rhs = segre_pushforward(
        intersect(HomologyClass.schubert(g1, pattern.u), HomologyClass.schubert(g1, pattern.z)),
        intersect(HomologyClass.schubert(g2, pattern.v), HomologyClass.schubert(g2, pattern.w)),
    )
    if lhs != rhs:
        raise RuntimeError(f"Segre identification failed for ({M}, {X})")


def gysin_restrict_basis(
    M: BoxedPartition, X: BoxedPartition, generator: BoxedPartition
) -> HomologyClass:
    """Class of M meet X_generator inside Y = M meet X, combinatorially.

    Empty pairs give 0 and point pairs give the point class; otherwise the
    generator must factor through the same amalgamation split as X, and the
    per-factor intersections must each be a point or a Schubert variety with
    at most one positive-dimensional factor.
    """
    if not (M.box == X.box == generator.box):
        raise NotFactorizable("all three partitions must share one box")
    if not leq(generator, X):
        raise ValueError(f"{generator} is not a homology generator of X_{X}")
    pattern = find_segre_pattern(M, X)
    nonpoint = [f for f in (pattern.factor1, pattern.factor2) if f.weight > 0]
    if len(nonpoint) == 1:
        result_space = GrassmannianSpec(nonpoint[0].box)
    else:
        result_space = GrassmannianSpec(Box(0, 0))

    kind = pair_kind(M, generator)
    if kind is PairKind.EMPTY:
        return HomologyClass.zero(result_space)
    if kind is PairKind.POINT:
        return HomologyClass.point(result_space)

    sg = split_as(generator, pattern.box2, pattern.box1)
    if sg is None:
        raise NotFactorizable(f"{generator} does not factor over the split of {X}")
    wg, zg = sg
    r1 = _identify_factor(pattern.u, zg)
    r2 = _identify_factor(pattern.v, wg)
    if r1 is None or r2 is None:
        return HomologyClass.zero(result_space)
    pieces = [r for r in (r1, r2) if r.weight > 0]
    if not pieces:
        return HomologyClass.point(result_space)
    if len(pieces) > 1:
        raise NotFactorizable(
            f"restriction of {generator} is a genuine product class"
        )
    piece = pieces[0]
    return HomologyClass.schubert(GrassmannianSpec(piece.box), piece)


# ---------------------------------------------------------------------------
# Coefficient assembly
# ---------------------------------------------------------------------------


def restriction_integral(M_parts, factor_shapes, degree: int) -> UnknownSymbol:
    """Unknown pairing of the degree-d inverse normal class of the regular
    part of X_M against the cycle with the given Segre factor shapes."""
    shapes = tuple(
        sorted((canonical_shape(s) for s in factor_shapes if s), reverse=True)
    )
    return UnknownSymbol(INTEGRAL, ("gysin", canonical_shape(M_parts), shapes, degree))


def _cross_grade(tables, grade: int) -> dict[tuple, Fraction]:
    """Terms of the product class in one complex degree, keyed by factor shapes."""
    acc: dict[tuple, Fraction] = {(): Fraction(1)}
    for table in tables:
        nxt: dict[tuple, Fraction] = {}
        for key, coeff in acc.items():
            used = sum(sum(s) for s in key)
            for g, terms in table.items():
                if used + g > grade:
                    continue
                for shape, c in terms.items():
                    nxt_key = key + (shape,)
                    nxt[nxt_key] = nxt.get(nxt_key, Fraction(0)) + coeff * c
        acc = nxt
    return {k: c for k, c in acc.items() if sum(sum(s) for s in k) == grade and c}


def assemble_coefficient(
    M: BoxedPartition,
    y_shapes: tuple[tuple[int, ...], ...],
    target_key: tuple,
    target_degree: int,
    known: KnownClassTable,
) -> SymbolicScalar:
    """Coefficient read off from a Gysin restriction to Y with known L-class.

    The degree-`target_degree` part of the restricted class is the known
    L-term of Y at the target cycle plus one unknown integral per
    higher-degree L-term of Y capped into that degree.
    """
    tables = [known.graded(s) for s in y_shapes]
    dim_y = sum(sum(s) for s in y_shapes)
    expr = SymbolicScalar.constant(
        _cross_grade(tables, target_degree).get(target_key, Fraction(0))
    )
    r = 1
    while target_degree + 2 * r <= dim_y:
        for zkey, coeff in _cross_grade(tables, target_degree + 2 * r).items():
            expr = expr + coeff * SymbolicScalar.symbol(
                restriction_integral(M.parts, zkey, r)
            )
        r += 1
    return expr


# ---------------------------------------------------------------------------
# The report
# ---------------------------------------------------------------------------


@dataclass
class ReportStep:
    description: str
    identity: str
    result: str


@dataclass
class ExampleReport:
    steps: list[ReportStep]
    coefficients: dict[str, SymbolicScalar]

    def __str__(self) -> str:
        lines = []
        for i, step in enumerate(self.steps, start=1):
            lines.append(f"{i:2d}. {step.description}")
            lines.append(f"      via {step.identity}: {step.result}")
        lines.append("")
        for name, expr in self.coefficients.items():
            lines.append(f"{name} = {expr}")
        return "\n".join(lines)


def _shape_name(shape) -> str:
    return "pt" if not shape else "X_{" + ",".join(map(str, shape)) + "}"


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(f"worked example self-check failed: {message}")


def x321_report() -> ExampleReport:
    """Derive the middle L-class coefficients of X_{3,2,1} in G_3(C^6)."""
    box = Box(3, 3)
    space = GrassmannianSpec(box)
    X = make_boxed((3, 2, 1), box)
    known = known_lclasses()
    steps: list[ReportStep] = []
    coeffs: dict[str, SymbolicScalar] = {}

    h8 = homology_basis(space, X, 4)
    _check([b.parts for b in h8] == [(3, 1, 0), (2, 2, 0), (2, 1, 1)], "H_8 basis")
    steps.append(
        ReportStep(
            "Schubert basis of H_8(X_{3,2,1})",
            "homology_basis",
            "[X_{3,1}], [X_{2,2}], [X_{2,1,1}]",
        )
    )
    h4 = homology_basis(space, X, 2)
    _check([b.parts for b in h4] == [(2, 0, 0), (1, 1, 0)], "H_4 basis")
    steps.append(
        ReportStep(
            "Schubert basis of H_4(X_{3,2,1})",
            "homology_basis",
            "[X_2], [X_{1,1}]",
        )
    )

    sing = lw_singular_partitions(X)
    _check([s.parts for s in sing] == [(1, 1, 1), (3, 0, 0)], "Sing X_{3,2,1}")
    steps.append(
        ReportStep(
            "Singular locus of X_{3,2,1}",
            "lw_singular_partitions",
            "X_{1,1,1} union X_3",
        )
    )

    def derive(name, M_parts, generators, target, mirrored=False):
        """One Gysin-restriction derivation; returns the coefficient."""
        M = make_boxed(M_parts, box)
        tag = " (mirrored pattern)" if mirrored else ""

        # Regular part: singular components of M must miss X entirely.
        if len(rectangle_decomposition(M).blocks) == 1:
            steps.append(
                ReportStep(
                    f"M = X_{{{','.join(map(str, M.nonzero()))}}} is nonsingular{tag}",
                    "lw_singular_partitions",
                    "rectangular index partition",
                )
            )
        else:
            for s in lw_singular_partitions(M):
                verdict = pair_kind(s, X)
                _check(verdict is PairKind.EMPTY, f"Sing component {s} must miss X")
                _check(
                    intersect(
                        HomologyClass.schubert(space, s), HomologyClass.schubert(space, X)
                    ).is_zero(),
                    f"[X_{s.nonzero()}].[X] must vanish",
                )
                steps.append(
                    ReportStep(
                        f"Singular component X_{{{','.join(map(str, s.nonzero())) or '0'}}} of M misses X{tag}",
                        "pair_kind + intersect",
                        "empty intersection, so the regular part of M suffices",
                    )
                )

        pattern = find_segre_pattern(M, X)
        validate_segre_identity(pattern, M, X)
        y_shapes = (pattern.factor1.nonzero(), pattern.factor2.nonzero())
        y_name = " x ".join(_shape_name(s) for s in y_shapes)
        steps.append(
            ReportStep(
                f"Y = M meet X for M = X_{{{','.join(map(str, M.nonzero()))}}}{tag}",
                "find_segre_pattern + segre_pushforward + intersect",
                f"Y is the Segre image of {y_name}; ambient classes agree",
            )
        )

        target_part = make_boxed(target, box)
        restricted = {}
        for gen in generators:
            gen_part = make_boxed(gen, box)
            value = gysin_restrict_basis(M, X, gen_part)
            restricted[gen] = value
            # cross-check the verdict against the intersection ring
            verdict = pair_kind(M, gen_part)
            product = intersect(
                HomologyClass.schubert(space, M), HomologyClass.schubert(space, gen_part)
            )
            if verdict is PairKind.EMPTY:
                _check(product.is_zero(), f"empty pair ({M}, {gen_part}) with nonzero product")
            if verdict is PairKind.POINT:
                _check(product == HomologyClass.point(space), f"point pair ({M}, {gen_part})")
            if gen == target:
                _check(not value.is_zero(), f"target generator {gen} restricts to zero")
            else:
                _check(value.is_zero(), f"non-target generator {gen} must restrict to zero")
            shown = "0" if value.is_zero() else repr(value)
            steps.append(
                ReportStep(
                    f"Gysin restriction of [X_{{{','.join(map(str, gen_part.nonzero())) or '0'}}}] under M{tag}",
                    "gysin_restrict_basis",
                    shown,
                )
            )

        target_class = restricted[target]
        target_key = None
        # express the target cycle through the factor shapes of Y
        sg = split_as(make_boxed(target, box), pattern.box2, pattern.box1)
        if sg is not None:
            wg, zg = sg
            r1 = _identify_factor(pattern.u, zg)
            r2 = _identify_factor(pattern.v, wg)
            if r1 is not None and r2 is not None:
                target_key = (r1.nonzero(), r2.nonzero())
        if target_key is None:
            # point restriction: the target cycle is the point of Y
            _check(
                target_class == HomologyClass.point(target_class.space),
                "unfactorable target must be a point restriction",
            )
            target_key = ((), ())
        codim = space.dim - M.weight
        target_degree = target_part.weight - codim
        expr = assemble_coefficient(M, y_shapes, target_key, target_degree, known)
        steps.append(
            ReportStep(
                f"Solve for {name} from the restriction identity{tag}",
                "known_lclasses + assemble_coefficient",
                f"{name} = {expr}",
            )
        )
        return expr

    h8_gens = [(3, 1, 0), (2, 2, 0), (2, 1, 1)]
    h4_gens = [(2, 0, 0), (1, 1, 0)]

    coeffs["lambda_{3,1}"] = derive("lambda_{3,1}", (3, 3), h8_gens, (3, 1, 0))
    mirrored = derive(
        "lambda_{2,1,1}", (2, 2, 2), h8_gens, (2, 1, 1), mirrored=True
    )
    _check(mirrored == coeffs["lambda_{3,1}"], "lambda_{2,1,1} must equal lambda_{3,1}")
    coeffs["lambda_{2,1,1}"] = mirrored
    steps.append(
        ReportStep(
            "lambda_{2,1,1} equals lambda_{3,1}",
            "symbol canonicalization under diagram transposition",
            "identical symbolic expressions",
        )
    )

    coeffs["lambda_{2,2}"] = derive("lambda_{2,2}", (3, 1, 1), h8_gens, (2, 2, 0))
    coeffs["lambda_2"] = derive("lambda_2", (3, 3, 1), h4_gens, (2, 0, 0))
    coeffs["lambda_{1,1}"] = derive(
        "lambda_{1,1}", (3, 2, 2), h4_gens, (1, 1, 0), mirrored=True
    )

    # top and bottom degrees for completeness
    coeffs["lambda_{3,2,1}"] = SymbolicScalar.constant(1)
    signature_sym = UnknownSymbol(
        GENUS, (("schubert", X.parts, box.m, box.k), 0, 0, ())
    )
    coeffs["lambda_0"] = SymbolicScalar.symbol(signature_sym)
    steps.append(
        ReportStep(
            "Degree 12 and degree 0 terms",
            "fundamental-class normalization / degree-zero genus",
            "[X_{3,2,1}] and sigma(X_{3,2,1}) [pt], the signature kept symbolic",
        )
    )

    return ExampleReport(steps=steps, coefficients=coeffs)
