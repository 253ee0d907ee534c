"""Exhaustive and randomized checks of the package's structural identities.

Each suite walks a bounded family of cases, returns how many it checked and
the first counterexample if any.  The CLI exposes them as `verify <name>`;
the acceptance tests pin their bounds.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import lr
from .expansion import (
    ExpansionStore,
    delta_integral,
    expand_all,
    genus_expression,
    genus_symbol,
    schubert_variety,
    _correction_sum,
)
from .partitions import (
    Box,
    BoxedPartition,
    amalgamate,
    complement,
    complementary_profile,
    full_partition,
    leq,
    partitions_in_box,
    partitions_of_weight,
)
from .ring import (
    GrassmannianSpec,
    HomologyClass,
    PairKind,
    intersect,
    pair_kind,
    segre_pushforward,
    triple_point_number,
)
from .symbolic import SymbolicScalar


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAILED"
        head = f"verify {self.name}: {status} ({self.checked} cases, {self.seconds:.2f}s)"
        if self.failures:
            head += f"\n  first counterexample: {self.failures[0]}"
        return head


def _boxes_with_cells(max_cells: int) -> list[Box]:
    out = []
    for m in range(1, max_cells + 1):
        for k in range(1, max_cells // m + 1):
            out.append(Box(m, k))
    return out


def verify_duality(box: Box = Box(3, 3)) -> SuiteResult:
    """Empty pairs multiply to zero and point pairs to the point class."""
    start = time.monotonic()
    result = SuiteResult("duality")
    space = GrassmannianSpec(box)
    parts = list(partitions_in_box(box))
    for a in parts:
        for b in parts:
            result.checked += 1
            kind = pair_kind(a, b)
            product = intersect(
                HomologyClass.schubert(space, a), HomologyClass.schubert(space, b)
            )
            if kind is PairKind.EMPTY:
                if not product.is_zero():
                    result.failures.append(f"empty pair ({a}, {b}) gave {product!r}")
                if leq(complement(a), b):
                    result.failures.append(f"empty pair ({a}, {b}) but complement(a) <= b")
            elif kind is PairKind.POINT:
                if product != HomologyClass.point(space):
                    result.failures.append(f"point pair ({a}, {b}) gave {product!r}")
                if b != complement(a):
                    result.failures.append(f"point pair ({a}, {b}) but b != complement(a)")
            else:
                # non-special pairs sit strictly above complementary dimension
                if not leq(complement(a), b) or a.weight + b.weight <= box.cells:
                    result.failures.append(f"pair ({a}, {b}) misclassified as Other")
    result.seconds = time.monotonic() - start
    return result


def verify_delta_law(max_cells: int = 6, all_weights: bool = False) -> SuiteResult:
    """Triple products built from a profile are Kronecker deltas.

    With all_weights the scan leaves the equal-weight stratum, where the
    triple class has positive dimension and both the point count and the
    known integral value must vanish.
    """
    start = time.monotonic()
    result = SuiteResult("delta-law")
    for box in _boxes_with_cells(max_cells):
        cprime = full_partition(box)
        for aprime in partitions_in_box(box):
            profile = complementary_profile(aprime)
            box2 = Box(profile.m2, profile.k2)
            csecond = full_partition(box2)
            a = amalgamate(profile.complement, cprime)
            c = amalgamate(cprime, csecond)
            if all_weights:
                candidates = partitions_in_box(box)
            else:
                candidates = partitions_of_weight(aprime.weight, box)
            for bprime in candidates:
                b = amalgamate(bprime, csecond)
                result.checked += 1
                expected = Fraction(1 if bprime == aprime else 0)
                got = triple_point_number(a, b, c)
                if got != expected:
                    result.failures.append(
                        f"triple for a'={aprime}, b'={bprime}: {got} != {expected}"
                    )
                known = delta_integral(bprime, profile.complement, box)
                if known != expected:
                    result.failures.append(
                        f"delta_integral for a'={aprime}, b'={bprime}: {known}"
                    )
    result.seconds = time.monotonic() - start
    return result


def _segre_case(result, box1, box2, a1, b1, a2, b2):
    g1, g2 = GrassmannianSpec(box1), GrassmannianSpec(box2)
    big = GrassmannianSpec(Box(box1.m + box2.m, box1.k + box2.k))
    lhs = intersect(
        HomologyClass.schubert(big, amalgamate(a1, a2)),
        HomologyClass.schubert(big, amalgamate(b2, b1)),
    )
    rhs = segre_pushforward(
        intersect(HomologyClass.schubert(g1, a1), HomologyClass.schubert(g1, b1)),
        intersect(HomologyClass.schubert(g2, a2), HomologyClass.schubert(g2, b2)),
    )
    result.checked += 1
    if lhs != rhs:
        result.failures.append(f"segre case ({a1},{b1})x({a2},{b2}): {lhs!r} != {rhs!r}")


def verify_segre(max_cells: int = 4, random_cases: int = 500, seed: int = 0) -> SuiteResult:
    """Pushforward compatibility of products, exhaustive then randomized."""
    start = time.monotonic()
    result = SuiteResult("segre")
    boxes = _boxes_with_cells(max_cells)
    for box1 in boxes:
        p1 = list(partitions_in_box(box1))
        for box2 in boxes:
            p2 = list(partitions_in_box(box2))
            for a1 in p1:
                for b1 in p1:
                    for a2 in p2:
                        for b2 in p2:
                            _segre_case(result, box1, box2, a1, b1, a2, b2)
    rng = random.Random(seed)
    larger = [b for b in _boxes_with_cells(6) if b.cells > max_cells]
    for _ in range(random_cases):
        box1 = rng.choice(larger)
        box2 = rng.choice(larger)
        p1 = list(partitions_in_box(box1))
        p2 = list(partitions_in_box(box2))
        _segre_case(
            result, box1, box2, rng.choice(p1), rng.choice(p1), rng.choice(p2), rng.choice(p2)
        )
    result.seconds = time.monotonic() - start
    return result


def verify_box_extension(max_cells: int = 4) -> SuiteResult:
    """Pairs with equal products stay equal after amalgamation."""
    start = time.monotonic()
    result = SuiteResult("box-extension")
    second_boxes = [Box(1, 1), Box(2, 1), Box(1, 2)]
    for box1 in _boxes_with_cells(max_cells):
        space1 = GrassmannianSpec(box1)
        parts1 = list(partitions_in_box(box1))
        products = {}
        for a in parts1:
            for b in parts1:
                cls = intersect(
                    HomologyClass.schubert(space1, a), HomologyClass.schubert(space1, b)
                )
                key = tuple(sorted((p.parts, c) for p, c in cls.terms.items()))
                products.setdefault(key, []).append((a, b))
        for box2 in second_boxes:
            parts2 = list(partitions_in_box(box2))
            big = GrassmannianSpec(Box(box1.m + box2.m, box1.k + box2.k))
            for group in products.values():
                if len(group) < 2:
                    continue
                base = group[0]
                for other in group[1:]:
                    for a2 in parts2:
                        for b2 in parts2:
                            result.checked += 1
                            lhs = intersect(
                                HomologyClass.schubert(big, amalgamate(base[0], a2)),
                                HomologyClass.schubert(big, amalgamate(b2, base[1])),
                            )
                            rhs = intersect(
                                HomologyClass.schubert(big, amalgamate(other[0], a2)),
                                HomologyClass.schubert(big, amalgamate(b2, other[1])),
                            )
                            if lhs != rhs:
                                result.failures.append(
                                    f"box extension broke for {base} vs {other} with ({a2},{b2})"
                                )
    result.seconds = time.monotonic() - start
    return result


def verify_pieri(max_cells: int = 12, workers: int = 0) -> SuiteResult:
    """LR kernel against the independent strip enumerators.

    With workers > 0 the LR side fans out over a thread pool first, which
    exercises the shared memo cache; results must match the serial pass.
    """
    start = time.monotonic()
    result = SuiteResult("pieri")
    cases = []
    for box in _boxes_with_cells(max_cells):
        for lam in partitions_in_box(box):
            for t in range(0, box.m + 1):
                cases.append((lam, BoxedPartition(box, (t,) + (0,) * (box.k - 1)), "row", t))
            for t in range(0, box.k + 1):
                col = (1,) * t + (0,) * (box.k - t)
                cases.append((lam, BoxedPartition(box, col), "col", t))

    if workers:
        lr.clear_cache()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            threaded = list(pool.map(lambda c: lr.lr_expand(c[0], c[1]), cases))
    else:
        threaded = None

    for idx, (lam, mu, direction, t) in enumerate(cases):
        result.checked += 1
        got = lr.lr_expand(lam, mu)
        if direction == "row":
            expected = lr.pieri_row_product(lam, t)
        else:
            expected = lr.pieri_column_product(lam, t)
        if got != expected:
            result.failures.append(f"pieri {direction} {lam} * {mu}: {got} != {expected}")
        if threaded is not None and threaded[idx] != got:
            result.failures.append(f"threaded LR mismatch for {lam} * {mu}")
    result.seconds = time.monotonic() - start
    return result


def verify_consistency(max_cells: int = 9, store: ExpansionStore | None = None) -> SuiteResult:
    """The genus sum is the recursion's correction plus the isolated term.

    Evaluated over completed coefficient tables this has a second face: the
    expanded genus sum collapses back to the single genus symbol of the pair.
    Both equalities are checked per coefficient, as polynomials.
    """
    start = time.monotonic()
    result = SuiteResult("consistency")
    store = {} if store is None else store
    for box in _boxes_with_cells(max_cells):
        for w in partitions_in_box(box):
            variety = schubert_variety(w)
            table = expand_all(variety, store)
            for aprime in list(table.coefficients):
                profile = complementary_profile(aprime)
                isecond = schubert_variety(profile.complement)
                expand_all(isecond, store)
                result.checked += 1
                genus = genus_expression(variety, isecond, store)
                correction = _correction_sum(variety, aprime, profile, isecond, store)
                stored = table.coefficients[aprime]
                if genus != correction + stored:
                    result.failures.append(
                        f"recursion identity broke at {w} / {aprime}"
                    )
                head = SymbolicScalar.symbol(
                    genus_symbol(variety, profile.m2, profile.k2, profile.complement)
                )
                if aprime.weight < variety.dim and genus != head:
                    result.failures.append(
                        f"genus sum did not collapse at {w} / {aprime}"
                    )
    result.seconds = time.monotonic() - start
    return result


SUITES = {
    "duality": verify_duality,
    "delta-law": verify_delta_law,
    "segre": verify_segre,
    "box-extension": verify_box_extension,
    "pieri": verify_pieri,
    "consistency": verify_consistency,
}
