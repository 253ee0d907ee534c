"""Littlewood-Richardson kernel with box truncation.

`lr_expand` multiplies two Schubert cohomology classes inside a fixed box:
the coefficient of nu is the number of semistandard skew tableaux of shape
nu/lambda and content mu whose reverse reading word is a lattice word.  The
tableau count is done by direct backtracking over the skew cells in reverse
reading order, which is exactly the order in which the lattice condition can
be checked greedily.

Results are memoized in a module-level cache keyed by (lambda, mu, box); the
key is symmetrized since the coefficients are.  The cache follows a
many-readers/single-writer discipline: entries are immutable once stored, so
concurrent readers may race on a miss at worst and recompute the same value.
"""

from __future__ import annotations

from .errors import BoxMismatch
from .partitions import Box, BoxedPartition, partitions_of_weight

_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def _count_lr_tableaux(nu: tuple[int, ...], lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Number of LR skew tableaux of shape nu/lam and content mu."""
    rows = len(nu)
    cells = []
    for i in range(rows):
        lo = lam[i] if i < len(lam) else 0
        for j in range(nu[i] - 1, lo - 1, -1):
            cells.append((i, j))
    n_entries = len(mu)
    entries: dict[tuple[int, int], int] = {}
    counts = [0] * (n_entries + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = entries.get((i, j + 1), n_entries)  # row weakly increasing
        above = entries.get((i - 1, j))           # column strictly increasing
        lo = 1 if above is None else above + 1
        total = 0
        for e in range(lo, hi + 1):
            if counts[e] >= mu[e - 1]:
                continue
            if e > 1 and counts[e] >= counts[e - 1]:
                continue  # lattice condition on the reverse reading word
            counts[e] += 1
            entries[(i, j)] = e
            total += rec(idx + 1)
            del entries[(i, j)]
            counts[e] -= 1
        return total

    return rec(0)


def lr_expand(lam: BoxedPartition, mu: BoxedPartition) -> dict[BoxedPartition, int]:
    """Box-truncated product of the Schubert cohomology classes of lam and mu.

    Returns {nu: c} over partitions nu in the common box with
    |nu| = |lam| + |mu| and c the classical LR coefficient.
    """
    if lam.box != mu.box:
        raise BoxMismatch(f"{lam} and {mu} live in different boxes")
    box = lam.box
    a, b = sorted((lam.parts, mu.parts))
    key = (a, b, box.m, box.k)
    hit = _CACHE.get(key)
    if hit is None:
        hit = {}
        for nu in partitions_of_weight(sum(a) + sum(b), box):
            if any(n < l for n, l in zip(nu.parts, a)):
                continue
            c = _count_lr_tableaux(nu.parts, a, tuple(p for p in b if p > 0))
            if c:
                hit[nu.parts] = c
        _CACHE[key] = hit
    return {BoxedPartition(box, parts): c for parts, c in hit.items()}


def horizontal_strips(lam: BoxedPartition, size: int) -> list[BoxedPartition]:
    """All nu in the box with nu/lam a horizontal strip of the given size.

    Independent oracle for single-row products: no memoization, no tableau
    counting, just the strip inequalities lam_{i-1} >= nu_i >= lam_i.
    """
    m, k = lam.box
    out: list[tuple[int, ...]] = []

    def rec(i: int, prefix: list[int], remaining: int) -> None:
        if i == k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        hi = min(m if i == 0 else lam.parts[i - 1], lam.parts[i] + remaining)
        for x in range(hi, lam.parts[i] - 1, -1):
            prefix.append(x)
            rec(i + 1, prefix, remaining - (x - lam.parts[i]))
            prefix.pop()

    rec(0, [], size)
    return [BoxedPartition(lam.box, p) for p in out]


def vertical_strips(lam: BoxedPartition, size: int) -> list[BoxedPartition]:
    """All nu in the box with nu/lam a vertical strip of the given size."""
    m, k = lam.box
    out: list[tuple[int, ...]] = []

    def rec(i: int, prefix: list[int], remaining: int) -> None:
        if i == k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for delta in (1, 0):
            if delta > remaining:
                continue
            x = lam.parts[i] + delta
            if x > m or (i > 0 and x > prefix[i - 1]):
                continue
            prefix.append(x)
            rec(i + 1, prefix, remaining - delta)
            prefix.pop()

    rec(0, [], size)
    return sorted(
        (BoxedPartition(lam.box, p) for p in out),
        key=lambda b: b.parts,
        reverse=True,
    )


def pieri_row_product(lam: BoxedPartition, size: int) -> dict[BoxedPartition, int]:
    """Single-row product via strip enumeration (multiplicity-free)."""
    return {nu: 1 for nu in horizontal_strips(lam, size)}


def pieri_column_product(lam: BoxedPartition, size: int) -> dict[BoxedPartition, int]:
    """Single-column product via strip enumeration (multiplicity-free)."""
    return {nu: 1 for nu in vertical_strips(lam, size)}
