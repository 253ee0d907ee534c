"""Partitions confined to a box, and the combinatorics built on them.

A partition in the m-by-k box is a weakly decreasing tuple of k integers
between 0 and m.  Trailing zeros are stored explicitly, so (3,) in a 3x3 box
is always the tuple (3, 0, 0); this keeps map keys unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import (
    BoxMismatch,
    EmptyBox,
    ExceedsBox,
    NotInvertible,
    NotWeaklyDecreasing,
    ShrinkingBox,
)


class Box(NamedTuple):
    """Row bound m and number of parts k; both nonnegative."""

    m: int
    k: int

    def __str__(self) -> str:
        return f"{self.m}x{self.k}"

    @property
    def cells(self) -> int:
        return self.m * self.k


@dataclass(frozen=True)
class BoxedPartition:
    """Weakly decreasing tuple of box.k parts, each between 0 and box.m."""

    box: Box
    parts: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def nonzero(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p > 0)

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.parts)

    def is_full(self) -> bool:
        return all(p == self.box.m for p in self.parts)

    def __str__(self) -> str:
        body = ",".join(str(p) for p in self.parts) if self.parts else "-"
        return f"{body} @ {self.box}"


def make_boxed(parts, box: Box) -> BoxedPartition:
    """Validate and normalize `parts` into `box`, padding trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
    if parts and parts[-1] < 0:
        raise NotWeaklyDecreasing(f"{parts} has a negative part")
    nonzero = tuple(p for p in parts if p > 0)
    if any(p > box.m for p in nonzero):
        raise ExceedsBox(f"{parts} has a part exceeding m={box.m}")
    if len(nonzero) > box.k:
        raise ExceedsBox(f"{parts} has more than k={box.k} nonzero parts")
    padded = nonzero + (0,) * (box.k - len(nonzero))
    return BoxedPartition(box, padded)


def zero_partition(box: Box) -> BoxedPartition:
    return BoxedPartition(box, (0,) * box.k)


def full_partition(box: Box) -> BoxedPartition:
    return BoxedPartition(box, (box.m,) * box.k)


def extend(a: BoxedPartition, target: Box) -> BoxedPartition:
    """Zero-extend `a` into a larger box."""
    if target.m < a.box.m or target.k < a.box.k:
        raise ShrinkingBox(f"cannot extend {a} into {target}")
    return BoxedPartition(target, a.nonzero() + (0,) * (target.k - len(a.nonzero())))


def leq(b: BoxedPartition, a: BoxedPartition) -> bool:
    """Componentwise comparison; both operands must share a box."""
    if b.box != a.box:
        raise BoxMismatch(f"{b} and {a} live in different boxes")
    return all(x <= y for x, y in zip(b.parts, a.parts))


def amalgamate(x: BoxedPartition, y: BoxedPartition) -> BoxedPartition:
    """Join two boxed partitions into the summed box.

    The first y.box.k parts are x.box.m + y_i, the rest are the parts of x.
    The weight grows by exactly y.box.k * x.box.m.
    """
    box = Box(x.box.m + y.box.m, x.box.k + y.box.k)
    parts = tuple(x.box.m + p for p in y.parts) + x.parts
    return BoxedPartition(box, parts)


def complement(a: BoxedPartition) -> BoxedPartition:
    """The unique partner b with a_i + b_{k+1-i} = m for all i; an involution."""
    m, k = a.box
    return BoxedPartition(a.box, tuple(m - a.parts[k - 1 - i] for i in range(k)))


def conjugate_shape(parts) -> tuple[int, ...]:
    """Transpose of the Young diagram, as a tuple of nonzero column heights."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@dataclass(frozen=True)
class RectangleDecomposition:
    """Maximal constant blocks (width, multiplicity) of the nonzero parts."""

    blocks: tuple[tuple[int, int], ...]

    def expand(self) -> tuple[int, ...]:
        out: list[int] = []
        for p, q in self.blocks:
            out.extend([p] * q)
        return tuple(out)


def rectangle_decomposition(a: BoxedPartition) -> RectangleDecomposition:
    blocks: list[tuple[int, int]] = []
    for p in a.nonzero():
        if blocks and blocks[-1][0] == p:
            blocks[-1] = (p, blocks[-1][1] + 1)
        else:
            blocks.append((p, 1))
    return RectangleDecomposition(tuple(blocks))


def lw_singular_partitions(a: BoxedPartition) -> list[BoxedPartition]:
    """Index partitions of the singular locus of the Schubert variety of `a`.

    There is one partition per adjacent block pair of the rectangle
    decomposition: drop a row from block i, then widen block i+1 by one row
    while shaving its rightmost column.  Empty exactly when `a` is
    rectangular, whose Schubert variety is nonsingular.
    """
    blocks = rectangle_decomposition(a).blocks
    r = len(blocks)
    out: list[BoxedPartition] = []
    for i in range(1, r):
        parts: list[int] = []
        for j, (p, q) in enumerate(blocks, start=1):
            if j == i:
                parts.extend([p] * (q - 1))
            elif j == i + 1:
                parts.extend([p - 1] * (q + 1))
            else:
                parts.extend([p] * q)
        out.append(make_boxed([p for p in parts if p > 0], a.box))
    return out


@dataclass(frozen=True)
class ComplementaryProfile:
    """Second-factor data (m'', k'', a'') extracted from a first-factor a'."""

    source: BoxedPartition
    m2: int
    k2: int
    complement: BoxedPartition


def complementary_profile(aprime: BoxedPartition) -> ComplementaryProfile:
    """Split off the rotated complement of a' below its leading run.

    m'' is the first part, k'' counts the parts strictly below it, and a''
    fills the m''-by-k'' box left over after removing the leading run.  The
    zero partition yields the empty profile in the 0x0 box.
    """
    m1, k1 = aprime.box
    if k1 == 0:
        raise EmptyBox("complementary profile needs k > 0")
    m2 = aprime.parts[0]
    run = max(t + 1 for t, p in enumerate(aprime.parts) if p == m2)
    k2 = k1 - run
    comp = tuple(m2 - aprime.parts[k1 - 1 - t] for t in range(k2))
    return ComplementaryProfile(aprime, m2, k2, BoxedPartition(Box(m2, k2), comp))


def reconstruct_from_complement(a2: BoxedPartition, boxprime: Box) -> BoxedPartition:
    """Inverse of `complementary_profile` on its image.

    Rebuilds a' = (m'', ..., m'', m'' - a''_{k''}, ..., m'' - a''_1) inside
    boxprime.  Fails when k'' >= k', when m'' exceeds the target row bound,
    or when a'' has a trailing zero (the leading-run length would not match).
    """
    m2, k2 = a2.box
    m1, k1 = boxprime
    if k2 >= k1:
        raise NotInvertible(f"k''={k2} must be smaller than k'={k1}")
    if m2 > m1:
        raise NotInvertible(f"m''={m2} exceeds the row bound m'={m1}")
    if k2 > 0 and a2.parts[k2 - 1] == 0:
        raise NotInvertible(f"{a2} has a trailing zero part")
    head = [m2] * (k1 - k2)
    tail = [m2 - a2.parts[t] for t in range(k2)]
    tail.reverse()
    return BoxedPartition(boxprime, tuple(head + tail))


@lru_cache(maxsize=None)
def _weight_slices(weight: int, m: int, k: int) -> tuple[BoxedPartition, ...]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, cap: int, slots: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        hi = min(cap, remaining)
        for x in range(hi, -1, -1):
            if remaining - x > x * (slots - 1):
                break
            prefix.append(x)
            rec(prefix, remaining - x, x, slots - 1)
            prefix.pop()

    rec([], weight, m, k)
    box = Box(m, k)
    return tuple(BoxedPartition(box, p) for p in out)


def partitions_of_weight(weight: int, box: Box) -> tuple[BoxedPartition, ...]:
    """All partitions in `box` of the given weight, descending-lex order."""
    if weight < 0 or weight > box.m * box.k:
        return ()
    return _weight_slices(weight, box.m, box.k)


def partitions_in_box(box: Box) -> Iterator[BoxedPartition]:
    """All partitions in `box`, descending-lex order."""
    m, k = box

    def rec(prefix: list[int], cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            yield tuple(prefix)
            return
        for x in range(cap, -1, -1):
            prefix.append(x)
            yield from rec(prefix, x, slots - 1)
            prefix.pop()

    for parts in rec([], m, k):
        yield BoxedPartition(box, parts)


def partitions_below(top: BoxedPartition, weight: int) -> list[BoxedPartition]:
    """Partitions b <= top of the given weight, descending-lex order."""
    k = top.box.k
    out: list[tuple[int, ...]] = []
    if weight < 0 or weight > top.weight:
        return []

    def rec(i: int, prefix: list[int], remaining: int, prev: int) -> None:
        if i == k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        hi = min(top.parts[i], prev, remaining)
        # the slots below i are each bounded by top, so prune on their total
        tail_room = sum(top.parts[i + 1 :])
        for x in range(hi, -1, -1):
            if remaining - x > min(tail_room, x * (k - i - 1)):
                break
            prefix.append(x)
            rec(i + 1, prefix, remaining - x, x)
            prefix.pop()

    rec(0, [], weight, top.box.m)
    return [BoxedPartition(top.box, p) for p in out]
