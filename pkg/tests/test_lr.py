from concurrent.futures import ThreadPoolExecutor

import pytest

from schubert import Box, BoxMismatch, lr_expand, make_boxed
from schubert.lr import (
    cache_size,
    clear_cache,
    horizontal_strips,
    pieri_column_product,
    pieri_row_product,
    vertical_strips,
)
from schubert.partitions import partitions_in_box


def _as_dict(result):
    return {p.parts: c for p, c in result.items()}


def test_lr_examples():
    box = Box(2, 2)
    one = make_boxed([1], box)
    assert _as_dict(lr_expand(one, one)) == {(2, 0): 1, (1, 1): 1}
    assert _as_dict(lr_expand(make_boxed([2, 1], box), one)) == {(2, 2): 1}
    box3 = Box(3, 3)
    assert _as_dict(
        lr_expand(make_boxed([3], box3), make_boxed([2, 1], box3))
    ) == {(3, 2, 1): 1}


def test_lr_box_mismatch():
    with pytest.raises(BoxMismatch):
        lr_expand(make_boxed([1], Box(2, 2)), make_boxed([1], Box(3, 3)))


def test_lr_empty_and_identity():
    box = Box(3, 2)
    zero = make_boxed([], box)
    lam = make_boxed([2, 1], box)
    assert lr_expand(lam, zero) == {lam: 1}


def test_lr_symmetry():
    box = Box(3, 3)
    lam = make_boxed([2, 1], box)
    mu = make_boxed([2, 2], box)
    assert lr_expand(lam, mu) == lr_expand(mu, lam)


def test_lr_known_multiplicity_two():
    # the classical square of (2,1), truncated to the 3x3 box
    box = Box(3, 3)
    lam = make_boxed([2, 1], box)
    assert _as_dict(lr_expand(lam, lam)) == {
        (3, 3, 0): 1,
        (3, 2, 1): 2,
        (2, 2, 2): 1,
    }


def test_strip_enumerators():
    box = Box(3, 3)
    lam = make_boxed([2, 1], box)
    rows = {p.parts for p in horizontal_strips(lam, 2)}
    assert rows == {(3, 2, 0), (3, 1, 1), (2, 2, 1)}
    cols = {p.parts for p in vertical_strips(lam, 2)}
    assert cols == {(3, 2, 0), (2, 2, 1), (3, 1, 1)}


def test_pieri_cross_validation_small():
    for box in (Box(2, 2), Box(3, 2), Box(2, 3), Box(4, 1)):
        for lam in partitions_in_box(box):
            for t in range(box.m + 1):
                mu = make_boxed([t], box)
                assert lr_expand(lam, mu) == pieri_row_product(lam, t)
            for t in range(box.k + 1):
                mu = make_boxed([1] * t, box)
                assert lr_expand(lam, mu) == pieri_column_product(lam, t)


def test_cache_concurrent_determinism():
    box = Box(3, 3)
    parts = list(partitions_in_box(box))
    cases = [(a, b) for a in parts for b in parts]
    clear_cache()
    serial = [lr_expand(a, b) for a, b in cases]
    clear_cache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(lambda ab: lr_expand(*ab), cases))
    assert serial == threaded
    assert cache_size() > 0
