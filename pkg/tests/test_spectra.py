"""Differential and Walsh spectra against slow, independent oracles."""

import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from apnquad import (
    NotQuadratic,
    VBFunction,
    component_masks,
    ddt,
    diff_uniformity_exhaustive,
    diff_uniformity_quadratic,
    gold,
    identity_fn,
    inverse_fn,
    is_apn,
    make_field,
    make_poly,
    walsh_spectrum,
    walsh_transform_row,
)


def du_oracle(f):
    size = f.field.order
    worst = 0
    for q in range(1, size):
        counts = Counter(f.table[x ^ q] ^ f.table[x] for x in range(size))
        worst = max(worst, max(counts.values()))
    return worst


def walsh_oracle(ctx, f, a, b):
    """Direct sign sum from the trace definition."""
    total = 0
    for x in ctx.elements():
        e = ctx.trace(ctx.mul(a, x)) ^ ctx.trace(ctx.mul(b, f.table[x]))
        total += 1 if e == 0 else -1
    return total


def test_uniformity_reference_points(ctx6):
    cube = gold(ctx6, 1)
    assert diff_uniformity_exhaustive(cube).uniformity == 2
    assert diff_uniformity_quadratic(cube).max_kernel == 2
    x5 = gold(ctx6, 2)  # gcd(2, 6) = 2, so not APN
    assert diff_uniformity_exhaustive(x5).uniformity == 4
    assert diff_uniformity_quadratic(x5).max_kernel == 4
    ident = identity_fn(ctx6)
    assert diff_uniformity_exhaustive(ident).uniformity == 64
    assert diff_uniformity_quadratic(ident).max_kernel == 64


def test_gold_histograms_frozen(ctx6):
    spec = diff_uniformity_exhaustive(gold(ctx6, 1))
    assert spec.histogram == ((0, 2016), (2, 2016))
    rep = diff_uniformity_quadratic(gold(ctx6, 1))
    assert rep.as_dict() == {"max_kernel": 2, "kernel_size_counts": {"2": 63}}
    assert len(rep.kernel_sizes) == 63


@given(st.lists(st.integers(0, 7), min_size=8, max_size=8))
@settings(max_examples=40)
def test_exhaustive_matches_dict_oracle(table):
    ctx = make_field(3)
    f = VBFunction.from_table(ctx, table)
    assert diff_uniformity_exhaustive(f).uniformity == du_oracle(f)


def test_quadratic_route_matches_exhaustive_on_random_quadratics(ctx6):
    rng = random.Random(17)
    quad_exps = [e for e in range(1, 64) if e.bit_count() <= 2]
    for _ in range(6):
        terms = [(rng.randrange(1, 64), rng.choice(quad_exps)) for _ in range(3)]
        f = VBFunction.from_poly(ctx6, make_poly(ctx6, terms))
        ex = diff_uniformity_exhaustive(f).uniformity
        ker = diff_uniformity_quadratic(f).max_kernel
        assert ex == ker


def test_quadratic_route_refuses_high_degree(ctx6):
    with pytest.raises(NotQuadratic):
        diff_uniformity_quadratic(inverse_fn(ctx6))


def test_is_apn_methods(ctx6):
    cube = gold(ctx6, 1)
    assert is_apn(cube, method="exhaustive")
    assert is_apn(cube, method="quadratic")
    assert is_apn(cube, method="both")
    assert not is_apn(gold(ctx6, 2), method="both")
    with pytest.raises(ValueError):
        is_apn(cube, method="psychic")


def test_ddt_structure(ctx3, ctx6):
    cube = gold(ctx3, 1)
    table = ddt(cube)
    assert table[0][0] == 8
    assert all(int(row.sum()) == 8 for row in table)
    # full cross-check against a dict count
    for q in range(8):
        counts = Counter(cube.table[x ^ q] ^ cube.table[x] for x in range(8))
        for p in range(8):
            assert table[q][p] == counts.get(p, 0)
    big = ddt(gold(ctx6, 1))
    assert int(big[1:].max()) == 2


def test_component_masks_realize_trace():
    ctx = make_field(4)
    masks = component_masks(ctx)
    for c in ctx.elements():
        for y in ctx.elements():
            assert ctx.trace(ctx.mul(c, y)) == (int(masks[c]) & y).bit_count() & 1


def test_walsh_row_matches_trace_oracle():
    ctx = make_field(4)
    f = gold(ctx, 1)
    for b in range(1, 16):
        row = walsh_transform_row(f, b)
        for a in range(16):
            assert int(row[a]) == walsh_oracle(ctx, f, a, b)


def test_walsh_row_spot_check_n6(ctx6):
    f = gold(ctx6, 1)
    row = walsh_transform_row(f, 5)
    for a in (0, 1, 9, 33, 63):
        assert int(row[a]) == walsh_oracle(ctx6, f, a, 5)


def test_walsh_parseval_every_component(ctx6):
    f = gold(ctx6, 1)
    for b in range(1, 64):
        row = walsh_transform_row(f, b)
        assert int((row * row).sum()) == 64 * 64


def test_gold_walsh_spectrum_frozen(ctx6):
    spec = walsh_spectrum(gold(ctx6, 1))
    assert spec.values == ((0, 1008), (8, 2688), (16, 336))
    assert spec.nonlinearity == 24
    total = sum(c for _, c in spec.values)
    assert total == 63 * 64  # all a, all b != 0


def test_worker_count_does_not_change_results(ctx6):
    f = gold(ctx6, 1)
    assert (
        diff_uniformity_exhaustive(f, workers=4).histogram
        == diff_uniformity_exhaustive(f, workers=1).histogram
    )
    assert walsh_spectrum(f, workers=4).values == walsh_spectrum(f, workers=1).values
    assert (
        diff_uniformity_quadratic(f, workers=4).kernel_sizes
        == diff_uniformity_quadratic(f, workers=1).kernel_sizes
    )


def test_spectrum_dict_shapes(ctx6):
    d = diff_uniformity_exhaustive(gold(ctx6, 1)).as_dict()
    assert d == {"uniformity": 2, "histogram": {"0": 2016, "2": 2016}}
    w = walsh_spectrum(gold(ctx6, 1)).as_dict()
    assert w["nonlinearity"] == 24
    assert w["values"]["16"] == 336
