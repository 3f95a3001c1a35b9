"""Code-based invariants: matrix layout, weight enumerator, bundles,
comparison verdicts, linear factor extraction."""

import random

import pytest

from apnquad import (
    AffineMap,
    BudgetExceeded,
    FamilyParams,
    FieldMismatch,
    VBFunction,
    apply_ea_transform,
    build_code,
    code_dimension,
    compare_bundles,
    compare_invariants,
    construct,
    gold,
    identity_fn,
    invariant_bundle,
    linearized_factor_check,
    make_poly,
    random_affine_map,
    weight_enumerator,
)
from apnquad.codes import CodeMatrix

GOLD_N6_WEIGHTS = {0: 1, 24: 336, 28: 2688, 32: 2142, 36: 2688, 40: 336, 64: 1}


def rank_oracle(rows):
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if pivot == 0:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank


def enumerator_oracle(f):
    """Walks all (c, a, b) combinations straight from the defining bit
    pattern c + <a, x> + <b, f(x)>, no row reduction involved."""
    size = f.field.order
    ones = (1 << size) - 1
    avec = []
    bvec = []
    for m in range(size):
        va = 0
        vb = 0
        for x in range(size):
            va |= ((m & x).bit_count() & 1) << x
            vb |= ((m & f.table[x]).bit_count() & 1) << x
        avec.append(va)
        bvec.append(vb)
    counts = {}
    seen = set()
    for c in (0, ones):
        for a in range(size):
            for b in range(size):
                word = c ^ avec[a] ^ bvec[b]
                if word in seen:
                    continue
                seen.add(word)
                w = word.bit_count()
                counts[w] = counts.get(w, 0) + 1
    return counts


def test_build_code_layout(ctx3):
    f = gold(ctx3, 1)
    m = build_code(f)
    assert m.length == 8 and m.n == 3 and len(m.rows) == 7
    for x in range(8):
        col = [(r >> x) & 1 for r in m.rows]
        assert col[0] == 1
        assert sum(col[1 + i] << i for i in range(3)) == x
        assert sum(col[4 + i] << i for i in range(3)) == f.table[x]


def test_code_dimension_reference_points(ctx6):
    zero = VBFunction.from_table(ctx6, [0] * 64)
    assert code_dimension(build_code(zero)) == 7
    assert code_dimension(build_code(identity_fn(ctx6))) == 7
    m = build_code(gold(ctx6, 1))
    assert code_dimension(m) == 13
    assert rank_oracle(m.rows) == 13


def test_weight_enumerator_small_cases():
    empty = CodeMatrix(rows=(0, 0), length=4, n=2)
    counts = weight_enumerator(empty)
    assert counts[0] == 1 and sum(counts) == 1
    single = CodeMatrix(rows=(0b1011,), length=4, n=2)
    counts = weight_enumerator(single)
    assert counts[0] == 1 and counts[3] == 1 and sum(counts) == 2


def test_weight_enumerator_budget():
    wide = CodeMatrix(rows=tuple(1 << i for i in range(26)), length=26, n=13)
    with pytest.raises(BudgetExceeded):
        weight_enumerator(wide)


def test_gold_weight_enumerator_frozen_and_oracle(ctx6):
    f = gold(ctx6, 1)
    counts = weight_enumerator(build_code(f))
    nonzero = {w: c for w, c in enumerate(counts) if c}
    assert nonzero == GOLD_N6_WEIGHTS
    assert sum(counts) == 1 << 13
    assert counts[0] == 1
    # complement closure: the all-ones row maps weight w to 64 - w
    assert all(counts[w] == counts[64 - w] for w in range(65))
    assert enumerator_oracle(f) == GOLD_N6_WEIGHTS


def test_bundle_is_ea_invariant(ctx6):
    f = gold(ctx6, 1)
    base = invariant_bundle(f)
    rng = random.Random(23)
    for _ in range(2):
        outer = random_affine_map(6, rng, invertible=True)
        inner = random_affine_map(6, rng, invertible=True)
        added = random_affine_map(6, rng)
        g = apply_ea_transform(f, outer, inner, added)
        verdict = compare_bundles(base, invariant_bundle(g))
        assert verdict.status == "indistinguishable"
        assert verdict.witness is None


def test_bundle_hash_stable_and_discriminating(ctx6):
    b1 = invariant_bundle(gold(ctx6, 1)).as_dict()
    b2 = invariant_bundle(gold(ctx6, 1)).as_dict()
    assert b1["content_hash"] == b2["content_hash"]
    other = invariant_bundle(identity_fn(ctx6)).as_dict()
    assert other["content_hash"] != b1["content_hash"]


def test_compare_verdicts(ctx6, ctx3):
    f = gold(ctx6, 1)
    same = compare_invariants(f, f)
    assert same.as_dict() == {"status": "indistinguishable", "witness": None}
    diff = compare_invariants(f, identity_fn(ctx6))
    assert diff.status == "distinguished"
    assert diff.witness == "code_dimension"
    with pytest.raises(FieldMismatch):
        compare_invariants(f, gold(ctx3, 1))


def test_linearized_factor_found_for_binomial(ctx6):
    f = construct(ctx6, FamilyParams(2, 1, 0x2, 0, 0))
    witness = linearized_factor_check(f, 3)
    assert witness is not None
    assert witness.constant == 0
    assert witness.is_permutation()
    for x in ctx6.elements():
        assert witness.apply(ctx6.pow(x, 3)) == f.table[x]


def test_linearized_factor_on_cube_is_identity(ctx6):
    witness = linearized_factor_check(gold(ctx6, 1), 3)
    assert witness == AffineMap(cols=(1, 2, 4, 8, 16, 32), constant=0)


def test_linearized_factor_refusals(ctx6):
    # x^3 + x is not any linear image of x^3
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3), (1, 1)]))
    assert linearized_factor_check(f, 3) is None
    # x + x^2 factors through x trivially but is not invertible
    g = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 1), (1, 2)]))
    assert linearized_factor_check(g, 1) is None
