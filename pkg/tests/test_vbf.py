"""Function representations: polynomials, tables, ANF degree, affine
maps, EA transforms, wire formats."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from apnquad import (
    AffineMap,
    FieldMismatch,
    InputError,
    NotAPermutation,
    VBFunction,
    algebraic_degree,
    apply_ea_transform,
    evaluate_poly,
    function_from_spec_dict,
    function_to_spec_dict,
    load_function_spec,
    load_table_file,
    make_field,
    make_poly,
    mobius_anf,
    random_affine_map,
    save_function_spec,
    save_table_file,
)
from apnquad.vbf import algebraic_degree_from_table


def eval_oracle(ctx, poly, x):
    """Power by repeated multiplication, no log tables."""
    acc = poly.constant
    for c, e in poly.terms:
        p = 1
        for _ in range(e):
            p = ctx.mul(p, x)
        acc ^= ctx.mul(c, p)
    return acc


def test_make_poly_folds_and_cancels(ctx6):
    p = make_poly(ctx6, [(1, 64)])  # 64 = 1 mod 63
    assert p.terms == ((1, 1),)
    p = make_poly(ctx6, [(1, 126)])  # residues live in [1, 63]
    assert p.terms == ((1, 63),)
    p = make_poly(ctx6, [(1, 3), (1, 3)])
    assert p.terms == ()
    p = make_poly(ctx6, [(2, 3), (3, 3), (0, 10)])
    assert p.terms == ((1, 3),)


def test_make_poly_rejects_exponent_zero(ctx6):
    with pytest.raises(InputError):
        make_poly(ctx6, [(1, 0)])
    assert make_poly(ctx6, [], constant=5).constant == 5


@given(st.integers(0, 63))
@settings(max_examples=25)
def test_evaluate_matches_slow_oracle(x):
    ctx = make_field(6)
    poly = make_poly(ctx, [(7, 10), (3, 5), (1, 1)], constant=9)
    assert evaluate_poly(ctx, poly, x) == eval_oracle(ctx, poly, x)


def test_degree_bound_counts_exponent_bits(ctx6):
    assert make_poly(ctx6, [(1, 3)]).degree_bound() == 2
    assert make_poly(ctx6, [(1, 5)]).degree_bound() == 2
    assert make_poly(ctx6, [(1, 62)]).degree_bound() == 5
    assert make_poly(ctx6, [], constant=1).degree_bound() == 0


def test_algebraic_degree_table_vs_poly(ctx6):
    cube = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3)]))
    assert algebraic_degree(cube) == 2
    assert algebraic_degree_from_table(cube) == 2
    inv = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 62)]))
    assert algebraic_degree_from_table(inv) == 5
    affine = VBFunction.from_poly(ctx6, make_poly(ctx6, [(3, 1)], constant=7))
    assert algebraic_degree_from_table(affine) == 1
    const = VBFunction.from_table(ctx6, [9] * 64)
    assert algebraic_degree_from_table(const) == 0


@given(st.lists(st.integers(0, 1), min_size=16, max_size=16))
def test_mobius_is_an_involution(bits):
    assert mobius_anf(mobius_anf(bits)) == bits


def test_mobius_rejects_bad_shapes():
    with pytest.raises(InputError):
        mobius_anf([0, 1, 1])  # not a power of two
    with pytest.raises(InputError):
        mobius_anf([0, 2])


def test_mobius_known_values():
    # f(x0,x1) = x0 AND x1 has the single top ANF coefficient
    assert mobius_anf([0, 0, 0, 1]) == [0, 0, 0, 1]
    # constant one
    assert mobius_anf([1, 1, 1, 1]) == [1, 0, 0, 0]


def test_affine_map_basics():
    ident = AffineMap.identity(4)
    assert ident.apply(0b1010) == 0b1010
    assert ident.is_permutation()
    skew = AffineMap(cols=(1, 2, 4, 8), constant=0b1111)
    assert skew.apply(0) == 0b1111
    singular = AffineMap(cols=(1, 1, 2, 4))
    assert not singular.is_permutation()


def test_random_affine_map_invertible_flag():
    rng = random.Random(11)
    for _ in range(10):
        m = random_affine_map(6, rng, invertible=True)
        assert m.is_permutation()


def test_ea_transform_table(ctx6):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3)]))
    ident = AffineMap.identity(6)
    same = apply_ea_transform(f, ident, ident)
    assert same.table == f.table
    rng = random.Random(5)
    outer = random_affine_map(6, rng, invertible=True)
    inner = random_affine_map(6, rng, invertible=True)
    added = random_affine_map(6, rng)
    g = apply_ea_transform(f, outer, inner, added)
    for x in range(0, 64, 7):
        assert g(x) == outer.apply(f(inner.apply(x))) ^ added.apply(x)
    # EA keeps algebraic degree for degree >= 2
    assert algebraic_degree_from_table(g) == 2


def test_ea_transform_requires_invertible_sides(ctx6):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3)]))
    singular = AffineMap(cols=(1, 1, 2, 4, 8, 16))
    with pytest.raises(NotAPermutation):
        apply_ea_transform(f, singular, AffineMap.identity(6))
    with pytest.raises(NotAPermutation):
        apply_ea_transform(f, AffineMap.identity(6), singular)


def test_ea_transform_field_mismatch(ctx6, ctx3):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3)]))
    with pytest.raises(FieldMismatch):
        apply_ea_transform(f, AffineMap.identity(3), AffineMap.identity(6))
    g3 = VBFunction.from_poly(ctx3, make_poly(ctx3, [(1, 3)]))
    added = AffineMap.identity(6)
    with pytest.raises(FieldMismatch):
        apply_ea_transform(g3, AffineMap.identity(3), AffineMap.identity(3), added)


def test_from_table_validation(ctx6):
    with pytest.raises(InputError):
        VBFunction.from_table(ctx6, [0] * 63)  # wrong length
    with pytest.raises(InputError):
        VBFunction.from_table(ctx6, [64] + [0] * 63)  # value out of range


def test_spec_dict_round_trip(ctx6):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(7, 24), (1, 3)], constant=2))
    d = function_to_spec_dict(f)
    assert d["field"] == {"n": 6, "modulus": "0x43"}
    exps = {t["exp"] for t in d["terms"]}
    assert exps == {24, 3, 0}  # constant rides as exponent 0
    g = function_from_spec_dict(d)
    assert g.table == f.table
    assert g.field == ctx6


def test_spec_dict_accepts_default_modulus(ctx6):
    d = {"field": {"n": 6, "modulus": "default"}, "terms": [{"coeff": "0x1", "exp": 3}]}
    f = function_from_spec_dict(d)
    assert f.field == ctx6


def test_spec_dict_rejects_garbage():
    with pytest.raises(InputError):
        function_from_spec_dict({"terms": []})


def test_file_round_trips(tmp_path, ctx6):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(2, 3), (16, 24)]))
    spec = tmp_path / "fn.json"
    save_function_spec(f, str(spec))
    assert load_function_spec(str(spec)).table == f.table
    # stored JSON is well-formed and sorted
    data = json.loads(spec.read_text())
    assert list(data) == sorted(data)

    tbl = tmp_path / "fn.tbl"
    save_table_file(f, str(tbl))
    assert load_table_file(ctx6, str(tbl)).table == f.table


def test_table_file_rejects_bad_lines(tmp_path, ctx6):
    p = tmp_path / "bad.tbl"
    p.write_text("0x1\nnope\n")
    with pytest.raises(InputError):
        load_table_file(ctx6, str(p))


def test_function_call_and_equality(ctx6):
    f = VBFunction.from_poly(ctx6, make_poly(ctx6, [(1, 3)]))
    g = VBFunction.from_table(ctx6, list(f.table))
    assert f == g
    assert f(5) == ctx6.pow(5, 3)
