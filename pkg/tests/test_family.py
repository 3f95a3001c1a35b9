"""Family construction, parameter validation, enumeration, and the
catalog of reference functions."""

import random
from collections import Counter

import pytest

from apnquad import (
    FamilyParams,
    FieldMismatch,
    InputError,
    InvalidKS,
    InvalidParams,
    UnsupportedOnThisField,
    WrongDegree,
    bcfl_binomial,
    construct,
    dillon_trinomial,
    dobbertin,
    enumerate_params,
    family_exponents,
    find_dillon_u,
    gold,
    identity_fn,
    inverse_fn,
    kasami,
    known,
    make_field,
    niho,
    random_params,
    specialize_n6,
    validate_params,
    welch,
)
from apnquad.family import construct_unchecked


def du_oracle(f):
    """Dict-count differential uniformity, no numpy, no shortcuts."""
    size = f.field.order
    worst = 0
    for q in range(1, size):
        counts = Counter(f.table[x ^ q] ^ f.table[x] for x in range(size))
        worst = max(worst, max(counts.values()))
    return worst


def test_exponents_n6_and_n3(ctx6, ctx3):
    assert family_exponents(ctx6, 2, 1) == (24, 3, 17, 10)
    assert family_exponents(ctx3, 1, 2) == (5, 5, 5, 5)


def test_enumeration_counts(ctx6, ctx3):
    all6 = list(enumerate_params(ctx6, 2, 1))
    assert len(all6) == 468
    assert all6[0] == FamilyParams(k=2, s=1, u=0x2, v=0, w=0)
    all3 = list(enumerate_params(ctx3, 1, 2))
    assert len(all3) == 18


def test_enumeration_form_split(ctx6):
    forms = Counter(specialize_n6(p) for p in enumerate_params(ctx6, 2, 1))
    assert forms == {"quadrinomial": 216, "v_only": 108, "w_only": 108, "binomial": 36}


def test_ks_side_conditions(ctx6, ctx3):
    with pytest.raises(InvalidKS):
        list(enumerate_params(ctx6, 2, 2))  # k + s not divisible by 3
    with pytest.raises(InvalidKS):
        list(enumerate_params(ctx6, 1, 2))  # n != 3k
    with pytest.raises(InvalidKS):
        list(enumerate_params(ctx3, 1, 4))  # k + s = 5 not divisible by 3
    # s sharing a factor with 3k
    ctx12 = make_field(12)
    with pytest.raises(InvalidKS):
        list(enumerate_params(ctx12, 4, 2))


def test_validate_rejects_bad_scalars(ctx6):
    assert validate_params(ctx6, FamilyParams(2, 1, 0x2, 1, 1)) == [
        "v*w = 1 (v = 0x1, w = 0x1)"
    ]
    bad_u = validate_params(ctx6, FamilyParams(2, 1, 1, 0, 0))
    assert any("not primitive" in p for p in bad_u)
    bad_v = validate_params(ctx6, FamilyParams(2, 1, 0x2, 0x2, 0))
    assert any("subfield" in p for p in bad_v)
    out_of_field = validate_params(ctx6, FamilyParams(2, 1, 0x2, 64, 0))
    assert any("outside" in p for p in out_of_field)


def test_validate_field_mismatch(ctx3):
    with pytest.raises(FieldMismatch):
        validate_params(ctx3, FamilyParams(2, 1, 0x2, 0, 0))


def test_construct_valid_and_invalid(ctx6):
    f = construct(ctx6, FamilyParams(2, 1, 0x2, 0, 0))
    assert tuple(e for _, e in f.poly.terms) == (3, 24)
    with pytest.raises(InvalidParams):
        construct(ctx6, FamilyParams(2, 1, 1, 0, 0))  # u not primitive
    # unchecked variant builds anyway (diagnostics path)
    g = construct_unchecked(ctx6, FamilyParams(2, 1, 1, 0, 0))
    assert g.poly.terms


def test_n3_collapse_to_x5(ctx3):
    members = list(enumerate_params(ctx3, 1, 2))
    first = construct(ctx3, members[0])
    assert first.poly.terms == ((6, 5),)
    for p in members:
        f = construct(ctx3, p)
        assert len(f.poly.terms) == 1
        coeff, exp = f.poly.terms[0]
        assert exp == 5 and coeff != 0


def test_specialize_tags():
    assert specialize_n6(FamilyParams(2, 1, 2, 1, 1)) == "quadrinomial"
    assert specialize_n6(FamilyParams(2, 1, 2, 1, 0)) == "v_only"
    assert specialize_n6(FamilyParams(2, 1, 2, 0, 1)) == "w_only"
    assert specialize_n6(FamilyParams(2, 1, 2, 0, 0)) == "binomial"
    with pytest.raises(WrongDegree):
        specialize_n6(FamilyParams(1, 2, 2, 0, 0))


def test_random_params_always_valid(ctx6):
    rng = random.Random(3)
    for _ in range(20):
        p = random_params(ctx6, 2, 1, rng)
        assert validate_params(ctx6, p) == []


def test_catalog_apn_against_oracle(ctx6):
    ctx5 = make_field(5)
    assert du_oracle(gold(ctx6, 1)) == 2
    assert du_oracle(kasami(ctx5, 2)) == 2
    assert du_oracle(welch(ctx5)) == 2
    assert du_oracle(niho(ctx5)) == 2
    assert du_oracle(inverse_fn(ctx5)) == 2
    assert du_oracle(dobbertin(ctx5)) == 2
    assert du_oracle(identity_fn(ctx6)) == 64  # linear, maximally bad


def test_catalog_guardrails(ctx6, ctx3):
    with pytest.raises(UnsupportedOnThisField):
        welch(ctx6)
    with pytest.raises(UnsupportedOnThisField):
        niho(ctx6)
    with pytest.raises(UnsupportedOnThisField):
        dobbertin(ctx6)
    with pytest.raises(UnsupportedOnThisField):
        dillon_trinomial(ctx3)
    with pytest.raises(InputError):
        gold(ctx6, 0)


def test_dillon_trinomial_frozen_u(ctx6):
    assert find_dillon_u(ctx6) == 0x7
    f = dillon_trinomial(ctx6)
    assert du_oracle(f) == 2
    assert tuple(e for _, e in f.poly.terms) == (3, 10, 24)


def test_bcfl_binomial_is_scaled_family_binomial(ctx6):
    u = 0x2
    b = bcfl_binomial(ctx6, 2, 1, u)
    fam = construct(ctx6, FamilyParams(2, 1, u, 0, 0))
    u_inv = ctx6.inv(u)
    for x in ctx6.elements():
        assert b(x) == ctx6.mul(u_inv, fam(x))
    assert du_oracle(b) == 2


def test_bcfl_binomial_rejects_nonprimitive_u(ctx6):
    with pytest.raises(InputError):
        bcfl_binomial(ctx6, 2, 1, 1)


def test_known_dispatcher(ctx6):
    assert known(ctx6, "gold:2").table == gold(ctx6, 2).table
    assert known(ctx6, "identity").table == identity_fn(ctx6).table
    assert known(ctx6, "dillon_trinomial:0x7").table == dillon_trinomial(ctx6, 0x7).table
    assert known(ctx6, "bcfl_binomial:2,1").table == bcfl_binomial(ctx6, 2, 1).table
    with pytest.raises(InputError):
        known(ctx6, "nope")
    with pytest.raises(InputError):
        known(ctx6, "bcfl_binomial:2")
    with pytest.raises(InputError):
        known(ctx6, "gold:xyz")
