"""The quadrinomial family over GF(2^(3k)) and a catalog of reference functions.

Family shape, exponents as residues mod 2^n - 1:

    F(x) = u^(2^k) * x^(2^-k + 2^(k+s))
         + u       * x^(2^s + 1)
         + v       * x^(2^-k + 1)
         + w*u^(2^k+1) * x^(2^(k+s) + 2^s)

Side conditions: n = 3k, 3 | (k+s), gcd(s, 3k) = 1, gcd(3, k) = 1,
u primitive, v and w in the subfield GF(2^k), v*w != 1.  The v*w != 1
check is the operational reading of "v not the inverse of w" that also
covers w = 0 (where no inverse exists and any v is fine).

At n = 3 all four exponents collapse to 5, so the family degenerates to
c * x^5 with c != 0; at n = 6 the exponents are {24, 3, 17, 10}.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    FieldMismatch,
    InputError,
    InvalidKS,
    InvalidParams,
    UnsupportedOnThisField,
    WrongDegree,
)
from .field import FieldCtx, exp_residue, primitive_elements
from .vbf import VBFunction, make_poly


@dataclass(frozen=True)
class FamilyParams:
    k: int
    s: int
    u: int
    v: int
    w: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "u": f"0x{self.u:x}",
            "v": f"0x{self.v:x}",
            "w": f"0x{self.w:x}",
        }


def ks_violations(n: int, k: int, s: int) -> list:
    """Integer side conditions alone, independent of u, v, w."""
    problems = []
    if k < 1:
        problems.append(f"k must be >= 1, got {k}")
    if s < 1:
        problems.append(f"s must be >= 1, got {s}")
    if n != 3 * k:
        problems.append(f"field degree {n} != 3k = {3 * k}")
    if k >= 1 and s >= 1:
        if (k + s) % 3 != 0:
            problems.append(f"k + s = {k + s} not divisible by 3")
        if math.gcd(s, 3 * k) != 1:
            problems.append(f"gcd(s, 3k) = {math.gcd(s, 3 * k)} != 1")
        if math.gcd(3, k) != 1:
            problems.append(f"gcd(3, k) = {math.gcd(3, k)} != 1")
    return problems


def validate_params(ctx: FieldCtx, params: FamilyParams) -> list:
    """Every violated constraint as a message; empty list means valid."""
    if ctx.n != 3 * params.k:
        raise FieldMismatch(
            f"params have k = {params.k} but the field has degree {ctx.n} != {3 * params.k}"
        )
    problems = ks_violations(ctx.n, params.k, params.s)
    for name, value in (("u", params.u), ("v", params.v), ("w", params.w)):
        if not 0 <= value < ctx.order:
            problems.append(f"{name} = {value} outside GF(2^{ctx.n})")
    if problems:
        return problems
    if not ctx.is_primitive(params.u):
        problems.append(f"u = 0x{params.u:x} is not primitive")
    sub = set(ctx.subfield(params.k))
    if params.v not in sub:
        problems.append(f"v = 0x{params.v:x} not in the subfield GF(2^{params.k})")
    if params.w not in sub:
        problems.append(f"w = 0x{params.w:x} not in the subfield GF(2^{params.k})")
    if ctx.mul(params.v, params.w) == 1:
        problems.append(f"v*w = 1 (v = 0x{params.v:x}, w = 0x{params.w:x})")
    return problems


def family_exponents(ctx: FieldCtx, k: int, s: int) -> tuple:
    """The four exponents as canonical residues (may collide, e.g. n = 3)."""
    return (
        exp_residue(ctx.n, [(1, -k), (1, k + s)]),
        exp_residue(ctx.n, [(1, s), (1, 0)]),
        exp_residue(ctx.n, [(1, -k), (1, 0)]),
        exp_residue(ctx.n, [(1, k + s), (1, s)]),
    )


def construct(ctx: FieldCtx, params: FamilyParams) -> VBFunction:
    """Build the family member; like terms are combined when exponents collide."""
    problems = validate_params(ctx, params)
    if problems:
        raise InvalidParams("; ".join(problems))
    return construct_unchecked(ctx, params)


def construct_unchecked(ctx: FieldCtx, params: FamilyParams) -> VBFunction:
    """Build the polynomial without the side conditions; diagnostics only.

    Still needs k >= 1 and coefficients inside the field to be evaluable
    at all.
    """
    k, s, u, v, w = params.k, params.s, params.u, params.v, params.w
    if k < 1:
        raise InvalidParams(f"k = {k} must be >= 1")
    for name, value in (("u", u), ("v", v), ("w", w)):
        if not 0 <= value < ctx.order:
            raise InvalidParams(f"{name} = {value} outside GF(2^{ctx.n})")
    e1, e2, e3, e4 = family_exponents(ctx, k, s)
    coeff4 = ctx.mul(w, ctx.pow(u, (1 << k) + 1))
    poly = make_poly(
        ctx,
        [
            (ctx.pow(u, 1 << k), e1),
            (u, e2),
            (v, e3),
            (coeff4, e4),
        ],
    )
    return VBFunction.from_poly(ctx, poly)


def enumerate_params(ctx: FieldCtx, k: int, s: int) -> Iterator[FamilyParams]:
    """All valid tuples for fixed (k, s): u over primitive elements in
    generator-power order, then v, w over the subfield in integer order,
    skipping v*w = 1."""
    problems = ks_violations(ctx.n, k, s)
    if problems:
        raise InvalidKS("; ".join(problems))
    sub = ctx.subfield(k)
    for u in primitive_elements(ctx):
        for v in sub:
            for w in sub:
                if ctx.mul(v, w) == 1:
                    continue
                yield FamilyParams(k=k, s=s, u=u, v=v, w=w)


def random_params(ctx: FieldCtx, k: int, s: int, rng: random.Random) -> FamilyParams:
    """One valid tuple drawn with a caller-provided RNG (reproducible)."""
    problems = ks_violations(ctx.n, k, s)
    if problems:
        raise InvalidKS("; ".join(problems))
    prims = primitive_elements(ctx)
    sub = ctx.subfield(k)
    while True:
        u = rng.choice(prims)
        v = rng.choice(sub)
        w = rng.choice(sub)
        if ctx.mul(v, w) != 1:
            return FamilyParams(k=k, s=s, u=u, v=v, w=w)


N6_FORMS = ("quadrinomial", "v_only", "w_only", "binomial")


def specialize_n6(params: FamilyParams) -> str:
    """Which of the four n = 6 shapes the zero pattern of (v, w) gives.

    quadrinomial: terms {3, 10, 17, 24};  v_only (w = 0): {3, 17, 24};
    w_only (v = 0): {3, 10, 24};  binomial (v = w = 0): {3, 24}.
    """
    if 3 * params.k != 6:
        raise WrongDegree(f"n = 6 specialization asked for k = {params.k}")
    if params.v and params.w:
        return "quadrinomial"
    if params.v:
        return "v_only"
    if params.w:
        return "w_only"
    return "binomial"


# -- known functions for comparison ------------------------------------------


def identity_fn(ctx: FieldCtx) -> VBFunction:
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, 1)]))


def gold(ctx: FieldCtx, i: int) -> VBFunction:
    """x^(2^i + 1); APN iff gcd(i, n) = 1."""
    if i < 1:
        raise InputError(f"gold index must be >= 1, got {i}")
    e = exp_residue(ctx.n, [(1, i), (1, 0)])
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def kasami(ctx: FieldCtx, i: int) -> VBFunction:
    """x^(2^(2i) - 2^i + 1); APN iff gcd(i, n) = 1."""
    if i < 1:
        raise InputError(f"kasami index must be >= 1, got {i}")
    e = exp_residue(ctx.n, [(1, 2 * i), (-1, i), (1, 0)])
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def welch(ctx: FieldCtx) -> VBFunction:
    """x^(2^t + 3) on odd n = 2t + 1."""
    if ctx.n % 2 == 0:
        raise UnsupportedOnThisField(f"welch needs odd degree, got {ctx.n}")
    t = ctx.n // 2
    e = exp_residue(ctx.n, [(1, t), (1, 1), (1, 0)])
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def niho(ctx: FieldCtx) -> VBFunction:
    """Niho exponent on odd n = 2t + 1 (two shapes, by parity of t)."""
    if ctx.n % 2 == 0:
        raise UnsupportedOnThisField(f"niho needs odd degree, got {ctx.n}")
    t = ctx.n // 2
    if t % 2 == 0:
        e = exp_residue(ctx.n, [(1, t), (1, t // 2), (-1, 0)])
    else:
        e = exp_residue(ctx.n, [(1, t), (1, (3 * t + 1) // 2), (-1, 0)])
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def inverse_fn(ctx: FieldCtx) -> VBFunction:
    """x^(2^n - 2), i.e. field inversion extended by 0 -> 0; APN iff n odd."""
    e = ctx.group_order - 1  # 2^n - 2 as a residue
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def dobbertin(ctx: FieldCtx) -> VBFunction:
    """x^(2^(4t) + 2^(3t) + 2^(2t) + 2^t - 1) on n = 5t."""
    if ctx.n % 5 != 0:
        raise UnsupportedOnThisField(f"dobbertin needs 5 | n, got {ctx.n}")
    t = ctx.n // 5
    e = exp_residue(ctx.n, [(1, 4 * t), (1, 3 * t), (1, 2 * t), (1, t), (-1, 0)])
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e)]))


def dillon_trinomial(ctx: FieldCtx, u: Optional[int] = None) -> VBFunction:
    """x^3 + x^10 + u*x^24 on GF(2^6); u = None searches for an APN u."""
    if ctx.n != 6:
        raise UnsupportedOnThisField(f"dillon trinomial is an n = 6 object, got n = {ctx.n}")
    if u is None:
        u = find_dillon_u(ctx)
    if not 1 <= u < ctx.order:
        raise InputError(f"u = {u} outside GF(2^6)*")
    poly = make_poly(ctx, [(1, 3), (1, 10), (u, 24)])
    return VBFunction.from_poly(ctx, poly)


def find_dillon_u(ctx: FieldCtx) -> int:
    """Smallest u (as an int) making x^3 + x^10 + u*x^24 APN on GF(2^6)."""
    from .spectra import is_apn

    if ctx.n != 6:
        raise UnsupportedOnThisField(f"dillon trinomial is an n = 6 object, got n = {ctx.n}")
    for u in range(1, ctx.order):
        cand = VBFunction.from_poly(ctx, make_poly(ctx, [(1, 3), (1, 10), (u, 24)]))
        if is_apn(cand, method="quadratic"):
            return u
    raise UnsupportedOnThisField("no APN u found for the trinomial shape")


def bcfl_binomial(ctx: FieldCtx, k: int, s: int, u: Optional[int] = None) -> VBFunction:
    """x^(2^s + 1) + u^(2^k - 1) * x^(2^(2k) + 2^(k+s)) on GF(2^(3k)),
    u primitive; same (k, s) side conditions as the quadrinomial family."""
    problems = ks_violations(ctx.n, k, s)
    if problems:
        raise InvalidKS("; ".join(problems))
    if u is None:
        u = ctx.generator
    if not ctx.is_primitive(u):
        raise InputError(f"u = 0x{u:x} is not primitive")
    e1 = exp_residue(ctx.n, [(1, s), (1, 0)])
    e2 = exp_residue(ctx.n, [(1, 2 * k), (1, k + s)])
    coeff = ctx.pow(u, (1 << k) - 1)
    return VBFunction.from_poly(ctx, make_poly(ctx, [(1, e1), (coeff, e2)]))


def known(ctx: FieldCtx, ident: str) -> VBFunction:
    """Catalog dispatcher for CLI ids like "gold:2", "inverse",
    "dillon_trinomial:0xe" or "bcfl_binomial:2,1"."""
    name, _, argstr = ident.partition(":")
    args = [a for a in argstr.split(",") if a] if argstr else []

    def int_arg(a: str) -> int:
        return int(a, 16) if a.lower().startswith("0x") else int(a)

    try:
        if name == "identity":
            return identity_fn(ctx)
        if name == "gold":
            return gold(ctx, int_arg(args[0]) if args else 1)
        if name == "kasami":
            return kasami(ctx, int_arg(args[0]) if args else 1)
        if name == "welch":
            return welch(ctx)
        if name == "niho":
            return niho(ctx)
        if name == "inverse":
            return inverse_fn(ctx)
        if name == "dobbertin":
            return dobbertin(ctx)
        if name == "dillon_trinomial":
            return dillon_trinomial(ctx, int_arg(args[0]) if args else None)
        if name == "bcfl_binomial":
            if len(args) < 2:
                raise InputError("bcfl_binomial needs k,s[,u]")
            u = int_arg(args[2]) if len(args) > 2 else None
            return bcfl_binomial(ctx, int_arg(args[0]), int_arg(args[1]), u)
    except (IndexError, ValueError) as exc:
        raise InputError(f"bad arguments in known-function id {ident!r}: {exc}") from exc
    raise InputError(f"unknown function id {name!r}")
