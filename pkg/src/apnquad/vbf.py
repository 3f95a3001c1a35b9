"""Vectorial Boolean functions GF(2^n) -> GF(2^n).

Canonical identity of a function is its full value table (index = input).
A univariate polynomial form rides along when known; term exponents are
residues mod 2^n - 1 (see field.exp_residue), the constant term is kept
apart because x^0 = 1 everywhere while x^(2^n-1) is 0 at 0.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bits
from .errors import FieldMismatch, InputError, NotAPermutation
from .field import FieldCtx, make_field


@dataclass(frozen=True)
class UnivariatePoly:
    """Sum of coeff * x^exp terms plus a constant, exponents distinct and sorted."""

    terms: tuple  # ((coeff, exp), ...)
    constant: int = 0

    def degree_bound(self) -> int:
        """Algebraic degree read off the exponent weights."""
        if not self.terms:
            return 0
        return max(e.bit_count() for _, e in self.terms)


def make_poly(ctx: FieldCtx, terms: Sequence[tuple], constant: int = 0) -> UnivariatePoly:
    """Canonicalize raw (coeff, exp) pairs: fold exponents mod 2^n - 1,
    combine like terms by XOR, drop zero coefficients."""
    m = ctx.group_order
    combined: dict = {}
    for coeff, exp in terms:
        if not 0 <= coeff < ctx.order:
            raise InputError(f"coefficient 0x{coeff:x} outside GF(2^{ctx.n})")
        if exp == 0:
            raise InputError("exponent 0 is ambiguous here; pass it as the constant")
        e = exp % m
        if e == 0:
            e = m
        combined[e] = combined.get(e, 0) ^ coeff
    if not 0 <= constant < ctx.order:
        raise InputError(f"constant 0x{constant:x} outside GF(2^{ctx.n})")
    kept = tuple((c, e) for e, c in sorted(combined.items()) if c)
    return UnivariatePoly(terms=kept, constant=constant)


def evaluate_poly(ctx: FieldCtx, poly: UnivariatePoly, x: int) -> int:
    """Plain term sum; pow handles 0^e and the 2^n - 1 residue correctly."""
    acc = poly.constant
    for coeff, exp in poly.terms:
        acc ^= ctx.mul(coeff, ctx.pow(x, exp))
    return acc


class VBFunction:
    """A function on GF(2^n) held as a value table, optionally with a poly form."""

    def __init__(self, field: FieldCtx, table: Sequence[int], poly: Optional[UnivariatePoly] = None):
        table = tuple(int(v) for v in table)
        if len(table) != field.order:
            raise InputError(f"table length {len(table)} != 2^{field.n}")
        if any(not 0 <= v < field.order for v in table):
            raise InputError("table value outside the field")
        self.field = field
        self.table = table
        self.poly = poly

    @classmethod
    def from_poly(cls, ctx: FieldCtx, poly: UnivariatePoly) -> "VBFunction":
        table = [evaluate_poly(ctx, poly, x) for x in ctx.elements()]
        return cls(ctx, table, poly)

    @classmethod
    def from_table(cls, ctx: FieldCtx, table: Sequence[int]) -> "VBFunction":
        return cls(ctx, table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VBFunction)
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.field, self.table))

    def __repr__(self) -> str:
        if self.poly is not None:
            body = " + ".join(f"0x{c:x}*x^{e}" for c, e in self.poly.terms) or "0"
            if self.poly.constant:
                body += f" + 0x{self.poly.constant:x}"
        else:
            body = "<table>"
        return f"VBFunction(n={self.field.n}, {body})"


def mobius_anf(bit_function: Sequence[int]) -> list:
    """Binary Moebius transform: truth table of one output bit <-> ANF
    coefficients.  Involution; input length must be a power of two."""
    f = list(bit_function)
    size = len(f)
    if size & (size - 1) or size == 0:
        raise InputError(f"length {size} is not a power of two")
    if any(b not in (0, 1) for b in f):
        raise InputError("bit function entries must be 0 or 1")
    step = 1
    while step < size:
        for mask in range(size):
            if mask & step:
                f[mask] ^= f[mask ^ step]
        step <<= 1
    return f


def algebraic_degree_from_table(f: VBFunction) -> int:
    """Max ANF monomial weight across all output bits."""
    deg = 0
    for j in range(f.field.n):
        component = [(v >> j) & 1 for v in f.table]
        anf = mobius_anf(component)
        for mask, c in enumerate(anf):
            if c:
                deg = max(deg, mask.bit_count())
    return deg


def algebraic_degree(f: VBFunction) -> int:
    """Degree via exponent weights when a poly is attached, else via ANF."""
    if f.poly is not None:
        return f.poly.degree_bound()
    return algebraic_degree_from_table(f)


@dataclass(frozen=True)
class AffineMap:
    """x -> Mx + c on GF(2)^n; cols[i] is the image of unit vector e_i."""

    cols: tuple
    constant: int = 0

    @property
    def n(self) -> int:
        return len(self.cols)

    def apply(self, x: int) -> int:
        return bits.apply_columns(self.cols, x) ^ self.constant

    def is_permutation(self) -> bool:
        return bits.gf2_rank(self.cols) == self.n

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(cols=tuple(1 << i for i in range(n)), constant=0)


def random_affine_map(n: int, rng: random.Random, invertible: bool = False) -> AffineMap:
    """Uniform affine map; with invertible=True, rejection-sample until the
    matrix part is a permutation (succeeds quickly, density > 0.288)."""
    while True:
        cols = tuple(rng.getrandbits(n) for _ in range(n))
        if not invertible or bits.gf2_rank(cols) == n:
            return AffineMap(cols=cols, constant=rng.getrandbits(n))


def apply_ea_transform(
    f: VBFunction,
    outer: AffineMap,
    inner: AffineMap,
    added: Optional[AffineMap] = None,
) -> VBFunction:
    """g = outer o f o inner + added, all tables; outer and inner must be
    affine permutations, added is any affine map (None = omit)."""
    n = f.field.n
    for m in (outer, inner):
        if m.n != n:
            raise FieldMismatch(f"affine map on GF(2)^{m.n} applied to GF(2^{n})")
        if not m.is_permutation():
            raise NotAPermutation("outer/inner affine maps must be invertible")
    if added is not None and added.n != n:
        raise FieldMismatch(f"affine map on GF(2)^{added.n} applied to GF(2^{n})")
    table = []
    for x in f.field.elements():
        y = outer.apply(f.table[inner.apply(x)])
        if added is not None:
            y ^= added.apply(x)
        table.append(y)
    return VBFunction(f.field, table)


# -- wire formats ------------------------------------------------------------


def function_to_spec_dict(f: VBFunction) -> dict:
    if f.poly is None:
        raise InputError("function has no polynomial form; use a table file")
    terms = [{"coeff": f"0x{c:x}", "exp": e} for c, e in f.poly.terms]
    if f.poly.constant:
        terms.append({"coeff": f"0x{f.poly.constant:x}", "exp": 0})
    return {"field": f.field.descriptor(), "terms": terms}


def function_from_spec_dict(data: dict) -> VBFunction:
    try:
        fld = data["field"]
        n = fld["n"]
        modulus = fld["modulus"]
        raw_terms = data["terms"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed function spec: missing {exc}") from exc
    if isinstance(modulus, str) and modulus != "default":
        modulus = int(modulus, 16)
    ctx = make_field(n, modulus)
    terms = []
    constant = 0
    for item in raw_terms:
        coeff = item["coeff"]
        if isinstance(coeff, str):
            coeff = int(coeff, 16)
        exp = int(item["exp"])
        if exp == 0:
            constant ^= coeff
        else:
            terms.append((coeff, exp))
    return VBFunction.from_poly(ctx, make_poly(ctx, terms, constant))


def save_function_spec(f: VBFunction, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(function_to_spec_dict(f), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_function_spec(path: str) -> VBFunction:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"not valid JSON: {path}: {exc}") from exc
    return function_from_spec_dict(data)


def save_table_file(f: VBFunction, path: str) -> None:
    with open(path, "w") as fh:
        for v in f.table:
            fh.write(f"0x{v:x}\n")


def load_table_file(ctx: FieldCtx, path: str) -> VBFunction:
    """Newline-separated hex values, one per input, index order 0..2^n-1."""
    table = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                table.append(int(line, 16))
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: not a hex value: {line!r}") from exc
    return VBFunction.from_table(ctx, table)
