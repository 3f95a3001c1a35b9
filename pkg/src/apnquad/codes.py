"""Linear-code invariants used to separate CCZ classes.

For f on GF(2^n) the (2n+1) x 2^n matrix over GF(2) has, per column x:
a constant 1, the n bits of x and the n bits of f(x).  Row-span rank and
the span's weight enumerator are CCZ invariants; matching bundles are a
necessary condition only and never proof of equivalence.

Rows are packed as 2^n-bit Python ints (bit j = column j), so span
enumeration is XOR plus popcount, walked in Gray-code order.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional

from . import bits
from .errors import BudgetExceeded, FieldMismatch
from .spectra import (
    DifferentialSpectrum,
    diff_uniformity_exhaustive,
    walsh_spectrum,
)
from .vbf import AffineMap, VBFunction, algebraic_degree

WEIGHT_ENUM_MAX_DIM = 25


@dataclass(frozen=True)
class CodeMatrix:
    rows: tuple  # 2n+1 packed rows
    length: int  # 2^n columns
    n: int


def build_code(f: VBFunction) -> CodeMatrix:
    """All-ones row, then bits of x, then bits of f(x)."""
    n = f.field.n
    size = f.field.order
    rows = [(1 << size) - 1]
    for i in range(n):
        r = 0
        for x in range(size):
            if (x >> i) & 1:
                r |= 1 << x
        rows.append(r)
    for i in range(n):
        r = 0
        for x in range(size):
            if (f.table[x] >> i) & 1:
                r |= 1 << x
        rows.append(r)
    return CodeMatrix(rows=tuple(rows), length=size, n=n)


def code_dimension(m: CodeMatrix) -> int:
    return bits.gf2_rank(m.rows)


def weight_enumerator(m: CodeMatrix, max_dim: int = WEIGHT_ENUM_MAX_DIM) -> tuple:
    """Weight counts of the row span, index = weight 0..length.

    Enumerates all 2^rank codewords (Gray code, one XOR + popcount per
    word); refuses when rank exceeds max_dim.
    """
    basis = bits.gf2_row_reduce(m.rows)
    rank = len(basis)
    if rank > max_dim:
        raise BudgetExceeded(
            f"span has 2^{rank} codewords; limit is 2^{max_dim}"
        )
    counts = [0] * (m.length + 1)
    cw = 0
    counts[0] += 1
    for i in range(1, 1 << rank):
        cw ^= basis[(i & -i).bit_length() - 1]
        counts[cw.bit_count()] += 1
    return tuple(counts)


@dataclass(frozen=True)
class InvariantBundle:
    """CCZ-invariant components plus the (reported, non-invariant) degree."""

    code_dimension: int
    weight_enumerator: tuple
    differential_spectrum: DifferentialSpectrum
    walsh_values: tuple
    algebraic_degree: int

    def as_dict(self) -> dict:
        body = {
            "code_dimension": self.code_dimension,
            "weight_enumerator": list(self.weight_enumerator),
            "differential_spectrum": self.differential_spectrum.as_dict(),
            "walsh_values": {str(v): c for v, c in self.walsh_values},
            "algebraic_degree": self.algebraic_degree,
        }
        body["content_hash"] = _bundle_hash(body)
        return body


def _bundle_hash(body: dict) -> str:
    clean = {k: v for k, v in body.items() if k != "content_hash"}
    blob = json.dumps(clean, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def invariant_bundle(f: VBFunction, workers: int = 1) -> InvariantBundle:
    m = build_code(f)
    return InvariantBundle(
        code_dimension=code_dimension(m),
        weight_enumerator=weight_enumerator(m),
        differential_spectrum=diff_uniformity_exhaustive(f, workers),
        walsh_values=walsh_spectrum(f, workers).values,
        algebraic_degree=algebraic_degree(f),
    )


@dataclass(frozen=True)
class EquivalenceVerdict:
    """status "distinguished" names the first differing component in
    witness; "indistinguishable" asserts necessary conditions only."""

    status: str
    witness: Optional[str]

    def as_dict(self) -> dict:
        return {"status": self.status, "witness": self.witness}


# Comparison order: cheap and discrete first.  The algebraic degree is
# deliberately not compared; it is not a CCZ invariant.
_COMPARED = ("code_dimension", "weight_enumerator", "differential_spectrum", "walsh_values")


def compare_bundles(left: InvariantBundle, right: InvariantBundle) -> EquivalenceVerdict:
    for name in _COMPARED:
        if getattr(left, name) != getattr(right, name):
            return EquivalenceVerdict(status="distinguished", witness=name)
    return EquivalenceVerdict(status="indistinguishable", witness=None)


def compare_invariants(
    f: VBFunction, g: VBFunction, workers: int = 1
) -> EquivalenceVerdict:
    if f.field.n != g.field.n:
        raise FieldMismatch(
            f"cannot compare functions on GF(2^{f.field.n}) and GF(2^{g.field.n})"
        )
    return compare_bundles(invariant_bundle(f, workers), invariant_bundle(g, workers))


def linearized_factor_check(f: VBFunction, d: int) -> Optional[AffineMap]:
    """Invertible GF(2)-linear L with f(x) = L(x^d) for all x, if one exists.

    Solves the linear constraints over the image of x -> x^d and fills any
    free directions; returns None when the constraints are inconsistent or
    no invertible solution exists.
    """
    ctx = f.field
    n = ctx.n
    pairs = [(ctx.pow(x, d), f.table[x]) for x in ctx.elements()]
    cols = bits.gf2_solve_linear_map(pairs, n)
    if cols is None:
        return None
    if bits.gf2_rank(cols) != n:
        return None
    candidate = AffineMap(cols=tuple(cols), constant=0)
    for x, (xd, fx) in zip(ctx.elements(), pairs):
        if candidate.apply(xd) != fx:
            return None
    return candidate
