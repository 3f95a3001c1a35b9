"""GF(2) linear algebra on int-packed bit vectors.

A vector is an int; bit j is coordinate j.  Works for both n-bit vectors
(matrix columns) and 2^n-bit vectors (code rows), since Python ints are
unbounded.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


def parity(x: int) -> int:
    return x.bit_count() & 1


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of the span of the given vectors."""
    pivots: dict = {}
    rank = 0
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                rank += 1
                break
    return rank


def gf2_row_reduce(vectors: Iterable[int]) -> list:
    """Independent spanning rows (one per pivot), sorted by pivot position."""
    pivots: dict = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
    return [pivots[h] for h in sorted(pivots)]


def gf2_nullspace_basis(columns: Sequence[int], n: int) -> list:
    """Basis of {x in GF(2)^len(columns) : XOR of columns[i] for set bits i = 0}.

    columns[i] is the image of unit vector e_i under a linear map into
    GF(2)^n; the returned ints are kernel vectors in the domain.
    """
    # Track domain combinations alongside the reduced image vectors.
    pivots: dict = {}  # image leading bit -> (image, domain combo)
    kernel = []
    for i, col in enumerate(columns):
        v, combo = col, 1 << i
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                pivots[h] = (v, combo)
                break
            pv, pc = pivots[h]
            v ^= pv
            combo ^= pc
        else:
            kernel.append(combo)
    return kernel


def gf2_solve_linear_map(
    pairs: Iterable[tuple], n: int
) -> Optional[list]:
    """Columns of a linear map L with L(v) = w for every (v, w) pair.

    Returns the n columns L(e_0)..L(e_{n-1}) or None when the pairs are
    inconsistent with linearity.  Directions the pairs leave free get
    images outside the current image span, so the result is invertible
    whenever some invertible extension exists.
    """
    basis: dict = {}  # leading bit of reduced v -> (v, w)
    for v, w in pairs:
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                basis[h] = (v, w)
                break
            bv, bw = basis[h]
            v ^= bv
            w ^= bw
        else:
            if w != 0:
                return None

    img_pivots: dict = {}

    def img_insert(x: int) -> None:
        while x:
            h = x.bit_length() - 1
            if h in img_pivots:
                x ^= img_pivots[h]
            else:
                img_pivots[h] = x
                return

    def img_contains(x: int) -> bool:
        while x:
            h = x.bit_length() - 1
            if h not in img_pivots:
                return False
            x ^= img_pivots[h]
        return True

    for _, w in basis.values():
        img_insert(w)

    cols = [0] * n
    for i in range(n):
        v, w = 1 << i, 0
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                break
            bv, bw = basis[h]
            v ^= bv
            w ^= bw
        if v == 0:
            cols[i] = w
            continue
        # e_i has a free component v; pick its image off the image span.
        chosen = 0
        for j in range(n):
            if not img_contains(1 << j):
                chosen = 1 << j
                break
        img_insert(chosen)
        basis[v.bit_length() - 1] = (v, chosen)
        cols[i] = w ^ chosen
    return cols


def apply_columns(cols: Sequence[int], x: int) -> int:
    """XOR of cols[i] over the set bits i of x."""
    acc = 0
    i = 0
    while x:
        if x & 1:
            acc ^= cols[i]
        x >>= 1
        i += 1
    return acc


def int_to_bits(x: int, width: int) -> list:
    return [(x >> i) & 1 for i in range(width)]


def bits_to_int(bits: Sequence[int]) -> int:
    acc = 0
    for i, b in enumerate(bits):
        if b:
            acc |= 1 << i
    return acc
