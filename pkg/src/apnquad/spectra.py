"""Differential and Walsh spectra.

Two independent routes to differential uniformity:

  * exhaustive: count solutions of f(x + q) + f(x) = p over all (q, p),
    O(2^(2n)) table lookups, no assumptions;
  * quadratic shortcut: for degree <= 2 the difference map
    D_q(x) = f(x+q) + f(x) + f(q) + f(0) is GF(2)-linear, so per q the
    solution counts are 0 or |ker D_q| and uniformity = max_q |ker D_q|.

is_apn(method="both") runs both and refuses to answer if they disagree.

Walsh values W(a, b) = sum_x (-1)^(tr(ax) + tr(b f(x))) are computed by a
fast Walsh-Hadamard transform per component b; tr(c y) = <m(c), y> for a
mask m(c) depending linearly on c, which maps trace characters onto the
standard transform's dot-product characters.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bits
from .errors import MethodDisagreement, NotQuadratic
from .field import FieldCtx
from .vbf import VBFunction, algebraic_degree


@dataclass(frozen=True)
class DifferentialSpectrum:
    """histogram: ((solution_count, frequency), ...) over all (q != 0, p),
    zero counts included; uniformity = max count."""

    uniformity: int
    histogram: tuple

    def as_dict(self) -> dict:
        return {
            "uniformity": self.uniformity,
            "histogram": {str(c): f for c, f in self.histogram},
        }


@dataclass(frozen=True)
class KernelReport:
    """kernel_sizes[q - 1] = |ker D_q| for q = 1 .. 2^n - 1."""

    kernel_sizes: tuple
    max_kernel: int

    def as_dict(self) -> dict:
        counts: dict = {}
        for k in self.kernel_sizes:
            counts[k] = counts.get(k, 0) + 1
        return {
            "max_kernel": self.max_kernel,
            "kernel_size_counts": {str(k): counts[k] for k in sorted(counts)},
        }


@dataclass(frozen=True)
class WalshSpectrum:
    """values: ((|W|, count), ...) over all a and all b != 0; nonlinearity
    = 2^(n-1) - max|W| / 2."""

    values: tuple
    nonlinearity: int

    def as_dict(self) -> dict:
        return {
            "values": {str(v): c for v, c in self.values},
            "nonlinearity": self.nonlinearity,
        }


def _shards(items, workers: int, cap: int):
    chunk = max(1, min(cap, (len(items) + workers - 1) // workers))
    return [items[i : i + chunk] for i in range(0, len(items), chunk)]


def _run_sharded(fn, shards, workers: int):
    """Apply fn to each shard, in order; threads only when workers > 1."""
    if workers <= 1 or len(shards) <= 1:
        return [fn(sh) for sh in shards]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, shards))


def diff_uniformity_exhaustive(f: VBFunction, workers: int = 1) -> DifferentialSpectrum:
    """Full DDT sweep; exact for any function, no degree assumptions."""
    size = f.field.order
    t = np.asarray(f.table, dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)

    def run(qs) -> np.ndarray:
        hist = np.zeros(size + 1, dtype=np.int64)
        for q in qs:
            counts = np.bincount(t[idx ^ q] ^ t, minlength=size)
            if np.any(counts & 1):
                raise MethodDisagreement(
                    f"odd solution count at q = {q}; pairing invariant broken"
                )
            hist += np.bincount(counts, minlength=size + 1)
        return hist

    shards = _shards(range(1, size), workers, cap=4096)
    hist = sum(_run_sharded(run, shards, workers))
    nonzero = [(int(c), int(n_)) for c, n_ in enumerate(hist) if n_]
    uniformity = nonzero[-1][0]
    return DifferentialSpectrum(uniformity=uniformity, histogram=tuple(nonzero))


def diff_uniformity_quadratic(f: VBFunction, workers: int = 1) -> KernelReport:
    """Kernel ranks of the linearized difference maps; degree <= 2 only."""
    deg = algebraic_degree(f)
    if deg > 2:
        raise NotQuadratic(f"degree {deg} > 2; the kernel shortcut does not apply")
    n = f.field.n
    size = f.field.order
    t = f.table
    basis = [1 << i for i in range(n)]
    pairs = [
        (i, j, (1 << i) | (1 << j)) for i in range(n) for j in range(i + 1, n)
    ]

    def run(qs) -> list:
        out = []
        for q in qs:
            c = t[q] ^ t[0]
            imgs = [t[e ^ q] ^ t[e] ^ c for e in basis]
            for i, j, eij in pairs:
                if t[eij ^ q] ^ t[eij] ^ c != imgs[i] ^ imgs[j]:
                    raise NotQuadratic(
                        f"difference map not linear at q = {q}; degree gate was wrong"
                    )
            out.append(1 << (n - bits.gf2_rank(imgs)))
        return out

    shards = _shards(range(1, size), workers, cap=4096)
    sizes = [k for chunk in _run_sharded(run, shards, workers) for k in chunk]
    return KernelReport(kernel_sizes=tuple(sizes), max_kernel=max(sizes))


def is_apn(f: VBFunction, method: str = "both", workers: int = 1) -> bool:
    """True iff differential uniformity is 2.

    method: "exhaustive", "quadratic" or "both"; "both" cross-checks the
    two routes and raises MethodDisagreement if they differ.
    """
    if method == "exhaustive":
        return diff_uniformity_exhaustive(f, workers).uniformity == 2
    if method == "quadratic":
        return diff_uniformity_quadratic(f, workers).max_kernel == 2
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    u_ex = diff_uniformity_exhaustive(f, workers).uniformity
    u_ker = diff_uniformity_quadratic(f, workers).max_kernel
    if u_ex != u_ker:
        raise MethodDisagreement(
            f"exhaustive uniformity {u_ex} != kernel bound {u_ker}"
        )
    return u_ex == 2


def ddt(f: VBFunction) -> np.ndarray:
    """The full difference distribution table, rows q, columns p."""
    size = f.field.order
    t = np.asarray(f.table, dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)
    out = np.empty((size, size), dtype=np.int64)
    for q in range(size):
        out[q] = np.bincount(t[idx ^ q] ^ t, minlength=size)
    return out


def component_masks(ctx: FieldCtx) -> np.ndarray:
    """masks[c] with tr(c * y) = parity(masks[c] & y) for all y."""
    cached = getattr(ctx, "_component_masks", None)
    if cached is not None:
        return cached
    size = ctx.order
    m = ctx.group_order
    masks = np.zeros(size, dtype=np.int64)
    cs = np.arange(1, size, dtype=np.int64)
    logs = ctx.log_arr[cs]
    for i in range(ctx.n):
        ei_log = ctx.log[1 << i]
        col = ctx.antilog_arr[(logs + ei_log) % m]
        tr_bits = (np.bitwise_count(col & ctx.trace_mask) & 1).astype(np.int64)
        masks[1:] |= tr_bits << i
    masks.flags.writeable = False
    ctx._component_masks = masks
    return masks


def _fwht_rows(a: np.ndarray) -> np.ndarray:
    """In-place fast Walsh-Hadamard transform along the last axis."""
    rows, size = a.shape
    h = 1
    while h < size:
        b = a.reshape(rows, size // (2 * h), 2, h)
        top = b[:, :, 0, :] + b[:, :, 1, :]
        bot = b[:, :, 0, :] - b[:, :, 1, :]
        b[:, :, 0, :] = top
        b[:, :, 1, :] = bot
        h *= 2
    return a


def walsh_transform_row(f: VBFunction, b: int) -> np.ndarray:
    """Exact W(a, b) for all a, indexed by a."""
    masks = component_masks(f.field)
    t = np.asarray(f.table, dtype=np.int64)
    signs = 1 - 2 * ((np.bitwise_count(t & masks[b]) & 1).astype(np.int64))
    w = _fwht_rows(signs.reshape(1, -1))[0]
    return w[masks]


def walsh_spectrum(f: VBFunction, workers: int = 1) -> WalshSpectrum:
    """|W| multiset over all a and b != 0, plus nonlinearity.

    Parseval (sum_a W^2 = 2^(2n) for each b) is asserted per component.
    """
    size = f.field.order
    masks = component_masks(f.field)
    t = np.asarray(f.table, dtype=np.int64)
    target = size * size

    def run(bs) -> np.ndarray:
        sel = np.asarray(bs, dtype=np.int64)
        signs = 1 - 2 * ((np.bitwise_count(t[None, :] & masks[sel, None]) & 1).astype(np.int64))
        w = _fwht_rows(signs)
        energy = np.einsum("ij,ij->i", w, w)
        if np.any(energy != target):
            bad = sel[np.nonzero(energy != target)[0][0]]
            raise MethodDisagreement(f"Parseval violated at b = {bad}")
        return np.bincount(np.abs(w).ravel(), minlength=size + 1)

    row_cap = max(1, (1 << 22) // size)  # keep each sign block modest
    shards = _shards(range(1, size), workers, cap=row_cap)
    hist = sum(_run_sharded(run, shards, workers))
    values = tuple((int(v), int(c)) for v, c in enumerate(hist) if c)
    max_abs = values[-1][0]
    return WalshSpectrum(values=values, nonlinearity=(size // 2) - max_abs // 2)
