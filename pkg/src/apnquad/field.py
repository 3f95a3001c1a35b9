"""Binary field arithmetic GF(2^n) for 2 <= n <= 15.

Elements are plain Python ints: bit i is the coefficient of x^i in the
polynomial basis, so addition is XOR.  Multiplication goes through
log/antilog tables built once per field from a validated modulus.

Default modulus per degree (all primitive, re-checked at construction):

    n=2   x^2+x+1          n=9   x^9+x^4+1
    n=3   x^3+x+1          n=10  x^10+x^3+1
    n=4   x^4+x+1          n=11  x^11+x^2+1
    n=5   x^5+x^2+1        n=12  x^12+x^6+x^4+x+1
    n=6   x^6+x+1          n=13  x^13+x^4+x^3+x+1
    n=7   x^7+x+1          n=14  x^14+x^10+x^6+x+1
    n=8   x^8+x^4+x^3+x^2+1  n=15  x^15+x+1

A user-supplied modulus only has to be irreducible; if x is not primitive
for it, the least primitive element is used as the table generator.

Exponents live in Z/(2^n-1).  ``exp_residue`` folds signed sums of powers
of two into the canonical range [1, 2^n-1]; the representative 2^n-1 is
used for the zero residue so that x^(2^n-1) still evaluates to 1 on
nonzero arguments and to 0 at 0.
"""

from __future__ import annotations

import math
from typing import Iterable, Union

import numpy as np

from .errors import (
    DivisionByZero,
    NotASubfield,
    ReducibleModulus,
    UnsupportedDegree,
    ZeroExponent,
)

MIN_DEGREE = 2
MAX_DEGREE = 15

DEFAULT_MODULI = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
}

# A signed power term: either t (meaning +2^t) or (sign, t) with sign in {+1, -1}.
PowerTerm = Union[int, tuple]


def _poly_mul_mod(a: int, b: int, modulus: int, n: int) -> int:
    """Carry-less product of a and b reduced mod the degree-n modulus."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= modulus
    return acc


def _poly_rem(a: int, b: int) -> int:
    """Remainder of GF(2)[x] division of a by b."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(modulus: int, n: int) -> bool:
    """Trial division by every polynomial of degree 1..n//2."""
    if modulus.bit_length() - 1 != n:
        return False
    if not modulus & 1:  # divisible by x
        return False
    for d in range(1, n // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if _poly_rem(modulus, p) == 0:
                return False
    return True


def _factor_distinct_primes(m: int) -> tuple:
    primes = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return tuple(primes)


def _raw_pow(a: int, e: int, modulus: int, n: int) -> int:
    acc = 1
    while e:
        if e & 1:
            acc = _poly_mul_mod(acc, a, modulus, n)
        a = _poly_mul_mod(a, a, modulus, n)
        e >>= 1
    return acc


class FieldCtx:
    """Immutable-by-convention context for one GF(2^n): tables plus metadata.

    Do not mutate the table attributes; every operation treats them as
    frozen after construction.
    """

    def __init__(self, n: int, modulus: int):
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise UnsupportedDegree(f"degree {n} outside [{MIN_DEGREE}, {MAX_DEGREE}]")
        if not is_irreducible(modulus, n):
            raise ReducibleModulus(
                f"0x{modulus:x} is not an irreducible degree-{n} polynomial over GF(2)"
            )
        self.n = n
        self.modulus = modulus
        self.order = 1 << n
        self.group_order = self.order - 1
        self.group_order_factors = _factor_distinct_primes(self.group_order)

        self.generator = self._find_generator()
        self.antilog, self.log = self._build_tables(self.generator)
        self.antilog_arr = np.asarray(self.antilog, dtype=np.int64)
        # log[0] is a sentinel; vector code must mask zeros before using it.
        self.log_arr = np.asarray([0] + self.log[1:], dtype=np.int64)
        self.trace_mask = self._build_trace_mask()

    # -- construction helpers ------------------------------------------------

    def _raw_is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        for p in self.group_order_factors:
            if _raw_pow(a, self.group_order // p, self.modulus, self.n) == 1:
                return False
        return True

    def _find_generator(self) -> int:
        for g in range(2, self.order):
            if self._raw_is_primitive(g):
                return g
        raise ReducibleModulus(f"no primitive element mod 0x{self.modulus:x}")

    def _build_tables(self, g: int):
        antilog = [0] * self.group_order
        log = [0] * self.order
        acc = 1
        for i in range(self.group_order):
            antilog[i] = acc
            log[acc] = i
            acc = _poly_mul_mod(acc, g, self.modulus, self.n)
        if acc != 1:
            raise ReducibleModulus(f"generator order check failed for 0x{self.modulus:x}")
        return antilog, log

    def _build_trace_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            e = 1 << i
            t = 0
            p = e
            for _ in range(self.n):
                t ^= p
                p = _poly_mul_mod(p, p, self.modulus, self.n)
            if t not in (0, 1):
                raise ReducibleModulus("trace left the prime field; tables corrupt")
            mask |= t << i
        return mask

    # -- arithmetic ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.group_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self.antilog[(self.group_order - self.log[a]) % self.group_order]

    def pow(self, a: int, e: int) -> int:
        """a^e with exponents read mod 2^n - 1 for nonzero a.

        pow(a, 0) = 1 for every a; pow(0, e) = 0 for e >= 1; negative e
        on a nonzero base goes through the group inverse.
        """
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 0
        return self.antilog[(self.log[a] * (e % self.group_order)) % self.group_order]

    def frobenius(self, a: int, j: int) -> int:
        """a^(2^j); j is reduced mod n so negative j walks the orbit backwards."""
        if a == 0:
            return 0
        return self.pow(a, 1 << (j % self.n))

    def trace(self, a: int) -> int:
        """Absolute trace down to GF(2), computed through the cached mask."""
        return (self.trace_mask & a).bit_count() & 1

    def is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        for p in self.group_order_factors:
            if self.pow(a, self.group_order // p) == 1:
                return False
        return True

    def subfield(self, k: int) -> tuple:
        """Elements of the subfield GF(2^k), as a sorted tuple of size 2^k."""
        if k <= 0 or self.n % k != 0:
            raise NotASubfield(f"GF(2^{k}) is not a subfield of GF(2^{self.n})")
        members = tuple(a for a in range(self.order) if self.frobenius(a, k) == a)
        assert len(members) == 1 << k
        return members

    # -- misc ----------------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def descriptor(self) -> dict:
        return {"n": self.n, "modulus": f"0x{self.modulus:x}"}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, modulus=0x{self.modulus:x})"


_CTX_CACHE: dict = {}


def make_field(n: int, modulus="default") -> FieldCtx:
    """Build (or fetch from cache) the GF(2^n) context.

    modulus may be "default", or an int bit-vector of an irreducible
    degree-n polynomial.  Defaults are re-validated, never trusted.
    """
    if not isinstance(n, int) or not MIN_DEGREE <= n <= MAX_DEGREE:
        raise UnsupportedDegree(f"degree {n!r} outside [{MIN_DEGREE}, {MAX_DEGREE}]")
    if modulus == "default":
        modulus = DEFAULT_MODULI[n]
    if not isinstance(modulus, int):
        raise ReducibleModulus(f"modulus must be an int or 'default', got {modulus!r}")
    key = (n, modulus)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(n, modulus)
        _CTX_CACHE[key] = ctx
    return ctx


def two_power(n: int, t: int) -> int:
    """2^t mod 2^n - 1; negative t means the modular inverse of 2^|t|."""
    return pow(2, t, (1 << n) - 1)


def exp_residue(n: int, terms: Iterable[PowerTerm], allow_zero: bool = False) -> int:
    """Fold a signed sum of powers of two into [1, 2^n - 1].

    Each term is either an int t, read as +2^t, or a pair (sign, t) with
    sign in {+1, -1}.  Negative t uses the inverse of 2^|t| mod 2^n - 1.
    A sum that is 0 mod 2^n - 1 maps to the representative 2^n - 1 when
    allow_zero is set and raises ZeroExponent otherwise.
    """
    m = (1 << n) - 1
    total = 0
    for term in terms:
        if isinstance(term, tuple):
            sign, t = term
            if sign not in (1, -1):
                raise ValueError(f"term sign must be +1 or -1, got {sign!r}")
        else:
            sign, t = 1, term
        total = (total + sign * pow(2, t, m)) % m
    if total == 0:
        if not allow_zero:
            raise ZeroExponent(f"power sum vanished mod 2^{n} - 1")
        return m
    return total


def primitive_elements(ctx: FieldCtx) -> list:
    """All primitive elements, in antilog (generator power) order."""
    return [
        ctx.antilog[i]
        for i in range(1, ctx.group_order)
        if math.gcd(i, ctx.group_order) == 1
    ]
