"""Single-output Boolean functions on F_2^n.

Truth tables are bit-packed into a single Python int (bit x = f(x)); the
Moebius/ANF transform runs as shift-mask butterfly passes directly on the
packed word. The Walsh transform uses an exact int64 numpy butterfly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import f2


class BoolFn:
    """Boolean function f: F_2^n -> F_2, truth table packed into an int."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int):
        if n < 0:
            raise ValueError("n must be >= 0")
        if bits < 0 or bits >> (1 << n):
            raise ValueError(f"packed table does not fit 2^{n} bits")
        self.n = n
        self.bits = bits

    @classmethod
    def from_table(cls, table) -> "BoolFn":
        table = list(table)
        n = (len(table)).bit_length() - 1
        if len(table) != 1 << n:
            raise ValueError(f"table length {len(table)} is not a power of two")
        bits = 0
        for x, v in enumerate(table):
            if v not in (0, 1):
                raise ValueError(f"table entry at {x} is {v!r}, expected 0 or 1")
            bits |= v << x
        return cls(n, bits)

    @classmethod
    def constant(cls, n: int, value: int) -> "BoolFn":
        if value not in (0, 1):
            raise ValueError("constant value must be 0 or 1")
        return cls(n, ((1 << (1 << n)) - 1) if value else 0)

    def __getitem__(self, x: int) -> int:
        return (self.bits >> x) & 1

    def __len__(self) -> int:
        return 1 << self.n

    def table(self) -> list[int]:
        return [(self.bits >> x) & 1 for x in range(1 << self.n)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BoolFn)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"BoolFn(n={self.n}, weight={self.weight()})"


@dataclass(frozen=True)
class AnfPoly:
    """Algebraic normal form: set of monomial masks (bit set = variable present)."""

    n: int
    monomials: frozenset

    def degree(self) -> int:
        return max((m.bit_count() for m in self.monomials), default=0)

    def to_boolfn(self) -> BoolFn:
        bits = 0
        for m in self.monomials:
            bits |= 1 << m
        return BoolFn(self.n, _xor_butterfly(bits, self.n))


@lru_cache(maxsize=None)
def _low_bit_mask(n: int, i: int) -> int:
    # bit x set iff bit i of the index x is clear, over all 2^n positions
    ones = (1 << (1 << i)) - 1
    period = 1 << (i + 1)
    reps = 1 << (n - i - 1)
    return ones * (((1 << (period * reps)) - 1) // ((1 << period) - 1))


def _xor_butterfly(bits: int, n: int) -> int:
    # self-inverse pass: t[x] ^= t[x ^ 2^i] for every x with bit i set
    for i in range(n):
        bits ^= (bits & _low_bit_mask(n, i)) << (1 << i)
    return bits


def moebius(f: BoolFn) -> AnfPoly:
    """ANF of f; mask m is present iff XORing f over {x : x precedes m} gives 1."""
    t = _xor_butterfly(f.bits, f.n)
    masks = []
    while t:
        low = t & -t
        masks.append(low.bit_length() - 1)
        t ^= low
    return AnfPoly(f.n, frozenset(masks))


def degree(f: BoolFn) -> int:
    """Algebraic degree; 0 for the constant functions."""
    t = _xor_butterfly(f.bits, f.n)
    best = 0
    while t:
        low = t & -t
        w = (low.bit_length() - 1).bit_count()
        if w > best:
            best = w
            if best == f.n:
                break
        t ^= low
    return best


def walsh(f: BoolFn) -> np.ndarray:
    """Walsh spectrum W_f(u) = sum_x (-1)^(f(x) + u.x), exact int64 array."""
    size = 1 << f.n
    nbytes = (size + 7) // 8
    raw = np.frombuffer(f.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    s = 1 - 2 * np.unpackbits(raw, bitorder="little")[:size].astype(np.int64)
    h = 1
    while h < size:
        m = s.reshape(-1, 2 * h)
        left = m[:, :h].copy()
        m[:, :h] += m[:, h:]
        m[:, h:] = left - m[:, h:]
        h *= 2
    return s


def anf_coeff_via_walsh(f: BoolFn, a: int, spectrum: np.ndarray | None = None) -> int:
    """ANF coefficient at mask a != 0 from the Walsh spectrum.

    Evaluates (2^(wt(a)-1) - 2^(wt(a)-n-1) * S) mod 2 in exact integer
    arithmetic, where S sums W_f(b) over b preceding the complement of a.
    At a = 0 the expression equals wt(f)/2^n, which is not the constant
    coefficient in general, so a = 0 is rejected; read f(0) directly instead.
    """
    n = f.n
    if a == 0:
        raise ValueError("mask a = 0 is outside the formula's verified domain")
    if a >> n:
        raise ValueError(f"mask {a:#x} does not fit {n} variables")
    w = spectrum if spectrum is not None else walsh(f)
    comp = f2.all_ones(n) ^ a
    total = 0
    sub = comp
    while True:
        total += int(w[sub])
        if sub == 0:
            break
        sub = (sub - 1) & comp
    # (2^(wt-1) - 2^(wt-n-1)*S) == (2^n - S) / 2^(n+1-wt); the division is exact
    q, r = divmod((1 << n) - total, 1 << (n + 1 - f2.weight(a)))
    if r:
        raise ArithmeticError(
            f"coefficient formula produced a non-integer at mask {a:#x}"
        )
    return q % 2


def is_bent(f: BoolFn) -> bool:
    """True iff the spectrum is flat: |W_f(u)| = 2^(n/2) for every u (n even)."""
    if f.n % 2:
        raise ValueError("bentness is defined for an even number of variables")
    w = walsh(f)
    return bool(np.all(np.abs(w) == 1 << (f.n // 2)))
