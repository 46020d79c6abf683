"""Arithmetic in GF(2^n) in polynomial basis.

Field elements are ints whose bits are polynomial coefficients; the modulus
is an irreducible polynomial mask with bit i = coefficient of x^i. Supplies
Gold power functions, the absolute trace, and the change of basis between
the dot-product and trace pairings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import f2
from .boolfn import BoolFn
from .vecfn import LinearFn, VecFn

# Default moduli for the dimensions the verification harness targets.
# Validated (never trusted) at FieldSpec construction.
DEFAULT_POLYS = {
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
}

MAX_N = 16


def _pdeg(p: int) -> int:
    return p.bit_length() - 1


def _pmul(a: int, b: int) -> int:
    # carry-less product
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a: int, m: int) -> int:
    dm = _pdeg(m)
    while _pdeg(a) >= dm and a:
        a ^= m << (_pdeg(a) - dm)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _x_pow_2k_mod(poly: int, k: int) -> int:
    r = 0b10
    for _ in range(k):
        r = _pmod(_pmul(r, r), poly)
    return r


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(poly: int) -> bool:
    """Rabin test: x^(2^n) = x mod poly and gcd(x^(2^(n/q)) - x, poly) = 1
    for every prime q dividing n."""
    n = _pdeg(poly)
    if n < 1:
        return False
    if n == 1:
        return True
    if not poly & 1:  # divisible by x
        return False
    if _x_pow_2k_mod(poly, n) != 0b10:
        return False
    for q in _prime_factors(n):
        if _pdeg(_pgcd(_x_pow_2k_mod(poly, n // q) ^ 0b10, poly)) != 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(2^n): extension degree plus verified irreducible modulus."""

    n: int
    poly: int

    def __post_init__(self):
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"field degree must be in 2..{MAX_N}, got {self.n}")
        if _pdeg(self.poly) != self.n:
            raise ValueError(
                f"modulus {self.poly:#x} has degree {_pdeg(self.poly)}, expected {self.n}"
            )
        if not poly_is_irreducible(self.poly):
            raise ValueError(f"modulus {self.poly:#x} is reducible over F_2")

    @classmethod
    def default(cls, n: int) -> "FieldSpec":
        if n not in DEFAULT_POLYS:
            raise ValueError(
                f"no default modulus for n={n}; supported: {sorted(DEFAULT_POLYS)}"
            )
        return cls(n, DEFAULT_POLYS[n])


def mul(spec: FieldSpec, x: int, y: int) -> int:
    """Product in GF(2^n)."""
    n, poly = spec.n, spec.poly
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if (x >> n) & 1:
            x ^= poly
    return r


def power(spec: FieldSpec, x: int, d: int) -> int:
    """x^d by square-and-multiply; 0^0 = 1 by convention."""
    if d < 0:
        raise ValueError("exponent must be nonnegative")
    r = 1
    while d:
        if d & 1:
            r = mul(spec, r, x)
        x = mul(spec, x, x)
        d >>= 1
    return r


def inv(spec: FieldSpec, x: int) -> int:
    """Multiplicative inverse x^(2^n - 2); x = 0 is rejected."""
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(2^n)")
    return power(spec, x, (1 << spec.n) - 2)


def trace(spec: FieldSpec, x: int) -> int:
    """Absolute trace x + x^2 + x^4 + ... + x^(2^(n-1)), always 0 or 1."""
    t, s = 0, x
    for _ in range(spec.n):
        t ^= s
        s = mul(spec, s, s)
    if t not in (0, 1):
        raise ArithmeticError(f"trace({x}) = {t} is not in the prime field")
    return t


@lru_cache(maxsize=None)
def trace_table(spec: FieldSpec) -> tuple:
    """trace(x) for every field element, indexed by x."""
    return tuple(trace(spec, x) for x in range(1 << spec.n))


def monomial_vecfn(spec: FieldSpec, d: int) -> VecFn:
    """The power map x -> x^d as an output table (0^0 = 1, no exponent reduction)."""
    if not 0 <= d < (1 << spec.n):
        raise ValueError(f"exponent must be in [0, 2^{spec.n}), got {d}")
    return VecFn(spec.n, [power(spec, x, d) for x in range(1 << spec.n)])


def gold_exponent(k: int) -> int:
    return (1 << k) + 1


def gold_vecfn(spec: FieldSpec, k: int) -> VecFn:
    """Gold power function x^(2^k + 1); requires gcd(n, k) = 1."""
    import math

    if not 1 <= k < spec.n:
        raise ValueError(f"Gold parameter k must satisfy 1 <= k < n, got k={k}")
    if math.gcd(spec.n, k) != 1:
        raise ValueError(f"gcd(n, k) = gcd({spec.n}, {k}) != 1")
    return monomial_vecfn(spec, gold_exponent(k))


def trace_dual_map(spec: FieldSpec) -> LinearFn:
    """The invertible linear map tau with dot(tau(u), y) = trace(u * y) for all u, y.

    Bit (j-1) of tau(u) is trace(u * x^(j-1)), read off column-wise from the
    trace pairing.
    """
    n = spec.n
    tt = trace_table(spec)
    images = []
    for i in range(n):
        u = 1 << i
        v = 0
        for j in range(n):
            v |= tt[mul(spec, u, 1 << j)] << j
        images.append(v)
    tau = LinearFn(n, images)
    if f2.rank(images) != n:
        raise ArithmeticError("trace pairing is degenerate; modulus is corrupt")
    return tau


def gold_gamma_table(spec: FieldSpec, k: int) -> BoolFn:
    """Closed-form associated function of a Gold function, on 2n variables.

    Row a != 0 is b -> trace(u * b) + trace(1) + 1 with u = (a^(2^k+1))^(-1),
    computed with field arithmetic only; row a = 0 is zero. Independent of
    the derivative-image route, so the two can be checked against each other.
    """
    import math

    n = spec.n
    if math.gcd(n, k) != 1 or not 1 <= k < n:
        raise ValueError("not a Gold parameter set")
    size = 1 << n
    tt = trace_table(spec)
    tr1 = tt[1]
    d = gold_exponent(k)
    bits = 0
    for a in range(1, size):
        u = inv(spec, power(spec, a, d))
        # u*b over all b, built from the basis products by lowest-set-bit recursion
        basis = [mul(spec, u, 1 << j) for j in range(n)]
        prods = [0] * size
        row = tr1 ^ 1  # b = 0 entry: trace(0) = 0
        for b in range(1, size):
            low = b & -b
            prods[b] = prods[b ^ low] ^ basis[low.bit_length() - 1]
            if tt[prods[b]] ^ tr1 ^ 1:
                row |= 1 << b
        bits |= row << (a << n)
    return BoolFn(2 * n, bits)
