"""Bit-level linear algebra over F_2.

Vectors of F_2^n are plain Python ints: coordinate x_i is bit (i-1), so x_1
is the least significant bit and the unit vector e^i equals 1 << (i-1).
Coordinate indices in public signatures are 1-based throughout the package;
raw bit positions are an internal detail.

Sets of vectors are plain iterables of ints; functions that produce sets
return sorted tuples so results compare deterministically.
"""

from __future__ import annotations

from typing import Iterable, Optional


def dot(x: int, y: int) -> int:
    """Inner product x_1*y_1 + ... + x_n*y_n over F_2."""
    return (x & y).bit_count() & 1


def weight(x: int) -> int:
    """Hamming weight (popcount)."""
    return x.bit_count()


def precedes(x: int, y: int) -> bool:
    """Partial order: x precedes y iff x_i <= y_i in every coordinate."""
    return x & ~y == 0


def unit(i: int) -> int:
    """Unit vector e^i for a 1-based coordinate index i."""
    if i < 1:
        raise ValueError(f"coordinate index must be >= 1, got {i}")
    return 1 << (i - 1)


def all_ones(n: int) -> int:
    """The all-ones vector of F_2^n."""
    return (1 << n) - 1


def span_basis(vectors: Iterable[int]) -> list[int]:
    """Row-reduced basis of the span, rows with distinct leading bits,
    sorted by leading bit descending."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if (v >> (r.bit_length() - 1)) & 1:
                v ^= r
        if v:
            rows.append(v)
            rows.sort(reverse=True)
    # clear pivot bits from the other rows (reduced form)
    for i, r in enumerate(rows):
        p = r.bit_length() - 1
        for j in range(len(rows)):
            if j != i and (rows[j] >> p) & 1:
                rows[j] ^= r
    return rows


def rank(vectors: Iterable[int]) -> int:
    return len(span_basis(vectors))


def is_linear_subspace(members: Iterable[int]) -> bool:
    """True iff the set contains 0 and is closed under XOR.

    Uses the rank characterization: a finite set S with 0 in S is a
    subspace iff |S| == 2^rank(S).
    """
    s = set(members)
    if 0 not in s:
        return False
    size = len(s)
    basis: list[int] = []
    for v in sorted(s):
        for b in basis:
            if (v >> (b.bit_length() - 1)) & 1:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            if 1 << len(basis) > size:
                return False
    return size == 1 << len(basis)


def subspace_dimension(members: Iterable[int]) -> int:
    """log2 of the size of a linear subspace; raises if not a subspace."""
    s = set(members)
    if not is_linear_subspace(s):
        raise ValueError("set is not a linear subspace")
    return len(s).bit_length() - 1


def coordinate_hyperplane_index(members: Iterable[int], n: int) -> Optional[int]:
    """The 1-based coordinate m such that the set equals {x : x_m = 0}, else None."""
    s = set(members)
    if len(s) != 1 << (n - 1):
        return None
    acc = 0
    for v in s:
        if v >> n:
            return None
        acc |= v
    clear = ~acc & all_ones(n)
    if clear == 0:
        return None
    # a set of 2^(n-1) distinct vectors all avoiding one bit is exactly that
    # hyperplane; two clear bits would force size <= 2^(n-2)
    return clear.bit_length()


def orthogonal_complement(vectors: Iterable[int], n: int) -> list[int]:
    """Basis of {v in F_2^n : dot(v, w) = 0 for every input vector w},
    sorted ascending."""
    rows = span_basis(vectors)
    pivots = {r.bit_length() - 1: r for r in rows}
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    out.sort()
    return out


def solve_dot_system(equations: Iterable[tuple[int, int]], n: int) -> Optional[int]:
    """One solution c of the system dot(c, v_t) = r_t, or None if inconsistent.

    `equations` is an iterable of (vector, rhs-bit) pairs; free coordinates
    of the solution are set to 0, which makes the output deterministic.
    """
    rows: list[tuple[int, int]] = []
    for v, r in equations:
        if v >> n:
            raise ValueError("equation vector outside F_2^n")
        for bv, br in rows:
            if (v >> (bv.bit_length() - 1)) & 1:
                v ^= bv
                r ^= br
        if v:
            rows.append((v, r & 1))
            rows.sort(reverse=True)
        elif r & 1:
            return None
    c = 0
    for v, r in sorted(rows):  # ascending pivot order for back-substitution
        p = v.bit_length() - 1
        if dot(v & ~(1 << p), c) != r:
            c |= 1 << p
    return c


def invert_linear_images(images: list[int], n: int) -> Optional[list[int]]:
    """Invert the linear map given by its basis images.

    `images[i]` is the image of e^(i+1). Returns the basis images of the
    inverse map, or None when the map is singular.
    """
    if len(images) != n:
        raise ValueError(f"expected {n} basis images, got {len(images)}")
    rows = [(images[i], 1 << i) for i in range(n)]
    ech: list[tuple[int, int]] = []
    for v, c in rows:
        for bv, bc in ech:
            if (v >> (bv.bit_length() - 1)) & 1:
                v ^= bv
                c ^= bc
        if v == 0:
            return None
        ech.append((v, c))
        ech.sort(reverse=True)
    # back-substitute to make the value parts unit vectors
    for i in range(len(ech)):
        v, c = ech[i]
        p = v.bit_length() - 1
        for j in range(len(ech)):
            if j != i and (ech[j][0] >> p) & 1:
                ech[j] = (ech[j][0] ^ v, ech[j][1] ^ c)
    inv = [0] * n
    for v, c in ech:
        inv[v.bit_length() - 1] = c
    return inv
