"""Zero sets of Phi components, Walsh-sum/count identities, decomposition of
zero sets into 2-dimensional subspaces, N^ij parity counting, and the
hyperplane-parity / non-subspace conjecture checkers.

Conventions: coordinate parameters i, j, m are 1-based; a "triple" (x, y, z)
is the nonzero part of a 2-dimensional subspace, z = x XOR y, stored with
x < y < z.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from . import f2
from .boolfn import BoolFn, walsh
from .gamma import GammaDecomp, component


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SpreadDecomp:
    """Partition of M \\ {0} into XOR-closed triples."""

    n: int
    triples: tuple

    def union(self) -> tuple:
        """The decomposed set M, sorted, zero included."""
        out = {0}
        for t in self.triples:
            out.update(t)
        return tuple(sorted(out))

    def validate(self) -> None:
        seen = set()
        for t in self.triples:
            x, y, z = t
            if not (0 < x < y < z):
                raise ValueError(f"triple {t} is not sorted nonzero")
            if x ^ y != z:
                raise ValueError(f"triple {t} is not XOR-closed")
            if z >> self.n:
                raise ValueError(f"triple {t} outside F_2^{self.n}")
            if seen & {x, y, z}:
                raise ValueError(f"triple {t} overlaps another triple")
            seen.update(t)


class NijCounts(NamedTuple):
    i: int
    j: int
    n3: int
    n1: int
    n0: int

    @property
    def total(self) -> int:
        return self.n3 + self.n1 + self.n0


class WalshIdentity(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


class ParityLinkResult(NamedTuple):
    m0: int
    counts: NijCounts
    identity_holds: bool  # m0 == 1 + 3*n3 + n1
    link_holds: bool  # m0 odd <=> n0 odd

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.link_holds


def zero_set(decomp: GammaDecomp, v: int) -> tuple:
    """M = {x : dot(v, Phi(x)) = 0}, sorted; always contains 0."""
    if v == 0:
        raise ValueError("component selector v must be nonzero")
    par = np.bitwise_count(decomp.Phi.arr & v) & 1
    return tuple(int(x) for x in np.flatnonzero(par == 0))


def zero_count_linear(g: BoolFn, c: int) -> int:
    """|{x : g(x) = 0, dot(x, c) = 0}| for one linear condition c.

    c = e^i, e^j, e^i + e^j give the single-coordinate and equal-coordinate
    restricted zero counts.
    """
    size = 1 << g.n
    count = 0
    for x in range(size):
        if f2.dot(x, c) == 0 and not (g.bits >> x) & 1:
            count += 1
    return count


def restricted_zero_count(g: BoolFn, i: int, j: int) -> int:
    """|{x : g(x) = 0, x_i = 0, x_j = 0}| for distinct 1-based coordinates."""
    if i == j:
        raise ValueError("coordinates i and j must be distinct")
    mask = f2.unit(i) | f2.unit(j)
    count = 0
    bits = g.bits
    for x in range(1 << g.n):
        if x & mask == 0 and not (bits >> x) & 1:
            count += 1
    return count


def walsh_sum_identity(
    g: BoolFn, i: int, j: int, spectrum: Optional[np.ndarray] = None
) -> WalshIdentity:
    """Four-term Walsh sum against its restricted-zero-count form.

    lhs = W(0) + W(e^i) + W(e^j) + W(e^i + e^j); collapsing the character
    sum over the two fixed coordinates gives lhs = 8*|M^ij_0| - 2^n for
    every Boolean function g, which is the rhs computed here. The two sides
    are produced by independent routes; `equal` must hold for every input
    and a mismatch signals a convention bug.
    """
    if i == j:
        raise ValueError("coordinates i and j must be distinct")
    w = spectrum if spectrum is not None else walsh(g)
    ei, ej = f2.unit(i), f2.unit(j)
    lhs = int(w[0]) + int(w[ei]) + int(w[ej]) + int(w[ei | ej])
    rhs = 8 * restricted_zero_count(g, i, j) - (1 << g.n)
    return WalshIdentity(lhs, rhs, lhs == rhs)


def degree_witness(decomp: GammaDecomp, v: int) -> Optional[tuple[int, int]]:
    """First coordinate pair (i, j) whose four-term Walsh sum of v.Phi is not
    divisible by 16, i.e. the ANF coefficient at the weight-(n-2) mask
    avoiding i, j is 1. None when no pair qualifies."""
    n = decomp.n
    if n < 5 or n % 2 == 0:
        raise ValueError("degree witness applies to odd n >= 5")
    if v == 0:
        raise ValueError("component selector v must be nonzero")
    w = walsh(component(decomp.Phi, v))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        ei, ej = f2.unit(i), f2.unit(j)
        s = int(w[0]) + int(w[ei]) + int(w[ej]) + int(w[ei | ej])
        if s % 16:
            return (i, j)
    return None


def decompose_triples(members, n: int) -> Optional[SpreadDecomp]:
    """Partition M \\ {0} into XOR-closed triples by deterministic backtracking.

    Repeatedly takes the smallest uncovered element x and tries partners y in
    ascending order with x XOR y also uncovered; the first complete partition
    is returned, or None when the search exhausts.
    """
    mem = sorted(set(int(m) for m in members))
    if not mem or mem[0] != 0:
        raise ValueError("decomposable set must contain 0")
    if mem[-1] >> n:
        raise ValueError(f"set contains elements outside F_2^{n}")
    if (len(mem) - 1) % 3:
        raise ValueError(f"|M| - 1 = {len(mem) - 1} is not divisible by 3")
    free = set(mem[1:])
    out: list[tuple[int, int, int]] = []

    def extend() -> bool:
        if not free:
            return True
        x = min(free)
        free.discard(x)
        for y in sorted(free):
            z = x ^ y
            if z > y and z in free:
                free.discard(y)
                free.discard(z)
                out.append((x, y, z))
                if extend():
                    return True
                out.pop()
                free.add(y)
                free.add(z)
        free.add(x)
        return False

    if not extend():
        return None
    found = SpreadDecomp(n, tuple(out))
    found.validate()
    if found.union() != tuple(mem):
        raise AssertionError("spread decomposition does not cover its input")
    return found


def count_triple_partitions(members, n: int) -> int:
    """Number of distinct partitions of M \\ {0} into XOR-closed triples.

    Research helper for small sets; capped at |M| <= 16 (the n = 5 scale)
    because the count can blow up combinatorially.
    """
    mem = sorted(set(int(m) for m in members))
    if len(mem) > 16:
        raise ValueError("partition counting is capped at |M| <= 16")
    if not mem or mem[0] != 0 or (len(mem) - 1) % 3:
        raise ValueError("not a candidate set for triple decomposition")
    free = set(mem[1:])

    def count() -> int:
        if not free:
            return 1
        total = 0
        x = min(free)
        free.discard(x)
        for y in sorted(free):
            z = x ^ y
            if z > y and z in free:
                free.discard(y)
                free.discard(z)
                total += count()
                free.add(y)
                free.add(z)
        free.add(x)
        return total

    return count()


def count_nijk(d: SpreadDecomp, i: int, j: int) -> NijCounts:
    """Classify each triple by how many of its elements have coordinates i
    and j both zero; the only possible per-triple counts are 0, 1 and 3."""
    if i == j:
        raise ValueError("coordinates i and j must be distinct")
    mask = f2.unit(i) | f2.unit(j)
    n3 = n1 = n0 = 0
    for t in d.triples:
        c = sum(1 for e in t if e & mask == 0)
        if c == 3:
            n3 += 1
        elif c == 1:
            n1 += 1
        elif c == 0:
            n0 += 1
        else:
            raise ValueError(
                f"triple {t} has {c} elements clear at ({i},{j}); "
                "XOR-closed triples cannot have exactly 2 - decomposition is corrupt"
            )
    return NijCounts(i, j, n3, n1, n0)


def parity_link_check(g: BoolFn, d: SpreadDecomp, i: int, j: int) -> ParityLinkResult:
    """Check |M^ij_0| = 1 + 3*N3 + N1 and the parity link (|M^ij_0| odd iff
    N0 odd) for a decomposition d of the zero set of g."""
    m0 = restricted_zero_count(g, i, j)
    counts = count_nijk(d, i, j)
    identity = m0 == 1 + 3 * counts.n3 + counts.n1
    link = (m0 % 2 == 1) == (counts.n0 % 2 == 1)
    return ParityLinkResult(m0, counts, identity, link)


@dataclass(frozen=True)
class C3Check:
    hyperplane_m: Optional[int]  # 1-based coordinate, None if not of that form
    union_is_subspace: bool
    all_even: bool
    odd_pair: Optional[tuple]  # first (i, j) with odd N0, lex order
    agree: bool  # (hyperplane_m is not None) == all_even


def conjecture3_check(d: SpreadDecomp) -> C3Check:
    """Both sides of the hyperplane-parity equivalence for one decomposition:
    (A) the union is a coordinate hyperplane; (B) N^ij_0 is even for every
    pair of distinct coordinates."""
    n = d.n
    expected = (2 ** (n - 1) - 1) // 3
    if len(d.triples) != expected:
        raise ValueError(
            f"family size {len(d.triples)} != (2^{n - 1}-1)/3 = {expected}"
        )
    members = d.union()
    m = f2.coordinate_hyperplane_index(members, n)
    is_sub = f2.is_linear_subspace(members)
    odd_pair = None
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if count_nijk(d, i, j).n0 % 2:
            odd_pair = (i, j)
            break
    all_even = odd_pair is None
    return C3Check(
        hyperplane_m=m,
        union_is_subspace=is_sub,
        all_even=all_even,
        odd_pair=odd_pair,
        agree=(m is not None) == all_even,
    )


@dataclass(frozen=True)
class C3Summary:
    n: int
    family_size: int
    line_count: int
    families: int
    hyperplane_families: int  # union is a coordinate hyperplane
    even_families: int  # all N^ij_0 even
    even_subspace_families: int  # all even and the union is a linear subspace
    cex_hyperplane_odd: int  # hyperplane but some N^ij_0 odd
    cex_even_non_hyperplane: int  # all even but not a coordinate hyperplane
    first_counterexamples: tuple  # up to witness cap, lex order

    @property
    def counterexamples(self) -> int:
        return self.cex_hyperplane_odd + self.cex_even_non_hyperplane


@lru_cache(maxsize=None)
def _c3_tables(n: int):
    """Sorted triple list plus per-line compatibility masks, OR-of-values and
    N0-parity signatures for the exhaustive search."""
    size = 1 << n
    lines = []
    for x in range(1, size):
        for y in range(x + 1, size):
            z = x ^ y
            if z > y:
                lines.append((x, y, z))
    lines.sort()
    count = len(lines)
    pmask = [(1 << x) | (1 << y) | (1 << z) for x, y, z in lines]
    compat = []
    for i in range(count):
        m = 0
        for j in range(i + 1, count):
            if pmask[i] & pmask[j] == 0:
                m |= 1 << j
        compat.append(m)
    val_or = [x | y | z for x, y, z in lines]
    pair_masks = [
        f2.unit(i) | f2.unit(j)
        for i, j in itertools.combinations(range(1, n + 1), 2)
    ]
    sig = []
    for x, y, z in lines:
        s = 0
        for p, mk in enumerate(pair_masks):
            if x & mk and y & mk and z & mk:
                s |= 1 << p
        sig.append(s)
    return tuple(lines), tuple(compat), tuple(val_or), tuple(sig)


def _union_is_subspace(lines, chosen, n: int) -> bool:
    values = [v for idx in chosen for v in lines[idx]]
    basis: list[int] = []
    for v in values:
        for b in basis:
            if (v >> (b.bit_length() - 1)) & 1:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            if 1 << len(basis) > len(values) + 1:
                return False
    return 1 << len(basis) == len(values) + 1


def _c3_search_from(args) -> tuple:
    """Enumerate all families whose lexicographically first line has the given
    index; returns counters plus up to `cap` counterexample witnesses."""
    n, first, limit, cap = args
    lines, compat, val_or, sig = _c3_tables(n)
    family_size = (2 ** (n - 1) - 1) // 3
    full = f2.all_ones(n)
    families = hyper = even = even_sub = cex_ab = cex_ba = 0
    witnesses: list[tuple] = []
    chosen = [0] * family_size
    chosen[0] = first

    def leaf(acc_or: int, acc_sig: int, last: int) -> None:
        nonlocal families, hyper, even, even_sub, cex_ab, cex_ba
        families += 1
        if limit is not None and families > limit:
            raise SearchLimitExceeded(
                f"family limit {limit} exceeded while extending line {first}"
            )
        is_h = acc_or != full
        is_e = acc_sig == 0
        if is_h:
            hyper += 1
        if is_e:
            even += 1
            chosen[family_size - 1] = last
            if _union_is_subspace(lines, chosen, n):
                even_sub += 1
        if is_h != is_e:
            if is_h:
                cex_ab += 1
            else:
                cex_ba += 1
            if len(witnesses) < cap:
                chosen[family_size - 1] = last
                witnesses.append(tuple(lines[idx] for idx in chosen))

    def dfs(cand: int, depth: int, acc_or: int, acc_sig: int) -> None:
        if depth == family_size - 1:
            while cand:
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                leaf(acc_or | val_or[i], acc_sig ^ sig[i], i)
            return
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            nxt = cand & compat[i]
            if nxt:
                chosen[depth] = i
                dfs(nxt, depth + 1, acc_or | val_or[i], acc_sig ^ sig[i])

    if family_size == 1:
        leaf(val_or[first], sig[first], first)
    else:
        dfs(compat[first], 1, val_or[first], sig[first])
    return families, hyper, even, even_sub, cex_ab, cex_ba, tuple(witnesses)


def conjecture3_exhaustive(
    n: int,
    workers: int = 1,
    limit: Optional[int] = None,
    witness_cap: int = 3,
) -> C3Summary:
    """Enumerate every family of (2^(n-1)-1)/3 two-dimensional subspaces of
    F_2^n that pairwise intersect in {0} and evaluate both sides of the
    hyperplane-parity equivalence on each.

    Families are generated as sets of lines in ascending lexicographic order
    of their sorted triples, so each family is visited exactly once and the
    output (including witnesses) is deterministic for any worker count.
    `limit` bounds the families examined per search task and aborts the run
    with SearchLimitExceeded when crossed.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("family size (2^(n-1)-1)/3 requires odd n >= 3")
    lines, _, _, _ = _c3_tables(n)
    tasks = [(n, first, limit, witness_cap) for first in range(len(lines))]
    if workers <= 1:
        results = [_c3_search_from(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_c3_search_from, tasks, chunksize=4))
    families = hyper = even = even_sub = cex_ab = cex_ba = 0
    witnesses: list[tuple] = []
    for fam, hyp, ev, evs, ab, ba, wit in results:
        families += fam
        hyper += hyp
        even += ev
        even_sub += evs
        cex_ab += ab
        cex_ba += ba
        if len(witnesses) < witness_cap:
            witnesses.extend(wit[: witness_cap - len(witnesses)])
    return C3Summary(
        n=n,
        family_size=(2 ** (n - 1) - 1) // 3,
        line_count=len(lines),
        families=families,
        hyperplane_families=hyper,
        even_families=even,
        even_subspace_families=even_sub,
        cex_hyperplane_odd=cex_ab,
        cex_even_non_hyperplane=cex_ba,
        first_counterexamples=tuple(witnesses),
    )


@dataclass(frozen=True)
class C4Result:
    holds: bool
    violation_v: Optional[int]
    checked: int


def conjecture4_check(decomp: GammaDecomp) -> C4Result:
    """Assert that no zero set {x : dot(v, Phi(x)) = 0}, v != 0, is a linear
    subspace; reports the first violating v otherwise."""
    n = decomp.n
    if n < 5:
        raise ValueError("the non-subspace conjecture is stated for n >= 5")
    arr = decomp.Phi.arr
    size = 1 << n
    for v in range(1, size):
        members = np.flatnonzero((np.bitwise_count(arr & v) & 1) == 0)
        count = len(members)  # includes 0 since Phi(0) = 0
        if count & (count - 1):
            continue  # size not a power of two: cannot be a subspace
        basis: list[int] = []
        is_sub = True
        for m in members[1:]:
            w = int(m)
            for b in basis:
                if (w >> (b.bit_length() - 1)) & 1:
                    w ^= b
            if w:
                basis.append(w)
                basis.sort(reverse=True)
                if 1 << len(basis) > count:
                    is_sub = False
                    break
        if is_sub and 1 << len(basis) == count:
            return C4Result(False, v, v)
    return C4Result(True, None, size - 1)
