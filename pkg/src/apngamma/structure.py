"""Structural checks on (Phi, phi): image census, parity of phi, degree bounds,
and the legal ANF shapes of Phi's coordinate functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import f2
from .boolfn import BoolFn, degree, moebius
from .gamma import GammaDecomp, component, coordinate
from .vecfn import VecFn


@dataclass(frozen=True)
class PreimageInfo:
    size: int
    is_subspace_with_zero: bool
    dimension: Optional[int]  # of preimage + {0}; None when not a subspace


@dataclass(frozen=True)
class ImageReport:
    n: int
    distinct_nonzero_values: int
    is_permutation: bool
    preimages: dict  # nonzero image value -> PreimageInfo


def image_stats(Phi: VecFn) -> ImageReport:
    """Preimage census of Phi; requires Phi(0) = 0."""
    if Phi[0] != 0:
        raise ValueError("image census expects Phi(0) = 0")
    n = Phi.n
    census: dict[int, list[int]] = {}
    for a, v in enumerate(Phi.table):
        census.setdefault(v, []).append(a)
    preimages = {}
    for v in sorted(census):
        if v == 0:
            continue
        members = census[v]
        with_zero = [0] + members
        if f2.is_linear_subspace(with_zero):
            info = PreimageInfo(len(members), True, len(with_zero).bit_length() - 1)
        else:
            info = PreimageInfo(len(members), False, None)
        preimages[v] = info
    return ImageReport(
        n=n,
        distinct_nonzero_values=len(preimages),
        is_permutation=len(census) == 1 << n,
        preimages=preimages,
    )


def phi_restriction_linearity(decomp: GammaDecomp, report: Optional[ImageReport] = None) -> dict:
    """For each nonzero image value v, a vector c_v with dot(c_v, x) = phi(x)
    on the whole preimage of v, or None when no such vector exists.

    A None entry falsifies the linear-restriction property for the input.
    """
    if report is None:
        report = image_stats(decomp.Phi)
    n = decomp.n
    out: dict[int, Optional[int]] = {}
    members: dict[int, list[int]] = {}
    for a in range(1, 1 << n):
        members.setdefault(decomp.Phi[a], []).append(a)
    for v in sorted(report.preimages):
        eqs = [(x, decomp.phi[x]) for x in members[v]]
        out[v] = f2.solve_dot_system(eqs, n)
    return out


@dataclass(frozen=True)
class PhiParityReport:
    n: int
    weight: int
    parity: str  # "odd" | "even"
    degree: int
    expected_parity: str  # from the parity of n
    ok: bool
    is_theorem: bool  # even n: theorem; odd n: conjecture evidence


def phi_weight_parity(phi: BoolFn) -> PhiParityReport:
    """Weight/parity/degree of phi judged against the expectation for n's parity.

    Even n: odd weight (equivalently degree n) is a proven property, so a
    failure means a broken pipeline. Odd n: even weight is conjectural, so a
    failure is a reportable counterexample.
    """
    w = phi.weight()
    n_even = phi.n % 2 == 0
    expected = "odd" if n_even else "even"
    parity = "odd" if w % 2 else "even"
    return PhiParityReport(
        n=phi.n,
        weight=w,
        parity=parity,
        degree=degree(phi),
        expected_parity=expected,
        ok=parity == expected,
        is_theorem=n_even,
    )


@dataclass(frozen=True)
class DegreeReport:
    n: int
    per_component: dict  # v -> degree of dot(v, Phi(.)), v != 0
    min_degree: int
    max_degree: int
    all_n_minus_2: bool


def component_degrees(Phi: VecFn) -> DegreeReport:
    """Degree of every component v . Phi, v != 0 (2^n - 1 transforms)."""
    if Phi.n < 3:
        raise ValueError("component census expects n >= 3")
    per = {}
    for v in range(1, 1 << Phi.n):
        per[v] = degree(component(Phi, v))
    degs = per.values()
    return DegreeReport(
        n=Phi.n,
        per_component=per,
        min_degree=min(degs),
        max_degree=max(degs),
        all_n_minus_2=all(d == Phi.n - 2 for d in degs),
    )


@dataclass(frozen=True)
class CoordinateShape:
    coordinate: int  # 1-based
    ok: bool
    lam: Optional[int]  # 0: no monomial of weight >= n-1; 1: all of them; None: illegal


def coordinate_structure(Phi: VecFn) -> list[CoordinateShape]:
    """Check each coordinate ANF of Phi against the two legal top shapes.

    Legal: either no monomial of weight >= n-1 appears, or all n monomials
    of weight n-1 appear together with the full monomial. Anything else
    falsifies the even-n coordinate theorem for the input.
    """
    n = Phi.n
    if n < 4 or n % 2:
        raise ValueError("coordinate shape check applies to even n >= 4")
    full = f2.all_ones(n)
    near_full = frozenset(full ^ (1 << i) for i in range(n))
    legal_top = near_full | {full}
    out = []
    for i in range(1, n + 1):
        masks = moebius(coordinate(Phi, i)).monomials
        top = frozenset(m for m in masks if f2.weight(m) >= n - 1)
        if not top:
            out.append(CoordinateShape(i, True, 0))
        elif top == legal_top:
            out.append(CoordinateShape(i, True, 1))
        else:
            out.append(CoordinateShape(i, False, None))
    return out
