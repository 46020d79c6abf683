"""APN testing, the associated function gamma, and its (Phi, phi) decomposition.

For a quadratic APN function F the derivative image B_a = {F(x) + F(x+a)} is
an affine hyperplane for every a != 0, so gamma(a, b) = [b in B_a] has the
unique affine-in-b form  gamma(a, b) = dot(Phi(a), b) + phi(a) + 1  with
Phi(0) = 0 and phi(0) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import f2
from .boolfn import BoolFn, degree
from .gf2n import FieldSpec, trace_dual_map
from .vecfn import LinearFn, VecFn

GAMMA_MAX_N = 11  # gamma tables hold 2^(2n) bits


class NotQuadraticError(ValueError):
    pass


class NotApnError(ValueError):
    pass


class DecompositionError(RuntimeError):
    """The two decomposition routes disagreed, or a derivative image was not
    an affine hyperplane; signals an input violating the preconditions."""


@dataclass(frozen=True)
class GammaDecomp:
    """The pair (Phi, phi) with gamma(a,b) = dot(Phi(a), b) + phi(a) + 1."""

    Phi: VecFn
    phi: BoolFn

    @property
    def n(self) -> int:
        return self.Phi.n

    def __post_init__(self):
        if self.Phi.n != self.phi.n:
            raise ValueError("Phi and phi live on different dimensions")

    def gamma_value(self, a: int, b: int) -> int:
        return f2.dot(self.Phi[a], b) ^ self.phi[a] ^ 1


def component(F: VecFn, v: int) -> BoolFn:
    """The component function x -> dot(v, F(x))."""
    if not 0 <= v < (1 << F.n):
        raise ValueError(f"component selector {v} outside F_2^{F.n}")
    par = (np.bitwise_count(F.arr & v) & 1).astype(np.uint8)
    packed = np.packbits(par, bitorder="little").tobytes()
    return BoolFn(F.n, int.from_bytes(packed, "little"))


def coordinate(F: VecFn, i: int) -> BoolFn:
    """The i-th coordinate function (1-based)."""
    return component(F, f2.unit(i))


def vec_degree(F: VecFn) -> int:
    """Algebraic degree: maximum degree over the coordinate functions."""
    return max(degree(coordinate(F, i)) for i in range(1, F.n + 1))


def is_quadratic(F: VecFn) -> bool:
    return vec_degree(F) == 2


def derivative_image(F: VecFn, a: int) -> tuple:
    """B_a = {F(x) + F(x+a) : x}, sorted."""
    return tuple(int(v) for v in np.unique(_derivative_values(F, a)))


def _derivative_values(F: VecFn, a: int) -> np.ndarray:
    idx = np.arange(1 << F.n)
    return F.arr ^ F.arr[idx ^ a]


def is_apn(F: VecFn) -> bool:
    """True iff every nonzero-direction derivative is 2-to-1 onto its image."""
    size = 1 << F.n
    idx = np.arange(size)
    for a in range(1, size):
        counts = np.bincount(F.arr ^ F.arr[idx ^ a], minlength=size)
        if counts.max() > 2:
            return False
    return True


def gamma(F: VecFn) -> BoolFn:
    """The associated function on 2n variables, index (a, b) -> a*2^n + b."""
    n = F.n
    if n > GAMMA_MAX_N:
        raise ValueError(f"gamma table for n={n} exceeds the n<={GAMMA_MAX_N} limit")
    size = 1 << n
    mat = np.zeros((size, size), dtype=np.uint8)
    for a in range(1, size):
        mat[a, _derivative_values(F, a)] = 1
    packed = np.packbits(mat.reshape(-1), bitorder="little").tobytes()
    return BoolFn(2 * n, int.from_bytes(packed, "little"))


def _phi_pair_direct(F: VecFn, a: int) -> tuple[int, int]:
    # translate B_a to a subspace and take its 1-dimensional orthocomplement
    n = F.n
    image = np.unique(_derivative_values(F, a))
    if len(image) != 1 << (n - 1):
        raise DecompositionError(
            f"|B_{a}| = {len(image)}, expected {1 << (n - 1)}; input is not quadratic APN"
        )
    y0 = int(image[0])
    basis: list[int] = []
    for y in image[1:]:
        v = int(y) ^ y0
        for b in basis:
            if (v >> (b.bit_length() - 1)) & 1:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            if len(basis) == n - 1:
                break
    if len(basis) != n - 1:
        raise DecompositionError(f"translated B_{a} does not span a hyperplane")
    ker = f2.orthogonal_complement(basis, n)
    if len(ker) != 1:
        raise DecompositionError(f"orthogonal vector at a={a} is not unique")
    return ker[0], f2.dot(ker[0], y0)


def _phi_pair_kernel(F: VecFn, a: int) -> tuple[int, int]:
    # solve dot(v, L_a(e^j)) = 0 with L_a(x) = F(x)+F(x+a)+F(a)+F(0)
    n = F.n
    c = F[a] ^ F[0]
    rows = [F[1 << j] ^ F[(1 << j) ^ a] ^ c for j in range(n)]
    ker = f2.orthogonal_complement(rows, n)
    if len(ker) != 1:
        raise DecompositionError(
            f"kernel at a={a} has dimension {len(ker)}, expected 1"
        )
    # F(0)+F(a) = D_a F(0) lies in B_a
    return ker[0], f2.dot(ker[0], c)


def gamma_decompose(F: VecFn) -> GammaDecomp:
    """Compute (Phi, phi) for a quadratic APN function.

    Both the direct route (orthocomplement of the translated derivative
    image) and the kernel route (annihilator of the linearized derivative)
    run on every row; any disagreement is a hard error rather than a wrong
    answer.
    """
    if not is_quadratic(F):
        raise NotQuadraticError(f"algebraic degree is {vec_degree(F)}, expected 2")
    if not is_apn(F):
        raise NotApnError("some derivative takes a value more than twice")
    n = F.n
    phi_table = [0] * (1 << n)
    phi_table[0] = 0  # Phi(0) = 0
    phi_bits = 1  # phi(0) = 1
    for a in range(1, 1 << n):
        direct = _phi_pair_direct(F, a)
        kernel = _phi_pair_kernel(F, a)
        if direct != kernel:
            raise DecompositionError(
                f"decomposition routes disagree at a={a}: {direct} vs {kernel}"
            )
        phi_table[a] = direct[0]
        phi_bits |= direct[1] << a
    return GammaDecomp(VecFn(n, phi_table), BoolFn(n, phi_bits))


def reconstruct_gamma(decomp: GammaDecomp) -> BoolFn:
    """gamma rebuilt from (Phi, phi) via the defining affine form."""
    n = decomp.n
    size = 1 << n
    idx = np.arange(size)
    mat = np.empty((size, size), dtype=np.uint8)
    for a in range(size):
        offset = decomp.phi[a] ^ 1
        mat[a] = (np.bitwise_count(idx & decomp.Phi[a]) & 1).astype(np.uint8) ^ offset
    packed = np.packbits(mat.reshape(-1), bitorder="little").tobytes()
    return BoolFn(2 * n, int.from_bytes(packed, "little"))


def add_linear(F: VecFn, L: LinearFn) -> VecFn:
    """The EA shift F + L."""
    if F.n != L.n:
        raise ValueError("dimension mismatch between F and L")
    return VecFn(F.n, (F[x] ^ L(x) for x in range(1 << F.n)))


def trace_form_phi(decomp: GammaDecomp, spec: FieldSpec) -> tuple:
    """Field elements u(a) with trace(u(a) * y) = dot(Phi(a), y) for all y.

    u = tau^(-1)(Phi(a)) where tau is the dot/trace change of basis; u(0) = 0.
    """
    if decomp.n != spec.n:
        raise ValueError("decomposition and field have different dimensions")
    tau = trace_dual_map(spec)
    inv_images = f2.invert_linear_images(list(tau.images), spec.n)
    if inv_images is None:
        raise ArithmeticError("trace pairing map is singular")
    tau_inv = LinearFn(spec.n, inv_images)
    return tuple(tau_inv(decomp.Phi[a]) for a in range(1 << spec.n))
