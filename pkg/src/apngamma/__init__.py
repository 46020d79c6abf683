"""Associated Boolean functions of quadratic APN functions.

Computes the indicator gamma(a, b) of attainable derivative values, its
affine decomposition gamma(a, b) = dot(Phi(a), b) + phi(a) + 1, structural
properties of (Phi, phi), and the partial-spread machinery behind them.
"""

from .boolfn import AnfPoly, BoolFn, anf_coeff_via_walsh, degree, is_bent, moebius, walsh
from .catalog import (
    FunctionSpecRecord,
    build_vecfn,
    gold_catalog,
    parse_tt,
    write_boolfn_tt,
    write_report,
    write_tt,
)
from .gamma import (
    DecompositionError,
    GammaDecomp,
    NotApnError,
    NotQuadraticError,
    add_linear,
    component,
    coordinate,
    derivative_image,
    gamma,
    gamma_decompose,
    is_apn,
    is_quadratic,
    reconstruct_gamma,
    trace_form_phi,
    vec_degree,
)
from .gf2n import (
    DEFAULT_POLYS,
    FieldSpec,
    gold_gamma_table,
    gold_vecfn,
    inv,
    monomial_vecfn,
    mul,
    poly_is_irreducible,
    power,
    trace,
    trace_dual_map,
)
from .spread import (
    C3Check,
    C3Summary,
    C4Result,
    NijCounts,
    SpreadDecomp,
    conjecture3_check,
    conjecture3_exhaustive,
    conjecture4_check,
    count_nijk,
    count_triple_partitions,
    decompose_triples,
    degree_witness,
    parity_link_check,
    restricted_zero_count,
    walsh_sum_identity,
    zero_set,
)
from .structure import (
    DegreeReport,
    ImageReport,
    component_degrees,
    coordinate_structure,
    image_stats,
    phi_restriction_linearity,
    phi_weight_parity,
)
from .vecfn import LinearFn, VecFn

__version__ = "0.1.0"
