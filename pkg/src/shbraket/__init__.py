"""Spherical-harmonic bra-ket overlap integrals of trigonometric operators.

Closed-form evaluation of <l1 m1| e^{i k phi} cos(n theta) |l2 m2> and the
sine counterpart as double sums of exact Clebsch-Gordan coefficients, plus
coupling-matrix assembly over truncated harmonic bases, a trig-basis
expansion driver for angular functions such as effective-mass profiles, and
an independent quadrature oracle that cross-checks every closed form.
"""

from .angular_momentum import (
    HarmonicIndex,
    ProductExpansion,
    SignedSqrtRational,
    cg_parity_zero,
    clebsch_gordan,
    rational_sum,
    sh_product_expand,
)
from .braket_core import (
    BraKetQuery,
    CouplingMatrix,
    Method,
    PrecisionWarning,
    TrigTerm,
    VALIDATED_MAX_DEGREE,
    basis_index,
    basis_iter,
    basis_size,
    coupling_matrix,
    normalize_trig,
    overlap,
    overlap_axisym_cos,
    series_coupling_matrix,
)
from .fourier_driver import (
    EffectiveMassProfile,
    FourierSeries,
    effective_mass_coupling,
    series_from_samples,
    sin_power_expand,
)
from .oracle import (
    QuadratureSpec,
    numeric_fourier_coefficients,
    quadrature_function_overlap,
    quadrature_overlap,
)

__version__ = "0.1.0"

__all__ = [
    "BraKetQuery",
    "CouplingMatrix",
    "EffectiveMassProfile",
    "FourierSeries",
    "HarmonicIndex",
    "Method",
    "PrecisionWarning",
    "ProductExpansion",
    "QuadratureSpec",
    "SignedSqrtRational",
    "TrigTerm",
    "VALIDATED_MAX_DEGREE",
    "basis_index",
    "basis_iter",
    "basis_size",
    "cg_parity_zero",
    "clebsch_gordan",
    "coupling_matrix",
    "effective_mass_coupling",
    "normalize_trig",
    "numeric_fourier_coefficients",
    "overlap",
    "overlap_axisym_cos",
    "quadrature_function_overlap",
    "quadrature_overlap",
    "rational_sum",
    "series_coupling_matrix",
    "series_from_samples",
    "sh_product_expand",
    "sin_power_expand",
]
