"""Closed-form evaluation of trigonometric-operator bra-kets over spherical harmonics.

Evaluates

    <l1 m1| e^{i k phi} cos(n theta) |l2 m2>   and
    <l1 m1| e^{i k phi} sin(n theta) |l2 m2>

as double sums of exact Clebsch-Gordan coefficients, and assembles the
resulting mode-coupling matrices over truncated harmonic bases.

Conventions: harmonics are orthonormal with the Condon-Shortley phase; the
integrals are always real, because the azimuthal integral forces
m1 = m2 + k and leaves a real polar integral.  Selection rules produce
genuine hard zeros: azimuthal (m1 != m2 + k), and polar parity
(l1 + l2 + n + k odd for cosine, even for sine).  Hard zeros are
short-circuited before any coefficient work.

Two closed-form routes are provided.  The "main" route derives the
cos/sin-to-Legendre weights from half-integer gamma ratios; the "variant"
route derives the same weights from double-factorial Chebyshev projections.
Both carry the weights as exact rationals, so they agree to the last bit
and differ only in derivation machinery and speed.  "quadrature" delegates
to the independent oracle.

Every term of a sum is formed from exact signed-square-root and rational
pieces, converted to float per term, and accumulated with exact summation
(math.fsum), so results are bit-identical regardless of evaluation order.

The validated precision envelope is degrees l, n <= 64; queries beyond it
still evaluate but emit a PrecisionWarning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import oracle
from .angular_momentum import HarmonicIndex, SignedSqrtRational, cg_parity_zero, clebsch_gordan
from .legendre_integrals import (
    chebyshev_in_legendre,
    i0,
    legendre_pair_integral,
    trig_projection,
)

__all__ = [
    "BraKetQuery",
    "CouplingMatrix",
    "Method",
    "PrecisionWarning",
    "TrigTerm",
    "VALIDATED_MAX_DEGREE",
    "basis_index",
    "basis_iter",
    "basis_size",
    "coupling_matrix",
    "normalize_trig",
    "overlap",
    "overlap_axisym_cos",
    "series_coupling_matrix",
]

VALIDATED_MAX_DEGREE = 64


class PrecisionWarning(UserWarning):
    """A query lies outside the validated precision envelope."""


class Method(str, Enum):
    """Evaluation route for an overlap."""

    MAIN = "main"            # gamma-ratio closed form
    VARIANT = "variant"      # double-factorial projection closed form
    QUADRATURE = "quadrature"  # independent numerical oracle


@dataclass(frozen=True)
class TrigTerm:
    """One basis operator e^{i k phi} cos(n theta) or e^{i k phi} sin(n theta).

    The polar order must already be non-negative; fold negative orders with
    ``normalize_trig``.  (sin, n=0) is the identically-zero operator.
    """

    kind: str
    n: int
    k: int

    def __post_init__(self):
        if self.kind not in ("cos", "sin"):
            raise ValueError("kind must be 'cos' or 'sin'")
        if self.n < 0:
            raise ValueError("polar order n must be non-negative; see normalize_trig")


def normalize_trig(kind: str, n: int, k: int) -> tuple[TrigTerm, int]:
    """Fold a possibly negative polar order onto the canonical n >= 0 operator.

    Returns (term, sign) with cos(-n t) = cos(n t) and sin(-n t) = -sin(n t);
    the sign belongs to the caller's coefficient.
    """
    if n >= 0:
        return TrigTerm(kind, n, k), 1
    return TrigTerm(kind, -n, k), 1 if kind == "cos" else -1


@dataclass(frozen=True)
class BraKetQuery:
    """A single overlap query <bra| op |ket>."""

    bra: HarmonicIndex
    op: TrigTerm
    ket: HarmonicIndex


def _check_envelope(l1: int, l2: int, n: int) -> None:
    worst = max(l1, l2, n)
    if worst > VALIDATED_MAX_DEGREE:
        warnings.warn(
            f"degree {worst} exceeds the validated precision envelope "
            f"(l, n <= {VALIDATED_MAX_DEGREE}); accuracy may degrade",
            PrecisionWarning,
            stacklevel=3,
        )


@lru_cache(maxsize=1 << 17)
def _geometric_factor(l1: int, m1: int, l2: int, m2: int, l: int, k: int) -> float:
    """(-1)^m1 sqrt((l1+1/2)(l2+1/2)(l+k)!/(l-k)!) <l1 0 l2 0|l 0> <l1 -m1 l2 m2|l -k>."""
    if abs(k) > l:
        return 0.0
    cg0 = clebsch_gordan(l1, 0, l2, 0, l, 0)
    if cg0.is_zero():
        return 0.0
    cgm = clebsch_gordan(l1, -m1, l2, m2, l, -k)
    if cgm.is_zero():
        return 0.0
    pref = SignedSqrtRational.from_sqrt(
        Fraction(
            (2 * l1 + 1) * (2 * l2 + 1) * math.factorial(l + k),
            4 * math.factorial(l - k),
        )
    )
    value = float(cg0 * cgm * pref)
    return -value if m1 % 2 else value


@lru_cache(maxsize=None)
def _cos_coeffs(n: int, method: Method) -> tuple[tuple[int, Fraction], ...]:
    """Exact weights a_d of cos(n t) = sum_d a_d P_d(cos t), by either route."""
    if method is Method.MAIN:
        return chebyshev_in_legendre(n).terms
    pairs = []
    for j in range(n // 2 + 1):
        d = n - 2 * j
        c = Fraction(2 * d + 1, 2) * trig_projection(n, d)
        if c != 0:
            pairs.append((d, c))
    return tuple(sorted(pairs))


@lru_cache(maxsize=None)
def _sin_coeffs(n: int, method: Method) -> tuple[tuple[int, Fraction], ...]:
    """Exact weights b_d = -a_d / n of sin(n t) = sum_d b_d P_d^1(cos t)."""
    return tuple((d, -c / n) for d, c in _cos_coeffs(n, method))


@lru_cache(maxsize=1 << 14)
def _polar_integral(kind: str, n: int, l: int, k: int, method: Method) -> float:
    """Integral over [0, pi] of sin(t) trig(n t) P_l^{-k}(cos t) dt."""
    if kind == "cos":
        if n == 0:
            return i0(l, -k)
        return math.fsum(
            float(a) * legendre_pair_integral(d, 0, l, -k) for d, a in _cos_coeffs(n, method)
        )
    return math.fsum(
        float(b) * legendre_pair_integral(d, 1, l, -k) for d, b in _sin_coeffs(n, method)
    )


def overlap(query: BraKetQuery, method: Method = Method.MAIN) -> float:
    """Value of <l1 m1| e^{i k phi} trig(n theta) |l2 m2>; always real.

    Dispatch: the azimuthal selection rule and the zero operator (sin, n=0)
    return exact zeros; so does the polar parity rule.  Otherwise the
    selected closed form sums l over |l1-l2| .. l1+l2 (n = 0 cosine goes
    through the dedicated single-sum form, since the general weights are
    indeterminate there).  ``Method.QUADRATURE`` delegates to the oracle.
    """
    l1, m1 = query.bra.l, query.bra.m
    l2, m2 = query.ket.l, query.ket.m
    kind, n, k = query.op.kind, query.op.n, query.op.k
    _check_envelope(l1, l2, n)
    if m1 != m2 + k:
        return 0.0
    if kind == "sin" and n == 0:
        return 0.0
    parity_odd = (l1 + l2 + n + k) % 2 == 1
    if parity_odd != (kind == "sin"):
        return 0.0
    if method is Method.QUADRATURE:
        return oracle.quadrature_overlap(query)
    terms = []
    for l in range(abs(l1 - l2), l1 + l2 + 1):
        if cg_parity_zero(l1, l2, l):
            continue
        geo = _geometric_factor(l1, m1, l2, m2, l, k)
        if geo == 0.0:
            continue
        terms.append(geo * _polar_integral(kind, n, l, k, method))
    return math.fsum(terms)


def overlap_axisym_cos(l1: int, m1: int, n: int, l2: int, m2: int) -> float:
    """Axisymmetric (k = 0) cosine overlap via the direct projection route.

    Uses sum_l sqrt((l1+1/2)(l2+1/2)) (-1)^m1 <l1 0 l2 0|l 0>
    <l1 -m1 l2 m2|l 0> I_{n,l}, which must agree with the general form at
    k = 0.  Negative polar orders fold by cos(-n t) = cos(n t).
    """
    n = abs(n)
    if abs(m1) > l1 or abs(m2) > l2:
        raise ValueError("orders must satisfy |m| <= l")
    _check_envelope(l1, l2, n)
    if m1 != m2:
        return 0.0
    if (l1 + l2 + n) % 2:
        return 0.0
    terms = []
    for l in range(abs(l1 - l2), l1 + l2 + 1):
        if cg_parity_zero(l1, l2, l):
            continue
        geo = _geometric_factor(l1, m1, l2, m2, l, 0)
        if geo == 0.0:
            continue
        terms.append(geo * float(trig_projection(n, l)))
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# truncated-basis coupling matrices


def basis_index(l: int, m: int) -> int:
    """Position of (l, m) in the row-major basis ordering l*l + l + m."""
    return l * l + l + m


def basis_size(L: int) -> int:
    """Dimension (L+1)^2 of the basis {(l, m) : 0 <= l <= L, |m| <= l}."""
    return (L + 1) * (L + 1)


def basis_iter(L: int):
    """Yield (l, m) in basis-index order."""
    for l in range(L + 1):
        for m in range(-l, l + 1):
            yield l, m


@dataclass
class CouplingMatrix:
    """Dense real overlap matrix over the truncated basis l <= L.

    Rows are bras and columns are kets, both ordered by
    ``basis_index(l, m) = l*l + l + m``; hard zeros from the selection
    rules are stored as exact 0.0 entries.
    """

    L: int
    entries: np.ndarray

    ordering = "l*l+l+m"

    def __post_init__(self):
        size = basis_size(self.L)
        if self.entries.shape != (size, size):
            raise ValueError(f"entries must be {size}x{size} for L = {self.L}")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("entries must be finite")

    def value(self, l1: int, m1: int, l2: int, m2: int) -> float:
        return float(self.entries[basis_index(l1, m1), basis_index(l2, m2)])


def coupling_matrix(op: TrigTerm, L: int, method: Method = Method.MAIN) -> CouplingMatrix:
    """Matrix of overlaps of ``op`` between all basis pairs with l <= L.

    Only entries allowed by the azimuthal selection rule (one m-diagonal
    per row) are evaluated; everything else stays a hard zero.  Exact
    Clebsch-Gordan values are shared across entries through the caches.
    """
    if L < 0:
        raise ValueError("L must be non-negative")
    entries = np.zeros((basis_size(L), basis_size(L)))
    if op.kind == "sin" and op.n == 0:
        return CouplingMatrix(L, entries)
    for l1, m1 in basis_iter(L):
        m2 = m1 - op.k
        bra = HarmonicIndex(l1, m1)
        for l2 in range(abs(m2), L + 1):
            value = overlap(BraKetQuery(bra, op, HarmonicIndex(l2, m2)), method)
            if value != 0.0:
                entries[basis_index(l1, m1), basis_index(l2, m2)] = value
    return CouplingMatrix(L, entries)


def series_coupling_matrix(series, L: int, method: Method = Method.MAIN) -> CouplingMatrix:
    """Linear combination sum_i c_i coupling_matrix(term_i) of a trig series.

    ``series`` is any mapping-like object whose ``items()`` yields
    ((kind, n, k), coefficient) pairs, e.g. a ``FourierSeries``.
    """
    total = np.zeros((basis_size(L), basis_size(L)))
    for (kind, n, k), c in series.items():
        total += c * coupling_matrix(TrigTerm(kind, n, k), L, method).entries
    return CouplingMatrix(L, total)
