"""Trig-basis expansions of angular functions and their coupling matrices.

Covers the end-to-end use case of an effective-mass profile
mu_r^2 sin^{2q}(theta) + mu_0^2 concentrated around the equatorial plane
(larger q means thinner concentration): expand the angular dependence over
the e^{i k phi} cos/sin(n theta) basis and assemble the coupling matrix as
an exact linear combination of single-operator matrices.

Radial dependence stays with the caller: matrices are built at one radius
from the scalar (mu_r^2, mu_0^2) values there; looping over a radial grid
is application plumbing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .braket_core import CouplingMatrix, Method, basis_size, series_coupling_matrix

__all__ = [
    "EffectiveMassProfile",
    "FourierSeries",
    "effective_mass_coupling",
    "series_from_samples",
    "sin_power_expand",
]


class FourierSeries:
    """Finite real-coefficient map over the operators e^{i k phi} trig(n theta).

    Keys are (kind, n, k) with kind in {"cos", "sin"} and n >= 0.  Negative
    polar orders fold on insertion (cos(-n t) = cos(n t),
    sin(-n t) = -sin(n t)); (sin, 0, k) terms are dropped because that
    operator is identically zero, and coefficients that cancel to zero are
    removed.
    """

    def __init__(self, terms=None):
        self._coeffs: dict[tuple[str, int, int], float] = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for (kind, n, k), c in items:
                self.add(kind, n, k, c)

    def add(self, kind: str, n: int, k: int, coefficient: float) -> None:
        if kind not in ("cos", "sin"):
            raise ValueError("kind must be 'cos' or 'sin'")
        if n < 0:
            if kind == "sin":
                coefficient = -coefficient
            n = -n
        if kind == "sin" and n == 0:
            return
        key = (kind, n, k)
        value = self._coeffs.get(key, 0.0) + float(coefficient)
        if value == 0.0:
            self._coeffs.pop(key, None)
        else:
            self._coeffs[key] = value

    def coefficient(self, kind: str, n: int, k: int) -> float:
        return self._coeffs.get((kind, n, k), 0.0)

    def items(self):
        return sorted(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self) -> str:
        body = ", ".join(f"{key}: {c:g}" for key, c in self.items())
        return f"FourierSeries({{{body}}})"

    def evaluate(self, theta, phi=0.0):
        """Reconstruct the series at (theta, phi); complex in general."""
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        total = np.zeros(np.broadcast(theta, phi).shape, dtype=complex)
        for (kind, n, k), c in self._coeffs.items():
            polar = np.cos(n * theta) if kind == "cos" else np.sin(n * theta)
            total = total + c * polar * np.exp(1j * k * phi)
        return total


@dataclass(frozen=True)
class EffectiveMassProfile:
    """Angular effective-mass-squared profile mu_r^2 sin^{2q} theta + mu_0^2.

    ``mu_r_sq`` and ``mu_0_sq`` are the scalar values at one radius; q >= 1
    controls how sharply the first term concentrates at the equator.
    """

    q: int
    mu_r_sq: float
    mu_0_sq: float

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be a positive integer")


def sin_power_expand(q: int) -> FourierSeries:
    """Exact cosine series of sin^{2q}(theta).

    Power reduction gives
    sin^{2q} t = 4^{-q} [ C(2q, q) + 2 sum_{j<q} (-1)^{q-j} C(2q, j) cos((2q-2j) t) ];
    all coefficients are dyadic rationals, hence exact as floats.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    series = FourierSeries()
    scale = 4.0**-q
    series.add("cos", 0, 0, scale * math.comb(2 * q, q))
    for j in range(q):
        sign = -1.0 if (q - j) % 2 else 1.0
        series.add("cos", 2 * q - 2 * j, 0, 2.0 * scale * sign * math.comb(2 * q, j))
    return series


def effective_mass_coupling(
    profile: EffectiveMassProfile, L: int, method: Method = Method.MAIN
) -> CouplingMatrix:
    """Coupling matrix of mu_r^2 sin^{2q} theta + mu_0^2 over the basis l <= L.

    The result is mu_r_sq * matrix(sin^{2q}) + mu_0_sq * identity; with k = 0
    throughout it is symmetric, block diagonal in m, and banded in l with
    half-bandwidth 2q.
    """
    base = series_coupling_matrix(sin_power_expand(profile.q), L, method)
    entries = profile.mu_r_sq * base.entries + profile.mu_0_sq * np.eye(basis_size(L))
    return CouplingMatrix(L, entries)


def series_from_samples(f, n_max: int, k_max: int, spec=None):
    """Numeric trig-basis projection of an arbitrary angular function.

    Delegates to the quadrature module and reports the residual alongside:
    returns (series, residual) where residual is the maximum absolute
    reconstruction error on the quadrature grid.  Content above the
    (n_max, k_max) cutoffs, or complex-amplitude content, lands in the
    residual rather than the series.
    """
    spec = spec or oracle.QuadratureSpec()
    series = oracle.numeric_fourier_coefficients(f, n_max, k_max, spec)
    theta, _, phi, _ = oracle.angular_grid(spec)
    T, P = np.meshgrid(theta, phi, indexing="ij")
    samples = np.broadcast_to(np.asarray(f(T, P), dtype=complex), T.shape)
    residual = float(np.max(np.abs(samples - series.evaluate(T, P))))
    return series, residual
