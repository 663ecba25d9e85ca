"""Orthogonal-polynomial kernels and exact half-integer gamma arithmetic.

Polynomial recurrences are evaluated in double precision, which is stable
for the degree range this package targets (degrees up to ~100).  Every
combinatorial coefficient, by contrast, is computed exactly: gamma
functions at integer and half-integer arguments reduce to factorials and
double factorials, so their ratios are plain rationals once the sqrt(pi)
factors cancel.  Exact values are represented with ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Exact rational values throughout the package are fractions.Fraction
# instances (arbitrary precision, always in lowest terms, denominator > 0).
ExactRational = Fraction

__all__ = [
    "ExactRational",
    "PolyCoeffList",
    "assoc_legendre_p",
    "chebyshev_t",
    "double_factorial",
    "gamma_half",
    "gegenbauer_connection",
    "half_gamma_ratio",
    "legendre_p",
]


def double_factorial(n: int) -> int:
    """Double factorial n!! with the conventions 0!! = (-1)!! = 1, (-3)!! = -1.

    The negative-argument conventions are exactly those needed so that
    Gamma(k + 1/2) = (2k - 1)!! sqrt(pi) / 2^k holds down to k = -1.
    """
    if n < -3:
        raise ValueError(f"double factorial not defined for n = {n} (need n >= -3)")
    if n == -3:
        return -1
    if n <= 0:
        return 1
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


def gamma_half(two_s: int) -> tuple[Fraction, int]:
    """Exact Gamma(two_s / 2), returned as ``(rational, p)`` meaning rational * pi^(p/2).

    Integer arguments give a factorial (p = 0); half-integer arguments give a
    double-factorial ratio times sqrt(pi) (p = 1).  Supported down to
    Gamma(-1/2) = -2 sqrt(pi); integer arguments must be positive (poles are
    the caller's responsibility).
    """
    if two_s % 2 == 0:
        s = two_s // 2
        if s <= 0:
            raise ValueError(f"gamma pole at argument {s}")
        return Fraction(math.factorial(s - 1)), 0
    k = (two_s - 1) // 2
    if k < -1:
        raise ValueError(f"half-integer gamma argument {two_s}/2 below -1/2 is unsupported")
    return Fraction(double_factorial(2 * k - 1)) / Fraction(2) ** k, 1


def half_gamma_ratio(j: int, n: int) -> Fraction:
    """Exact value of n Gamma(j - 1/2) Gamma(n - j) / (8 j! Gamma(3/2 + n - j)).

    This is the j-th weight in the expansion of the degree-n Chebyshev
    polynomial over Legendre polynomials.  The two half-integer gamma
    factors each contribute a sqrt(pi) which cancel, leaving a rational.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= j <= n // 2:
        raise ValueError(f"j = {j} outside [0, {n // 2}] for n = {n}")
    num_a, pi_a = gamma_half(2 * j - 1)          # Gamma(j - 1/2)
    num_b, pi_b = gamma_half(2 * (n - j))        # Gamma(n - j)
    den, pi_d = gamma_half(3 + 2 * (n - j))      # Gamma(3/2 + n - j)
    assert pi_a == 1 and pi_b == 0 and pi_d == 1
    return Fraction(n) * num_a * num_b / (8 * math.factorial(j) * den)


def legendre_p(l: int, x):
    """Legendre polynomial P_l(x) by the three-term recurrence.

    Parameters
    ----------
    l : int
        Degree, l >= 0.
    x : float or ndarray
        Evaluation points in [-1, 1].

    Returns
    -------
    float or ndarray
        P_l(x); exact at the endpoints (P_l(1) = 1, P_l(-1) = (-1)^l).
    """
    if l < 0:
        raise ValueError("degree l must be non-negative")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    p_prev = np.ones_like(x)
    if l == 0:
        return float(p_prev) if scalar else p_prev
    p = x.copy()
    for k in range(2, l + 1):
        p, p_prev = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k, p
    return float(p) if scalar else p


def assoc_legendre_p(l: int, m: int, x):
    """Associated Legendre function P_l^m(x) with the Condon-Shortley phase.

    P_1^1(x) = -sqrt(1 - x^2), and negative orders follow
    P_l^{-m} = (-1)^m (l - m)! / (l + m)! P_l^m.

    Parameters
    ----------
    l : int
        Degree, l >= 0.
    m : int
        Order; |m| <= l (out-of-range orders are a domain error here,
        integral routines that need "zero outside range" guard themselves).
    x : float or ndarray
        Evaluation points in [-1, 1].
    """
    if l < 0:
        raise ValueError("degree l must be non-negative")
    if abs(m) > l:
        raise ValueError(f"order |m| = {abs(m)} exceeds degree l = {l}")
    if m < 0:
        mm = -m
        scale = Fraction(math.factorial(l - mm), math.factorial(l + mm))
        if mm % 2:
            scale = -scale
        return float(scale) * assoc_legendre_p(l, mm, x)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    # seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then raise the degree
    sign = -1.0 if m % 2 else 1.0
    p = sign * double_factorial(2 * m - 1) * np.power(1.0 - x * x, 0.5 * m)
    if l > m:
        p_prev = p
        p = (2 * m + 1) * x * p
        for k in range(m + 2, l + 1):
            p, p_prev = ((2 * k - 1) * x * p - (k - 1 + m) * p_prev) / (k - m), p
    return float(p) if scalar else p


def chebyshev_t(n: int, x):
    """Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t)."""
    if n < 0:
        raise ValueError("degree n must be non-negative")
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    t_prev = np.ones_like(x)
    if n == 0:
        return float(t_prev) if scalar else t_prev
    t = x.copy()
    for _ in range(2, n + 1):
        t, t_prev = 2 * x * t - t_prev, t
    return float(t) if scalar else t


def _pochhammer_exact(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _pochhammer_float(a: float, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def gegenbauer_connection(gamma, beta, n: int) -> list:
    """Connection coefficients between two ultraspherical families.

    For ``gamma != 0`` returns the weights c_j, j = 0..n//2, of

        C_n^gamma(x) = sum_j c_j C_{n-2j}^beta(x),

    namely (gamma - beta)_j (gamma)_{n-j} / (j! (beta + 1)_{n-j})
    times (beta + n - 2j) / beta, as floats.

    ``gamma == 0`` selects the Chebyshev limit: the returned list holds the
    exact rational coefficients of T_n(x) = lim_{g->0} (n + 2g)/(2g) C_n^g(x)
    expanded over C^beta, computed by taking the limit analytically
    ((g)_{n-j} vanishes linearly in g, cancelling the prefactor pole).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not beta > -0.5 or beta == 0:
        raise ValueError("beta must satisfy beta > -1/2, beta != 0")
    if gamma != 0 and not gamma > -0.5:
        raise ValueError("gamma must satisfy gamma > -1/2 (or be the gamma = 0 limit)")
    if gamma == 0:
        if n == 0:
            return [Fraction(1)]
        b = Fraction(beta)
        out = []
        for j in range(n // 2 + 1):
            c = Fraction(n, 2) * _pochhammer_exact(-b, j) * math.factorial(n - j - 1)
            c /= math.factorial(j) * _pochhammer_exact(b + 1, n - j)
            c *= (b + n - 2 * j) / b
            out.append(c)
        return out
    out = []
    for j in range(n // 2 + 1):
        c = _pochhammer_float(gamma - beta, j) * _pochhammer_float(gamma, n - j)
        c /= math.factorial(j) * _pochhammer_float(beta + 1.0, n - j)
        c *= (beta + n - 2 * j) / beta
        out.append(c)
    return out


@dataclass(frozen=True)
class PolyCoeffList:
    """Sparse expansion over an indexed polynomial family, exact coefficients.

    ``terms`` holds (index, coefficient) pairs with strictly increasing
    non-negative indices; zero coefficients are never stored.
    """

    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        last = -1
        for idx, c in self.terms:
            if idx < 0 or idx <= last:
                raise ValueError("indices must be non-negative and strictly increasing")
            if c == 0:
                raise ValueError("zero coefficients must be omitted")
            last = idx

    @classmethod
    def from_pairs(cls, pairs) -> "PolyCoeffList":
        kept = sorted((int(i), Fraction(c)) for i, c in pairs if c != 0)
        return cls(tuple(kept))

    def coeff(self, index: int) -> Fraction:
        for i, c in self.terms:
            if i == index:
                return c
        return Fraction(0)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    def evaluate(self, basis, x) -> float:
        """Evaluate sum_i c_i basis(i, x) at a scalar point x."""
        return math.fsum(float(c) * basis(i, x) for i, c in self.terms)
