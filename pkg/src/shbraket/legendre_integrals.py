"""Scalar Legendre/Chebyshev integrals and exact basis-change tables.

Hosts all the one-dimensional ingredients of the closed-form overlap
evaluation: the integral of a single associated Legendre function, the
integral of a product of two, and the exact expansions connecting
cos(n t) / sin(n t) with (associated) Legendre functions and Legendre with
Chebyshev polynomials.

The cosine-series coefficients a_l (with cos(n t) = sum_l a_l P_l(cos t))
satisfy a_l = (l + 1/2) I_{n,l}, where I_{n,l} is ``trig_projection``; the
sine-series coefficients are b_l = -a_l / n.  Both relations are verified
pointwise in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .angular_momentum import SignedSqrtRational, cg_parity_zero, clebsch_gordan
from .special_functions import PolyCoeffList, double_factorial, gamma_half, half_gamma_ratio

__all__ = [
    "chebyshev_in_legendre",
    "chebyshev_integral",
    "i0",
    "legendre_in_chebyshev",
    "legendre_pair_integral",
    "sin_in_assoc_legendre",
    "trig_projection",
]


@lru_cache(maxsize=1 << 16)
def i0(l: int, m: int) -> float:
    """Integral of P_l^m(x) over [-1, 1]; zero when |m| > l.

    The value is an exact rational for even l and an exact rational times pi
    for odd l (given l + m even; otherwise it vanishes).  It is assembled
    from exact half-integer gamma arithmetic and converted to float once.
    """
    if l < 0 or abs(m) > l:
        return 0.0
    if m < 0:
        # I0(l, m) = (-1)^m (l+m)!/(l-m)! I0(l, -m)
        scale = Fraction(math.factorial(l + m), math.factorial(l - m))
        if m % 2:
            scale = -scale
        return float(scale) * i0(l, -m)
    if l == 0 and m == 0:
        # dispatched before the gamma formula, whose Gamma(l/2) has a pole here
        return 2.0
    if m == 0:
        return 0.0
    if (l + m) % 2:
        return 0.0
    ga, pi_a = gamma_half(l)          # Gamma(l/2)
    gb, pi_b = gamma_half(l + m + 1)  # Gamma((l+m+1)/2)
    gd, pi_d = gamma_half(l + 3)      # Gamma((l+3)/2)
    rational = Fraction(2) ** (m - 2) * m * ga * gb / (math.factorial((l - m) // 2) * gd)
    # [(-1)^m + (-1)^l] = 2 (-1)^m since l + m is even
    value = (-2 if m % 2 else 2) * rational
    pi_power = pi_a + pi_b - pi_d
    assert pi_power in (0, 2)
    return float(value) * (math.pi if pi_power else 1.0)


@lru_cache(maxsize=1 << 16)
def legendre_pair_integral(l: int, m: int, lp: int, mp: int) -> float:
    """Integral of P_l^m(x) P_{l'}^{m'}(x) over [-1, 1].

    Evaluated by expanding the product over single Legendre functions:

        sqrt((l+m)!(l'+m')! / ((l-m)!(l'-m')!)) *
        sum_j sqrt((j-m-m')!/(j+m+m')!) <l m l' m'|j m+m'> <l 0 l' 0|j 0> I0(j, m+m')

    with j over |l-l'| .. l+l'.  Orders exceeding their degree give 0.
    """
    if l < 0 or lp < 0 or abs(m) > l or abs(mp) > lp:
        return 0.0
    f = math.factorial
    pref = SignedSqrtRational.from_sqrt(
        Fraction(f(l + m) * f(lp + mp), f(l - m) * f(lp - mp))
    )
    ms = m + mp
    terms = []
    for j in range(abs(l - lp), l + lp + 1):
        if cg_parity_zero(l, lp, j) or abs(ms) > j:
            continue
        w = i0(j, ms)
        if w == 0.0:
            continue
        exact = (
            SignedSqrtRational.from_sqrt(Fraction(f(j - ms), f(j + ms)))
            * clebsch_gordan(l, m, lp, mp, j, ms)
            * clebsch_gordan(l, 0, lp, 0, j, 0)
            * pref
        )
        if exact.is_zero():
            continue
        terms.append(float(exact) * w)
    return math.fsum(terms)


def chebyshev_integral(n: int) -> Fraction:
    """Exact integral of T_n(x) over [-1, 1]: ((-1)^n + 1)/(1 - n^2), with n = 1 -> 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2:  # odd integrals vanish; this also guards the n = 1 pole
        return Fraction(0)
    return Fraction(2, 1 - n * n)


@lru_cache(maxsize=None)
def chebyshev_in_legendre(n: int) -> PolyCoeffList:
    """Exact expansion T_n = sum_j c_j P_{n-2j} (indices share the parity of n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return PolyCoeffList(((0, Fraction(1)),))
    pairs = [
        (n - 2 * j, -half_gamma_ratio(j, n) * (1 + 2 * n - 4 * j))
        for j in range(n // 2 + 1)
    ]
    return PolyCoeffList.from_pairs(pairs)


@lru_cache(maxsize=None)
def sin_in_assoc_legendre(n: int) -> PolyCoeffList:
    """Exact expansion sin(n t) = sum_l b_l P_l^1(cos t) with b_l = -a_l / n.

    For even n the cosine series reaches degree 0, but P_0^1 does not exist
    (it is identically zero in the associated-Legendre family), so that term
    is dropped; the corresponding overlap contribution vanishes through the
    guarded pair integral anyway.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = [(idx, -c / n) for idx, c in chebyshev_in_legendre(n).terms if idx > 0]
    return PolyCoeffList.from_pairs(pairs)


@lru_cache(maxsize=None)
def legendre_in_chebyshev(l: int) -> PolyCoeffList:
    """Exact expansion P_l = sum_j a_{l,j} T_{l-2j}.

    a_{l,j} = 2 (2l-2j-1)!! (2j-1)!! / ((1 + delta_{l-2j,0}) (2l-2j)!! (2j)!!);
    the double-factorial conventions at -1 make a_{0,0} = 1.
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    pairs = []
    for j in range(l // 2 + 1):
        idx = l - 2 * j
        c = Fraction(
            2 * double_factorial(2 * l - 2 * j - 1) * double_factorial(2 * j - 1),
            (2 if idx == 0 else 1) * double_factorial(2 * l - 2 * j) * double_factorial(2 * j),
        )
        pairs.append((idx, c))
    return PolyCoeffList.from_pairs(pairs)


@lru_cache(maxsize=1 << 14)
def trig_projection(n: int, l: int) -> Fraction:
    """Exact I_{n,l} = integral over [0, pi] of sin(t) cos(n t) P_l(cos t) dt.

    Expands P_l over Chebyshev polynomials and integrates the products:

        I_{n,l} = sum_j a_{l,j} [ 1/(1-(n+l-2j)^2) + 1/(1-(n-l+2j)^2) ]

    for n + l even, zero otherwise.  Each reciprocal is really half the
    integral of a Chebyshev polynomial, so indices of magnitude 1 contribute
    0 rather than dividing by zero (the same guard as ``chebyshev_integral``).
    """
    if n < 0 or l < 0:
        raise ValueError("n and l must be non-negative")
    if (n + l) % 2:
        return Fraction(0)
    total = Fraction(0)
    for idx, a in legendre_in_chebyshev(l).terms:
        total += a * (chebyshev_integral(n + idx) + chebyshev_integral(abs(n - idx))) / 2
    return total
