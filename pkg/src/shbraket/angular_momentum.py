"""Exact Clebsch-Gordan coefficients and the spherical-harmonic product expansion.

Every coefficient <j1 m1 j2 m2 | j m> is an exact signed square root of a
rational number.  The Racah single-sum formula is evaluated over big-integer
factorials, so values stay exact up to the final float conversion; this keeps
downstream assemblies of products of two coefficients and a square-root
prefactor free of intermediate rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "HarmonicIndex",
    "ProductExpansion",
    "SignedSqrtRational",
    "cg_parity_zero",
    "clebsch_gordan",
    "rational_sum",
    "sh_product_expand",
]


@dataclass(frozen=True)
class SignedSqrtRational:
    """Exact value sign * sqrt(radicand) with a non-negative rational radicand.

    ``sign`` is -1, 0 or +1 and is 0 exactly when the radicand is 0.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign must be 0 exactly when the radicand is 0")

    @classmethod
    def zero(cls) -> "SignedSqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def from_sqrt(cls, radicand) -> "SignedSqrtRational":
        """The non-negative square root of a rational, +sqrt(radicand)."""
        r = Fraction(radicand)
        if r < 0:
            raise ValueError("radicand must be non-negative")
        return cls(0 if r == 0 else 1, r)

    @classmethod
    def from_rational(cls, value) -> "SignedSqrtRational":
        """Embed a rational r as sign(r) * sqrt(r^2)."""
        v = Fraction(value)
        if v == 0:
            return cls.zero()
        return cls(1 if v > 0 else -1, v * v)

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other):
        if isinstance(other, SignedSqrtRational):
            s = self.sign * other.sign
            if s == 0:
                return SignedSqrtRational.zero()
            return SignedSqrtRational(s, self.radicand * other.radicand)
        if isinstance(other, (int, Fraction)):
            return self * SignedSqrtRational.from_rational(other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "SignedSqrtRational":
        return SignedSqrtRational(-self.sign, self.radicand)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.sqrt(self.radicand)


def rational_sum(terms: Iterable[SignedSqrtRational]) -> Fraction:
    """Exact sum of signed square roots, which must come out rational.

    Terms are grouped into classes whose radicands differ by a perfect
    square (detected with integer square roots, no factorisation); any
    class whose common kernel is not itself a perfect square must cancel
    exactly, otherwise the sum is irrational and ValueError is raised.
    """
    classes: list[list] = []  # [kernel: int, coefficient: Fraction]
    for t in terms:
        if t.sign == 0:
            continue
        p, q = t.radicand.numerator, t.radicand.denominator
        n = p * q  # sqrt(p/q) = sqrt(p q) / q
        c = Fraction(t.sign, q)
        for entry in classes:
            prod = n * entry[0]
            r = math.isqrt(prod)
            if r * r == prod:
                # sqrt(n) = (r / kernel) sqrt(kernel)
                entry[1] += c * Fraction(r, entry[0])
                break
        else:
            classes.append([n, c])
    total = Fraction(0)
    for kernel, coeff in classes:
        if coeff == 0:
            continue
        r = math.isqrt(kernel)
        if r * r != kernel:
            raise ValueError(f"sum is irrational: sqrt({kernel}) component survives")
        total += coeff * r
    return total


@dataclass(frozen=True)
class HarmonicIndex:
    """A spherical-harmonic label (l, m) with |m| <= l."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("degree l must be non-negative")
        if abs(self.m) > self.l:
            raise ValueError(f"order |m| = {abs(self.m)} exceeds degree l = {self.l}")


@dataclass(frozen=True)
class ProductExpansion:
    """Expansion of Y_{l1 m1} Y_{l2 m2} over Y_{l, m} with m = m1 + m2."""

    m: int
    terms: tuple[tuple[int, float], ...]


@lru_cache(maxsize=1 << 16)
def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, j: int, m: int) -> SignedSqrtRational:
    """Exact <j1 m1 j2 m2 | j m> via the Racah single-sum formula.

    Out-of-domain arguments (m != m1 + m2, triangle violations, |m_i| > j_i,
    negative j's) return the exact zero rather than raising, so summation
    loops may run over rectangular index ranges.
    """
    if m1 + m2 != m:
        return SignedSqrtRational.zero()
    if j1 < 0 or j2 < 0 or j < 0:
        return SignedSqrtRational.zero()
    if abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
        return SignedSqrtRational.zero()
    if j < abs(j1 - j2) or j > j1 + j2:
        return SignedSqrtRational.zero()
    f = math.factorial
    pref = Fraction(
        (2 * j + 1) * f(j1 + j2 - j) * f(j + j1 - j2) * f(j + j2 - j1),
        f(j1 + j2 + j + 1),
    )
    pref *= f(j + m) * f(j - m) * f(j1 - m1) * f(j1 + m1) * f(j2 - m2) * f(j2 + m2)
    kmin = max(0, j2 - j - m1, j1 + m2 - j)
    kmax = min(j1 + j2 - j, j1 - m1, j2 + m2)
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            f(k)
            * f(j1 + j2 - j - k)
            * f(j1 - m1 - k)
            * f(j2 + m2 - k)
            * f(j - j2 + m1 + k)
            * f(j - j1 - m2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    if total == 0:
        return SignedSqrtRational.zero()
    sign = 1 if total > 0 else -1
    return SignedSqrtRational(sign, total * total * pref)


def cg_parity_zero(l1: int, l2: int, l: int) -> bool:
    """True iff <l1 0 l2 0 | l 0> = 0 is guaranteed by parity or the triangle rule."""
    return (l1 + l2 + l) % 2 == 1 or l < abs(l1 - l2) or l > l1 + l2


def sh_product_expand(a: HarmonicIndex, b: HarmonicIndex) -> ProductExpansion:
    """Expand the product of two spherical harmonics over the harmonic basis.

    Y_{l1 m1} Y_{l2 m2} = sum_l sqrt((2l1+1)(2l2+1) / (4 pi (2l+1)))
                          <l1 0 l2 0|l 0> <l1 m1 l2 m2|l m> Y_{l m}

    with m = m1 + m2 and l running over |l1-l2| .. l1+l2.  Parity-forbidden
    degrees (odd l1+l2+l) are omitted.  Coefficients are assembled exactly
    and converted to float only at the last step (one division by the
    irrational sqrt(4 pi)).
    """
    m = a.m + b.m
    root_4pi = math.sqrt(4.0 * math.pi)
    out = []
    for l in range(abs(a.l - b.l), a.l + b.l + 1):
        if cg_parity_zero(a.l, b.l, l) or abs(m) > l:
            continue
        exact = (
            clebsch_gordan(a.l, 0, b.l, 0, l, 0)
            * clebsch_gordan(a.l, a.m, b.l, b.m, l, m)
            * SignedSqrtRational.from_sqrt(Fraction((2 * a.l + 1) * (2 * b.l + 1), 2 * l + 1))
        )
        if exact.is_zero():
            continue
        out.append((l, float(exact) / root_4pi))
    return ProductExpansion(m, tuple(out))
