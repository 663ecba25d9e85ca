import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.special import lpmv

from shbraket.legendre_integrals import (
    chebyshev_in_legendre,
    chebyshev_integral,
    i0,
    legendre_in_chebyshev,
    legendre_pair_integral,
    sin_in_assoc_legendre,
    trig_projection,
)
from shbraket.special_functions import assoc_legendre_p, chebyshev_t, legendre_p

RNG = np.random.default_rng(11)

# shared Gauss-Legendre rule for the quadrature oracles (scipy lpmv supplies
# an independent associated-Legendre implementation); the substitution
# x = cos(t) keeps the odd-order sqrt(1-x^2) factors analytic in t
_X, _W = np.polynomial.legendre.leggauss(400)
_T = 0.5 * math.pi * (_X + 1.0)
_WT = 0.5 * math.pi * _W * np.sin(_T)
_CT = np.cos(_T)


def quad_i0(l, m):
    """(value, scale): the integral of P_l^m and the integral of its magnitude."""
    vals = lpmv(m, l, _CT)
    return float(np.dot(_WT, vals)), float(np.dot(_WT, np.abs(vals)))


def quad_pair(l, m, lp, mp):
    vals = lpmv(m, l, _CT) * lpmv(mp, lp, _CT)
    return float(np.dot(_WT, vals)), float(np.dot(_WT, np.abs(vals)))


# ---------------------------------------------------------------------------
# i0


def test_i0_constant():
    assert i0(0, 0) == 2.0


def test_i0_first_assoc():
    # quadrature oracle: integral of -sqrt(1-x^2) over [-1,1] is -pi/2
    assert quad_i0(1, 1)[0] == pytest.approx(-math.pi / 2, abs=1e-12)
    assert i0(1, 1) == pytest.approx(-math.pi / 2, abs=1e-14)


def test_i0_odd_parity_vanishes():
    assert i0(2, 1) == 0.0
    assert quad_i0(2, 1)[0] == pytest.approx(0.0, abs=1e-14)


def test_i0_out_of_range_order():
    assert i0(1, 2) == 0.0
    assert i0(0, -1) == 0.0


def test_i0_matches_quadrature():
    # unnormalized P_l^m reach ~1e8 by l = 10, so the 1e-11 tolerance is
    # taken relative to the size of the integrand
    for l in range(11):
        for m in range(-l, l + 1):
            ref, scale = quad_i0(l, m)
            assert abs(i0(l, m) - ref) <= 1e-11 * max(1.0, scale), (l, m)


# ---------------------------------------------------------------------------
# pair integral


def test_pair_integral_orthogonality():
    for l in range(9):
        assert legendre_pair_integral(l, 0, l, 0) == pytest.approx(2 / (2 * l + 1), abs=1e-13)
    assert legendre_pair_integral(2, 0, 4, 0) == 0.0


def test_pair_integral_known_value():
    # integral of (1 - x^2) over [-1, 1] = 4/3
    assert legendre_pair_integral(1, 1, 1, 1) == pytest.approx(4.0 / 3.0, abs=1e-14)


def test_pair_integral_guards():
    assert legendre_pair_integral(0, 1, 2, 0) == 0.0
    assert legendre_pair_integral(2, 0, 1, -2) == 0.0


def test_pair_integral_symmetry():
    cases = [(3, 2, 5, -1), (4, -3, 2, 1), (6, 0, 6, 2), (1, 1, 2, -2)]
    for l, m, lp, mp in cases:
        a = legendre_pair_integral(l, m, lp, mp)
        b = legendre_pair_integral(lp, mp, l, m)
        assert a == pytest.approx(b, abs=1e-13)


def test_pair_integral_matches_quadrature_full_range():
    for l in range(9):
        for lp in range(9):
            for m in range(-l, l + 1):
                for mp in range(-lp, lp + 1):
                    got = legendre_pair_integral(l, m, lp, mp)
                    ref, scale = quad_pair(l, m, lp, mp)
                    assert abs(got - ref) <= 1e-11 * max(1.0, scale), (l, m, lp, mp)


# ---------------------------------------------------------------------------
# chebyshev integral


def test_chebyshev_integral_values():
    assert chebyshev_integral(0) == 2
    assert chebyshev_integral(1) == 0
    # integral of 2x^2 - 1 over [-1, 1] = -2/3
    assert chebyshev_integral(2) == Fraction(-2, 3)


def test_chebyshev_integral_matches_quadrature():
    for n in range(13):
        ref = float(np.dot(_W, chebyshev_t(n, _X)))
        assert float(chebyshev_integral(n)) == pytest.approx(ref, abs=1e-13)
    with pytest.raises(ValueError):
        chebyshev_integral(-1)


# ---------------------------------------------------------------------------
# basis-change expansions


def test_chebyshev_in_legendre_low_orders():
    assert chebyshev_in_legendre(1).terms == ((1, Fraction(1)),)
    # exact polynomial algebra: T_2 = (4/3) P_2 - (1/3) P_0
    assert chebyshev_in_legendre(2).terms == ((0, Fraction(-1, 3)), (2, Fraction(4, 3)))


def test_chebyshev_in_legendre_pointwise():
    xs = RNG.uniform(-1, 1, 50)
    for n in range(13):
        exp = chebyshev_in_legendre(n)
        for x in xs:
            assert exp.evaluate(legendre_p, x) == pytest.approx(chebyshev_t(n, x), abs=1e-12)


def test_sin_in_assoc_legendre_low_orders():
    # sin t = -P_1^1(cos t) under the Condon-Shortley convention
    assert sin_in_assoc_legendre(1).terms == ((1, Fraction(-1)),)
    assert 0 not in sin_in_assoc_legendre(2).indices()  # P_0^1 does not exist


def test_sin_in_assoc_legendre_pointwise():
    thetas = RNG.uniform(0.0, math.pi, 50)
    for n in range(1, 9):
        exp = sin_in_assoc_legendre(n)
        for t in thetas:
            got = exp.evaluate(lambda l, x: assoc_legendre_p(l, 1, x), math.cos(t))
            assert got == pytest.approx(math.sin(n * t), abs=1e-12)


def test_legendre_in_chebyshev_low_orders():
    assert legendre_in_chebyshev(0).terms == ((0, Fraction(1)),)
    # exact polynomial algebra: P_2 = (3 T_2 + T_0)/4
    assert legendre_in_chebyshev(2).terms == ((0, Fraction(1, 4)), (2, Fraction(3, 4)))


def test_legendre_in_chebyshev_pointwise():
    xs = RNG.uniform(-1, 1, 30)
    for l in range(13):
        exp = legendre_in_chebyshev(l)
        for x in xs:
            assert exp.evaluate(chebyshev_t, x) == pytest.approx(legendre_p(l, x), abs=1e-12)


def test_basis_changes_compose_to_identity():
    # expanding P_l over T and each T back over P must return exactly P_l
    for l in range(13):
        acc: dict[int, Fraction] = {}
        for idx, a in legendre_in_chebyshev(l).terms:
            for i, c in chebyshev_in_legendre(idx).terms:
                acc[i] = acc.get(i, Fraction(0)) + a * c
        for i, c in acc.items():
            assert c == (Fraction(1) if i == l else Fraction(0)), (l, i)


# ---------------------------------------------------------------------------
# trig projection


def test_trig_projection_values():
    # direct polynomial integral of (2x^2-1)(3x^2-1)/2 over [-1,1] = 8/15
    assert trig_projection(2, 2) == Fraction(8, 15)
    assert trig_projection(1, 2) == Fraction(0)  # odd n + l
    assert trig_projection(0, 0) == Fraction(2)


def test_trig_projection_parity():
    for n in range(13):
        for l in range(13):
            if (n + l) % 2:
                assert trig_projection(n, l) == 0


def test_trig_projection_matches_quadrature():
    theta = 0.5 * math.pi * (_X + 1.0)
    wt = 0.5 * math.pi * _W
    for n in range(9):
        for l in range(9):
            ref = float(np.dot(wt, np.sin(theta) * np.cos(n * theta) * legendre_p(l, np.cos(theta))))
            assert float(trig_projection(n, l)) == pytest.approx(ref, abs=1e-12), (n, l)


def test_trig_projection_agrees_with_gamma_route_exactly():
    # (l + 1/2) I_{n,l} must equal the cosine-series coefficient of P_l
    for n in range(1, 13):
        exp = chebyshev_in_legendre(n)
        for j in range(n // 2 + 1):
            l = n - 2 * j
            assert Fraction(2 * l + 1, 2) * trig_projection(n, l) == exp.coeff(l), (n, l)
