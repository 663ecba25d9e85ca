"""Evaluate single bra-ket integrals of trigonometric operators.

Every overlap <l1 m1| e^{i k phi} trig(n theta) |l2 m2> is available through
three routes: two independent closed forms ("main" and "variant") and a
brute-force quadrature oracle.  This script walks through a few instructive
values and the selection rules that make most overlaps vanish exactly.
"""

import math

from shbraket import BraKetQuery, HarmonicIndex, Method, TrigTerm, overlap

def q(l1, m1, kind, n, k, l2, m2):
    return BraKetQuery(HarmonicIndex(l1, m1), TrigTerm(kind, n, k), HarmonicIndex(l2, m2))

# The identity operator (cos with n = 0, k = 0) just tests orthonormality.
print("orthonormality:")
print("  <2,1|1|2,1> =", overlap(q(2, 1, "cos", 0, 0, 2, 1)))
print("  <2,1|1|2,0> =", overlap(q(2, 1, "cos", 0, 0, 2, 0)))

# cos(theta) ladders between neighbouring degrees; the classic value is
# <1,0|cos t|0,0> = 1/sqrt(3).
value = overlap(q(1, 0, "cos", 1, 0, 0, 0))
print("\ncos(theta) ladder:")
print(f"  <1,0|cos t|0,0> = {value:.15f}   (1/sqrt(3) = {1/math.sqrt(3):.15f})")

# All three routes agree to the last digits.
print("\nthree evaluation routes on <2,1|e^{i phi} cos(2t)|1,0>:")
for method in Method:
    print(f"  {method.value:10s} {overlap(q(2, 1, 'cos', 2, 1, 1, 0), method):+.17f}")

# Selection rules produce exact zeros before any series work:
#   azimuthal:  m1 = m2 + k, otherwise the phi integral kills the overlap;
#   parity:     cos needs l1+l2+n+k even, sin needs it odd.
print("\nhard zeros:")
print("  azimuthal <2,1|cos t|2,1> (k=0, m1=m2 ok, parity odd) =",
      overlap(q(2, 1, "cos", 1, 0, 2, 1)))
print("  azimuthal <2,1|e^{2i phi} cos t|2,1> (m1 != m2+k)      =",
      overlap(q(2, 1, "cos", 1, 2, 2, 1)))

# A warning for anyone tempted by a parity shortcut on axisymmetric sine
# overlaps: they do NOT vanish identically.  The simplest counterexample is
# the monopole expectation of sin(theta).
probe = overlap(q(0, 0, "sin", 1, 0, 0, 0))
print("\naxisymmetric sine probe:")
print(f"  <0,0|sin t|0,0> = {probe:.15f}   (pi/4 = {math.pi/4:.15f})")
print("  k=0 sine overlaps vanish only when l1 + l2 + n is even.")
