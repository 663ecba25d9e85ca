"""Coupling matrices for equatorial matter profiles mu_r^2 sin^{2q} t + mu_0^2.

A scalar field acquiring an effective mass from matter concentrated around
the equatorial plane sees an angular profile sin^{2q}(theta): the larger q,
the thinner the distribution.  Its harmonic decomposition is exact, because
sin^{2q} reduces to finitely many cos(2j theta) terms, so the coupling
matrix is an exact linear combination of single-operator matrices.
"""

import numpy as np

from shbraket import (
    EffectiveMassProfile,
    basis_iter,
    effective_mass_coupling,
    sin_power_expand,
)

# The exact trig series of sin^{2q}; all coefficients are dyadic rationals.
for q in (1, 2, 3):
    series = sin_power_expand(q)
    pretty = " + ".join(f"{c:+.6g} cos({n} t)" if n else f"{c:+.6g}"
                        for (kind, n, k), c in series.items())
    print(f"sin^{2*q}(t) = {pretty}")

# One matrix per radius: pass the local scalar values of mu_r^2 and mu_0^2.
L = 6
profile = EffectiveMassProfile(q=2, mu_r_sq=1.0, mu_0_sq=0.25)
matrix = effective_mass_coupling(profile, L)
print(f"\nq = {profile.q}, L = {L}: matrix is {matrix.entries.shape[0]}x{matrix.entries.shape[1]}")
print("symmetric:", np.allclose(matrix.entries, matrix.entries.T, atol=1e-14))

# The profile is axisymmetric, so the matrix is block diagonal in m and
# banded in l with half-bandwidth 2q.
max_coupling = max(abs(l1 - l2)
                   for l1, m1 in basis_iter(L)
                   for l2, m2 in basis_iter(L)
                   if matrix.value(l1, m1, l2, m2) != 0.0)
print(f"l-bandwidth: couplings reach |l1 - l2| = {max_coupling} (expected {2 * profile.q})")

print("\nm = 0 block diagonal and first off-diagonals:")
for l1 in range(L + 1):
    diag = matrix.value(l1, 0, l1, 0)
    off = matrix.value(l1, 0, l1 + 2, 0) if l1 + 2 <= L else float("nan")
    print(f"  l = {l1}: <l|mu_eff^2|l> = {diag:+.9f}   <l|mu_eff^2|l+2> = {off:+.9f}")

# Thinner disks (larger q) push the diagonal weight away from the poles:
print("\nmonopole expectation <0,0|sin^{2q}|0,0> as the profile thins:")
for q in range(1, 7):
    m = effective_mass_coupling(EffectiveMassProfile(q, 1.0, 0.0), 0)
    print(f"  q = {q}: {m.value(0, 0, 0, 0):.9f}")
