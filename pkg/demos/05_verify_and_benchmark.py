"""Cross-verify the closed forms against quadrature and time the routes.

The package's selling point is replacing per-integral numerical quadrature
with closed forms that evaluate faster and exactly share structural zeros.
This script runs the built-in verification sweep, then times full-matrix
assembly under each evaluation route.
"""

import time

from shbraket import Method, TrigTerm, coupling_matrix
from shbraket.cli import run_verification

# Every query in the range is evaluated by both closed forms and by the
# quadrature oracle; the report shows the worst pairwise deviations.
lines, ok = run_verification(l_max=4, n_max=4, k_max=2, tolerance=1e-10)
for line in lines:
    print(line)
print("verification:", "PASSED" if ok else "FAILED")

# Timing: assemble the same coupling matrix by each route.  The closed forms
# share cached Clebsch-Gordan values across entries, so they pull ahead as
# soon as many integrals are needed; the second run shows the warm-cache
# behaviour typical of production sweeps over operators or radii.
op = TrigTerm("cos", 2, 0)
for L in (6, 10):
    print(f"\nfull ({L+1}^2)x({L+1}^2) matrix of cos(2 theta):")
    for method in Method:
        times = []
        for _ in range(2):
            start = time.perf_counter()
            coupling_matrix(op, L, method)
            times.append(time.perf_counter() - start)
        label = ", ".join(f"{t * 1e3:.1f} ms" for t in times)
        print(f"  {method.value:10s} {label}")
