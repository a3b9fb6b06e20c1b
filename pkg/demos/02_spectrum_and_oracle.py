"""
Closed-form levels against a finite-difference oracle
=====================================================

The levels of ``H(g)`` are ``(n^2 + 2 n g) beta``. To test that claim
independently, the change of variable ``u = arctan(sqrt(beta) p)/sqrt(beta)``
turns ``H(g)`` into a trigonometric Poschl-Teller problem on a finite
interval, which is discretized with central differences and solved by
Sturm-sequence bisection.
"""

# %%
import numpy as np

from gupsu2 import closed_form_spectrum, oracle_spectrum
from gupsu2.oracle import box_eigenvalues, lowest_eigenvalues, relative_errors, to_sturm

g, beta = 1.5, 0.5
exact = closed_form_spectrum(g, beta, 4)
approx = oracle_spectrum(g, beta, N=4096, k=5)

print(" n   closed form        oracle      rel. error")
for (n, e), (_, o), r in zip(exact.lines, approx.lines, relative_errors(approx)):
    print(f"{n:2d}  {e:12.6f}  {o:14.9f}  {r:10.2e}")

# %%
# At g = 1 the potential is constant, and the matrix is a shifted discrete
# Laplacian with known eigenvalues. The bisection reproduces them to a few ulps.
T = to_sturm(1.0, beta, 4096)
diff = lowest_eigenvalues(T, 5) - box_eigenvalues(beta, 4096, 5)
print("g=1 deviation from the box formula:", np.abs(diff).max())

# %%
# Halving h cuts the error by four.
for N in (512, 1024, 2048):
    err = relative_errors(oracle_spectrum(2.0, 1.0, N, 3))
    print(f"N={N:5d}  errors {err}")
