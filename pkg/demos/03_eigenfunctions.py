"""
Normalized eigenfunctions and the weighted inner product
========================================================

The natural measure is ``dp / (1 + beta p^2)``. On the function family every
inner product reduces to Beta-function moments, so Gram matrices are exact
up to rounding.
"""

# %%
import numpy as np

from gupsu2 import eigenfunction, inner_product
from gupsu2.eigenfunctions import gegenbauer_match, normalization_report

g, beta = 2.3, 1.0
states = [eigenfunction(n, g, beta) for n in range(6)]
gram = np.array([[inner_product(a, b) for b in states] for a in states])
print("max |Gram - I| =", np.abs(gram - np.eye(6)).max())

# %%
# The same states are Gegenbauer polynomials in xi = sqrt(beta) p / sqrt(1 + beta p^2)
# times the ground-state factor.
samples = np.array([-3.1, -1.2, -0.4, 0.35, 0.9, 2.7])
for n in range(6):
    print(f"n={n}  proportionality defect {gegenbauer_match(n, g, beta, samples):.1e}")

# %%
# The ground-state constant is fixed by demanding unit norm. A commonly
# quoted closed form with Gamma((G+2)/2)/Gamma((G+1)/2) does not give unit
# norm; the report shows both.
for key, value in normalization_report(1.0, 1.0).items():
    print(f"{key:32s} {value}")
