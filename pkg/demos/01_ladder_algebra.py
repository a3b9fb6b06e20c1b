"""
Ladder operators on an exact function family
============================================

Every function here has the form ``P(p) (1 + beta p^2)^(-s/2)`` and is stored
as a coefficient array plus the exponent ``s``. The first-order operators
``A(g)`` and ``Abar(g)`` map this family to itself, so operator identities can
be checked coefficient by coefficient instead of on a grid.
"""

# %%
# A ground profile is annihilated by A(G).
import numpy as np

from gupsu2 import AlgebraicFunction, apply_A, apply_Abar, apply_H, ground_profile

beta = 1.0
psi = ground_profile(2.0, beta)
print("ground profile:", psi)
print("A(2) psi is zero:", apply_A(2.0, psi).is_zero)

# %%
# Lowering once with Abar gives an odd state. It is an eigenfunction of H(1)
# with eigenvalue 3 beta.
lowered = apply_Abar(1.0, psi)
print("Abar(1) psi:", lowered)
print("H(1) f - 3 beta f:", (apply_H(1.0, lowered) - 3.0 * beta * lowered).coeffs)

# %%
# Shape invariance: the partner of H(g) is H(g+1) shifted by (2g+1) beta.
# Try it on a random member of the family.
from gupsu2.algebra import apply_Htilde

rng = np.random.default_rng(7)
f = AlgebraicFunction(rng.normal(size=6), s=1.3, beta=0.25)
for g in (-1.5, 0.4, 2.0):
    diff = apply_Htilde(g, f) - apply_H(g + 1.0, f) - (2 * g + 1) * f.beta * f
    print(f"g={g:+.1f}  max |coeff| of the difference = {diff.magnitude:.2e}")

# %%
# Promote g to a weight label. States are maps g -> function, J+ raises the
# weight with A and J- lowers it with Abar. The commutator closes on
# 2 beta (J_z - 1/2).
from gupsu2.algebra import ModeState, commutator_residuals

state = ModeState({0.5: f, 1.5: 2.0 * f})
print("commutator residuals:", commutator_residuals(state))
