"""
Minimal-length harmonic and Dirac oscillators
=============================================

Both models reduce to ``H(g)`` in momentum space with a model-dependent
``g``. Energies then follow from the algebraic levels.
"""

# %%
from gupsu2 import DiracGUP, HarmonicGUP, dirac_energy, harmonic_energy, minimal_length
from gupsu2.models import dirac_g, dirac_spinor, harmonic_energy_algebraic, harmonic_g

osc = HarmonicGUP(m=1.0, omega=1.0, hbar=1.0, beta=0.2)
print("harmonic g =", harmonic_g(osc))
for n in range(5):
    print(f"n={n}  E={harmonic_energy(n, osc):.12f}  via su(2) levels {harmonic_energy_algebraic(n, osc):.12f}")

# %%
# The minimal length: Delta x never drops below hbar sqrt(beta).
dx, dp = minimal_length(beta=osc.beta, hbar=osc.hbar)
print(f"dx_min = {dx:.6f} reached at dp = {dp:.6f}")

# %%
# Dirac oscillator with m hbar omega beta = 1/2, so g = 2. Spinors are
# normalized jointly; the lower component shrinks in the nonrelativistic regime.
dirac = DiracGUP(m=1.0, omega=1.0, hbar=1.0, c=10.0, beta=0.5)
print("dirac g =", dirac_g(dirac))
for n in range(4):
    sp = dirac_spinor(n, dirac)
    print(
        f"n={n}  E+={dirac_energy(n, dirac):.10f}  E-={dirac_energy(n, dirac, -1):.10f}  "
        f"norm={sp.norm_sq():.12f}"
    )
